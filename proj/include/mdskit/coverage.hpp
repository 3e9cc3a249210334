#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdskit {

// Exact occurrence counter over all t-subsets of [0,v), t in {2,3}.
// Subsets are ranked in the combinatorial number system (colex):
//   rank(a<b<c) = C(a,1) + C(b,2) + C(c,3).
// Counters are byte-wide (saturating at 255) or, when C(v,t) is too
// large for that, 2-bit packed saturating at 3 — every verifier in this
// library only needs to distinguish 0 / 1 / more-than-1.
class CoverageMap {
public:
    CoverageMap(int v, int t) : v_(v), t_(t) {
        if (t != 2 && t != 3) throw std::invalid_argument("CoverageMap: t must be 2 or 3");
        if (v < t) throw std::invalid_argument("CoverageMap: v < t");
        space_ = t == 2 ? binom2(v) : binom3(v);
        packed_ = space_ > (uint64_t(1) << 28);
        if (packed_)
            bits_.assign(size_t((space_ + 31) / 32), 0);
        else
            bytes_.assign(size_t(space_), 0);
    }

    static uint64_t binom2(uint64_t n) { return n * (n - 1) / 2; }
    static uint64_t binom3(uint64_t n) { return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3; }

    uint64_t rank(std::span<const int> pts) const {
        std::array<int, 3> s{};
        std::copy(pts.begin(), pts.end(), s.begin());
        std::sort(s.begin(), s.begin() + t_);
        if (s[0] < 0 || s[t_ - 1] >= v_ || (t_ >= 2 && s[0] == s[1]) ||
            (t_ == 3 && s[1] == s[2]))
            throw std::invalid_argument("CoverageMap: bad subset");
        uint64_t r = uint64_t(s[0]);
        r += binom2(uint64_t(s[1]));
        if (t_ == 3) r += binom3(uint64_t(s[2]));
        return r;
    }

    void add_subset(std::span<const int> pts) { bump(rank(pts)); }

    // add all t-subsets of a block
    void add_block(std::span<const int> block) {
        const int n = int(block.size());
        if (t_ == 2) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int s[2] = {block[i], block[j]};
                    add_subset(s);
                }
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k) {
                        int s[3] = {block[i], block[j], block[k]};
                        add_subset(s);
                    }
        }
    }

    uint32_t count(std::span<const int> pts) const { return at(rank(pts)); }
    uint32_t at(uint64_t r) const {
        if (packed_) return uint32_t((bits_[size_t(r / 32)] >> ((r % 32) * 2)) & 3);
        return bytes_[size_t(r)];
    }

    uint32_t cap() const { return packed_ ? 3 : 255; }
    uint64_t total() const { return total_; }
    uint64_t space() const { return space_; }
    int v() const { return v_; }
    int t() const { return t_; }

    // visit all subsets in colex order; fn(ids, count)
    template <class Fn> void for_each(Fn&& fn) const {
        uint64_t r = 0;
        int ids[3];
        if (t_ == 2) {
            for (int b = 1; b < v_; ++b)
                for (int a = 0; a < b; ++a) {
                    ids[0] = a; ids[1] = b;
                    fn(std::span<const int>(ids, 2), at(r++));
                }
        } else {
            for (int c = 2; c < v_; ++c)
                for (int b = 1; b < c; ++b)
                    for (int a = 0; a < b; ++a) {
                        ids[0] = a; ids[1] = b; ids[2] = c;
                        fn(std::span<const int>(ids, 3), at(r++));
                    }
        }
    }

private:
    void bump(uint64_t r) {
        ++total_;
        if (packed_) {
            uint64_t sh = (r % 32) * 2;
            uint64_t cur = (bits_[size_t(r / 32)] >> sh) & 3;
            if (cur < 3) bits_[size_t(r / 32)] += uint64_t(1) << sh;
        } else if (bytes_[size_t(r)] < 255) {
            ++bytes_[size_t(r)];
        }
    }

    int v_, t_;
    uint64_t space_ = 0;
    bool packed_ = false;
    std::vector<uint8_t> bytes_;
    std::vector<uint64_t> bits_;
    uint64_t total_ = 0;
};

struct AuditResult {
    uint64_t space = 0;      // C(v,t)
    uint64_t total = 0;      // sum over blocks of C(|b|,t)
    uint32_t min_count = 0;
    uint32_t max_count = 0;
    std::vector<uint64_t> histogram;              // index = coverage count (saturating)
    std::vector<std::array<int, 3>> zero_samples; // up to 8 uncovered subsets
    std::vector<std::array<int, 3>> multi_samples;
};

// Exact coverage histogram of a block list over all t-subsets.
inline AuditResult audit(const std::vector<std::vector<int>>& blocks, int v, int t) {
    CoverageMap cm(v, t);
    for (const auto& b : blocks) {
        for (int id : b)
            if (id < 0 || id >= v) throw std::invalid_argument("audit: point out of range");
        cm.add_block(b);
    }
    AuditResult res;
    res.space = cm.space();
    res.total = cm.total();
    res.histogram.assign(cm.cap() + 1, 0);
    res.min_count = cm.cap();
    res.max_count = 0;
    cm.for_each([&](std::span<const int> ids, uint32_t cnt) {
        ++res.histogram[cnt];
        res.min_count = std::min(res.min_count, cnt);
        res.max_count = std::max(res.max_count, cnt);
        if (cnt == 0 && res.zero_samples.size() < 8)
            res.zero_samples.push_back({ids[0], ids[1], ids.size() > 2 ? ids[2] : -1});
        if (cnt > 1 && res.multi_samples.size() < 8)
            res.multi_samples.push_back({ids[0], ids[1], ids.size() > 2 ? ids[2] : -1});
    });
    return res;
}

} // namespace mdskit

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace mdskit {

// Minimal arbitrary-precision unsigned integer: just what the bound
// calculator needs (small-word multiply, right shift, decimal output).
struct BigUint {
    std::vector<uint64_t> limbs; // little-endian base 2^64; empty means 0

    BigUint() = default;
    explicit BigUint(uint64_t v) {
        if (v) limbs.push_back(v);
    }

    bool is_zero() const { return limbs.empty(); }

    void trim() {
        while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    }

    void mul_u64(uint64_t f) {
        if (f == 0) { limbs.clear(); return; }
        unsigned __int128 carry = 0;
        for (auto& l : limbs) {
            unsigned __int128 cur = (unsigned __int128)l * f + carry;
            l = (uint64_t)cur;
            carry = cur >> 64;
        }
        if (carry) limbs.push_back((uint64_t)carry);
    }

    void mul_pow(uint64_t base, int64_t e) {
        for (int64_t i = 0; i < e; ++i) mul_u64(base);
    }

    void shr(unsigned bits) {
        unsigned words = bits / 64, rem = bits % 64;
        if (words >= limbs.size()) { limbs.clear(); return; }
        limbs.erase(limbs.begin(), limbs.begin() + words);
        if (rem) {
            for (size_t i = 0; i < limbs.size(); ++i) {
                limbs[i] >>= rem;
                if (i + 1 < limbs.size()) limbs[i] |= limbs[i + 1] << (64 - rem);
            }
        }
        trim();
    }

    // divide in place by a small divisor, returning the remainder
    uint64_t divmod_u64(uint64_t div) {
        unsigned __int128 rem = 0;
        for (size_t i = limbs.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs[i];
            limbs[i] = (uint64_t)(cur / div);
            rem = cur % div;
        }
        trim();
        return (uint64_t)rem;
    }

    double to_double() const {
        double r = 0;
        for (size_t i = limbs.size(); i-- > 0;) r = r * 18446744073709551616.0 + double(limbs[i]);
        return r;
    }

    // natural log, stable for values far beyond double range
    double ln() const {
        if (is_zero()) return -HUGE_VAL;
        size_t top = limbs.size() - 1;
        double hi = double(limbs[top]);
        if (top > 0) hi += double(limbs[top - 1]) / 18446744073709551616.0;
        return std::log(hi) + double(top) * 64.0 * std::log(2.0);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigUint tmp = *this;
        std::string out;
        while (!tmp.is_zero()) {
            uint64_t chunk = tmp.divmod_u64(10000000000000000000ull); // 10^19
            std::string part = std::to_string(chunk);
            if (!tmp.is_zero()) part.insert(0, 19 - part.size(), '0');
            out.insert(0, part);
        }
        return out;
    }

    bool operator==(const BigUint& o) const { return limbs == o.limbs; }
};

} // namespace mdskit

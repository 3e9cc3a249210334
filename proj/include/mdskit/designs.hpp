#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverage.hpp"
#include "latin.hpp"
#include "mds.hpp"

namespace mdskit {

// H(d,q,w,t): d groups of q points (point id / q = group), blocks are
// w-element transverses, every t-element transverse in exactly one.
struct HDesign {
    int d = 0, q = 0, w = 0, t = 0;
    std::vector<int> blocks; // flat, stride w, ids sorted within a block
};

inline HDesign code_to_hdesign(const Code& c) {
    HDesign h{c.d, c.q, c.d, c.m(), {}};
    h.blocks.reserve(c.size() * c.d);
    for (size_t i = 0; i < c.size(); ++i) {
        auto w = c.word(i);
        for (int j = 0; j < c.d; ++j) h.blocks.push_back(j * c.q + w[j]);
    }
    return h;
}

inline Report verify_hdesign(const HDesign& h) {
    const int pts = h.d * h.q;
    if (h.w < h.t || h.t < 2 || h.t > 3)
        return Report::fail("kind=malformed w=" + std::to_string(h.w) +
                            " t=" + std::to_string(h.t));
    if (h.blocks.size() % h.w) return Report::fail("kind=ragged_blocks");
    CoverageMap cm(pts, h.t);
    for (size_t b = 0; b + h.w <= h.blocks.size(); b += h.w) {
        std::vector<char> grp(h.d, 0);
        for (int i = 0; i < h.w; ++i) {
            int id = h.blocks[b + i];
            if (id < 0 || id >= pts) return Report::fail("kind=point_range id=" + std::to_string(id));
            if (grp[id / h.q])
                return Report::fail("kind=non_transverse_block block=" + std::to_string(b / h.w));
            grp[id / h.q] = 1;
        }
        cm.add_block(std::span<const int>(h.blocks.data() + b, size_t(h.w)));
    }
    Report out = Report::pass();
    cm.for_each([&](std::span<const int> ids, uint32_t cnt) {
        if (!out.ok) return;
        bool transverse = true;
        for (size_t i = 0; i < ids.size() && transverse; ++i)
            for (size_t j = i + 1; j < ids.size(); ++j)
                transverse = transverse && ids[i] / h.q != ids[j] / h.q;
        uint32_t want = transverse ? 1 : 0;
        if (cnt != want)
            out = Report::fail("kind=coverage ids=" + std::to_string(ids[0]) + ";" +
                               std::to_string(ids[1]) +
                               (ids.size() > 2 ? ";" + std::to_string(ids[2]) : "") +
                               " count=" + std::to_string(cnt) + " want=" + std::to_string(want));
    });
    return out;
}

// 3-wise bipartite balanced design on n points split into two equal
// groups; blocks take two points from each group and every 3-subset
// meeting both groups lies in exactly one block.
struct BBD {
    int n = 0;
    std::vector<int> g1, g2;
    std::vector<int> blocks; // flat, stride 4, ids sorted within a block

    size_t block_count() const { return blocks.size() / 4; }
};

inline Report verify_bbd(const BBD& b) {
    if (b.n < 2 || b.n % 2) return Report::fail("kind=odd_points");
    const int half = b.n / 2;
    if (int(b.g1.size()) != half || int(b.g2.size()) != half)
        return Report::fail("kind=group_sizes");
    std::vector<int> side(b.n, -1);
    for (int id : b.g1) {
        if (id < 0 || id >= b.n || side[id] != -1) return Report::fail("kind=group_overlap");
        side[id] = 0;
    }
    for (int id : b.g2) {
        if (id < 0 || id >= b.n || side[id] != -1) return Report::fail("kind=group_overlap");
        side[id] = 1;
    }
    if (b.blocks.size() % 4) return Report::fail("kind=ragged_blocks");
    uint64_t want_blocks = uint64_t(half) * half * (half - 1) / 4;
    if (b.block_count() != want_blocks)
        return Report::fail("kind=block_count have=" + std::to_string(b.block_count()) +
                            " want=" + std::to_string(want_blocks));
    CoverageMap cm(b.n, 3);
    for (size_t i = 0; i < b.blocks.size(); i += 4) {
        int in1 = 0, in2 = 0;
        for (int j = 0; j < 4; ++j) {
            int id = b.blocks[i + j];
            if (id < 0 || id >= b.n) return Report::fail("kind=point_range");
            for (int j2 = j + 1; j2 < 4; ++j2)
                if (b.blocks[i + j2] == id)
                    return Report::fail("kind=repeated_point block=" + std::to_string(i / 4));
            (side[id] == 0 ? in1 : in2)++;
        }
        if (in1 != 2 || in2 != 2)
            return Report::fail("kind=block_shape block=" + std::to_string(i / 4));
        cm.add_block(std::span<const int>(b.blocks.data() + i, 4));
    }
    Report out = Report::pass();
    cm.for_each([&](std::span<const int> ids, uint32_t cnt) {
        if (!out.ok) return;
        int s = side[ids[0]] + side[ids[1]] + side[ids[2]];
        uint32_t want = (s == 0 || s == 3) ? 0 : 1; // mixed triples only
        if (cnt != want)
            out = Report::fail("kind=coverage ids=" + std::to_string(ids[0]) + ";" +
                               std::to_string(ids[1]) + ";" + std::to_string(ids[2]) +
                               " count=" + std::to_string(cnt) + " want=" + std::to_string(want));
    });
    return out;
}

// eq-(1) symmetry for a length-4 code: word (x,y,u,v) implies
// (y,x,u,v), (x,y,v,u), (y,x,v,u); and (x,x,u,u) present for all x,u.
inline Report check_eq1(const Code& c) {
    if (c.d != 4) return Report::fail("kind=length d=" + std::to_string(c.d));
    for (size_t i = 0; i < c.size(); ++i) {
        auto w = c.word(i);
        const uint16_t x = w[0], y = w[1], u = w[2], v = w[3];
        const uint16_t perm[3][4] = {{y, x, u, v}, {x, y, v, u}, {y, x, v, u}};
        for (auto& pw : perm)
            if (!c.contains(std::span<const uint16_t>(pw, 4)))
                return Report::fail("kind=symmetry word=" + std::to_string(i));
    }
    for (int x = 0; x < c.q; ++x)
        for (int u = 0; u < c.q; ++u) {
            uint16_t w[4] = {uint16_t(x), uint16_t(x), uint16_t(u), uint16_t(u)};
            if (!c.contains(std::span<const uint16_t>(w, 4)))
                return Report::fail("kind=diagonal x=" + std::to_string(x) +
                                    " u=" + std::to_string(u));
        }
    return Report::pass();
}

// Words with x != y become blocks {x, y, q+u, q+v}; the four symmetric
// words of eq. (1) collapse to one block.
inline BBD code_to_bbd(const Code& c) {
    if (c.q % 2) throw std::invalid_argument("code_to_bbd: order must be even");
    if (Report r = check_eq1(c); !r)
        throw std::invalid_argument("code_to_bbd: eq-(1) violated: " + r.detail);
    const int q = c.q;
    std::vector<std::array<int, 4>> blocks;
    for (size_t i = 0; i < c.size(); ++i) {
        auto w = c.word(i);
        if (w[0] == w[1]) continue;
        std::array<int, 4> blk = {w[0], w[1], q + w[2], q + w[3]};
        std::sort(blk.begin(), blk.end());
        blocks.push_back(blk);
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    BBD b;
    b.n = 2 * q;
    for (int i = 0; i < q; ++i) b.g1.push_back(i);
    for (int i = 0; i < q; ++i) b.g2.push_back(q + i);
    for (auto& blk : blocks) b.blocks.insert(b.blocks.end(), blk.begin(), blk.end());
    return b;
}

inline Code bbd_to_code(const BBD& b) {
    const int q = b.n / 2;
    std::vector<uint16_t> words;
    for (size_t i = 0; i < b.blocks.size(); i += 4) {
        int lo[2], hi[2], nl = 0, nh = 0;
        for (int j = 0; j < 4; ++j) {
            int id = b.blocks[i + j];
            if (id < q) lo[nl++] = id; else hi[nh++] = id - q;
        }
        if (nl != 2 || nh != 2) throw std::invalid_argument("bbd_to_code: block shape");
        for (int sx = 0; sx < 2; ++sx)
            for (int su = 0; su < 2; ++su) {
                words.push_back(uint16_t(lo[sx]));
                words.push_back(uint16_t(lo[1 - sx]));
                words.push_back(uint16_t(hi[su]));
                words.push_back(uint16_t(hi[1 - su]));
            }
    }
    for (int x = 0; x < q; ++x)
        for (int u = 0; u < q; ++u) {
            uint16_t w[4] = {uint16_t(x), uint16_t(x), uint16_t(u), uint16_t(u)};
            words.insert(words.end(), w, w + 4);
        }
    return make_code(4, q, 2, std::move(words));
}

// Build from a symmetric unipotent square: M = {(x,y,u,v) | f(x,y)=f(u,v)}.
// With a subsquare (l >= 2) the four order-l components B_sigma sit on
// the K-products, sigma in {0101, 1001, 0110, 1010} over K0 = [0,l),
// K1 = [q-l,q).
struct BbdBuild {
    int q = 0, l = 0;
    LatinHypercube f;
    Code code;
    BBD bbd;
    std::array<Subcode, 4> components;
    bool has_components = false;
};

inline constexpr std::array<std::array<int, 4>, 4> kBbdSigmas = {
    {{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}}};

inline BbdBuild bbd_build(int q, int l) {
    BbdBuild out;
    out.q = q;
    out.l = l;
    out.f = symmetric_unipotent_ls(q, l);
    // group cells by symbol, pair up equal-symbol cells
    std::vector<std::vector<std::pair<int, int>>> by_sym(q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) by_sym[out.f.at2(x, y)].push_back({x, y});
    std::vector<uint16_t> words;
    words.reserve(size_t(q) * q * q * 4);
    for (int s = 0; s < q; ++s)
        for (auto [x, y] : by_sym[s])
            for (auto [u, v] : by_sym[s]) {
                uint16_t w[4] = {uint16_t(x), uint16_t(y), uint16_t(u), uint16_t(v)};
                words.insert(words.end(), w, w + 4);
            }
    out.code = make_code(4, q, 2, std::move(words));
    out.bbd = code_to_bbd(out.code);
    if (l >= 2) {
        std::vector<uint16_t> K0, K1;
        for (int i = 0; i < l; ++i) K0.push_back(uint16_t(i));
        for (int i = 0; i < l; ++i) K1.push_back(uint16_t(q - l + i));
        for (int si = 0; si < 4; ++si) {
            std::vector<std::vector<uint16_t>> alpha(4);
            for (int j = 0; j < 4; ++j) alpha[j] = kBbdSigmas[si][j] ? K1 : K0;
            out.components[si] = induce_subcode(out.code, std::move(alpha));
            if (out.components[si].size() != size_t(l) * l * l)
                throw std::logic_error("bbd_build: component has wrong order");
            if (Report r = verify_mds(out.components[si].localized(2)); !r)
                throw std::logic_error("bbd_build: component not MDS: " + r.detail);
        }
        out.has_components = true;
    }
    return out;
}

// Latin cube of order l as the local MDS(1,4,l) code {(x,y,u,cube(x,y,u))}.
inline Code mds1_from_cube(const LatinHypercube& cube) {
    if (cube.d0 != 3) throw std::invalid_argument("mds1_from_cube: need a 3-cube");
    const int l = cube.q;
    std::vector<uint16_t> words;
    words.reserve(size_t(l) * l * l * 4);
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y)
            for (int u = 0; u < l; ++u) {
                uint16_t w[4] = {uint16_t(x), uint16_t(y), uint16_t(u),
                                 cube.at({x, y, u})};
                words.insert(words.end(), w, w + 4);
            }
    return make_code(4, l, 2, std::move(words));
}

struct BbdSwitchResult {
    Code code;
    BBD bbd;
};

// Upsilon-orbit switching: replace all four components B_sigma by the
// coordinate permutations C_pi of one replacement code C, pi running
// over {id, (12), (34), (12)(34)}.  C is given over local symbols [0,l)
// and mapped onto the alphabets (K0, K1, K0, K1).
inline BbdSwitchResult bbd_switch(const BbdBuild& b, const Code& c_local) {
    if (!b.has_components)
        throw std::invalid_argument("bbd_switch: build has no components (l < 2)");
    const int l = b.l, q = b.q;
    if (c_local.d != 4 || c_local.q != l || c_local.rho != 2)
        throw std::invalid_argument("bbd_switch: replacement must be an order-l length-4 distance-2 code");
    if (Report r = verify_mds(c_local); !r)
        throw std::invalid_argument("bbd_switch: replacement not MDS: " + r.detail);
    auto to_global = [&](uint16_t sym, int k01) {
        return uint16_t(k01 ? q - l + sym : sym);
    };
    // C_id on (K0,K1,K0,K1); the other members of the orbit permute coords
    static const int perms[4][4] = {{0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}};
    std::vector<uint16_t> insert_words;
    for (int pi = 0; pi < 4; ++pi)
        for (size_t i = 0; i < c_local.size(); ++i) {
            auto w = c_local.word(i);
            uint16_t gw[4];
            for (int j = 0; j < 4; ++j) gw[j] = to_global(w[j], j % 2);
            for (int j = 0; j < 4; ++j) insert_words.push_back(gw[perms[pi][j]]);
        }
    // remove all component words, then add the orbit
    std::vector<uint16_t> words;
    words.reserve(b.code.words.size());
    size_t removed = 0;
    for (size_t i = 0; i < b.code.size(); ++i) {
        auto w = b.code.word(i);
        bool drop = false;
        for (int si = 0; si < 4 && !drop; ++si) {
            const Subcode& sc = b.components[si];
            for (size_t j = 0; j < sc.size() && !drop; ++j)
                drop = std::equal(w.begin(), w.end(), sc.words.begin() + j * 4);
        }
        if (drop) { ++removed; continue; }
        words.insert(words.end(), w.begin(), w.end());
    }
    if (removed != 4 * size_t(l) * l * l)
        throw std::logic_error("bbd_switch: component removal mismatch");
    words.insert(words.end(), insert_words.begin(), insert_words.end());
    BbdSwitchResult res;
    res.code = make_code(4, q, 2, std::move(words));
    if (Report r = check_eq1(res.code); !r)
        throw std::logic_error("bbd_switch: eq-(1) broken: " + r.detail);
    res.bbd = code_to_bbd(res.code);
    return res;
}

} // namespace mdskit

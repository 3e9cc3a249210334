#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverage.hpp"
#include "designs.hpp"
#include "gf.hpp"
#include "latin.hpp"
#include "mds.hpp"

namespace mdskit {

// Steiner quadruple system: 4-element blocks over [0,v), every
// 3-subset in exactly one block.
struct SQS {
    int v = 0;
    std::vector<int> blocks; // flat, stride 4, sorted in-block and as a list

    size_t block_count() const { return blocks.size() / 4; }
};

inline void canonicalize_blocks(std::vector<int>& blocks, int stride) {
    std::vector<std::vector<int>> tmp;
    tmp.reserve(blocks.size() / stride);
    for (size_t i = 0; i + stride <= blocks.size(); i += stride) {
        std::vector<int> b(blocks.begin() + i, blocks.begin() + i + stride);
        std::sort(b.begin(), b.end());
        tmp.push_back(std::move(b));
    }
    std::sort(tmp.begin(), tmp.end());
    blocks.clear();
    for (auto& b : tmp) blocks.insert(blocks.end(), b.begin(), b.end());
}

inline uint64_t sqs_block_target(uint64_t v) { return v * (v - 1) * (v - 2) / 24; }

inline Report verify_sqs(const SQS& s) {
    if (s.v < 4) return Report::fail("kind=order v=" + std::to_string(s.v));
    if (s.v % 6 != 2 && s.v % 6 != 4)
        return Report::fail("kind=inadmissible_order v=" + std::to_string(s.v) +
                            " (v mod 6 must be 2 or 4)");
    if (s.blocks.size() % 4) return Report::fail("kind=ragged_blocks");
    if (s.block_count() != sqs_block_target(s.v))
        return Report::fail("kind=block_count have=" + std::to_string(s.block_count()) +
                            " want=" + std::to_string(sqs_block_target(s.v)));
    CoverageMap cm(s.v, 3);
    for (size_t i = 0; i < s.blocks.size(); i += 4) {
        for (int j = 0; j < 4; ++j) {
            if (s.blocks[i + j] < 0 || s.blocks[i + j] >= s.v)
                return Report::fail("kind=point_range block=" + std::to_string(i / 4));
            for (int j2 = j + 1; j2 < 4; ++j2)
                if (s.blocks[i + j] == s.blocks[i + j2])
                    return Report::fail("kind=repeated_point block=" + std::to_string(i / 4));
        }
        cm.add_block(std::span<const int>(s.blocks.data() + i, 4));
    }
    Report out = Report::pass();
    cm.for_each([&](std::span<const int> ids, uint32_t cnt) {
        if (!out.ok || cnt == 1) return;
        out = Report::fail("kind=coverage ids=" + std::to_string(ids[0]) + ";" +
                           std::to_string(ids[1]) + ";" + std::to_string(ids[2]) +
                           " count=" + std::to_string(cnt));
    });
    return out;
}

// S(3,{4,6},v): same triple-coverage axiom, blocks of size 4 or 6.
struct MixedDesign {
    int v = 0;
    std::vector<std::vector<int>> blocks;
};

inline Report verify_s346(const MixedDesign& m) {
    if (m.v < 4) return Report::fail("kind=order");
    CoverageMap cm(m.v, 3);
    for (size_t bi = 0; bi < m.blocks.size(); ++bi) {
        const auto& b = m.blocks[bi];
        if (b.size() != 4 && b.size() != 6)
            return Report::fail("kind=block_size block=" + std::to_string(bi));
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] < 0 || b[j] >= m.v) return Report::fail("kind=point_range");
            for (size_t j2 = j + 1; j2 < b.size(); ++j2)
                if (b[j] == b[j2])
                    return Report::fail("kind=repeated_point block=" + std::to_string(bi));
        }
        cm.add_block(b);
    }
    Report out = Report::pass();
    cm.for_each([&](std::span<const int> ids, uint32_t cnt) {
        if (!out.ok || cnt == 1) return;
        out = Report::fail("kind=coverage ids=" + std::to_string(ids[0]) + ";" +
                           std::to_string(ids[1]) + ";" + std::to_string(ids[2]) +
                           " count=" + std::to_string(cnt));
    });
    return out;
}

// Points = GF(2)^a, blocks = 4-sets with zero XOR.
inline SQS boolean_sqs(int a) {
    if (a < 3) throw std::invalid_argument("boolean_sqs: a >= 3");
    const int v = 1 << a;
    SQS s;
    s.v = v;
    for (int w = 0; w < v; ++w)
        for (int x = w + 1; x < v; ++x)
            for (int y = x + 1; y < v; ++y) {
                int z = w ^ x ^ y;
                if (z > y) {
                    int blk[4] = {w, x, y, z};
                    s.blocks.insert(s.blocks.end(), blk, blk + 4);
                }
            }
    canonicalize_blocks(s.blocks, 4);
    return s;
}

struct SearchResult {
    bool success = false;
    SQS sqs;
    uint64_t steps = 0;
    uint64_t covered = 0, total = 0;
};

// Seeded hill climbing: repeatedly pick an uncovered triple, extend it
// by a random fourth point, and evict the (at most three) blocks that
// clash with the new one.  Converges quickly for the small orders the
// library needs (v <= ~40); deterministic for a given (v, seed, budget).
inline SearchResult search_sqs(int v, uint64_t seed, uint64_t budget = 2000000) {
    if (v % 6 != 2 && v % 6 != 4)
        throw std::invalid_argument("search_sqs: v mod 6 must be 2 or 4");
    SearchResult res;
    res.total = sqs_block_target(v) * 4; // triples
    std::mt19937_64 rng(seed);
    const uint64_t nt = CoverageMap::binom3(uint64_t(v));
    std::vector<int32_t> owner(nt, -1);          // triple rank -> block slot
    std::vector<std::array<int, 4>> blocks;      // slot -> block (or {-1,..} free)
    std::vector<int32_t> free_slots;
    std::vector<uint32_t> uncovered;             // ranks, unordered
    std::vector<int32_t> upos(nt);               // rank -> index in `uncovered`
    std::vector<std::array<int, 3>> unrank(nt);
    {
        uint32_t r = 0;
        for (int c = 2; c < v; ++c)
            for (int b = 1; b < c; ++b)
                for (int a = 0; a < b; ++a) {
                    unrank[r] = {a, b, c};
                    upos[r] = int32_t(uncovered.size());
                    uncovered.push_back(r);
                    ++r;
                }
    }
    auto rank3 = [&](int a, int b, int c) {
        int s[3] = {a, b, c};
        std::sort(s, s + 3);
        return uint32_t(CoverageMap::binom3(uint64_t(s[2])) +
                        CoverageMap::binom2(uint64_t(s[1])) + uint64_t(s[0]));
    };
    auto mark_covered = [&](uint32_t r, int32_t slot) {
        owner[r] = slot;
        int32_t pos = upos[r];
        uint32_t last = uncovered.back();
        uncovered[pos] = last;
        upos[last] = pos;
        uncovered.pop_back();
    };
    auto mark_uncovered = [&](uint32_t r) {
        owner[r] = -1;
        upos[r] = int32_t(uncovered.size());
        uncovered.push_back(r);
    };
    auto block_ranks = [&](const std::array<int, 4>& b, uint32_t out[4]) {
        out[0] = rank3(b[0], b[1], b[2]);
        out[1] = rank3(b[0], b[1], b[3]);
        out[2] = rank3(b[0], b[2], b[3]);
        out[3] = rank3(b[1], b[2], b[3]);
    };

    std::vector<int> wcands;
    while (!uncovered.empty() && res.steps < budget) {
        ++res.steps;
        uint32_t r = uncovered[rng() % uncovered.size()];
        auto [a, b, c] = unrank[r];
        // min-conflict choice of the fourth point
        int best = 4;
        wcands.clear();
        for (int cand = 0; cand < v; ++cand) {
            if (cand == a || cand == b || cand == c) continue;
            int32_t o1 = owner[rank3(a, b, cand)];
            int32_t o2 = owner[rank3(a, c, cand)];
            int32_t o3 = owner[rank3(b, c, cand)];
            int cnt = int(o1 >= 0) + int(o2 >= 0 && o2 != o1) +
                      int(o3 >= 0 && o3 != o1 && o3 != o2);
            if (cnt < best) {
                best = cnt;
                wcands.clear();
            }
            if (cnt == best) wcands.push_back(cand);
        }
        int w = wcands[rng() % wcands.size()];
        std::array<int, 4> nb = {a, b, c, w};
        std::sort(nb.begin(), nb.end());
        uint32_t rk[4];
        block_ranks(nb, rk);
        // evict blocks clashing on the three triples through w
        for (uint32_t t : rk) {
            int32_t s = owner[t];
            if (s < 0) continue;
            uint32_t orc[4];
            block_ranks(blocks[s], orc);
            for (uint32_t ot : orc) mark_uncovered(ot);
            blocks[s] = {-1, -1, -1, -1};
            free_slots.push_back(s);
        }
        int32_t slot;
        if (!free_slots.empty()) {
            slot = free_slots.back();
            free_slots.pop_back();
        } else {
            slot = int32_t(blocks.size());
            blocks.push_back({});
        }
        blocks[slot] = nb;
        for (uint32_t t : rk) mark_covered(t, slot);
    }
    res.covered = nt - uncovered.size();
    if (uncovered.empty()) {
        res.success = true;
        res.sqs.v = v;
        for (const auto& b : blocks)
            if (b[0] >= 0) res.sqs.blocks.insert(res.sqs.blocks.end(), b.begin(), b.end());
        canonicalize_blocks(res.sqs.blocks, 4);
    }
    return res;
}

// SQS(10) relabeled so the four blocks through {8,9} are exactly
// {2i, 2i+1, 8, 9}.  The blocks through any fixed pair always partition
// the other 8 points into pairs, so the relabeling always exists.
inline SQS sqs10_with_spread() {
    SearchResult sr;
    for (uint64_t seed = 1;; ++seed) {
        sr = search_sqs(10, seed, 500000);
        if (sr.success) break;
        if (seed > 64) throw std::logic_error("sqs10_with_spread: search failed"); // unreachable
    }
    const SQS& raw = sr.sqs;
    std::vector<int> perm(10, -1);
    perm[8] = 8;
    perm[9] = 9;
    int next = 0;
    for (size_t i = 0; i < raw.blocks.size(); i += 4) {
        const int* b = raw.blocks.data() + i;
        if (b[2] == 8 && b[3] == 9) { // sorted blocks: pair {8,9} sits at the end
            perm[b[0]] = next++;
            perm[b[1]] = next++;
        }
    }
    SQS out;
    out.v = 10;
    out.blocks.reserve(raw.blocks.size());
    for (int id : raw.blocks) out.blocks.push_back(perm[id]);
    canonicalize_blocks(out.blocks, 4);
    for (int i = 0; i < 4; ++i) {
        int want[4] = {2 * i, 2 * i + 1, 8, 9};
        bool found = false;
        for (size_t j = 0; j < out.blocks.size() && !found; j += 4)
            found = std::equal(want, want + 4, out.blocks.data() + j);
        if (!found) throw std::logic_error("sqs10_with_spread: spread block missing");
    }
    return out;
}

// Doubling: two copies of an SQS(n) plus a bipartite design across the
// copies; the copies are [0,n) and [n,2n).
inline SQS double_sqs(const SQS& s1, const SQS& s2, const BBD& bbd) {
    const int n = s1.v;
    if (s2.v != n || n % 2) throw std::invalid_argument("double_sqs: need two SQS of one even order");
    if (bbd.n != 2 * n) throw std::invalid_argument("double_sqs: bbd must live on 2n points");
    auto is_range = [](const std::vector<int>& g, int lo, int hi) {
        std::vector<int> s = g;
        std::sort(s.begin(), s.end());
        for (int i = lo; i < hi; ++i)
            if (s[i - lo] != i) return false;
        return true;
    };
    if (!is_range(bbd.g1, 0, n) || !is_range(bbd.g2, n, 2 * n))
        throw std::invalid_argument("double_sqs: bbd groups must be the two copies");
    if (Report r = verify_sqs(s1); !r) throw std::invalid_argument("double_sqs: s1: " + r.detail);
    if (Report r = verify_sqs(s2); !r) throw std::invalid_argument("double_sqs: s2: " + r.detail);
    if (Report r = verify_bbd(bbd); !r) throw std::invalid_argument("double_sqs: bbd: " + r.detail);
    SQS out;
    out.v = 2 * n;
    out.blocks = s1.blocks;
    for (int id : s2.blocks) out.blocks.push_back(id + n);
    out.blocks.insert(out.blocks.end(), bbd.blocks.begin(), bbd.blocks.end());
    canonicalize_blocks(out.blocks, 4);
    return out;
}

// ------------------------------------------------------------------
// The SQS(8n+2) combinator.
//
// Points: eight column sets A_c = [c*n, (c+1)*n) for coordinates
// c = 2i+delta (i in 0..3), plus e1 = 8n, e2 = 8n+1.  Column groups
// Omega_i = A_{2i} u A_{2i+1} u {e1,e2}.
//   R1: for each block s of an SQS(8) on the coordinates, the blocks of
//       a distance-2 extension C_s minus the projected codewords M_s;
//   R2: for each codeword b, the 26 non-spread blocks of an SQS(10)
//       overlaid on b's eight points and {e1,e2};
//   R3: BBDs across every pair of columns from different groups;
//   R4 (full mode): an SQS(2n+2) on each Omega_i.

struct Sqs8n2Ingredients {
    int n = 0;
    Code mds;                               // length 8, distance 7, order n
    std::map<std::pair<int, int>, BBD> bbds; // (c0,c1), c0 < c1, c0/2 != c1/2
    SQS s8;                                 // on [0,8)
    SQS s10;                                // on [0,10), spread blocks {2i,2i+1,8,9}
    std::map<int, SQS> d;                   // i -> SQS(2n+2), local ids
};

inline Report validate_ingredients(const Sqs8n2Ingredients& ing, bool full) {
    const int n = ing.n;
    if (n < 8 || n % 2) return Report::fail("kind=order n=" + std::to_string(n));
    if (ing.mds.d != 8 || ing.mds.rho != 7 || ing.mds.q != n)
        return Report::fail("kind=mds_shape");
    if (Report r = verify_mds(ing.mds); !r) return Report::fail("kind=mds " + r.detail);
    if (ing.s8.v != 8) return Report::fail("kind=s8_order");
    if (Report r = verify_sqs(ing.s8); !r) return Report::fail("kind=s8 " + r.detail);
    if (ing.s10.v != 10) return Report::fail("kind=s10_order");
    if (Report r = verify_sqs(ing.s10); !r) return Report::fail("kind=s10 " + r.detail);
    for (int i = 0; i < 4; ++i) {
        int want[4] = {2 * i, 2 * i + 1, 8, 9};
        bool found = false;
        for (size_t j = 0; j < ing.s10.blocks.size() && !found; j += 4)
            found = std::equal(want, want + 4, ing.s10.blocks.data() + j);
        if (!found) return Report::fail("kind=s10_spread i=" + std::to_string(i));
    }
    for (int c0 = 0; c0 < 8; ++c0)
        for (int c1 = c0 + 1; c1 < 8; ++c1) {
            if (c0 / 2 == c1 / 2) continue;
            auto it = ing.bbds.find({c0, c1});
            if (it == ing.bbds.end())
                return Report::fail("kind=bbd_missing pair=" + std::to_string(c0) + ";" +
                                    std::to_string(c1));
            if (it->second.n != 2 * n) return Report::fail("kind=bbd_order");
            if (Report r = verify_bbd(it->second); !r)
                return Report::fail("kind=bbd " + r.detail);
        }
    if (full) {
        for (int i = 0; i < 4; ++i) {
            auto it = ing.d.find(i);
            if (it == ing.d.end()) return Report::fail("kind=d_missing i=" + std::to_string(i));
            if (it->second.v != 2 * n + 2) return Report::fail("kind=d_order");
            if (Report r = verify_sqs(it->second); !r)
                return Report::fail("kind=d i=" + std::to_string(i) + " " + r.detail);
        }
    }
    return Report::pass();
}

// Default ingredient wiring for a prime-power order n: one linear code,
// one BBD reused across the 24 column pairs, Boolean S8, searched S10.
inline Sqs8n2Ingredients make_ingredients(int n, int l) {
    // factor n = p^k
    int p = 2;
    while (n % p) ++p;
    int k = 0;
    int m = n;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) throw std::invalid_argument("make_ingredients: n must be a prime power");
    Field F{uint32_t(p), uint32_t(k)};
    Sqs8n2Ingredients ing;
    ing.n = n;
    ing.mds = linear_mds(F, 8, 7);
    BBD bbd = bbd_build(n, l).bbd;
    for (int c0 = 0; c0 < 8; ++c0)
        for (int c1 = c0 + 1; c1 < 8; ++c1)
            if (c0 / 2 != c1 / 2) ing.bbds[{c0, c1}] = bbd;
    ing.s8 = boolean_sqs(3);
    ing.s10 = sqs10_with_spread();
    return ing;
}

struct Sqs8n2Result {
    int n = 0, v = 0;
    bool full = false;
    std::vector<int> r1, r2, r3, r4; // flat, stride 4
    SQS design;                      // populated in full mode

    std::vector<int> all_blocks() const {
        std::vector<int> out = r1;
        out.insert(out.end(), r2.begin(), r2.end());
        out.insert(out.end(), r3.begin(), r3.end());
        out.insert(out.end(), r4.begin(), r4.end());
        return out;
    }
};

inline Sqs8n2Result build_8n2(const Sqs8n2Ingredients& ing, bool full) {
    if (Report r = validate_ingredients(ing, full); !r)
        throw std::invalid_argument("build_8n2: ingredients: " + r.detail);
    const int n = ing.n;
    const int e1 = 8 * n, e2 = 8 * n + 1;
    auto pt = [n](int c, int val) { return c * n + val; };
    Sqs8n2Result res;
    res.n = n;
    res.v = 8 * n + 2;
    res.full = full;

    // R1: distance-2 extensions along the SQS(8) blocks, minus codewords
    for (size_t si = 0; si < ing.s8.blocks.size(); si += 4) {
        const int* s = ing.s8.blocks.data() + si;
        int extra = 0;
        while (extra == s[0] || extra == s[1] || extra == s[2] || extra == s[3]) ++extra;
        LatinHypercube f = make_square(n), g = make_square(n), h = make_square(n);
        for (size_t wi = 0; wi < ing.mds.size(); ++wi) {
            auto w = ing.mds.word(wi);
            f.at2(w[s[0]], w[s[1]]) = w[s[2]];
            g.at2(w[s[0]], w[s[1]]) = w[s[3]];
            h.at2(w[s[0]], w[s[1]]) = w[extra];
        }
        ExtendResult er = extend_to_distance2(f, g, h);
        for (size_t wi = 0; wi < er.c.size(); ++wi) {
            auto w = er.c.word(wi);
            if (er.mprime.contains(w)) continue;
            int blk[4] = {pt(s[0], w[0]), pt(s[1], w[1]), pt(s[2], w[2]), pt(s[3], w[3])};
            res.r1.insert(res.r1.end(), blk, blk + 4);
        }
    }
    if (res.r1.size() / 4 != 14ull * (uint64_t(n) * n * n - uint64_t(n) * n))
        throw std::logic_error("build_8n2: |R1| mismatch");

    // R2: SQS(10) overlays on codewords, spread blocks dropped
    for (size_t wi = 0; wi < ing.mds.size(); ++wi) {
        auto w = ing.mds.word(wi);
        for (size_t bi = 0; bi < ing.s10.blocks.size(); bi += 4) {
            const int* beta = ing.s10.blocks.data() + bi;
            if (beta[2] == 8 && beta[3] == 9) continue; // spread block
            int blk[4];
            for (int j = 0; j < 4; ++j) {
                int id = beta[j];
                blk[j] = id < 8 ? pt(id, w[id]) : (id == 8 ? e1 : e2);
            }
            res.r2.insert(res.r2.end(), blk, blk + 4);
        }
    }
    if (res.r2.size() / 4 != 26ull * uint64_t(n) * n)
        throw std::logic_error("build_8n2: |R2| mismatch");

    // R3: cross-column BBDs
    for (const auto& [key, bbd] : ing.bbds) {
        auto [c0, c1] = key;
        for (size_t bi = 0; bi < bbd.blocks.size(); bi += 4) {
            int blk[4];
            for (int j = 0; j < 4; ++j) {
                int id = bbd.blocks[bi + j];
                blk[j] = id < n ? pt(c0, id) : pt(c1, id - n);
            }
            res.r3.insert(res.r3.end(), blk, blk + 4);
        }
    }
    if (res.r3.size() / 4 != 6ull * uint64_t(n) * n * (n - 1))
        throw std::logic_error("build_8n2: |R3| mismatch");

    if (full) {
        // R4: one SQS(2n+2) per column group Omega_i
        for (int i = 0; i < 4; ++i) {
            const SQS& di = ing.d.at(i);
            for (int id : di.blocks)
                res.r4.push_back(id < 2 * n ? i * 2 * n + id : (id == 2 * n ? e1 : e2));
        }
        if (res.r4.size() / 4 != uint64_t(2 * n + 2) * (2 * n + 1) * n / 3)
            throw std::logic_error("build_8n2: |R4| mismatch");
        res.design.v = res.v;
        res.design.blocks = res.all_blocks();
        canonicalize_blocks(res.design.blocks, 4);
    }
    return res;
}

// Partial-mode contract: cross-column triples covered exactly once,
// triples inside a single Omega_i never.
inline Report verify_partial_8n2(const Sqs8n2Result& res) {
    const int n = res.n, v = res.v;
    CoverageMap cm(v, 3);
    auto blocks = res.r1;
    blocks.insert(blocks.end(), res.r2.begin(), res.r2.end());
    blocks.insert(blocks.end(), res.r3.begin(), res.r3.end());
    for (size_t i = 0; i + 4 <= blocks.size(); i += 4)
        cm.add_block(std::span<const int>(blocks.data() + i, 4));
    auto group_of = [&](int id) { return id >= 8 * n ? -1 : id / n / 2; };
    Report out = Report::pass();
    cm.for_each([&](std::span<const int> ids, uint32_t cnt) {
        if (!out.ok) return;
        int g = -1;
        bool intra = true;
        for (int id : ids) {
            int gi = group_of(id);
            if (gi < 0) continue; // e-points belong to every group
            if (g == -1) g = gi;
            else if (g != gi) intra = false;
        }
        uint32_t want = intra ? 0 : 1;
        if (cnt != want)
            out = Report::fail("kind=coverage ids=" + std::to_string(ids[0]) + ";" +
                               std::to_string(ids[1]) + ";" + std::to_string(ids[2]) +
                               " count=" + std::to_string(cnt) + " want=" + std::to_string(want));
    });
    return out;
}

} // namespace mdskit

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "latin.hpp"

namespace mdskit {

// Brute-force enumerators.  Deliberately small caps; these exist to
// ground the constructive modules, not to push counting records.

// Cell-by-cell backtracking with row/column bitmasks.
inline uint64_t count_latin_squares(int q, bool reduced = false) {
    if (q < 1) throw std::invalid_argument("count_latin_squares: q >= 1");
    if ((!reduced && q > 5) || (reduced && q > 6))
        throw std::invalid_argument("count_latin_squares: above enumeration cap");
    std::vector<uint32_t> row(q, 0), col(q, 0);
    std::vector<int> fixed(size_t(q) * q, -1);
    if (reduced) {
        for (int j = 0; j < q; ++j) fixed[j] = j;
        for (int i = 0; i < q; ++i) fixed[size_t(i) * q] = i;
    }
    uint64_t count = 0;
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == q * q) { ++count; return; }
        int r = cell / q, c = cell % q;
        uint32_t avail = ~(row[r] | col[c]) & ((uint32_t(1) << q) - 1);
        if (fixed[cell] >= 0) {
            uint32_t bit = uint32_t(1) << fixed[cell];
            if (!(avail & bit)) return;
            row[r] |= bit; col[c] |= bit;
            self(self, cell + 1);
            row[r] &= ~bit; col[c] &= ~bit;
            return;
        }
        while (avail) {
            uint32_t bit = avail & (~avail + 1);
            avail ^= bit;
            row[r] |= bit; col[c] |= bit;
            self(self, cell + 1);
            row[r] &= ~bit; col[c] &= ~bit;
        }
    };
    rec(rec, 0);
    return count;
}

// Independent route: compose whole rows from the permutation list,
// pruning on column masks.
inline uint64_t count_latin_squares_perm(int q, bool reduced = false) {
    if (q < 1) throw std::invalid_argument("count_latin_squares_perm: q >= 1");
    if ((!reduced && q > 5) || (reduced && q > 6))
        throw std::invalid_argument("count_latin_squares_perm: above enumeration cap");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(q);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));

    std::vector<uint32_t> col(q, 0);
    uint64_t count = 0;
    auto rec = [&](auto&& self, int r) -> void {
        if (r == q) { ++count; return; }
        for (const auto& perm : perms) {
            if (reduced) {
                if (r == 0 && perm != perms[0]) break; // identity only
                if (perm[0] != r) continue;            // first column natural
            }
            bool ok = true;
            for (int c = 0; c < q && ok; ++c) ok = !(col[c] & (uint32_t(1) << perm[c]));
            if (!ok) continue;
            for (int c = 0; c < q; ++c) col[c] |= uint32_t(1) << perm[c];
            self(self, r + 1);
            for (int c = 0; c < q; ++c) col[c] &= ~(uint32_t(1) << perm[c]);
        }
    };
    rec(rec, 0);
    return count;
}

// All latin squares of order q as explicit tables (q <= 4).
inline std::vector<LatinHypercube> enumerate_latin_squares(int q) {
    if (q < 1 || q > 4) throw std::invalid_argument("enumerate_latin_squares: q <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(q);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));

    std::vector<LatinHypercube> out;
    std::vector<uint32_t> col(q, 0);
    LatinHypercube cur = make_square(q);
    auto rec = [&](auto&& self, int r) -> void {
        if (r == q) { out.push_back(cur); return; }
        for (const auto& perm : perms) {
            bool ok = true;
            for (int c = 0; c < q && ok; ++c) ok = !(col[c] & (uint32_t(1) << perm[c]));
            if (!ok) continue;
            for (int c = 0; c < q; ++c) {
                col[c] |= uint32_t(1) << perm[c];
                cur.at2(r, c) = uint16_t(perm[c]);
            }
            self(self, r + 1);
            for (int c = 0; c < q; ++c) col[c] &= ~(uint32_t(1) << perm[c]);
        }
    };
    rec(rec, 0);
    return out;
}

inline bool squares_orthogonal(const LatinHypercube& a, const LatinHypercube& b) {
    const int q = a.q;
    std::vector<char> seen(size_t(q) * q, 0);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            size_t r = size_t(a.at2(x, y)) * q + b.at2(x, y);
            if (seen[r]) return false;
            seen[r] = 1;
        }
    return true;
}

// Ordered orthogonal pairs by direct pairwise checking.
inline uint64_t count_mols_pairs(int q) {
    if (q < 1 || q > 4) throw std::invalid_argument("count_mols_pairs: q <= 4");
    auto all = enumerate_latin_squares(q);
    uint64_t count = 0;
    for (const auto& a : all)
        for (const auto& b : all)
            if (squares_orthogonal(a, b)) ++count;
    return count;
}

// Independent route: a mate of L is exactly an assignment of the q
// symbols to q pairwise-disjoint transversals of L, so
//   #ordered pairs = sum over L of #ordered transversal partitions.
inline uint64_t count_mols_pairs_transversal(int q) {
    if (q < 1 || q > 4) throw std::invalid_argument("count_mols_pairs_transversal: q <= 4");
    auto all = enumerate_latin_squares(q);
    std::vector<std::vector<int>> perms;
    std::vector<int> p(q);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));

    uint64_t count = 0;
    for (const auto& L : all) {
        // transversals = permutations sigma with L(i, sigma(i)) all distinct
        std::vector<const std::vector<int>*> tr;
        for (const auto& sg : perms) {
            uint32_t syms = 0;
            bool ok = true;
            for (int i = 0; i < q && ok; ++i) {
                uint32_t bit = uint32_t(1) << L.at2(i, sg[i]);
                ok = !(syms & bit);
                syms |= bit;
            }
            if (ok) tr.push_back(&sg);
        }
        // ordered tuples of q pairwise-disjoint transversals
        std::vector<uint32_t> colused(q, 0);
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == q) { ++count; return; }
            for (const auto* sg : tr) {
                bool ok = true;
                for (int i = 0; i < q && ok; ++i) ok = !(colused[i] & (uint32_t(1) << (*sg)[i]));
                if (!ok) continue;
                for (int i = 0; i < q; ++i) colused[i] |= uint32_t(1) << (*sg)[i];
                self(self, depth + 1);
                for (int i = 0; i < q; ++i) colused[i] &= ~(uint32_t(1) << (*sg)[i]);
            }
        };
        rec(rec, 0);
    }
    return count;
}

} // namespace mdskit

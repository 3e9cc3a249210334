#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matching.hpp"
#include "report.hpp"

namespace mdskit {

// d0-dimensional array of q symbols, cells flattened with the LAST
// coordinate varying fastest.
struct LatinHypercube {
    int d0 = 2;
    int q = 0;
    std::vector<uint16_t> cells;

    static size_t cell_count(int q, int d0) {
        size_t n = 1;
        for (int i = 0; i < d0; ++i) n *= size_t(q);
        return n;
    }

    size_t flat(std::span<const int> idx) const {
        size_t r = 0;
        for (int i = 0; i < d0; ++i) r = r * q + size_t(idx[i]);
        return r;
    }

    uint16_t at(std::span<const int> idx) const { return cells[flat(idx)]; }
    uint16_t at(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }

    // 2-dimensional access (row, col)
    uint16_t at2(int x, int y) const { return cells[size_t(x) * q + y]; }
    uint16_t& at2(int x, int y) { return cells[size_t(x) * q + y]; }

    bool operator==(const LatinHypercube&) const = default;
};

inline LatinHypercube make_square(int q) {
    return LatinHypercube{2, q, std::vector<uint16_t>(size_t(q) * q, 0)};
}

namespace detail {
inline std::string idx_str(std::span<const int> idx) {
    std::string s = "(";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}
} // namespace detail

// Accepts iff every line parallel to a coordinate axis is a permutation
// of [0,q); reports the first violating line.
inline Report verify_latin(const LatinHypercube& c) {
    if (c.d0 < 2) return Report::fail("kind=malformed d0=" + std::to_string(c.d0));
    if (c.q < 1) return Report::fail("kind=malformed q=" + std::to_string(c.q));
    if (c.cells.size() != LatinHypercube::cell_count(c.q, c.d0))
        return Report::fail("kind=malformed cells=" + std::to_string(c.cells.size()));
    std::vector<int> idx(c.d0, 0);
    std::vector<char> seen(c.q);
    for (int axis = 0; axis < c.d0; ++axis) {
        // walk every line along `axis`
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int v = 0; v < c.q; ++v) {
                idx[axis] = v;
                uint16_t s = c.at(idx);
                if (s >= c.q || seen[s]) {
                    return Report::fail("kind=line axis=" + std::to_string(axis) +
                                        " at=" + detail::idx_str(idx) +
                                        " symbol=" + std::to_string(s));
                }
                seen[s] = 1;
            }
            idx[axis] = 0;
            // advance the other coordinates (odometer)
            int i = c.d0 - 1;
            for (; i >= 0; --i) {
                if (i == axis) continue;
                if (++idx[i] < c.q) break;
                idx[i] = 0;
            }
            if (i < 0) break;
        }
    }
    return Report::pass();
}

inline LatinHypercube cyclic_cube(int q, int d0) {
    if (q < 1 || d0 < 2) throw std::invalid_argument("cyclic_cube: need q >= 1, d0 >= 2");
    LatinHypercube c{d0, q, std::vector<uint16_t>(LatinHypercube::cell_count(q, d0))};
    std::vector<int> idx(d0, 0);
    for (size_t f = 0; f < c.cells.size(); ++f) {
        int s = std::accumulate(idx.begin(), idx.end(), 0) % q;
        c.cells[f] = uint16_t(s);
        for (int i = d0 - 1; i >= 0; --i) {
            if (++idx[i] < q) break;
            idx[i] = 0;
        }
    }
    return c;
}

// Latin square of order q whose top-left l x l block is a latin square on
// symbols [0,l).  Rows [0,l) are laid down cyclically (subsquare plus a
// cyclic border over the large symbols); each remaining row is completed
// by a perfect matching between columns and still-available symbols.
// The matching exists by Hall's theorem: after r full rows the
// availability graph is (q-r)-regular.
inline LatinHypercube ls_with_subsquare(int q, int l) {
    if (l < 1 || l > q / 2)
        throw std::invalid_argument("ls_with_subsquare: need 1 <= l <= q/2");
    LatinHypercube L = make_square(q);
    for (int x = 0; x < l; ++x) {
        for (int y = 0; y < l; ++y) L.at2(x, y) = uint16_t((x + y) % l);
        for (int t = 0; t < q - l; ++t) L.at2(x, l + t) = uint16_t(l + (x + t) % (q - l));
    }
    std::vector<std::vector<char>> col_has(q, std::vector<char>(q, 0));
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < q; ++y) col_has[y][L.at2(x, y)] = 1;
    for (int x = l; x < q; ++x) {
        std::vector<std::vector<int>> adj(q);
        for (int y = 0; y < q; ++y)
            for (int s = 0; s < q; ++s)
                if (!col_has[y][s]) adj[y].push_back(s);
        std::vector<int> ml, mr;
        if (max_bipartite_matching(q, q, adj, ml, mr) != q)
            throw std::logic_error("ls_with_subsquare: completion failed"); // unreachable
        for (int y = 0; y < q; ++y) {
            L.at2(x, y) = uint16_t(ml[y]);
            col_has[y][ml[y]] = 1;
        }
    }
    return L;
}

// Latin d0-cube with a latin d0-subcube on [0,l)^{d0}: iterated
// composition g(x1,...,xd0) = L(...L(L(x1,x2),x3)...) of a square with a
// subsquare, which stays inside [0,l) whenever all arguments do.
inline LatinHypercube cube_with_subcube(int q, int l, int d0) {
    if (d0 < 2) throw std::invalid_argument("cube_with_subcube: d0 >= 2");
    LatinHypercube L = ls_with_subsquare(q, l);
    if (d0 == 2) return L;
    LatinHypercube c{d0, q, std::vector<uint16_t>(LatinHypercube::cell_count(q, d0))};
    std::vector<int> idx(d0, 0);
    for (size_t f = 0; f < c.cells.size(); ++f) {
        int acc = idx[0];
        for (int i = 1; i < d0; ++i) acc = L.at2(acc, idx[i]);
        c.cells[f] = uint16_t(acc);
        for (int i = d0 - 1; i >= 0; --i) {
            if (++idx[i] < q) break;
            idx[i] = 0;
        }
    }
    return c;
}

// Symmetric unipotent latin square of even order q: f(x,y)=f(y,x),
// f(x,x)=0, with (for l >= 1) the l x l window rows [0,l) x cols [q-l,q)
// latin onto the symbol set K1 = {q-l..q-1}.
//
// Equivalent to a 1-factorization of K_q with factor f^{-1}(s) for each
// s in [1,q).  Built deterministically on the halves A=[0,h), B=[h,q),
// h=q/2: edges inside the halves come from circle-method (near-)
// 1-factorizations, cross edges from the h perfect matchings of an h x h
// latin square whose relocated subsquare supplies the K0 x K1 window.
inline LatinHypercube symmetric_unipotent_ls(int q, int l) {
    if (q < 2 || q % 2) throw std::invalid_argument("symmetric_unipotent_ls: q must be even");
    if (l < 0 || l > q / 4) throw std::invalid_argument("symmetric_unipotent_ls: need 0 <= l <= q/4");
    const int h = q / 2;
    LatinHypercube f = make_square(q); // diagonal already 0

    auto put = [&](int x, int y, int s) {
        f.at2(x, y) = uint16_t(s);
        f.at2(y, x) = uint16_t(s);
    };

    // cross square: h x h latin, with (for l >= 1) the subsquare moved to
    // columns [h-l,h) so that the high columns of B line up with K1
    LatinHypercube cross = make_square(h);
    if (l >= 1) {
        LatinHypercube base = ls_with_subsquare(h, l);
        for (int a = 0; a < h; ++a)
            for (int b = 0; b < h; ++b) {
                int src = b >= h - l ? b - (h - l) : b + l;
                cross.at2(a, b) = base.at2(a, src);
            }
    } else {
        for (int a = 0; a < h; ++a)
            for (int b = 0; b < h; ++b) cross.at2(a, b) = uint16_t((a + b) % h);
    }

    // cross symbol relabeling: subsquare symbols [0,l) -> K1, the rest
    // low; chi is injective into [1,q) and avoids the within-half pool
    auto chi = [&](int m) { return m < l ? q - l + m : m - l + 1; };

    if (h % 2 == 0) {
        // within-half pairing: circle method on each half, factor r of A
        // shares its symbol with factor r of B
        for (int r = 0; r < h - 1; ++r) {
            int sym = (h - l + 1) + r;
            if (h >= 2) {
                put(h - 1, r, sym);
                put(2 * h - 1, h + r, sym);
            }
            for (int i = 1; i <= h / 2 - 1; ++i) {
                int u = (r + i) % (h - 1), v = (r - i + (h - 1)) % (h - 1);
                put(u, v, sym);
                put(h + u, h + v, sym);
            }
        }
        for (int a = 0; a < h; ++a)
            for (int b = 0; b < h; ++b) put(a, h + b, chi(cross.at2(a, b)));
    } else {
        // odd halves: near-1-factorization N_r misses vertex r; the factor
        // is completed across the middle by one edge of the cross matching
        // of symbol s* = h-1 (never a subsquare symbol since l <= h/2)
        const int sstar = h - 1;
        std::vector<int> pi(h, -1); // pi[a] = column of s* in row a
        for (int a = 0; a < h; ++a)
            for (int b = 0; b < h; ++b)
                if (cross.at2(a, b) == sstar) pi[a] = b;
        for (int r = 0; r < h; ++r) {
            int sym = (h - l) + r;
            for (int i = 1; i <= (h - 1) / 2; ++i) {
                int u = (r + i) % h, v = (r - i + h) % h;
                put(u, v, sym);
                int ub = (pi[r] + i) % h, vb = (pi[r] - i + h) % h;
                put(h + ub, h + vb, sym);
            }
            put(r, h + pi[r], sym);
        }
        for (int m = 0; m < h; ++m) {
            if (m == sstar) continue;
            int sym = m < l ? chi(m) : m - l + 1; // pure cross factors
            for (int a = 0; a < h; ++a)
                for (int b = 0; b < h; ++b)
                    if (cross.at2(a, b) == m) put(a, h + b, sym);
        }
    }
    return f;
}

// Postcondition checkers; constructions are re-verified, never trusted.

inline Report check_subsquare(const LatinHypercube& L, int l) {
    if (L.d0 != 2) return Report::fail("kind=not_square");
    for (int x = 0; x < l; ++x) {
        std::vector<char> seen(l, 0);
        for (int y = 0; y < l; ++y) {
            int s = L.at2(x, y);
            if (s >= l || seen[s])
                return Report::fail("kind=subsquare cell=(" + std::to_string(x) + "," +
                                    std::to_string(y) + ") symbol=" + std::to_string(s));
            seen[s] = 1;
        }
    }
    return Report::pass();
}

inline Report check_subcube(const LatinHypercube& c, int l) {
    std::vector<int> idx(c.d0, 0);
    std::vector<uint16_t> sub(LatinHypercube::cell_count(l, c.d0));
    for (size_t f = 0; f < sub.size(); ++f) {
        uint16_t s = c.at(idx);
        if (s >= l)
            return Report::fail("kind=subcube at=" + detail::idx_str(idx) +
                                " symbol=" + std::to_string(s));
        sub[f] = s;
        for (int i = c.d0 - 1; i >= 0; --i) {
            if (++idx[i] < l) break;
            idx[i] = 0;
        }
    }
    return verify_latin(LatinHypercube{c.d0, l, std::move(sub)});
}

inline Report check_symmetric_unipotent(const LatinHypercube& L, int l) {
    if (L.d0 != 2) return Report::fail("kind=not_square");
    const int q = L.q;
    for (int x = 0; x < q; ++x) {
        if (L.at2(x, x) != 0)
            return Report::fail("kind=diagonal x=" + std::to_string(x));
        for (int y = x + 1; y < q; ++y)
            if (L.at2(x, y) != L.at2(y, x))
                return Report::fail("kind=symmetry cell=(" + std::to_string(x) + "," +
                                    std::to_string(y) + ")");
    }
    // window rows [0,l) x cols [q-l,q) must be latin onto {q-l..q-1}
    for (int x = 0; x < l; ++x) {
        std::vector<char> seen(l, 0);
        for (int j = 0; j < l; ++j) {
            int s = L.at2(x, q - l + j);
            if (s < q - l || seen[s - (q - l)])
                return Report::fail("kind=window cell=(" + std::to_string(x) + "," +
                                    std::to_string(q - l + j) + ") symbol=" + std::to_string(s));
            seen[s - (q - l)] = 1;
        }
    }
    for (int j = 0; j < l; ++j) {
        std::vector<char> seen(l, 0);
        for (int x = 0; x < l; ++x) {
            int s = L.at2(x, q - l + j);
            if (seen[s - (q - l)])
                return Report::fail("kind=window_col col=" + std::to_string(q - l + j));
            seen[s - (q - l)] = 1;
        }
    }
    return Report::pass();
}

// System of t s-ary functions over [0,q); each function is a q^s array,
// last argument fastest.  strong=true demands orthogonality after every
// constant substitution pattern.
struct OrthogonalSystem {
    int s = 2;
    int q = 0;
    bool strong = false;
    std::vector<std::vector<uint16_t>> funcs;

    int t() const { return int(funcs.size()); }
};

namespace detail {

// Check that the chosen functions restricted to the free variables are
// jointly bijective for one fixed assignment of the bound variables.
inline bool ortho_window(const OrthogonalSystem& sys, const std::vector<int>& chosen,
                         const std::vector<int>& bound_vars, std::vector<int>& assign,
                         std::vector<char>& seen) {
    const int q = sys.q, s = sys.s;
    std::vector<int> free_vars;
    std::vector<char> is_bound(s, 0);
    for (int v : bound_vars) is_bound[v] = 1;
    for (int v = 0; v < s; ++v)
        if (!is_bound[v]) free_vars.push_back(v);
    const int fs = int(free_vars.size());
    size_t space = 1;
    for (int i = 0; i < fs; ++i) space *= q;
    std::fill(seen.begin(), seen.begin() + space, 0);
    std::vector<int> x(s);
    for (size_t b = 0; b < bound_vars.size(); ++b) x[bound_vars[b]] = assign[b];
    std::vector<int> fv(fs, 0);
    for (size_t it = 0; it < space; ++it) {
        for (int i = 0; i < fs; ++i) x[free_vars[i]] = fv[i];
        size_t flat = 0;
        for (int i = 0; i < s; ++i) flat = flat * q + x[i];
        size_t tup = 0;
        for (int ci : chosen) tup = tup * q + sys.funcs[ci][flat];
        if (seen[tup]) return false;
        seen[tup] = 1;
        for (int i = fs - 1; i >= 0; --i) {
            if (++fv[i] < q) break;
            fv[i] = 0;
        }
    }
    return true;
}

} // namespace detail

inline Report check_orthogonal(const OrthogonalSystem& sys) {
    const int s = sys.s, q = sys.q, t = sys.t();
    if (s < 1 || q < 1) return Report::fail("kind=malformed");
    if (sys.strong && (s > 4 || q > 32))
        throw std::invalid_argument("check_orthogonal: strong mode capped at s<=4, q<=32");
    size_t space = 1;
    for (int i = 0; i < s; ++i) space *= q;
    for (const auto& fn : sys.funcs) {
        if (fn.size() != space) return Report::fail("kind=arity_mismatch");
        for (uint16_t v : fn)
            if (v >= q) return Report::fail("kind=symbol_range");
    }
    std::vector<char> seen(space);

    // substitution patterns: none for plain mode, every proper variable
    // subset for strong mode; with b variables bound we test all
    // min(s-b, t)-subsets of functions
    for (int bcount = 0; bcount < s; ++bcount) {
        if (!sys.strong && bcount > 0) break;
        int arity = s - bcount;
        int pick = arity;  // subsets of exactly `arity` functions; vacuous if t < arity
        if (pick < 1 || t < pick) continue;
        std::vector<int> bound;
        for (int i = 0; i < bcount; ++i) bound.push_back(i);
        for (;;) { // combinations of bound variables
            std::vector<int> assign(bcount, 0);
            size_t nassign = 1;
            for (int i = 0; i < bcount; ++i) nassign *= q;
            for (size_t a = 0; a < nassign; ++a) {
                std::vector<int> chosen;
                for (int i = 0; i < pick; ++i) chosen.push_back(i);
                for (;;) { // combinations of functions
                    if (!detail::ortho_window(sys, chosen, bound, assign, seen)) {
                        std::string det = "kind=collision funcs=";
                        for (int ci : chosen) det += std::to_string(ci) + ";";
                        det += " bound=";
                        for (size_t b = 0; b < bound.size(); ++b)
                            det += std::to_string(bound[b]) + "=" + std::to_string(assign[b]) + ";";
                        return Report::fail(det);
                    }
                    int i = pick - 1;
                    while (i >= 0 && chosen[i] == t - pick + i) --i;
                    if (i < 0) break;
                    ++chosen[i];
                    for (int j = i + 1; j < pick; ++j) chosen[j] = chosen[j - 1] + 1;
                }
                for (int i = bcount - 1; i >= 0; --i) {
                    if (++assign[i] < q) break;
                    assign[i] = 0;
                }
            }
            int i = bcount - 1;
            while (i >= 0 && bound[i] == s - bcount + i) --i;
            if (i < 0) break;
            ++bound[i];
            for (int j = i + 1; j < bcount; ++j) bound[j] = bound[j - 1] + 1;
        }
    }
    return Report::pass();
}

} // namespace mdskit

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"
#include "latin.hpp"
#include "report.hpp"

namespace mdskit {

// Set of length-d words over [0,q) with declared code distance rho.
// MDS when |words| = q^{d-rho+1} and every m-coordinate projection is
// bijective, m = d-rho+1.  Words are kept sorted lexicographically; the
// optional linear form records a generator matrix (words = {c·G}) over
// GF(p^k), with prime_coeffs set when every entry lies in GF(p).
struct Code {
    int d = 0;
    int q = 0;
    int rho = 0;
    std::vector<uint16_t> words;

    struct LinearForm {
        uint32_t p = 0, k = 0;
        bool prime_coeffs = false;
        std::vector<uint32_t> gen; // m rows x d cols, row-major
    };
    std::optional<LinearForm> linear;

    int m() const { return d - rho + 1; }
    size_t size() const { return d ? words.size() / size_t(d) : 0; }
    std::span<const uint16_t> word(size_t i) const {
        return {words.data() + i * size_t(d), size_t(d)};
    }

    bool contains(std::span<const uint16_t> w) const {
        size_t lo = 0, hi = size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            auto ww = word(mid);
            if (std::lexicographical_compare(ww.begin(), ww.end(), w.begin(), w.end()))
                lo = mid + 1;
            else if (std::equal(ww.begin(), ww.end(), w.begin(), w.end()))
                return true;
            else
                hi = mid;
        }
        return false;
    }

    bool operator==(const Code& o) const { return d == o.d && q == o.q && words == o.words; }
};

// Sort the flat word list into canonical (lexicographic) order.
inline void canonicalize_words(std::vector<uint16_t>& words, int d) {
    if (d <= 0) return;
    size_t n = words.size() / size_t(d);
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return std::lexicographical_compare(words.begin() + a * d, words.begin() + (a + 1) * d,
                                            words.begin() + b * d, words.begin() + (b + 1) * d);
    });
    std::vector<uint16_t> out(words.size());
    for (size_t i = 0; i < n; ++i)
        std::copy(words.begin() + idx[i] * d, words.begin() + (idx[i] + 1) * d,
                  out.begin() + i * d);
    words.swap(out);
}

inline Code make_code(int d, int q, int rho, std::vector<uint16_t> words) {
    if (d < 1 || q < 1 || rho < 1 || rho > d)
        throw std::invalid_argument("make_code: bad parameters");
    if (words.size() % size_t(d))
        throw std::invalid_argument("make_code: ragged word list");
    canonicalize_words(words, d);
    for (size_t i = d; i + d <= words.size(); i += d)
        if (std::equal(words.begin() + i, words.begin() + i + d, words.begin() + i - d))
            throw std::invalid_argument("make_code: duplicate word");
    return Code{d, q, rho, std::move(words), std::nullopt};
}

namespace detail {
inline uint64_t ipow_checked(uint64_t b, uint32_t e, uint64_t cap) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > cap / (b ? b : 1)) return cap + 1;
        r *= b;
    }
    return r;
}
} // namespace detail

// Plane criterion: cardinality q^m plus injectivity of every
// m-coordinate projection.  Reports the first colliding word pair.
inline Report verify_mds(const Code& c) {
    const int d = c.d, q = c.q, m = c.m();
    if (d < 1 || q < 1 || c.rho < 1 || c.rho > d)
        return Report::fail("kind=malformed");
    for (uint16_t s : c.words)
        if (s >= q) return Report::fail("kind=symbol_range symbol=" + std::to_string(s));
    uint64_t want = detail::ipow_checked(q, uint32_t(m), uint64_t(1) << 40);
    if (c.size() != want)
        return Report::fail("kind=cardinality have=" + std::to_string(c.size()) +
                            " want=" + std::to_string(want));
    if (want > (uint64_t(1) << 26))
        throw std::invalid_argument("verify_mds: code too large for exhaustive check");
    // every m-subset of coordinates projects bijectively
    std::vector<int> coords(m);
    for (int i = 0; i < m; ++i) coords[i] = i;
    std::vector<int32_t> seen(size_t(want), -1);
    for (;;) {
        std::fill(seen.begin(), seen.end(), -1);
        for (size_t w = 0; w < c.size(); ++w) {
            auto ww = c.word(w);
            uint64_t r = 0;
            for (int i = 0; i < m; ++i) r = r * q + ww[coords[i]];
            if (seen[r] >= 0) {
                std::string det = "kind=plane_collision coords=";
                for (int i = 0; i < m; ++i) det += std::to_string(coords[i]) + ";";
                return Report::fail(det + " words=" + std::to_string(seen[r]) + "," +
                                    std::to_string(w));
            }
            seen[r] = int32_t(w);
        }
        int i = m - 1;
        while (i >= 0 && coords[i] == d - m + i) --i;
        if (i < 0) break;
        ++coords[i];
        for (int j = i + 1; j < m; ++j) coords[j] = coords[j - 1] + 1;
    }
    if (c.linear) {
        if (c.linear->gen.size() != size_t(m) * d)
            return Report::fail("kind=linear_shape");
    }
    return Report::pass();
}

// Quadratic minimum-distance check for small codes (test support).
inline int min_distance(const Code& c, size_t cap = 10000) {
    if (c.size() > cap) throw std::invalid_argument("min_distance: code too large");
    int best = c.d + 1;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) {
            auto a = c.word(i), b = c.word(j);
            int dist = 0;
            for (int t = 0; t < c.d; ++t) dist += a[t] != b[t];
            best = std::min(best, dist);
        }
    return best;
}

// Linear (over the prime subfield where possible) MDS construction.
// Cases: rho=2 parity (last coordinate = sum of the others); rho=d
// repetition; 3 <= rho <= p, d <= p+1 polynomial evaluation at prime
// subfield points (plus infinity when d = p+1); otherwise evaluation at
// d distinct points of the full field for 3 <= rho <= q, d <= q+1 —
// still GF(p)-linear as a word set, though the generator entries then
// leave the prime subfield.
inline Code linear_mds(const Field& F, int d, int rho) {
    const uint32_t q = F.order(), p = F.p();
    if (d < 2 || rho < 2 || rho > d)
        throw std::invalid_argument("linear_mds: need 2 <= rho <= d");
    const int m = d - rho + 1;
    std::vector<uint32_t> gen(size_t(m) * d, 0);
    if (rho == 2) {
        for (int i = 0; i < m; ++i) {
            gen[size_t(i) * d + i] = 1;
            gen[size_t(i) * d + (d - 1)] = 1;
        }
    } else if (rho == d) {
        for (int j = 0; j < d; ++j) gen[j] = 1;
    } else {
        bool prime_case = uint32_t(rho) <= p && uint32_t(d) <= p + 1;
        bool ext_case = uint32_t(rho) <= q && uint32_t(d) <= q + 1;
        if (!prime_case && !ext_case)
            throw std::invalid_argument("linear_mds: no construction for these parameters");
        uint32_t npoints = prime_case ? p : q;
        bool with_inf = uint32_t(d) == npoints + 1;
        int cols = with_inf ? d - 1 : d;
        for (int j = 0; j < cols; ++j) {
            Field::elem a = Field::elem(j);
            for (int i = 0; i < m; ++i)
                gen[size_t(i) * d + j] = F.pow(a, uint64_t(i));
        }
        if (with_inf) gen[size_t(m - 1) * d + (d - 1)] = 1; // leading coefficient
    }
    // words = {c.G : c in Q^m}
    uint64_t n = detail::ipow_checked(q, uint32_t(m), uint64_t(1) << 28);
    if (n > (uint64_t(1) << 24)) throw std::invalid_argument("linear_mds: code too large");
    std::vector<uint16_t> words;
    words.reserve(size_t(n) * d);
    std::vector<Field::elem> coef(m, 0);
    for (uint64_t it = 0; it < n; ++it) {
        for (int j = 0; j < d; ++j) {
            Field::elem acc = 0;
            for (int i = 0; i < m; ++i)
                acc = F.add(acc, F.mul(coef[i], gen[size_t(i) * d + j]));
            words.push_back(uint16_t(acc));
        }
        for (int i = m - 1; i >= 0; --i) {
            if (++coef[i] < q) break;
            coef[i] = 0;
        }
    }
    Code c = make_code(d, int(q), rho, std::move(words));
    bool prime_coeffs = true;
    for (uint32_t g : gen) prime_coeffs = prime_coeffs && g < p;
    c.linear = Code::LinearForm{p, F.k(), prime_coeffs, std::move(gen)};
    return c;
}

// Drop one coordinate; distance rho >= 3 keeps the words distinct.
inline Code project(const Code& c, int drop) {
    if (c.rho < 3) throw std::invalid_argument("project: requires rho >= 3");
    if (drop < 0 || drop >= c.d) throw std::invalid_argument("project: bad coordinate");
    std::vector<uint16_t> words;
    words.reserve(c.size() * (c.d - 1));
    for (size_t i = 0; i < c.size(); ++i) {
        auto w = c.word(i);
        for (int j = 0; j < c.d; ++j)
            if (j != drop) words.push_back(w[j]);
    }
    Code out = make_code(c.d - 1, c.q, c.rho - 1, std::move(words));
    if (c.linear) {
        Code::LinearForm lf = *c.linear;
        std::vector<uint32_t> g;
        for (int i = 0; i < c.m(); ++i)
            for (int j = 0; j < c.d; ++j)
                if (j != drop) g.push_back(lf.gen[size_t(i) * c.d + j]);
        lf.gen = std::move(g);
        out.linear = std::move(lf);
    }
    return out;
}

struct ExtendResult {
    Code mprime; // {(x,y,f(x,y),g(x,y))}, distance 3
    Code c;      // {(x,y,u,v) : phi(u,v) = h(x,y)}, distance 2, mprime inside
    LatinHypercube phi;
};

// phi(f(x,y),g(x,y)) = h(x,y); well defined exactly when f,g,h are
// pairwise orthogonal latin squares.
inline ExtendResult extend_to_distance2(const LatinHypercube& f, const LatinHypercube& g,
                                        const LatinHypercube& h) {
    const int n = f.q;
    if (f.d0 != 2 || g.d0 != 2 || h.d0 != 2 || g.q != n || h.q != n)
        throw std::invalid_argument("extend_to_distance2: need three squares of one order");
    LatinHypercube phi = make_square(n);
    std::vector<char> set(size_t(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = f.at2(x, y), b = g.at2(x, y), cval = h.at2(x, y);
            size_t pos = size_t(a) * n + b;
            if (set[pos] && phi.cells[pos] != cval)
                throw std::invalid_argument("extend_to_distance2: phi collision at (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
            phi.cells[pos] = uint16_t(cval);
            set[pos] = 1;
        }
    for (char s : set)
        if (!s) throw std::invalid_argument("extend_to_distance2: f,g not orthogonal");
    if (Report r = verify_latin(phi); !r)
        throw std::invalid_argument("extend_to_distance2: phi not a quasigroup: " + r.detail);

    std::vector<uint16_t> mw, cw;
    mw.reserve(size_t(n) * n * 4);
    cw.reserve(size_t(n) * n * n * 4);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            mw.insert(mw.end(), {uint16_t(x), uint16_t(y), f.at2(x, y), g.at2(x, y)});
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (phi.at2(u, v) == h.at2(x, y))
                        cw.insert(cw.end(), {uint16_t(x), uint16_t(y), uint16_t(u), uint16_t(v)});
        }
    return ExtendResult{make_code(4, n, 3, std::move(mw)), make_code(4, n, 2, std::move(cw)),
                        std::move(phi)};
}

// MDS code with arguments in the first s coordinates <-> strongly
// orthogonal system of t = d-s s-ary functions.
inline OrthogonalSystem to_orthogonal_system(const Code& c, int s) {
    if (s != c.m())
        throw std::invalid_argument("to_orthogonal_system: s must equal d-rho+1");
    const int t = c.d - s, q = c.q;
    size_t space = 1;
    for (int i = 0; i < s; ++i) space *= q;
    OrthogonalSystem sys{s, q, true, std::vector<std::vector<uint16_t>>(
                                         size_t(t), std::vector<uint16_t>(space, 0))};
    std::vector<char> filled(space, 0);
    for (size_t w = 0; w < c.size(); ++w) {
        auto ww = c.word(w);
        size_t r = 0;
        for (int i = 0; i < s; ++i) r = r * q + ww[i];
        if (filled[r]) throw std::invalid_argument("to_orthogonal_system: prefix collision");
        filled[r] = 1;
        for (int j = 0; j < t; ++j) sys.funcs[j][r] = ww[s + j];
    }
    for (char fl : filled)
        if (!fl) throw std::invalid_argument("to_orthogonal_system: missing prefix");
    return sys;
}

inline Code from_orthogonal_system(const OrthogonalSystem& sys) {
    const int s = sys.s, t = sys.t(), q = sys.q, d = s + t;
    size_t space = 1;
    for (int i = 0; i < s; ++i) space *= q;
    std::vector<uint16_t> words;
    words.reserve(space * d);
    std::vector<int> x(s, 0);
    for (size_t r = 0; r < space; ++r) {
        for (int i = 0; i < s; ++i) words.push_back(uint16_t(x[i]));
        for (int j = 0; j < t; ++j) words.push_back(sys.funcs[j][r]);
        for (int i = s - 1; i >= 0; --i) {
            if (++x[i] < q) break;
            x[i] = 0;
        }
    }
    return make_code(d, q, d - s + 1, std::move(words));
}

// Order bound for proper subcodes: rho <= l <= q/rho (only meaningful
// for d > rho >= 3).
inline bool subcode_order_admissible(int q, int rho, int d, int l) {
    if (rho < 3 || d <= rho)
        throw std::invalid_argument("subcode_order_admissible: need d > rho >= 3");
    return l >= rho && l * rho <= q;
}

// Intersection of a code with a product of equal-size coordinate
// alphabets A_1 x ... x A_d; holds global-symbol words plus the
// alphabets so the induced order-l code can be checked on its own.
struct Subcode {
    int d = 0;
    int l = 0;
    std::vector<std::vector<uint16_t>> alphabets; // sorted, one per coordinate
    std::vector<uint16_t> words;                  // flat, global symbols, sorted

    size_t size() const { return d ? words.size() / size_t(d) : 0; }

    // relabel through the alphabets onto [0,l)
    Code localized(int rho) const {
        std::vector<uint16_t> lw(words.size());
        for (size_t i = 0; i < words.size(); ++i) {
            int coord = int(i % d);
            const auto& a = alphabets[coord];
            auto it = std::lower_bound(a.begin(), a.end(), words[i]);
            if (it == a.end() || *it != words[i])
                throw std::logic_error("Subcode: word outside alphabets");
            lw[i] = uint16_t(it - a.begin());
        }
        return make_code(d, l, rho, std::move(lw));
    }
};

// All parent words lying inside the alphabet box.
inline Subcode induce_subcode(const Code& parent, std::vector<std::vector<uint16_t>> alphabets) {
    if (int(alphabets.size()) != parent.d)
        throw std::invalid_argument("induce_subcode: need one alphabet per coordinate");
    int l = int(alphabets[0].size());
    for (auto& a : alphabets) {
        std::sort(a.begin(), a.end());
        if (int(a.size()) != l) throw std::invalid_argument("induce_subcode: unequal alphabets");
    }
    Subcode s{parent.d, l, std::move(alphabets), {}};
    for (size_t w = 0; w < parent.size(); ++w) {
        auto ww = parent.word(w);
        bool in = true;
        for (int j = 0; j < parent.d && in; ++j)
            in = std::binary_search(s.alphabets[j].begin(), s.alphabets[j].end(), ww[j]);
        if (in) s.words.insert(s.words.end(), ww.begin(), ww.end());
    }
    return s; // parent sorted => induced words sorted
}

} // namespace mdskit

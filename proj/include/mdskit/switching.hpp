#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bignum.hpp"
#include "gf.hpp"
#include "mds.hpp"

namespace mdskit {

// Line subcode: code ∩ (L(a_1,v) x ... x L(a_d,v)) for an anchor word a
// and direction v.  For a GF(p)-linear code this always has p^m words.
struct LineComponent {
    Subcode sub;
    std::vector<uint16_t> anchor;
    Field::elem dir = 0;
};

inline LineComponent line_subcode(const Field& F, const Code& code,
                                  std::span<const uint16_t> anchor, Field::elem v) {
    if (!code.linear || !code.linear->prime_coeffs)
        throw std::invalid_argument("line_subcode: code must be GF(p)-linear with prime-subfield form");
    if (v == 0) throw std::invalid_argument("line_subcode: v = 0");
    if (!code.contains(anchor)) throw std::invalid_argument("line_subcode: anchor not in code");
    std::vector<std::vector<uint16_t>> alpha(code.d);
    for (int j = 0; j < code.d; ++j) {
        auto pts = F.line(anchor[j], v);
        alpha[j].assign(pts.begin(), pts.end());
    }
    Subcode sub = induce_subcode(code, std::move(alpha));
    uint64_t want = 1;
    for (int i = 0; i < code.m(); ++i) want *= F.p();
    if (sub.size() != want)
        throw std::logic_error("line_subcode: expected p^m words, got " +
                               std::to_string(sub.size()));
    return LineComponent{std::move(sub), {anchor.begin(), anchor.end()}, v};
}

namespace detail {
inline bool words_intersect(const Subcode& a, const Subcode& b) {
    // both word lists sorted; merge scan over d-chunks
    const int d = a.d;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto wa = std::span<const uint16_t>(a.words.data() + i * d, size_t(d));
        auto wb = std::span<const uint16_t>(b.words.data() + j * d, size_t(d));
        if (std::equal(wa.begin(), wa.end(), wb.begin(), wb.end())) return true;
        if (std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end()))
            ++i;
        else
            ++j;
    }
    return false;
}
} // namespace detail

inline bool components_disjoint(const std::vector<LineComponent>& comps) {
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = i + 1; j < comps.size(); ++j)
            if (detail::words_intersect(comps[i].sub, comps[j].sub)) return false;
    return true;
}

// Type-(I) switching: replace the component by its translate
// C1 + (alpha*v, 0, ..., 0).  alpha = 0 returns the input unchanged.
inline Code switch_type1(const Field& F, const Code& code, const LineComponent& comp,
                         uint32_t alpha) {
    if (alpha >= F.p()) throw std::invalid_argument("switch_type1: alpha out of GF(p)");
    for (size_t i = 0; i < comp.sub.size(); ++i) {
        auto w = std::span<const uint16_t>(comp.sub.words.data() + i * comp.sub.d,
                                           size_t(comp.sub.d));
        if (!code.contains(w))
            throw std::invalid_argument("switch_type1: component is not a subcode of the code");
    }
    if (alpha == 0) return code;
    Field::elem delta = F.scalar(alpha, comp.dir);
    std::vector<uint16_t> words = code.words;
    const int d = code.d;
    // locate each component word by binary search and shift coordinate 0
    for (size_t i = 0; i < comp.sub.size(); ++i) {
        const uint16_t* cw = comp.sub.words.data() + i * d;
        size_t lo = 0, hi = code.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            const uint16_t* ww = code.words.data() + mid * d;
            if (std::lexicographical_compare(ww, ww + d, cw, cw + d))
                lo = mid + 1;
            else
                hi = mid;
        }
        words[lo * d] = uint16_t(F.add(words[lo * d], delta));
    }
    return make_code(d, code.q, code.rho, std::move(words));
}

// Apply one alpha per component in a single pass (components disjoint).
inline Code apply_switch_plan(const Field& F, const Code& code,
                              const std::vector<LineComponent>& comps,
                              std::span<const uint32_t> alphas) {
    if (alphas.size() != comps.size())
        throw std::invalid_argument("apply_switch_plan: one alpha per component");
    Code cur = code;
    for (size_t i = 0; i < comps.size(); ++i) cur = switch_type1(F, cur, comps[i], alphas[i]);
    return cur;
}

// General component exchange: remove the words of `out` (which must all
// lie in the code) and insert `in_words` (same box, same count, MDS when
// localized).  Covers switches that are not coordinate translations,
// e.g. relabeling one coordinate of a component by an affine map.
inline Code switch_exchange(const Code& code, const Subcode& out,
                            const std::vector<uint16_t>& in_words) {
    if (in_words.size() != out.words.size())
        throw std::invalid_argument("switch_exchange: replacement must have the same order");
    const int d = code.d;
    std::vector<uint16_t> words;
    words.reserve(code.words.size());
    size_t removed = 0;
    for (size_t i = 0; i < code.size(); ++i) {
        auto w = code.word(i);
        bool drop = false;
        for (size_t j = 0; j < out.size() && !drop; ++j)
            drop = std::equal(w.begin(), w.end(), out.words.begin() + j * d);
        if (drop)
            ++removed;
        else
            words.insert(words.end(), w.begin(), w.end());
    }
    if (removed != out.size())
        throw std::invalid_argument("switch_exchange: component not contained in code");
    words.insert(words.end(), in_words.begin(), in_words.end());
    return make_code(d, code.q, code.rho, std::move(words));
}

// Proof-quantity calculator:
//   t = floor((1-eps) * p^{k(1+m)-1} / p^{2m+k})
//   w = eps * p^{k(1+m)-1} / p^m
//   ln-bound = t ln p + t ln w - ln t!
// Exact integer t via dyadic decomposition of (1-eps); w kept as an
// exact dyadic (w_num / 2^w_shift) plus floating-point views.
struct LowerBound {
    int m = 0;
    BigUint t;
    bool vacuous = true;
    BigUint w_num;
    unsigned w_shift = 0;
    double w = 0, ln_w = 0, ln_bound = 0;
};

namespace detail {
// exact dyadic split of a double in (0,1): x = mant / 2^shift
inline void dyadic(double x, uint64_t& mant, unsigned& shift) {
    int ex;
    double fr = std::frexp(x, &ex); // x = fr * 2^ex, fr in [0.5,1)
    mant = uint64_t(fr * 9007199254740992.0); // fr * 2^53, exact
    shift = unsigned(53 - ex);
}
} // namespace detail

inline LowerBound lower_bound(uint32_t p, uint32_t k, int d, int rho, double eps) {
    if (!detail::is_prime_u32(p)) throw std::invalid_argument("lower_bound: p not prime");
    if (k < 1 || d < 2 || rho < 2 || rho > d)
        throw std::invalid_argument("lower_bound: need k >= 1, 2 <= rho <= d");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("lower_bound: eps in (0,1)");
    LowerBound r;
    r.m = d - rho + 1;
    const int64_t X = int64_t(k) * (1 + r.m) - 1;
    const int64_t t_exp = X - (2 * r.m + int64_t(k));
    const int64_t w_exp = X - r.m; // = (k-1)(m+1) >= 0

    if (t_exp >= 0) {
        uint64_t mant;
        unsigned shift;
        detail::dyadic(1.0 - eps, mant, shift);
        BigUint t(mant);
        t.mul_pow(p, t_exp);
        t.shr(shift);
        r.t = t;
    }
    r.vacuous = r.t.is_zero();

    uint64_t emant;
    unsigned eshift;
    detail::dyadic(eps, emant, eshift);
    r.w_num = BigUint(emant);
    r.w_num.mul_pow(p, w_exp);
    r.w_shift = eshift;

    const double lnp = std::log(double(p));
    r.ln_w = std::log(eps) + double(w_exp) * lnp;
    r.w = std::ldexp(r.w_num.to_double(), -int(r.w_shift));
    if (!r.vacuous) {
        double td = r.t.to_double();
        r.ln_bound = td * lnp + td * r.ln_w - std::lgamma(td + 1.0);
    }
    return r;
}

struct SelectResult {
    std::vector<LineComponent> components;
    bool reached_budget = false;
    uint64_t candidates_tried = 0;
    BigUint theorem_t; // guaranteed count from the bound formula at this eps
};

// Greedy disjoint selection over a seeded permutation of
// (anchor, direction-representative) pairs.  `eps` only feeds the
// reported theorem guarantee; the greedy search itself is best-effort
// and may exceed it.
inline SelectResult select_disjoint(const Field& F, const Code& code, size_t budget,
                                    double eps, uint64_t seed) {
    if (!code.linear || !code.linear->prime_coeffs)
        throw std::invalid_argument("select_disjoint: code must be GF(p)-linear");
    auto reps = F.direction_reps();
    std::vector<std::pair<uint32_t, uint32_t>> cand; // (word index, rep index)
    cand.reserve(code.size() * reps.size());
    for (uint32_t w = 0; w < code.size(); ++w)
        for (uint32_t r = 0; r < reps.size(); ++r) cand.emplace_back(w, r);
    std::mt19937_64 rng(seed);
    std::shuffle(cand.begin(), cand.end(), rng);

    SelectResult res;
    std::vector<char> used(code.size(), 0);
    const int d = code.d;
    for (auto [wi, ri] : cand) {
        if (res.components.size() >= budget) break;
        ++res.candidates_tried;
        LineComponent lc = line_subcode(F, code, code.word(wi), reps[ri]);
        bool clash = false;
        std::vector<size_t> idxs(lc.sub.size());
        for (size_t i = 0; i < lc.sub.size() && !clash; ++i) {
            const uint16_t* cw = lc.sub.words.data() + i * d;
            size_t lo = 0, hi = code.size();
            while (lo < hi) {
                size_t mid = (lo + hi) / 2;
                const uint16_t* ww = code.words.data() + mid * d;
                if (std::lexicographical_compare(ww, ww + d, cw, cw + d))
                    lo = mid + 1;
                else
                    hi = mid;
            }
            idxs[i] = lo;
            clash = used[lo];
        }
        if (clash) continue;
        for (size_t ix : idxs) used[ix] = 1;
        res.components.push_back(std::move(lc));
    }
    res.reached_budget = res.components.size() >= budget;
    if (eps > 0.0 && eps < 1.0)
        res.theorem_t = lower_bound(F.p(), F.k(), code.d, code.rho, eps).t;
    return res;
}

// All alpha-assignments (excluding all-zero) in a seeded order.
inline std::vector<std::pair<std::vector<uint32_t>, Code>>
enumerate_switched(const Field& F, const Code& code, const std::vector<LineComponent>& comps,
                   uint64_t count, uint64_t seed) {
    if (!components_disjoint(comps))
        throw std::invalid_argument("enumerate_switched: components must be disjoint");
    const uint64_t p = F.p();
    uint64_t total = 1;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (total > (uint64_t(1) << 40) / p)
            throw std::invalid_argument("enumerate_switched: assignment space too large");
        total *= p;
    }
    total -= 1; // exclude the identity assignment
    if (count > total)
        throw std::invalid_argument("enumerate_switched: count exceeds p^t - 1 = " +
                                    std::to_string(total));
    std::vector<uint64_t> order(total);
    for (uint64_t i = 0; i < total; ++i) order[i] = i + 1;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::pair<std::vector<uint32_t>, Code>> out;
    out.reserve(count);
    for (uint64_t n = 0; n < count; ++n) {
        uint64_t a = order[n];
        std::vector<uint32_t> alphas(comps.size());
        for (size_t i = 0; i < comps.size(); ++i) {
            alphas[i] = uint32_t(a % p);
            a /= p;
        }
        out.emplace_back(alphas, apply_switch_plan(F, code, comps, alphas));
    }
    return out;
}

} // namespace mdskit

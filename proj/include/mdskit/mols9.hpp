#pragma once

// Worked example of order 9: a pair of orthogonal latin squares over
// GF(9) turned into a second pair by exchanging two disjoint line
// components (one per value coordinate).  The four squares are embedded
// verbatim; the components and the relabeling maps are recovered by
// search in build_mols9_fixture() and every step is asserted, so simply
// constructing the fixture is the test.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"
#include "latin.hpp"
#include "mds.hpp"
#include "switching.hpp"

namespace mdskit {

namespace detail {

inline constexpr int kMols9[4][9][9] = {
    // first pair, square 1
    {{0, 1, 2, 3, 4, 5, 6, 7, 8},
     {1, 2, 0, 4, 5, 3, 7, 8, 6},
     {2, 0, 1, 5, 3, 4, 8, 6, 7},
     {3, 4, 5, 6, 7, 8, 0, 1, 2},
     {4, 5, 3, 7, 8, 6, 1, 2, 0},
     {5, 3, 4, 8, 6, 7, 2, 0, 1},
     {6, 7, 8, 0, 1, 2, 3, 4, 5},
     {7, 8, 6, 1, 2, 0, 4, 5, 3},
     {8, 6, 7, 2, 0, 1, 5, 3, 4}},
    // first pair, square 2
    {{0, 1, 2, 3, 4, 5, 6, 7, 8},
     {2, 0, 1, 5, 3, 4, 8, 6, 7},
     {1, 2, 0, 4, 5, 3, 7, 8, 6},
     {6, 7, 8, 0, 1, 2, 3, 4, 5},
     {8, 6, 7, 2, 0, 1, 5, 3, 4},
     {7, 8, 6, 1, 2, 0, 4, 5, 3},
     {3, 4, 5, 6, 7, 8, 0, 1, 2},
     {5, 3, 4, 8, 6, 7, 2, 0, 1},
     {4, 5, 3, 7, 8, 6, 1, 2, 0}},
    // second pair, square 1
    {{0, 1, 2, 3, 4, 5, 6, 7, 8},
     {1, 2, 0, 4, 5, 7, 3, 8, 6},
     {2, 0, 1, 5, 3, 4, 8, 6, 7},
     {3, 4, 5, 6, 7, 8, 0, 1, 2},
     {4, 5, 3, 7, 8, 6, 1, 2, 0},
     {5, 7, 4, 8, 6, 3, 2, 0, 1},
     {6, 3, 8, 0, 1, 2, 7, 4, 5},
     {7, 8, 6, 1, 2, 0, 4, 5, 3},
     {8, 6, 7, 2, 0, 1, 5, 3, 4}},
    // second pair, square 2
    {{0, 1, 2, 3, 8, 5, 6, 7, 4},
     {2, 0, 1, 5, 3, 4, 8, 6, 7},
     {1, 2, 0, 4, 5, 3, 7, 8, 6},
     {6, 7, 8, 0, 1, 2, 3, 4, 5},
     {4, 6, 7, 2, 0, 1, 5, 3, 8},
     {7, 8, 6, 1, 2, 0, 4, 5, 3},
     {3, 4, 5, 6, 7, 8, 0, 1, 2},
     {5, 3, 4, 8, 6, 7, 2, 0, 1},
     {8, 5, 3, 7, 4, 6, 1, 2, 0}}};

inline Code mols_pair_code(const LatinHypercube& l1, const LatinHypercube& l2) {
    const int q = l1.q;
    std::vector<uint16_t> words;
    words.reserve(size_t(q) * q * 4);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            uint16_t w[4] = {uint16_t(x), uint16_t(y), l1.at2(x, y), l2.at2(x, y)};
            words.insert(words.end(), w, w + 4);
        }
    return make_code(4, q, 3, std::move(words));
}

// z -> alpha*z + beta through two prescribed value pairs
inline std::pair<Field::elem, Field::elem> affine_through(const Field& F, Field::elem z0,
                                                          Field::elem w0, Field::elem z1,
                                                          Field::elem w1) {
    Field::elem alpha = F.mul(F.sub(w0, w1), F.inv(F.sub(z0, z1)));
    Field::elem beta = F.sub(w0, F.mul(alpha, z0));
    return {alpha, beta};
}

} // namespace detail

inline LatinHypercube mols9_square(int which) {
    if (which < 0 || which > 3) throw std::invalid_argument("mols9_square: index 0..3");
    LatinHypercube L = make_square(9);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) L.at2(x, y) = uint16_t(detail::kMols9[which][x][y]);
    return L;
}

struct Mols9Fixture {
    Field f{3, 2};
    LatinHypercube a1, a2, b1, b2;
    Code ca, cb;                // (x, y, L1(x,y), L2(x,y)) codes, distance 2
    LineComponent first, second; // recovered components of ca
    int first_coord = 0, second_coord = 0;
    Field::elem first_alpha = 0, first_beta = 0;   // relabel on first_coord
    Field::elem second_alpha = 0, second_beta = 0; // relabel on second_coord
    Code switched;              // ca after both exchanges; equals cb
};

namespace detail {

// Recover the unique line component of `code` whose cell box contains
// every cell where `sa` and `sb` disagree, plus the affine relabel on
// coordinate `cd` that turns the component's sa-values into sb-values.
inline void recover_mols9_component(const Field& F, const Code& code, const LatinHypercube& sa,
                                    const LatinHypercube& sb, int cd, LineComponent& comp_out,
                                    Field::elem& alpha_out, Field::elem& beta_out) {
    const int q = sa.q;
    std::vector<std::pair<int, int>> diff;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            if (sa.at2(x, y) != sb.at2(x, y)) diff.emplace_back(x, y);
    if (diff.empty()) throw std::logic_error("mols9: squares identical, nothing to recover");

    auto reps = F.direction_reps();
    std::vector<LineComponent> hits;
    for (size_t wi = 0; wi < code.size(); ++wi) {
        for (Field::elem v : reps) {
            LineComponent comp = line_subcode(F, code, code.word(wi), v);
            bool covers = true;
            for (auto [x, y] : diff) {
                bool in = false;
                for (size_t j = 0; j < comp.sub.size() && !in; ++j) {
                    const uint16_t* w = comp.sub.words.data() + j * 4;
                    in = w[0] == x && w[1] == y;
                }
                if (!in) { covers = false; break; }
            }
            if (covers) hits.push_back(std::move(comp));
        }
    }
    if (hits.empty()) throw std::logic_error("mols9: no component covers the diff");
    for (size_t i = 1; i < hits.size(); ++i)
        if (hits[i].sub.words != hits[0].sub.words)
            throw std::logic_error("mols9: component recovery ambiguous");
    // canonical anchor: the component's least word
    LineComponent comp = std::move(hits[0]);
    comp.anchor.assign(comp.sub.words.begin(), comp.sub.words.begin() + 4);

    // relabel map on coordinate cd, read off the component's cells
    std::vector<int> map(size_t(q), -1);
    for (size_t j = 0; j < comp.sub.size(); ++j) {
        const uint16_t* w = comp.sub.words.data() + j * 4;
        int z = sa.at2(w[0], w[1]), zb = sb.at2(w[0], w[1]);
        if (z != w[cd]) throw std::logic_error("mols9: component value mismatch");
        if (map[z] != -1 && map[z] != zb) throw std::logic_error("mols9: relabel not a function");
        map[z] = zb;
    }
    std::vector<int> dom;
    for (int z = 0; z < q; ++z)
        if (map[z] != -1) dom.push_back(z);
    if (dom.size() != F.p()) throw std::logic_error("mols9: relabel domain is not a line");
    auto [alpha, beta] =
        affine_through(F, Field::elem(dom[0]), Field::elem(map[dom[0]]), Field::elem(dom[1]),
                       Field::elem(map[dom[1]]));
    for (int z : dom)
        if (F.add(F.mul(alpha, Field::elem(z)), beta) != Field::elem(map[z]))
            throw std::logic_error("mols9: relabel is not affine");
    comp_out = std::move(comp);
    alpha_out = alpha;
    beta_out = beta;
}

inline Code apply_mols9_exchange(const Field& F, const Code& code, const LineComponent& comp,
                                 int cd, Field::elem alpha, Field::elem beta) {
    std::vector<uint16_t> in_words = comp.sub.words;
    for (size_t j = 0; j < comp.sub.size(); ++j) {
        uint16_t* w = in_words.data() + j * 4;
        w[cd] = uint16_t(F.add(F.mul(alpha, w[cd]), beta));
    }
    return switch_exchange(code, comp.sub, in_words);
}

} // namespace detail

inline Mols9Fixture build_mols9_fixture() {
    Mols9Fixture fx;
    fx.a1 = mols9_square(0);
    fx.a2 = mols9_square(1);
    fx.b1 = mols9_square(2);
    fx.b2 = mols9_square(3);
    for (const auto* L : {&fx.a1, &fx.a2, &fx.b1, &fx.b2})
        if (Report r = verify_latin(*L); !r)
            throw std::logic_error("mols9: square not latin: " + r.detail);
    // pairwise orthogonality, directly
    for (auto [p1, p2] : {std::pair{&fx.a1, &fx.a2}, std::pair{&fx.b1, &fx.b2}}) {
        std::vector<char> seen(81, 0);
        for (int x = 0; x < 9; ++x)
            for (int y = 0; y < 9; ++y) {
                int id = p1->at2(x, y) * 9 + p2->at2(x, y);
                if (seen[id]++) throw std::logic_error("mols9: pair not orthogonal");
            }
    }
    fx.ca = detail::mols_pair_code(fx.a1, fx.a2);
    fx.cb = detail::mols_pair_code(fx.b1, fx.b2);
    if (Report r = verify_mds(fx.ca); !r) throw std::logic_error("mols9: ca: " + r.detail);
    if (Report r = verify_mds(fx.cb); !r) throw std::logic_error("mols9: cb: " + r.detail);

    // ca is GF(3)-linear: rows read off the words through (1,0) and (0,1)
    Code::LinearForm lf;
    lf.p = 3;
    lf.k = 2;
    lf.gen = {1, 0, uint32_t(fx.a1.at2(1, 0)), uint32_t(fx.a2.at2(1, 0)),
              0, 1, uint32_t(fx.a1.at2(0, 1)), uint32_t(fx.a2.at2(0, 1))};
    lf.prime_coeffs = true;
    for (uint32_t g : lf.gen)
        if (g >= 3) lf.prime_coeffs = false;
    if (!lf.prime_coeffs) throw std::logic_error("mols9: generator not over the prime subfield");
    {
        std::vector<uint16_t> span_words;
        for (Field::elem c0 = 0; c0 < 9; ++c0)
            for (Field::elem c1 = 0; c1 < 9; ++c1)
                for (int j = 0; j < 4; ++j)
                    span_words.push_back(uint16_t(fx.f.add(fx.f.mul(c0, lf.gen[j]),
                                                           fx.f.mul(c1, lf.gen[4 + j]))));
        canonicalize_words(span_words, 4);
        if (span_words != fx.ca.words) throw std::logic_error("mols9: ca is not the row span");
    }
    fx.ca.linear = lf;

    fx.first_coord = 2;  // square 1's value coordinate
    fx.second_coord = 3; // square 2's value coordinate
    detail::recover_mols9_component(fx.f, fx.ca, fx.a1, fx.b1, fx.first_coord, fx.first,
                                    fx.first_alpha, fx.first_beta);
    detail::recover_mols9_component(fx.f, fx.ca, fx.a2, fx.b2, fx.second_coord, fx.second,
                                    fx.second_alpha, fx.second_beta);
    if (detail::words_intersect(fx.first.sub, fx.second.sub))
        throw std::logic_error("mols9: components intersect");

    Code cur = detail::apply_mols9_exchange(fx.f, fx.ca, fx.first, fx.first_coord, fx.first_alpha,
                                            fx.first_beta);
    cur = detail::apply_mols9_exchange(fx.f, cur, fx.second, fx.second_coord, fx.second_alpha,
                                       fx.second_beta);
    if (Report r = verify_mds(cur); !r) throw std::logic_error("mols9: switched: " + r.detail);
    if (!(cur == fx.cb)) throw std::logic_error("mols9: switched code differs from second pair");
    fx.switched = std::move(cur);
    return fx;
}

} // namespace mdskit

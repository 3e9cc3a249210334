#include <catch2/catch_amalgamated.hpp>

#include "mdskit/designs.hpp"
#include "mdskit/mds.hpp"

#include <random>
#include <set>

using namespace mdskit;

TEST_CASE("linear MDS constructions verify with exact cardinality") {
    struct Case { uint32_t p, k; int d, rho; };
    for (auto [p, k, d, rho] : {Case{3, 2, 3, 2}, {5, 1, 6, 4}, {7, 1, 8, 4}, {2, 4, 8, 7},
                                {2, 2, 5, 5}, {2, 1, 3, 2}, {3, 1, 4, 4}, {5, 1, 5, 3},
                                {13, 1, 8, 6}, {3, 2, 4, 3}, {2, 3, 9, 8}}) {
        Field F(p, k);
        Code c = linear_mds(F, d, rho);
        CAPTURE(p, k, d, rho);
        REQUIRE(verify_mds(c).ok);
        uint64_t want = 1;
        for (int i = 0; i < d - rho + 1; ++i) want *= F.order();
        CHECK(c.size() == want);
        REQUIRE(c.linear.has_value());
        if (c.size() <= 2000) CHECK(min_distance(c) == rho);
    }
    Field f4(2, 2);
    CHECK_THROWS_AS(linear_mds(f4, 8, 3), std::invalid_argument); // d > q+1, rho not edge case
}

TEST_CASE("linear codes are closed under addition in the prime subfield sense") {
    Field F(3, 2);
    Code c = linear_mds(F, 3, 2);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) {
            auto a = c.word(i), b = c.word(j);
            std::vector<uint16_t> s(c.d);
            for (int t = 0; t < c.d; ++t) s[t] = uint16_t(F.add(a[t], b[t]));
            CHECK(c.contains(s));
        }
}

TEST_CASE("verify_mds rejects corruption") {
    Field F(3, 2);
    Code c = linear_mds(F, 3, 2);
    Code bad = c;
    bad.words[2] = uint16_t((bad.words[2] + 1) % 9); // collide two words in a projection
    Report r = verify_mds(bad);
    CHECK(!r.ok);
    CHECK(r.detail.find("kind=") != std::string::npos);

    bad = c;
    bad.words.resize(bad.words.size() - size_t(bad.d)); // cardinality off
    CHECK(!verify_mds(bad).ok);
}

TEST_CASE("make_code sorts, deduplicates and detects duplicates") {
    std::vector<uint16_t> w = {1, 0, 0, 1};
    Code c = make_code(2, 2, 2, w);
    CHECK(c.word(0)[0] == 0);
    CHECK(c.word(1)[0] == 1);
    std::vector<uint16_t> dup = {0, 1, 0, 1};
    CHECK_THROWS_AS(make_code(2, 2, 2, dup), std::invalid_argument);
}

TEST_CASE("projection reduces distance by one and stays MDS") {
    Field F(5, 1);
    Code c = linear_mds(F, 6, 4);
    for (int drop = 0; drop < 6; ++drop) {
        Code p = project(c, drop);
        CHECK(p.d == 5);
        CHECK(p.rho == 3);
        CHECK(p.size() == c.size()); // m = d - rho + 1 is unchanged
        CHECK(verify_mds(p).ok);
        REQUIRE(p.linear.has_value());
        // projected generator is the original with one column dropped
        CHECK(p.linear->gen.size() == size_t(c.m()) * 5);
    }
    Code c2 = linear_mds(F, 6, 2);
    CHECK_THROWS_AS(project(c2, 0), std::invalid_argument); // rho < 3
    CHECK_THROWS_AS(project(c, 6), std::invalid_argument);  // bad coordinate
}

TEST_CASE("orthogonal system round-trip is the identity on words") {
    Field F(5, 1);
    Code c = linear_mds(F, 5, 4); // m=2: 3 MOLS of order 5
    OrthogonalSystem sys = to_orthogonal_system(c, 2);
    CHECK(sys.t() == 3);
    CHECK(check_orthogonal(sys).ok);
    Code back = from_orthogonal_system(sys);
    back.rho = c.rho;
    CHECK(back.words == c.words);

    // strong system: s < d - 1 windows
    Code c6 = linear_mds(F, 6, 4);
    OrthogonalSystem s3 = to_orthogonal_system(c6, 3);
    CHECK(s3.strong);
    CHECK(check_orthogonal(s3).ok);
    CHECK_THROWS_AS(to_orthogonal_system(c6, 2), std::invalid_argument); // s != d-rho+1... m mismatch
}

TEST_CASE("latin square as MDS(1,3,q) and back") {
    Field F(7, 1);
    Code c = linear_mds(F, 3, 2);
    OrthogonalSystem sys = to_orthogonal_system(c, 2);
    CHECK(sys.t() == 1);
    LatinHypercube L{2, 7, sys.funcs[0]};
    CHECK(verify_latin(L).ok);
}

TEST_CASE("H-design view of codes") {
    // MDS(1,3,q) = latin square = H(3,q,3,2)
    Field F(2, 2);
    Code c = linear_mds(F, 3, 2);
    HDesign h = code_to_hdesign(c);
    CHECK(h.d == 3);
    CHECK(h.w == 3);
    CHECK(h.t == 2);
    CHECK(verify_hdesign(h).ok);

    // the length-8 distance-7 code over GF(16) is an H(8,16,8,2)
    Field f16(2, 4);
    Code c8 = linear_mds(f16, 8, 7);
    HDesign h8 = code_to_hdesign(c8);
    CHECK(h8.t == 2);
    CHECK(verify_hdesign(h8).ok);

    // corrupting one block breaks coverage
    HDesign bad = h;
    bad.blocks[1] = bad.blocks[3 + 1]; // word 1 has a different group-1 symbol
    REQUIRE(bad.blocks[1] != h.blocks[1]);
    CHECK(!verify_hdesign(bad).ok);
}

TEST_CASE("pairs of distance-7 length-8 words agree in at most one coordinate") {
    Field f16(2, 4);
    Code c = linear_mds(f16, 8, 7);
    REQUIRE(c.size() == 256);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) {
            auto a = c.word(i), b = c.word(j);
            int agree = 0;
            for (int t = 0; t < 8; ++t) agree += a[t] == b[t];
            CHECK(agree <= 1);
        }
}

TEST_CASE("subcode order admissibility matches the proposition") {
    CHECK(subcode_order_admissible(9, 3, 4, 3));
    CHECK(!subcode_order_admissible(9, 3, 4, 4));
    CHECK(!subcode_order_admissible(8, 3, 4, 2));
    CHECK(subcode_order_admissible(16, 4, 5, 4));
    CHECK(!subcode_order_admissible(16, 4, 5, 5));
    CHECK_THROWS_AS(subcode_order_admissible(9, 2, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(subcode_order_admissible(9, 3, 3, 3), std::invalid_argument);
}

TEST_CASE("induced subcodes localize to MDS codes on the sub-alphabets") {
    Field F(3, 2);
    Code c = linear_mds(F, 3, 2); // latin square of order 9 as a code
    // lines through 0 with direction 1 = the prime subfield {0,1,2}
    std::vector<uint16_t> line = {0, 1, 2};
    Subcode sc = induce_subcode(c, {line, line, line});
    CHECK(sc.l == 3);
    CHECK(sc.size() == 9); // 3^2 words: a latin subsquare of order 3
    Code local = sc.localized(2);
    CHECK(verify_mds(local).ok);
}

TEST_CASE("extend_to_distance2 embeds the graph code in a distance-2 code") {
    // three squares forming the codomain triple of a distance-3 graph code
    LatinHypercube f = cyclic_cube(5, 2), g = f, h = f;
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            g.at2(x, y) = uint16_t((x + 2 * y) % 5);
            h.at2(x, y) = uint16_t((x + 3 * y) % 5);
        }
    ExtendResult er = extend_to_distance2(f, g, h);
    CHECK(er.mprime.size() == 25);
    CHECK(er.c.size() == 125);
    CHECK(verify_mds(er.mprime).ok);
    CHECK(verify_mds(er.c).ok);
    CHECK(verify_latin(er.phi).ok);
    for (size_t i = 0; i < er.mprime.size(); ++i) CHECK(er.c.contains(er.mprime.word(i)));
}

TEST_CASE("min_distance caps the quadratic scan") {
    Field F(2, 2);
    Code c = linear_mds(F, 5, 5);
    CHECK(min_distance(c) == 5);
    Field f7(7, 1);
    Code big = linear_mds(f7, 8, 4); // 16807 words
    CHECK_THROWS_AS(min_distance(big), std::invalid_argument);
    CHECK(min_distance(big, 20000) == 4);
}

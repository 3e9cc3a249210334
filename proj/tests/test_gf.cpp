#include <catch2/catch_amalgamated.hpp>

#include "mdskit/gf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace mdskit;

TEST_CASE("prime fields behave as Z/p") {
    for (uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        Field f(p, 1);
        REQUIRE(f.order() == p);
        for (Field::elem a = 0; a < p; ++a)
            for (Field::elem b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.mul(a, b) == (a * b) % p);
            }
        for (Field::elem a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
        for (Field::elem a = 0; a < p; ++a) CHECK(f.add(a, f.neg(a)) == 0);
    }
}

TEST_CASE("default moduli are the lexicographically least irreducible monics") {
    CHECK(Field(2, 2).modulus() == 7);   // x^2 + x + 1
    CHECK(Field(3, 2).modulus() == 10);  // x^2 + 1
    CHECK(Field(2, 3).modulus() == 11);  // x^3 + x + 1
    CHECK(Field(2, 4).modulus() == 19);  // x^4 + x + 1
    CHECK(Field(5, 2).modulus() == 27);  // x^2 + 2
    CHECK(Field(3, 3).modulus() == 34);  // x^3 + 2x + 1
}

TEST_CASE("field constants encode as their constant digit") {
    Field f9(3, 2);
    // x * x = -1 in GF(9) with modulus x^2 + 1
    CHECK(f9.mul(3, 3) == 2);
    CHECK(f9.add(1, 2) == 0);
    CHECK(f9.add(3, 6) == 0); // x + 2x = 3x = 0
    Field f16(2, 4);
    // x^3 * x = x^4 = x + 1
    CHECK(f16.mul(8, 2) == 3);
}

TEST_CASE("group axioms on small extension fields") {
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
        Field f(p, k);
        uint32_t q = f.order();
        for (Field::elem a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (Field::elem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (Field::elem c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("pow matches repeated multiplication") {
    Field f(2, 4);
    for (Field::elem a = 1; a < 16; ++a) {
        Field::elem acc = 1;
        for (uint32_t e = 0; e < 20; ++e) {
            CHECK(f.pow(a, e) == acc);
            acc = f.mul(acc, a);
        }
        CHECK(f.pow(a, 15) == 1); // multiplicative group order
    }
}

TEST_CASE("scalar multiplies by a prime-subfield element") {
    Field f9(3, 2);
    for (Field::elem a = 0; a < 9; ++a) {
        CHECK(f9.scalar(0, a) == 0);
        CHECK(f9.scalar(1, a) == a);
        CHECK(f9.scalar(2, a) == f9.add(a, a));
    }
}

TEST_CASE("lines have p points and partition by translation") {
    Field f9(3, 2);
    for (Field::elem v = 1; v < 9; ++v) {
        auto ln = f9.line(0, v);
        REQUIRE(ln.size() == 3);
        CHECK(ln[0] == 0);
        // a line through a is the translate of the line through 0
        for (Field::elem a = 0; a < 9; ++a) {
            auto la = f9.line(a, v);
            for (size_t i = 0; i < 3; ++i) CHECK(la[i] == f9.add(a, ln[i]));
        }
    }
}

TEST_CASE("direction representatives cover all lines through zero exactly once") {
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{3, 2}, {2, 4}, {5, 2}}) {
        Field f(p, k);
        auto reps = f.direction_reps();
        CHECK(reps.size() == (f.order() - 1) / (p - 1));
        std::set<std::vector<Field::elem>> lines;
        for (auto r : reps) {
            auto ln = f.line(0, r);
            std::sort(ln.begin(), ln.end());
            CHECK(lines.insert(ln).second); // no repeated line
        }
        // every nonzero element lies on exactly one represented line
        std::map<Field::elem, int> hit;
        for (const auto& ln : lines)
            for (auto e : ln)
                if (e) hit[e]++;
        CHECK(hit.size() == f.order() - 1);
        for (auto [e, c] : hit) CHECK(c == 1);
    }
}

TEST_CASE("explicit modulus round-trips and bad moduli throw") {
    Field f(2, 3, 13); // x^3 + x^2 + 1, the other irreducible cubic
    CHECK(f.modulus() == 13);
    for (Field::elem a = 1; a < 8; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(Field(2, 3, 9), std::invalid_argument);  // x^3+1 reducible
    CHECK_THROWS_AS(Field(2, 3, 15), std::invalid_argument); // x^3+x^2+x+1 reducible
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);     // 4 not prime
    CHECK_THROWS_AS(Field(6, 2), std::invalid_argument);
}

TEST_CASE("digit extracts base-p coefficients") {
    Field f(3, 3);
    Field::elem e = 1 + 2 * 3 + 1 * 9; // coefficients (1,2,1)
    CHECK(f.digit(e, 0) == 1);
    CHECK(f.digit(e, 1) == 2);
    CHECK(f.digit(e, 2) == 1);
}

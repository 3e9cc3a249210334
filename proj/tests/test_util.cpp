#include <catch2/catch_amalgamated.hpp>

#include "mdskit/bignum.hpp"
#include "mdskit/coverage.hpp"
#include "mdskit/matching.hpp"
#include "mdskit/sqs.hpp"

#include <random>

using namespace mdskit;

TEST_CASE("BigUint decimal rendering and small arithmetic") {
    CHECK(BigUint().to_string() == "0");
    CHECK(BigUint(1).to_string() == "1");
    CHECK(BigUint(18446744073709551615ull).to_string() == "18446744073709551615");

    BigUint b(1);
    b.mul_pow(2, 64);
    CHECK(b.to_string() == "18446744073709551616");
    b.mul_u64(3);
    CHECK(b.to_string() == "55340232221128654848");
    b.shr(64);
    CHECK(b.to_string() == "3");

    // 2^128; and 2^128 mod 7 = 4 since 2^3 = 1 (mod 7)
    BigUint c(1);
    c.mul_pow(2, 128);
    CHECK(c.to_string() == "340282366920938463463374607431768211456");
    CHECK(c.divmod_u64(7) == 4);
    CHECK(c.to_string() == "48611766702991209066196372490252601636"); // floor(2^128/7)
}

TEST_CASE("BigUint divmod agrees with shift for powers of two") {
    BigUint a(1);
    a.mul_pow(2, 100);
    BigUint b = a;
    b.shr(10);
    BigUint c = a;
    for (int i = 0; i < 10; ++i) CHECK(c.divmod_u64(2) == 0);
    CHECK(b == c);
    CHECK(b.to_string() == "1237940039285380274899124224"); // 2^90
}

TEST_CASE("BigUint to_double and ln are consistent") {
    BigUint a(1);
    a.mul_pow(3, 30);
    CHECK(a.to_double() == Catch::Approx(std::pow(3.0, 30)).epsilon(1e-12));
    CHECK(a.ln() == Catch::Approx(30.0 * std::log(3.0)).epsilon(1e-12));
    BigUint big(1);
    big.mul_pow(7, 500); // far outside double range
    CHECK(big.ln() == Catch::Approx(500.0 * std::log(7.0)).epsilon(1e-12));
}

TEST_CASE("bipartite matching finds perfect matchings and respects blockers") {
    // complete bipartite graph
    std::vector<std::vector<int>> adj(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) adj[i].push_back(j);
    std::vector<int> ml, mr;
    CHECK(max_bipartite_matching(5, 5, adj, ml, mr) == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(ml[i] >= 0);
        CHECK(mr[ml[i]] == i);
    }

    // a star: only one left vertex can be matched
    std::vector<std::vector<int>> star(4);
    for (int i = 0; i < 4; ++i) star[i] = {0};
    CHECK(max_bipartite_matching(4, 1, star, ml, mr) == 1);

    // random graphs: matching size never exceeds min degree-cover bound
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        int nl = 1 + int(rng() % 8), nr = 1 + int(rng() % 8);
        std::vector<std::vector<int>> g(nl);
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nr; ++j)
                if (rng() % 2) g[i].push_back(j);
        int m = max_bipartite_matching(nl, nr, g, ml, mr);
        CHECK(m <= std::min(nl, nr));
        int used = 0;
        for (int j = 0; j < nr; ++j) used += mr[j] >= 0;
        CHECK(used == m);
    }
}

TEST_CASE("coverage map ranks all 3-subsets bijectively") {
    const int v = 12;
    CoverageMap cm(v, 3);
    std::vector<char> seen(CoverageMap::binom3(v), 0);
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c) {
                int s[3] = {a, b, c};
                uint64_t r = cm.rank(s);
                REQUIRE(r < seen.size());
                CHECK(!seen[r]);
                seen[r] = 1;
            }
    for (char s : seen) CHECK(s == 1);
}

TEST_CASE("coverage map counts block contributions exactly") {
    CoverageMap cm(8, 3);
    std::vector<int> blk = {0, 1, 2, 3};
    cm.add_block(blk);
    cm.add_block(blk);
    int total = 0, twos = 0;
    cm.for_each([&](std::span<const int> ids, uint32_t cnt) {
        (void)ids;
        if (cnt) ++total;
        if (cnt == 2) ++twos;
    });
    CHECK(total == 4);
    CHECK(twos == 4);
    CHECK_THROWS_AS(CoverageMap(8, 4), std::invalid_argument);
    int bad[3] = {1, 1, 2};
    CHECK_THROWS_AS(cm.rank(bad), std::invalid_argument);
}

TEST_CASE("audit reproduces the SQS(8) coverage histogram") {
    SQS s8 = boolean_sqs(3);
    std::vector<std::vector<int>> blocks;
    for (size_t b = 0; b < s8.block_count(); ++b)
        blocks.push_back({s8.blocks[4 * b], s8.blocks[4 * b + 1], s8.blocks[4 * b + 2],
                          s8.blocks[4 * b + 3]});
    AuditResult full = audit(blocks, 8, 3);
    CHECK(full.space == 56);
    CHECK(full.total == 56);
    CHECK(full.min_count == 1);
    CHECK(full.max_count == 1);

    // drop one block: exactly its 4 triples go uncovered
    blocks.pop_back();
    AuditResult holed = audit(blocks, 8, 3);
    CHECK(holed.min_count == 0);
    CHECK(holed.max_count == 1);
    CHECK(holed.histogram[0] == 4);
    CHECK(holed.zero_samples.size() == 4);

    // pair coverage of an SQS(8): every pair lies in (v-2)/2 = 3 blocks
    blocks.push_back({s8.blocks[4 * 13], s8.blocks[4 * 13 + 1], s8.blocks[4 * 13 + 2],
                      s8.blocks[4 * 13 + 3]});
    AuditResult pairs = audit(blocks, 8, 2);
    CHECK(pairs.min_count == 3);
    CHECK(pairs.max_count == 3);
}

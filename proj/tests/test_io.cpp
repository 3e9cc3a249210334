#include <catch2/catch_amalgamated.hpp>

#include "mdskit/designs.hpp"
#include "mdskit/io.hpp"
#include "mdskit/sqs.hpp"

#include <filesystem>
#include <sstream>

using namespace mdskit;

TEST_CASE("LATIN round-trip is byte exact") {
    for (const LatinHypercube& L : {cyclic_cube(4, 3), cyclic_cube(9, 2), ls_with_subsquare(10, 5)}) {
        std::ostringstream os;
        write_latin(os, L);
        std::istringstream is(os.str());
        LatinHypercube back = read_latin(is);
        CHECK(back.d0 == L.d0);
        CHECK(back.q == L.q);
        CHECK(back.cells == L.cells);
        std::ostringstream os2;
        write_latin(os2, back);
        CHECK(os.str() == os2.str());
    }
}

TEST_CASE("LATIN header and layout") {
    LatinHypercube L = cyclic_cube(3, 2);
    std::ostringstream os;
    write_latin(os, L);
    CHECK(os.str() == "LATIN 2 3\n0 1 2\n1 2 0\n2 0 1\n");
}

TEST_CASE("CODE round-trip preserves the linear form") {
    Field f9(3, 2);
    Code c = linear_mds(f9, 3, 2);
    std::ostringstream os;
    write_code(os, c);
    std::istringstream is(os.str());
    Code back = read_code(is);
    CHECK(back == c);
    REQUIRE(back.linear.has_value());
    CHECK(back.linear->p == 3);
    CHECK(back.linear->k == 2);
    CHECK(back.linear->gen == c.linear->gen);
    CHECK(back.linear->prime_coeffs == c.linear->prime_coeffs);
    std::ostringstream os2;
    write_code(os2, back);
    CHECK(os.str() == os2.str());

    // plain word-list code round-trips too
    Code plain = make_code(c.d, c.q, c.rho, c.words);
    std::ostringstream op;
    write_code(op, plain);
    std::istringstream ip(op.str());
    Code pback = read_code(ip);
    CHECK(pback == plain);
    CHECK(!pback.linear.has_value());
}

TEST_CASE("BBD round-trip") {
    BBD b = bbd_build(8, 2).bbd;
    std::ostringstream os;
    write_bbd(os, b);
    std::istringstream is(os.str());
    BBD back = read_bbd(is);
    CHECK(back.n == b.n);
    CHECK(back.g1 == b.g1);
    CHECK(back.g2 == b.g2);
    CHECK(back.blocks == b.blocks);
}

TEST_CASE("SQS round-trip and counted block list") {
    SQS s = boolean_sqs(4);
    std::ostringstream os;
    write_sqs(os, s);
    std::istringstream is(os.str());
    SQS back = read_sqs(is);
    CHECK(back.v == s.v);
    CHECK(back.blocks == s.blocks);

    // trailing garbage after the counted blocks is an error
    std::istringstream extra(os.str() + "0 1 2 3\n");
    CHECK_THROWS_AS(read_sqs(extra), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
    // truncated final word: EOF errors point one past the last line
    std::istringstream bad("SQS 10 2\n0 1 2 3\n0 1 2\n");
    try {
        read_sqs(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }

    // malformed token mid-file reports its own line
    std::istringstream bad2("SQS 10 2\n0 1 2 3\n0 1 x 3\n");
    try {
        read_sqs(bad2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    // wrong magic
    std::istringstream bad3("SQZ 10 2\n");
    CHECK_THROWS_AS(read_sqs(bad3), ParseError);

    // out-of-range numbers in a LATIN body
    std::istringstream bad4("LATIN 2 2\n0 1\n1 5\n");
    try {
        read_latin(bad4);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    std::istringstream bad5("CODE 3 9\n");
    CHECK_THROWS_AS(read_code(bad5), ParseError); // missing rho

    // duplicate words surface as a parse error with the offending line
    std::istringstream bad6("CODE 2 3 2\n0 0\n0 0\n");
    CHECK_THROWS_AS(read_code(bad6), ParseError);
}

TEST_CASE("sniff recognizes the four formats") {
    std::istringstream a("LATIN 2 3\n"), b("CODE 3 9 2\n"), c("BBD 8\n"), d("SQS 8 14\n");
    CHECK(sniff(a) == FileKind::latin);
    CHECK(sniff(b) == FileKind::code);
    CHECK(sniff(c) == FileKind::bbd);
    CHECK(sniff(d) == FileKind::sqs);
    std::istringstream junk("JUNK 1\n");
    CHECK_THROWS_AS(sniff(junk), ParseError);
}

TEST_CASE("file helpers write and read through the filesystem") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "mdskit_io_test";
    fs::create_directories(dir);
    SQS s = boolean_sqs(3);
    std::string p = (dir / "s8.sqs").string();
    write_sqs_file(p, s);
    CHECK(sniff_file(p) == FileKind::sqs);
    SQS back = read_sqs_file(p);
    CHECK(back.blocks == s.blocks);
    CHECK_THROWS(read_sqs_file((dir / "missing.sqs").string()));
    fs::remove_all(dir);
}

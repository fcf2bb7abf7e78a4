#include "doctest.h"

#include <sstream>

#include "lnqec/code_import.hpp"
#include "lnqec/matrix_io.hpp"

using namespace lnqec;

namespace {
const std::string kDataDir = LNQEC_DATA_DIR;
}

TEST_CASE("plain text quaternary matrix") {
    const auto parsed = read_plain_text_file(kDataDir + "/rep313_quat.txt");
    CHECK(parsed.field == 4);
    CHECK(parsed.quat == GF4Matrix::from_values(2, 3, {1, 0, 1, 0, 1, 1}));
}

TEST_CASE("plain text binary matrix") {
    std::istringstream in("2 3 2\n1 1 0\n1 0 1\n");
    const auto parsed = read_plain_text(in);
    CHECK(parsed.field == 2);
    CHECK(parsed.bin == BinMatrix::from_bits(2, 3, {1, 1, 0, 1, 0, 1}));
}

TEST_CASE("plain text skips comments and blank lines") {
    std::istringstream in("# repetition code\n\n2 3 2\n1 1 0\n\n1 0 1\n");
    CHECK(read_plain_text(in).bin == BinMatrix::from_bits(2, 3, {1, 1, 0, 1, 0, 1}));
}

TEST_CASE("plain text parse errors carry line numbers") {
    std::istringstream bad_header("2 3\n1 1 0\n1 0 1\n");
    try {
        read_plain_text(bad_header);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 1);
    }

    std::istringstream short_row("2 3 2\n1 1\n1 0 1\n");
    try {
        read_plain_text(short_row);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 2);
    }

    std::istringstream bad_field("2 3 3\n1 1 0\n1 0 1\n");
    CHECK_THROWS_AS(read_plain_text(bad_field), ParseError);

    std::istringstream bad_entry("1 2 4\n1 q\n");
    CHECK_THROWS_AS(read_plain_text(bad_entry), ParseError);

    std::istringstream truncated("2 3 2\n1 1 0\n");
    CHECK_THROWS_AS(read_plain_text(truncated), ParseError);
}

TEST_CASE("alist Hamming import") {
    const BinMatrix H = read_alist_file(kDataDir + "/hamming74.alist");
    CHECK(H == BinMatrix::from_bits(
                   3, 7, {1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1}));
    const auto code = import_binary(H);
    CHECK(code.n == 7);
    CHECK(code.k == 4);
}

TEST_CASE("alist inconsistencies are rejected") {
    // column 3 says degree 1 but lists two rows
    std::istringstream in("2 2\n2 2\n1 1\n2 2\n1\n1 2\n1 2\n2\n");
    CHECK_THROWS_AS(read_alist(in), ParseError);
}

TEST_CASE("write and re-read round trip") {
    const BinMatrix b = BinMatrix::from_bits(2, 3, {1, 0, 1, 1, 1, 0});
    std::istringstream bin_in(write_plain_text(b));
    CHECK(read_plain_text(bin_in).bin == b);

    const GF4Matrix q = GF4Matrix::from_values(2, 2, {0, 1, 2, 3});
    std::istringstream quat_in(write_plain_text(q));
    CHECK(read_plain_text(quat_in).quat == q);
}

TEST_CASE("read_matrix_file dispatch and field checks") {
    const auto alist = read_matrix_file(kDataDir + "/hamming74.alist");
    CHECK(alist.field == 2);
    CHECK(alist.bin.rows() == 3);

    const auto quat = read_matrix_file(kDataDir + "/rep313_quat.txt", 4);
    CHECK(quat.field == 4);

    CHECK_THROWS_AS(read_matrix_file(kDataDir + "/rep313_quat.txt", 2), ParseError);
    CHECK_THROWS_AS(read_matrix_file(kDataDir + "/hamming74.alist", 4), ParseError);
    CHECK_THROWS_AS(read_matrix_file(kDataDir + "/no_such_file.txt"), ParseError);
}

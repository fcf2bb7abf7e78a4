#include "doctest.h"

#include "lnqec/code_import.hpp"
#include "test_util.hpp"

using namespace lnqec;
using namespace lnqec::test;

namespace {

GF4Matrix rep313_pcm() { return GF4Matrix::from_values(2, 3, {1, 0, 1, 0, 1, 1}); }

}  // namespace

TEST_CASE("import_binary on a full-rank matrix") {
    const auto code = import_binary(BinMatrix::from_bits(2, 3, {1, 1, 0, 0, 1, 1}));
    CHECK(code.n == 3);
    CHECK(code.k == 1);
    CHECK(code.perm == std::vector<std::size_t>{0, 1, 2});
    CHECK(!code.has_redundant_rows());
    CHECK(code.H == BinMatrix::from_bits(2, 3, {1, 1, 0, 0, 1, 1}));
}

TEST_CASE("import_binary retains dependent rows") {
    const auto code = import_binary(BinMatrix::from_bits(3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1}));
    CHECK(code.n == 3);
    CHECK(code.k == 1);
    CHECK(code.H.rows() == 2);
    REQUIRE(code.has_redundant_rows());
    CHECK(code.redundant_rows.rows() == 1);
    // row3 = row1 + row2
    CHECK(code.redundant_combos.row(0) == BinVector::from_bits({1, 1}));
    CHECK(code.redundant_combos.row(0).size() == 2);
    CHECK(code.redundant_rows.row(0) == (code.H.row(0) ^ code.H.row(1)));
}

TEST_CASE("import_binary degenerate and error cases") {
    const auto code = import_binary(BinMatrix::identity(3));
    CHECK(code.n == 3);
    CHECK(code.k == 0);

    CHECK_THROWS_AS(import_binary(BinMatrix(2, 4)), ZeroMatrix);
    CHECK_THROWS_AS(import_binary(BinMatrix()), ZeroMatrix);
}

TEST_CASE("import_quaternary examples") {
    const auto rep = import_quaternary(rep313_pcm());
    CHECK(rep.n == 3);
    CHECK(rep.k == 1);
    CHECK(rep.perm == std::vector<std::size_t>{0, 1, 2});

    const auto zero_col = import_quaternary(GF4Matrix::from_values(1, 3, {0, 1, 2}));
    CHECK(zero_col.n == 3);
    CHECK(zero_col.k == 2);
    CHECK(zero_col.perm == std::vector<std::size_t>{1, 0, 2});
    CHECK(zero_col.H.get(0, 0) == gf4_one);

    const auto trivial = import_quaternary(GF4Matrix::from_values(1, 1, {1}));
    CHECK(trivial.n == 1);
    CHECK(trivial.k == 0);
}

TEST_CASE("import_quaternary splits off GF(4)-dependent rows") {
    // row2 = w * row1, dependent over GF(4) though not over GF(2)
    const auto code = import_quaternary(GF4Matrix::from_values(2, 3, {1, 2, 3, 2, 3, 1}));
    CHECK(code.n == 3);
    CHECK(code.k == 2);
    CHECK(code.H.rows() == 1);
    CHECK(code.redundant_rows.rows() == 1);
}

TEST_CASE("build_trace_pcm on the quaternary repetition code") {
    const auto pcm = build_trace_pcm(import_quaternary(rep313_pcm()));
    CHECK(pcm.H_Q.rows() == 4);
    CHECK(pcm.H_Z == BinMatrix::from_bits(4, 3, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0}));
    CHECK(pcm.H_X == BinMatrix::from_bits(4, 3, {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1}));
    CHECK(pcm.A == BinMatrix::identity(4));
    CHECK(pcm.A_inv == BinMatrix::identity(4));
    CHECK(pcm.N_Z == BinMatrix::from_bits(4, 1, {1, 1, 0, 0}));
    CHECK(pcm.N_X == BinMatrix::from_bits(4, 1, {0, 0, 1, 1}));
}

TEST_CASE("build_trace_pcm on an all-binary matrix") {
    GF4Matrix h = GF4Matrix::from_binary(BinMatrix::from_bits(2, 3, {1, 1, 0, 1, 0, 1}));
    const auto pcm = build_trace_pcm(import_quaternary(h));
    // top half of H_X is zero, bottom half repeats the imported H
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(pcm.H_X.get(r, c) == false);
            CHECK(pcm.H_X.get(2 + r, c) == pcm.H_Z.get(r, c));
        }
    }
}

TEST_CASE("build_trace_pcm block split for H = [[w, 1]]") {
    const auto pcm = build_trace_pcm(import_quaternary(GF4Matrix::from_values(1, 2, {2, 1})));
    CHECK(pcm.n == 2);
    CHECK(pcm.k == 1);
    // H_Q = [[w, 1], [w2, w]]
    CHECK(pcm.H_Q.get(0, 0) == gf4_omega);
    CHECK(pcm.H_Q.get(1, 0) == gf4_omega2);
    CHECK(pcm.H_Q.get(1, 1) == gf4_omega);
    CHECK(pcm.A == BinMatrix::from_bits(2, 2, {0, 1, 1, 1}));
    CHECK(pcm.N_Z == BinMatrix::from_bits(2, 1, {1, 0}));
    CHECK(pcm.N_X == BinMatrix::from_bits(2, 1, {0, 1}));
    CHECK(pcm.A * pcm.A_inv == BinMatrix::identity(2));
}

TEST_CASE("build_binary_pair of two repetition codes") {
    const auto code = import_binary(BinMatrix::from_bits(2, 3, {1, 1, 0, 1, 0, 1}));
    const auto pair = build_binary_pair(code, code);
    CHECK(pair.A.rows() == 4);
    CHECK(pair.physical_qubits() == 5);
    CHECK(pair.aux_qubits() == 4);
    // off-diagonal blocks of A vanish
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(pair.A.get(i, 2 + j) == false);
            CHECK(pair.A.get(2 + i, j) == false);
        }
    }
    CHECK(pair.A * pair.A_inv == BinMatrix::identity(4));
    // N_Z holds B_Z on top, zeros below; N_X mirrored
    CHECK(pair.N_Z == BinMatrix::from_bits(4, 1, {0, 1, 0, 0}));
    CHECK(pair.N_X == BinMatrix::from_bits(4, 1, {0, 0, 0, 1}));
}

TEST_CASE("build_binary_pair dimension checks") {
    const auto rep = import_binary(BinMatrix::from_bits(2, 3, {1, 1, 0, 1, 0, 1}));
    const auto hamming = import_binary(BinMatrix::from_bits(
        3, 7, {1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1}));
    CHECK(hamming.k == 4);

    const auto pair = build_binary_pair(hamming, hamming);
    CHECK(pair.physical_qubits() == 10);
    CHECK(pair.aux_qubits() == 6);

    CHECK_THROWS_AS(build_binary_pair(rep, hamming), DimensionMismatch);
}

TEST_CASE("min_distance") {
    auto rep_quat = import_quaternary(rep313_pcm());
    CHECK(min_distance(rep_quat) == 3);

    auto rep_bin = import_binary(BinMatrix::from_bits(2, 3, {1, 1, 0, 1, 0, 1}));
    CHECK(min_distance(rep_bin) == 3);

    auto hamming = import_binary(BinMatrix::from_bits(
        3, 7, {1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1}));
    CHECK(min_distance(hamming) == 3);

    auto degenerate = import_quaternary(GF4Matrix::from_values(1, 1, {1}));
    CHECK_THROWS_AS(min_distance(degenerate), NoCodewords);

    // k = 25 overflows the default 2^24 budget
    BinMatrix wide(1, 26);
    for (std::size_t c = 0; c < 26; ++c) wide.set(0, c, true);
    auto big = import_binary(wide);
    CHECK_THROWS_AS(min_distance(big), BudgetExceeded);
    CHECK(min_distance(big, std::size_t(1) << 26) == 2);
}

TEST_CASE("parameter summaries") {
    auto rep = import_quaternary(rep313_pcm());
    rep.d = min_distance(rep);
    const auto pcm = build_trace_pcm(rep);
    const auto s = parameter_summary(pcm);
    CHECK(s.physical_qubits == 5);
    CHECK(s.logical_qubits == 1);
    CHECK(s.aux_qubits == 4);
    REQUIRE(s.t0.has_value());
    CHECK(*s.t0 == 1);
    CHECK(!s.is_pair);

    const auto big = binary_pair_params(1080, 1080, 999, 6, 6);
    CHECK(big.physical_qubits == 1161);
    CHECK(big.aux_qubits == 162);
    CHECK(big.logical_qubits == 999);
    CHECK(*big.t0 == 2);
    CHECK(*big.t1 == 2);

    // degenerate [n, n] code: no checks, no auxiliary qubits
    const auto empty = quaternary_params(5, 5);
    CHECK(empty.physical_qubits == 5);
    CHECK(empty.aux_qubits == 0);
    CHECK(!empty.t0.has_value());
}

TEST_CASE("imported quaternary codes have invertible leading blocks") {
    std::mt19937_64 rng(21);
    int done = 0;
    while (done < 50) {
        const std::size_t rows = 1 + rng() % 4;
        const std::size_t n = rows + rng() % 6;
        const GF4Matrix h = random_gf4_matrix(rows, n, rng);
        if (h.is_zero()) continue;
        const auto code = import_quaternary(h);
        const std::size_t r = code.n - code.k;

        // first r columns independent over GF(4)
        std::vector<std::size_t> lead(r);
        for (std::size_t i = 0; i < r; ++i) lead[i] = i;
        CHECK(code.H.select_columns(lead).rank() == r);

        // the binary block A is invertible, and [H_Z | H_X] has full row rank
        const auto pcm = build_trace_pcm(code);
        CHECK(pcm.A.rank() == 2 * r);
        CHECK(BinMatrix::hstack(pcm.H_Z, pcm.H_X).rank() == 2 * r);
        ++done;
    }
}

TEST_CASE("kernel codewords have zero trace syndrome") {
    std::mt19937_64 rng(22);
    const auto code = import_quaternary(rep313_pcm());
    const auto pcm = build_trace_pcm(code);
    const auto basis = code.H.kernel_basis();
    REQUIRE(basis.size() == 1);
    for (int iter = 0; iter < 20; ++iter) {
        GF4Vector c(code.n);
        for (const auto& b : basis) {
            c.add_assign(b.scaled(GF4(static_cast<std::uint8_t>(rng() & 3))));
        }
        CHECK(pcm.H_Q.mul_vec(c).trace_vec().is_zero());
    }
}

TEST_CASE("column permutation round trips") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 50) {
        const std::size_t rows = 1 + rng() % 4;
        const std::size_t n = rows + rng() % 6;
        const BinMatrix h = random_bin_matrix(rows, n, rng);
        if (h.rank() != rows) continue;
        const auto code = import_binary(h);
        CHECK(code.H.select_columns(invert_permutation(code.perm)) == h);
        ++done;
    }
}

#include "doctest.h"

#include "lnqec/code_import.hpp"
#include "lnqec/pauli_frame.hpp"
#include "test_util.hpp"

using namespace lnqec;
using namespace lnqec::test;

namespace {

TracePcm rep313_trace_pcm() {
    return build_trace_pcm(import_quaternary(GF4Matrix::from_values(2, 3, {1, 0, 1, 0, 1, 1})));
}

BinaryPairCode repetition_pair() {
    const auto code = import_binary(BinMatrix::from_bits(2, 3, {1, 1, 0, 1, 0, 1}));
    return build_binary_pair(code, code);
}

PauliError err_of(const std::vector<int>& x, const std::vector<int>& z) {
    return {BinVector::from_bits(x), BinVector::from_bits(z)};
}

// Random error with no bit flips on the auxiliary segment.
PauliError random_less_noisy_error(const Segmentation& seg, std::mt19937_64& rng) {
    BinVector e_x(seg.total());
    for (std::size_t j = 0; j < seg.data; ++j) e_x.set(seg.aux() + j, rng() & 1);
    return {std::move(e_x), random_bin_vector(seg.total(), rng)};
}

}  // namespace

TEST_CASE("error word assembly") {
    const auto pcm = rep313_trace_pcm();

    CHECK(assemble_error_word(PauliError::identity(5), pcm).is_zero());

    // phase error on auxiliary qubit 0 packs as w2 in position 0
    const auto aux_phase = err_of({0, 0, 0, 0, 0}, {1, 0, 0, 0, 0});
    CHECK(assemble_error_word(aux_phase, pcm) == GF4Vector::from_values({3, 0, 0}));

    // Y on the data qubit: w2 + 1 = w
    const auto data_y = err_of({0, 0, 0, 0, 1}, {0, 0, 0, 0, 1});
    CHECK(assemble_error_word(data_y, pcm) == GF4Vector::from_values({0, 0, 2}));

    CHECK_THROWS_AS(assemble_error_word(PauliError::identity(4), pcm), LengthMismatch);
}

TEST_CASE("segmentation accessors reassemble the error") {
    std::mt19937_64 rng(31);
    const Segmentation seg{2, 2, 1};
    for (int iter = 0; iter < 100; ++iter) {
        const PauliError err{random_bin_vector(seg.total(), rng),
                             random_bin_vector(seg.total(), rng)};
        CHECK(BinVector::concat(err.e_x_l(seg), err.e_x_r(seg)) == err.e_x);
        CHECK(BinVector::concat(BinVector::concat(err.e_z_l0(seg), err.e_z_l1(seg)),
                                err.e_z_r(seg)) == err.e_z);
    }
}

TEST_CASE("disassemble inverts assemble for less-noisy errors") {
    std::mt19937_64 rng(32);
    const auto pcm = rep313_trace_pcm();
    const Segmentation seg = segmentation_of(pcm);
    for (int iter = 0; iter < 100; ++iter) {
        const PauliError err = random_less_noisy_error(seg, rng);
        const PauliError back = disassemble_error_word(assemble_error_word(err, pcm), pcm);
        CHECK(back == err);
    }
}

TEST_CASE("trace syndrome examples") {
    const auto pcm = rep313_trace_pcm();
    CHECK(trace_syndrome(pcm, GF4Vector(3)).is_zero());
    CHECK(trace_syndrome(pcm, GF4Vector::from_values({2, 0, 0})) ==
          BinVector::from_bits({1, 0, 1, 0}));
    CHECK(trace_syndrome(pcm, GF4Vector::from_values({3, 0, 0})) ==
          BinVector::from_bits({1, 0, 0, 0}));
    CHECK_THROWS_AS(trace_syndrome(pcm, GF4Vector(4)), LengthMismatch);
}

TEST_CASE("plane route equals direct GF(4) trace syndrome") {
    std::mt19937_64 rng(33);
    const TracePcm pcms[] = {
        rep313_trace_pcm(),
        build_trace_pcm(import_quaternary(GF4Matrix::from_values(1, 2, {2, 1}))),
        build_trace_pcm(import_quaternary(
            GF4Matrix::from_values(3, 3, {3, 1, 2, 3, 2, 1, 0, 3, 3}))),
    };
    for (const auto& pcm : pcms) {
        for (int iter = 0; iter < 10000; ++iter) {
            const GF4Vector e = random_gf4_vector(pcm.n, rng);
            CHECK(trace_syndrome(pcm, e) == trace_syndrome_direct(pcm, e));
        }
    }
}

TEST_CASE("quaternary closed form examples") {
    const auto pcm = rep313_trace_pcm();

    const auto zero = closed_form_outcome_quat(pcm, PauliError::identity(5));
    CHECK(zero.aux_outcome.is_zero());
    CHECK(zero.residual_identity());

    const auto aux_phase =
        closed_form_outcome_quat(pcm, err_of({0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}));
    CHECK(aux_phase.aux_outcome == BinVector::from_bits({1, 0, 0, 0}));
    CHECK(aux_phase.residual_identity());

    // bit flip on auxiliary qubit 0: residuals come from row 0 of N_X, N_Z
    const auto aux_flip =
        closed_form_outcome_quat(pcm, err_of({1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}));
    CHECK(aux_flip.aux_outcome.is_zero());
    CHECK(aux_flip.residual_x == BinVector::from_bits({0}));
    CHECK(aux_flip.residual_z == BinVector::from_bits({1}));

    // bit flip on auxiliary qubit 2 trips the N_Z N_X^T correction term
    const auto aux_flip2 =
        closed_form_outcome_quat(pcm, err_of({0, 0, 1, 0, 0}, {0, 0, 0, 0, 0}));
    CHECK(aux_flip2.aux_outcome == BinVector::from_bits({1, 1, 0, 0}));
    CHECK(aux_flip2.residual_x == BinVector::from_bits({1}));
    CHECK(aux_flip2.residual_z == BinVector::from_bits({0}));
}

TEST_CASE("binary closed form examples") {
    const auto pair = repetition_pair();

    const auto zero = closed_form_outcome_bin(pair, PauliError::identity(5));
    CHECK(zero.aux_outcome.is_zero());
    CHECK(zero.residual_identity());

    // bit error on the data qubit: first word = A_Z^-1 B_Z
    const auto data_flip =
        closed_form_outcome_bin(pair, err_of({0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}));
    CHECK(data_flip.aux_outcome == BinVector::from_bits({1, 1, 0, 0}));
    CHECK(data_flip.residual_x == BinVector::from_bits({1}));
    CHECK(data_flip.residual_z == BinVector::from_bits({0}));

    CHECK_THROWS_AS(closed_form_outcome_bin(pair, err_of({1, 0, 0, 0, 0}, {0, 0, 0, 0, 0})),
                    PreconditionViolated);
}

TEST_CASE("syndrome recovery") {
    const auto pcm = rep313_trace_pcm();

    FrameOutcome outcome;
    outcome.aux_outcome = BinVector(4);
    CHECK(recover_syndrome(pcm, outcome).is_zero());

    outcome.aux_outcome = BinVector::from_bits({1, 0, 0, 0});
    CHECK(recover_syndrome(pcm, outcome) == BinVector::from_bits({1, 0, 0, 0}));
}

TEST_CASE("recovered syndrome equals the trace syndrome of the assembled word") {
    std::mt19937_64 rng(34);
    const auto pcm = rep313_trace_pcm();
    const Segmentation seg = segmentation_of(pcm);
    for (int iter = 0; iter < 500; ++iter) {
        const PauliError err = random_less_noisy_error(seg, rng);
        const FrameOutcome outcome = closed_form_outcome_quat(pcm, err);
        CHECK(recover_syndrome(pcm, outcome) ==
              trace_syndrome(pcm, assemble_error_word(err, pcm)));
        // residuals are exactly the data components when e_Xl = 0
        CHECK(outcome.residual_x == err.e_x_r(seg));
        CHECK(outcome.residual_z == err.e_z_r(seg));
    }
}

TEST_CASE("binary pair syndromes match the per-code parity checks") {
    std::mt19937_64 rng(35);
    const auto pair = repetition_pair();
    const Segmentation seg = segmentation_of(pair);
    for (int iter = 0; iter < 500; ++iter) {
        const PauliError err = random_less_noisy_error(seg, rng);
        const auto [s0, s1] = recover_syndromes(pair, closed_form_outcome_bin(pair, err));
        CHECK(s0 == pair.code0.H.mul_vec(BinVector::concat(err.e_z_l0(seg), err.e_x_r(seg))));
        CHECK(s1 == pair.code1.H.mul_vec(BinVector::concat(err.e_z_l1(seg), err.e_z_r(seg))));
    }
}

TEST_CASE("closed form is additive for less-noisy errors") {
    std::mt19937_64 rng(36);
    const auto pcm = rep313_trace_pcm();
    const Segmentation seg = segmentation_of(pcm);
    for (int iter = 0; iter < 200; ++iter) {
        const PauliError e1 = random_less_noisy_error(seg, rng);
        const PauliError e2 = random_less_noisy_error(seg, rng);
        const PauliError sum{e1.e_x ^ e2.e_x, e1.e_z ^ e2.e_z};

        const auto o1 = closed_form_outcome_quat(pcm, e1);
        const auto o2 = closed_form_outcome_quat(pcm, e2);
        const auto os = closed_form_outcome_quat(pcm, sum);
        CHECK(os.aux_outcome == (o1.aux_outcome ^ o2.aux_outcome));
        CHECK(os.residual_x == (o1.residual_x ^ o2.residual_x));
        CHECK(os.residual_z == (o1.residual_z ^ o2.residual_z));
    }
}

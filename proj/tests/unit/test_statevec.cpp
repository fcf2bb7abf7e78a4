#include "doctest.h"

#include <bit>
#include <cmath>
#include <complex>
#include <vector>

#include "lnqec/statevec.hpp"
#include "test_util.hpp"

using namespace lnqec;
using namespace lnqec::test;

namespace {

TracePcm rep313_trace_pcm() {
    return build_trace_pcm(import_quaternary(GF4Matrix::from_values(2, 3, {1, 0, 1, 0, 1, 1})));
}

PauliError err_of(const std::vector<int>& x, const std::vector<int>& z) {
    return {BinVector::from_bits(x), BinVector::from_bits(z)};
}

std::uint64_t index_of_bits(const BinVector& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx = (idx << 1) | (v.get(i) ? 1 : 0);
    return idx;
}

// Dense encoder built straight from the projector-sum definition; the slow
// test-only reference for apply_encoder.
std::vector<std::vector<std::complex<double>>> dense_encoder(const EncoderView& enc) {
    const std::size_t aux_dim = std::size_t(1) << enc.aux_qubits;
    const std::size_t data_dim = std::size_t(1) << enc.data_qubits;
    const std::size_t dim = aux_dim * data_dim;
    std::vector<std::vector<std::complex<double>>> Q(dim,
                                                     std::vector<std::complex<double>>(dim, 0.0));
    for (std::uint64_t mu_idx = 0; mu_idx < aux_dim; ++mu_idx) {
        BinVector mu(enc.aux_qubits);
        for (std::size_t i = 0; i < enc.aux_qubits; ++i) {
            mu.set(i, (mu_idx >> (enc.aux_qubits - 1 - i)) & 1);
        }
        const std::uint64_t aux_label = index_of_bits(enc.A->vec_mul(mu));
        const BinVector x = enc.N_X->vec_mul(mu);
        const BinVector z = enc.N_Z->vec_mul(mu);
        const std::uint64_t x_mask = index_of_bits(x);
        const std::uint64_t z_mask = index_of_bits(z);
        for (std::uint64_t d = 0; d < data_dim; ++d) {
            const double sign = (std::popcount(d & z_mask) & 1) ? -1.0 : 1.0;
            Q[(aux_label << enc.data_qubits) | (d ^ x_mask)][(aux_label << enc.data_qubits) | d] +=
                sign;
        }
    }
    return Q;
}

}  // namespace

TEST_CASE("prepare_plus_aux") {
    const StateVector psi0 = StateVector::basis_state(1, 0);
    const StateVector s = prepare_plus_aux(1, psi0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    REQUIRE(s.amplitudes.size() == 4);
    CHECK(std::abs(s.amplitudes[0] - inv_sqrt2) < 1e-15);
    CHECK(std::abs(s.amplitudes[1]) < 1e-15);
    CHECK(std::abs(s.amplitudes[2] - inv_sqrt2) < 1e-15);
    CHECK(std::abs(s.amplitudes[3]) < 1e-15);

    const StateVector untouched = prepare_plus_aux(0, psi0);
    CHECK(untouched.amplitudes == psi0.amplitudes);

    const StateVector s2 = prepare_plus_aux(2, StateVector::basis_state(1, 1));
    for (std::uint64_t i = 0; i < 8; ++i) {
        const double expect = (i & 1) ? 0.5 : 0.0;
        CHECK(std::abs(s2.amplitudes[i] - expect) < 1e-15);
    }

    CHECK_THROWS_AS(prepare_plus_aux(20, psi0), CapExceeded);
}

TEST_CASE("apply_pauli basics") {
    const StateVector s00 = StateVector::basis_state(2, 0);
    CHECK(apply_pauli(PauliError::identity(2), s00).amplitudes == s00.amplitudes);

    const StateVector flipped = apply_pauli(err_of({1, 0}, {0, 0}), s00);
    CHECK(std::abs(flipped.amplitudes[2] - 1.0) < 1e-15);

    StateVector plus(2);
    plus.amplitudes[0] = plus.amplitudes[1] = 1.0 / std::sqrt(2.0);
    const StateVector phased = apply_pauli(err_of({0, 0}, {0, 1}), plus);
    CHECK(std::abs(phased.amplitudes[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(phased.amplitudes[1] + 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("trivial encoder when N_Z = N_X = 0") {
    // pair of two [2,1] codes with H = [1 0]: both N blocks vanish
    const auto code = import_binary(BinMatrix::from_bits(1, 2, {1, 0}));
    const auto pair = build_binary_pair(code, code);
    CHECK(pair.N_Z.is_zero());
    CHECK(pair.N_X.is_zero());
    const EncoderView enc = encoder_view(pair);

    const StateVector s = StateVector::random(3, 41);
    const StateVector out = apply_encoder(enc, s, EncoderDirection::forward);
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        CHECK(std::abs(out.amplitudes[i] - s.amplitudes[i]) < 1e-15);
    }
}

TEST_CASE("encoder is unitary") {
    const auto pcm = rep313_trace_pcm();
    const EncoderView enc = encoder_view(pcm);
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector s = StateVector::random(5, 1000 + trial);
        StateVector round = apply_encoder(enc, s, EncoderDirection::forward);
        CHECK(std::abs(round.norm() - 1.0) < 1e-12);
        round = apply_encoder(enc, round, EncoderDirection::inverse);
        double dist = 0.0;
        for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
            dist += std::norm(round.amplitudes[i] - s.amplitudes[i]);
        }
        CHECK(dist < 1e-20);
    }
}

TEST_CASE("encoder drives the data register per auxiliary basis state") {
    const auto pcm = rep313_trace_pcm();
    const EncoderView enc = encoder_view(pcm);
    // |0001>|0>: mu = (0,0,0,1) A^-1 = (0,0,0,1); mu N_X = 1, mu N_Z = 0
    const StateVector in = StateVector::basis_state(5, 0b00010);
    const StateVector out = apply_encoder(enc, in, EncoderDirection::forward);
    CHECK(std::abs(out.amplitudes[0b00011] - 1.0) < 1e-15);
}

TEST_CASE("completeness: mu -> mu A is a bijection on the auxiliary labels") {
    std::mt19937_64 rng(42);
    for (std::size_t aux = 1; aux <= 8; ++aux) {
        const BinMatrix A = random_invertible(aux, rng);
        std::vector<double> diagonal(std::size_t(1) << aux, 0.0);
        for (std::uint64_t mu_idx = 0; mu_idx < (std::uint64_t(1) << aux); ++mu_idx) {
            BinVector mu(aux);
            for (std::size_t i = 0; i < aux; ++i) mu.set(i, (mu_idx >> (aux - 1 - i)) & 1);
            diagonal[index_of_bits(A.vec_mul(mu))] += 1.0;
        }
        // sum of |mu A><mu A| is diagonal; identity iff every label hit once
        for (double d : diagonal) CHECK(d == 1.0);
    }
}

TEST_CASE("fast encoder equals the dense projector-sum matrix") {
    const auto pcm = rep313_trace_pcm();
    const EncoderView enc = encoder_view(pcm);
    const auto Q = dense_encoder(enc);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector s = StateVector::random(5, 2000 + trial);
        const StateVector fast = apply_encoder(enc, s, EncoderDirection::forward);
        for (std::size_t row = 0; row < Q.size(); ++row) {
            std::complex<double> acc = 0.0;
            for (std::size_t col = 0; col < Q.size(); ++col) {
                acc += Q[row][col] * s.amplitudes[col];
            }
            CHECK(std::abs(acc - fast.amplitudes[row]) < 1e-12);
        }
    }
}

TEST_CASE("measure_aux_x_basis") {
    const StateVector psi = StateVector::random(1, 43);

    // |0>_X psi
    StateVector s0 = prepare_plus_aux(1, psi);
    const AuxMeasurement m0 = measure_aux_x_basis(s0, 1);
    CHECK(m0.outcome == BinVector::from_bits({0}));
    CHECK(fidelity(m0.data_state, psi) > 1.0 - 1e-12);

    // |1>_X psi
    StateVector s1 = apply_pauli(err_of({0, 0}, {1, 0}), s0);
    const AuxMeasurement m1 = measure_aux_x_basis(s1, 1);
    CHECK(m1.outcome == BinVector::from_bits({1}));
    CHECK(fidelity(m1.data_state, psi) > 1.0 - 1e-12);

    // Bell pair across the cut is not a product state
    StateVector bell(2);
    bell.amplitudes[0b00] = bell.amplitudes[0b11] = 1.0 / std::sqrt(2.0);
    CHECK_THROWS_AS(measure_aux_x_basis(bell, 1), NotProductState);
}

TEST_CASE("closed-form check passes for the zero error") {
    const auto pcm = rep313_trace_pcm();
    const PauliError none = PauliError::identity(5);
    const auto check = verify_closed_form_case(encoder_view(pcm), none,
                                         closed_form_outcome_quat(pcm, none), 3, 44);
    CHECK(check.pass);
    CHECK(check.min_fidelity > 1.0 - 1e-12);
}

TEST_CASE("closed-form check catches a corrupted prediction") {
    const auto pcm = rep313_trace_pcm();
    const PauliError err = err_of({0, 0, 0, 0, 1}, {0, 0, 0, 0, 0});
    FrameOutcome wrong = closed_form_outcome_quat(pcm, err);
    wrong.residual_x.flip(0);
    const auto check = verify_closed_form_case(encoder_view(pcm), err, wrong, 2, 45);
    CHECK(!check.pass);
}

TEST_CASE("sampled closed-form verification on both constructions") {
    const auto pcm = rep313_trace_pcm();
    CHECK(verify_closed_form_sampled(pcm, 25, 2, 46).pass);

    const auto code = import_binary(BinMatrix::from_bits(2, 3, {1, 1, 0, 1, 0, 1}));
    const auto pair = build_binary_pair(code, code);
    CHECK(verify_closed_form_sampled(pair, 25, 2, 47).pass);
}

TEST_CASE("random states are normalized") {
    for (int i = 0; i < 10; ++i) {
        CHECK(std::abs(StateVector::random(4, 48 + i).norm() - 1.0) < 1e-12);
    }
}

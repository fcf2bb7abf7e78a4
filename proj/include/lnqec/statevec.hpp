#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lnqec/code_import.hpp"
#include "lnqec/pauli_frame.hpp"

namespace lnqec {

inline constexpr std::size_t kDefaultQubitCap = 14;
inline constexpr double kFidelityTolerance = 1e-10;
inline constexpr double kProductStateTolerance = 1e-9;

/// Dense state vector. Qubit 0 is the most significant bit of the amplitude
/// index, so a register split "aux then data" maps to index = va * 2^data + vd.
struct StateVector {
    std::size_t qubit_count = 0;
    std::vector<std::complex<double>> amplitudes;

    StateVector() = default;
    explicit StateVector(std::size_t qubits)
        : qubit_count(qubits), amplitudes(std::size_t(1) << qubits, 0.0) {}

    static StateVector basis_state(std::size_t qubits, std::uint64_t index);
    /// Haar-like random state from normalized complex Gaussians.
    static StateVector random(std::size_t qubits, std::uint64_t seed);

    double norm() const;
    void normalize();
};

/// Inner-product magnitude |<a|b>|; global phase drops out.
double fidelity(const StateVector& a, const StateVector& b);

/// Encoder data shared by the quaternary and binary constructions: the
/// controlled-Pauli unitary is determined by (A, N_Z, N_X) alone.
struct EncoderView {
    const BinMatrix* A = nullptr;
    const BinMatrix* A_inv = nullptr;
    const BinMatrix* N_Z = nullptr;
    const BinMatrix* N_X = nullptr;
    std::size_t aux_qubits = 0;
    std::size_t data_qubits = 0;

    std::size_t total_qubits() const { return aux_qubits + data_qubits; }
};

EncoderView encoder_view(const TracePcm& pcm);
EncoderView encoder_view(const BinaryPairCode& pair);

/// |0>_X^aux tensor psi. Throws CapExceeded past the qubit cap.
StateVector prepare_plus_aux(std::size_t aux_count, const StateVector& psi,
                             std::size_t cap = kDefaultQubitCap);

enum class EncoderDirection { forward, inverse };

/// Applies the encoder (or its adjoint) basis-state-wise: each auxiliary
/// computational basis state |v> drives the data Pauli selected by
/// mu = v A^-1.
StateVector apply_encoder(const EncoderView& enc, const StateVector& state,
                          EncoderDirection direction);

/// X^(e_x) Z^(e_z) across the full register.
StateVector apply_pauli(const PauliError& err, const StateVector& state);

struct AuxMeasurement {
    BinVector outcome;      // X-basis word on the auxiliary register
    StateVector data_state; // residual data register, normalized
};

/// Reads off the auxiliary register, which must be an X-basis product state
/// tensored with the data register; throws NotProductState otherwise.
AuxMeasurement measure_aux_x_basis(const StateVector& state, std::size_t aux_count,
                                   double tolerance = kProductStateTolerance);

/// Builds the state the closed form predicts: |aux>_X tensor X^(rx) Z^(rz) psi.
StateVector predicted_state(const FrameOutcome& outcome, const StateVector& psi);

struct OracleCheck {
    bool pass = false;
    double min_fidelity = 1.0;
    std::size_t trials = 0;
    std::size_t failures = 0;
};

/// Simulates decode(error(encode(|0>_X^aux psi))) for `psi_count` random
/// states and compares against `predicted` at the fidelity tolerance. The
/// auxiliary measurement outcome is checked against the predicted word too.
OracleCheck verify_closed_form_case(const EncoderView& enc, const PauliError& err,
                             const FrameOutcome& predicted, std::size_t psi_count,
                             std::uint64_t seed, std::size_t cap = kDefaultQubitCap);

/// Closed-form check over every (e_X, e_Z) pair for the quaternary
/// construction, auxiliary bit flips included.
OracleCheck verify_closed_form_exhaustive(const TracePcm& pcm, std::size_t psi_count,
                                    std::uint64_t seed, std::size_t cap = kDefaultQubitCap);

/// Closed-form check over every error with e_Xl = 0 for a binary pair.
OracleCheck verify_closed_form_exhaustive(const BinaryPairCode& pair, std::size_t psi_count,
                                    std::uint64_t seed, std::size_t cap = kDefaultQubitCap);

/// Sampled variant for constructions too large to enumerate: random errors
/// (including auxiliary bit flips for the quaternary case).
OracleCheck verify_closed_form_sampled(const TracePcm& pcm, std::size_t error_count,
                                 std::size_t psi_count, std::uint64_t seed,
                                 std::size_t cap = kDefaultQubitCap);
OracleCheck verify_closed_form_sampled(const BinaryPairCode& pair, std::size_t error_count,
                                 std::size_t psi_count, std::uint64_t seed,
                                 std::size_t cap = kDefaultQubitCap);

}  // namespace lnqec

#pragma once

#include <utility>

#include "lnqec/bin_matrix.hpp"
#include "lnqec/code_import.hpp"
#include "lnqec/gf4.hpp"

namespace lnqec {

/// Register layout of a construction: two auxiliary segments followed by the
/// data qubits. Quaternary codes have aux0 = aux1 = n-k; binary pairs have
/// aux0 = n0-k and aux1 = n1-k.
struct Segmentation {
    std::size_t aux0 = 0;
    std::size_t aux1 = 0;
    std::size_t data = 0;

    std::size_t aux() const { return aux0 + aux1; }
    std::size_t total() const { return aux0 + aux1 + data; }
};

Segmentation segmentation_of(const TracePcm& pcm);
Segmentation segmentation_of(const BinaryPairCode& pair);

/// Bit-error and phase-error indicator vectors over all physical qubits.
/// Qubit i has a bit flip iff e_x[i] = 1 and a phase flip iff e_z[i] = 1;
/// both set means Y.
struct PauliError {
    BinVector e_x;
    BinVector e_z;

    PauliError() = default;
    PauliError(BinVector x, BinVector z);
    static PauliError identity(std::size_t qubits) {
        return {BinVector(qubits), BinVector(qubits)};
    }

    std::size_t qubits() const { return e_x.size(); }

    BinVector e_x_l(const Segmentation& s) const { return e_x.slice(0, s.aux()); }
    BinVector e_x_r(const Segmentation& s) const { return e_x.slice(s.aux(), s.data); }
    BinVector e_z_l0(const Segmentation& s) const { return e_z.slice(0, s.aux0); }
    BinVector e_z_l1(const Segmentation& s) const { return e_z.slice(s.aux0, s.aux1); }
    BinVector e_z_r(const Segmentation& s) const { return e_z.slice(s.aux(), s.data); }

    bool aux_bit_flip_free(const Segmentation& s) const { return e_x_l(s).is_zero(); }

    bool operator==(const PauliError& o) const { return e_x == o.e_x && e_z == o.e_z; }
};

/// State of the registers after the decoding operator, up to global phase:
/// the auxiliary X-basis word and the residual Pauli on the data qubits.
struct FrameOutcome {
    BinVector aux_outcome;
    BinVector residual_x;
    BinVector residual_z;

    bool residual_identity() const { return residual_x.is_zero() && residual_z.is_zero(); }
};

/// Packs a quaternary error into the length-n word
/// e = w2*(e_Zl0, e_Xr) + (e_Zl1, e_Zr).
GF4Vector assemble_error_word(const PauliError& err, const TracePcm& pcm);

/// Splits an error word back into its (e_Zl0, e_Zl1, e_Xr, e_Zr) segments,
/// the inverse of assemble_error_word with e_Xl = 0.
PauliError disassemble_error_word(const GF4Vector& e, const TracePcm& pcm);

/// Trace syndrome computed through the Z/X planes:
/// H_Z * Tr(e)^T + H_X * Tr(w e)^T.
BinVector trace_syndrome(const TracePcm& pcm, const GF4Vector& e);

/// Same value computed entrywise in GF(4) as Tr(H_Q e^T); reference route
/// for consistency checks.
BinVector trace_syndrome_direct(const TracePcm& pcm, const GF4Vector& e);

/// Auxiliary word and data residual after decoding, for an arbitrary error
/// including bit flips on auxiliary qubits:
///   aux      = A^-1 (Tr(H_Q e^T) + N_Z N_X^T (e_Xl A^-1)^T)
///   residual = X^(e_Xl A^-1 N_X + e_Xr) Z^(e_Xl A^-1 N_Z + e_Zr)
FrameOutcome closed_form_outcome_quat(const TracePcm& pcm, const PauliError& err);

/// Binary-pair analogue; only valid for errors with no auxiliary bit flips:
///   aux      = (A_Z^-1 H_Z (e_Zl0, e_Xr)^T, A_X^-1 H_X (e_Zl1, e_Zr)^T)
///   residual = X^(e_Xr) Z^(e_Zr)
/// Throws PreconditionViolated when e_Xl != 0.
FrameOutcome closed_form_outcome_bin(const BinaryPairCode& pair, const PauliError& err);

/// Trace syndrome from a measured auxiliary word: A * aux_outcome.
BinVector recover_syndrome(const TracePcm& pcm, const FrameOutcome& outcome);

/// Per-code syndromes for a binary pair: (A_Z * word0, A_X * word1).
std::pair<BinVector, BinVector> recover_syndromes(const BinaryPairCode& pair,
                                                  const FrameOutcome& outcome);

}  // namespace lnqec

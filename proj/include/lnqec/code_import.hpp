#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lnqec/bin_matrix.hpp"
#include "lnqec/gf4.hpp"

namespace lnqec {

/// Column permutation helpers. A permutation is stored as the list of
/// original column indices in their new order: permuted column j is original
/// column perm[j].
std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& perm);
BinVector apply_permutation(const BinVector& v, const std::vector<std::size_t>& perm);
GF4Vector apply_permutation(const GF4Vector& v, const std::vector<std::size_t>& perm);

/// Binary linear [n, k] code presented by a full-rank parity-check matrix.
/// Columns are permuted so the first n-k columns are pivots; dependent input
/// rows are split off and kept with their expansion over the retained rows.
struct LinearCodeBin {
    BinMatrix H;  // (n-k) x n, full rank, first n-k columns invertible
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;

    BinMatrix redundant_rows;    // dependent input rows, same column order as H
    BinMatrix redundant_combos;  // row j of redundant_rows = combos.row(j) * H
    std::vector<std::size_t> perm;

    bool has_redundant_rows() const { return redundant_rows.rows() > 0; }
};

/// Quaternary linear [n, k] code, same conventions as LinearCodeBin.
struct LinearCodeQuat {
    GF4Matrix H;  // (n-k) x n over GF(4), full rank, first n-k columns independent
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;

    GF4Matrix redundant_rows;
    std::vector<std::size_t> perm;
};

/// Trace parity-check construction for a quaternary code: H_Q stacks H on
/// top of w*H, splits into Z/X planes, and carves out the square block
/// A = [A_Z | A_X] that the encoder inverts.
struct TracePcm {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;

    GF4Matrix H_Q;  // 2(n-k) x n
    BinMatrix H_Z;  // z plane of H_Q
    BinMatrix H_X;  // x plane of H_Q
    BinMatrix A_Z;  // first n-k columns of H_Z
    BinMatrix A_X;  // first n-k columns of H_X
    BinMatrix N_Z;  // last k columns of H_Z
    BinMatrix N_X;  // last k columns of H_X
    BinMatrix A;    // [A_Z | A_X], invertible over GF(2)
    BinMatrix A_inv;

    std::vector<std::size_t> perm;

    std::size_t aux_qubits() const { return 2 * (n - k); }
    std::size_t data_qubits() const { return k; }
    std::size_t physical_qubits() const { return 2 * n - k; }
};

/// Two binary codes of equal dimension assembled into one construction:
/// code0's parity checks handle (aux0 phase, data bit) errors, code1's
/// handle (aux1 phase, data phase) errors.
struct BinaryPairCode {
    LinearCodeBin code0;  // [n0, k, d0], H_Z = [A_Z | B_Z]
    LinearCodeBin code1;  // [n1, k, d1], H_X = [A_X | B_X]

    BinMatrix A;      // diag(A_Z, A_X), (n0+n1-2k) square
    BinMatrix A_inv;  // diag(A_Z^-1, A_X^-1)
    BinMatrix A_Z_inv;
    BinMatrix A_X_inv;
    BinMatrix N_Z;  // [B_Z ; 0]
    BinMatrix N_X;  // [0 ; B_X]

    std::size_t k() const { return code0.k; }
    std::size_t aux_qubits() const { return code0.n + code1.n - 2 * code0.k; }
    std::size_t data_qubits() const { return code0.k; }
    std::size_t physical_qubits() const { return code0.n + code1.n - code0.k; }
};

/// Qubit accounting for a construction.
struct ParamSummary {
    std::size_t physical_qubits = 0;
    std::size_t logical_qubits = 0;
    std::size_t aux_qubits = 0;
    std::optional<std::size_t> t0;  // correctable weight; the only bound for quaternary
    std::optional<std::size_t> t1;  // second bound for binary pairs
    bool is_pair = false;
};

/// Splits off dependent rows, permutes columns so the first n-k are pivots,
/// and records the permutation. Throws ZeroMatrix for an all-zero input.
LinearCodeBin import_binary(const BinMatrix& H);
LinearCodeQuat import_quaternary(const GF4Matrix& H);

TracePcm build_trace_pcm(const LinearCodeQuat& code);
BinaryPairCode build_binary_pair(const LinearCodeBin& code0, const LinearCodeBin& code1);

inline constexpr std::size_t kDefaultEnumBudget = std::size_t(1) << 24;

/// Exact minimum distance by exhaustive codeword enumeration. Throws
/// NoCodewords when k = 0 and BudgetExceeded when q^k exceeds the budget.
std::size_t min_distance(const LinearCodeBin& code, std::size_t budget = kDefaultEnumBudget);
std::size_t min_distance(const LinearCodeQuat& code, std::size_t budget = kDefaultEnumBudget);

ParamSummary parameter_summary(const TracePcm& pcm);
ParamSummary parameter_summary(const BinaryPairCode& pair);
/// Formula-only variants, usable for degenerate shapes without a
/// constructed code (e.g. k = n with an empty parity-check matrix).
ParamSummary quaternary_params(std::size_t n, std::size_t k, std::optional<std::size_t> d = {});
ParamSummary binary_pair_params(std::size_t n0, std::size_t n1, std::size_t k,
                                std::optional<std::size_t> d0 = {},
                                std::optional<std::size_t> d1 = {});

}  // namespace lnqec

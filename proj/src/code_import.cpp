#include "lnqec/code_import.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace lnqec {

std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = j;
    return inv;
}

BinVector apply_permutation(const BinVector& v, const std::vector<std::size_t>& perm) {
    if (v.size() != perm.size()) throw LengthMismatch("apply_permutation: size mismatch");
    BinVector out(v.size());
    for (std::size_t j = 0; j < perm.size(); ++j) out.set(j, v.get(perm[j]));
    return out;
}

GF4Vector apply_permutation(const GF4Vector& v, const std::vector<std::size_t>& perm) {
    return {apply_permutation(v.z_plane(), perm), apply_permutation(v.x_plane(), perm)};
}

namespace {

// Pivot columns first, remaining columns after them in their original order.
std::vector<std::size_t> pivot_first_permutation(const std::vector<std::size_t>& pivots,
                                                 std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> perm = pivots;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) perm.push_back(c);
    }
    return perm;
}

void check_enum_budget(std::size_t q, std::size_t k, std::size_t budget) {
    const std::size_t bits_per_symbol = (q == 4) ? 2 : 1;
    const std::size_t bits = k * bits_per_symbol;
    if (bits >= 63 || (std::size_t(1) << bits) > budget) {
        throw BudgetExceeded("min_distance: q^k exceeds enumeration budget");
    }
}

}  // namespace

LinearCodeBin import_binary(const BinMatrix& H) {
    if (H.rows() == 0 || H.cols() == 0 || H.is_zero()) {
        throw ZeroMatrix("import_binary: parity-check matrix is zero");
    }
    const std::size_t n = H.cols();

    RowSpan span(n);
    std::vector<BinVector> kept;
    std::vector<BinVector> redundant;
    std::vector<BinVector> combos;
    for (std::size_t r = 0; r < H.rows(); ++r) {
        BinVector row = H.row(r);
        auto res = span.add_row(row);
        if (res.independent) {
            kept.push_back(std::move(row));
        } else {
            redundant.push_back(std::move(row));
            combos.push_back(std::move(res.combination));
        }
    }

    LinearCodeBin code;
    code.n = n;
    code.k = n - kept.size();

    BinMatrix K = BinMatrix::from_rows(kept);
    code.perm = pivot_first_permutation(K.pivot_columns(), n);
    code.H = K.select_columns(code.perm);

    if (!redundant.empty()) {
        code.redundant_rows = BinMatrix::from_rows(redundant).select_columns(code.perm);
        BinMatrix combo_m(redundant.size(), kept.size());
        for (std::size_t j = 0; j < combos.size(); ++j) {
            // Combinations were recorded while the span was still growing;
            // pad each to the final number of kept rows.
            for (std::size_t i = 0; i < combos[j].size(); ++i) {
                combo_m.set(j, i, combos[j].get(i));
            }
        }
        code.redundant_combos = std::move(combo_m);
    }
    return code;
}

LinearCodeQuat import_quaternary(const GF4Matrix& H) {
    if (H.rows() == 0 || H.cols() == 0 || H.is_zero()) {
        throw ZeroMatrix("import_quaternary: parity-check matrix is zero");
    }
    const std::size_t n = H.cols();

    // GF(4)-linear dependence tracked as GF(2) dependence of the doubled
    // row set {h, w*h} on concatenated (z, x) planes.
    RowSpan span(2 * n);
    std::vector<GF4Vector> kept;
    std::vector<GF4Vector> redundant;
    for (std::size_t r = 0; r < H.rows(); ++r) {
        GF4Vector row = H.row(r);
        auto res = span.add_row(BinVector::concat(row.z_plane(), row.x_plane()));
        if (res.independent) {
            const GF4Vector wrow = row.scaled(gf4_omega);
            span.add_row(BinVector::concat(wrow.z_plane(), wrow.x_plane()));
            kept.push_back(std::move(row));
        } else {
            redundant.push_back(std::move(row));
        }
    }

    LinearCodeQuat code;
    code.n = n;
    code.k = n - kept.size();

    GF4Matrix K(kept.size(), n);
    for (std::size_t r = 0; r < kept.size(); ++r) K.set_row(r, kept[r]);
    code.perm = pivot_first_permutation(K.pivot_columns(), n);
    code.H = K.select_columns(code.perm);

    if (!redundant.empty()) {
        GF4Matrix R(redundant.size(), n);
        for (std::size_t r = 0; r < redundant.size(); ++r) R.set_row(r, redundant[r]);
        code.redundant_rows = R.select_columns(code.perm);
    }
    return code;
}

TracePcm build_trace_pcm(const LinearCodeQuat& code) {
    TracePcm pcm;
    pcm.n = code.n;
    pcm.k = code.k;
    pcm.d = code.d;
    pcm.perm = code.perm;

    pcm.H_Q = GF4Matrix::vstack(code.H, code.H.scaled(gf4_omega));
    pcm.H_Z = pcm.H_Q.z_plane();
    pcm.H_X = pcm.H_Q.x_plane();

    const std::size_t r = code.n - code.k;
    std::vector<std::size_t> left(r), right(code.k);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), r);

    pcm.A_Z = pcm.H_Z.select_columns(left);
    pcm.A_X = pcm.H_X.select_columns(left);
    pcm.N_Z = pcm.H_Z.select_columns(right);
    pcm.N_X = pcm.H_X.select_columns(right);
    pcm.A = BinMatrix::hstack(pcm.A_Z, pcm.A_X);
    try {
        pcm.A_inv = pcm.A.inverse();
    } catch (const SingularMatrix&) {
        throw InternalRankError("build_trace_pcm: block A is singular");
    }
    return pcm;
}

BinaryPairCode build_binary_pair(const LinearCodeBin& code0, const LinearCodeBin& code1) {
    if (code0.k != code1.k) {
        throw DimensionMismatch("build_binary_pair: code dimensions differ (" +
                                std::to_string(code0.k) + " vs " + std::to_string(code1.k) + ")");
    }
    BinaryPairCode pair;
    pair.code0 = code0;
    pair.code1 = code1;

    const std::size_t r0 = code0.n - code0.k;
    const std::size_t r1 = code1.n - code1.k;
    const std::size_t k = code0.k;

    std::vector<std::size_t> left0(r0), right0(k), left1(r1), right1(k);
    std::iota(left0.begin(), left0.end(), 0);
    std::iota(right0.begin(), right0.end(), r0);
    std::iota(left1.begin(), left1.end(), 0);
    std::iota(right1.begin(), right1.end(), r1);

    const BinMatrix A_Z = code0.H.select_columns(left0);
    const BinMatrix B_Z = code0.H.select_columns(right0);
    const BinMatrix A_X = code1.H.select_columns(left1);
    const BinMatrix B_X = code1.H.select_columns(right1);

    try {
        pair.A_Z_inv = A_Z.inverse();
        pair.A_X_inv = A_X.inverse();
    } catch (const SingularMatrix&) {
        throw InternalRankError("build_binary_pair: leading block is singular");
    }

    // A = diag(A_Z, A_X)
    BinMatrix A(r0 + r1, r0 + r1);
    BinMatrix A_inv(r0 + r1, r0 + r1);
    for (std::size_t i = 0; i < r0; ++i) {
        for (std::size_t j = 0; j < r0; ++j) {
            A.set(i, j, A_Z.get(i, j));
            A_inv.set(i, j, pair.A_Z_inv.get(i, j));
        }
    }
    for (std::size_t i = 0; i < r1; ++i) {
        for (std::size_t j = 0; j < r1; ++j) {
            A.set(r0 + i, r0 + j, A_X.get(i, j));
            A_inv.set(r0 + i, r0 + j, pair.A_X_inv.get(i, j));
        }
    }
    pair.A = std::move(A);
    pair.A_inv = std::move(A_inv);

    pair.N_Z = BinMatrix::vstack(B_Z, BinMatrix(r1, k));
    pair.N_X = BinMatrix::vstack(BinMatrix(r0, k), B_X);
    return pair;
}

std::size_t min_distance(const LinearCodeBin& code, std::size_t budget) {
    if (code.k == 0) throw NoCodewords("min_distance: code has no nonzero codewords");
    check_enum_budget(2, code.k, budget);

    const auto basis = code.H.kernel_basis();
    assert(basis.size() == code.k);

    // Gray-code walk over all nonzero combinations.
    BinVector current(code.n);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::size_t total = std::size_t(1) << code.k;
    for (std::size_t i = 1; i < total; ++i) {
        current.xor_assign(basis[std::countr_zero(i)]);
        best = std::min(best, current.weight());
    }
    return best;
}

std::size_t min_distance(const LinearCodeQuat& code, std::size_t budget) {
    if (code.k == 0) throw NoCodewords("min_distance: code has no nonzero codewords");
    check_enum_budget(4, code.k, budget);

    const auto basis = code.H.kernel_basis();
    assert(basis.size() == code.k);

    std::size_t best = std::numeric_limits<std::size_t>::max();
    // Depth-first over coefficient vectors in F4^k.
    std::vector<GF4Vector> stack(code.k + 1, GF4Vector(code.n));
    std::vector<std::uint8_t> digit(code.k, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == code.k) {
            const std::size_t w = stack[depth].weight();
            if (w > 0) best = std::min(best, w);
            // backtrack to the deepest level with an unfinished digit
            while (depth > 0 && digit[depth - 1] == 3) {
                digit[--depth] = 0;
            }
            if (depth == 0) break;
            ++digit[depth - 1];
            --depth;
            continue;
        }
        stack[depth + 1] = stack[depth];
        if (digit[depth] != 0) {
            stack[depth + 1].add_assign(basis[depth].scaled(GF4(digit[depth])));
        }
        ++depth;
    }
    return best;
}

namespace {

std::optional<std::size_t> half_distance(std::optional<std::size_t> d) {
    if (!d) return std::nullopt;
    return (*d - 1) / 2;
}

}  // namespace

ParamSummary quaternary_params(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
    ParamSummary s;
    s.physical_qubits = 2 * n - k;
    s.logical_qubits = k;
    s.aux_qubits = 2 * (n - k);
    s.t0 = half_distance(d);
    s.is_pair = false;
    return s;
}

ParamSummary binary_pair_params(std::size_t n0, std::size_t n1, std::size_t k,
                                std::optional<std::size_t> d0, std::optional<std::size_t> d1) {
    ParamSummary s;
    s.physical_qubits = n0 + n1 - k;
    s.logical_qubits = k;
    s.aux_qubits = n0 + n1 - 2 * k;
    s.t0 = half_distance(d0);
    s.t1 = half_distance(d1);
    s.is_pair = true;
    return s;
}

ParamSummary parameter_summary(const TracePcm& pcm) {
    return quaternary_params(pcm.n, pcm.k, pcm.d);
}

ParamSummary parameter_summary(const BinaryPairCode& pair) {
    return binary_pair_params(pair.code0.n, pair.code1.n, pair.k(), pair.code0.d, pair.code1.d);
}

}  // namespace lnqec

#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lnqec/errors.hpp"

namespace lnqec {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BinVector {
  public:
    BinVector() = default;
    explicit BinVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static BinVector from_bits(const std::vector<int>& bits);
    static BinVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_assign(const BinVector& other);
    bool dot(const BinVector& other) const;  // parity of the entrywise AND
    std::size_t weight() const;
    bool is_zero() const;

    /// Bits [begin, begin+len) as a new vector.
    BinVector slice(std::size_t begin, std::size_t len) const;
    static BinVector concat(const BinVector& a, const BinVector& b);

    /// Entrywise OR, used for support computations.
    static BinVector bit_or(const BinVector& a, const BinVector& b);

    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const BinVector& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator!=(const BinVector& other) const { return !(*this == other); }

    friend BinVector operator^(BinVector a, const BinVector& b) {
        a.xor_assign(b);
        return a;
    }

    std::string to_string() const;  // e.g. "0110"

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;

    friend class BinMatrix;
};

struct BinVectorHash {
    std::size_t operator()(const BinVector& v) const;
};

/// Dense matrix over GF(2) with bit-packed rows. Row and column counts are
/// fixed at construction; elimination routines work on copies.
class BinMatrix {
  public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), data_(rows * words_per_row_, 0) {}

    static BinMatrix identity(std::size_t n);
    static BinMatrix from_rows(const std::vector<BinVector>& rows);
    static BinMatrix from_bits(std::size_t rows, std::size_t cols, const std::vector<int>& bits);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (c & 63);
        std::uint64_t& w = data_[r * words_per_row_ + (c >> 6)];
        if (v) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    }

    BinVector row(std::size_t r) const;
    void set_row(std::size_t r, const BinVector& v);
    BinVector column(std::size_t c) const;

    void xor_row_into(std::size_t src, std::size_t dst);  // row[dst] ^= row[src]
    void swap_rows(std::size_t a, std::size_t b);

    BinMatrix transposed() const;
    BinMatrix operator*(const BinMatrix& other) const;

    /// M * v^T as a column vector of length rows().
    BinVector mul_vec(const BinVector& v) const;
    /// v * M as a row vector of length cols().
    BinVector vec_mul(const BinVector& v) const;

    std::size_t rank() const;
    bool is_zero() const;

    /// Inverse over GF(2); throws SingularMatrix.
    BinMatrix inverse() const;

    /// Ordered pivot column indices from leftmost-first Gaussian elimination.
    /// Throws RankDeficient if the row rank is below rows().
    std::vector<std::size_t> pivot_columns() const;

    /// Basis of the right kernel {v : M v^T = 0}.
    std::vector<BinVector> kernel_basis() const;

    /// New matrix whose column j is this matrix's column idx[j].
    BinMatrix select_columns(const std::vector<std::size_t>& idx) const;

    static BinMatrix hstack(const BinMatrix& a, const BinMatrix& b);
    static BinMatrix vstack(const BinMatrix& a, const BinMatrix& b);

    bool operator==(const BinMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const BinMatrix& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;

    std::span<std::uint64_t> row_words(std::size_t r) {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }
};

/// Row echelon form in place; returns the pivot column indices (leftmost
/// first). Shared by rank, inverse and pivot selection.
std::vector<std::size_t> echelonize(BinMatrix& m);

/// Incremental GF(2) row-span tracker. Feeds rows one at a time; dependent
/// rows come back with their expansion over the independent rows kept so far.
class RowSpan {
  public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}

    struct Result {
        bool independent;
        BinVector combination;  // over kept rows, empty when independent
    };

    Result add_row(const BinVector& row);
    std::size_t dim() const { return basis_.size(); }

  private:
    std::size_t cols_;
    std::vector<BinVector> basis_;       // reduced, pivot-bearing rows
    std::vector<std::size_t> pivots_;    // pivot column of basis_[i]
    std::vector<BinVector> expansion_;   // basis_[i] over kept input rows
    std::size_t kept_ = 0;
};

}  // namespace lnqec

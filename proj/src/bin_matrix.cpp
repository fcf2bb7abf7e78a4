#include "lnqec/bin_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace lnqec {

namespace {

// Mask selecting the valid bits of the last word of an n-bit vector.
std::uint64_t tail_mask(std::size_t n) {
    const std::size_t rem = n & 63;
    return rem == 0 ? ~std::uint64_t(0) : (std::uint64_t(1) << rem) - 1;
}

}  // namespace

BinVector BinVector::from_bits(const std::vector<int>& bits) {
    BinVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) v.set(i, true);
    }
    return v;
}

BinVector BinVector::unit(std::size_t n, std::size_t i) {
    BinVector v(n);
    v.set(i, true);
    return v;
}

void BinVector::xor_assign(const BinVector& other) {
    if (size_ != other.size_) throw LengthMismatch("BinVector::xor_assign: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BinVector::dot(const BinVector& other) const {
    if (size_ != other.size_) throw LengthMismatch("BinVector::dot: size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::size_t BinVector::weight() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool BinVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BinVector BinVector::slice(std::size_t begin, std::size_t len) const {
    assert(begin + len <= size_);
    BinVector out(len);
    if (len == 0) return out;
    const std::size_t word_off = begin >> 6;
    const std::size_t bit_off = begin & 63;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        std::uint64_t lo = words_[word_off + w] >> bit_off;
        std::uint64_t hi = 0;
        if (bit_off != 0 && word_off + w + 1 < words_.size()) {
            hi = words_[word_off + w + 1] << (64 - bit_off);
        }
        out.words_[w] = lo | hi;
    }
    out.words_.back() &= tail_mask(len);
    return out;
}

BinVector BinVector::concat(const BinVector& a, const BinVector& b) {
    BinVector out(a.size_ + b.size_);
    for (std::size_t i = 0; i < a.size_; ++i) {
        if (a.get(i)) out.set(i, true);
    }
    for (std::size_t i = 0; i < b.size_; ++i) {
        if (b.get(i)) out.set(a.size_ + i, true);
    }
    return out;
}

BinVector BinVector::bit_or(const BinVector& a, const BinVector& b) {
    if (a.size_ != b.size_) throw LengthMismatch("BinVector::bit_or: size mismatch");
    BinVector out(a.size_);
    for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = a.words_[w] | b.words_[w];
    return out;
}

std::string BinVector::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

std::size_t BinVectorHash::operator()(const BinVector& v) const {
    // FNV-1a over the packed words.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : v.words()) {
        h ^= w;
        h *= 1099511628211ull;
    }
    h ^= v.size();
    h *= 1099511628211ull;
    return static_cast<std::size_t>(h);
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinMatrix BinMatrix::from_rows(const std::vector<BinVector>& rows) {
    if (rows.empty()) return {};
    BinMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BinMatrix BinMatrix::from_bits(std::size_t rows, std::size_t cols, const std::vector<int>& bits) {
    assert(bits.size() == rows * cols);
    BinMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (bits[r * cols + c]) m.set(r, c, true);
        }
    }
    return m;
}

BinVector BinMatrix::row(std::size_t r) const {
    BinVector v(cols_);
    auto words = row_words(r);
    std::copy(words.begin(), words.end(), v.words_.begin());
    return v;
}

void BinMatrix::set_row(std::size_t r, const BinVector& v) {
    if (v.size() != cols_) throw LengthMismatch("BinMatrix::set_row: size mismatch");
    auto words = row_words(r);
    std::copy(v.words_.begin(), v.words_.end(), words.begin());
}

BinVector BinMatrix::column(std::size_t c) const {
    BinVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) v.set(r, true);
    }
    return v;
}

void BinMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    auto s = row_words(src);
    auto d = row_words(dst);
    for (std::size_t w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

void BinMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row_words(a);
    auto rb = row_words(b);
    for (std::size_t w = 0; w < words_per_row_; ++w) std::swap(ra[w], rb[w]);
}

BinMatrix BinMatrix::transposed() const {
    BinMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r, true);
        }
    }
    return t;
}

BinMatrix BinMatrix::operator*(const BinMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("BinMatrix::operator*: inner dimensions differ");
    BinMatrix out(rows_, other.cols_);
    // Accumulate rows of `other` selected by the bits of each row of `this`.
    for (std::size_t r = 0; r < rows_; ++r) {
        auto acc = out.row_words(r);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                auto src = other.row_words(c);
                for (std::size_t w = 0; w < other.words_per_row_; ++w) acc[w] ^= src[w];
            }
        }
    }
    return out;
}

BinVector BinMatrix::mul_vec(const BinVector& v) const {
    if (v.size() != cols_) throw LengthMismatch("BinMatrix::mul_vec: size mismatch");
    BinVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_per_row_; ++w) acc ^= words[w] & v.words_[w];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

BinVector BinMatrix::vec_mul(const BinVector& v) const {
    if (v.size() != rows_) throw LengthMismatch("BinMatrix::vec_mul: size mismatch");
    BinVector out(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (v.get(r)) {
            auto words = row_words(r);
            for (std::size_t w = 0; w < words_per_row_; ++w) out.words_[w] ^= words[w];
        }
    }
    return out;
}

std::vector<std::size_t> echelonize(BinMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && !m.get(sel, c)) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(pivot_row, sel);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != pivot_row && m.get(r, c)) m.xor_row_into(pivot_row, r);
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

std::size_t BinMatrix::rank() const {
    BinMatrix copy = *this;
    return echelonize(copy).size();
}

bool BinMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

BinMatrix BinMatrix::inverse() const {
    if (rows_ != cols_) throw SingularMatrix("BinMatrix::inverse: matrix not square");
    BinMatrix aug = hstack(*this, identity(rows_));
    auto pivots = echelonize(aug);
    if (pivots.size() != rows_ || pivots.back() >= cols_) {
        throw SingularMatrix("BinMatrix::inverse: matrix is singular");
    }
    BinMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            inv.set(r, c, aug.get(r, cols_ + c));
        }
    }
    return inv;
}

std::vector<std::size_t> BinMatrix::pivot_columns() const {
    BinMatrix copy = *this;
    auto pivots = echelonize(copy);
    if (pivots.size() != rows_) {
        throw RankDeficient("BinMatrix::pivot_columns: row rank " + std::to_string(pivots.size()) +
                            " below row count " + std::to_string(rows_));
    }
    return pivots;
}

std::vector<BinVector> BinMatrix::kernel_basis() const {
    BinMatrix reduced = *this;
    auto pivots = echelonize(reduced);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<BinVector> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        BinVector v(cols_);
        v.set(c, true);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (reduced.get(i, c)) v.set(pivots[i], true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

BinMatrix BinMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    BinMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (get(r, idx[j])) out.set(r, j, true);
        }
    }
    return out;
}

BinMatrix BinMatrix::hstack(const BinMatrix& a, const BinMatrix& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("BinMatrix::hstack: row counts differ");
    BinMatrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        out.set_row(r, BinVector::concat(a.row(r), b.row(r)));
    }
    return out;
}

BinMatrix BinMatrix::vstack(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("BinMatrix::vstack: column counts differ");
    BinMatrix out(a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) out.set_row(r, a.row(r));
    for (std::size_t r = 0; r < b.rows_; ++r) out.set_row(a.rows_ + r, b.row(r));
    return out;
}

std::string BinMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s.push_back('\n');
    }
    return s;
}

RowSpan::Result RowSpan::add_row(const BinVector& row) {
    if (row.size() != cols_) throw LengthMismatch("RowSpan::add_row: size mismatch");
    BinVector residual = row;
    BinVector combo(kept_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (residual.get(pivots_[i])) {
            residual.xor_assign(basis_[i]);
            combo.xor_assign(expansion_[i].slice(0, kept_));
        }
    }
    if (residual.is_zero()) {
        return {false, combo};
    }
    std::size_t pivot = 0;
    while (!residual.get(pivot)) ++pivot;
    BinVector exp(cols_);  // capacity for up to cols_ kept rows
    for (std::size_t i = 0; i < kept_; ++i) exp.set(i, combo.get(i));
    exp.set(kept_, true);
    basis_.push_back(std::move(residual));
    pivots_.push_back(pivot);
    expansion_.push_back(std::move(exp));
    ++kept_;
    return {true, {}};
}

}  // namespace lnqec

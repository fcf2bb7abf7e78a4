#include "lnqec/gf4.hpp"

#include <cassert>

namespace lnqec {

GF4Vector::GF4Vector(BinVector z, BinVector x) : z_(std::move(z)), x_(std::move(x)) {
    if (z_.size() != x_.size()) throw LengthMismatch("GF4Vector: plane sizes differ");
}

GF4Vector GF4Vector::from_values(const std::vector<int>& values) {
    GF4Vector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        assert(values[i] >= 0 && values[i] < 4);
        v.set(i, GF4(static_cast<std::uint8_t>(values[i])));
    }
    return v;
}

void GF4Vector::add_assign(const GF4Vector& other) {
    z_.xor_assign(other.z_);
    x_.xor_assign(other.x_);
}

GF4Vector GF4Vector::scaled(GF4 s) const {
    switch (s.v) {
        case 0:
            return GF4Vector(size());
        case 1:
            return *this;
        case 2:  // w * (z + w x) = x + w (z + x)
            return {x_, z_ ^ x_};
        default:  // w2 * (z + w x) = (z + x) + w z
            return {z_ ^ x_, z_};
    }
}

std::size_t GF4Vector::weight() const {
    return BinVector::bit_or(z_, x_).weight();
}

std::string GF4Vector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += get(i).to_string();
    }
    return s + ")";
}

GF4Matrix::GF4Matrix(BinMatrix z, BinMatrix x) : z_(std::move(z)), x_(std::move(x)) {
    if (z_.rows() != x_.rows() || z_.cols() != x_.cols()) {
        throw DimensionMismatch("GF4Matrix: plane shapes differ");
    }
}

GF4Matrix GF4Matrix::from_values(std::size_t rows, std::size_t cols, const std::vector<int>& values) {
    assert(values.size() == rows * cols);
    GF4Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, GF4(static_cast<std::uint8_t>(values[r * cols + c])));
        }
    }
    return m;
}

GF4Matrix GF4Matrix::from_binary(const BinMatrix& m) {
    return {m, BinMatrix(m.rows(), m.cols())};
}

void GF4Matrix::set_row(std::size_t r, const GF4Vector& v) {
    z_.set_row(r, v.z_plane());
    x_.set_row(r, v.x_plane());
}

GF4Matrix GF4Matrix::scaled(GF4 s) const {
    switch (s.v) {
        case 0:
            return GF4Matrix(rows(), cols());
        case 1:
            return *this;
        case 2: {
            BinMatrix zx = z_;
            for (std::size_t r = 0; r < rows(); ++r) zx.set_row(r, z_.row(r) ^ x_.row(r));
            return {x_, zx};
        }
        default: {
            BinMatrix zx = z_;
            for (std::size_t r = 0; r < rows(); ++r) zx.set_row(r, z_.row(r) ^ x_.row(r));
            return {zx, z_};
        }
    }
}

GF4Matrix GF4Matrix::operator*(const GF4Matrix& other) const {
    // (Z1 + w X1)(Z2 + w X2) = (Z1 Z2 + X1 X2) + w (Z1 X2 + X1 Z2 + X1 X2)
    const BinMatrix zz = z_ * other.z_;
    const BinMatrix xx = x_ * other.x_;
    const BinMatrix zx = z_ * other.x_;
    const BinMatrix xz = x_ * other.z_;
    BinMatrix rz(rows(), other.cols());
    BinMatrix rx(rows(), other.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        rz.set_row(r, zz.row(r) ^ xx.row(r));
        rx.set_row(r, zx.row(r) ^ xz.row(r) ^ xx.row(r));
    }
    return {std::move(rz), std::move(rx)};
}

GF4Vector GF4Matrix::mul_vec(const GF4Vector& v) const {
    const BinVector zz = z_.mul_vec(v.z_plane());
    const BinVector xx = x_.mul_vec(v.x_plane());
    const BinVector zx = z_.mul_vec(v.x_plane());
    const BinVector xz = x_.mul_vec(v.z_plane());
    return {zz ^ xx, zx ^ xz ^ xx};
}

void GF4Matrix::add_scaled_row(std::size_t src, GF4 s, std::size_t dst) {
    if (s.is_zero()) return;
    const GF4Vector scaled_row = row(src).scaled(s);
    z_.set_row(dst, z_.row(dst) ^ scaled_row.z_plane());
    x_.set_row(dst, x_.row(dst) ^ scaled_row.x_plane());
}

void GF4Matrix::scale_row(std::size_t r, GF4 s) {
    set_row(r, row(r).scaled(s));
}

void GF4Matrix::swap_rows(std::size_t a, std::size_t b) {
    z_.swap_rows(a, b);
    x_.swap_rows(a, b);
}

std::vector<std::size_t> GF4Matrix::echelonize_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols() && pivot_row < rows(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows() && get(sel, c).is_zero()) ++sel;
        if (sel == rows()) continue;
        swap_rows(pivot_row, sel);
        scale_row(pivot_row, get(pivot_row, c).inv());
        for (std::size_t r = 0; r < rows(); ++r) {
            if (r == pivot_row) continue;
            const GF4 e = get(r, c);
            if (!e.is_zero()) add_scaled_row(pivot_row, e, r);
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

std::size_t GF4Matrix::rank() const {
    GF4Matrix copy = *this;
    return copy.echelonize_in_place().size();
}

std::vector<std::size_t> GF4Matrix::pivot_columns() const {
    GF4Matrix copy = *this;
    auto pivots = copy.echelonize_in_place();
    if (pivots.size() != rows()) {
        throw RankDeficient("GF4Matrix::pivot_columns: row rank " + std::to_string(pivots.size()) +
                            " below row count " + std::to_string(rows()));
    }
    return pivots;
}

std::vector<GF4Vector> GF4Matrix::kernel_basis() const {
    GF4Matrix reduced = *this;
    auto pivots = reduced.echelonize_in_place();
    std::vector<bool> is_pivot(cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<GF4Vector> basis;
    for (std::size_t c = 0; c < cols(); ++c) {
        if (is_pivot[c]) continue;
        GF4Vector v(cols());
        v.set(c, gf4_one);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v.set(pivots[i], reduced.get(i, c));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

GF4Matrix GF4Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    return {z_.select_columns(idx), x_.select_columns(idx)};
}

GF4Matrix GF4Matrix::vstack(const GF4Matrix& a, const GF4Matrix& b) {
    return {BinMatrix::vstack(a.z_, b.z_), BinMatrix::vstack(a.x_, b.x_)};
}

std::string GF4Matrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows(); ++r) {
        s += row(r).to_string();
        s.push_back('\n');
    }
    return s;
}

}  // namespace lnqec

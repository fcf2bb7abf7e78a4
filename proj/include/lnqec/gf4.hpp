#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lnqec/bin_matrix.hpp"

namespace lnqec {

/// Element of GF(4) = {0, 1, w, w2} with w^2 = w + 1, stored as a = z + w*x
/// in the two low bits: bit 0 holds z, bit 1 holds x.
struct GF4 {
    std::uint8_t v = 0;

    constexpr GF4() = default;
    constexpr explicit GF4(std::uint8_t value) : v(value) {}
    static constexpr GF4 from_zx(bool z, bool x) {
        return GF4(static_cast<std::uint8_t>((z ? 1 : 0) | (x ? 2 : 0)));
    }

    constexpr bool z_bit() const { return v & 1; }
    constexpr bool x_bit() const { return (v >> 1) & 1; }
    constexpr bool is_zero() const { return v == 0; }

    friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(static_cast<std::uint8_t>(a.v ^ b.v)); }
    friend constexpr GF4 operator*(GF4 a, GF4 b) {
        // (z1 + w x1)(z2 + w x2) = (z1 z2 + x1 x2) + w (z1 x2 + x1 z2 + x1 x2)
        const unsigned z1 = a.v & 1, x1 = (a.v >> 1) & 1;
        const unsigned z2 = b.v & 1, x2 = (b.v >> 1) & 1;
        const unsigned z = (z1 & z2) ^ (x1 & x2);
        const unsigned x = (z1 & x2) ^ (x1 & z2) ^ (x1 & x2);
        return GF4(static_cast<std::uint8_t>(z | (x << 1)));
    }
    friend constexpr bool operator==(GF4 a, GF4 b) { return a.v == b.v; }
    friend constexpr bool operator!=(GF4 a, GF4 b) { return a.v != b.v; }

    /// Multiplicative inverse; zero maps to zero.
    constexpr GF4 inv() const {
        // 1^-1 = 1, w^-1 = w2, w2^-1 = w.
        constexpr std::uint8_t table[4] = {0, 1, 3, 2};
        return GF4(table[v]);
    }

    std::string to_string() const {
        static const char* names[4] = {"0", "1", "w", "w2"};
        return names[v];
    }
};

inline constexpr GF4 gf4_zero{0};
inline constexpr GF4 gf4_one{1};
inline constexpr GF4 gf4_omega{2};
inline constexpr GF4 gf4_omega2{3};

/// Tr(a) = a + a^2, mapping GF(4) onto GF(2). In (z, x) coordinates the
/// trace is simply the x bit.
constexpr bool trace(GF4 a) { return a.x_bit(); }

/// Vector over GF(4), held as two GF(2) bit-planes with entry i equal to
/// z[i] + w * x[i].
class GF4Vector {
  public:
    GF4Vector() = default;
    explicit GF4Vector(std::size_t n) : z_(n), x_(n) {}
    GF4Vector(BinVector z, BinVector x);

    static GF4Vector from_values(const std::vector<int>& values);

    std::size_t size() const { return z_.size(); }
    GF4 get(std::size_t i) const { return GF4::from_zx(z_.get(i), x_.get(i)); }
    void set(std::size_t i, GF4 a) {
        z_.set(i, a.z_bit());
        x_.set(i, a.x_bit());
    }

    const BinVector& z_plane() const { return z_; }
    const BinVector& x_plane() const { return x_; }

    void add_assign(const GF4Vector& other);
    GF4Vector scaled(GF4 s) const;
    std::size_t weight() const;  // number of nonzero entries
    bool is_zero() const { return z_.is_zero() && x_.is_zero(); }

    /// Entrywise Tr(a), i.e. the x plane.
    BinVector trace_vec() const { return x_; }
    /// Entrywise Tr(w * a) = z + x.
    BinVector trace_omega_vec() const { return z_ ^ x_; }

    bool operator==(const GF4Vector& other) const { return z_ == other.z_ && x_ == other.x_; }
    bool operator!=(const GF4Vector& other) const { return !(*this == other); }

    friend GF4Vector operator+(GF4Vector a, const GF4Vector& b) {
        a.add_assign(b);
        return a;
    }

    std::string to_string() const;

  private:
    BinVector z_;
    BinVector x_;
};

/// Matrix over GF(4) as two GF(2) bit-plane matrices, M = Z + w * X.
class GF4Matrix {
  public:
    GF4Matrix() = default;
    GF4Matrix(std::size_t rows, std::size_t cols) : z_(rows, cols), x_(rows, cols) {}
    GF4Matrix(BinMatrix z, BinMatrix x);

    static GF4Matrix from_values(std::size_t rows, std::size_t cols, const std::vector<int>& values);
    /// Embeds a binary matrix (x plane zero).
    static GF4Matrix from_binary(const BinMatrix& m);

    std::size_t rows() const { return z_.rows(); }
    std::size_t cols() const { return z_.cols(); }

    GF4 get(std::size_t r, std::size_t c) const { return GF4::from_zx(z_.get(r, c), x_.get(r, c)); }
    void set(std::size_t r, std::size_t c, GF4 a) {
        z_.set(r, c, a.z_bit());
        x_.set(r, c, a.x_bit());
    }

    const BinMatrix& z_plane() const { return z_; }
    const BinMatrix& x_plane() const { return x_; }

    GF4Vector row(std::size_t r) const { return {z_.row(r), x_.row(r)}; }
    void set_row(std::size_t r, const GF4Vector& v);

    GF4Matrix scaled(GF4 s) const;
    GF4Matrix operator*(const GF4Matrix& other) const;
    GF4Vector mul_vec(const GF4Vector& v) const;  // M * v^T

    std::size_t rank() const;
    bool is_zero() const { return z_.is_zero() && x_.is_zero(); }

    /// Ordered pivot columns over GF(4), leftmost-first; throws RankDeficient
    /// when the row rank is below rows().
    std::vector<std::size_t> pivot_columns() const;

    /// Basis of {v : M v^T = 0} over GF(4).
    std::vector<GF4Vector> kernel_basis() const;

    GF4Matrix select_columns(const std::vector<std::size_t>& idx) const;
    static GF4Matrix vstack(const GF4Matrix& a, const GF4Matrix& b);

    bool operator==(const GF4Matrix& other) const { return z_ == other.z_ && x_ == other.x_; }
    bool operator!=(const GF4Matrix& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    BinMatrix z_;
    BinMatrix x_;

    // row[dst] += s * row[src], word-parallel on the planes
    void add_scaled_row(std::size_t src, GF4 s, std::size_t dst);
    void scale_row(std::size_t r, GF4 s);
    void swap_rows(std::size_t a, std::size_t b);

    std::vector<std::size_t> echelonize_in_place();
};

}  // namespace lnqec

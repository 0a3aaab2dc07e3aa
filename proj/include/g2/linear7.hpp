#pragma once

#include "g2/rational.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace g2 {

inline constexpr int kDim = 7;

/// Vector in R^7 with exact coordinates, internal indices 0..6.
class Vec7 {
public:
    Vec7() = default;
    explicit Vec7(const std::array<Rational, kDim>& coords) : c_(coords) {}

    static Vec7 basis(int i);

    Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] Rational norm_sq() const;
    [[nodiscard]] const std::array<Rational, kDim>& coords() const { return c_; }
    [[nodiscard]] std::string to_string() const;

    Vec7& operator+=(const Vec7& rhs);
    Vec7& operator-=(const Vec7& rhs);
    Vec7& operator*=(const Rational& s);

    friend Vec7 operator+(Vec7 a, const Vec7& b) { return a += b; }
    friend Vec7 operator-(Vec7 a, const Vec7& b) { return a -= b; }
    friend Vec7 operator-(Vec7 a) { return a *= Rational(-1); }
    friend Vec7 operator*(const Rational& s, Vec7 a) { return a *= s; }
    friend Vec7 operator*(Vec7 a, const Rational& s) { return a *= s; }
    friend bool operator==(const Vec7&, const Vec7&) = default;

private:
    std::array<Rational, kDim> c_{};
};

Rational dot(const Vec7& u, const Vec7& v);

/// 7x7 exact matrix. Column-action convention: M(e_j) = sum_i M(i,j) e_i.
class Mat7 {
public:
    Mat7() = default;

    static Mat7 identity();
    static Mat7 scalar(const Rational& s);
    static Mat7 diagonal(const std::array<Rational, kDim>& d);
    static Mat7 from_columns(const std::array<Vec7, kDim>& cols);
    /// Matrix unit E_(i,j) with a single 1 at row i, column j.
    static Mat7 unit(int i, int j);

    Rational& operator()(int i, int j) { return e_[idx(i, j)]; }
    const Rational& operator()(int i, int j) const { return e_[idx(i, j)]; }

    [[nodiscard]] Vec7 column(int j) const;
    [[nodiscard]] Vec7 row(int i) const;
    [[nodiscard]] Vec7 apply(const Vec7& v) const;
    [[nodiscard]] Mat7 transpose() const;
    [[nodiscard]] Rational trace() const;
    [[nodiscard]] Mat7 sym_part() const;
    [[nodiscard]] Mat7 skew_part() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_symmetric() const;
    [[nodiscard]] bool is_skew() const;
    /// |M|^2 = tr(M^T M).
    [[nodiscard]] Rational norm_sq() const;
    /// Row-major "[(a, b, ...), (...), ...]".
    [[nodiscard]] std::string to_string() const;

    Mat7& operator+=(const Mat7& rhs);
    Mat7& operator-=(const Mat7& rhs);
    Mat7& operator*=(const Rational& s);

    friend Mat7 operator+(Mat7 a, const Mat7& b) { return a += b; }
    friend Mat7 operator-(Mat7 a, const Mat7& b) { return a -= b; }
    friend Mat7 operator-(Mat7 a) { return a *= Rational(-1); }
    friend Mat7 operator*(const Rational& s, Mat7 a) { return a *= s; }
    friend Mat7 operator*(Mat7 a, const Rational& s) { return a *= s; }
    friend Mat7 operator*(const Mat7& a, const Mat7& b);
    friend bool operator==(const Mat7&, const Mat7&) = default;

private:
    static std::size_t idx(int i, int j) { return static_cast<std::size_t>(i * kDim + j); }
    std::array<Rational, kDim * kDim> e_{};
};

/// Trace inner product <A,B> = tr(A^T B).
Rational trace_inner(const Mat7& a, const Mat7& b);
Mat7 commutator(const Mat7& a, const Mat7& b);

}  // namespace g2

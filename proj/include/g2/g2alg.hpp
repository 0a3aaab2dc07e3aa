#pragma once

#include "g2/frame.hpp"
#include "g2/linear7.hpp"

#include <vector>

namespace g2 {

/// Element of so(7): a 7x7 matrix with mat + mat^T = 0.
class SkewMat {
public:
    SkewMat() = default;
    /// Throws std::invalid_argument unless `m` is exactly skew-symmetric.
    explicit SkewMat(const Mat7& m);
    /// Skew part (m - m^T)/2 of an arbitrary matrix.
    static SkewMat skew_part_of(const Mat7& m);

    [[nodiscard]] const Mat7& mat() const { return m_; }
    [[nodiscard]] Vec7 apply(const Vec7& v) const { return m_.apply(v); }
    [[nodiscard]] bool is_zero() const { return m_.is_zero(); }

    friend SkewMat operator+(const SkewMat& a, const SkewMat& b) { return SkewMat(a.m_ + b.m_); }
    friend SkewMat operator-(const SkewMat& a, const SkewMat& b) { return SkewMat(a.m_ - b.m_); }
    friend SkewMat operator*(const Rational& s, const SkewMat& a) { return SkewMat(s * a.m_); }
    friend bool operator==(const SkewMat&, const SkewMat&) = default;

private:
    Mat7 m_;
};

/// [a, b] = ab - ba, again skew.
SkewMat bracket(const SkewMat& a, const SkewMat& b);

/// A_v, the operator u |-> u x v; entries a_ij = sum_k eps_ijk v_k.
SkewMat a_of(const Vec7& v, const G2Frame& frame);

/// p(a) = sum_ijk eps_ijk a_jk e_i. Its kernel on so(7) is g2.
Vec7 p_map(const SkewMat& a, const G2Frame& frame);
/// p on an arbitrary matrix; only the skew part contributes.
Vec7 p_map(const Mat7& m, const G2Frame& frame);

struct So7Split {
    SkewMat g2;  // p(g2) = 0
    Vec7 vec;    // a = g2 + A_vec
};

/// a = (a - A_{p(a)/6}) + A_{p(a)/6}.
So7Split split_so7(const SkewMat& a, const G2Frame& frame);

/// Component of [A_u, A_v] orthogonal to g2, which is A_{u x v}.
SkewMat bracket_g2perp(const Vec7& u, const Vec7& v, const G2Frame& frame);

/// The G2-irreducible pieces of an endomorphism:
/// T = scalar * Id + sym0 + g2part + A_vector.
struct EndoSplit {
    Rational scalar;
    Mat7 sym0;
    SkewMat g2part;
    Vec7 vector;

    [[nodiscard]] Mat7 reconstruct(const G2Frame& frame) const;
    /// Trace norms |scalar Id|^2, |sym0|^2, |g2part|^2, |A_vector|^2.
    [[nodiscard]] std::array<Rational, 4> part_norms_sq(const G2Frame& frame) const;
};

EndoSplit decompose_endo(const Mat7& t, const G2Frame& frame);

/// Basis of g2 = ker p inside so(7) (14 elements for a valid frame).
std::vector<SkewMat> g2_basis(const G2Frame& frame);

/// a(u x v) = a(u) x v + u x a(v) for all basis u, v.
bool is_cross_derivation(const SkewMat& a, const G2Frame& frame);

}  // namespace g2

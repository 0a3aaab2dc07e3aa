#pragma once

#include "g2/frame.hpp"
#include "g2/linear7.hpp"

#include <array>
#include <string>
#include <vector>

namespace g2 {

/// Coefficients c[0..7] of det(T - t I) = sum_i c[i] t^i, so that
/// c[i] = (-1)^i sigma_{7-i}(T).
using CharPoly = std::array<Rational, 8>;

/// Exact, via similarity reduction to Hessenberg form.
CharPoly char_poly(const Mat7& t);
/// Elementary symmetric function sigma_k(T) read off the characteristic polynomial.
Rational sigma_from_charpoly(const CharPoly& p, int k);
std::string format_charpoly(const CharPoly& p);

/// ((tr T)^2 - tr(T^2)) / 2.
Rational sigma2(const Mat7& t);

// Cross-product quadratic invariants; they depend on the frame's epsilon table.
Rational i0(const Mat7& t, const G2Frame& frame);
Rational i1(const Mat7& t, const G2Frame& frame);
Rational i2(const Mat7& t, const G2Frame& frame);

struct InvariantReport {
    Rational sigma1;
    Rational sigma2;
    Rational norm_sq;
    Rational i0;
    Rational i1;
    Rational i2;
    CharPoly charpoly;
};

InvariantReport compute_invariants(const Mat7& t, const G2Frame& frame);

/// Checks i1 = -i0 + |T|^2 + 4 sigma2 - sigma1^2, i2 = i0 + |T|^2 - 2 sigma2 - sigma1^2
/// and i1 - i2 = -2 i0 + 6 sigma2, together with the charpoly extraction of
/// sigma1 and sigma2.
struct QuadraticRelationReport {
    bool pass = true;
    InvariantReport values;
    std::vector<std::string> violated;
};

QuadraticRelationReport verify_quadratic_relations(const Mat7& t, const G2Frame& frame);

enum class SpecialShape { Scalar, Symmetric, Vector, NotSpecial };
std::string to_string(SpecialShape shape);

/// Detects whether T is lambda Id, symmetric, or A_Z and checks the closed
/// forms of the six invariants for that shape.
struct SpecialCaseReport {
    SpecialShape shape = SpecialShape::NotSpecial;
    bool pass = true;
    InvariantReport values;
    Rational parameter;  // lambda for Scalar, |Z|^2 for Vector
    std::vector<std::string> violated;
};

SpecialCaseReport special_case_check(const Mat7& t, const G2Frame& frame);

}  // namespace g2

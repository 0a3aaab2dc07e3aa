#pragma once

#include "g2/frame.hpp"
#include "g2/g2alg.hpp"
#include "g2/linear7.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace g2 {

/// 7x7 grid of vectors; entry (i, j) is a value attached to (e_i, e_j).
class VectorGrid {
public:
    Vec7& at(int i, int j) { return v_[static_cast<std::size_t>(i * kDim + j)]; }
    const Vec7& at(int i, int j) const { return v_[static_cast<std::size_t>(i * kDim + j)]; }

    /// sum_ij |at(i,j)|^2
    [[nodiscard]] Rational norm_sq() const;
    [[nodiscard]] bool is_zero() const;

    friend VectorGrid operator+(const VectorGrid& a, const VectorGrid& b);
    friend bool operator==(const VectorGrid&, const VectorGrid&) = default;

private:
    std::array<Vec7, kDim * kDim> v_{};
};

/// Intrinsic torsion xi of the G2-structure induced by an endomorphism T:
/// xi_X Y = A_{T(X)} Y = Y x T(X). Entry (i, j) is xi_{e_i} e_j.
class TorsionTensor {
public:
    TorsionTensor(VectorGrid values, Mat7 source) : values_(std::move(values)), source_(std::move(source)) {}

    [[nodiscard]] const Vec7& at(int i, int j) const { return values_.at(i, j); }
    [[nodiscard]] const VectorGrid& values() const { return values_; }
    [[nodiscard]] const Mat7& source() const { return source_; }

    /// The skew operator xi_{e_i}.
    [[nodiscard]] SkewMat slice(int i) const;
    /// sum_i xi_{e_i} e_i
    [[nodiscard]] Vec7 trace() const;
    /// (xi_X Y + xi_Y X) / 2
    [[nodiscard]] VectorGrid sym_part() const;
    /// (xi_X Y - xi_Y X) / 2
    [[nodiscard]] VectorGrid alt_part() const;

private:
    VectorGrid values_;
    Mat7 source_;
};

TorsionTensor xi_from_t(const Mat7& t, const G2Frame& frame);

/// Characteristic vector chi = sum_i e_i x T(e_i).
Vec7 chi(const Mat7& t, const G2Frame& frame);

struct TorsionEnergy {
    Rational chi_sq;
    Rational alt_sq;
    Rational sym_sq;
    /// |chi|^2 + |xi^alt|^2 - |xi^sym|^2, which equals i1(T) - i2(T).
    [[nodiscard]] Rational combination() const { return chi_sq + alt_sq - sym_sq; }
};

TorsionEnergy sym_alt_energy(const Mat7& t, const G2Frame& frame);

enum class TorsionClassFlag { X1 = 0, X2 = 1, X3 = 2, X4 = 3 };

/// Which of the four pieces (scalar, g2, traceless symmetric, vector) of T are present.
struct TorsionClass {
    EndoSplit split;
    std::array<bool, 4> flags{};
    std::array<Rational, 4> part_norms_sq;

    [[nodiscard]] bool has(TorsionClassFlag f) const { return flags[static_cast<std::size_t>(f)]; }
    /// "X1+X4", "X2", or "parallel" when T = 0.
    [[nodiscard]] std::string label() const;
    [[nodiscard]] bool pure_x4() const;
};

/// Pointwise classification. X1 as a manifold class also needs the scalar
/// part to be constant; that is a field-level condition not visible here.
TorsionClass classify(const Mat7& t, const G2Frame& frame);

/// -3/2 i0(T) + 6 sigma2(T)
Rational integrand_rhs(const Mat7& t, const G2Frame& frame);

/// Raised when the pointwise scalar-curvature formula is applied to a T with
/// a nonzero vector part Z (chi = -6 Z does not vanish).
class NonzeroVectorPart : public std::domain_error {
public:
    explicit NonzeroVectorPart(const Vec7& z);
    [[nodiscard]] const Vec7& z() const { return z_; }

private:
    Vec7 z_;
};

/// s = 6 (-3/2 i0 + 6 sigma2), valid when T has no vector part.
/// Throws NonzeroVectorPart otherwise.
Rational pointwise_scalar_prediction(const Mat7& t, const G2Frame& frame);

struct HypersurfaceReport {
    Rational lhs;          // 6 * integrand_rhs((8/3) S)
    Rational lhs_negated;  // same with T = -(8/3) S
    Rational rhs;          // 128 sigma2(S)
    bool pass = false;
};

/// Checks s = 128 sigma2(S) for T = +-(8/3) S. Throws std::invalid_argument
/// when S is not symmetric.
HypersurfaceReport hypersurface_identity_check(const Mat7& s, const G2Frame& frame = standard_frame());

/// integrand_rhs(A_Z) = 45 |Z|^2
Rational pure_x4_energy(const Vec7& z, const G2Frame& frame);

/// For pure vector-type torsion the integrand is 45|Z|^2. Read with the
/// factor 1/6 on s this gives s = 270|Z|^2; the stated pure-X4 form
/// (1/3) s = 45 |Z|^2 would instead give s = 135|Z|^2.
struct X4FactorNote {
    Rational integrand;
    Rational s_consistent;
    Rational s_stated;
    bool discrepant = true;
    std::string message;
};

X4FactorNote x4_factor_note(const Vec7& z, const G2Frame& frame);

}  // namespace g2

#pragma once

#include "g2/frame.hpp"
#include "g2/kform.hpp"
#include "g2/linear7.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2 {

/// One nonzero bracket [e_i, e_j] = value, with i != j.
struct BracketEntry {
    int i = 0;
    int j = 0;
    Vec7 value;
};

struct JacobiWitness {
    int i = 0;
    int j = 0;
    int l = 0;
    Vec7 value;  // cyclic sum, nonzero
};

/// Seven-dimensional Lie algebra with an orthonormal basis e_0..e_6.
/// Structure constants c(k, i, j) with [e_i, e_j] = sum_k c(k, i, j) e_k.
class MetricLieAlgebra {
public:
    MetricLieAlgebra() = default;

    /// Throws std::invalid_argument on i == j, out-of-range indices or a pair
    /// listed twice. Jacobi is not enforced here; see jacobi_violation().
    static MetricLieAlgebra from_brackets(const std::vector<BracketEntry>& entries);

    [[nodiscard]] const Rational& c(int k, int i, int j) const { return c_[index(k, i, j)]; }
    [[nodiscard]] Vec7 bracket(int i, int j) const;
    [[nodiscard]] Vec7 bracket(const Vec7& x, const Vec7& y) const;
    /// Nonzero brackets with i < j.
    [[nodiscard]] std::vector<BracketEntry> brackets() const;
    [[nodiscard]] bool is_abelian() const;
    [[nodiscard]] std::optional<JacobiWitness> jacobi_violation() const;
    [[nodiscard]] bool satisfies_jacobi() const { return !jacobi_violation().has_value(); }

    friend bool operator==(const MetricLieAlgebra&, const MetricLieAlgebra&) = default;

private:
    static std::size_t index(int k, int i, int j) { return static_cast<std::size_t>((k * kDim + i) * kDim + j); }
    std::array<Rational, kDim * kDim * kDim> c_{};
};

/// Raised by koszul() when the input brackets violate the Jacobi identity.
class JacobiError : public std::invalid_argument {
public:
    explicit JacobiError(const JacobiWitness& w);
    [[nodiscard]] const JacobiWitness& witness() const { return w_; }

private:
    JacobiWitness w_;
};

/// Gamma(k, i, j) with nabla_{e_i} e_j = sum_k Gamma(k, i, j) e_k.
class ConnectionTable {
public:
    [[nodiscard]] const Rational& gamma(int k, int i, int j) const { return g_[index(k, i, j)]; }
    Rational& gamma(int k, int i, int j) { return g_[index(k, i, j)]; }
    /// nabla_{e_i} e_j
    [[nodiscard]] Vec7 nabla(int i, int j) const;

    [[nodiscard]] bool metric_compatible() const;
    [[nodiscard]] bool torsion_free(const MetricLieAlgebra& mla) const;

private:
    static std::size_t index(int k, int i, int j) { return static_cast<std::size_t>((k * kDim + i) * kDim + j); }
    std::array<Rational, kDim * kDim * kDim> g_{};
};

/// Levi-Civita connection of the left-invariant metric making e_i orthonormal:
/// 2 Gamma(k,i,j) = c(k,i,j) - c(i,j,k) + c(j,k,i). Throws JacobiError.
ConnectionTable koszul(const MetricLieAlgebra& mla);

/// R(i,j,k,l) = <R(e_i,e_j) e_k, e_l> with
/// R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y].
class CurvatureTensor {
public:
    [[nodiscard]] const Rational& operator()(int i, int j, int k, int l) const { return r_[index(i, j, k, l)]; }
    Rational& operator()(int i, int j, int k, int l) { return r_[index(i, j, k, l)]; }

    /// The skew operator R(e_i, e_j) as a matrix: column k is R(e_i,e_j) e_k.
    [[nodiscard]] Mat7 op(int i, int j) const;

    /// Names of the violated symmetries among: antisymmetry in (i,j),
    /// antisymmetry in (k,l), pair symmetry, first Bianchi. Empty when all hold.
    [[nodiscard]] std::vector<std::string> symmetry_violations() const;

private:
    static std::size_t index(int i, int j, int k, int l) {
        return static_cast<std::size_t>(((i * kDim + j) * kDim + k) * kDim + l);
    }
    std::array<Rational, kDim * kDim * kDim * kDim> r_{};
};

CurvatureTensor curvature(const ConnectionTable& conn, const MetricLieAlgebra& mla);

/// s = sum_ij R(i,j,j,i)
Rational scalar_curvature(const CurvatureTensor& r);

/// sum_ij <(R(e_i,e_j))_{g2-perp} e_j, e_i>
Rational s_g2perp(const CurvatureTensor& r, const G2Frame& frame);

/// sum_ij <[xi_{e_i}, xi_{e_j}]_{g2-perp} e_j, e_i> for xi built from T.
Rational s_alt(const Mat7& t, const G2Frame& frame);

struct SectionalEntry {
    int i = 0;
    int j = 0;
    Rational value;  // R(i,j,j,i)
};

/// Nonzero R(i,j,j,i) over ordered pairs i != j, plus a value -> count histogram.
struct SectionalMultiset {
    std::vector<SectionalEntry> entries;
    std::map<Rational, int> counts;
    Rational sum;
    [[nodiscard]] bool even_multiplicities() const;
};

SectionalMultiset sectional_multiset(const CurvatureTensor& r);

/// Terms of div chi = 1/2 s_alt - 1/2 s_g2perp + |chi|^2 + |xi_alt|^2 - |xi_sym|^2
/// for left-invariant data, where div chi vanishes.
struct DivergenceBalance {
    Rational s_alt;
    Rational s_g2perp;
    Rational chi_sq;
    Rational alt_sq;
    Rational sym_sq;
    Rational rhs;
    bool chi_zero = false;
    /// Only asserted when chi = 0; otherwise true.
    bool pass = true;
    /// 3 s_alt + 6 (|chi|^2 + |xi_alt|^2 - |xi_sym|^2), the scalar curvature
    /// the balance predicts through s_g2perp = s/3.
    Rational implied_s;
};

DivergenceBalance divergence_balance(const Mat7& t, const CurvatureTensor& r, const G2Frame& frame);

/// Chevalley-Eilenberg differential on invariant forms. Throws
/// std::domain_error on a 7-form.
KForm ce_differential(const MetricLieAlgebra& mla, const KForm& a);

/// delta = (-1)^k * d * on k-forms, the formal adjoint of d for the Form
/// inner product on a unimodular algebra. Throws std::domain_error on a 0-form.
KForm codifferential(const MetricLieAlgebra& mla, const KForm& a, const G2Frame& frame);

/// Entry i is nabla_{e_i} a.
std::array<KForm, kDim> nabla_form(const ConnectionTable& conn, const KForm& a);

/// r(X, Y) = <nabla_X phi, Y -| *phi>; entry (i, j) is r(e_i, e_j).
Mat7 r_map(const ConnectionTable& conn, const G2Frame& frame, NormConvention convention);

struct RMapOutcome {
    NormConvention convention = NormConvention::Form;
    Mat7 r;
    /// T read as g(T X, Y) = r(X, Y) / 3.
    Mat7 t_candidate;
    bool reproduces = false;
    /// kappa with r = kappa * 3 g(T., .), when such a scalar exists.
    std::optional<Rational> scale;
};

struct TFromGeometry {
    /// T obtained by solving nabla_{e_i} phi = (A_{T e_i}) . phi directly.
    Mat7 t;
    bool derivation_exact = false;
    /// xi_from_t(t) acting on phi reproduces nabla phi for every e_i.
    bool round_trip = false;
    std::array<RMapOutcome, 2> outcomes;
    /// True when neither convention reproduces T with the factor 1/3.
    bool convention_failure = false;
    /// Factor f with r = f * r_Form giving exactly 3 g(T., .), if one exists.
    std::optional<Rational> form_rescale;
    std::string note;

    [[nodiscard]] const RMapOutcome& outcome(NormConvention c) const {
        return outcomes[c == NormConvention::Form ? 0 : 1];
    }
};

/// A derivation w acting on a 3-form: (w.a)(x,y,z) = a(x x w, y, z) + a(x, y x w, z) + a(x, y, z x w).
KForm cross_derivation(const Vec7& w, const KForm& a, const G2Frame& frame);

TFromGeometry t_from_geometry(const MetricLieAlgebra& mla, const G2Frame& frame);

/// Bases of the 27-dimensional part of Lambda^3 and the 14-dimensional part
/// of Lambda^2 relative to the frame.
std::vector<KForm> lambda3_27_basis(const G2Frame& frame);
std::vector<KForm> lambda2_14_basis(const G2Frame& frame);

struct TorsionForms {
    Rational tau0;
    KForm tau1{1};
    KForm tau2{2};
    KForm tau3{3};
    NormConvention convention = NormConvention::Form;
    KForm residual4{4};
    KForm residual5{5};

    [[nodiscard]] bool exact() const { return residual4.is_zero() && residual5.is_zero(); }
    /// Flags in the order tau0, tau2, tau3, tau1 which correspond to X1..X4.
    [[nodiscard]] std::array<bool, 4> class_flags() const;
};

/// Solves d phi = tau0 *phi + 3 tau1 ^ phi + *tau3 and
/// d *phi = 4 tau1 ^ *phi + tau2 ^ phi with tau2 in the 14-part and tau3 in the 27-part.
TorsionForms torsion_forms(const KForm& dphi, const KForm& dstar_phi, const G2Frame& frame,
                           NormConvention convention = NormConvention::Form);
TorsionForms torsion_forms(const MetricLieAlgebra& mla, const G2Frame& frame,
                           NormConvention convention = NormConvention::Form);

struct BryantTerms {
    NormConvention convention = NormConvention::Form;
    Rational delta_tau1;
    Rational tau0_sq;
    Rational tau1_sq;
    Rational tau2_sq;
    Rational tau3_sq;
    /// 12 delta tau1 + 21/8 tau0^2 + 30 |tau1|^2 - 1/2 |tau2|^2 - 1/2 |tau3|^2
    Rational rhs;
    bool equal = false;
};

struct BryantReport {
    Rational s;
    TorsionForms forms;
    std::array<BryantTerms, 2> terms;
    [[nodiscard]] std::vector<NormConvention> reconciling() const;
    [[nodiscard]] const BryantTerms& at(NormConvention c) const { return terms[c == NormConvention::Form ? 0 : 1]; }
};

BryantReport bryant_scalar_check(const MetricLieAlgebra& mla, const G2Frame& frame);

struct FiRelation {
    NormConvention convention = NormConvention::Form;
    Rational tor_sq;
    Rational value;
    bool equal = false;
};

/// Nearly parallel substitution d phi = -8 lambda0 *phi, Z = 0.
struct FiReport {
    Rational lambda0;
    Rational s_expected;  // 7 * 24 lambda0^2
    Rational pairing;     // (d phi, *phi) in the Form convention
    KForm tor{3};
    Rational tor_coefficient;  // Tor = tor_coefficient * phi
    bool tor_proportional = false;
    /// (27/2) |Tor|^2 per convention.
    std::array<FiRelation, 2> nearly_parallel;
    /// pairing^2 / 18 - |Tor|^2 / 12 per convention for |Tor|^2.
    std::array<FiRelation, 2> skew_torsion;

    [[nodiscard]] std::vector<NormConvention> reconciling_nearly_parallel() const;
    [[nodiscard]] std::vector<NormConvention> reconciling_skew_torsion() const;
};

FiReport fi_nearly_parallel_check(const Rational& lambda0, const G2Frame& frame);

struct HeisenbergModel {
    MetricLieAlgebra mla;
    const G2Frame* frame = nullptr;
    Mat7 t;
};

/// Brackets [e0,e5] = e6 and [e4,e5] = e1, the Cayley frame and the
/// printed T table.
HeisenbergModel heisenberg_model();

struct GammaEntry {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational value;  // nabla_{e_i} e_j has e_k-component `value`
};

/// The connection coefficients as printed for the Heisenberg example.
std::vector<GammaEntry> printed_heisenberg_gamma();

struct GammaDiff {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational printed;
    Rational computed;
};

/// Every (i, j, k) where the printed table (absent entries read as 0)
/// disagrees with `conn`.
std::vector<GammaDiff> gamma_diff(const ConnectionTable& conn, const std::vector<GammaEntry>& printed);

/// Random 2-step nilpotent algebra: brackets of a horizontal index set land
/// in a disjoint central set, so Jacobi holds by construction.
MetricLieAlgebra random_two_step_nilpotent(std::uint64_t seed);

}  // namespace g2

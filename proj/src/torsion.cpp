#include "g2/torsion.hpp"

#include "g2/invariants.hpp"

namespace g2 {

Rational VectorGrid::norm_sq() const {
    Rational s;
    for (const auto& v : v_) s += v.norm_sq();
    return s;
}

bool VectorGrid::is_zero() const {
    for (const auto& v : v_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

VectorGrid operator+(const VectorGrid& a, const VectorGrid& b) {
    VectorGrid out;
    for (std::size_t k = 0; k < a.v_.size(); ++k) out.v_[k] = a.v_[k] + b.v_[k];
    return out;
}

SkewMat TorsionTensor::slice(int i) const {
    std::array<Vec7, kDim> cols;
    for (int j = 0; j < kDim; ++j) cols[static_cast<std::size_t>(j)] = at(i, j);
    return SkewMat(Mat7::from_columns(cols));
}

Vec7 TorsionTensor::trace() const {
    Vec7 s;
    for (int i = 0; i < kDim; ++i) s += at(i, i);
    return s;
}

VectorGrid TorsionTensor::sym_part() const {
    VectorGrid g;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) g.at(i, j) = Rational(1, 2) * (at(i, j) + at(j, i));
    }
    return g;
}

VectorGrid TorsionTensor::alt_part() const {
    VectorGrid g;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) g.at(i, j) = Rational(1, 2) * (at(i, j) - at(j, i));
    }
    return g;
}

TorsionTensor xi_from_t(const Mat7& t, const G2Frame& frame) {
    VectorGrid g;
    for (int i = 0; i < kDim; ++i) {
        const Vec7 ti = t.column(i);
        for (int j = 0; j < kDim; ++j) g.at(i, j) = cross(Vec7::basis(j), ti, frame);
    }
    return {std::move(g), t};
}

Vec7 chi(const Mat7& t, const G2Frame& frame) {
    Vec7 s;
    for (int i = 0; i < kDim; ++i) s += cross(Vec7::basis(i), t.column(i), frame);
    return s;
}

TorsionEnergy sym_alt_energy(const Mat7& t, const G2Frame& frame) {
    const TorsionTensor xi = xi_from_t(t, frame);
    return {xi.trace().norm_sq(), xi.alt_part().norm_sq(), xi.sym_part().norm_sq()};
}

std::string TorsionClass::label() const {
    std::string out;
    for (std::size_t k = 0; k < flags.size(); ++k) {
        if (!flags[k]) continue;
        if (!out.empty()) out += "+";
        out += "X" + std::to_string(k + 1);
    }
    return out.empty() ? "parallel" : out;
}

bool TorsionClass::pure_x4() const { return flags == std::array<bool, 4>{false, false, false, true}; }

TorsionClass classify(const Mat7& t, const G2Frame& frame) {
    TorsionClass c;
    c.split = decompose_endo(t, frame);
    c.part_norms_sq = c.split.part_norms_sq(frame);
    c.flags = {!c.split.scalar.is_zero(), !c.split.g2part.is_zero(), !c.split.sym0.is_zero(),
               !c.split.vector.is_zero()};
    return c;
}

Rational integrand_rhs(const Mat7& t, const G2Frame& frame) {
    return Rational(-3, 2) * i0(t, frame) + Rational(6) * sigma2(t);
}

NonzeroVectorPart::NonzeroVectorPart(const Vec7& z)
    : std::domain_error("T has a nonzero vector part Z = " + z.to_string() +
                        "; the pointwise scalar formula needs chi = 0"),
      z_(z) {}

Rational pointwise_scalar_prediction(const Mat7& t, const G2Frame& frame) {
    const EndoSplit split = decompose_endo(t, frame);
    if (!split.vector.is_zero()) throw NonzeroVectorPart(split.vector);
    return Rational(6) * integrand_rhs(t, frame);
}

HypersurfaceReport hypersurface_identity_check(const Mat7& s, const G2Frame& frame) {
    if (!s.is_symmetric()) throw std::invalid_argument("shape operator must be symmetric");
    HypersurfaceReport r;
    const Mat7 t = Rational(8, 3) * s;
    r.lhs = Rational(6) * integrand_rhs(t, frame);
    r.lhs_negated = Rational(6) * integrand_rhs(-t, frame);
    r.rhs = Rational(128) * sigma2(s);
    r.pass = r.lhs == r.rhs && r.lhs_negated == r.rhs;
    return r;
}

Rational pure_x4_energy(const Vec7& z, const G2Frame& frame) { return integrand_rhs(a_of(z, frame).mat(), frame); }

X4FactorNote x4_factor_note(const Vec7& z, const G2Frame& frame) {
    X4FactorNote n;
    n.integrand = pure_x4_energy(z, frame);
    n.s_consistent = Rational(6) * n.integrand;
    n.s_stated = Rational(3) * n.integrand;
    n.discrepant = n.s_consistent != n.s_stated;
    n.message =
        "pure vector type: -3/2 i0 + 6 sigma2 = 45|Z|^2 = " + n.integrand.to_string() +
        "; with (1/6) s on the left this means s-integral 270|Z|^2 (= " + n.s_consistent.to_string() +
        "), while the stated pure-X4 form (1/3) s = 45|Z|^2 gives 135|Z|^2 (= " + n.s_stated.to_string() +
        "); the two factors disagree";
    return n;
}

}  // namespace g2

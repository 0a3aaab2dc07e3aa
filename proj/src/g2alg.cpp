#include "g2/g2alg.hpp"

#include "g2/linalg.hpp"

#include <stdexcept>

namespace g2 {

SkewMat::SkewMat(const Mat7& m) : m_(m) {
    if (!m.is_skew()) throw std::invalid_argument("matrix is not skew-symmetric");
}

SkewMat SkewMat::skew_part_of(const Mat7& m) { return SkewMat(m.skew_part()); }

SkewMat bracket(const SkewMat& a, const SkewMat& b) { return SkewMat(commutator(a.mat(), b.mat())); }

SkewMat a_of(const Vec7& v, const G2Frame& frame) {
    Mat7 m;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const int k = frame.table().third(i, j);
            if (k < 0 || v[k].is_zero()) continue;
            m(i, j) = frame.eps(i, j, k) > 0 ? v[k] : -v[k];
        }
    }
    return SkewMat(m);
}

Vec7 p_map(const Mat7& m, const G2Frame& frame) {
    Vec7 out;
    for (int j = 0; j < kDim; ++j) {
        for (int k = 0; k < kDim; ++k) {
            const int i = frame.table().third(j, k);
            if (i < 0 || m(j, k).is_zero()) continue;
            // eps_ijk = eps_jki
            if (frame.eps(j, k, i) > 0) {
                out[i] += m(j, k);
            } else {
                out[i] -= m(j, k);
            }
        }
    }
    return out;
}

Vec7 p_map(const SkewMat& a, const G2Frame& frame) { return p_map(a.mat(), frame); }

So7Split split_so7(const SkewMat& a, const G2Frame& frame) {
    const Vec7 v = Rational(1, 6) * p_map(a, frame);
    return {a - a_of(v, frame), v};
}

SkewMat bracket_g2perp(const Vec7& u, const Vec7& v, const G2Frame& frame) {
    return a_of(cross(u, v, frame), frame);
}

Mat7 EndoSplit::reconstruct(const G2Frame& frame) const {
    return Mat7::scalar(scalar) + sym0 + g2part.mat() + a_of(vector, frame).mat();
}

std::array<Rational, 4> EndoSplit::part_norms_sq(const G2Frame& frame) const {
    return {Rational(kDim) * scalar * scalar, sym0.norm_sq(), g2part.mat().norm_sq(),
            a_of(vector, frame).mat().norm_sq()};
}

EndoSplit decompose_endo(const Mat7& t, const G2Frame& frame) {
    EndoSplit s;
    s.scalar = t.trace() / Rational(kDim);
    s.sym0 = t.sym_part() - Mat7::scalar(s.scalar);
    auto [g2, vec] = split_so7(SkewMat::skew_part_of(t), frame);
    s.g2part = std::move(g2);
    s.vector = std::move(vec);
    return s;
}

std::vector<SkewMat> g2_basis(const G2Frame& frame) {
    // Coordinates: upper-triangular entries (j<k) of a skew matrix, 21 of them.
    std::vector<std::pair<int, int>> coords;
    for (int j = 0; j < kDim; ++j) {
        for (int k = j + 1; k < kDim; ++k) coords.emplace_back(j, k);
    }
    RatMatrix constraints(kDim, coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) {
        Mat7 unit;
        unit(coords[c].first, coords[c].second) = Rational(1);
        unit(coords[c].second, coords[c].first) = Rational(-1);
        const Vec7 p = p_map(unit, frame);
        for (int i = 0; i < kDim; ++i) constraints(static_cast<std::size_t>(i), c) = p[i];
    }
    std::vector<SkewMat> basis;
    for (const auto& v : nullspace(constraints)) {
        Mat7 m;
        for (std::size_t c = 0; c < coords.size(); ++c) {
            m(coords[c].first, coords[c].second) = v[c];
            m(coords[c].second, coords[c].first) = -v[c];
        }
        basis.emplace_back(m);
    }
    return basis;
}

bool is_cross_derivation(const SkewMat& a, const G2Frame& frame) {
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const Vec7 u = Vec7::basis(i);
            const Vec7 v = Vec7::basis(j);
            const Vec7 lhs = a.apply(cross(u, v, frame));
            const Vec7 rhs = cross(a.apply(u), v, frame) + cross(u, a.apply(v), frame);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace g2

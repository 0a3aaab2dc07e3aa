#include "g2/invariants.hpp"

#include "g2/g2alg.hpp"

#include <stdexcept>
#include <utility>

namespace g2 {

CharPoly char_poly(const Mat7& t) {
    // Similarity reduction to upper Hessenberg form, then the standard
    // recurrence on leading principal minors of t I - H.
    Mat7 h = t;
    for (int m = 1; m < kDim - 1; ++m) {
        int piv = m;
        while (piv < kDim && h(piv, m - 1).is_zero()) ++piv;
        if (piv == kDim) continue;
        if (piv != m) {
            for (int j = 0; j < kDim; ++j) std::swap(h(piv, j), h(m, j));
            for (int i = 0; i < kDim; ++i) std::swap(h(i, piv), h(i, m));
        }
        for (int i = m + 1; i < kDim; ++i) {
            if (h(i, m - 1).is_zero()) continue;
            const Rational u = h(i, m - 1) / h(m, m - 1);
            for (int j = 0; j < kDim; ++j) h(i, j) -= u * h(m, j);
            for (int r = 0; r < kDim; ++r) h(r, m) += u * h(r, i);
        }
    }
    // p[k] = det(t I - H_k) as coefficient vectors, p[0] = 1.
    std::array<std::array<Rational, 8>, 8> p{};
    p[0][0] = Rational(1);
    for (int k = 1; k <= kDim; ++k) {
        auto& pk = p[static_cast<std::size_t>(k)];
        const auto& prev = p[static_cast<std::size_t>(k - 1)];
        for (int d = 0; d < k; ++d) {
            pk[static_cast<std::size_t>(d + 1)] += prev[static_cast<std::size_t>(d)];
            pk[static_cast<std::size_t>(d)] -= h(k - 1, k - 1) * prev[static_cast<std::size_t>(d)];
        }
        Rational sub(1);
        for (int i = k - 1; i >= 1; --i) {
            sub *= h(i, i - 1);
            if (sub.is_zero()) break;
            const Rational w = h(i - 1, k - 1) * sub;
            if (w.is_zero()) continue;
            const auto& q = p[static_cast<std::size_t>(i - 1)];
            for (int d = 0; d < i; ++d) pk[static_cast<std::size_t>(d)] -= w * q[static_cast<std::size_t>(d)];
        }
    }
    // det(A - t I) = (-1)^7 det(t I - A).
    CharPoly out;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -p[kDim][i];
    return out;
}

Rational sigma_from_charpoly(const CharPoly& p, int k) {
    if (k < 0 || k > kDim) throw std::out_of_range("sigma index outside 0..7");
    const Rational& c = p[static_cast<std::size_t>(kDim - k)];
    return ((kDim - k) % 2 == 0) ? c : -c;
}

std::string format_charpoly(const CharPoly& p) {
    std::string out;
    for (int i = kDim; i >= 0; --i) {
        const Rational& c = p[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) out += mag.to_string() + " ";
        out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Rational sigma2(const Mat7& t) {
    const Rational tr = t.trace();
    return (tr * tr - (t * t).trace()) / Rational(2);
}

Rational i0(const Mat7& t, const G2Frame& frame) {
    // sum_ij <T e_i x T e_j, e_i x e_j> = sum eps_ijk eps_abk T_ai T_bj.
    const CrossTable& table = frame.table();
    Rational s;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const int k = i == j ? -1 : table.third(i, j);
            if (k < 0) continue;
            Rational inner;
            for (int a = 0; a < kDim; ++a) {
                if (a == k || t(a, i).is_zero()) continue;
                const int b = table.third(a, k);
                if (t(b, j).is_zero()) continue;
                const Rational p = t(a, i) * t(b, j);
                if (frame.eps(a, b, k) > 0) {
                    inner += p;
                } else {
                    inner -= p;
                }
            }
            if (frame.eps(i, j, k) > 0) {
                s += inner;
            } else {
                s -= inner;
            }
        }
    }
    return s;
}

Rational i1(const Mat7& t, const G2Frame& frame) {
    Vec7 total;
    for (int i = 0; i < kDim; ++i) total += cross(t.column(i), Vec7::basis(i), frame);
    // sum_ij <a_i, a_j> = |sum_i a_i|^2
    return total.norm_sq();
}

Rational i2(const Mat7& t, const G2Frame& frame) {
    // c[i][j] = T e_i x e_j
    std::array<std::array<Vec7, kDim>, kDim> c;
    for (int i = 0; i < kDim; ++i) {
        const Vec7 col = t.column(i);
        for (int j = 0; j < kDim; ++j) {
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cross(col, Vec7::basis(j), frame);
        }
    }
    Rational s;
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) s += dot(c[i][j], c[j][i]);
    }
    return s;
}

InvariantReport compute_invariants(const Mat7& t, const G2Frame& frame) {
    InvariantReport r;
    r.sigma1 = t.trace();
    r.sigma2 = sigma2(t);
    r.norm_sq = t.norm_sq();
    r.i0 = i0(t, frame);
    r.i1 = i1(t, frame);
    r.i2 = i2(t, frame);
    r.charpoly = char_poly(t);
    return r;
}

QuadraticRelationReport verify_quadratic_relations(const Mat7& t, const G2Frame& frame) {
    QuadraticRelationReport r;
    r.values = compute_invariants(t, frame);
    const InvariantReport& v = r.values;
    const Rational s1sq = v.sigma1 * v.sigma1;
    auto check = [&](bool ok, const char* what) {
        if (!ok) {
            r.pass = false;
            r.violated.emplace_back(what);
        }
    };
    check(v.i1 == -v.i0 + v.norm_sq + Rational(4) * v.sigma2 - s1sq, "i1 = -i0 + |T|^2 + 4 sigma2 - sigma1^2");
    check(v.i2 == v.i0 + v.norm_sq - Rational(2) * v.sigma2 - s1sq, "i2 = i0 + |T|^2 - 2 sigma2 - sigma1^2");
    check(v.i1 - v.i2 == Rational(-2) * v.i0 + Rational(6) * v.sigma2, "i1 - i2 = -2 i0 + 6 sigma2");
    check(sigma_from_charpoly(v.charpoly, 1) == v.sigma1, "charpoly sigma1 = trace");
    check(sigma_from_charpoly(v.charpoly, 2) == v.sigma2, "charpoly sigma2 = sigma2");
    check(-v.charpoly[6] / v.charpoly[7] == v.sigma1, "sigma1 = -c6 / c7");
    return r;
}

std::string to_string(SpecialShape shape) {
    switch (shape) {
        case SpecialShape::Scalar: return "scalar";
        case SpecialShape::Symmetric: return "symmetric";
        case SpecialShape::Vector: return "vector";
        case SpecialShape::NotSpecial: return "not special";
    }
    return "not special";
}

SpecialCaseReport special_case_check(const Mat7& t, const G2Frame& frame) {
    SpecialCaseReport r;
    r.values = compute_invariants(t, frame);
    const InvariantReport& v = r.values;
    auto check = [&](bool ok, const char* what) {
        if (!ok) {
            r.pass = false;
            r.violated.emplace_back(what);
        }
    };

    const EndoSplit split = decompose_endo(t, frame);
    if (t == Mat7::scalar(split.scalar)) {
        r.shape = SpecialShape::Scalar;
        const Rational l2 = split.scalar * split.scalar;
        r.parameter = split.scalar;
        check(v.i0 == Rational(42) * l2, "i0 = 42 lambda^2");
        check(v.i1.is_zero(), "i1 = 0");
        check(v.i2 == Rational(-42) * l2, "i2 = -42 lambda^2");
        check(v.sigma1 == Rational(7) * split.scalar, "sigma1 = 7 lambda");
        check(v.sigma2 == Rational(21) * l2, "sigma2 = 21 lambda^2");
        check(v.norm_sq == Rational(7) * l2, "|T|^2 = 7 lambda^2");
        check(v.i1 - v.i2 == Rational(42) * l2, "i1 - i2 = 42 lambda^2");
    } else if (t.is_symmetric()) {
        r.shape = SpecialShape::Symmetric;
        check(v.i0 == Rational(2) * v.sigma2, "i0 = 2 sigma2");
        check(v.i1.is_zero(), "i1 = 0");
        check(v.i2 == Rational(-2) * v.sigma2, "i2 = -2 sigma2");
        check(v.i1 - v.i2 == Rational(2) * v.sigma2, "i1 - i2 = 2 sigma2");
    } else if (split.scalar.is_zero() && split.sym0.is_zero() && split.g2part.is_zero()) {
        r.shape = SpecialShape::Vector;
        const Rational z2 = split.vector.norm_sq();
        r.parameter = z2;
        check(v.i0 == Rational(-18) * z2, "i0 = -18 |Z|^2");
        check(v.i1 == Rational(36) * z2, "i1 = 36 |Z|^2");
        check(v.i2 == Rational(-18) * z2, "i2 = -18 |Z|^2");
        check(v.norm_sq == Rational(6) * z2, "|A_Z|^2 = 6 |Z|^2");
        check(v.sigma2 == Rational(3) * z2, "sigma2 = 3 |Z|^2");
        check(v.sigma1.is_zero(), "sigma1 = 0");
        check(v.i1 - v.i2 == Rational(54) * z2, "i1 - i2 = 54 |Z|^2");
    }
    return r;
}

}  // namespace g2

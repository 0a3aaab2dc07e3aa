#pragma once

#include "g2/frame.hpp"
#include "g2/g2alg.hpp"
#include "g2/homspace.hpp"
#include "g2/kform.hpp"
#include "g2/linear7.hpp"
#include "g2/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace g2test {

using g2::kDim;
using g2::KForm;
using g2::Mat7;
using g2::Rational;
using g2::Vec7;

// splitmix64; deliberately unrelated to the library sampler.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : s_(seed * 0x2545F4914F6CDD1DULL + 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (next() >> 63) != 0; }

    Rational rat() { return Rational(range(-7, 7), range(1, 5)); }
    Rational nonzero_rat() {
        for (;;) {
            Rational r = rat();
            if (!r.is_zero()) return r;
        }
    }
    Vec7 vec() {
        Vec7 v;
        for (int i = 0; i < kDim; ++i) v[i] = rat();
        return v;
    }
    Vec7 nonzero_vec() {
        for (;;) {
            Vec7 v = vec();
            if (!v.is_zero()) return v;
        }
    }
    Mat7 mat() {
        Mat7 m;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) m(i, j) = rat();
        return m;
    }
    Mat7 sym() {
        Mat7 m;
        for (int i = 0; i < kDim; ++i)
            for (int j = i; j < kDim; ++j) m(i, j) = m(j, i) = rat();
        return m;
    }
    Mat7 skew() {
        Mat7 m;
        for (int i = 0; i < kDim; ++i)
            for (int j = i + 1; j < kDim; ++j) {
                m(i, j) = rat();
                m(j, i) = -m(i, j);
            }
        return m;
    }
    KForm form(int degree) {
        KForm a(degree);
        for (auto mask : g2::masks_of_degree(degree))
            if (range(0, 2) == 0) a.add(mask, rat());
        return a;
    }

private:
    std::uint64_t s_;
};

inline Rational det(Mat7 m) {
    Rational d(1);
    for (int c = 0; c < kDim; ++c) {
        int p = c;
        while (p < kDim && m(p, c).is_zero()) ++p;
        if (p == kDim) return Rational(0);
        if (p != c) {
            for (int j = 0; j < kDim; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (int r = c + 1; r < kDim; ++r) {
            const Rational f = m(r, c) / m(c, c);
            for (int j = c; j < kDim; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

inline std::optional<Mat7> inverse(Mat7 m) {
    Mat7 inv = Mat7::identity();
    for (int c = 0; c < kDim; ++c) {
        int p = c;
        while (p < kDim && m(p, c).is_zero()) ++p;
        if (p == kDim) return std::nullopt;
        for (int j = 0; j < kDim; ++j) {
            std::swap(m(p, j), m(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        const Rational piv = m(c, c);
        for (int j = 0; j < kDim; ++j) {
            m(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int r = 0; r < kDim; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            const Rational f = m(r, c);
            for (int j = 0; j < kDim; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// Faddeev-LeVerrier coefficients of det(A - t I), low degree first.
inline std::array<Rational, 8> faddeev(const Mat7& a) {
    std::array<Rational, 8> c;  // det(tI - A)
    c[7] = Rational(1);
    Mat7 m;
    for (int k = 1; k <= kDim; ++k) {
        m = a * m + Mat7::scalar(c[static_cast<std::size_t>(8 - k)]);
        c[static_cast<std::size_t>(7 - k)] = -(a * m).trace() / Rational(k);
    }
    for (auto& x : c) x = -x;
    return c;
}

// Cayley transform (I - X)^{-1}(I + X); orthogonal for skew X, rational throughout.
inline Mat7 cayley_transform(const Mat7& x) {
    const auto inv = inverse(Mat7::identity() - x);
    if (!inv) throw std::runtime_error("I - X singular");
    return *inv * (Mat7::identity() + x);
}

// Rational element of G2 built from a special triple (u, v, w): orthonormal with
// w orthogonal to u x v. The image of every other basis vector follows from products.
inline Mat7 random_g2_element(Gen& g, const g2::G2Frame& f) {
    const Mat7 q = cayley_transform(g.skew());
    const Vec7 u = q.column(0), v = q.column(1);
    const int t = f.table().third(0, 1);
    int c = 2;
    while (c == t) ++c;
    // reflection along x - e_t fixes e_0, e_1 and swaps x = q^T (u x v) with e_t
    const Vec7 x = q.transpose().apply(g2::cross(u, v, f));
    Vec7 wp = Vec7::basis(c);
    const Vec7 a = x - Vec7::basis(t);
    if (!a.is_zero()) wp = wp - (Rational(2) * g2::dot(a, wp) / a.norm_sq()) * a;
    const Vec7 w = q.apply(wp);

    std::array<std::optional<Vec7>, 7> img;
    img[0] = u;
    img[1] = v;
    img[static_cast<std::size_t>(c)] = w;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                if (i == j || !img[static_cast<std::size_t>(i)] || !img[static_cast<std::size_t>(j)]) continue;
                const int k = f.table().third(i, j);
                if (img[static_cast<std::size_t>(k)]) continue;
                img[static_cast<std::size_t>(k)] =
                    Rational(f.eps(i, j, k)) * g2::cross(*img[static_cast<std::size_t>(i)], *img[static_cast<std::size_t>(j)], f);
                changed = true;
            }
    }
    std::array<Vec7, 7> cols;
    for (std::size_t i = 0; i < 7; ++i) cols[i] = img[i].value();
    return Mat7::from_columns(cols);
}

// Octonion product by Cayley-Dickson doubling of quaternions, (a,b)(c,d) = (ac - d*b, da + bc*).
// Coordinates 0 (real) .. 7.
using Oct = std::array<Rational, 8>;

inline std::array<Rational, 4> quat_mul(const std::array<Rational, 4>& p, const std::array<Rational, 4>& q) {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

inline std::array<Rational, 4> quat_conj(std::array<Rational, 4> q) {
    for (int i = 1; i < 4; ++i) q[static_cast<std::size_t>(i)] = -q[static_cast<std::size_t>(i)];
    return q;
}

inline Oct oct_mul(const Oct& x, const Oct& y) {
    const std::array<Rational, 4> a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
    const std::array<Rational, 4> c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
    const auto ac = quat_mul(a, c), dsb = quat_mul(quat_conj(d), b);
    const auto da = quat_mul(d, a), bcs = quat_mul(b, quat_conj(c));
    Oct out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = ac[i] - dsb[i];
        out[i + 4] = da[i] + bcs[i];
    }
    return out;
}

// Structure constants of the imaginary octonions: e_i e_j = octo_eps(i,j,k) e_k for i != j.
inline std::array<int, 343> octonion_epsilon() {
    std::array<int, 343> eps{};
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            if (i == j) continue;
            Oct x{}, y{};
            x[static_cast<std::size_t>(i + 1)] = Rational(1);
            y[static_cast<std::size_t>(j + 1)] = Rational(1);
            const Oct p = oct_mul(x, y);
            for (int k = 0; k < kDim; ++k) eps[static_cast<std::size_t>((i * 7 + j) * 7 + k)] = p[static_cast<std::size_t>(k + 1)].sign();
        }
    return eps;
}

// Signed permutation g with g(e_i) = sign[i] e_perm[i] carrying one epsilon table to another:
// eps_to(perm i, perm j, perm k) s_i s_j s_k = eps_from(i,j,k). Backtracking search.
struct SignedPerm {
    std::array<int, 7> perm{};
    std::array<int, 7> sign{};
};

template <class From, class To>
std::optional<SignedPerm> find_signed_perm(From eps_from, To eps_to) {
    SignedPerm sp;
    std::array<bool, 7> used{};
    auto consistent = [&](int n) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i != n - 1 && j != n - 1 && k != n - 1) continue;
                    const int lhs = eps_to(sp.perm[static_cast<std::size_t>(i)], sp.perm[static_cast<std::size_t>(j)],
                                           sp.perm[static_cast<std::size_t>(k)]) *
                                    sp.sign[static_cast<std::size_t>(i)] * sp.sign[static_cast<std::size_t>(j)] *
                                    sp.sign[static_cast<std::size_t>(k)];
                    if (lhs != eps_from(i, j, k)) return false;
                }
        return true;
    };
    auto rec = [&](auto&& self, int n) -> bool {
        if (n == kDim) return true;
        for (int p = 0; p < kDim; ++p) {
            if (used[static_cast<std::size_t>(p)]) continue;
            for (int s : {1, -1}) {
                sp.perm[static_cast<std::size_t>(n)] = p;
                sp.sign[static_cast<std::size_t>(n)] = s;
                used[static_cast<std::size_t>(p)] = true;
                if (consistent(n + 1) && self(self, n + 1)) return true;
                used[static_cast<std::size_t>(p)] = false;
            }
        }
        return false;
    };
    if (rec(rec, 0)) return sp;
    return std::nullopt;
}

inline Mat7 signed_perm_matrix(const SignedPerm& sp) {
    Mat7 g;
    for (int i = 0; i < kDim; ++i) g(sp.perm[static_cast<std::size_t>(i)], i) = Rational(sp.sign[static_cast<std::size_t>(i)]);
    return g;
}

// Naive cross product straight from the frame's epsilon symbol.
inline Vec7 naive_cross(const Vec7& u, const Vec7& v, const g2::G2Frame& f) {
    Vec7 w;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                if (f.eps(i, j, k) != 0) w[k] += Rational(f.eps(i, j, k)) * u[i] * v[j];
    return w;
}

struct Naive {
    Rational i0, i1, i2;
};

// Direct double sums over the basis, straight from the definitions.
inline Naive naive_invariants(const Mat7& t, const g2::G2Frame& f) {
    Naive n;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Vec7 ei = Vec7::basis(i), ej = Vec7::basis(j);
            const Vec7 ti = t.apply(ei), tj = t.apply(ej);
            n.i0 += g2::dot(naive_cross(ti, tj, f), naive_cross(ei, ej, f));
            n.i1 += g2::dot(naive_cross(ti, ei, f), naive_cross(tj, ej, f));
            n.i2 += g2::dot(naive_cross(ti, ej, f), naive_cross(tj, ei, f));
        }
    return n;
}

// Test-side 2-step nilpotent generator: brackets of non-central indices land in
// a central set, so every double bracket vanishes.
inline g2::MetricLieAlgebra gen_nilpotent(Gen& g) {
    for (;;) {
        std::array<int, 7> idx{0, 1, 2, 3, 4, 5, 6};
        for (int i = 6; i > 0; --i) std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(g.range(0, i))]);
        const int nc = static_cast<int>(g.range(1, 3));
        std::vector<g2::BracketEntry> entries;
        for (int a = nc; a < kDim; ++a)
            for (int b = a + 1; b < kDim; ++b) {
                if (g.range(0, 2) != 0) continue;
                Vec7 v;
                for (int c = 0; c < nc; ++c)
                    if (g.coin()) v[idx[static_cast<std::size_t>(c)]] = g.nonzero_rat();
                if (!v.is_zero()) entries.push_back({idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)], v});
            }
        if (!entries.empty()) return g2::MetricLieAlgebra::from_brackets(entries);
    }
}

// 2 <nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>
inline Mat7 nabla_matrix(const g2::MetricLieAlgebra& mla, int i) {
    Mat7 n;
    for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) {
            const Vec7 ei = Vec7::basis(i), ej = Vec7::basis(j), ek = Vec7::basis(k);
            n(k, j) = Rational(1, 2) * (g2::dot(mla.bracket(ei, ej), ek) - g2::dot(mla.bracket(ej, ek), ei) +
                                        g2::dot(mla.bracket(ek, ei), ej));
        }
    return n;
}

// R(e_i,e_j) = N_i N_j - N_j N_i - sum_m c^m_ij N_m
inline std::array<std::array<Mat7, 7>, 7> curvature_ops(const g2::MetricLieAlgebra& mla) {
    std::array<Mat7, 7> n;
    for (int i = 0; i < kDim; ++i) n[static_cast<std::size_t>(i)] = nabla_matrix(mla, i);
    std::array<std::array<Mat7, 7>, 7> r;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            Mat7 m = n[i] * n[j] - n[j] * n[i];
            for (int k = 0; k < kDim; ++k) m -= mla.c(k, static_cast<int>(i), static_cast<int>(j)) * n[static_cast<std::size_t>(k)];
            r[i][j] = m;
        }
    return r;
}

inline Rational nilpotent_scalar(const g2::MetricLieAlgebra& mla) {
    Rational s;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) s += mla.c(k, i, j) * mla.c(k, i, j);
    return Rational(-1, 4) * s;
}

inline Rational test_s_g2perp(const std::array<std::array<Mat7, 7>, 7>& r, const g2::G2Frame& f) {
    Rational s;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Mat7& m = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            Mat7 perp;
            for (int k = 0; k < kDim; ++k) {
                const Mat7 ak = g2::a_of(Vec7::basis(k), f).mat();
                perp += (g2::trace_inner(m, ak) / Rational(6)) * ak;
            }
            s += perp(i, j);
        }
    return s;
}

inline const std::array<const g2::G2Frame*, 2>& frames() {
    static const std::array<const g2::G2Frame*, 2> fs{&g2::standard_frame(), &g2::cayley_frame()};
    return fs;
}

}  // namespace g2test

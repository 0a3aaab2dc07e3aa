#include "g2/homspace.hpp"

#include "g2/g2alg.hpp"
#include "g2/invariants.hpp"
#include "g2/linalg.hpp"
#include "g2/sampling.hpp"
#include "g2/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace g2 {

namespace {

std::vector<Rational> coords(const KForm& a) {
    std::vector<Rational> out;
    for (IndexMask m : masks_of_degree(a.degree())) out.push_back(a.coeff(m));
    return out;
}

KForm from_coords(int degree, const std::vector<Rational>& x) {
    KForm out(degree);
    const auto masks = masks_of_degree(degree);
    for (std::size_t n = 0; n < masks.size(); ++n) out.add(masks[n], x[n]);
    return out;
}

void set_column(RatMatrix& m, std::size_t col, const KForm& a) {
    const auto c = coords(a);
    for (std::size_t r = 0; r < c.size(); ++r) m(r, col) = c[r];
}

std::size_t conv_slot(NormConvention c) { return c == NormConvention::Form ? 0 : 1; }

}  // namespace

// ---------------------------------------------------------------- algebra

MetricLieAlgebra MetricLieAlgebra::from_brackets(const std::vector<BracketEntry>& entries) {
    MetricLieAlgebra out;
    std::set<std::pair<int, int>> seen;
    for (const auto& e : entries) {
        if (e.i < 0 || e.i >= kDim || e.j < 0 || e.j >= kDim) {
            throw std::invalid_argument("bracket index outside 0..6");
        }
        if (e.i == e.j) throw std::invalid_argument("bracket [e_i, e_i] must not be listed");
        const auto key = std::minmax(e.i, e.j);
        if (!seen.insert({key.first, key.second}).second) {
            throw std::invalid_argument("bracket [e_" + std::to_string(key.first) + ", e_" +
                                        std::to_string(key.second) + "] listed twice");
        }
        for (int k = 0; k < kDim; ++k) {
            out.c_[index(k, e.i, e.j)] = e.value[k];
            out.c_[index(k, e.j, e.i)] = -e.value[k];
        }
    }
    return out;
}

Vec7 MetricLieAlgebra::bracket(int i, int j) const {
    Vec7 v;
    for (int k = 0; k < kDim; ++k) v[k] = c(k, i, j);
    return v;
}

Vec7 MetricLieAlgebra::bracket(const Vec7& x, const Vec7& y) const {
    Vec7 v;
    for (int i = 0; i < kDim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < kDim; ++j) {
            if (y[j].is_zero()) continue;
            v += (x[i] * y[j]) * bracket(i, j);
        }
    }
    return v;
}

std::vector<BracketEntry> MetricLieAlgebra::brackets() const {
    std::vector<BracketEntry> out;
    for (int i = 0; i < kDim; ++i) {
        for (int j = i + 1; j < kDim; ++j) {
            Vec7 v = bracket(i, j);
            if (!v.is_zero()) out.push_back({i, j, std::move(v)});
        }
    }
    return out;
}

bool MetricLieAlgebra::is_abelian() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<JacobiWitness> MetricLieAlgebra::jacobi_violation() const {
    for (int i = 0; i < kDim; ++i) {
        for (int j = i + 1; j < kDim; ++j) {
            for (int l = j + 1; l < kDim; ++l) {
                const Vec7 ei = Vec7::basis(i);
                const Vec7 ej = Vec7::basis(j);
                const Vec7 el = Vec7::basis(l);
                const Vec7 sum = bracket(bracket(ei, ej), el) + bracket(bracket(ej, el), ei) +
                                 bracket(bracket(el, ei), ej);
                if (!sum.is_zero()) return JacobiWitness{i, j, l, sum};
            }
        }
    }
    return std::nullopt;
}

JacobiError::JacobiError(const JacobiWitness& w)
    : std::invalid_argument("Jacobi identity fails on (e_" + std::to_string(w.i) + ", e_" + std::to_string(w.j) +
                            ", e_" + std::to_string(w.l) + "): cyclic sum " + w.value.to_string()),
      w_(w) {}

// ---------------------------------------------------------------- connection

Vec7 ConnectionTable::nabla(int i, int j) const {
    Vec7 v;
    for (int k = 0; k < kDim; ++k) v[k] = gamma(k, i, j);
    return v;
}

bool ConnectionTable::metric_compatible() const {
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                if (gamma(k, i, j) != -gamma(j, i, k)) return false;
            }
        }
    }
    return true;
}

bool ConnectionTable::torsion_free(const MetricLieAlgebra& mla) const {
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                if (gamma(k, i, j) - gamma(k, j, i) != mla.c(k, i, j)) return false;
            }
        }
    }
    return true;
}

ConnectionTable koszul(const MetricLieAlgebra& mla) {
    if (auto w = mla.jacobi_violation()) throw JacobiError(*w);
    ConnectionTable conn;
    const Rational half(1, 2);
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                conn.gamma(k, i, j) = half * (mla.c(k, i, j) - mla.c(i, j, k) + mla.c(j, k, i));
            }
        }
    }
    return conn;
}

// ---------------------------------------------------------------- curvature

Mat7 CurvatureTensor::op(int i, int j) const {
    Mat7 m;
    for (int k = 0; k < kDim; ++k) {
        for (int l = 0; l < kDim; ++l) m(l, k) = (*this)(i, j, k, l);
    }
    return m;
}

std::vector<std::string> CurvatureTensor::symmetry_violations() const {
    bool anti_ij = true;
    bool anti_kl = true;
    bool pair = true;
    bool bianchi = true;
    const auto& r = *this;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                for (int l = 0; l < kDim; ++l) {
                    if (r(i, j, k, l) != -r(j, i, k, l)) anti_ij = false;
                    if (r(i, j, k, l) != -r(i, j, l, k)) anti_kl = false;
                    if (r(i, j, k, l) != r(k, l, i, j)) pair = false;
                    if (!(r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l)).is_zero()) bianchi = false;
                }
            }
        }
    }
    std::vector<std::string> out;
    if (!anti_ij) out.emplace_back("antisymmetry in (i,j)");
    if (!anti_kl) out.emplace_back("antisymmetry in (k,l)");
    if (!pair) out.emplace_back("pair symmetry");
    if (!bianchi) out.emplace_back("first Bianchi identity");
    return out;
}

CurvatureTensor curvature(const ConnectionTable& conn, const MetricLieAlgebra& mla) {
    CurvatureTensor r;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                for (int l = 0; l < kDim; ++l) {
                    Rational v;
                    for (int m = 0; m < kDim; ++m) {
                        v += conn.gamma(m, j, k) * conn.gamma(l, i, m);
                        v -= conn.gamma(m, i, k) * conn.gamma(l, j, m);
                        v -= mla.c(m, i, j) * conn.gamma(l, m, k);
                    }
                    r(i, j, k, l) = v;
                }
            }
        }
    }
    return r;
}

Rational scalar_curvature(const CurvatureTensor& r) {
    Rational s;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) s += r(i, j, j, i);
    }
    return s;
}

Rational s_g2perp(const CurvatureTensor& r, const G2Frame& frame) {
    Rational s;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const auto [g2, vec] = split_so7(SkewMat(r.op(i, j)), frame);
            s += a_of(vec, frame).mat()(i, j);
        }
    }
    return s;
}

Rational s_alt(const Mat7& t, const G2Frame& frame) {
    // Only the e_k component of p([xi_i, xi_j]) with k = third(i, j) reaches
    // the (i, j) entry of A_{p/6}, so the commutator is evaluated entrywise.
    const TorsionTensor xi = xi_from_t(t, frame);
    std::array<Mat7, kDim> slices;
    for (int i = 0; i < kDim; ++i) slices[static_cast<std::size_t>(i)] = xi.slice(i).mat();
    const CrossTable& table = frame.table();
    auto comm_entry = [](const Mat7& x, const Mat7& y, int a, int b) {
        Rational v;
        for (int c = 0; c < kDim; ++c) {
            if (!x(a, c).is_zero() && !y(c, b).is_zero()) v += x(a, c) * y(c, b);
            if (!y(a, c).is_zero() && !x(c, b).is_zero()) v -= y(a, c) * x(c, b);
        }
        return v;
    };
    Rational s;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const int k = i == j ? -1 : table.third(i, j);
            if (k < 0) continue;
            const Mat7& x = slices[static_cast<std::size_t>(i)];
            const Mat7& y = slices[static_cast<std::size_t>(j)];
            Rational pk;  // p([xi_i, xi_j])_k
            for (int a = 0; a < kDim; ++a) {
                if (a == k) continue;
                const int b = table.third(k, a);
                const Rational m = comm_entry(x, y, a, b);
                if (frame.eps(k, a, b) > 0) {
                    pk += m;
                } else {
                    pk -= m;
                }
            }
            // (A_v)_ij = eps_ijk v_k with v = p / 6
            const Rational entry = pk / Rational(6);
            if (frame.eps(i, j, k) > 0) {
                s += entry;
            } else {
                s -= entry;
            }
        }
    }
    return s;
}

bool SectionalMultiset::even_multiplicities() const {
    return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

SectionalMultiset sectional_multiset(const CurvatureTensor& r) {
    SectionalMultiset out;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            if (i == j) continue;
            const Rational& v = r(i, j, j, i);
            if (v.is_zero()) continue;
            out.entries.push_back({i, j, v});
            ++out.counts[v];
            out.sum += v;
        }
    }
    return out;
}

DivergenceBalance divergence_balance(const Mat7& t, const CurvatureTensor& r, const G2Frame& frame) {
    DivergenceBalance b;
    b.s_alt = s_alt(t, frame);
    b.s_g2perp = s_g2perp(r, frame);
    const TorsionEnergy e = sym_alt_energy(t, frame);
    b.chi_sq = e.chi_sq;
    b.alt_sq = e.alt_sq;
    b.sym_sq = e.sym_sq;
    const Rational half(1, 2);
    b.rhs = half * b.s_alt - half * b.s_g2perp + e.combination();
    b.chi_zero = chi(t, frame).is_zero();
    b.pass = !b.chi_zero || b.rhs.is_zero();
    b.implied_s = Rational(3) * b.s_alt + Rational(6) * e.combination();
    return b;
}

// ---------------------------------------------------------------- forms

KForm ce_differential(const MetricLieAlgebra& mla, const KForm& a) {
    const int k = a.degree();
    if (k >= kDim) throw std::domain_error("no 8-forms in dimension 7");
    KForm out(k + 1);
    if (a.is_zero()) return out;
    std::vector<int> args(static_cast<std::size_t>(k));
    for (IndexMask mask : masks_of_degree(k + 1)) {
        const std::vector<int> x = mask_indices(mask);
        Rational v;
        for (int i = 0; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                // rest = x without positions i and j
                std::size_t pos = 1;
                for (int n = 0; n <= k; ++n) {
                    if (n != i && n != j) args[pos++] = x[static_cast<std::size_t>(n)];
                }
                Rational term;
                for (int m = 0; m < kDim; ++m) {
                    const Rational& cm = mla.c(m, x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
                    if (cm.is_zero()) continue;
                    args[0] = m;
                    term += cm * a.evaluate(args);
                }
                if ((i + j) % 2 == 0) {
                    v += term;
                } else {
                    v -= term;
                }
            }
        }
        out.add(mask, v);
    }
    return out;
}

KForm codifferential(const MetricLieAlgebra& mla, const KForm& a, const G2Frame& frame) {
    const int k = a.degree();
    if (k == 0) throw std::domain_error("codifferential of a 0-form");
    KForm out = frame.hodge(ce_differential(mla, frame.hodge(a)));
    if (k % 2 != 0) out *= Rational(-1);
    return out;
}

std::array<KForm, kDim> nabla_form(const ConnectionTable& conn, const KForm& a) {
    const int k = a.degree();
    std::array<KForm, kDim> out;
    for (auto& f : out) f = KForm(k);
    if (k == 0) return out;
    for (int i = 0; i < kDim; ++i) {
        for (IndexMask mask : masks_of_degree(k)) {
            std::vector<int> idx = mask_indices(mask);
            Rational v;
            for (std::size_t s = 0; s < idx.size(); ++s) {
                const int orig = idx[s];
                for (int l = 0; l < kDim; ++l) {
                    const Rational& g = conn.gamma(l, i, orig);
                    if (g.is_zero()) continue;
                    idx[s] = l;
                    v -= g * a.evaluate(idx);
                }
                idx[s] = orig;
            }
            out[static_cast<std::size_t>(i)].add(mask, v);
        }
    }
    return out;
}

Mat7 r_map(const ConnectionTable& conn, const G2Frame& frame, NormConvention convention) {
    const auto nab = nabla_form(conn, frame.phi());
    Mat7 r;
    for (int j = 0; j < kDim; ++j) {
        const KForm y_star = interior(Vec7::basis(j), frame.star_phi());
        for (int i = 0; i < kDim; ++i) r(i, j) = inner(nab[static_cast<std::size_t>(i)], y_star, convention);
    }
    return r;
}

KForm cross_derivation(const Vec7& w, const KForm& a, const G2Frame& frame) {
    const int k = a.degree();
    KForm out(k);
    if (k == 0 || w.is_zero()) return out;
    std::array<Vec7, kDim> images;
    for (int n = 0; n < kDim; ++n) images[static_cast<std::size_t>(n)] = cross(Vec7::basis(n), w, frame);
    for (IndexMask mask : masks_of_degree(k)) {
        std::vector<int> idx = mask_indices(mask);
        Rational v;
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const int orig = idx[s];
            const Vec7& img = images[static_cast<std::size_t>(orig)];
            for (int l = 0; l < kDim; ++l) {
                if (img[l].is_zero()) continue;
                idx[s] = l;
                v += img[l] * a.evaluate(idx);
            }
            idx[s] = orig;
        }
        out.add(mask, v);
    }
    return out;
}

namespace {

/// Applies the skew slices xi_{e_i} of a torsion tensor to a form as
/// (xi . a)(Y...) = sum_s a(..., xi Y_s, ...).
KForm apply_slice(const TorsionTensor& xi, int i, const KForm& a) {
    KForm out(a.degree());
    for (IndexMask mask : masks_of_degree(a.degree())) {
        std::vector<int> idx = mask_indices(mask);
        Rational v;
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const int orig = idx[s];
            const Vec7& img = xi.at(i, orig);
            for (int l = 0; l < kDim; ++l) {
                if (img[l].is_zero()) continue;
                idx[s] = l;
                v += img[l] * a.evaluate(idx);
            }
            idx[s] = orig;
        }
        out.add(mask, v);
    }
    return out;
}

std::optional<Rational> proportionality(const Mat7& r, const Mat7& base) {
    std::optional<Rational> kappa;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            if (base(i, j).is_zero()) {
                if (!r(i, j).is_zero()) return std::nullopt;
                continue;
            }
            const Rational q = r(i, j) / base(i, j);
            if (kappa && *kappa != q) return std::nullopt;
            kappa = q;
        }
    }
    return kappa;
}

}  // namespace

TFromGeometry t_from_geometry(const MetricLieAlgebra& mla, const G2Frame& frame) {
    TFromGeometry out;
    const ConnectionTable conn = koszul(mla);
    const auto nab = nabla_form(conn, frame.phi());

    RatMatrix basis(35, kDim);
    for (int m = 0; m < kDim; ++m) {
        set_column(basis, static_cast<std::size_t>(m), cross_derivation(Vec7::basis(m), frame.phi(), frame));
    }
    out.derivation_exact = true;
    for (int i = 0; i < kDim; ++i) {
        const LeastSquares ls = least_squares(basis, coords(nab[static_cast<std::size_t>(i)]));
        if (!ls.exact()) out.derivation_exact = false;
        for (int m = 0; m < kDim; ++m) out.t(m, i) = ls.x[static_cast<std::size_t>(m)];
    }

    const TorsionTensor xi = xi_from_t(out.t, frame);
    out.round_trip = true;
    for (int i = 0; i < kDim; ++i) {
        if (apply_slice(xi, i, frame.phi()) != nab[static_cast<std::size_t>(i)]) out.round_trip = false;
    }

    const Mat7 three_tt = Rational(3) * out.t.transpose();
    for (NormConvention c : {NormConvention::Form, NormConvention::Tensor}) {
        RMapOutcome& o = out.outcomes[conv_slot(c)];
        o.convention = c;
        o.r = r_map(conn, frame, c);
        o.t_candidate = Rational(1, 3) * o.r.transpose();
        o.reproduces = o.t_candidate == out.t;
        o.scale = proportionality(o.r, three_tt);
    }
    const auto& form = out.outcome(NormConvention::Form);
    const auto& tensor = out.outcome(NormConvention::Tensor);
    out.convention_failure = !form.reproduces && !tensor.reproduces;
    if (form.scale && !form.scale->is_zero()) out.form_rescale = form.scale->inverse();

    if (!out.convention_failure) {
        out.note = std::string("r/3 reproduces T under the ") + std::string(to_string(form.reproduces ? form.convention
                                                                                                    : tensor.convention)) +
                   " convention";
    } else if (out.form_rescale) {
        out.note = "neither convention gives T = r/3; T solved from nabla phi = xi . phi instead; r = " +
                   out.form_rescale->to_string() + " * r_form reproduces it";
    } else {
        out.note = "neither convention gives T = r/3 and r_form is not proportional to T";
    }
    return out;
}

// ---------------------------------------------------------------- torsion forms

std::vector<KForm> lambda3_27_basis(const G2Frame& frame) {
    const auto masks = masks_of_degree(3);
    RatMatrix constraints(1 + kDim, masks.size());
    const auto phi = coords(frame.phi());
    for (std::size_t n = 0; n < masks.size(); ++n) constraints(0, n) = phi[n];
    for (int i = 0; i < kDim; ++i) {
        const auto c = coords(interior(Vec7::basis(i), frame.star_phi()));
        for (std::size_t n = 0; n < masks.size(); ++n) constraints(static_cast<std::size_t>(i + 1), n) = c[n];
    }
    std::vector<KForm> out;
    for (const auto& v : nullspace(constraints)) out.push_back(from_coords(3, v));
    return out;
}

std::vector<KForm> lambda2_14_basis(const G2Frame& frame) {
    const auto masks = masks_of_degree(2);
    RatMatrix constraints(kDim, masks.size());
    for (std::size_t n = 0; n < masks.size(); ++n) {
        const auto idx = mask_indices(masks[n]);
        for (int i = 0; i < kDim; ++i) constraints(static_cast<std::size_t>(i), n) = Rational(frame.eps(i, idx[0], idx[1]));
    }
    std::vector<KForm> out;
    for (const auto& v : nullspace(constraints)) out.push_back(from_coords(2, v));
    return out;
}

std::array<bool, 4> TorsionForms::class_flags() const {
    return {!tau0.is_zero(), !tau2.is_zero(), !tau3.is_zero(), !tau1.is_zero()};
}

TorsionForms torsion_forms(const KForm& dphi, const KForm& dstar_phi, const G2Frame& frame,
                           NormConvention convention) {
    if (dphi.degree() != 4 || dstar_phi.degree() != 5) {
        throw std::invalid_argument("torsion_forms expects a 4-form and a 5-form");
    }
    TorsionForms out;
    out.convention = convention;
    const KForm& phi = frame.phi();
    const KForm& star_phi = frame.star_phi();

    const auto b27 = lambda3_27_basis(frame);
    RatMatrix a(35, 1 + kDim + b27.size());
    set_column(a, 0, star_phi);
    for (int m = 0; m < kDim; ++m) {
        set_column(a, static_cast<std::size_t>(1 + m), Rational(3) * wedge(KForm::one_form(Vec7::basis(m)), phi));
    }
    for (std::size_t n = 0; n < b27.size(); ++n) set_column(a, 1 + kDim + n, frame.hodge(b27[n]));
    const LeastSquares first = least_squares(a, coords(dphi));
    out.tau0 = first.x[0];
    Vec7 t1;
    for (int m = 0; m < kDim; ++m) t1[m] = first.x[static_cast<std::size_t>(1 + m)];
    out.tau1 = KForm::one_form(t1);
    for (std::size_t n = 0; n < b27.size(); ++n) out.tau3 += first.x[1 + kDim + n] * b27[n];
    out.residual4 = from_coords(4, first.residual);

    const auto b14 = lambda2_14_basis(frame);
    RatMatrix b(21, b14.size());
    for (std::size_t n = 0; n < b14.size(); ++n) set_column(b, n, wedge(b14[n], phi));
    const KForm rest = dstar_phi - Rational(4) * wedge(out.tau1, star_phi);
    const LeastSquares second = least_squares(b, coords(rest));
    for (std::size_t n = 0; n < b14.size(); ++n) out.tau2 += second.x[n] * b14[n];
    out.residual5 = from_coords(5, second.residual);
    return out;
}

TorsionForms torsion_forms(const MetricLieAlgebra& mla, const G2Frame& frame, NormConvention convention) {
    return torsion_forms(ce_differential(mla, frame.phi()), ce_differential(mla, frame.star_phi()), frame,
                         convention);
}

std::vector<NormConvention> BryantReport::reconciling() const {
    std::vector<NormConvention> out;
    for (const auto& t : terms) {
        if (t.equal) out.push_back(t.convention);
    }
    return out;
}

BryantReport bryant_scalar_check(const MetricLieAlgebra& mla, const G2Frame& frame) {
    BryantReport out;
    out.s = scalar_curvature(curvature(koszul(mla), mla));
    out.forms = torsion_forms(mla, frame, NormConvention::Form);
    const Rational delta = codifferential(mla, out.forms.tau1, frame).coeff(0);
    for (NormConvention c : {NormConvention::Form, NormConvention::Tensor}) {
        BryantTerms& t = out.terms[conv_slot(c)];
        t.convention = c;
        t.delta_tau1 = delta;
        t.tau0_sq = out.forms.tau0 * out.forms.tau0;
        t.tau1_sq = norm_sq(out.forms.tau1, c);
        t.tau2_sq = norm_sq(out.forms.tau2, c);
        t.tau3_sq = norm_sq(out.forms.tau3, c);
        const Rational half(1, 2);
        t.rhs = Rational(12) * t.delta_tau1 + Rational(21, 8) * t.tau0_sq + Rational(30) * t.tau1_sq -
                half * t.tau2_sq - half * t.tau3_sq;
        t.equal = t.rhs == out.s;
    }
    return out;
}

// ---------------------------------------------------------------- Friedrich-Ivanov

namespace {

std::vector<NormConvention> matching(const std::array<FiRelation, 2>& rel) {
    std::vector<NormConvention> out;
    for (const auto& r : rel) {
        if (r.equal) out.push_back(r.convention);
    }
    return out;
}

}  // namespace

std::vector<NormConvention> FiReport::reconciling_nearly_parallel() const { return matching(nearly_parallel); }
std::vector<NormConvention> FiReport::reconciling_skew_torsion() const { return matching(skew_torsion); }

FiReport fi_nearly_parallel_check(const Rational& lambda0, const G2Frame& frame) {
    FiReport out;
    out.lambda0 = lambda0;
    out.s_expected = Rational(7 * 24) * lambda0 * lambda0;
    const KForm& phi = frame.phi();
    const KForm dphi = Rational(-8) * lambda0 * frame.star_phi();
    out.pairing = inner(dphi, frame.star_phi(), NormConvention::Form);
    out.tor = Rational(1, 6) * out.pairing * phi - frame.hodge(dphi);

    const auto& [mask0, c0] = *phi.terms().begin();
    out.tor_coefficient = out.tor.coeff(mask0) / c0;
    out.tor_proportional = out.tor == out.tor_coefficient * phi;

    for (NormConvention c : {NormConvention::Form, NormConvention::Tensor}) {
        const Rational tor_sq = norm_sq(out.tor, c);
        FiRelation& np = out.nearly_parallel[conv_slot(c)];
        np.convention = c;
        np.tor_sq = tor_sq;
        np.value = Rational(27, 2) * tor_sq;
        np.equal = np.value == out.s_expected;
        FiRelation& sk = out.skew_torsion[conv_slot(c)];
        sk.convention = c;
        sk.tor_sq = tor_sq;
        sk.value = out.pairing * out.pairing / Rational(18) - tor_sq / Rational(12);
        sk.equal = sk.value == out.s_expected;
    }
    return out;
}

// ---------------------------------------------------------------- models

HeisenbergModel heisenberg_model() {
    HeisenbergModel h;
    h.mla = MetricLieAlgebra::from_brackets({{0, 5, Vec7::basis(6)}, {4, 5, Vec7::basis(1)}});
    h.frame = &cayley_frame();
    const Rational sixth(1, 6);
    h.t(1, 0) = sixth;
    h.t(0, 1) = -sixth;
    h.t(6, 4) = -sixth;
    h.t(4, 6) = sixth;
    return h;
}

std::vector<GammaEntry> printed_heisenberg_gamma() {
    const Rational h(1, 2);
    return {
        {0, 5, 6, h},  {0, 6, 5, -h}, {1, 4, 5, -h}, {1, 5, 4, h},  {4, 1, 5, -h}, {4, 5, 1, -h},
        {5, 0, 6, -h}, {5, 1, 4, h},  {5, 4, 1, -h}, {5, 6, 0, h},  {6, 0, 5, -h}, {6, 5, 0, h},
    };
}

std::vector<GammaDiff> gamma_diff(const ConnectionTable& conn, const std::vector<GammaEntry>& printed) {
    std::map<std::array<int, 3>, Rational> table;
    for (const auto& e : printed) table[{e.i, e.j, e.k}] += e.value;
    std::vector<GammaDiff> out;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                const auto it = table.find({i, j, k});
                const Rational p = it == table.end() ? Rational() : it->second;
                const Rational& c = conn.gamma(k, i, j);
                if (p != c) out.push_back({i, j, k, p, c});
            }
        }
    }
    return out;
}

MetricLieAlgebra random_two_step_nilpotent(std::uint64_t seed) {
    Sampler s(derive_seed(seed, "two_step_nilpotent"));
    std::array<int, kDim> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    for (int n = kDim - 1; n > 0; --n) {
        std::swap(perm[static_cast<std::size_t>(n)], perm[static_cast<std::size_t>(s.integer(0, n))]);
    }
    const auto central_count = static_cast<std::size_t>(s.integer(1, 3));
    const std::vector<int> central(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(central_count));
    const std::vector<int> horizontal(perm.begin() + static_cast<std::ptrdiff_t>(central_count), perm.end());

    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < horizontal.size(); ++a) {
        for (std::size_t b = a + 1; b < horizontal.size(); ++b) {
            Vec7 v;
            for (int k : central) {
                if (s.coin()) v[k] = s.rational(3, 2);
            }
            if (!v.is_zero()) entries.push_back({horizontal[a], horizontal[b], v});
        }
    }
    if (entries.empty()) entries.push_back({horizontal[0], horizontal[1], Vec7::basis(central[0])});
    return MetricLieAlgebra::from_brackets(entries);
}

}  // namespace g2

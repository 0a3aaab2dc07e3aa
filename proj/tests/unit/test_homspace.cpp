#include "support.hpp"

#include "g2/g2alg.hpp"
#include "g2/homspace.hpp"
#include "g2/invariants.hpp"
#include "g2/torsion.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

using namespace g2;
using namespace g2test;

namespace {

// d a = sum_i e^i ^ nabla_i a for a torsion-free connection
KForm d_via_nabla(const MetricLieAlgebra& mla, const KForm& a) {
    KForm out(a.degree() + 1);
    const auto na = nabla_form(koszul(mla), a);
    for (int i = 0; i < kDim; ++i) out += wedge(KForm::monomial({i}), na[static_cast<std::size_t>(i)]);
    return out;
}

const MetricLieAlgebra& heis() {
    static const MetricLieAlgebra m = heisenberg_model().mla;
    return m;
}

}  // namespace

TEST_CASE("bracket input validation") {
    CHECK_THROWS_AS(MetricLieAlgebra::from_brackets({{0, 0, Vec7::basis(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(MetricLieAlgebra::from_brackets({{0, 7, Vec7::basis(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(MetricLieAlgebra::from_brackets({{-1, 2, Vec7::basis(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(MetricLieAlgebra::from_brackets({{0, 1, Vec7::basis(2)}, {1, 0, Vec7::basis(3)}}),
                    std::invalid_argument);
    const MetricLieAlgebra m = MetricLieAlgebra::from_brackets({{3, 1, Vec7::basis(2)}});
    CHECK(m.bracket(1, 3) == -Vec7::basis(2));
    CHECK(m.c(2, 3, 1) == Rational(1));
    CHECK(m.brackets().size() == 1);
    CHECK(m.brackets()[0].i == 1);
    CHECK(MetricLieAlgebra().is_abelian());
}

TEST_CASE("Jacobi violations are rejected by the connection") {
    const MetricLieAlgebra bad = MetricLieAlgebra::from_brackets({{0, 1, Vec7::basis(2)}, {2, 3, Vec7::basis(4)}});
    const auto w = bad.jacobi_violation();
    REQUIRE(w.has_value());
    CHECK_FALSE(w->value.is_zero());
    CHECK_THROWS_AS(koszul(bad), JacobiError);
    try {
        koszul(bad);
    } catch (const JacobiError& e) {
        CHECK(e.witness().value == w->value);
    }
    // so(3) on e0, e1, e2 is a genuine Lie algebra
    const MetricLieAlgebra so3 =
        MetricLieAlgebra::from_brackets({{0, 1, Vec7::basis(2)}, {1, 2, Vec7::basis(0)}, {2, 0, Vec7::basis(1)}});
    CHECK(so3.satisfies_jacobi());
}

TEST_CASE("Koszul connection and curvature against matrix oracles") {
    Gen g(61);
    for (int t = 0; t < 40; ++t) {
        const MetricLieAlgebra mla = t == 0 ? heis() : gen_nilpotent(g);
        REQUIRE(mla.satisfies_jacobi());
        const ConnectionTable conn = koszul(mla);
        CHECK(conn.metric_compatible());
        CHECK(conn.torsion_free(mla));
        for (int i = 0; i < kDim; ++i) {
            const Mat7 n = nabla_matrix(mla, i);
            for (int j = 0; j < kDim; ++j) CHECK(conn.nabla(i, j) == n.column(j));
        }
        const auto ops = curvature_ops(mla);
        const CurvatureTensor r = curvature(conn, mla);
        CHECK(r.symmetry_violations().empty());
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                const Mat7& m = ops[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                CHECK(r.op(i, j) == m);
                for (int k = 0; k < kDim; ++k)
                    for (int l = 0; l < kDim; ++l) CHECK(r(i, j, k, l) == m(l, k));
            }
        CHECK(scalar_curvature(r) == nilpotent_scalar(mla));
        for (const G2Frame* fp : frames()) CHECK(s_g2perp(r, *fp) == test_s_g2perp(ops, *fp));
    }
}

TEST_CASE("s_g2perp = s/3 on 100 seeded 2-step nilpotent algebras") {
    Gen g(62);
    for (int t = 0; t < 100; ++t) {
        const MetricLieAlgebra mla = gen_nilpotent(g);
        const CurvatureTensor r = curvature(koszul(mla), mla);
        const Rational s = scalar_curvature(r);
        CHECK(s == nilpotent_scalar(mla));
        CHECK(s < Rational(0));
        for (const G2Frame* fp : frames()) CHECK(Rational(3) * s_g2perp(r, *fp) == s);
    }
}

TEST_CASE("library nilpotent generator") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const MetricLieAlgebra m = random_two_step_nilpotent(seed);
        CHECK(m.satisfies_jacobi());
        CHECK_FALSE(m.is_abelian());
        CHECK(m == random_two_step_nilpotent(seed));
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                for (int k = 0; k < kDim; ++k) CHECK(m.bracket(m.bracket(i, j), Vec7::basis(k)).is_zero());
    }
}

TEST_CASE("printed example: connection table and curvature") {
    const ConnectionTable conn = koszul(heis());
    // printed nonzero entries, (i, j, k, value) for nabla_{e_i} e_j = value e_k
    const std::vector<std::tuple<int, int, int, Rational>> printed{
        {0, 5, 6, Rational(1, 2)},  {0, 6, 5, Rational(-1, 2)}, {1, 4, 5, Rational(-1, 2)}, {1, 5, 4, Rational(1, 2)},
        {4, 1, 5, Rational(-1, 2)}, {4, 5, 1, Rational(-1, 2)}, {5, 0, 6, Rational(-1, 2)}, {5, 1, 4, Rational(1, 2)},
        {5, 4, 1, Rational(-1, 2)}, {5, 6, 0, Rational(1, 2)},  {6, 0, 5, Rational(-1, 2)}, {6, 5, 0, Rational(1, 2)}};
    const auto lib = printed_heisenberg_gamma();
    REQUIRE(lib.size() == printed.size());
    for (std::size_t n = 0; n < lib.size(); ++n) {
        CHECK(lib[n].i == std::get<0>(printed[n]));
        CHECK(lib[n].j == std::get<1>(printed[n]));
        CHECK(lib[n].k == std::get<2>(printed[n]));
        CHECK(lib[n].value == std::get<3>(printed[n]));
    }
    int agree = 0;
    for (const auto& [i, j, k, v] : printed) agree += conn.gamma(k, i, j) == v ? 1 : 0;
    CHECK(agree == 11);
    const auto diff = gamma_diff(conn, lib);
    REQUIRE(diff.size() == 1);
    CHECK(diff[0].i == 4);
    CHECK(diff[0].j == 5);
    CHECK(diff[0].k == 1);
    CHECK(diff[0].printed == Rational(-1, 2));
    CHECK(diff[0].computed == Rational(1, 2));

    const CurvatureTensor r = curvature(conn, heis());
    CHECK(scalar_curvature(r) == Rational(-1));
    CHECK(s_g2perp(r, cayley_frame()) == Rational(-1, 3));
    const SectionalMultiset ms = sectional_multiset(r);
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : ms.entries) pairs.insert({e.i, e.j});
    const std::set<std::pair<int, int>> printed_pairs{{5, 0}, {6, 0}, {4, 1}, {5, 1}, {1, 4}, {5, 4},
                                                      {0, 5}, {1, 5}, {4, 5}, {6, 5}, {0, 6}, {5, 6}};
    CHECK(pairs == printed_pairs);
    CHECK(ms.sum == Rational(-1));
    CHECK(ms.even_multiplicities());
    CHECK(ms.counts == std::map<Rational, int>{{Rational(-3, 4), 4}, {Rational(1, 4), 8}});
    // every value occurs for (i,j) and (j,i), so odd counts such as 2/3/7 split cannot occur
    for (const auto& e : ms.entries) CHECK(r(e.i, e.j, e.j, e.i) == r(e.j, e.i, e.i, e.j));
}

TEST_CASE("Chevalley-Eilenberg differential") {
    // de^k = -sum_{i<j} c^k_ij e^{ij}
    CHECK(ce_differential(heis(), KForm::monomial({6})) == -KForm::monomial({0, 5}));
    CHECK(ce_differential(heis(), KForm::monomial({1})) == -KForm::monomial({4, 5}));
    CHECK(ce_differential(heis(), KForm::monomial({2})).is_zero());
    CHECK_THROWS_AS(ce_differential(heis(), KForm::volume()), std::domain_error);
    CHECK_THROWS_AS(codifferential(heis(), KForm::scalar(1), cayley_frame()), std::domain_error);
    Gen g(63);
    for (int t = 0; t < 30; ++t) {
        const MetricLieAlgebra mla = gen_nilpotent(g);
        for (int k = 0; k <= 5; ++k) {
            const KForm a = g.form(k);
            const KForm da = ce_differential(mla, a);
            CHECK(da == d_via_nabla(mla, a));
            CHECK(ce_differential(mla, da).is_zero());
            const KForm b = g.form(static_cast<int>(g.range(0, 6 - k)));
            const KForm lhs = ce_differential(mla, wedge(a, b));
            const KForm rhs = wedge(da, b) + Rational(k % 2 == 0 ? 1 : -1) * wedge(a, ce_differential(mla, b));
            CHECK(lhs == rhs);
            // adjointness for the Form inner product on a unimodular algebra
            for (const G2Frame* fp : frames()) {
                const KForm beta = g.form(k + 1);
                CHECK(inner(da, beta) == inner(a, codifferential(mla, beta, *fp)));
            }
        }
    }
}

TEST_CASE("covariant derivative of forms") {
    Gen g(64);
    for (int t = 0; t < 20; ++t) {
        const MetricLieAlgebra mla = gen_nilpotent(g);
        const ConnectionTable conn = koszul(mla);
        const KForm a = g.form(2), b = g.form(3);
        const auto na = nabla_form(conn, a), nb = nabla_form(conn, b), nab = nabla_form(conn, wedge(a, b));
        for (int i = 0; i < kDim; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            CHECK(nab[s] == wedge(na[s], b) + wedge(a, nb[s]));
            // (nabla_i a)(e_p, e_q) = -a(nabla_i e_p, e_q) - a(e_p, nabla_i e_q)
            for (int p = 0; p < kDim; ++p)
                for (int q = 0; q < kDim; ++q) {
                    Rational v;
                    for (int m = 0; m < kDim; ++m) {
                        v -= conn.gamma(m, i, p) * a.evaluate({m, q});
                        v -= conn.gamma(m, i, q) * a.evaluate({p, m});
                    }
                    CHECK(na[s].evaluate({p, q}) == v);
                }
        }
    }
}

TEST_CASE("T from geometry on the printed example") {
    const HeisenbergModel h = heisenberg_model();
    const TFromGeometry tg = t_from_geometry(h.mla, *h.frame);
    CHECK(tg.t == h.t);
    CHECK(tg.derivation_exact);
    CHECK(tg.round_trip);
    const auto np = nabla_form(koszul(h.mla), h.frame->phi());
    for (int i = 0; i < kDim; ++i)
        CHECK(np[static_cast<std::size_t>(i)] == cross_derivation(h.t.column(i), h.frame->phi(), *h.frame));
    // neither convention reproduces T through r/3; the Form reading needs the factor -1/4
    CHECK(tg.convention_failure);
    CHECK_FALSE(tg.outcome(NormConvention::Form).reproduces);
    CHECK_FALSE(tg.outcome(NormConvention::Tensor).reproduces);
    REQUIRE(tg.form_rescale.has_value());
    CHECK(*tg.form_rescale == Rational(-1, 4));
    CHECK(Rational(-1, 4) * tg.outcome(NormConvention::Form).r == Rational(3) * h.t.transpose());
    CHECK(tg.outcome(NormConvention::Form).scale == Rational(-4));
    CHECK(tg.outcome(NormConvention::Tensor).scale == Rational(-24));
    CHECK(classify(tg.t, *h.frame).label() == "X2");
}

TEST_CASE("T from geometry round trip on nilpotent algebras") {
    Gen g(65);
    for (int t = 0; t < 30; ++t) {
        const MetricLieAlgebra mla = gen_nilpotent(g);
        for (const G2Frame* fp : frames()) {
            const TFromGeometry tg = t_from_geometry(mla, *fp);
            CHECK(tg.derivation_exact);
            CHECK(tg.round_trip);
            const auto np = nabla_form(koszul(mla), fp->phi());
            for (int i = 0; i < kDim; ++i)
                CHECK(np[static_cast<std::size_t>(i)] == cross_derivation(tg.t.column(i), fp->phi(), *fp));
            // d phi is the alternation of nabla phi
            CHECK(ce_differential(mla, fp->phi()) == d_via_nabla(mla, fp->phi()));
            // curvature balance through s_alt = i0 and s_g2perp = s/3
            const CurvatureTensor r = curvature(koszul(mla), mla);
            const DivergenceBalance db = divergence_balance(tg.t, r, *fp);
            CHECK(db.s_alt == i0(tg.t, *fp));
            if (db.chi_zero) {
                CHECK(db.pass);
                CHECK(db.implied_s == scalar_curvature(r));
            }
        }
    }
}

TEST_CASE("torsion forms") {
    Gen g(66);
    for (int t = 0; t < 30; ++t) {
        const MetricLieAlgebra mla = t == 0 ? heis() : gen_nilpotent(g);
        for (const G2Frame* fp : frames()) {
            if (t == 0 && fp != &cayley_frame()) continue;
            const G2Frame& f = *fp;
            const TorsionForms tf = torsion_forms(mla, f);
            CHECK(tf.exact());
            const KForm dphi = ce_differential(mla, f.phi());
            const KForm dstar = ce_differential(mla, f.star_phi());
            CHECK(dphi == tf.tau0 * f.star_phi() + Rational(3) * wedge(tf.tau1, f.phi()) + f.hodge(tf.tau3));
            CHECK(dstar == Rational(4) * wedge(tf.tau1, f.star_phi()) + wedge(tf.tau2, f.phi()));
            // tau2 in the 14-part: *(tau2 ^ phi) = -tau2; tau3 in the 27-part
            CHECK(f.hodge(wedge(tf.tau2, f.phi())) == -tf.tau2);
            CHECK(wedge(tf.tau3, f.phi()).is_zero());
            CHECK(wedge(tf.tau3, f.star_phi()).is_zero());
            const TFromGeometry tg = t_from_geometry(mla, f);
            CHECK(tf.class_flags() == classify(tg.t, f).flags);
        }
    }
    const TorsionForms h = torsion_forms(heis(), cayley_frame());
    CHECK(h.tau0 == Rational(0));
    CHECK(h.tau1.is_zero());
    CHECK(h.tau3.is_zero());
    CHECK(h.tau2 == KForm::monomial({0, 1}) - KForm::monomial({4, 6}));
}

TEST_CASE("subspace bases") {
    for (const G2Frame* fp : frames()) {
        const auto b27 = lambda3_27_basis(*fp);
        const auto b14 = lambda2_14_basis(*fp);
        CHECK(b27.size() == 27);
        CHECK(b14.size() == 14);
        for (const auto& b : b27) {
            CHECK(wedge(b, fp->phi()).is_zero());
            CHECK(wedge(b, fp->star_phi()).is_zero());
        }
        for (const auto& b : b14) CHECK(wedge(b, fp->star_phi()).is_zero());
    }
}

TEST_CASE("scalar curvature formula from torsion forms") {
    const BryantReport b = bryant_scalar_check(heis(), cayley_frame());
    CHECK(b.s == Rational(-1));
    CHECK(b.at(NormConvention::Form).equal);
    CHECK(b.at(NormConvention::Form).tau2_sq == Rational(2));
    CHECK(b.at(NormConvention::Form).rhs == Rational(-1));
    CHECK_FALSE(b.at(NormConvention::Tensor).equal);
    CHECK(b.at(NormConvention::Tensor).rhs == Rational(-2));
    CHECK(b.reconciling() == std::vector<NormConvention>{NormConvention::Form});
    Gen g(67);
    for (int t = 0; t < 20; ++t) {
        const MetricLieAlgebra mla = gen_nilpotent(g);
        for (const G2Frame* fp : frames()) {
            const BryantReport r = bryant_scalar_check(mla, *fp);
            CHECK(r.s == nilpotent_scalar(mla));
            const BryantTerms& form = r.at(NormConvention::Form);
            CHECK(form.rhs == Rational(12) * form.delta_tau1 + Rational(21, 8) * form.tau0_sq + Rational(30) * form.tau1_sq -
                                  Rational(1, 2) * form.tau2_sq - Rational(1, 2) * form.tau3_sq);
            CHECK(form.equal);
        }
    }
}

TEST_CASE("nearly parallel relations") {
    Gen g(68);
    for (const G2Frame* fp : frames()) {
        for (int t = 0; t < 30; ++t) {
            const Rational l = g.nonzero_rat();
            const FiReport r = fi_nearly_parallel_check(l, *fp);
            CHECK(r.tor_proportional);
            CHECK(r.tor_coefficient == Rational(-4, 3) * l);
            CHECK(r.tor == Rational(-4, 3) * l * fp->phi());
            CHECK(r.s_expected == Rational(168) * l * l);
            // the pairing (d phi, *phi) = -8 l |*phi|^2 = -56 l
            CHECK(r.pairing == Rational(-56) * l);
            CHECK(Rational(27, 2) * norm_sq(r.tor) == Rational(168) * l * l);
            CHECK(r.reconciling_nearly_parallel() == std::vector<NormConvention>{NormConvention::Form});
            CHECK(r.reconciling_skew_torsion() == std::vector<NormConvention>{NormConvention::Tensor});
            CHECK(r.pairing * r.pairing / Rational(18) - norm_sq(r.tor, NormConvention::Tensor) / Rational(12) ==
                  r.s_expected);
        }
    }
}

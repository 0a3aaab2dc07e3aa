#include "g2/suites.hpp"

#include "g2/g2alg.hpp"
#include "g2/homspace.hpp"
#include "g2/invariants.hpp"
#include "g2/linalg.hpp"
#include "g2/torsion.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace g2 {

std::string_view to_string(ConventionMode m) {
    switch (m) {
        case ConventionMode::Form: return "form";
        case ConventionMode::Tensor: return "tensor";
        case ConventionMode::Auto: return "auto";
    }
    return "auto";
}

ConventionMode parse_convention_mode(std::string_view text) {
    if (text == "form") return ConventionMode::Form;
    if (text == "tensor") return ConventionMode::Tensor;
    if (text == "auto") return ConventionMode::Auto;
    throw std::invalid_argument("convention must be form, tensor or auto");
}

namespace {

class Collector {
public:
    explicit Collector(std::string name) { r_.name = std::move(name); }

    void witness(const std::function<std::string()>& describe) {
        if (r_.witness.empty()) r_.witness = describe();
    }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++r_.cases;
        if (!ok && r_.pass) {
            r_.pass = false;
            r_.counterexample = describe();
        }
    }

    void note(std::string n) { r_.note = std::move(n); }
    SuiteResult& result() { return r_; }

private:
    SuiteResult r_;
};

std::string names(const std::vector<NormConvention>& cs) {
    if (cs.empty()) return "none";
    std::string out;
    for (auto c : cs) {
        if (!out.empty()) out += ",";
        out += to_string(c);
    }
    return out;
}

bool mode_includes(ConventionMode mode, NormConvention c) {
    return mode == ConventionMode::Auto || (mode == ConventionMode::Form) == (c == NormConvention::Form);
}

}  // namespace

KForm sample_form(Sampler& s, int degree) {
    const auto masks = masks_of_degree(degree);
    KForm out(degree);
    const int terms = static_cast<int>(s.integer(1, 4));
    for (int n = 0; n < terms; ++n) {
        const auto pick = static_cast<std::size_t>(s.integer(0, static_cast<long>(masks.size()) - 1));
        out.add(masks[pick], s.nonzero_rational(5, 3));
    }
    return out;
}

SuiteResult suite_epsilon_identities(const G2Frame& frame) {
    const CheckReport r = check_epsilon_identities(frame);
    SuiteResult out{"epsilon contraction identities", r.cases, r.pass, r.failed_rule.empty() ? "" : r.failed_rule + ": " + r.witness,
                    "", ""};
    out.witness = "eps(0,1,2)=" + std::to_string(frame.eps(0, 1, 2)) + ", orientation " +
                  std::to_string(frame.orientation());
    return out;
}

SuiteResult suite_cross_axioms(const G2Frame& frame, std::uint64_t seed, int trials) {
    const CheckReport r = validate_cross_axioms(frame, seed, trials);
    SuiteResult out{"cross product axioms", r.cases, r.pass, "", "", ""};
    if (!r.pass) out.counterexample = r.failed_rule + ": " + r.witness;
    Sampler s(derive_seed(seed, "cross_axioms"));
    const Vec7 u = s.vec();
    const Vec7 v = s.vec();
    out.witness = "u=" + u.to_string() + " v=" + v.to_string() + " u x v=" + cross(u, v, frame).to_string();
    return out;
}

SuiteResult suite_star_phi_pairing(const G2Frame& frame) {
    const PairingReport r = star_phi_pairing_check(frame);
    SuiteResult out{"star phi pairing", r.cases, r.pass, "", "", ""};
    if (!r.pass) {
        out.counterexample = std::to_string(r.sign_flipped) + " of " + std::to_string(r.cases) + " quadruples differ" +
                             (r.global_sign_flip ? " by one global sign" : "");
    }
    out.witness = "*phi(e0,e1,e2,e3)=" + frame.star_phi().evaluate({0, 1, 2, 3}).to_string();
    return out;
}

SuiteResult suite_p_kernel(const G2Frame& frame) {
    Collector c("kernel of p is g2");
    const auto basis = g2_basis(frame);
    c.check(basis.size() == 14, [&] { return "dim ker p = " + std::to_string(basis.size()); });
    RatMatrix images(kDim, 21);
    std::size_t col = 0;
    for (int j = 0; j < kDim; ++j) {
        for (int k = j + 1; k < kDim; ++k) {
            Mat7 unit;
            unit(j, k) = Rational(1);
            unit(k, j) = Rational(-1);
            const Vec7 p = p_map(unit, frame);
            for (int i = 0; i < kDim; ++i) images(static_cast<std::size_t>(i), col) = p[i];
            ++col;
        }
    }
    const std::size_t rk = rank(images);
    c.check(rk == kDim, [&] { return "rank p = " + std::to_string(rk); });
    for (std::size_t n = 0; n < basis.size(); ++n) {
        c.check(is_cross_derivation(basis[n], frame), [&] { return "basis element " + std::to_string(n) + " is not a derivation"; });
    }
    for (int i = 0; i < kDim; ++i) {
        const Vec7 e = Vec7::basis(i);
        c.check(p_map(a_of(e, frame), frame) == Rational(6) * e, [&] { return "p(A_e" + std::to_string(i) + ") != 6 e"; });
    }
    c.witness([&] { return "dim ker p = " + std::to_string(basis.size()) + ", rank p = " + std::to_string(rk); });
    return c.result();
}

SuiteResult suite_so7_split(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("so(7) splitting");
    Sampler s(derive_seed(seed, "so7_split"));
    for (int t = 0; t < trials; ++t) {
        const SkewMat a(s.skew());
        const auto [g, v] = split_so7(a, frame);
        const SkewMat av = a_of(v, frame);
        const auto again = split_so7(g, frame);
        c.witness([&] { return "p(a)/6 = " + v.to_string(); });
        c.check(g + av == a && p_map(g, frame).is_zero() && trace_inner(g.mat(), av.mat()).is_zero() &&
                    again.vec.is_zero() && again.g2 == g,
                [&] { return "a = " + a.mat().to_string(); });
    }
    return c.result();
}

SuiteResult suite_bracket_projection(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("bracket projection [A_u,A_v]_perp = A_(u x v)");
    Sampler s(derive_seed(seed, "bracket_projection"));
    for (int t = 0; t < trials; ++t) {
        const Vec7 u = s.vec();
        const Vec7 v = s.vec();
        const auto split = split_so7(bracket(a_of(u, frame), a_of(v, frame)), frame);
        const SkewMat lhs = a_of(split.vec, frame);
        c.witness([&] { return "u=" + u.to_string() + " v=" + v.to_string() + " u x v=" + split.vec.to_string(); });
        c.check(lhs == bracket_g2perp(u, v, frame) && split.vec == cross(u, v, frame),
                [&] { return "u=" + u.to_string() + " v=" + v.to_string(); });
    }
    return c.result();
}

SuiteResult suite_endo_decomposition(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("endomorphism decomposition");
    Sampler s(derive_seed(seed, "endo_decomposition"));
    for (int t = 0; t < trials; ++t) {
        const Mat7 m = s.matrix();
        const EndoSplit e = decompose_endo(m, frame);
        const Mat7 parts[4] = {Mat7::scalar(e.scalar), e.sym0, e.g2part.mat(), a_of(e.vector, frame).mat()};
        bool orth = true;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) orth = orth && trace_inner(parts[i], parts[j]).is_zero();
        }
        c.witness([&] { return "scalar=" + e.scalar.to_string() + " Z=" + e.vector.to_string(); });
        c.check(orth && e.reconstruct(frame) == m && e.sym0.is_symmetric() && e.sym0.trace().is_zero() &&
                    p_map(e.g2part, frame).is_zero(),
                [&] { return "T = " + m.to_string(); });
    }
    return c.result();
}

SuiteResult suite_quadratic_relations(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("quadratic invariant relations");
    Sampler s(derive_seed(seed, "quadratic_relations"));
    for (int t = 0; t < trials; ++t) {
        const Mat7 m = s.matrix();
        const QuadraticRelationReport r = verify_quadratic_relations(m, frame);
        c.witness([&] {
            return "i0=" + r.values.i0.to_string() + " i1=" + r.values.i1.to_string() + " i2=" + r.values.i2.to_string();
        });
        c.check(r.pass, [&] { return r.violated.front() + " at T = " + m.to_string(); });
    }
    return c.result();
}

SuiteResult suite_special_cases(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("special shapes");
    Sampler s(derive_seed(seed, "special_cases"));
    auto run = [&](const Mat7& m, SpecialShape expected) {
        const SpecialCaseReport r = special_case_check(m, frame);
        c.check(r.pass && r.shape == expected, [&] {
            return to_string(r.shape) + (r.violated.empty() ? std::string() : ": " + r.violated.front()) +
                   " at T = " + m.to_string();
        });
    };
    for (int t = 0; t < trials; ++t) {
        const Rational lambda = s.nonzero_rational();
        Mat7 sym = s.symmetric();
        sym(0, 1) += Rational(1);  // never a multiple of Id
        sym(1, 0) += Rational(1);
        const Vec7 z = s.nonzero_vec();
        c.witness([&] { return "lambda=" + lambda.to_string() + " Z=" + z.to_string(); });
        run(Mat7::scalar(lambda), SpecialShape::Scalar);
        run(sym, SpecialShape::Symmetric);
        run(a_of(z, frame).mat(), SpecialShape::Vector);
    }
    return c.result();
}

SuiteResult suite_characteristic_vector(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("characteristic vector");
    Sampler s(derive_seed(seed, "characteristic_vector"));
    for (int t = 0; t < trials; ++t) {
        const Mat7 m = s.matrix();
        const Mat7 no_x4 = m - a_of(decompose_endo(m, frame).vector, frame).mat();
        const Vec7 z = s.vec();
        const Vec7 chi_z = chi(a_of(z, frame).mat(), frame);
        c.witness([&] { return "Z=" + z.to_string() + " chi(A_Z)=" + chi_z.to_string(); });
        c.check(chi(no_x4, frame).is_zero(), [&] { return "chi != 0 for T = " + no_x4.to_string(); });
        c.check(chi_z == Rational(-6) * z, [&] { return "chi(A_Z) != -6 Z for Z = " + z.to_string(); });
        c.check(chi(m, frame) == xi_from_t(m, frame).trace(), [&] { return "chi != tr xi for T = " + m.to_string(); });
    }
    return c.result();
}

SuiteResult suite_torsion_energy(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("torsion energy identity");
    Sampler s(derive_seed(seed, "torsion_energy"));
    for (int t = 0; t < trials; ++t) {
        const Mat7 m = s.matrix();
        const TorsionEnergy e = sym_alt_energy(m, frame);
        const Rational diff = i1(m, frame) - i2(m, frame);
        c.witness([&] { return "|chi|^2=" + e.chi_sq.to_string() + " i1-i2=" + diff.to_string(); });
        c.check(e.combination() == diff, [&] { return "T = " + m.to_string(); });
    }
    return c.result();
}

SuiteResult suite_alternating_curvature(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("alternating curvature term s_alt = i0");
    Sampler s(derive_seed(seed, "alternating_curvature"));
    for (int t = 0; t < trials; ++t) {
        const Mat7 m = s.matrix();
        const Rational a = s_alt(m, frame);
        c.witness([&] { return "s_alt=" + a.to_string(); });
        c.check(a == i0(m, frame), [&] { return "T = " + m.to_string(); });
    }
    return c.result();
}

SuiteResult suite_hypersurface_chain(const G2Frame& frame, std::uint64_t seed, int trials) {
    Collector c("hypersurface chain s = 128 sigma2(S)");
    Sampler s(derive_seed(seed, "hypersurface"));
    const HypersurfaceReport id = hypersurface_identity_check(Mat7::identity(), frame);
    c.check(id.pass && id.rhs == Rational(2688), [&] { return "S = Id gives " + id.lhs.to_string(); });
    for (int t = 0; t < trials; ++t) {
        const Mat7 sm = s.symmetric();
        const HypersurfaceReport r = hypersurface_identity_check(sm, frame);
        c.witness([&] { return "128 sigma2(S)=" + r.rhs.to_string(); });
        c.check(r.pass, [&] { return "S = " + sm.to_string(); });
    }
    return c.result();
}

namespace {

MetricLieAlgebra suite_algebra(std::uint64_t seed, int n) {
    return random_two_step_nilpotent(derive_seed(seed, "nilpotent_" + std::to_string(n)));
}

}  // namespace

SuiteResult suite_nilpotent_curvature(const G2Frame& frame, std::uint64_t seed, int count) {
    Collector c("nilpotent curvature split s_g2perp = s/3");
    for (int n = 0; n < count; ++n) {
        const MetricLieAlgebra mla = suite_algebra(seed, n);
        const ConnectionTable conn = koszul(mla);
        const CurvatureTensor r = curvature(conn, mla);
        const Rational s = scalar_curvature(r);
        const Rational sp = s_g2perp(r, frame);
        const auto bad = r.symmetry_violations();
        auto where = [&] { return "algebra " + std::to_string(n); };
        c.witness([&] { return "s=" + s.to_string() + " s_g2perp=" + sp.to_string(); });
        c.check(conn.metric_compatible() && conn.torsion_free(mla), [&] { return where() + ": connection"; });
        c.check(bad.empty(), [&] { return where() + ": " + (bad.empty() ? "" : bad.front()); });
        c.check(Rational(3) * sp == s, [&] { return where() + ": s=" + s.to_string() + " s_g2perp=" + sp.to_string(); });
    }
    return c.result();
}

SuiteResult suite_nilpotent_forms(const G2Frame& frame, std::uint64_t seed, int count, ConventionMode mode) {
    Collector c("nilpotent exterior calculus and torsion forms");
    Sampler s(derive_seed(seed, "nilpotent_forms"));
    const auto model = heisenberg_model();
    const auto model_conventions = bryant_scalar_check(model.mla, *model.frame).reconciling();
    std::string seen;
    for (int n = 0; n < count; ++n) {
        const MetricLieAlgebra mla = suite_algebra(seed, n);
        auto where = [&] { return "algebra " + std::to_string(n); };
        for (int k = 0; k <= 5; ++k) {
            const KForm a = sample_form(s, k);
            c.check(ce_differential(mla, ce_differential(mla, a)).is_zero(),
                    [&] { return where() + ": d^2 != 0 on " + a.to_string(); });
        }
        for (int k = 0; k <= 5; ++k) {
            const KForm a = sample_form(s, k);
            const KForm b = sample_form(s, k + 1);
            c.check(inner(ce_differential(mla, a), b) == inner(a, codifferential(mla, b, frame)),
                    [&] { return where() + ": <d a, b> != <a, delta b> in degree " + std::to_string(k); });
        }
        const TorsionForms tf = torsion_forms(mla, frame);
        c.check(tf.exact(), [&] { return where() + ": nonzero torsion-form residual"; });
        const TFromGeometry tg = t_from_geometry(mla, frame);
        c.check(tg.derivation_exact && tg.round_trip, [&] { return where() + ": T round trip"; });
        c.check(tf.class_flags() == classify(tg.t, frame).flags, [&] { return where() + ": class flags disagree"; });

        const BryantReport br = bryant_scalar_check(mla, frame);
        const auto rec = br.reconciling();
        if (seen.empty()) seen = names(rec);
        c.witness([&] { return "s=" + br.s.to_string() + " |tau2|^2_form=" + br.at(NormConvention::Form).tau2_sq.to_string(); });
        if (mode == ConventionMode::Auto) {
            bool ok = true;
            for (auto conv : model_conventions) ok = ok && std::find(rec.begin(), rec.end(), conv) != rec.end();
            c.check(ok, [&] { return where() + ": Bryant formula reconciles under " + names(rec); });
        }
    }
    if (mode == ConventionMode::Auto) {
        c.note("Bryant formula reconciles under " + names(model_conventions) + " on the model and the samples");
    } else {
        const NormConvention conv = mode == ConventionMode::Form ? NormConvention::Form : NormConvention::Tensor;
        const bool holds = std::find(model_conventions.begin(), model_conventions.end(), conv) != model_conventions.end();
        c.note(std::string("Bryant formula ") + (holds ? "holds" : "does not hold") + " under " +
               std::string(to_string(conv)) + " on the model");
    }
    return c.result();
}

SuiteResult suite_nearly_parallel(const G2Frame& frame, std::uint64_t seed, int trials, ConventionMode mode) {
    Collector c("nearly parallel torsion");
    Sampler s(derive_seed(seed, "nearly_parallel"));
    std::vector<NormConvention> np_first;
    std::vector<NormConvention> sk_first;
    for (int t = 0; t < trials; ++t) {
        const Rational lambda0 = s.nonzero_rational();
        const FiReport r = fi_nearly_parallel_check(lambda0, frame);
        const auto np = r.reconciling_nearly_parallel();
        const auto sk = r.reconciling_skew_torsion();
        if (t == 0) {
            np_first = np;
            sk_first = sk;
        }
        c.witness([&] { return "lambda0=" + lambda0.to_string() + " Tor=" + r.tor_coefficient.to_string() + " phi"; });
        c.check(r.tor_proportional && r.tor_coefficient == Rational(-4, 3) * lambda0,
                [&] { return "Tor != -4/3 lambda0 phi at lambda0 = " + lambda0.to_string(); });
        if (mode == ConventionMode::Auto) {
            c.check(np.size() == 1 && sk.size() == 1 && np == np_first && sk == sk_first,
                    [&] { return "conventions " + names(np) + " / " + names(sk) + " at lambda0 = " + lambda0.to_string(); });
        }
    }
    std::string note;
    for (auto conv : {NormConvention::Form, NormConvention::Tensor}) {
        if (!mode_includes(mode, conv)) continue;
        const bool a = std::find(np_first.begin(), np_first.end(), conv) != np_first.end();
        const bool b = std::find(sk_first.begin(), sk_first.end(), conv) != sk_first.end();
        if (!note.empty()) note += "; ";
        note += std::string(to_string(conv)) + ": s = 27/2 |Tor|^2 " + (a ? "holds" : "fails") +
                ", scalar/skew-torsion relation " + (b ? "holds" : "fails");
    }
    c.note(note);
    return c.result();
}

std::vector<SuiteResult> run_identity_suites(const SuiteOptions& opts) {
    if (opts.trials < 1) throw std::invalid_argument("trials must be at least 1");
    const G2Frame& f = frame_for(opts.frame);
    const int algebras = (opts.trials + 9) / 10;
    const auto seed = opts.seed;
    const int n = opts.trials;
    return {
        suite_epsilon_identities(f),
        suite_cross_axioms(f, seed, n),
        suite_star_phi_pairing(f),
        suite_p_kernel(f),
        suite_so7_split(f, seed, n),
        suite_bracket_projection(f, seed, n),
        suite_endo_decomposition(f, seed, n),
        suite_quadratic_relations(f, seed, n),
        suite_special_cases(f, seed, n),
        suite_characteristic_vector(f, seed, n),
        suite_torsion_energy(f, seed, n),
        suite_alternating_curvature(f, seed, n),
        suite_hypersurface_chain(f, seed, n),
        suite_nilpotent_curvature(f, seed, algebras),
        suite_nilpotent_forms(f, seed, algebras, opts.convention),
        suite_nearly_parallel(f, seed, algebras, opts.convention),
    };
}

}  // namespace g2

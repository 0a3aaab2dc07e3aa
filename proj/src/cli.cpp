#include "g2/cli.hpp"

#include "g2/g2alg.hpp"
#include "g2/homspace.hpp"
#include "g2/invariants.hpp"
#include "g2/torsion.hpp"

#include <algorithm>
#include <sstream>

namespace g2::cli {

std::string_view to_string(Command c) {
    switch (c) {
        case Command::Identities: return "identities";
        case Command::Classify: return "classify";
        case Command::Nilmanifold: return "nilmanifold";
        case Command::Tables: return "tables";
    }
    return "identities";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "text"; }

namespace {

Json header(const RunConfig& cfg) {
    return Json{{"command", to_string(cfg.command)}, {"frame", to_string(cfg.frame)}};
}

std::vector<NormConvention> conventions_for(ConventionMode mode) {
    switch (mode) {
        case ConventionMode::Form: return {NormConvention::Form};
        case ConventionMode::Tensor: return {NormConvention::Tensor};
        case ConventionMode::Auto: return {NormConvention::Form, NormConvention::Tensor};
    }
    return {};
}

Json names_json(const std::vector<NormConvention>& cs) {
    Json out = Json::array();
    for (auto c : cs) out.push_back(to_string(c));
    return out;
}

}  // namespace

// ---------------------------------------------------------------- identities

Report identities_report(const RunConfig& cfg) {
    if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
    SuiteOptions opts{cfg.seed, cfg.trials, cfg.frame, cfg.convention};
    const auto suites = run_identity_suites(opts);
    Report r;
    r.data = header(cfg);
    r.data["seed"] = cfg.seed;
    r.data["trials"] = cfg.trials;
    r.data["convention"] = to_string(cfg.convention);
    Json list = Json::array();
    long total = 0;
    for (const auto& s : suites) {
        Json j{{"name", s.name}, {"cases", s.cases}, {"pass", s.pass}, {"witness", s.witness}};
        if (!s.pass) j["counterexample"] = s.counterexample;
        if (!s.note.empty()) j["note"] = s.note;
        list.push_back(std::move(j));
        total += s.cases;
        r.pass = r.pass && s.pass;
    }
    r.data["suites"] = std::move(list);
    r.data["total_cases"] = total;
    r.data["pass"] = r.pass;
    return r;
}

// ---------------------------------------------------------------- classify

Report classify_report(const Mat7& t, const RunConfig& cfg) {
    const G2Frame& frame = frame_for(cfg.frame);
    Report r;
    r.data = header(cfg);
    r.data["input"] = to_json(t);

    const TorsionClass cls = classify(t, frame);
    r.data["decomposition"] = to_json(cls.split, frame);
    r.data["class"] = to_json(cls);
    const QuadraticRelationReport quad = verify_quadratic_relations(t, frame);
    r.data["invariants"] = to_json(quad.values);
    r.data["chi"] = to_json(chi(t, frame));
    const TorsionEnergy e = sym_alt_energy(t, frame);
    r.data["energy"] = Json{{"chi_sq", to_json(e.chi_sq)},
                            {"alt_sq", to_json(e.alt_sq)},
                            {"sym_sq", to_json(e.sym_sq)},
                            {"combination", to_json(e.combination())}};
    r.data["integrand"] = to_json(integrand_rhs(t, frame));
    try {
        r.data["scalar_prediction"] = to_json(pointwise_scalar_prediction(t, frame));
    } catch (const NonzeroVectorPart& ex) {
        r.data["scalar_prediction"] = nullptr;
        r.data["scalar_prediction_note"] =
            "not pointwise: vector part Z = " + ex.z().to_string() + " gives chi = -6 Z != 0";
    }
    if (cls.pure_x4()) {
        const X4FactorNote note = x4_factor_note(cls.split.vector, frame);
        r.data["pure_vector_factor"] = Json{{"integrand", to_json(note.integrand)},
                                            {"s_with_factor_1_6", to_json(note.s_consistent)},
                                            {"s_with_factor_1_3", to_json(note.s_stated)},
                                            {"discrepant", note.discrepant},
                                            {"note", note.message}};
    }
    const SpecialCaseReport special = special_case_check(t, frame);
    Json checks{{"quadratic_relations", quad.pass}, {"special_shape", to_string(special.shape)},
                {"special_shape_closed_forms", special.pass}};
    if (!quad.pass) checks["quadratic_violations"] = quad.violated;
    if (!special.pass) checks["special_violations"] = special.violated;
    r.data["checks"] = std::move(checks);
    r.pass = quad.pass && special.pass;
    r.data["pass"] = r.pass;
    return r;
}

Report classify_report(const RunConfig& cfg) {
    if (!cfg.input) throw UsageError("classify needs --input <matrix.json>");
    Mat7 t;
    try {
        t = read_matrix_file(*cfg.input);
    } catch (const JsonParseError& e) {
        throw UsageError(cfg.input->string() + ": " + e.what());
    } catch (const JsonSchemaError& e) {
        throw UsageError(cfg.input->string() + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    return classify_report(t, cfg);
}

// ---------------------------------------------------------------- nilmanifold

namespace {

Json connection_json(const ConnectionTable& conn) {
    Json out = Json::array();
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                const Rational& g = conn.gamma(k, i, j);
                if (!g.is_zero()) out.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"value", to_json(g)}});
            }
        }
    }
    return out;
}

Json form_json(const KForm& a) { return a.to_string(); }

}  // namespace

Report nilmanifold_report(const RunConfig& cfg) {
    const bool use_model = !cfg.input.has_value();
    MetricLieAlgebra mla;
    const G2Frame* frame = nullptr;
    std::optional<Mat7> printed_t;
    if (use_model) {
        HeisenbergModel model = heisenberg_model();
        mla = model.mla;
        frame = model.frame;
        printed_t = model.t;
    } else {
        try {
            mla = read_lie_algebra_file(*cfg.input);
        } catch (const JsonParseError& e) {
            throw UsageError(cfg.input->string() + ": " + e.what());
        } catch (const JsonSchemaError& e) {
            throw UsageError(cfg.input->string() + ": " + e.what());
        } catch (const std::runtime_error& e) {
            throw UsageError(e.what());
        }
        if (auto w = mla.jacobi_violation()) throw UsageError(JacobiError(*w).what());
        frame = &frame_for(cfg.frame);
    }

    Report r;
    r.data = Json{{"command", "nilmanifold"},
                  {"model", use_model ? "heisenberg" : "input"},
                  {"frame", frame->name()},
                  {"convention", to_string(cfg.convention)}};
    r.data["brackets"] = to_json(mla)["brackets"];
    bool pass = true;
    Json checks = Json::object();
    auto check = [&](const char* name, bool ok) {
        checks[name] = ok;
        pass = pass && ok;
    };

    const ConnectionTable conn = koszul(mla);
    check("connection_metric_and_torsion_free", conn.metric_compatible() && conn.torsion_free(mla));
    Json connection{{"nonzero", connection_json(conn)}};
    if (use_model) {
        Json diffs = Json::array();
        for (const auto& d : gamma_diff(conn, printed_heisenberg_gamma())) {
            diffs.push_back(Json{{"i", d.i}, {"j", d.j}, {"k", d.k}, {"printed", to_json(d.printed)},
                                 {"computed", to_json(d.computed)}});
        }
        connection["printed_table_differences"] = std::move(diffs);
    }
    r.data["connection"] = std::move(connection);

    const CurvatureTensor curv = curvature(conn, mla);
    const auto violations = curv.symmetry_violations();
    check("curvature_symmetries", violations.empty());
    const SectionalMultiset ms = sectional_multiset(curv);
    Json entries = Json::array();
    for (const auto& e : ms.entries) entries.push_back(Json{{"i", e.i}, {"j", e.j}, {"value", to_json(e.value)}});
    Json counts = Json::array();
    for (const auto& [v, n] : ms.counts) counts.push_back(Json{{"value", to_json(v)}, {"count", n}});
    Json sectional{{"entries", entries}, {"counts", counts}, {"sum", to_json(ms.sum)},
                   {"even_multiplicities", ms.even_multiplicities()}};
    if (use_model) {
        sectional["reference_claim"] = "two equal -1/4, three equal -3/4, seven equal 1/4";
        sectional["reference_claim_sum"] =
            to_json(Rational(2) * Rational(-1, 4) + Rational(3) * Rational(-3, 4) + Rational(7) * Rational(1, 4));
        sectional["reference_claim_possible"] = false;
        sectional["reference_claim_note"] =
            "R_ijji = R_jiij pairs the 12 ordered entries, so every multiplicity is even; only the sum is compared";
    }
    r.data["curvature"] = std::move(sectional);

    const Rational s = scalar_curvature(curv);
    const Rational sp = s_g2perp(curv, *frame);
    r.data["scalar_curvature"] = to_json(s);
    r.data["s_g2perp"] = to_json(sp);
    r.data["s_over_3"] = to_json(s / Rational(3));
    check("s_g2perp_is_s_over_3", Rational(3) * sp == s);
    if (use_model) check("scalar_curvature_is_minus_1", s == Rational(-1));

    const TFromGeometry tg = t_from_geometry(mla, *frame);
    const Mat7 t = printed_t.value_or(tg.t);
    Json tgeo{{"T", to_json(tg.t)}, {"derivation_exact", tg.derivation_exact}, {"round_trip", tg.round_trip}};
    if (printed_t) tgeo["matches_printed_T"] = tg.t == *printed_t;
    Json outcomes = Json::array();
    for (const auto c : conventions_for(cfg.convention)) {
        const RMapOutcome& o = tg.outcome(c);
        Json j{{"convention", to_string(c)}, {"r", to_json(o.r)}, {"r_over_3_reproduces_T", o.reproduces}};
        j["scale_r_over_3T"] = o.scale ? to_json(*o.scale) : Json(nullptr);
        outcomes.push_back(std::move(j));
    }
    tgeo["r_map"] = std::move(outcomes);
    tgeo["convention_failure"] = tg.convention_failure;
    tgeo["form_rescale"] = tg.form_rescale ? to_json(*tg.form_rescale) : Json(nullptr);
    tgeo["note"] = tg.note;
    r.data["T"] = to_json(t);
    r.data["T_from_geometry"] = std::move(tgeo);
    check("T_round_trip", tg.derivation_exact && tg.round_trip);
    if (printed_t) check("T_matches_printed", tg.t == *printed_t);

    const InvariantReport inv = compute_invariants(t, *frame);
    r.data["invariants"] = to_json(inv);
    const TorsionClass cls = classify(t, *frame);
    r.data["class"] = to_json(cls);

    const Rational integrand = integrand_rhs(t, *frame);
    const bool chi_zero = chi(t, *frame).is_zero();
    Json formula{{"integrand", to_json(integrand)}, {"s_over_6", to_json(s / Rational(6))}, {"chi_zero", chi_zero}};
    if (chi_zero) {
        formula["both_sides_equal"] = integrand == s / Rational(6);
        check("integrand_equals_s_over_6", integrand == s / Rational(6));
    } else {
        formula["note"] = "chi != 0: the pointwise comparison does not apply";
    }
    r.data["scalar_formula"] = std::move(formula);

    const DivergenceBalance db = divergence_balance(t, curv, *frame);
    r.data["divergence_balance"] = Json{{"half_s_alt", to_json(Rational(1, 2) * db.s_alt)},
                                        {"minus_half_s_g2perp", to_json(Rational(-1, 2) * db.s_g2perp)},
                                        {"chi_sq", to_json(db.chi_sq)},
                                        {"alt_sq", to_json(db.alt_sq)},
                                        {"minus_sym_sq", to_json(-db.sym_sq)},
                                        {"rhs", to_json(db.rhs)},
                                        {"implied_s", to_json(db.implied_s)}};
    check("divergence_balance", db.pass);

    const BryantReport br = bryant_scalar_check(mla, *frame);
    const TorsionForms& tf = br.forms;
    r.data["torsion_forms"] = Json{{"tau0", to_json(tf.tau0)},
                                   {"tau1", form_json(tf.tau1)},
                                   {"tau2", form_json(tf.tau2)},
                                   {"tau3", form_json(tf.tau3)},
                                   {"residual_zero", tf.exact()}};
    check("torsion_form_residuals_zero", tf.exact());
    check("torsion_form_classes_match", tf.class_flags() == cls.flags);
    Json bryant = Json::array();
    for (const auto c : conventions_for(cfg.convention)) {
        const BryantTerms& b = br.at(c);
        bryant.push_back(Json{{"convention", to_string(c)},
                              {"delta_tau1", to_json(b.delta_tau1)},
                              {"tau0_sq", to_json(b.tau0_sq)},
                              {"tau1_sq", to_json(b.tau1_sq)},
                              {"tau2_sq", to_json(b.tau2_sq)},
                              {"tau3_sq", to_json(b.tau3_sq)},
                              {"rhs", to_json(b.rhs)},
                              {"equals_s", b.equal}});
    }
    Json bryant_json{{"terms", bryant}};
    if (cfg.convention == ConventionMode::Auto) {
        const auto rec = br.reconciling();
        bryant_json["reconciling"] = names_json(rec);
        check("bryant_exactly_one_convention", rec.size() == 1);
    }
    r.data["bryant"] = std::move(bryant_json);

    r.data["checks"] = std::move(checks);
    r.pass = pass;
    r.data["pass"] = pass;
    return r;
}

// ---------------------------------------------------------------- tables

Report tables_report(const RunConfig& cfg) {
    const G2Frame& frame = frame_for(cfg.frame);
    const int off = frame.label_offset();
    Report r;
    r.data = header(cfg);
    r.data["label_offset"] = off;
    r.data["orientation"] = frame.orientation();
    Json triples = Json::array();
    for (const auto& t : frame.table().triples()) {
        triples.push_back(Json{{"i", t.i + off}, {"j", t.j + off}, {"k", t.k + off}, {"sign", t.sign > 0 ? "+" : "-"}});
    }
    r.data["triples"] = std::move(triples);
    r.data["ordered_nonzero_entries"] = frame.table().nonzero_count();
    r.data["phi"] = frame.phi().to_string(off);
    std::vector<std::pair<std::vector<int>, int>> rows;
    for (const auto& [mask, c] : frame.star_phi().terms()) rows.emplace_back(mask_indices(mask), c.sign());
    std::sort(rows.begin(), rows.end());
    Json quads = Json::array();
    for (const auto& [indices, sign] : rows) {
        Json idx = Json::array();
        for (int i : indices) idx.push_back(i + off);
        quads.push_back(Json{{"indices", idx}, {"sign", sign > 0 ? "+" : "-"}});
    }
    r.data["star_phi"] = std::move(quads);
    return r;
}

// ---------------------------------------------------------------- rendering

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool is_flat_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
}

std::string flat_text(const Json& j) {
    if (is_scalar(j)) return scalar_text(j);
    std::string out = "[";
    bool first = true;
    for (const auto& x : j) {
        if (!first) out += ", ";
        out += scalar_text(x);
        first = false;
    }
    return out + "]";
}

bool is_matrix(const Json& j) {
    return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [&](const Json& row) {
               return is_flat_array(row) && !row.empty() && row.size() == j.front().size();
           });
}

bool is_record_table(const Json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_object()) return false;
    const Json& first = j.front();
    return std::all_of(j.begin(), j.end(), [&](const Json& row) {
        if (!row.is_object() || row.size() != first.size()) return false;
        auto a = row.begin();
        auto b = first.begin();
        for (; a != row.end(); ++a, ++b) {
            if (a.key() != b.key() || !(is_scalar(*a) || is_flat_array(*a))) return false;
        }
        return true;
    });
}

void pad_to(std::string& s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
}

void emit_grid(const std::vector<std::vector<std::string>>& rows, const std::string& indent, bool right,
               std::ostringstream& out) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line = indent;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) line += "  ";
            std::string cell = row[c];
            if (right) {
                line.append(width[c] - cell.size(), ' ');
                line += cell;
            } else {
                if (c + 1 < row.size()) pad_to(cell, width[c]);
                line += cell;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
}

void emit(const Json& j, const std::string& indent, std::ostringstream& out);

void emit_object(const Json& j, const std::string& indent, std::ostringstream& out) {
    std::size_t w = 0;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (is_scalar(*it) || is_flat_array(*it)) w = std::max(w, it.key().size());
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = it.key();
        if (is_scalar(*it) || is_flat_array(*it)) {
            pad_to(key, w);
            out << indent << key << "  " << flat_text(*it) << '\n';
        } else {
            out << indent << key << ":\n";
            emit(*it, indent + "  ", out);
        }
    }
}

void emit(const Json& j, const std::string& indent, std::ostringstream& out) {
    if (j.is_object()) {
        emit_object(j, indent, out);
    } else if (is_matrix(j)) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : j) {
            std::vector<std::string> cells;
            for (const auto& x : row) cells.push_back(scalar_text(x));
            rows.push_back(std::move(cells));
        }
        emit_grid(rows, indent, true, out);
    } else if (is_record_table(j)) {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head;
        for (auto it = j.front().begin(); it != j.front().end(); ++it) head.push_back(it.key());
        rows.push_back(std::move(head));
        for (const auto& row : j) {
            std::vector<std::string> cells;
            for (const auto& x : row) cells.push_back(flat_text(x));
            rows.push_back(std::move(cells));
        }
        emit_grid(rows, indent, false, out);
    } else if (j.is_array()) {
        if (j.empty()) {
            out << indent << "(none)\n";
            return;
        }
        for (const auto& x : j) {
            if (is_scalar(x) || is_flat_array(x)) {
                out << indent << "- " << flat_text(x) << '\n';
            } else {
                out << indent << "-\n";
                emit(x, indent + "  ", out);
            }
        }
    } else {
        out << indent << scalar_text(j) << '\n';
    }
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream out;
    emit(r.data, "", out);
    return out.str();
}

std::string render(const Report& r, OutputFormat format) {
    if (format == OutputFormat::Json) return r.data.dump(2) + "\n";
    return render_text(r);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
        Report r;
        switch (cfg.command) {
            case Command::Identities: r = identities_report(cfg); break;
            case Command::Classify: r = classify_report(cfg); break;
            case Command::Nilmanifold: r = nilmanifold_report(cfg); break;
            case Command::Tables: r = tables_report(cfg); break;
        }
        out << render(r, cfg.format);
        return r.pass ? kExitOk : kExitCheckFailed;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace g2::cli

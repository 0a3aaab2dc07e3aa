#include "g2/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace g2 {

JsonParseError::JsonParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is the 1-based offset of the offending character.
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t n = 0; n < stop; ++n) {
            if (text[n] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string msg = e.what();
        if (const auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
        throw JsonParseError(msg, line, column);
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw JsonSchemaError("not a rational: \"" + j.get<std::string>() + "\"");
        }
    }
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<std::uint64_t>()));
        return Rational(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_number_float()) {
        const double d = j.get<double>();
        if (!std::isfinite(d)) throw JsonSchemaError("non-finite number");
        // dump() gives the shortest round-tripping decimal.
        return Rational::parse(j.dump());
    }
    throw JsonSchemaError("expected a rational (string or number), got " + std::string(j.type_name()));
}

Json to_json(const Vec7& v) {
    Json out = Json::array();
    for (int i = 0; i < kDim; ++i) out.push_back(to_json(v[i]));
    return out;
}

Vec7 vec_from_json(const Json& j) {
    if (!j.is_array() || j.size() != kDim) throw JsonSchemaError("expected an array of 7 rationals");
    Vec7 v;
    for (int i = 0; i < kDim; ++i) v[i] = rational_from_json(j[static_cast<std::size_t>(i)]);
    return v;
}

Json to_json(const Mat7& m) {
    Json out = Json::array();
    for (int i = 0; i < kDim; ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Mat7 mat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != kDim) throw JsonSchemaError("expected 7 rows");
    Mat7 m;
    for (int i = 0; i < kDim; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != kDim) {
            throw JsonSchemaError("row " + std::to_string(i) + " must hold 7 entries");
        }
        for (int k = 0; k < kDim; ++k) {
            try {
                m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
            } catch (const JsonSchemaError& e) {
                throw JsonSchemaError("entry (" + std::to_string(i) + ", " + std::to_string(k) + "): " + e.what());
            }
        }
    }
    return m;
}

Json to_json(const KForm& a) {
    Json terms = Json::array();
    for (const auto& [mask, c] : a.terms()) {
        terms.push_back(Json{{"indices", mask_indices(mask)}, {"coeff", to_json(c)}});
    }
    return Json{{"degree", a.degree()}, {"terms", terms}};
}

KForm kform_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer()) {
        throw JsonSchemaError("form needs an integer \"degree\"");
    }
    const int degree = j["degree"].get<int>();
    if (degree < 0 || degree > kDim) throw JsonSchemaError("form degree outside 0..7");
    KForm out(degree);
    if (!j.contains("terms")) return out;
    if (!j["terms"].is_array()) throw JsonSchemaError("\"terms\" must be an array");
    for (const Json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("indices") || !t["indices"].is_array()) {
            throw JsonSchemaError("term needs an \"indices\" array");
        }
        std::vector<int> idx;
        for (const Json& i : t["indices"]) {
            if (!i.is_number_integer() || i.get<int>() < 0 || i.get<int>() >= kDim) {
                throw JsonSchemaError("form index outside 0..6");
            }
            idx.push_back(i.get<int>());
        }
        if (static_cast<int>(idx.size()) != degree) throw JsonSchemaError("term length does not match degree");
        out += KForm::monomial(idx, rational_from_json(t.value("coeff", Json("1"))));
    }
    return out;
}

Json to_json(const MetricLieAlgebra& mla) {
    Json brackets = Json::array();
    for (const auto& b : mla.brackets()) {
        Json coeffs = Json::object();
        for (int k = 0; k < kDim; ++k) {
            if (!b.value[k].is_zero()) coeffs[std::to_string(k)] = to_json(b.value[k]);
        }
        brackets.push_back(Json{{"i", b.i}, {"j", b.j}, {"coeffs", coeffs}});
    }
    return Json{{"dim", kDim}, {"brackets", brackets}};
}

MetricLieAlgebra lie_algebra_from_json(const Json& j) {
    if (!j.is_object()) throw JsonSchemaError("Lie algebra must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() != kDim) {
        throw JsonSchemaError("\"dim\" must be 7");
    }
    std::vector<BracketEntry> entries;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw JsonSchemaError("\"brackets\" must be an array");
        for (const Json& b : j["brackets"]) {
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b["i"].is_number_integer() ||
                !b["j"].is_number_integer()) {
                throw JsonSchemaError("bracket needs integer \"i\" and \"j\"");
            }
            BracketEntry e{b["i"].get<int>(), b["j"].get<int>(), {}};
            if (b.contains("coeffs")) {
                if (!b["coeffs"].is_object()) throw JsonSchemaError("\"coeffs\" must be an object");
                for (const auto& [key, val] : b["coeffs"].items()) {
                    int k = -1;
                    try {
                        std::size_t used = 0;
                        k = std::stoi(key, &used);
                        if (used != key.size()) k = -1;
                    } catch (const std::exception&) {
                        k = -1;
                    }
                    if (k < 0 || k >= kDim) throw JsonSchemaError("coefficient key \"" + key + "\" is not 0..6");
                    e.value[k] = rational_from_json(val);
                }
            }
            entries.push_back(std::move(e));
        }
    }
    try {
        return MetricLieAlgebra::from_brackets(entries);
    } catch (const std::invalid_argument& e) {
        throw JsonSchemaError(e.what());
    }
}

Mat7 read_matrix_file(const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    if (j.is_object()) {
        if (!j.contains("matrix")) throw JsonSchemaError("object input needs a \"matrix\" field");
        return mat_from_json(j["matrix"]);
    }
    return mat_from_json(j);
}

MetricLieAlgebra read_lie_algebra_file(const std::filesystem::path& path) {
    return lie_algebra_from_json(read_json_file(path));
}

Json to_json(const EndoSplit& s, const G2Frame& frame) {
    const auto norms = s.part_norms_sq(frame);
    return Json{
        {"scalar", to_json(s.scalar)},
        {"sym0", to_json(s.sym0)},
        {"g2", to_json(s.g2part.mat())},
        {"vector", to_json(s.vector)},
        {"norms_sq",
         Json{{"scalar", to_json(norms[0])}, {"sym0", to_json(norms[1])}, {"g2", to_json(norms[2])},
              {"vector", to_json(norms[3])}}},
    };
}

Json to_json(const InvariantReport& r) {
    Json poly = Json::array();
    for (const auto& c : r.charpoly) poly.push_back(to_json(c));
    return Json{
        {"sigma1", to_json(r.sigma1)}, {"sigma2", to_json(r.sigma2)}, {"norm_sq", to_json(r.norm_sq)},
        {"i0", to_json(r.i0)},         {"i1", to_json(r.i1)},         {"i2", to_json(r.i2)},
        {"charpoly", poly},            {"charpoly_text", format_charpoly(r.charpoly)},
    };
}

Json to_json(const TorsionClass& c) {
    Json flags = Json::array();
    for (std::size_t k = 0; k < c.flags.size(); ++k) {
        if (c.flags[k]) flags.push_back("X" + std::to_string(k + 1));
    }
    Json norms = Json::array();
    for (const auto& n : c.part_norms_sq) norms.push_back(to_json(n));
    return Json{{"flags", flags}, {"label", c.label()}, {"part_norms_sq", norms}};
}

}  // namespace g2

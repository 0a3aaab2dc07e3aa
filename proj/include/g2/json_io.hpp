#pragma once

#include "g2/frame.hpp"
#include "g2/g2alg.hpp"
#include "g2/homspace.hpp"
#include "g2/invariants.hpp"
#include "g2/kform.hpp"
#include "g2/linear7.hpp"
#include "g2/rational.hpp"
#include "g2/torsion.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace g2 {

using Json = nlohmann::ordered_json;

/// Malformed JSON text; carries the 1-based position of the failure.
class JsonParseError : public std::runtime_error {
public:
    JsonParseError(const std::string& what, std::size_t line, std::size_t column);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed JSON that does not match the expected schema.
class JsonSchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json parse_json_text(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

/// Rationals are written as "p/q" or "p". Reading also accepts JSON numbers;
/// floating values are converted exactly from their shortest decimal form.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Vec7& v);
Vec7 vec_from_json(const Json& j);

/// Row-major array of 7 rows.
Json to_json(const Mat7& m);
Mat7 mat_from_json(const Json& j);

/// {"degree": k, "terms": [{"indices": [...], "coeff": "p/q"}]}
Json to_json(const KForm& a);
KForm kform_from_json(const Json& j);

/// {"dim": 7, "brackets": [{"i": 0, "j": 5, "coeffs": {"6": "1"}}]}
Json to_json(const MetricLieAlgebra& mla);
MetricLieAlgebra lie_algebra_from_json(const Json& j);

/// A matrix file holds either a bare row-major array or {"matrix": [...]}.
Mat7 read_matrix_file(const std::filesystem::path& path);
MetricLieAlgebra read_lie_algebra_file(const std::filesystem::path& path);

Json to_json(const EndoSplit& s, const G2Frame& frame);
Json to_json(const InvariantReport& r);
Json to_json(const TorsionClass& c);

}  // namespace g2

#pragma once

#include "g2/frame.hpp"
#include "g2/json_io.hpp"
#include "g2/suites.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace g2::cli {

enum class Command { Identities, Classify, Nilmanifold, Tables };
enum class OutputFormat { Json, Text };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::Identities;
    std::uint64_t seed = 1;
    int trials = 1000;
    FrameKind frame = FrameKind::Standard;
    ConventionMode convention = ConventionMode::Auto;
    std::optional<std::filesystem::path> input;
    OutputFormat format = OutputFormat::Json;
};

/// Invalid configuration or unreadable input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    Json data;
    bool pass = true;
};

Report identities_report(const RunConfig& cfg);
/// Throws UsageError when no input is given or it cannot be parsed.
Report classify_report(const RunConfig& cfg);
Report classify_report(const Mat7& t, const RunConfig& cfg);
Report nilmanifold_report(const RunConfig& cfg);
Report tables_report(const RunConfig& cfg);

std::string render_text(const Report& r);
std::string render(const Report& r, OutputFormat format);

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 when a check fails, 2 on usage or parse errors.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace g2::cli

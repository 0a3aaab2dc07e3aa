#include "g2/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

void add_common(CLI::App* sub, g2::cli::RunConfig& cfg, std::string& frame, std::string& convention,
                std::string& format) {
    sub->add_option("--seed", cfg.seed, "Seed for the randomized suites")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "Number of random cases per suite")->capture_default_str();
    sub->add_option("--frame", frame, "Epsilon table")->check(CLI::IsMember({"standard", "cayley"}))->capture_default_str();
    sub->add_option("--convention", convention, "Form norm convention")
        ->check(CLI::IsMember({"form", "tensor", "auto"}))
        ->capture_default_str();
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--input", cfg.input, "Input JSON file");
}

}  // namespace

int main(int argc, char** argv) {
    using g2::cli::Command;
    CLI::App app{"Exact G2-structure identity checks and reports"};
    app.require_subcommand(1);

    g2::cli::RunConfig cfg;
    std::string frame = "standard";
    std::string convention = "auto";
    std::string format = "json";

    const std::map<std::string, std::pair<Command, const char*>> commands{
        {"identities", {Command::Identities, "Run the exhaustive and seeded identity suites"}},
        {"classify", {Command::Classify, "Decompose and classify a 7x7 matrix read from --input"}},
        {"nilmanifold", {Command::Nilmanifold, "Full report for the Heisenberg nilmanifold or an --input algebra"}},
        {"tables", {Command::Tables, "Print the epsilon table and the *phi quadruples"}},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, spec] : commands) {
        CLI::App* sub = app.add_subcommand(name, spec.second);
        add_common(sub, cfg, frame, convention, format);
        subs[name] = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? g2::cli::kExitOk : g2::cli::kExitUsage;
    }

    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) cfg.command = commands.at(name).first;
    }
    cfg.frame = g2::parse_frame_kind(frame);
    cfg.convention = g2::parse_convention_mode(convention);
    cfg.format = format == "text" ? g2::cli::OutputFormat::Text : g2::cli::OutputFormat::Json;
    return g2::cli::run(cfg, std::cout, std::cerr);
}

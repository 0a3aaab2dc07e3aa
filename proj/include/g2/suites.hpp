#pragma once

#include "g2/frame.hpp"
#include "g2/kform.hpp"
#include "g2/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g2 {

/// Norm-convention handling for convention-sensitive checks: a fixed
/// convention, or Auto to evaluate both and report which one reconciles.
enum class ConventionMode { Form, Tensor, Auto };

std::string_view to_string(ConventionMode m);
/// Accepts "form", "tensor" or "auto"; throws std::invalid_argument otherwise.
ConventionMode parse_convention_mode(std::string_view text);

/// Result of one identity suite. Every suite records a sample witness from
/// its first case, so runs with different seeds log different witnesses.
struct SuiteResult {
    std::string name;
    long cases = 0;
    bool pass = true;
    std::string counterexample;  // first failing case, empty on pass
    std::string witness;
    std::string note;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = 1000;
    FrameKind frame = FrameKind::Standard;
    ConventionMode convention = ConventionMode::Auto;
};

SuiteResult suite_epsilon_identities(const G2Frame& frame);
SuiteResult suite_cross_axioms(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_star_phi_pairing(const G2Frame& frame);
SuiteResult suite_p_kernel(const G2Frame& frame);
SuiteResult suite_so7_split(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_bracket_projection(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_endo_decomposition(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_quadratic_relations(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_special_cases(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_characteristic_vector(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_torsion_energy(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_alternating_curvature(const G2Frame& frame, std::uint64_t seed, int trials);
SuiteResult suite_hypersurface_chain(const G2Frame& frame, std::uint64_t seed, int trials);
/// Koszul connection, curvature symmetries and s_g2perp = s/3 on `count`
/// random 2-step nilpotent algebras.
SuiteResult suite_nilpotent_curvature(const G2Frame& frame, std::uint64_t seed, int count);
/// d^2 = 0, adjointness of the codifferential, torsion-form residuals,
/// T round trip and Bryant's formula on `count` random 2-step nilpotent algebras.
SuiteResult suite_nilpotent_forms(const G2Frame& frame, std::uint64_t seed, int count, ConventionMode mode);
/// Friedrich-Ivanov relations for d phi = -8 lambda0 *phi at sampled lambda0.
SuiteResult suite_nearly_parallel(const G2Frame& frame, std::uint64_t seed, int trials, ConventionMode mode);

/// All suites for the chosen frame; the nilpotent suites use ceil(trials/10) algebras.
std::vector<SuiteResult> run_identity_suites(const SuiteOptions& opts);

/// Random k-form with a few nonzero coefficients, for property checks.
KForm sample_form(Sampler& s, int degree);

}  // namespace g2

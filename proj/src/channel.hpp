#pragma once

#include <array>
#include <string_view>

#include "errors.hpp"

namespace catnoise {

inline constexpr double kProbabilityTolerance = 1e-12;

// Single-qubit Pauli channel: identity with probability pi0 and
// sigma_x, sigma_y, sigma_z errors with probabilities pi1, pi2, pi3.
struct PauliChannel {
    double pi0 = 1.0;
    double pi1 = 0.0;
    double pi2 = 0.0;
    double pi3 = 0.0;

    std::array<double, 4> probabilities() const { return {pi0, pi1, pi2, pi3}; }
};

// The four combinations the physics actually depends on:
//   a = pi0 + pi3,  b = pi1 + pi2,  c = pi0 - pi3,  d = pi1 - pi2
// a + b = 1, |c| <= a, |d| <= b for any valid channel.
struct DerivedParams {
    double a = 1.0;
    double b = 0.0;
    double c = 1.0;
    double d = 0.0;
};

// Validates probabilities against the channel invariants. Inputs off by at
// most kProbabilityTolerance are renormalized; anything worse is rejected.
// Throws Error{NegativeProbability} or Error{NotNormalized}.
PauliChannel validate_channel(double p0, double p1, double p2, double p3);

DerivedParams derive_params(const PauliChannel& ch);

// Inverse of derive_params; used for round-trip checks.
PauliChannel channel_from_params(const DerivedParams& p);

// "depolarizing": pi0 = strength, pi1 = pi2 = pi3 = (1 - strength)/3
// "dephasing":   pi0 = strength, pi1 = pi2 = 0, pi3 = 1 - strength
PauliChannel preset(std::string_view name, double strength);

} // namespace catnoise

#include "channel.hpp"

#include <cmath>
#include <sstream>

namespace catnoise {

PauliChannel validate_channel(double p0, double p1, double p2, double p3) {
    const double ps[4] = {p0, p1, p2, p3};
    for (int i = 0; i < 4; ++i) {
        if (!(ps[i] >= -kProbabilityTolerance)) { // also rejects NaN
            std::ostringstream msg;
            msg << "pi" << i << " = " << ps[i] << " is negative";
            throw Error(ErrorCode::NegativeProbability, msg.str());
        }
    }
    double sum = p0 + p1 + p2 + p3;
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
        std::ostringstream msg;
        msg << "probabilities sum to " << sum << ", expected 1";
        throw Error(ErrorCode::NotNormalized, msg.str());
    }
    PauliChannel ch{p0 / sum, p1 / sum, p2 / sum, p3 / sum};
    // clamp tolerance-level negatives introduced by grid generation
    if (ch.pi0 < 0) ch.pi0 = 0;
    if (ch.pi1 < 0) ch.pi1 = 0;
    if (ch.pi2 < 0) ch.pi2 = 0;
    if (ch.pi3 < 0) ch.pi3 = 0;
    return ch;
}

DerivedParams derive_params(const PauliChannel& ch) {
    return {ch.pi0 + ch.pi3, ch.pi1 + ch.pi2, ch.pi0 - ch.pi3, ch.pi1 - ch.pi2};
}

PauliChannel channel_from_params(const DerivedParams& p) {
    return {(p.a + p.c) / 2, (p.b + p.d) / 2, (p.b - p.d) / 2, (p.a - p.c) / 2};
}

PauliChannel preset(std::string_view name, double strength) {
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "preset strength must lie in [0, 1]");
    }
    if (name == "depolarizing") {
        double q = (1.0 - strength) / 3.0;
        return validate_channel(strength, q, q, q);
    }
    if (name == "dephasing") {
        return validate_channel(strength, 0.0, 0.0, 1.0 - strength);
    }
    throw Error(ErrorCode::UnknownPreset, "unknown preset: " + std::string(name));
}

} // namespace catnoise

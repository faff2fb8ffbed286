#pragma once

#include <cmath>
#include <limits>

namespace catnoise {

// Signed magnitude in the log domain. Represents sign * exp(log_magnitude),
// with sign == 0 meaning exact zero (log_magnitude == -inf). Powers like
// c^N underflow binary64 near N ~ 700; everything that must scale to
// N = 10^6 goes through this type.
struct LogValue {
    int sign = 0;
    double log_magnitude = -std::numeric_limits<double>::infinity();

    static LogValue zero() { return {}; }

    static LogValue from_real(double x) {
        if (x == 0.0) return zero();
        return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
    }

    // (sign * exp(log_magnitude))^n for integer n >= 0
    LogValue pow(long long n) const {
        if (n == 0) return {1, 0.0};
        if (sign == 0) return zero();
        int s = (sign < 0 && (n & 1)) ? -1 : 1;
        return {s, log_magnitude * static_cast<double>(n)};
    }

    LogValue abs() const { return {sign == 0 ? 0 : 1, log_magnitude}; }

    double to_real() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_magnitude);
    }

    friend LogValue operator*(const LogValue& x, const LogValue& y) {
        if (x.sign == 0 || y.sign == 0) return zero();
        return {x.sign * y.sign, x.log_magnitude + y.log_magnitude};
    }

    // Signed addition with cancellation-safe handling of opposite signs.
    friend LogValue operator+(const LogValue& x, const LogValue& y) {
        if (x.sign == 0) return y;
        if (y.sign == 0) return x;
        const LogValue& big = (x.log_magnitude >= y.log_magnitude) ? x : y;
        const LogValue& small = (x.log_magnitude >= y.log_magnitude) ? y : x;
        double r = small.log_magnitude - big.log_magnitude; // <= 0
        if (x.sign == y.sign) {
            return {x.sign, big.log_magnitude + std::log1p(std::exp(r))};
        }
        if (r == 0.0) return zero();
        // log(1 - e^r) via expm1 keeps relative accuracy near cancellation
        return {big.sign, big.log_magnitude + std::log(-std::expm1(r))};
    }
};

// Compare magnitudes: log|x| - log|y| with zero handled as -inf.
inline double log_margin(const LogValue& x, const LogValue& y) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (x.sign == 0 && y.sign == 0) return 0.0;
    if (x.sign == 0) return -inf;
    if (y.sign == 0) return inf;
    return x.log_magnitude - y.log_magnitude;
}

} // namespace catnoise

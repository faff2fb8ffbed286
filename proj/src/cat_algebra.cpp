#include "cat_algebra.hpp"

#include <cmath>

namespace catnoise {

LogValue delta_log(const DerivedParams& p, std::int64_t n) {
    if (n < 2) throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
    LogValue cn = LogValue::from_real(p.c).pow(n);
    LogValue dn = LogValue::from_real(p.d).pow(n);
    return (cn + dn).abs();
}

double delta(const DerivedParams& p, std::int64_t n) {
    LogValue v = delta_log(p, n);
    return v.sign == 0 ? 0.0 : std::exp(v.log_magnitude);
}

LogValue two_lambda_log(const DerivedParams& p, const CutSpec& cut) {
    LogValue a = LogValue::from_real(p.a);
    LogValue b = LogValue::from_real(p.b);
    std::int64_t k = cut.k, m = cut.n_qubits - cut.k;
    return a.pow(k) * b.pow(m) + b.pow(k) * a.pow(m);
}

double two_lambda(const DerivedParams& p, const CutSpec& cut) {
    LogValue v = two_lambda_log(p, cut);
    return v.sign == 0 ? 0.0 : std::exp(v.log_magnitude);
}

CatCoefficients cat_populations(const DerivedParams& p, std::int64_t n, std::int64_t k) {
    if (n < 2) throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
    if (k < 0 || k > n / 2) throw Error(ErrorCode::OutOfRange, "group index k must lie in [0, N/2]");

    auto powl = [](double x, std::int64_t e) { return LogValue::from_real(x).pow(e); };

    LogValue an = powl(p.a, n), bn = powl(p.b, n);
    LogValue cn = powl(p.c, n), dn = powl(p.d, n);
    double pop0 = (an + bn).to_real();
    double coh0 = (cn + dn).to_real();

    CatCoefficients out{};
    out.delta = std::abs(coh0);
    out.alpha0_plus = (pop0 + coh0) / 2;
    out.alpha0_minus = (pop0 - coh0) / 2;

    if (k >= 1) {
        std::int64_t m = n - k;
        double pop = (powl(p.a, k) * powl(p.b, m) + powl(p.b, k) * powl(p.a, m)).to_real();
        double coh = (powl(p.c, k) * powl(p.d, m) + powl(p.d, k) * powl(p.c, m)).to_real();
        out.two_lambda = pop;
        out.alpha_k_plus = (pop + coh) / 2;
        out.alpha_k_minus = (pop - coh) / 2;
    }
    return out;
}

std::uint64_t count_k_group(std::int64_t n, std::int64_t k) {
    if (n < 2 || k < 1 || k > n / 2) {
        throw Error(ErrorCode::OutOfRange, "group index k must lie in [1, N/2]");
    }
    std::uint64_t binom = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (binom > UINT64_MAX / num) {
            throw Error(ErrorCode::OutOfRange, "binomial coefficient overflows 64 bits");
        }
        binom = binom * num / static_cast<std::uint64_t>(i);
    }
    bool half_group = (n % 2 == 0) && (k == n / 2);
    if (!half_group && binom > UINT64_MAX / 2) {
        throw Error(ErrorCode::OutOfRange, "group size overflows 64 bits");
    }
    return half_group ? binom : 2 * binom;
}

} // namespace catnoise

#include "criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace catnoise {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEqEps = 1e-15;

bool nearly_equal(double x, double y) { return std::abs(x - y) <= kEqEps; }

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::No: return "no";
        case Verdict::Yes: return "yes";
        case Verdict::Boundary: return "boundary";
    }
    return "?";
}

const char* to_string(ParityClass c) {
    return c == ParityClass::SameSign ? "same-sign" : "opposite-sign";
}

const char* to_string(AsymptoticRegime r) {
    switch (r) {
        case AsymptoticRegime::EntangledAboveF: return "entangled-for-alpha-above-f";
        case AsymptoticRegime::NeverEntangled: return "never-entangled";
        case AsymptoticRegime::Degenerate: return "degenerate";
    }
    return "?";
}

CutVerdict cut_verdict(const DerivedParams& p, const CutSpec& cut) {
    LogValue dl = delta_log(p, cut.n_qubits);
    LogValue ll = two_lambda_log(p, cut);
    double margin = log_margin(dl, ll);

    Verdict v;
    if (nearly_equal(p.a, p.b)) {
        // Delta <= a^N + b^N = 2 lambda for every cut when a = b; the strict
        // inequality can never hold, independent of the computed margin.
        v = Verdict::No;
        if (margin > 0.0) margin = 0.0;
    } else if (margin > kMarginEpsilon) {
        v = Verdict::Yes;
    } else if (margin < -kMarginEpsilon) {
        v = Verdict::No;
    } else {
        v = Verdict::Boundary;
    }

    double delta_lin = dl.sign == 0 ? 0.0 : std::exp(dl.log_magnitude);
    double lambda_lin = ll.sign == 0 ? 0.0 : std::exp(ll.log_magnitude);
    return {cut, delta_lin, lambda_lin, margin, v};
}

std::optional<std::int64_t> min_entangled_k(const DerivedParams& p, std::int64_t n) {
    if (n < 2) throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
    if (nearly_equal(p.a, p.b)) return std::nullopt;

    auto margin_at = [&](std::int64_t k) { return cut_verdict(p, CutSpec(n, k)).log_margin; };

    std::int64_t k_max = n / 2;
    if (!(margin_at(k_max) > kMarginEpsilon)) return std::nullopt;

    // log 2lambda is strictly decreasing in k (Lemma-1 monotonicity), so the
    // margin is monotone increasing and the yes-region is a suffix in k.
    std::int64_t lo = 1, hi = k_max;
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (margin_at(mid) > kMarginEpsilon) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

PartitionReport max_distillable_m(const DerivedParams& p, std::int64_t n) {
    PartitionReport rep;
    rep.n_qubits = n;
    rep.parity_class = parity_probe(p, n).parity_class;
    rep.min_entangled_k = min_entangled_k(p, n);
    if (rep.min_entangled_k) {
        std::int64_t k = *rep.min_entangled_k;
        rep.max_m = 1 + (n - k) / k; // equals N/k when k divides N
    } else {
        rep.fully_separable_flag = true;
    }
    return rep;
}

bool asymptotic_entangled(const DerivedParams& p, double alpha) {
    if (alpha == 0.5) return p.c * p.c > p.a * p.b;
    double big = std::max(p.a, p.b);
    double small = std::min(p.a, p.b);
    double cc = std::abs(p.c);
    if (cc == 0.0) return false;
    if (small == 0.0) return true; // threshold b^alpha a^(1-alpha) = 0
    return std::log(cc) > alpha * std::log(small) + (1.0 - alpha) * std::log(big);
}

AsymptoticReport asymptotic_report(const DerivedParams& p) {
    AsymptoticReport rep{};
    rep.robust_pair_ok = p.c * p.c > p.a * p.b;

    double big = std::max(p.a, p.b);
    double small = std::min(p.a, p.b);
    double cc = std::max(std::abs(p.c), 0.0);
    double dd = std::abs(p.d);
    double cbig = std::max(cc, dd);
    double csmall = std::min(cc, dd);

    if (csmall > 0.0 && !nearly_equal(big, small)) {
        rep.finite_equals_asymptotic_alpha =
            0.5 * (1.0 - std::log(cbig / csmall) / std::log(big / small));
    }

    if (nearly_equal(p.a, p.b)) {
        rep.f_threshold = kInf;
        rep.regime = AsymptoticRegime::NeverEntangled;
        return rep;
    }
    if (cc == 0.0) {
        rep.f_threshold = kInf;
        rep.regime = AsymptoticRegime::Degenerate;
        return rep;
    }
    if (small == 0.0) {
        rep.f_threshold = 0.0; // log(a/b) = +inf swallows the numerator
    } else {
        rep.f_threshold = std::log(big / cc) / std::log(big / small);
    }
    rep.regime = AsymptoticRegime::EntangledAboveF;
    return rep;
}

FiniteNCondition finite_n_condition(const DerivedParams& p, const CutSpec& cut) {
    FiniteNCondition out{};
    double big = std::max(p.a, p.b);
    double small = std::min(p.a, p.b);
    double cbig = std::max(std::abs(p.c), std::abs(p.d));
    double csmall = std::min(std::abs(p.c), std::abs(p.d));

    if (cbig == 0.0 || nearly_equal(big, small)) {
        out.degenerate = true;
        out.mu = std::numeric_limits<double>::quiet_NaN();
        out.verdict = cut_verdict(p, cut).verdict;
        out.mu_nonneg = false;
        return out;
    }

    double n = static_cast<double>(cut.n_qubits);
    double alpha = cut.alpha();
    bool opposite = (p.c * p.d < 0.0) && (cut.n_qubits % 2 != 0);

    // t1 = log(1 + (b/a)^((1-2alpha)N)); exponent 0 must not meet log(0) = -inf
    double t1;
    double exp1 = (1.0 - 2.0 * alpha) * n;
    if (exp1 == 0.0) {
        t1 = std::log(2.0);
    } else if (small == 0.0) {
        t1 = 0.0;
    } else {
        t1 = std::log1p(std::exp(exp1 * std::log(small / big)));
    }

    // t2 = log(1 +/- (|d|/|c|)^N)
    double r = (csmall == 0.0) ? 0.0 : std::exp(n * std::log(csmall / cbig));
    double t2 = opposite ? std::log1p(-r) : std::log1p(r);

    out.mu = t1 - t2;

    // mu >= 0 iff alpha >= (1/2)(1 - log|c/d| / log(a/b)) in the same-sign case
    if (!opposite && csmall > 0.0) {
        double alpha_star = 0.5 * (1.0 - std::log(cbig / csmall) / std::log(big / small));
        out.mu_nonneg = alpha >= alpha_star;
    } else {
        out.mu_nonneg = out.mu >= 0.0;
    }

    // log|c| > alpha log b + (1-alpha) log a + mu/N, scaled by N to share the
    // boundary band with cut_verdict
    double rhs_core = (small == 0.0) ? -kInf
                                     : alpha * std::log(small) + (1.0 - alpha) * std::log(big);
    double scaled = n * std::log(cbig) + t2 - n * rhs_core - t1;
    if (std::isnan(scaled)) scaled = -kInf; // -inf - (-inf) when both sides vanish

    if (scaled > kMarginEpsilon) {
        out.verdict = Verdict::Yes;
    } else if (scaled < -kMarginEpsilon) {
        out.verdict = Verdict::No;
    } else {
        out.verdict = Verdict::Boundary;
    }
    return out;
}

FixedKLimit fixed_group_size_limit(const DerivedParams& p, std::int64_t k,
                                   std::int64_t n_horizon) {
    if (k < 1) throw Error(ErrorCode::OutOfRange, "group size k must be positive");
    std::int64_t n0 = std::max<std::int64_t>(2, 2 * k);

    auto margin_at = [&](std::int64_t n) { return cut_verdict(p, CutSpec(n, k)).log_margin; };

    if (nearly_equal(p.a, p.b)) {
        return {FixedKLimit::Kind::FailsAt, n0, true};
    }

    double big = std::max(p.a, p.b);
    double cbig = std::max(std::abs(p.c), std::abs(p.d));
    if (nearly_equal(cbig, big)) {
        // |c| = a degeneracy: the asymptotic reduction log|c| > log a is
        // marginal, no finite crossover exists
        return {FixedKLimit::Kind::BoundaryForever};
    }
    if (std::min(p.a, p.b) == 0.0) {
        // 2lambda = 0 for every N; Delta = |c|^N > 0 keeps the cut entangled
        return {FixedKLimit::Kind::NeverFails};
    }

    if (!(margin_at(n0) > kMarginEpsilon)) {
        return {FixedKLimit::Kind::FailsAt, n0, true};
    }

    // Margin decays like N log(|c|/a); doubling scan then binary search for
    // the first N where the condition stops holding.
    std::int64_t lo = n0, hi = n0;
    while (margin_at(hi) > kMarginEpsilon) {
        lo = hi;
        if (hi >= n_horizon) return {FixedKLimit::Kind::NeverFails};
        hi = std::min<std::int64_t>(n_horizon, hi * 2);
    }
    while (lo + 1 < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (margin_at(mid) > kMarginEpsilon) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {FixedKLimit::Kind::FailsAt, hi, false};
}

ParityProbe parity_probe(const DerivedParams& p, std::int64_t n) {
    ParityClass cls = (p.c * p.d < 0.0) ? ParityClass::OppositeSign : ParityClass::SameSign;
    return {cls, delta(p, n), delta(p, n + 1)};
}

} // namespace catnoise

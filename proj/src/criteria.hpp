#pragma once

#include <optional>

#include "cat_algebra.hpp"

namespace catnoise {

// Verdicts inside the boundary band are reported as Boundary, never
// silently collapsed to yes/no.
inline constexpr double kMarginEpsilon = 1e-10;

enum class Verdict { No, Yes, Boundary };
enum class ParityClass { SameSign, OppositeSign };
enum class AsymptoticRegime { EntangledAboveF, NeverEntangled, Degenerate };

struct CutVerdict {
    CutSpec cut;
    double delta;       // may underflow to 0 for large N; log_margin is authoritative
    double two_lambda;
    double log_margin;  // log Delta - log 2lambda
    Verdict verdict;
};

struct PartitionReport {
    std::int64_t n_qubits = 0;
    std::optional<std::int64_t> min_entangled_k;
    std::optional<std::int64_t> max_m;
    ParityClass parity_class = ParityClass::SameSign;
    bool fully_separable_flag = false; // no cut entangled
};

struct AsymptoticReport {
    double f_threshold;                 // f(a,|c|); may be 0 or +inf
    bool robust_pair_ok;                // c^2 > a*b, the alpha = 1/2 condition
    std::optional<double> finite_equals_asymptotic_alpha;
    AsymptoticRegime regime;
};

struct FiniteNCondition {
    Verdict verdict;
    double mu;          // finite-size correction term; NaN when degenerate
    bool mu_nonneg;     // mu >= 0 classification per the alpha criterion
    bool degenerate;    // c = 0 or a = b: fell back to the direct comparison
};

struct FixedKLimit {
    enum class Kind { BoundaryForever, NeverFails, FailsAt };
    Kind kind;
    std::int64_t n_star = 0;       // first N where the condition fails (FailsAt)
    bool immediate = false;        // fails already at the smallest N = 2k
};

// Entanglement across the k:(N-k) cut: Delta > 2*lambda_{k,N-k}, evaluated
// in the log domain. a = b is hard-coded non-entangled.
CutVerdict cut_verdict(const DerivedParams& p, const CutSpec& cut);

// Smallest k whose cut is entangled; binary search over the margin, which
// is monotone increasing in k. Empty if even k = N/2 is not entangled.
std::optional<std::int64_t> min_entangled_k(const DerivedParams& p, std::int64_t n);

// Largest M such that an M-qubit cat state is distillable:
// max M = 1 + quotient((N - k)/k) for the minimal entangled k.
PartitionReport max_distillable_m(const DerivedParams& p, std::int64_t n);

AsymptoticReport asymptotic_report(const DerivedParams& p);

// The asymptotic condition |c| > b^alpha a^(1-alpha) at cut fraction alpha.
// alpha = 1/2 is evaluated as c^2 > a*b so the two forms agree bit-for-bit.
bool asymptotic_entangled(const DerivedParams& p, double alpha);

// The log-form rewrite of cut_verdict with the finite-size correction mu
// exposed. Agrees with cut_verdict on every non-degenerate input.
FiniteNCondition finite_n_condition(const DerivedParams& p, const CutSpec& cut);

// For fixed group size k, the k:(N-k) condition eventually fails as N
// grows (|c| < a); locates the first failing N by monotone log-domain scan.
FixedKLimit fixed_group_size_limit(const DerivedParams& p, std::int64_t k,
                                   std::int64_t n_horizon = 100000000);

struct ParityProbe {
    ParityClass parity_class;
    double delta_n;       // Delta at the requested N
    double delta_n_plus1; // Delta at N+1, for the parity diagnostic
};

ParityProbe parity_probe(const DerivedParams& p, std::int64_t n);

const char* to_string(Verdict v);
const char* to_string(ParityClass c);
const char* to_string(AsymptoticRegime r);

} // namespace catnoise

#pragma once

#include <cstdint>

#include "channel.hpp"
#include "log_value.hpp"

namespace catnoise {

// Bipartite cut k:(N-k). Cuts always have 1 <= k <= N/2.
struct CutSpec {
    std::int64_t n_qubits;
    std::int64_t k;

    CutSpec(std::int64_t n, std::int64_t kk) : n_qubits(n), k(kk) {
        if (n < 2) throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
        if (kk < 1 || kk > n / 2) throw Error(ErrorCode::OutOfRange, "cut k must lie in [1, N/2]");
    }

    double alpha() const { return static_cast<double>(k) / static_cast<double>(n_qubits); }
};

// Populations of the decohered state in the cat basis, for the 0-group
// pair and one representative k-group pair.
struct CatCoefficients {
    double delta;         // |alpha0_plus - alpha0_minus| = |c^N + d^N|
    double two_lambda;    // alpha_k_plus + alpha_k_minus (0 for k = 0)
    double alpha0_plus;
    double alpha0_minus;
    double alpha_k_plus;
    double alpha_k_minus;
};

// Delta = |c^N + d^N|. When c and d carry opposite signs and N is odd the
// two powers cancel; the log-domain path keeps relative accuracy there.
LogValue delta_log(const DerivedParams& p, std::int64_t n);
double delta(const DerivedParams& p, std::int64_t n);

// 2*lambda_{k,N-k} = a^k b^(N-k) + b^k a^(N-k); independent of which k
// qubits form the cut.
LogValue two_lambda_log(const DerivedParams& p, const CutSpec& cut);
double two_lambda(const DerivedParams& p, const CutSpec& cut);

// Populations of one cat pair. k = 0 addresses the |Psi_0^+->| pair;
// k >= 1 addresses any representative of the k-group (they are all equal).
CatCoefficients cat_populations(const DerivedParams& p, std::int64_t n, std::int64_t k);

// Number of cat-basis states in the k-group: 2*C(N,k), except C(N, N/2)
// when N is even and k = N/2. Throws OutOfRange if the count overflows.
std::uint64_t count_k_group(std::int64_t n, std::int64_t k);

} // namespace catnoise

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "channel.hpp"

namespace catnoise {
namespace oracle {

inline constexpr int kDefaultMaxQubits = 10;
inline constexpr double kEigEpsilon = 1e-10;

// Exact 2^N x 2^N density matrix, row-major. Qubit 0 is the most
// significant bit of the basis index. Only the brute-force oracle uses
// this; the analytic layer never materializes the state.
class DenseState {
public:
    DenseState(int n_qubits, int max_qubits = kDefaultMaxQubits);

    int n_qubits() const { return n_; }
    std::size_t dim() const { return dim_; }

    std::complex<double>& at(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    double trace_real() const;
    double max_hermiticity_violation() const;
    double max_imag() const;

private:
    int n_;
    std::size_t dim_;
    std::vector<std::complex<double>> data_;
};

struct PtResult {
    std::uint64_t cut_mask;
    double min_eigenvalue;
    bool nppt; // min_eigenvalue < -kEigEpsilon
};

struct DiagonalityReport {
    double max_off_diagonal;
    bool diagonal; // max_off_diagonal < 1e-12
};

// Projector onto (|0...0> + |1...1>)/sqrt(2); four entries of 1/2.
DenseState build_cat_state(int n_qubits, int max_qubits = kDefaultMaxQubits);

// One application of the four-term Kraus sum on the given qubit.
DenseState apply_channel(const DenseState& state, const PauliChannel& ch, int qubit);

// Channel applied once to every qubit of the cat state.
DenseState decohere_all(int n_qubits, const PauliChannel& ch, int max_qubits = kDefaultMaxQubits);

// Partial transpose over the qubits in cut_mask (bit N-1-q of the index
// addresses qubit q). Involution; preserves Hermiticity and trace.
DenseState partial_transpose(const DenseState& state, std::uint64_t cut_mask);

// Smallest eigenvalue of a Hermitian matrix; throws NotHermitian if the
// input violates Hermiticity beyond 1e-10.
double min_eigenvalue(const DenseState& h);

// Expresses the state in the cat basis and reports the largest
// off-diagonal magnitude.
DiagonalityReport verify_cat_diagonality(const DenseState& state);

// Cat-basis population <Psi_k^{+/-}| rho |Psi_k^{+/-}> for the pair built
// from the lexicographically first bitstring with k zeros.
double cat_pair_population(const DenseState& state, int k, int sign);

// NPPT verdict for the cut of the first k qubits.
PtResult oracle_cut_verdict(const DenseState& state, int k);

// Mask for the first k qubits (the k most significant index bits).
std::uint64_t first_k_mask(int n_qubits, int k);

} // namespace oracle
} // namespace catnoise

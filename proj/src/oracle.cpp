#include "oracle.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace catnoise {
namespace oracle {

DenseState::DenseState(int n_qubits, int max_qubits) : n_(n_qubits) {
    if (n_qubits < 2) throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
    if (n_qubits > max_qubits) {
        throw Error(ErrorCode::SizeTooLarge,
                    "oracle limited to " + std::to_string(max_qubits) + " qubits");
    }
    dim_ = std::size_t{1} << n_qubits;
    data_.assign(dim_ * dim_, {0.0, 0.0});
}

double DenseState::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i).real();
    return t;
}

double DenseState::max_hermiticity_violation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
        }
    }
    return worst;
}

double DenseState::max_imag() const {
    double worst = 0.0;
    for (const auto& z : data_) worst = std::max(worst, std::abs(z.imag()));
    return worst;
}

DenseState build_cat_state(int n_qubits, int max_qubits) {
    DenseState s(n_qubits, max_qubits);
    std::size_t last = s.dim() - 1;
    s.at(0, 0) = s.at(0, last) = s.at(last, 0) = s.at(last, last) = 0.5;
    return s;
}

DenseState apply_channel(const DenseState& state, const PauliChannel& ch, int qubit) {
    int n = state.n_qubits();
    if (qubit < 0 || qubit >= n) throw Error(ErrorCode::OutOfRange, "qubit index out of range");

    // rho' = pi0 rho + pi1 X rho X + pi2 Y rho Y + pi3 Z rho Z on one qubit.
    // With z(i) = +/-1 the Z eigenvalue of the qubit bit of index i:
    //   (X rho X)(i,j) = rho(i^m, j^m)
    //   (Y rho Y)(i,j) = z(i) z(j) rho(i^m, j^m)
    //   (Z rho Z)(i,j) = z(i) z(j) rho(i,j)
    std::uint64_t m = std::uint64_t{1} << (n - 1 - qubit);
    DenseState out(n, n);
    std::size_t dim = state.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        double zi = (i & m) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < dim; ++j) {
            double zj = (j & m) ? -1.0 : 1.0;
            double s = zi * zj;
            out.at(i, j) = (ch.pi0 + ch.pi3 * s) * state.at(i, j) +
                           (ch.pi1 + ch.pi2 * s) * state.at(i ^ m, j ^ m);
        }
    }
    return out;
}

DenseState decohere_all(int n_qubits, const PauliChannel& ch, int max_qubits) {
    DenseState s = build_cat_state(n_qubits, max_qubits);
    for (int q = 0; q < n_qubits; ++q) s = apply_channel(s, ch, q);
    return s;
}

DenseState partial_transpose(const DenseState& state, std::uint64_t cut_mask) {
    std::size_t dim = state.dim();
    std::uint64_t full = dim - 1;
    if (cut_mask == 0 || (cut_mask & ~full) != 0 || cut_mask == full) {
        throw Error(ErrorCode::OutOfRange, "cut mask must be a nonempty proper qubit subset");
    }
    DenseState out(state.n_qubits(), state.n_qubits());
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            std::size_t ti = (i & ~cut_mask) | (j & cut_mask);
            std::size_t tj = (j & ~cut_mask) | (i & cut_mask);
            out.at(ti, tj) = state.at(i, j);
        }
    }
    return out;
}

double min_eigenvalue(const DenseState& h) {
    if (h.max_hermiticity_violation() > 1e-10) {
        throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
    }
    std::size_t dim = h.dim();
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = h.at(i, j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NoConvergence, "eigensolver failed to converge");
    }
    return solver.eigenvalues().minCoeff();
}

namespace {

// <Psi_u^s| rho |Psi_v^t> for cat-basis states built from bitstrings u, v
// (each paired with its complement), s,t in {+1,-1}.
std::complex<double> cat_element(const DenseState& rho, std::size_t u, int s, std::size_t v,
                                 int t) {
    std::size_t full = rho.dim() - 1;
    std::size_t ub = u ^ full, vb = v ^ full;
    double sd = s, td = t;
    return 0.5 * (rho.at(u, v) + td * rho.at(u, vb) + sd * rho.at(ub, v) +
                  sd * td * rho.at(ub, vb));
}

} // namespace

DiagonalityReport verify_cat_diagonality(const DenseState& state) {
    std::size_t dim = state.dim();
    std::size_t full = dim - 1;
    // Pair representatives: every u with u < complement(u); 2^(N-1) pairs,
    // each contributing a + and a - basis state.
    std::vector<std::size_t> reps;
    reps.reserve(dim / 2);
    for (std::size_t u = 0; u < dim; ++u) {
        if (u < (u ^ full)) reps.push_back(u);
    }
    double worst = 0.0;
    for (std::size_t p = 0; p < reps.size(); ++p) {
        for (std::size_t q = p; q < reps.size(); ++q) {
            for (int s : {1, -1}) {
                for (int t : {1, -1}) {
                    if (p == q && s == t) continue;
                    worst = std::max(worst,
                                     std::abs(cat_element(state, reps[p], s, reps[q], t)));
                }
            }
        }
    }
    return {worst, worst < 1e-12};
}

double cat_pair_population(const DenseState& state, int k, int sign) {
    int n = state.n_qubits();
    if (k < 0 || k > n / 2) throw Error(ErrorCode::OutOfRange, "group index k out of range");
    // First bitstring with k zeros then (n-k) ones, qubit 0 as MSB.
    // k = 0 degenerates to |1...1>, whose pair is the 0-group pair.
    std::size_t full = state.dim() - 1;
    std::size_t u = full >> k;
    return cat_element(state, u, sign, u, sign).real();
}

std::uint64_t first_k_mask(int n_qubits, int k) {
    return ((std::uint64_t{1} << k) - 1) << (n_qubits - k);
}

PtResult oracle_cut_verdict(const DenseState& state, int k) {
    int n = state.n_qubits();
    if (k < 1 || k > n / 2) throw Error(ErrorCode::OutOfRange, "cut k must lie in [1, N/2]");
    std::uint64_t mask = first_k_mask(n, k);
    double lam = min_eigenvalue(partial_transpose(state, mask));
    return {mask, lam, lam < -kEigEpsilon};
}

} // namespace oracle
} // namespace catnoise

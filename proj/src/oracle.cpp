#include "graphqfi/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace graphqfi::oracle {

namespace {

using cd = std::complex<double>;

std::vector<int> all_qubits(int n) {
    std::vector<int> q(n);
    for (int i = 0; i < n; ++i) q[i] = i;
    return q;
}

void check_active(int n, const std::vector<int>& active) {
    for (int q : active)
        if (q < 0 || q >= n) throw std::out_of_range("oracle: active qubit out of range");
}

cd phase_power(int k) {
    static const cd table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

std::uint64_t mask_of(const BitVec& bits) {
    std::uint64_t m = 0;
    for (int q : bits.bits()) m |= std::uint64_t{1} << q;
    return m;
}

// (sum_{q in active} X_q) |psi>
StateVector apply_x_sum(const StateVector& psi, const std::vector<int>& active) {
    StateVector out = StateVector::Zero(psi.size());
    for (int q : active) {
        const Eigen::Index bit = Eigen::Index{1} << q;
        for (Eigen::Index idx = 0; idx < psi.size(); ++idx) out[idx] += psi[idx ^ bit];
    }
    return out;
}

}  // namespace

int qubit_count(Eigen::Index dim) {
    if (dim < 1 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("oracle: dimension is not a power of two");
    return std::countr_zero(static_cast<std::uint64_t>(dim));
}

StateVector graph_state_vector(const Graph& g) {
    const int n = g.size();
    if (n > kStateVectorMaxQubits)
        throw std::domain_error("oracle: graph_state_vector limited to n <= " +
                                std::to_string(kStateVectorMaxQubits));
    const Eigen::Index dim = Eigen::Index{1} << n;
    StateVector psi = StateVector::Constant(dim, cd(std::pow(2.0, -n / 2.0), 0));
    for (const auto& [i, j] : g.edges()) {
        const Eigen::Index bi = Eigen::Index{1} << i, bj = Eigen::Index{1} << j;
        for (Eigen::Index idx = 0; idx < dim; ++idx)
            if ((idx & bi) && (idx & bj)) psi[idx] = -psi[idx];
    }
    return psi;
}

StateVector apply_pauli(const Pauli& p, const StateVector& psi) {
    const int n = qubit_count(psi.size());
    if (p.qubits() != n) throw std::invalid_argument("oracle: Pauli qubit count mismatch");
    const std::uint64_t x = mask_of(p.x_mask()), z = mask_of(p.z_mask());
    const cd ph = phase_power(p.phase_exponent());
    StateVector out(psi.size());
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
        const int zpar = std::popcount(static_cast<std::uint64_t>(idx) & z) & 1;
        out[idx ^ static_cast<Eigen::Index>(x)] = ph * (zpar ? -psi[idx] : psi[idx]);
    }
    return out;
}

StateVector stabilizer_state_vector(const StabilizerGroup& s) {
    const int n = s.qubits();
    if (n > kStateVectorMaxQubits)
        throw std::domain_error("oracle: stabilizer_state_vector limited to n <= " +
                                std::to_string(kStateVectorMaxQubits));
    const Eigen::Index dim = Eigen::Index{1} << n;
    for (Eigen::Index seed = 0; seed < dim; ++seed) {
        StateVector psi = StateVector::Zero(dim);
        psi[seed] = 1.0;
        for (const auto& g : s.generators()) psi = 0.5 * (psi + apply_pauli(g, psi));
        const double norm = psi.norm();
        if (norm < 1e-9) continue;
        psi /= norm;
        for (Eigen::Index idx = 0; idx < dim; ++idx) {
            if (std::abs(psi[idx]) > 1e-9) {
                psi *= std::conj(psi[idx]) / std::abs(psi[idx]);
                break;
            }
        }
        return psi;
    }
    throw std::runtime_error("oracle: projector product annihilated every basis state");
}

double pauli_expectation(const StateVector& psi, const Pauli& p) {
    return std::real(psi.dot(apply_pauli(p, psi)));
}

StateVector apply_phase_encoding(const StateVector& psi, double theta,
                                 const std::vector<int>& active) {
    const int n = qubit_count(psi.size());
    check_active(n, active);
    const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
    StateVector cur = psi;
    for (int q : active) {
        const Eigen::Index bit = Eigen::Index{1} << q;
        StateVector next(cur.size());
        for (Eigen::Index idx = 0; idx < cur.size(); ++idx)
            next[idx] = c * cur[idx] - cd(0, sn) * cur[idx ^ bit];
        cur.swap(next);
    }
    return cur;
}

StateVector apply_phase_encoding(const StateVector& psi, double theta) {
    return apply_phase_encoding(psi, theta, all_qubits(qubit_count(psi.size())));
}

StateVector apply_twin_clifford(const StateVector& psi, const std::vector<int>& vertices) {
    const int n = qubit_count(psi.size());
    check_active(n, vertices);
    std::uint64_t mask = 0;
    for (int q : vertices) mask |= std::uint64_t{1} << q;
    StateVector out(psi.size());
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx)
        out[idx] = phase_power(std::popcount(static_cast<std::uint64_t>(idx) & mask)) * psi[idx];
    return out;
}

double qfi_pure(const StateVector& psi, const std::vector<int>& active) {
    const int n = qubit_count(psi.size());
    check_active(n, active);
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("oracle: state vector is not normalized");
    const StateVector w = apply_x_sum(psi, active);
    const double first = std::real(w.dot(w));
    const double mean = std::real(psi.dot(w));
    return first - mean * mean;
}

double qfi_pure(const StateVector& psi) {
    return qfi_pure(psi, all_qubits(qubit_count(psi.size())));
}

DensityMatrix density(const StateVector& psi) { return psi * psi.adjoint(); }

DensityMatrix apply_dephasing(const DensityMatrix& rho, double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("oracle: dephasing probability outside [0,1]");
    const int n = qubit_count(rho.rows());
    if (n > kDensityMaxQubits)
        throw std::domain_error("oracle: apply_dephasing limited to n <= " +
                                std::to_string(kDensityMaxQubits));
    const double damp = 1.0 - 2.0 * p;
    DensityMatrix out = rho;
    for (Eigen::Index a = 0; a < rho.rows(); ++a)
        for (Eigen::Index b = 0; b < rho.cols(); ++b) {
            const int d = std::popcount(static_cast<std::uint64_t>(a ^ b));
            out(a, b) *= std::pow(damp, d);
        }
    return out;
}

DensityMatrix apply_dephasing(const StateVector& psi, double p) {
    return apply_dephasing(density(psi), p);
}

DensityMatrix apply_full_dephasing_on(const DensityMatrix& rho, const std::vector<int>& sites) {
    const int n = qubit_count(rho.rows());
    check_active(n, sites);
    std::uint64_t mask = 0;
    for (int q : sites) mask |= std::uint64_t{1} << q;
    DensityMatrix out = rho;
    for (Eigen::Index a = 0; a < rho.rows(); ++a)
        for (Eigen::Index b = 0; b < rho.cols(); ++b)
            if (static_cast<std::uint64_t>(a ^ b) & mask) out(a, b) = 0.0;
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& sites) {
    const int n = qubit_count(rho.rows());
    std::vector<int> traced = sites;
    std::sort(traced.begin(), traced.end());
    traced.erase(std::unique(traced.begin(), traced.end()), traced.end());
    if (traced.empty()) throw std::invalid_argument("oracle: partial_trace needs sites");
    check_active(n, traced);
    if (static_cast<int>(traced.size()) == n)
        throw std::invalid_argument("oracle: cannot trace out every qubit");

    std::vector<int> keep;
    for (int q = 0; q < n; ++q)
        if (!std::binary_search(traced.begin(), traced.end(), q)) keep.push_back(q);
    const int nk = static_cast<int>(keep.size()), nt = static_cast<int>(traced.size());
    const Eigen::Index dk = Eigen::Index{1} << nk, dt = Eigen::Index{1} << nt;

    auto embed = [&](Eigen::Index a, Eigen::Index c) {
        Eigen::Index idx = 0;
        for (int b = 0; b < nk; ++b)
            if ((a >> b) & 1) idx |= Eigen::Index{1} << keep[b];
        for (int b = 0; b < nt; ++b)
            if ((c >> b) & 1) idx |= Eigen::Index{1} << traced[b];
        return idx;
    };

    DensityMatrix out = DensityMatrix::Zero(dk, dk);
    for (Eigen::Index a = 0; a < dk; ++a)
        for (Eigen::Index b = 0; b < dk; ++b)
            for (Eigen::Index c = 0; c < dt; ++c) out(a, b) += rho(embed(a, c), embed(b, c));
    return out;
}

double qfi_mixed(const DensityMatrix& rho, const std::vector<int>& active) {
    const int n = qubit_count(rho.rows());
    check_active(n, active);
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("oracle: density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("oracle: density matrix trace is not 1");

    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("oracle: eigendecomposition failed");
    const Eigen::VectorXd lam = solver.eigenvalues();
    const DensityMatrix& V = solver.eigenvectors();

    if (lam.minCoeff() < -1e-10)
        throw std::invalid_argument("oracle: density matrix has negative eigenvalues");
    const double recon =
        (V * lam.asDiagonal() * V.adjoint() - rho).cwiseAbs().maxCoeff();
    if (recon > 1e-9) throw std::runtime_error("oracle: eigendecomposition reconstruction drift");
    const double ortho =
        (V.adjoint() * V - DensityMatrix::Identity(rho.rows(), rho.cols())).cwiseAbs().maxCoeff();
    if (ortho > 1e-10) throw std::runtime_error("oracle: eigenvectors are not orthonormal");

    // H V column-wise, H = 1/2 sum_active X.
    DensityMatrix HV = DensityMatrix::Zero(rho.rows(), rho.cols());
    for (int q : active) {
        const Eigen::Index bit = Eigen::Index{1} << q;
        for (Eigen::Index col = 0; col < V.cols(); ++col)
            for (Eigen::Index idx = 0; idx < V.rows(); ++idx)
                HV(idx, col) += 0.5 * V(idx ^ bit, col);
    }
    const DensityMatrix W = V.adjoint() * HV;

    double q_sum = 0.0;
    for (Eigen::Index j = 0; j < lam.size(); ++j)
        for (Eigen::Index k = 0; k < lam.size(); ++k) {
            const double s = lam[j] + lam[k];
            if (s <= 1e-10) continue;
            const double d = lam[j] - lam[k];
            q_sum += d * d / s * std::norm(W(j, k));
        }
    return 2.0 * q_sum;
}

double qfi_mixed(const DensityMatrix& rho) {
    return qfi_mixed(rho, all_qubits(qubit_count(rho.rows())));
}

}  // namespace graphqfi::oracle

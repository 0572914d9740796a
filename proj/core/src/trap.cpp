#include "dwell/trap.hpp"

#include <cmath>
#include <stdexcept>

#include "dwell/numerics.hpp"

namespace dwell {

std::pair<std::vector<double>, std::vector<double>> hamiltonian_tridiagonal(
    int N, const TrapParams& p) {
    if (N < 0) throw std::domain_error("hamiltonian_tridiagonal: N must be >= 0");
    std::vector<double> diag(N + 1), offdiag(std::max(N, 0));
    for (int k = 0; k <= N; ++k) {
        double nk = double(N - k);
        diag[k] = p.e1 * k + p.e2 * nk +
                  p.u * (double(k) * (k - 1) + nk * (nk - 1));
    }
    for (int k = 0; k < N; ++k) {
        offdiag[k] = -p.tt * std::sqrt(double(k + 1) * double(N - k));
    }
    return {std::move(diag), std::move(offdiag)};
}

TwoModeState ground_state(int N, const TrapParams& p) {
    auto [diag, offdiag] = hamiltonian_tridiagonal(N, p);
    auto spec = eigh_tridiagonal(diag, offdiag);
    const auto& v = spec.eigenvectors.front();

    TwoModeState gs;
    gs.N = N;
    gs.coeffs.resize(N + 1);
    int imax = 0;
    for (int k = 0; k <= N; ++k) {
        if (std::abs(v[k]) > std::abs(v[imax])) imax = k;
    }
    double sign = (v[imax] < 0.0) ? -1.0 : 1.0;
    for (int k = 0; k <= N; ++k) gs.coeffs[k] = sign * v[k];
    return gs;
}

TwoModeState evolve_in_trap(const TwoModeState& state, const TrapParams& p, double t) {
    if (!std::isfinite(t)) throw std::domain_error("evolve_in_trap: t must be finite");
    const int N = state.N;
    auto [diag, offdiag] = hamiltonian_tridiagonal(N, p);
    auto spec = eigh_tridiagonal(diag, offdiag);

    TwoModeState out;
    out.N = N;
    out.coeffs.assign(N + 1, Complex(0.0, 0.0));
    for (int i = 0; i <= N; ++i) {
        const auto& v = spec.eigenvectors[i];
        Complex amp(0.0, 0.0);  // <v_i|psi>
        for (int k = 0; k <= N; ++k) amp += v[k] * state.coeffs[k];
        double arg = -spec.eigenvalues[i] * t;
        amp *= Complex(std::cos(arg), std::sin(arg));
        for (int k = 0; k <= N; ++k) out.coeffs[k] += amp * v[k];
    }
    return out;
}

}  // namespace dwell

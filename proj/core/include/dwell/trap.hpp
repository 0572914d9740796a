#pragma once

#include <utility>
#include <vector>

#include "dwell/hilbert.hpp"

namespace dwell {

/// Double-well Bose-Hubbard parameters: well depths e1, e2, on-site
/// repulsion u >= 0, tunneling amplitude tt. Units hbar = 1.
struct TrapParams {
    double e1 = 0.0;
    double e2 = 0.0;
    double u = 0.0;
    double tt = 0.0;
};

/// Hamiltonian in the Fock basis: diag[k] = e1*k + e2*(N-k)
/// + u*[k(k-1) + (N-k)(N-k-1)], offdiag[k] = -tt*sqrt((k+1)(N-k)).
std::pair<std::vector<double>, std::vector<double>> hamiltonian_tridiagonal(
    int N, const TrapParams& p);

/// Lowest eigenvector of the two-mode Hamiltonian. Global phase fixed by
/// making the largest-magnitude coefficient real positive.
TwoModeState ground_state(int N, const TrapParams& p);

/// Spectral evolution exp(-i H t) applied to a state.
TwoModeState evolve_in_trap(const TwoModeState& state, const TrapParams& p, double t);

}  // namespace dwell

#pragma once

#include <complex>
#include <vector>

namespace dwell {

using Complex = std::complex<double>;

/// Amplitude split and relative phase labelling a phase-coherent state
/// |N; xi, phi>. phi is stored reduced to [0, 2*pi).
struct CoherentParams {
    double xi = 0.5;
    double phi = 0.0;

    CoherentParams() = default;
    CoherentParams(double xi_, double phi_);
};

/// Pure state of N bosons over two modes, expanded in the Fock basis
/// |N;k> (k atoms in well 1, N-k in well 2): coeffs[k] multiplies |N;k>.
///
/// Phase convention: the ket coefficients of a phase-coherent state carry
/// e^{+i*phi*(k - N/2)}, i.e. mode 1 is weighted by sqrt(xi) e^{+i*phi/2}.
/// Under this convention <a1^t a1 - a2^t a2> = N*(2*xi - 1).
struct TwoModeState {
    int N = 0;
    std::vector<Complex> coeffs;  // length N+1

    double norm_sq() const;
};

/// Two-mode sufficient statistics of the one-body density matrix.
struct OneBodyMatrix {
    double n1 = 0.0;    // <a1^t a1>
    double n2 = 0.0;    // <a2^t a2>
    Complex coh{0.0, 0.0};  // <a1^t a2>
};

/// Fock basis state |N;k>. Throws std::domain_error for k outside [0,N].
TwoModeState fock_state(int N, int k);

/// Phase-coherent state |N; xi, phi>. Amplitudes are assembled in the log
/// domain; magnitudes below e^{-700} flush to exactly 0.
TwoModeState coherent_state(int N, const CoherentParams& params);

/// <bra|ket> as the coefficient dot product. Throws on mismatched N.
Complex overlap(const TwoModeState& bra, const TwoModeState& ket);

/// POVM weight (N+1)/(2*pi) * |<N;xi,phi|psi>|^2. Integrates to 1 over
/// xi in [0,1], phi in [0,2*pi].
double povm_weight(const TwoModeState& state, const CoherentParams& params);

/// One-body reductions n1, n2, coh of a pure two-mode state.
OneBodyMatrix one_body_matrix(const TwoModeState& state);

/// Closed-form Gram element <N;xi,phi|N;xi',phi'>.
Complex coherent_gram(int N, const CoherentParams& p, const CoherentParams& q);

}  // namespace dwell

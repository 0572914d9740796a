#include "dwell/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include "dwell/numerics.hpp"

namespace dwell {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kLogFloor = -700.0;  // underflow floor in the log domain
}  // namespace

CoherentParams::CoherentParams(double xi_, double phi_) : xi(xi_), phi(phi_) {
    if (xi < 0.0 || xi > 1.0) {
        throw std::domain_error("CoherentParams: xi must lie in [0,1]");
    }
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
}

double TwoModeState::norm_sq() const {
    double s = 0.0;
    for (const auto& c : coeffs) s += std::norm(c);
    return s;
}

TwoModeState fock_state(int N, int k) {
    if (N < 0 || k < 0 || k > N) {
        throw std::domain_error("fock_state: need 0 <= k <= N");
    }
    TwoModeState s;
    s.N = N;
    s.coeffs.assign(N + 1, Complex(0.0, 0.0));
    s.coeffs[k] = 1.0;
    return s;
}

// log |c_k| of a phase-coherent state; -inf conventions handled by caller.
static double coherent_log_amp(int N, int k, double xi) {
    // 0^0 = 1 at the endpoints, keeping the amplitude continuous in xi
    double t = 0.5 * log_binomial(N, k);
    if (k > 0) {
        if (xi == 0.0) return -INFINITY;
        t += 0.5 * k * std::log(xi);
    }
    if (k < N) {
        if (xi == 1.0) return -INFINITY;
        t += 0.5 * (N - k) * std::log(1.0 - xi);
    }
    return t;
}

TwoModeState coherent_state(int N, const CoherentParams& params) {
    if (N < 0) throw std::domain_error("coherent_state: N must be >= 0");
    TwoModeState s;
    s.N = N;
    s.coeffs.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        double la = coherent_log_amp(N, k, params.xi);
        double amp = (la < kLogFloor) ? 0.0 : std::exp(la);
        double arg = params.phi * (k - 0.5 * N);
        s.coeffs[k] = amp * Complex(std::cos(arg), std::sin(arg));
    }
    return s;
}

Complex overlap(const TwoModeState& bra, const TwoModeState& ket) {
    if (bra.N != ket.N) throw std::domain_error("overlap: mismatched N");
    Complex acc(0.0, 0.0);
    for (int k = 0; k <= bra.N; ++k) {
        acc += std::conj(bra.coeffs[k]) * ket.coeffs[k];
    }
    return acc;
}

double povm_weight(const TwoModeState& state, const CoherentParams& params) {
    TwoModeState probe = coherent_state(state.N, params);
    double mag2 = std::norm(overlap(probe, state));
    return (state.N + 1) / kTwoPi * mag2;
}

OneBodyMatrix one_body_matrix(const TwoModeState& state) {
    OneBodyMatrix m;
    const int N = state.N;
    for (int k = 0; k <= N; ++k) {
        double p = std::norm(state.coeffs[k]);
        m.n1 += k * p;
        m.n2 += (N - k) * p;
    }
    for (int k = 0; k + 1 <= N; ++k) {
        m.coh += std::conj(state.coeffs[k + 1]) * state.coeffs[k] *
                 std::sqrt(double(k + 1) * double(N - k));
    }
    return m;
}

Complex coherent_gram(int N, const CoherentParams& p, const CoherentParams& q) {
    if (N < 0) throw std::domain_error("coherent_gram: N must be >= 0");
    double dphi = 0.5 * (q.phi - p.phi);
    Complex a = std::sqrt(p.xi * q.xi) * Complex(std::cos(dphi), std::sin(dphi));
    Complex b = std::sqrt((1.0 - p.xi) * (1.0 - q.xi)) *
                Complex(std::cos(dphi), -std::sin(dphi));
    return std::pow(a + b, double(N));
}

}  // namespace dwell

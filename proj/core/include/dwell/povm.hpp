#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dwell/expansion.hpp"
#include "dwell/hilbert.hpp"
#include "dwell/numerics.hpp"

namespace dwell {

/// One simulated absorption image.
struct ShotRecord {
    int index = 0;
    CoherentParams params;
    std::optional<DensityProfile> profile;
};

enum class SamplerKind {
    Auto,      // exact-beta for Fock inputs, grid-cdf otherwise
    ExactBeta,  // valid only for Fock states
    GridCdf,
};

struct RunConfig {
    int n_shots = 1;
    std::uint64_t master_seed = 0;
    bool keep_profiles = false;
    SpatialGrid grid;
    double t = 30.0;
    SamplerKind sampler = SamplerKind::Auto;
    int n_xi = 512;      // grid-cdf resolution
    int n_phi = 256;
    double noise_sigma = 0.0;  // additive Gaussian on profile values, off by default
    int n_threads = 1;
};

/// Result of a Monte-Carlo run: the averaged profile plus per-point
/// standard errors of the mean derived from the shot variance.
struct MonteCarloResult {
    DensityProfile average;
    std::vector<double> stderr_values;
    std::vector<ShotRecord> shots;
};

/// Normalized marginal density of xi for a Fock input:
/// (N+1) C(N,k) xi^k (1-xi)^{N-k}, a Beta(k+1, N-k+1) law.
double xi_marginal_fock(int N, int k, double xi);

/// Draws (xi, phi) distributed per povm_weight(state, .). Built once per
/// state, then reusable across shots.
class ShotSampler {
public:
    ShotSampler(const TwoModeState& state, const RunConfig& config);

    CoherentParams draw(RngStream& stream) const;

    bool exact_beta() const { return exact_beta_; }

private:
    int N_;
    bool exact_beta_ = false;
    int fock_k_ = 0;
    // grid-cdf tables
    int n_xi_ = 0, n_phi_ = 0;
    std::vector<double> node_weight_;  // (n_xi+1) x (n_phi+1) povm weights
    std::vector<double> cell_cdf_;     // cumulative cell masses, row-major

    double node(int u, int v) const { return node_weight_[u * (n_phi_ + 1) + v]; }
};

/// Single (xi, phi) draw per the POVM weight of the state.
CoherentParams sample_shot(const TwoModeState& state, RngStream& stream,
                           const RunConfig& config);

/// Empirical average of n_shots single-shot densities (the superimposed
/// absorption images). Deterministic given master_seed: per-shot streams are
/// keyed by shot index and accumulation order is independent of n_threads.
MonteCarloResult run_monte_carlo(const TwoModeState& state,
                                 const WavepacketFamily& family,
                                 const RunConfig& config);

/// POVM-averaged density by quadrature: the (xi, phi) integral of
/// povm_weight x shot_density. Gauss-Legendre in xi, uniform periodic rule
/// in phi; exact up to roundoff when xi_order >= N/2+2 and phi_order >= N+2.
DensityProfile povm_average_quadrature(const TwoModeState& state,
                                       const WavepacketFamily& family, double t,
                                       const SpatialGrid& grid, int xi_order,
                                       int phi_order);

/// Default quadrature orders for atom number N: exactness where achievable.
int default_xi_order(int N);
int default_phi_order(int N);

/// Closed-form POVM average for a Fock input:
/// n(x) = N/(N+2) [ (k+1)|W1|^2 + (N-k+1)|W2|^2 ].
DensityProfile povm_average_fock_closed(int N, int k, const WavepacketFamily& family,
                                        double t, const SpatialGrid& grid);

/// Operator expectation value for a Fock input: k|W1|^2 + (N-k)|W2|^2.
DensityProfile trace_average_fock(int N, int k, const WavepacketFamily& family,
                                  double t, const SpatialGrid& grid);

/// Signed difference povm_average_fock_closed - trace_average_fock
/// (values may be negative; no clamping).
DensityProfile density_difference(int N, int k, const WavepacketFamily& family,
                                  double t, const SpatialGrid& grid);

}  // namespace dwell

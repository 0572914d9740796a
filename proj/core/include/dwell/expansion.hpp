#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dwell/hilbert.hpp"

namespace dwell {

/// Geometry of the two well modes: normalized 1-D Gaussians of width sigma
/// centered at +d/2 (well 1) and -d/2 (well 2), expanding under the exact
/// free-particle propagator. Units hbar = m = 1.
struct WavepacketFamily {
    double d = 12.0;
    double sigma = 1.0;
};

/// Uniform spatial grid on [x_min, x_max] with n_points samples.
struct SpatialGrid {
    double x_min = -80.0;
    double x_max = 80.0;
    int n_points = 4001;

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + spacing() * i; }
};

/// Sampled density n(x_i) at flight time t.
struct DensityProfile {
    SpatialGrid grid;
    std::vector<double> values;
    double t = 0.0;
    double atom_total = 0.0;

    /// Trapezoid integral of the sampled values.
    double integral() const;
};

/// Precomputed mode products on a grid at fixed flight time: every density
/// formula in this module is a linear combination of these four arrays.
struct ModeTable {
    SpatialGrid grid;
    double t = 0.0;
    std::vector<double> w1_sq;     // |W1(x,t)|^2
    std::vector<double> w2_sq;     // |W2(x,t)|^2
    std::vector<double> cross_re;  // Re(W1 conj(W2))
    std::vector<double> cross_im;  // Im(W1 conj(W2))

    ModeTable(const WavepacketFamily& family, double t, const SpatialGrid& grid);

    /// a*|W1|^2 + b*|W2|^2 + c*Re(W1 W2~) + s*Im(W1 W2~), clamped at 0.
    DensityProfile combine(double a, double b, double c, double s,
                           double atom_total) const;
};

/// Free-flight mode function W_j(x,t) for well index j in {1,2}.
Complex mode_function(const WavepacketFamily& family, int j, double x, double t);

/// Interference pattern of a single absorption image at fixed (xi, phi):
/// n(x) = N [ xi|W1|^2 + (1-xi)|W2|^2 + 2 sqrt(xi(1-xi)) Re(W1 W2~ e^{i phi}) ].
DensityProfile shot_density(const WavepacketFamily& family, int N,
                            const CoherentParams& params, double t,
                            const SpatialGrid& grid);
DensityProfile shot_density(const ModeTable& table, int N, const CoherentParams& params);

/// Expectation value of the density operator in the given state:
/// n(x) = n1|W1|^2 + n2|W2|^2 + 2 Re(coh conj(W1) W2).
DensityProfile operator_density(const WavepacketFamily& family,
                                const TwoModeState& state, double t,
                                const SpatialGrid& grid);
DensityProfile operator_density(const ModeTable& table, const TwoModeState& state);

/// Spatial period of the interference term, 2*pi*sigma^2*(1+tau^2)/(tau*d)
/// with tau = t/(2 sigma^2). Throws for t <= 0.
double fringe_period(const WavepacketFamily& family, double t);

/// CSV serialization: header "x,density", 17 significant digits, LF endings.
void write_profile_csv(const DensityProfile& profile, const std::string& path);

}  // namespace dwell

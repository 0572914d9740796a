#include "dwell/expansion.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dwell {

double DensityProfile::integral() const {
    double h = grid.spacing();
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) s += values[i];
    if (!values.empty()) s -= 0.5 * (values.front() + values.back());
    return s * h;
}

Complex mode_function(const WavepacketFamily& family, int j, double x, double t) {
    if (j != 1 && j != 2) throw std::domain_error("mode_function: well index must be 1 or 2");
    if (t < 0.0) throw std::domain_error("mode_function: t must be >= 0");
    const double sigma2 = family.sigma * family.sigma;
    const double tau = t / (2.0 * sigma2);
    const double xc = (j == 1) ? 0.5 * family.d : -0.5 * family.d;
    const double dx = x - xc;

    const Complex one_plus_itau(1.0, tau);
    Complex amp = std::pow(2.0 * M_PI * sigma2, -0.25) / std::sqrt(one_plus_itau);
    Complex expo = -dx * dx / (4.0 * sigma2 * one_plus_itau);
    return amp * std::exp(expo);
}

ModeTable::ModeTable(const WavepacketFamily& family, double t_, const SpatialGrid& g)
    : grid(g), t(t_) {
    if (!(g.x_min < g.x_max) || g.n_points < 2) {
        throw std::domain_error("ModeTable: invalid grid");
    }
    const int n = g.n_points;
    w1_sq.resize(n);
    w2_sq.resize(n);
    cross_re.resize(n);
    cross_im.resize(n);
    for (int i = 0; i < n; ++i) {
        Complex w1 = mode_function(family, 1, g.x(i), t);
        Complex w2 = mode_function(family, 2, g.x(i), t);
        Complex cross = w1 * std::conj(w2);
        w1_sq[i] = std::norm(w1);
        w2_sq[i] = std::norm(w2);
        cross_re[i] = cross.real();
        cross_im[i] = cross.imag();
    }
}

DensityProfile ModeTable::combine(double a, double b, double c, double s,
                                  double atom_total) const {
    DensityProfile p;
    p.grid = grid;
    p.t = t;
    p.atom_total = atom_total;
    p.values.resize(w1_sq.size());
    for (std::size_t i = 0; i < w1_sq.size(); ++i) {
        double v = a * w1_sq[i] + b * w2_sq[i] + c * cross_re[i] + s * cross_im[i];
        p.values[i] = (v < 0.0) ? 0.0 : v;
    }
    return p;
}

DensityProfile shot_density(const ModeTable& table, int N, const CoherentParams& params) {
    const double xi = params.xi;
    const double fr = 2.0 * std::sqrt(xi * (1.0 - xi));
    // Re(W1 W2~ e^{i phi}) = cos(phi) Re(W1 W2~) - sin(phi) Im(W1 W2~)
    return table.combine(N * xi, N * (1.0 - xi), N * fr * std::cos(params.phi),
                         -N * fr * std::sin(params.phi), double(N));
}

DensityProfile shot_density(const WavepacketFamily& family, int N,
                            const CoherentParams& params, double t,
                            const SpatialGrid& grid) {
    return shot_density(ModeTable(family, t, grid), N, params);
}

DensityProfile operator_density(const ModeTable& table, const TwoModeState& state) {
    OneBodyMatrix m = one_body_matrix(state);
    // 2 Re(coh conj(W1) W2) = 2 Re(coh) Re(W1 W2~) + 2 Im(coh) Im(W1 W2~)
    return table.combine(m.n1, m.n2, 2.0 * m.coh.real(), 2.0 * m.coh.imag(),
                         double(state.N));
}

DensityProfile operator_density(const WavepacketFamily& family,
                                const TwoModeState& state, double t,
                                const SpatialGrid& grid) {
    return operator_density(ModeTable(family, t, grid), state);
}

double fringe_period(const WavepacketFamily& family, double t) {
    if (t <= 0.0) throw std::domain_error("fringe_period: undefined at t <= 0");
    const double sigma2 = family.sigma * family.sigma;
    const double tau = t / (2.0 * sigma2);
    // phase of W1 conj(W2) is exactly linear: -x d tau / (2 sigma^2 (1+tau^2)),
    // so the period tends to 2 pi t / d for tau >> 1
    return 4.0 * M_PI * sigma2 * (1.0 + tau * tau) / (tau * family.d);
}

void write_profile_csv(const DensityProfile& profile, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("write_profile_csv: cannot open " + path);
    std::fputs("x,density\n", f);
    for (int i = 0; i < profile.grid.n_points; ++i) {
        std::fprintf(f, "%.17g,%.17g\n", profile.grid.x(i), profile.values[i]);
    }
    std::fclose(f);
}

}  // namespace dwell

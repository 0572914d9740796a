#include "dwell/povm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace dwell {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

double xi_marginal_fock(int N, int k, double xi) {
    if (k < 0 || k > N) throw std::domain_error("xi_marginal_fock: need 0 <= k <= N");
    if (xi < 0.0 || xi > 1.0) throw std::domain_error("xi_marginal_fock: xi must lie in [0,1]");
    if ((xi == 0.0 && k > 0) || (xi == 1.0 && k < N)) return 0.0;
    double lg = std::log(double(N + 1)) + log_binomial(N, k);
    if (k > 0) lg += k * std::log(xi);
    if (k < N) lg += (N - k) * std::log(1.0 - xi);
    return std::exp(lg);
}

int default_xi_order(int N) { return N / 2 + 4; }
int default_phi_order(int N) { return std::max(64, N + 8); }

namespace {

// index of the single occupied Fock component, or -1
int fock_index(const TwoModeState& state) {
    for (int k = 0; k <= state.N; ++k) {
        if (std::norm(state.coeffs[k]) >= 1.0 - 1e-12) return k;
    }
    return -1;
}

}  // namespace

ShotSampler::ShotSampler(const TwoModeState& state, const RunConfig& config)
    : N_(state.N) {
    int k = fock_index(state);
    bool want_beta = config.sampler == SamplerKind::ExactBeta ||
                     (config.sampler == SamplerKind::Auto && k >= 0);
    if (want_beta) {
        if (k < 0) {
            throw std::invalid_argument(
                "ShotSampler: exact-beta sampling is only valid for Fock states");
        }
        exact_beta_ = true;
        fock_k_ = k;
        return;
    }

    n_xi_ = config.n_xi;
    n_phi_ = config.n_phi;
    if (n_xi_ < 64 || n_phi_ < 64) {
        throw std::invalid_argument("ShotSampler: grid-cdf resolution must be >= (64, 64)");
    }
    node_weight_.resize(std::size_t(n_xi_ + 1) * (n_phi_ + 1));
    for (int u = 0; u <= n_xi_; ++u) {
        double xi = double(u) / n_xi_;
        for (int v = 0; v <= n_phi_; ++v) {
            double phi = kTwoPi * v / n_phi_;
            node_weight_[std::size_t(u) * (n_phi_ + 1) + v] =
                povm_weight(state, CoherentParams(xi, phi));
        }
    }
    cell_cdf_.resize(std::size_t(n_xi_) * n_phi_);
    double acc = 0.0;
    const double area = (1.0 / n_xi_) * (kTwoPi / n_phi_);
    for (int u = 0; u < n_xi_; ++u) {
        for (int v = 0; v < n_phi_; ++v) {
            double m = 0.25 * (node(u, v) + node(u, v + 1) + node(u + 1, v) +
                               node(u + 1, v + 1)) * area;
            acc += m;
            cell_cdf_[std::size_t(u) * n_phi_ + v] = acc;
        }
    }
}

namespace {

// invert the CDF of the linear density (1-s)*e0 + s*e1 on [0,1]
double invert_linear_cdf(double e0, double e1, double r) {
    double delta = e1 - e0;
    double total = e0 + 0.5 * delta;
    if (total <= 0.0 || std::abs(delta) < 1e-14 * (std::abs(e0) + std::abs(e1) + 1e-300)) {
        return r;
    }
    double disc = e0 * e0 + 2.0 * delta * r * total;
    double s = (-e0 + std::sqrt(std::max(0.0, disc))) / delta;
    return std::clamp(s, 0.0, 1.0);
}

}  // namespace

CoherentParams ShotSampler::draw(RngStream& stream) const {
    if (exact_beta_) {
        double phi = kTwoPi * stream.uniform();
        // Beta(k+1, N-k+1) as the (k+1)-th order statistic of N+1 uniforms
        std::vector<double> u(N_ + 1);
        for (auto& x : u) x = stream.uniform();
        std::nth_element(u.begin(), u.begin() + fock_k_, u.end());
        return CoherentParams(u[fock_k_], phi);
    }

    double total = cell_cdf_.back();
    double target = stream.uniform() * total;
    auto it = std::upper_bound(cell_cdf_.begin(), cell_cdf_.end(), target);
    std::size_t cell = std::min<std::size_t>(it - cell_cdf_.begin(), cell_cdf_.size() - 1);
    int u = int(cell / n_phi_);
    int v = int(cell % n_phi_);

    double w00 = node(u, v), w01 = node(u, v + 1);
    double w10 = node(u + 1, v), w11 = node(u + 1, v + 1);

    // bilinear refinement: xi fraction from the phi-averaged edges, then
    // phi fraction from the conditional linear density
    double s = invert_linear_cdf(0.5 * (w00 + w01), 0.5 * (w10 + w11), stream.uniform());
    double f0 = (1.0 - s) * w00 + s * w10;
    double f1 = (1.0 - s) * w01 + s * w11;
    double q = invert_linear_cdf(f0, f1, stream.uniform());

    double xi = (u + s) / n_xi_;
    double phi = kTwoPi * (v + q) / n_phi_;
    return CoherentParams(std::clamp(xi, 0.0, 1.0), phi);
}

CoherentParams sample_shot(const TwoModeState& state, RngStream& stream,
                           const RunConfig& config) {
    return ShotSampler(state, config).draw(stream);
}

MonteCarloResult run_monte_carlo(const TwoModeState& state,
                                 const WavepacketFamily& family,
                                 const RunConfig& config) {
    if (config.n_shots < 1) throw std::invalid_argument("run_monte_carlo: n_shots must be >= 1");
    const int n_shots = config.n_shots;
    const int N = state.N;
    const ModeTable table(family, config.t, config.grid);
    const int n_points = config.grid.n_points;
    const ShotSampler sampler(state, config);

    // fixed-size shot blocks keep the reduction order independent of the
    // worker count, so output is byte-identical for any n_threads
    const int block_size = 64;
    const int n_blocks = (n_shots + block_size - 1) / block_size;
    std::vector<std::vector<double>> block_sum(n_blocks), block_sumsq(n_blocks);
    std::vector<ShotRecord> shots(n_shots);

    auto process_block = [&](int b) {
        auto& sum = block_sum[b];
        auto& sumsq = block_sumsq[b];
        sum.assign(n_points, 0.0);
        sumsq.assign(n_points, 0.0);
        const int lo = b * block_size;
        const int hi = std::min(n_shots, lo + block_size);
        std::vector<double> shot_vals(n_points);
        for (int i = lo; i < hi; ++i) {
            RngStream stream(config.master_seed, std::uint64_t(i));
            CoherentParams params = sampler.draw(stream);
            const double xi = params.xi;
            const double a = N * xi;
            const double bb = N * (1.0 - xi);
            const double fr = 2.0 * N * std::sqrt(xi * (1.0 - xi));
            const double c = fr * std::cos(params.phi);
            const double s = -fr * std::sin(params.phi);
            for (int p = 0; p < n_points; ++p) {
                double v = a * table.w1_sq[p] + bb * table.w2_sq[p] +
                           c * table.cross_re[p] + s * table.cross_im[p];
                shot_vals[p] = (v < 0.0) ? 0.0 : v;
            }
            if (config.noise_sigma > 0.0) {
                for (int p = 0; p < n_points; ++p) {
                    double u1 = stream.uniform();
                    double u2 = stream.uniform();
                    if (u1 <= 0.0) u1 = 0x1.0p-53;
                    double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
                    shot_vals[p] += config.noise_sigma * g;
                }
            }
            for (int p = 0; p < n_points; ++p) {
                sum[p] += shot_vals[p];
                sumsq[p] += shot_vals[p] * shot_vals[p];
            }
            shots[i].index = i;
            shots[i].params = params;
            if (config.keep_profiles) {
                DensityProfile prof;
                prof.grid = config.grid;
                prof.t = config.t;
                prof.atom_total = double(N);
                prof.values = shot_vals;
                shots[i].profile = std::move(prof);
            }
        }
    };

    const int n_threads = std::max(1, config.n_threads);
    if (n_threads == 1 || n_blocks == 1) {
        for (int b = 0; b < n_blocks; ++b) process_block(b);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int w = 0; w < n_threads; ++w) {
            pool.emplace_back([&] {
                for (int b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1)) {
                    process_block(b);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    MonteCarloResult result;
    result.average.grid = config.grid;
    result.average.t = config.t;
    result.average.atom_total = double(N);
    result.average.values.assign(n_points, 0.0);
    result.stderr_values.assign(n_points, 0.0);
    std::vector<double> sumsq(n_points, 0.0);
    for (int b = 0; b < n_blocks; ++b) {
        for (int p = 0; p < n_points; ++p) {
            result.average.values[p] += block_sum[b][p];
            sumsq[p] += block_sumsq[b][p];
        }
    }
    for (int p = 0; p < n_points; ++p) {
        double mean = result.average.values[p] / n_shots;
        result.average.values[p] = mean;
        if (n_shots > 1) {
            double var = (sumsq[p] - double(n_shots) * mean * mean) / (n_shots - 1);
            result.stderr_values[p] = std::sqrt(std::max(0.0, var) / n_shots);
        }
    }
    result.shots = std::move(shots);
    return result;
}

DensityProfile povm_average_quadrature(const TwoModeState& state,
                                       const WavepacketFamily& family, double t,
                                       const SpatialGrid& grid, int xi_order,
                                       int phi_order) {
    if (xi_order < 1 || phi_order < 1) {
        throw std::domain_error("povm_average_quadrature: orders must be >= 1");
    }
    const int N = state.N;
    const QuadratureRule xi_rule = gauss_legendre(xi_order, 0.0, 1.0);
    const double phi_w = kTwoPi / phi_order;

    // the profile is a fixed linear combination of the four mode products,
    // so only four scalars need to be accumulated over the quadrature nodes
    double a = 0.0, b = 0.0, c = 0.0, s = 0.0;
    for (int i = 0; i < xi_order; ++i) {
        const double xi = xi_rule.nodes[i];
        const double fr = 2.0 * N * std::sqrt(xi * (1.0 - xi));
        for (int j = 0; j < phi_order; ++j) {
            const double phi = phi_w * (j + 0.5);
            const double w = xi_rule.weights[i] * phi_w *
                             povm_weight(state, CoherentParams(xi, phi));
            a += w * N * xi;
            b += w * N * (1.0 - xi);
            c += w * fr * std::cos(phi);
            s -= w * fr * std::sin(phi);
        }
    }
    return ModeTable(family, t, grid).combine(a, b, c, s, double(N));
}

DensityProfile povm_average_fock_closed(int N, int k, const WavepacketFamily& family,
                                        double t, const SpatialGrid& grid) {
    if (k < 0 || k > N) throw std::domain_error("povm_average_fock_closed: need 0 <= k <= N");
    const double pref = double(N) / (N + 2);
    return ModeTable(family, t, grid)
        .combine(pref * (k + 1), pref * (N - k + 1), 0.0, 0.0, double(N));
}

DensityProfile trace_average_fock(int N, int k, const WavepacketFamily& family,
                                  double t, const SpatialGrid& grid) {
    if (k < 0 || k > N) throw std::domain_error("trace_average_fock: need 0 <= k <= N");
    return ModeTable(family, t, grid)
        .combine(double(k), double(N - k), 0.0, 0.0, double(N));
}

DensityProfile density_difference(int N, int k, const WavepacketFamily& family,
                                  double t, const SpatialGrid& grid) {
    if (k < 0 || k > N) throw std::domain_error("density_difference: need 0 <= k <= N");
    const double c1 = double(N) * (k + 1) / (N + 2) - k;
    const double c2 = double(N) * (N - k + 1) / (N + 2) - (N - k);
    ModeTable table(family, t, grid);
    // signed profile: bypass the nonnegativity clamp in ModeTable::combine
    DensityProfile p;
    p.grid = grid;
    p.t = t;
    p.atom_total = 0.0;
    p.values.resize(table.w1_sq.size());
    for (std::size_t i = 0; i < table.w1_sq.size(); ++i) {
        p.values[i] = c1 * table.w1_sq[i] + c2 * table.w2_sq[i];
    }
    return p;
}

}  // namespace dwell

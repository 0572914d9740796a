// dwell: double-well absorption-imaging simulator CLI.
//
// Subcommands: shot, run, compare, sample-dist, ground-state, selftest.
// Exit codes: 0 success, 1 config error, 2 numerical check failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwell/analysis.hpp"
#include "dwell/expansion.hpp"
#include "dwell/hilbert.hpp"
#include "dwell/numerics.hpp"
#include "dwell/povm.hpp"
#include "dwell/trap.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) {
            if (it.key() == k) { ok = true; break; }
        }
        if (!ok) throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    return obj.at(key).get<T>();
}

struct StateSpec {
    std::string type;  // fock | coherent | ground
    int N = 0;
    int k = 0;
    double xi = 0.5, phi = 0.0;
    dwell::TrapParams trap;
    double evolve_t = 0.0;
};

struct Scenario {
    StateSpec state;
    dwell::WavepacketFamily family;
    dwell::SpatialGrid grid;
    double t = 30.0;
    dwell::RunConfig run;
    std::optional<dwell::CoherentParams> fixed_shot;
    std::string out_dir = "out";
    json echo;  // parsed config, echoed into summary.json
};

dwell::SamplerKind parse_sampler(const std::string& s) {
    if (s == "auto") return dwell::SamplerKind::Auto;
    if (s == "exact-beta") return dwell::SamplerKind::ExactBeta;
    if (s == "grid-cdf") return dwell::SamplerKind::GridCdf;
    throw ConfigError("sampler must be one of auto, exact-beta, grid-cdf");
}

Scenario parse_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    Scenario sc;
    sc.echo = root;
    require_keys(root, "config", {"state", "family", "grid", "t", "run", "shot", "out_dir"});

    if (!root.contains("state")) throw ConfigError("missing 'state' section");
    const json& st = root.at("state");
    sc.state.type = st.value("type", "");
    if (sc.state.type == "fock") {
        require_keys(st, "state", {"type", "N", "k"});
        sc.state.N = st.at("N").get<int>();
        sc.state.k = st.at("k").get<int>();
    } else if (sc.state.type == "coherent") {
        require_keys(st, "state", {"type", "N", "xi", "phi"});
        sc.state.N = st.at("N").get<int>();
        sc.state.xi = st.at("xi").get<double>();
        sc.state.phi = st.at("phi").get<double>();
    } else if (sc.state.type == "ground") {
        require_keys(st, "state", {"type", "N", "trap", "evolve_t"});
        sc.state.N = st.at("N").get<int>();
        const json& tr = st.at("trap");
        require_keys(tr, "state.trap", {"e1", "e2", "u", "tt"});
        sc.state.trap.e1 = get_or(tr, "e1", 0.0);
        sc.state.trap.e2 = get_or(tr, "e2", 0.0);
        sc.state.trap.u = get_or(tr, "u", 0.0);
        sc.state.trap.tt = get_or(tr, "tt", 0.0);
        sc.state.evolve_t = get_or(st, "evolve_t", 0.0);
    } else {
        throw ConfigError("state.type must be fock, coherent or ground");
    }

    if (root.contains("family")) {
        const json& f = root.at("family");
        require_keys(f, "family", {"d", "sigma"});
        sc.family.d = get_or(f, "d", sc.family.d);
        sc.family.sigma = get_or(f, "sigma", sc.family.sigma);
        if (sc.family.d < 0.0 || sc.family.sigma <= 0.0) {
            throw ConfigError("family requires d >= 0 and sigma > 0");
        }
    }
    if (root.contains("grid")) {
        const json& g = root.at("grid");
        require_keys(g, "grid", {"x_min", "x_max", "n_points"});
        sc.grid.x_min = get_or(g, "x_min", sc.grid.x_min);
        sc.grid.x_max = get_or(g, "x_max", sc.grid.x_max);
        sc.grid.n_points = get_or(g, "n_points", sc.grid.n_points);
        if (!(sc.grid.x_min < sc.grid.x_max) || sc.grid.n_points < 2) {
            throw ConfigError("grid requires x_min < x_max and n_points >= 2");
        }
    }
    sc.t = get_or(root, "t", 30.0);
    if (root.contains("run")) {
        const json& r = root.at("run");
        require_keys(r, "run", {"n_shots", "master_seed", "keep_profiles", "sampler",
                                "n_xi", "n_phi", "noise_sigma"});
        sc.run.n_shots = get_or(r, "n_shots", 1);
        sc.run.master_seed = get_or<std::uint64_t>(r, "master_seed", 0);
        sc.run.keep_profiles = get_or(r, "keep_profiles", false);
        sc.run.sampler = parse_sampler(get_or<std::string>(r, "sampler", "auto"));
        sc.run.n_xi = get_or(r, "n_xi", 512);
        sc.run.n_phi = get_or(r, "n_phi", 256);
        sc.run.noise_sigma = get_or(r, "noise_sigma", 0.0);
        if (sc.run.n_shots < 1) throw ConfigError("run.n_shots must be >= 1");
        if (sc.run.sampler == dwell::SamplerKind::GridCdf &&
            (sc.run.n_xi < 64 || sc.run.n_phi < 64)) {
            throw ConfigError("grid-cdf sampler resolution must be >= (64, 64)");
        }
    }
    if (root.contains("shot")) {
        const json& s = root.at("shot");
        require_keys(s, "shot", {"xi", "phi"});
        try {
            sc.fixed_shot = dwell::CoherentParams(s.at("xi").get<double>(),
                                                  s.at("phi").get<double>());
        } catch (const std::domain_error& e) {
            throw ConfigError(e.what());
        }
    }
    sc.out_dir = get_or<std::string>(root, "out_dir", "out");
    sc.run.grid = sc.grid;
    sc.run.t = sc.t;
    return sc;
}

dwell::TwoModeState build_state(const StateSpec& spec) {
    try {
        if (spec.type == "fock") return dwell::fock_state(spec.N, spec.k);
        if (spec.type == "coherent") {
            return dwell::coherent_state(spec.N, dwell::CoherentParams(spec.xi, spec.phi));
        }
        auto gs = dwell::ground_state(spec.N, spec.trap);
        if (spec.evolve_t != 0.0) gs = dwell::evolve_in_trap(gs, spec.trap, spec.evolve_t);
        return gs;
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
}

void write_csv_columns(const std::string& path, const std::string& header,
                       const std::vector<std::vector<double>>& cols) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::fputs(header.c_str(), f);
    std::fputc('\n', f);
    const std::size_t rows = cols.empty() ? 0 : cols.front().size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::fprintf(f, c ? ",%.17g" : "%.17g", cols[c][i]);
        }
        std::fputc('\n', f);
    }
    std::fclose(f);
}

json fringe_metrics(const dwell::DensityProfile& profile,
                    const dwell::WavepacketFamily& family, double t, int N) {
    json m;
    if (t > 0.0 && N > 0) {
        double lf = dwell::fringe_period(family, t);
        auto w1 = dwell::shot_density(family, N, dwell::CoherentParams(1.0, 0.0), t,
                                      profile.grid);
        auto w2 = dwell::shot_density(family, N, dwell::CoherentParams(0.0, 0.0), t,
                                      profile.grid);
        m["fringe_period"] = lf;
        m["measured_fringe_spacing"] =
            dwell::measured_fringe_spacing(profile, w1, w2, 2.0 * lf);
        m["contrast"] = dwell::fringe_contrast(profile, 1.6 * lf);
    }
    return m;
}

void write_summary(const Scenario& sc, json extra, double elapsed_s) {
    json s;
    s["config"] = sc.echo;
    s["timing_seconds"] = elapsed_s;
    s.update(extra);
    std::ofstream out(fs::path(sc.out_dir) / "summary.json");
    out << s.dump(2) << "\n";
}

std::vector<double> grid_xs(const dwell::SpatialGrid& g) {
    std::vector<double> xs(g.n_points);
    for (int i = 0; i < g.n_points; ++i) xs[i] = g.x(i);
    return xs;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

int cmd_shot(const Scenario& sc) {
    auto t0 = Clock::now();
    auto state = build_state(sc.state);
    dwell::CoherentParams params;
    if (sc.fixed_shot) {
        params = *sc.fixed_shot;
    } else {
        dwell::RngStream stream(sc.run.master_seed, 0);
        params = dwell::sample_shot(state, stream, sc.run);
    }
    auto profile = dwell::shot_density(sc.family, state.N, params, sc.t, sc.grid);
    fs::create_directories(sc.out_dir);
    dwell::write_profile_csv(profile, (fs::path(sc.out_dir) / "profile.csv").string());

    json extra;
    extra["xi"] = params.xi;
    extra["phi"] = params.phi;
    extra["integrals"] = {{"profile", profile.integral()}};
    extra["fringes"] = fringe_metrics(profile, sc.family, sc.t, state.N);
    write_summary(sc, extra, seconds_since(t0));
    return 0;
}

int cmd_run(const Scenario& sc) {
    auto t0 = Clock::now();
    auto state = build_state(sc.state);
    auto result = dwell::run_monte_carlo(state, sc.family, sc.run);

    fs::create_directories(sc.out_dir);
    write_csv_columns((fs::path(sc.out_dir) / "profile.csv").string(), "x,density,stderr",
                      {grid_xs(sc.grid), result.average.values, result.stderr_values});

    std::vector<double> idx, xis, phis;
    for (const auto& shot : result.shots) {
        idx.push_back(double(shot.index));
        xis.push_back(shot.params.xi);
        phis.push_back(shot.params.phi);
    }
    write_csv_columns((fs::path(sc.out_dir) / "shots.csv").string(), "index,xi,phi",
                      {idx, xis, phis});

    json extra;
    extra["n_shots"] = sc.run.n_shots;
    extra["integrals"] = {{"profile", result.average.integral()}};
    extra["fringes"] = fringe_metrics(result.average, sc.family, sc.t, state.N);
    write_summary(sc, extra, seconds_since(t0));
    return 0;
}

int cmd_compare(const Scenario& sc) {
    auto t0 = Clock::now();
    if (sc.state.type != "fock") {
        throw ConfigError("compare requires a fock state spec");
    }
    const int N = sc.state.N, k = sc.state.k;
    auto closed = dwell::povm_average_fock_closed(N, k, sc.family, sc.t, sc.grid);
    auto trace = dwell::trace_average_fock(N, k, sc.family, sc.t, sc.grid);
    auto diff = dwell::density_difference(N, k, sc.family, sc.t, sc.grid);
    auto quad = dwell::povm_average_quadrature(dwell::fock_state(N, k), sc.family, sc.t,
                                               sc.grid, dwell::default_xi_order(N),
                                               dwell::default_phi_order(N));

    fs::create_directories(sc.out_dir);
    write_csv_columns((fs::path(sc.out_dir) / "compare.csv").string(),
                      "x,povm_closed,trace,difference,quadrature",
                      {grid_xs(sc.grid), closed.values, trace.values, diff.values,
                       quad.values});

    double max_dev = 0.0;
    for (int i = 0; i < sc.grid.n_points; ++i) {
        max_dev = std::max(max_dev, std::abs(closed.values[i] - quad.values[i]));
    }
    json extra;
    extra["max_closed_vs_quadrature"] = max_dev;
    extra["integrals"] = {{"povm_closed", closed.integral()},
                          {"trace", trace.integral()},
                          {"difference", diff.integral()}};
    write_summary(sc, extra, seconds_since(t0));
    return 0;
}

int cmd_sample_dist(const Scenario& sc) {
    auto t0 = Clock::now();
    auto state = build_state(sc.state);
    const int n_xi_bins = 64, n_phi_bins = 32;
    std::vector<double> xi_counts(n_xi_bins, 0.0), phi_counts(n_phi_bins, 0.0);

    dwell::ShotSampler sampler(state, sc.run);
    for (int i = 0; i < sc.run.n_shots; ++i) {
        dwell::RngStream stream(sc.run.master_seed, std::uint64_t(i));
        auto p = sampler.draw(stream);
        int bx = std::min(int(p.xi * n_xi_bins), n_xi_bins - 1);
        int bp = std::min(int(p.phi / (2.0 * M_PI) * n_phi_bins), n_phi_bins - 1);
        xi_counts[bx] += 1.0;
        phi_counts[bp] += 1.0;
    }

    // analytic marginals: phi-sum / xi-quadrature of the POVM weight
    const int n_phi_nodes = dwell::default_phi_order(state.N);
    auto xi_rule = dwell::gauss_legendre(dwell::default_xi_order(state.N), 0.0, 1.0);
    std::vector<double> xi_centers(n_xi_bins), xi_emp(n_xi_bins), xi_ana(n_xi_bins);
    for (int b = 0; b < n_xi_bins; ++b) {
        double xc = (b + 0.5) / n_xi_bins;
        xi_centers[b] = xc;
        xi_emp[b] = xi_counts[b] * n_xi_bins / double(sc.run.n_shots);
        double s = 0.0;
        for (int j = 0; j < n_phi_nodes; ++j) {
            double phi = 2.0 * M_PI * (j + 0.5) / n_phi_nodes;
            s += dwell::povm_weight(state, dwell::CoherentParams(xc, phi));
        }
        xi_ana[b] = s * 2.0 * M_PI / n_phi_nodes;
    }
    std::vector<double> phi_centers(n_phi_bins), phi_emp(n_phi_bins), phi_ana(n_phi_bins);
    for (int b = 0; b < n_phi_bins; ++b) {
        double pc = 2.0 * M_PI * (b + 0.5) / n_phi_bins;
        phi_centers[b] = pc;
        phi_emp[b] = phi_counts[b] * n_phi_bins / (2.0 * M_PI * sc.run.n_shots);
        double s = 0.0;
        for (std::size_t i = 0; i < xi_rule.nodes.size(); ++i) {
            s += xi_rule.weights[i] *
                 dwell::povm_weight(state, dwell::CoherentParams(xi_rule.nodes[i], pc));
        }
        phi_ana[b] = s;
    }

    fs::create_directories(sc.out_dir);
    write_csv_columns((fs::path(sc.out_dir) / "xi_hist.csv").string(),
                      "xi,empirical_density,analytic_density",
                      {xi_centers, xi_emp, xi_ana});
    write_csv_columns((fs::path(sc.out_dir) / "phi_hist.csv").string(),
                      "phi,empirical_density,analytic_density",
                      {phi_centers, phi_emp, phi_ana});

    json extra;
    extra["n_shots"] = sc.run.n_shots;
    if (sc.state.type == "fock") {
        // spot-check the binomial law at the bin centers
        double max_dev = 0.0;
        for (int b = 0; b < n_xi_bins; ++b) {
            max_dev = std::max(max_dev, std::abs(xi_ana[b] - 2.0 * M_PI *
                dwell::xi_marginal_fock(sc.state.N, sc.state.k, xi_centers[b]) /
                (2.0 * M_PI)));
        }
        extra["xi_marginal_max_dev"] = max_dev;
    }
    write_summary(sc, extra, seconds_since(t0));
    return 0;
}

int cmd_ground_state(const Scenario& sc) {
    auto t0 = Clock::now();
    if (sc.state.type != "ground") {
        throw ConfigError("ground-state requires a ground state spec");
    }
    auto gs = dwell::ground_state(sc.state.N, sc.state.trap);
    auto [diag, offdiag] = dwell::hamiltonian_tridiagonal(sc.state.N, sc.state.trap);
    auto spec = dwell::eigh_tridiagonal(diag, offdiag);

    std::vector<double> ks, re, im;
    for (int k = 0; k <= sc.state.N; ++k) {
        ks.push_back(double(k));
        re.push_back(gs.coeffs[k].real());
        im.push_back(gs.coeffs[k].imag());
    }
    fs::create_directories(sc.out_dir);
    write_csv_columns((fs::path(sc.out_dir) / "coeffs.csv").string(), "k,re,im",
                      {ks, re, im});

    json extra;
    extra["energy"] = spec.eigenvalues.front();
    if (sc.state.N % 2 == 0) {
        auto mott = dwell::fock_state(sc.state.N, sc.state.N / 2);
        extra["fidelity_mott"] = std::norm(dwell::overlap(mott, gs));
    }
    auto sf = dwell::coherent_state(sc.state.N, dwell::CoherentParams(0.5, 0.0));
    extra["fidelity_superfluid"] = std::norm(dwell::overlap(sf, gs));
    write_summary(sc, extra, seconds_since(t0));
    return 0;
}

// ---------------------------------------------------------------------------
// selftest: completeness, oracle chain, balanced-well coincidence, KS test

double beta_cdf_integer(int a, int b, double x) {
    // regularized incomplete beta for integer parameters via the binomial tail
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const int n = a + b - 1;
    double cdf = 0.0;
    for (int j = a; j <= n; ++j) {
        double lg = dwell::log_binomial(n, j) + j * std::log(x) + (n - j) * std::log1p(-x);
        cdf += std::exp(lg);
    }
    return std::min(cdf, 1.0);
}

bool check(const char* name, bool ok, int& failures) {
    std::printf("%-42s %s\n", name, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
    return ok;
}

int cmd_selftest() {
    int failures = 0;
    dwell::WavepacketFamily family;
    dwell::SpatialGrid grid;

    // completeness of the POVM weight on random states
    {
        bool ok = true;
        dwell::RngStream rng(42, 0);
        for (int N : {1, 5, 20}) {
            auto xi_rule = dwell::gauss_legendre(dwell::default_xi_order(N), 0.0, 1.0);
            int n_phi = dwell::default_phi_order(N);
            for (int trial = 0; trial < 10; ++trial) {
                dwell::TwoModeState st;
                st.N = N;
                st.coeffs.resize(N + 1);
                double nrm = 0.0;
                for (auto& c : st.coeffs) {
                    c = dwell::Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
                    nrm += std::norm(c);
                }
                for (auto& c : st.coeffs) c /= std::sqrt(nrm);
                double total = 0.0;
                for (std::size_t i = 0; i < xi_rule.nodes.size(); ++i) {
                    for (int j = 0; j < n_phi; ++j) {
                        double phi = 2.0 * M_PI * (j + 0.5) / n_phi;
                        total += xi_rule.weights[i] * (2.0 * M_PI / n_phi) *
                                 dwell::povm_weight(st, dwell::CoherentParams(
                                                            xi_rule.nodes[i], phi));
                    }
                }
                ok = ok && std::abs(total - 1.0) <= 1e-8;
            }
        }
        check("povm completeness", ok, failures);
    }

    // oracle chain: quadrature equals the Fock closed form
    {
        bool ok = true;
        for (int N : {2, 10}) {
            for (int k = 0; k <= N; ++k) {
                auto quad = dwell::povm_average_quadrature(
                    dwell::fock_state(N, k), family, 30.0, grid,
                    dwell::default_xi_order(N), dwell::default_phi_order(N));
                auto closed = dwell::povm_average_fock_closed(N, k, family, 30.0, grid);
                for (int i = 0; i < grid.n_points; ++i) {
                    double ref = std::max(std::abs(closed.values[i]), 1e-12);
                    if (std::abs(quad.values[i] - closed.values[i]) / ref > 1e-8) ok = false;
                }
            }
        }
        check("quadrature vs closed form (fock)", ok, failures);
    }

    // Monte-Carlo agreement with the closed form
    {
        dwell::RunConfig rc;
        rc.n_shots = 3000;
        rc.master_seed = 7;
        rc.grid = grid;
        rc.t = 30.0;
        auto mc = dwell::run_monte_carlo(dwell::fock_state(100, 0), family, rc);
        auto closed = dwell::povm_average_fock_closed(100, 0, family, 30.0, grid);
        int inside = 0, counted = 0;
        for (int i = 0; i < grid.n_points; ++i) {
            if (mc.stderr_values[i] <= 0.0) continue;
            ++counted;
            if (std::abs(mc.average.values[i] - closed.values[i]) <=
                4.0 * mc.stderr_values[i]) {
                ++inside;
            }
        }
        check("monte-carlo vs closed form (fock 100,0)",
              counted > 0 && inside >= int(0.98 * counted), failures);
    }

    // balanced-well coincidence
    {
        bool ok = true;
        for (int N : {2, 10, 100}) {
            double lhs = double(N) * (N / 2 + 1) / (N + 2);
            ok = ok && std::abs(lhs - N / 2.0) <= 1e-12 * N;
        }
        check("balanced-well coincidence", ok, failures);
    }

    // KS test of the sampled xi against the Beta law
    {
        const int N = 20, k = 3, n_draws = 20000;
        dwell::RunConfig rc;
        std::vector<double> xs(n_draws);
        dwell::ShotSampler sampler(dwell::fock_state(N, k), rc);
        for (int i = 0; i < n_draws; ++i) {
            dwell::RngStream stream(1234, std::uint64_t(i));
            xs[i] = sampler.draw(stream).xi;
        }
        std::sort(xs.begin(), xs.end());
        double ks = 0.0;
        for (int i = 0; i < n_draws; ++i) {
            double cdf = beta_cdf_integer(k + 1, N - k + 1, xs[i]);
            ks = std::max(ks, std::abs(cdf - double(i + 1) / n_draws));
            ks = std::max(ks, std::abs(cdf - double(i) / n_draws));
        }
        check("xi sampling KS vs beta law", ks <= 1.63 / std::sqrt(double(n_draws)),
              failures);
    }

    std::printf("%d check(s) failed\n", failures);
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-well absorption-imaging simulator"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    std::optional<std::uint64_t> seed_override;
    int threads = 1;
    app.add_option("--config", config_path, "scenario config file (JSON)");
    app.add_option("--seed", seed_override, "override run.master_seed");
    app.add_option("--out", out_override, "override out_dir");
    app.add_option("--threads", threads, "worker threads for shot generation");

    auto* shot = app.add_subcommand("shot", "single absorption image");
    auto* run = app.add_subcommand("run", "Monte-Carlo superposition of images");
    auto* compare = app.add_subcommand("compare", "POVM average vs operator average");
    auto* sample_dist = app.add_subcommand("sample-dist", "sampled (xi, phi) histograms");
    auto* ground = app.add_subcommand("ground-state", "trap ground state and fidelities");
    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
    for (auto* sub : {shot, run, compare, sample_dist, ground, selftest}) {
        sub->fallthrough();  // global flags may follow the subcommand
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (selftest->parsed()) return cmd_selftest();

        if (config_path.empty()) throw ConfigError("--config is required");
        Scenario sc = parse_scenario(config_path);
        if (seed_override) sc.run.master_seed = *seed_override;
        if (!out_override.empty()) sc.out_dir = out_override;
        sc.run.n_threads = std::max(1, threads);

        if (shot->parsed()) return cmd_shot(sc);
        if (run->parsed()) return cmd_run(sc);
        if (compare->parsed()) return cmd_compare(sc);
        if (sample_dist->parsed()) return cmd_sample_dist(sc);
        if (ground->parsed()) return cmd_ground_state(sc);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const CheckFailure& e) {
        std::cerr << "numerical check failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "dwell/hilbert.hpp"
#include "dwell/numerics.hpp"

using namespace dwell;

namespace {

TwoModeState random_state(int N, std::mt19937& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TwoModeState s;
    s.N = N;
    s.coeffs.resize(N + 1);
    double nrm = 0.0;
    for (auto& c : s.coeffs) {
        c = Complex(u(gen), u(gen));
        nrm += std::norm(c);
    }
    for (auto& c : s.coeffs) c /= std::sqrt(nrm);
    return s;
}

// direct evaluation of the bra overlap <N;xi,phi|N;k>
Complex overlap_formula(int N, int k, double xi, double phi) {
    double amp = std::exp(0.5 * log_binomial(N, k)) * std::pow(xi, 0.5 * k) *
                 std::pow(1.0 - xi, 0.5 * (N - k));
    double arg = -phi * (k - 0.5 * N);
    return amp * Complex(std::cos(arg), std::sin(arg));
}

// tensor-product integral of povm_weight over the full (xi, phi) domain
double completeness_integral(const TwoModeState& s) {
    auto xi_rule = gauss_legendre(s.N / 2 + 4, 0.0, 1.0);
    int n_phi = std::max(64, s.N + 8);
    double total = 0.0;
    for (std::size_t i = 0; i < xi_rule.nodes.size(); ++i) {
        for (int j = 0; j < n_phi; ++j) {
            double phi = 2.0 * M_PI * (j + 0.5) / n_phi;
            total += xi_rule.weights[i] * (2.0 * M_PI / n_phi) *
                     povm_weight(s, CoherentParams(xi_rule.nodes[i], phi));
        }
    }
    return total;
}

}  // namespace

TEST_CASE("fock_state basis vectors") {
    auto s = fock_state(2, 1);
    CHECK(s.coeffs[0] == Complex(0.0, 0.0));
    CHECK(s.coeffs[1] == Complex(1.0, 0.0));
    CHECK(s.coeffs[2] == Complex(0.0, 0.0));

    auto vac = fock_state(0, 0);
    CHECK(vac.coeffs.size() == 1);
    CHECK(vac.coeffs[0] == Complex(1.0, 0.0));

    for (int k = 0; k <= 5; ++k) {
        CHECK(fock_state(5, k).norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(fock_state(3, 4), std::domain_error);
    CHECK_THROWS_AS(fock_state(3, -1), std::domain_error);
}

TEST_CASE("coherent_state hand-evaluated amplitudes") {
    auto s = coherent_state(2, CoherentParams(0.5, 0.0));
    CHECK(s.coeffs[0].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.coeffs[1].real() == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
    CHECK(s.coeffs[2].real() == doctest::Approx(0.5).epsilon(1e-14));

    auto endpoint = coherent_state(5, CoherentParams(1.0, 1.3));
    CHECK(std::abs(endpoint.coeffs[5]) == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 0; k < 5; ++k) CHECK(std::abs(endpoint.coeffs[k]) == 0.0);
}

TEST_CASE("coherent_state occupation convention: <n1-n2> = N(2 xi - 1)") {
    // mode 1 carries sqrt(xi) e^{+i phi/2}, so the relative mean occupation
    // (n1-n2)/N equals 2 xi - 1 (the opposite sign labelling also appears in
    // the literature; this project uses the ket convention throughout)
    for (double xi : {0.0, 0.25, 0.5, 0.8, 1.0}) {
        auto s = coherent_state(12, CoherentParams(xi, 0.7));
        auto m = one_body_matrix(s);
        CHECK(m.n1 - m.n2 == doctest::Approx(12.0 * (2.0 * xi - 1.0)).epsilon(1e-10));
    }
}

TEST_CASE("overlap basics") {
    std::mt19937 gen(3);
    auto s = random_state(6, gen);
    CHECK(overlap(s, s).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(overlap(s, s).imag()) < 1e-14);

    CHECK(std::abs(overlap(fock_state(4, 1), fock_state(4, 3))) == 0.0);
    CHECK_THROWS_AS(overlap(fock_state(3, 1), fock_state(4, 1)), std::domain_error);
}

TEST_CASE("overlap with fock states matches the closed formula") {
    for (int N : {1, 4, 9}) {
        for (int k = 0; k <= N; ++k) {
            CoherentParams p(0.37, 2.1);
            Complex got = overlap(coherent_state(N, p), fock_state(N, k));
            Complex want = overlap_formula(N, k, p.xi, p.phi);
            CHECK(std::abs(got - want) < 1e-12);
        }
    }
}

TEST_CASE("conjugate symmetry of overlap") {
    std::mt19937 gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_state(8, gen);
        auto b = random_state(8, gen);
        Complex ab = overlap(a, b), ba = overlap(b, a);
        CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
    }
}

TEST_CASE("povm_weight closed forms") {
    // fock(1,0): (N+1)/(2 pi) * (1-xi) = (1-xi)/pi
    for (double xi : {0.0, 0.3, 0.9}) {
        double w = povm_weight(fock_state(1, 0), CoherentParams(xi, 1.0));
        CHECK(w == doctest::Approx((1.0 - xi) / M_PI).epsilon(1e-12));
    }
    // general fock: binomial law times (N+1)/(2 pi)
    for (int N : {3, 7}) {
        for (int k = 0; k <= N; ++k) {
            double xi = 0.42;
            double want = (N + 1) / (2.0 * M_PI) *
                          std::exp(log_binomial(N, k) + k * std::log(xi) +
                                   (N - k) * std::log(1.0 - xi));
            double got = povm_weight(fock_state(N, k), CoherentParams(xi, 0.5));
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("povm_weight integrates to one (completeness)") {
    std::mt19937 gen(17);
    for (int N : {1, 5, 12, 30}) {
        for (int trial = 0; trial < 50; ++trial) {
            auto s = random_state(N, gen);
            CHECK(completeness_integral(s) == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("resolution of identity reconstructs fock coefficients") {
    for (int N : {2, 5, 10}) {
        auto xi_rule = gauss_legendre(N / 2 + 6, 0.0, 1.0);
        int n_phi = std::max(64, 2 * N + 8);
        for (int k = 0; k <= N; ++k) {
            std::vector<Complex> recon(N + 1, Complex(0, 0));
            for (std::size_t i = 0; i < xi_rule.nodes.size(); ++i) {
                for (int j = 0; j < n_phi; ++j) {
                    double phi = 2.0 * M_PI * (j + 0.5) / n_phi;
                    CoherentParams p(xi_rule.nodes[i], phi);
                    auto coh = coherent_state(N, p);
                    Complex amp = overlap(coh, fock_state(N, k));  // <N;xi,phi|N;k>
                    double w = (N + 1) * xi_rule.weights[i] / n_phi;
                    for (int m = 0; m <= N; ++m) recon[m] += w * amp * coh.coeffs[m];
                }
            }
            for (int m = 0; m <= N; ++m) {
                CHECK(std::abs(recon[m] - (m == k ? 1.0 : 0.0)) < 1e-6);
            }
        }
    }
}

TEST_CASE("one_body_matrix on reference states") {
    auto m = one_body_matrix(fock_state(9, 4));
    CHECK(m.n1 == doctest::Approx(4.0));
    CHECK(m.n2 == doctest::Approx(5.0));
    CHECK(std::abs(m.coh) == 0.0);

    for (double xi : {0.2, 0.5}) {
        double phi = 1.1;
        auto c = one_body_matrix(coherent_state(20, CoherentParams(xi, phi)));
        CHECK(c.n1 == doctest::Approx(20.0 * xi).epsilon(1e-10));
        CHECK(c.n2 == doctest::Approx(20.0 * (1.0 - xi)).epsilon(1e-10));
        Complex want = 20.0 * std::sqrt(xi * (1.0 - xi)) *
                       Complex(std::cos(phi), -std::sin(phi));
        CHECK(std::abs(c.coh - want) < 1e-10);
    }

    auto vac = one_body_matrix(fock_state(0, 0));
    CHECK(vac.n1 == 0.0);
    CHECK(vac.n2 == 0.0);
    CHECK(std::abs(vac.coh) == 0.0);
}

TEST_CASE("one_body_matrix by explicit ladder-operator oracle") {
    // build a1^t a2 as a dense matrix in the Fock basis for small N and
    // compare <a1^t a2> against one_body_matrix
    std::mt19937 gen(23);
    for (int N : {2, 3, 4}) {
        auto s = random_state(N, gen);
        Complex coh(0, 0);
        for (int k = 0; k + 1 <= N; ++k) {
            // a1^t a2 |N;k> = sqrt((k+1)(N-k)) |N;k+1>
            coh += std::conj(s.coeffs[k + 1]) * s.coeffs[k] *
                   std::sqrt(double(k + 1) * double(N - k));
        }
        auto m = one_body_matrix(s);
        CHECK(std::abs(m.coh - coh) < 1e-12);
        CHECK(m.n1 + m.n2 == doctest::Approx(double(N)).epsilon(1e-9));
    }
}

TEST_CASE("coherent_gram closed form") {
    CoherentParams p(0.5, 0.0);
    CHECK(std::abs(coherent_gram(10, p, p) - 1.0) < 1e-12);

    for (int N : {1, 3, 8}) {
        Complex g = coherent_gram(N, CoherentParams(0.5, 0.0), CoherentParams(0.5, M_PI));
        CHECK(std::abs(g) < 1e-14);
    }

    // |gram| strictly decreases with N for distinct parameters and
    // eventually falls below 1e-3 (|a+b| ~ 0.984 here, so around N ~ 430)
    CoherentParams a(0.5, 0.0), b(0.6, 0.3);
    double prev = 1.0;
    for (int N = 1; N <= 200; ++N) {
        double g = std::abs(coherent_gram(N, a, b));
        CHECK(g < prev);
        prev = g;
    }
    CHECK(std::abs(coherent_gram(500, a, b)) < 1e-3);
}

TEST_CASE("coherent_gram equals the vector dot product") {
    for (int N : {1, 5, 17}) {
        CoherentParams a(0.31, 0.9), b(0.74, 4.0);
        Complex via_dot = overlap(coherent_state(N, a), coherent_state(N, b));
        Complex closed = coherent_gram(N, a, b);
        CHECK(std::abs(via_dot - closed) < 1e-10);
    }
}

TEST_CASE("CoherentParams validation and phase reduction") {
    CHECK_THROWS_AS(CoherentParams(-0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(CoherentParams(1.1, 0.0), std::domain_error);
    CoherentParams p(0.5, 2.0 * M_PI + 1.0);
    CHECK(p.phi == doctest::Approx(1.0).epsilon(1e-12));
    CoherentParams q(0.5, -1.0);
    CHECK(q.phi == doctest::Approx(2.0 * M_PI - 1.0).epsilon(1e-12));
}

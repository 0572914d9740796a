#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dwell {

/// Gauss-Legendre rule on [a,b]: integrates polynomials up to degree
/// 2*order-1 exactly.
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing abscissae in [a,b]
    std::vector<double> weights;  // positive, sum to b-a
    int order = 0;
};

/// Full spectrum of a real symmetric tridiagonal matrix.
struct TridiagonalSpectrum {
    std::vector<double> eigenvalues;            // ascending
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] pairs with eigenvalues[i]
};

/// Counter-keyed deterministic RNG stream. Identical (master_seed, stream_id)
/// reproduce the same sequence on any machine and any execution schedule.
/// xoshiro256** core, seeded through SplitMix64.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t next_u64();
    /// Uniform variate in [0,1) with 53 random bits.
    double uniform();

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::uint64_t s_[4];
};

/// ln C(n,k). Exact log-sum for n < 20, log-gamma otherwise.
/// Throws std::domain_error for k > n.
double log_binomial(int n, int k);

/// Gauss-Legendre nodes and weights on [a,b], computed by Newton iteration
/// on the Legendre recurrence. Throws std::domain_error for order < 1 or a >= b.
QuadratureRule gauss_legendre(int order, double a, double b);

/// Eigen-decomposition of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal. Implicit-shift QL with eigenvector accumulation.
/// Requires offdiag.size() == diag.size() - 1.
TridiagonalSpectrum eigh_tridiagonal(const std::vector<double>& diag,
                                     const std::vector<double>& offdiag);

}  // namespace dwell

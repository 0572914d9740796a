#include "dwell/numerics.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace dwell {

double log_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("log_binomial: need 0 <= k <= n");
    }
    if (k == 0 || k == n) return 0.0;
    int kk = std::min(k, n - k);  // canonical form keeps the symmetry exact
    k = kk;
    if (n < 20) {
        // exact summation of logs for small arguments
        double s = 0.0;
        for (int i = 1; i <= kk; ++i) {
            s += std::log(double(n - kk + i)) - std::log(double(i));
        }
        return s;
    }
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0);
}

QuadratureRule gauss_legendre(int order, double a, double b) {
    if (order < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
    if (!(a < b)) throw std::domain_error("gauss_legendre: need a < b");

    const int n = order;
    QuadratureRule rule;
    rule.order = order;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double eps = 1e-15;
    const int m = (n + 1) / 2;  // roots come in +/- pairs on [-1,1]
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: p1 = P_n(x), p2 = P_{n-1}(x)
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (x * p1 - p2) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < eps) break;
        }
        double xl = 0.5 * (b - a);
        double xm = 0.5 * (b + a);
        double w = 2.0 * xl / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = xm - xl * x;
        rule.nodes[n - 1 - i] = xm + xl * x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace {

inline double hypot2(double a, double b) { return std::hypot(a, b); }

}  // namespace

TridiagonalSpectrum eigh_tridiagonal(const std::vector<double>& diag,
                                     const std::vector<double>& offdiag) {
    const int n = int(diag.size());
    if (n == 0) throw std::domain_error("eigh_tridiagonal: empty matrix");
    if (int(offdiag.size()) != n - 1) {
        throw std::domain_error("eigh_tridiagonal: offdiag length must be diag length - 1");
    }

    std::vector<double> d = diag;
    std::vector<double> e(n, 0.0);
    for (int i = 0; i < n - 1; ++i) e[i] = offdiag[i];

    // z: eigenvector accumulation, column-major as z[col][row], starts at I
    std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) z[i][i] = 1.0;

    // implicit-shift QL (tql2)
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) {
                    throw std::runtime_error("eigh_tridiagonal: QL failed to converge");
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double bb = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * bb;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - bb;
                    for (int k = 0; k < n; ++k) {
                        f = z[i + 1][k];
                        z[i + 1][k] = s * z[i][k] + c * f;
                        z[i][k] = c * z[i][k] - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // sort ascending, carrying eigenvectors
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j) {
            if (d[idx[j]] < d[idx[k]]) k = j;
        }
        std::swap(idx[i], idx[k]);
    }

    TridiagonalSpectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors.resize(n);
    for (int i = 0; i < n; ++i) {
        spec.eigenvalues[i] = d[idx[i]];
        spec.eigenvectors[i] = z[idx[i]];
    }
    return spec;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t zz = (state += 0x9E3779B97F4A7C15ULL);
        zz = (zz ^ (zz >> 30)) * 0xBF58476D1CE4E5B9ULL;
        zz = (zz ^ (zz >> 27)) * 0x94D049BB133111EBULL;
        return zz ^ (zz >> 31);
    }
};

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id) {
    SplitMix64 sm{master_seed ^ (0xD2B74407B1CE6E93ULL * (stream_id + 1))};
    for (auto& w : s_) w = sm.next();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256**
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace dwell

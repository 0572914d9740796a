#include "dwell/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dwell {

std::vector<double> local_maxima_positions(const DensityProfile& profile,
                                           double min_height) {
    std::vector<double> out;
    const auto& v = profile.values;
    const double h = profile.grid.spacing();
    for (int i = 1; i + 1 < int(v.size()); ++i) {
        if (v[i] > v[i - 1] && v[i] >= v[i + 1] && v[i] >= min_height) {
            // parabolic refinement through the three samples
            double denom = v[i - 1] - 2.0 * v[i] + v[i + 1];
            double shift = (denom != 0.0) ? 0.5 * (v[i - 1] - v[i + 1]) / denom : 0.0;
            shift = std::clamp(shift, -0.5, 0.5);
            out.push_back(profile.grid.x(i) + shift * h);
        }
    }
    return out;
}

double measured_fringe_spacing(const DensityProfile& profile, double x_window) {
    double peak = 0.0;
    for (double v : profile.values) peak = std::max(peak, v);
    auto maxima = local_maxima_positions(profile, 0.02 * peak);
    std::vector<double> central;
    for (double x : maxima) {
        if (std::abs(x) <= x_window) central.push_back(x);
    }
    if (central.size() < 2) return 0.0;
    std::vector<double> gaps;
    for (std::size_t i = 1; i < central.size(); ++i) {
        gaps.push_back(central[i] - central[i - 1]);
    }
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    return gaps[gaps.size() / 2];
}

double measured_fringe_spacing(const DensityProfile& pattern,
                               const DensityProfile& well1,
                               const DensityProfile& well2, double x_window) {
    if (pattern.values.size() != well1.values.size() ||
        pattern.values.size() != well2.values.size()) {
        throw std::invalid_argument("measured_fringe_spacing: mismatched grids");
    }
    DensityProfile quotient;
    quotient.grid = pattern.grid;
    quotient.t = pattern.t;
    quotient.values.resize(pattern.values.size());
    for (std::size_t i = 0; i < pattern.values.size(); ++i) {
        double env = std::sqrt(well1.values[i] * well2.values[i]);
        double q = (env > 1e-12)
                       ? (pattern.values[i] - 0.5 * (well1.values[i] + well2.values[i])) / env
                       : -2.0;
        quotient.values[i] = q + 2.0;  // shift positive so peak finding applies
    }
    double peak = 0.0;
    for (double v : quotient.values) peak = std::max(peak, v);
    auto maxima = local_maxima_positions(quotient, 0.5 * peak);
    std::vector<double> central;
    for (double x : maxima) {
        if (std::abs(x) <= x_window) central.push_back(x);
    }
    if (central.size() < 2) return 0.0;
    std::vector<double> gaps;
    for (std::size_t i = 1; i < central.size(); ++i) {
        gaps.push_back(central[i] - central[i - 1]);
    }
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    return gaps[gaps.size() / 2];
}

double fringe_contrast(const DensityProfile& profile, double x_window) {
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i < profile.grid.n_points; ++i) {
        if (std::abs(profile.grid.x(i)) > x_window) continue;
        lo = std::min(lo, profile.values[i]);
        hi = std::max(hi, profile.values[i]);
    }
    if (!(hi > 0.0)) return 0.0;
    return (hi - lo) / (hi + lo);
}

double l2_distance(const DensityProfile& a, const DensityProfile& b) {
    if (a.values.size() != b.values.size()) {
        throw std::invalid_argument("l2_distance: mismatched grids");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        double d = a.values[i] - b.values[i];
        s += d * d;
    }
    return std::sqrt(s * a.grid.spacing());
}

}  // namespace dwell

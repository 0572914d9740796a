#pragma once

#include <vector>

#include "dwell/expansion.hpp"

namespace dwell {

/// Positions of interior local maxima with parabolic sub-grid refinement.
/// Maxima below min_height are skipped.
std::vector<double> local_maxima_positions(const DensityProfile& profile,
                                           double min_height);

/// Median spacing of adjacent fringe maxima inside |x| <= x_window.
/// Returns 0 when fewer than two maxima are found.
double measured_fringe_spacing(const DensityProfile& profile, double x_window);

/// Fringe spacing measured on the normalized interference quotient
/// (pattern - (well1+well2)/2) / sqrt(well1*well2), which removes the
/// envelope pull on the peak positions. well1/well2 are the single-well
/// patterns (xi = 1 and xi = 0) with the same atom number.
double measured_fringe_spacing(const DensityProfile& pattern,
                               const DensityProfile& well1,
                               const DensityProfile& well2, double x_window);

/// Michelson contrast (max-min)/(max+min) over |x| <= x_window.
double fringe_contrast(const DensityProfile& profile, double x_window);

/// L2 distance between two profiles on the same grid (trapezoid norm).
double l2_distance(const DensityProfile& a, const DensityProfile& b);

}  // namespace dwell

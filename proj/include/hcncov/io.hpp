#pragma once

#include <span>
#include <string>

#include "hcncov/curves.hpp"
#include "hcncov/point_process.hpp"

// CSV writers. All numbers are rendered with %.12g, which keeps repeated
// runs byte-identical; failures to open or write throw IoError.

namespace hcncov::io {

std::string format_double(double x);

// Header x_m,y_m.
void write_points_csv(const std::string& path, const pp::PointSet& set);

// Header z_m,pdf_per_m,survival; the three spans must have equal length.
void write_distance_law_csv(const std::string& path, std::span<const double> z,
                            std::span<const double> pdf, std::span<const double> survival);

// Header r_m,cdf.
void write_distance_cdf_csv(const std::string& path, const DistanceCdf& cdf);

// Header gamma_dB,value,method,ci_halfwidth; one row per (curve, threshold),
// curves in the given order. The ci field is left empty for curves without
// half-widths (analytic methods).
void write_coverage_csv(const std::string& path, std::span<const CoverageCurve> curves);

} // namespace hcncov::io

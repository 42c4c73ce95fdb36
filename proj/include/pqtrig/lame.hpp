#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "pqtrig/numeric_config.hpp"
#include "pqtrig/pq_functions.hpp"

namespace pqtrig {

enum class CurveSource { C_param, D_param };

std::string_view to_string(CurveSource s);

struct CurveSample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  CurveSource source = CurveSource::C_param;
  int quadrant = 1;
};

/// x = cos(t)^(2/p), y = sin(t)^(2/q) at n uniform t in [0, pi/2]. The end
/// samples are exactly (1, 0) and (0, 1).
std::vector<CurveSample> sample_curve_C(const PQParams& P, int n);

/// x = sin_{p,q}(t), y = cos_{p,q}(t) at n uniform t in
/// [m, pi_{p,q}/2 - m], m = 1e-6 pi_{p,q}/2, with the end points (0, 1) at
/// t = 0 and (1, 0) at t = pi_{p,q}/2 added analytically: n + 2 samples.
std::vector<CurveSample> sample_curve_D(const PQParams& P, int n, const NumericConfig& cfg = {});

/// The input followed by its reflections (-x, y), (-x, -y), (x, -y), tagged
/// quadrants 2, 3 and 4.
std::vector<CurveSample> extend_four_quadrants(const std::vector<CurveSample>& samples);

/// |x|^p + |y|^q - 1 for C samples, |x|^q + |y|^p - 1 for D samples.
double curve_residual(const PQParams& P, const CurveSample& s);

/// Mean distance between consecutive samples.
double mean_arc_spacing(const std::vector<CurveSample>& samples);

/// Symmetric Hausdorff distance between the point set of C and the point set
/// of D with coordinates swapped (so both satisfy x^p + y^q = 1), each point
/// measured against the other set's polyline.
double curve_set_distance(const std::vector<CurveSample>& c, const std::vector<CurveSample>& d);

/// Header t,x,y,source,quadrant.
void write_curve_csv(std::ostream& out, const std::vector<CurveSample>& samples);

}  // namespace pqtrig

#include "pqtrig/lame.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pqtrig/csv.hpp"
#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {

void require_n(int n) {
  if (n < 2) {
    throw InvalidParameter("curve sample count must be >= 2, got " + std::to_string(n));
  }
}

struct Point {
  double x;
  double y;
};

double segment_distance(Point p, Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double u = 0.0;
  if (len2 > 0.0) {
    u = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  }
  return std::hypot(p.x - (a.x + u * dx), p.y - (a.y + u * dy));
}

double directed_distance(const std::vector<Point>& from, const std::vector<Point>& to) {
  double worst = 0.0;
  for (const auto& p : from) {
    double best = std::hypot(p.x - to.front().x, p.y - to.front().y);
    for (std::size_t i = 0; i + 1 < to.size(); ++i) {
      best = std::min(best, segment_distance(p, to[i], to[i + 1]));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<Point> sorted_by_x(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x; });
  return pts;
}

}  // namespace

std::string_view to_string(CurveSource s) {
  return s == CurveSource::C_param ? "C_param" : "D_param";
}

std::vector<CurveSample> sample_curve_C(const PQParams& P, int n) {
  require_n(n);
  const double half = std::numbers::pi / 2.0;
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    CurveSample s;
    s.source = CurveSource::C_param;
    if (i == 0) {
      s = {0.0, 1.0, 0.0, CurveSource::C_param, 1};
    } else if (i == n - 1) {
      s = {half, 0.0, 1.0, CurveSource::C_param, 1};
    } else {
      s.t = half * i / (n - 1);
      s.x = std::pow(std::cos(s.t), 2.0 / P.p());
      s.y = std::pow(std::sin(s.t), 2.0 / P.q());
    }
    out.push_back(s);
  }
  return out;
}

std::vector<CurveSample> sample_curve_D(const PQParams& P, int n, const NumericConfig& cfg) {
  require_n(n);
  const double half = pi_pq_half(P, cfg);
  const double margin = 1e-6 * half;
  const double lo = margin;
  const double hi = half - margin;
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n) + 2);
  out.push_back({0.0, 0.0, 1.0, CurveSource::D_param, 1});
  for (int i = 0; i < n; ++i) {
    const double t = lo + (hi - lo) * i / (n - 1);
    const auto sc = sin_cos_pq(P, t, cfg);
    out.push_back({t, sc.sin, sc.cos, CurveSource::D_param, 1});
  }
  out.push_back({half, 1.0, 0.0, CurveSource::D_param, 1});
  return out;
}

std::vector<CurveSample> extend_four_quadrants(const std::vector<CurveSample>& samples) {
  std::vector<CurveSample> out;
  out.reserve(samples.size() * 4);
  out.insert(out.end(), samples.begin(), samples.end());
  constexpr int sx[] = {-1, -1, 1};
  constexpr int sy[] = {1, -1, -1};
  for (int k = 0; k < 3; ++k) {
    for (auto s : samples) {
      s.x *= sx[k];
      s.y *= sy[k];
      s.quadrant = k + 2;
      out.push_back(s);
    }
  }
  return out;
}

double curve_residual(const PQParams& P, const CurveSample& s) {
  const double ex = s.source == CurveSource::C_param ? P.p() : P.q();
  const double ey = s.source == CurveSource::C_param ? P.q() : P.p();
  return std::pow(std::abs(s.x), ex) + std::pow(std::abs(s.y), ey) - 1.0;
}

double mean_arc_spacing(const std::vector<CurveSample>& samples) {
  if (samples.size() < 2) {
    return 0.0;
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    total += std::hypot(samples[i + 1].x - samples[i].x, samples[i + 1].y - samples[i].y);
  }
  return total / static_cast<double>(samples.size() - 1);
}

double curve_set_distance(const std::vector<CurveSample>& c, const std::vector<CurveSample>& d) {
  if (c.empty() || d.empty()) {
    throw InvalidParameter("curve_set_distance: empty sample set");
  }
  std::vector<Point> pc;
  std::vector<Point> pd;
  for (const auto& s : c) {
    pc.push_back({s.x, s.y});
  }
  for (const auto& s : d) {
    pd.push_back({s.y, s.x});
  }
  pc = sorted_by_x(std::move(pc));
  pd = sorted_by_x(std::move(pd));
  return std::max(directed_distance(pc, pd), directed_distance(pd, pc));
}

void write_curve_csv(std::ostream& out, const std::vector<CurveSample>& samples) {
  out << "t,x,y,source,quadrant\n";
  for (const auto& s : samples) {
    csv::write_row(out, {csv::format_double(s.t), csv::format_double(s.x),
                         csv::format_double(s.y), to_string(s.source),
                         std::to_string(s.quadrant)});
  }
}

}  // namespace pqtrig

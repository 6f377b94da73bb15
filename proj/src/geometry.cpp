#include "rrts/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rrts {

namespace {

void require_same_dim(const Config& a, const Config& b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

}  // namespace

double distance(const Config& a, const Config& b) {
  require_same_dim(a, b, "distance");
  double sq = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = b[k] - a[k];
    sq += d * d;
  }
  return std::sqrt(sq);
}

Config steer_point(const Config& a, const Config& b, double s) {
  require_same_dim(a, b, "steer_point");
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("steer_point: s out of [0,1]: " + std::to_string(s));
  }
  if (s == 0.0) return a;
  if (s == 1.0) return b;
  Config out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = (1.0 - s) * a[k] + s * b[k];
  }
  return out;
}

double near_radius(std::uint64_t i, int dim, double gamma, std::optional<double> cap) {
  if (gamma <= 0.0) throw std::invalid_argument("near_radius: gamma must be positive");
  if (dim < 1) throw std::invalid_argument("near_radius: dim must be >= 1");
  const double n = std::max<std::uint64_t>(i, 2);
  double r = gamma * std::pow(std::log(n) / n, 1.0 / static_cast<double>(dim));
  if (cap) r = std::min(r, *cap);
  return r;
}

bool segment_hits_box(const Config& a, const Config& b, const Box& box) {
  require_same_dim(a, b, "segment_hits_box");
  require_same_dim(a, box.lo, "segment_hits_box");
  double tmin = 0.0;
  double tmax = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = b[k] - a[k];
    if (d == 0.0) {
      if (a[k] < box.lo[k] || a[k] > box.hi[k]) return false;
      continue;
    }
    double t1 = (box.lo[k] - a[k]) / d;
    double t2 = (box.hi[k] - a[k]) / d;
    if (t1 > t2) std::swap(t1, t2);
    tmin = std::max(tmin, t1);
    tmax = std::min(tmax, t2);
    if (tmin > tmax) return false;
  }
  return true;
}

double point_segment_distance(const Config& p, const Config& a, const Config& b) {
  require_same_dim(p, a, "point_segment_distance");
  require_same_dim(a, b, "point_segment_distance");
  double ab_sq = 0.0;
  double ap_dot_ab = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double d = b[k] - a[k];
    ab_sq += d * d;
    ap_dot_ab += (p[k] - a[k]) * d;
  }
  double t = 0.0;
  if (ab_sq > 0.0) t = std::clamp(ap_dot_ab / ab_sq, 0.0, 1.0);
  double sq = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double d = p[k] - (a[k] + t * (b[k] - a[k]));
    sq += d * d;
  }
  return std::sqrt(sq);
}

bool segment_hits_ball(const Config& a, const Config& b, const Ball& ball) {
  return point_segment_distance(ball.center, a, b) <= ball.radius;
}

double unit_ball_measure(int dim) {
  if (dim < 1) throw std::invalid_argument("unit_ball_measure: dim must be >= 1");
  const double n = static_cast<double>(dim);
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

double ball_measure(double r, int dim) {
  if (r <= 0.0) throw std::invalid_argument("ball_measure: radius must be positive");
  return unit_ball_measure(dim) * std::pow(r, dim);
}

}  // namespace rrts

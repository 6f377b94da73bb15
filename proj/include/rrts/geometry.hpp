#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rrts {

// A configuration is an n-dimensional point in workspace units.
using Config = std::vector<double>;

// Axis-aligned box, lo[k] <= hi[k] for all k.
struct Box {
  Config lo;
  Config hi;
};

// Closed Euclidean ball.
struct Ball {
  Config center;
  double radius = 0.0;
};

// Euclidean norm of (b - a). Throws std::invalid_argument on dimension mismatch.
double distance(const Config& a, const Config& b);

// Convex combination (1-s)*a + s*b with s in [0,1]. The endpoints s=0 and s=1
// return the inputs bit-for-bit.
Config steer_point(const Config& a, const Config& b, double s);

// Shrinking-ball radius gamma * (ln i / i)^(1/n), optionally clipped to `cap`.
// i is clamped to at least 2 so the logarithm stays positive.
double near_radius(std::uint64_t i, int dim, double gamma,
                   std::optional<double> cap = std::nullopt);

// True iff the closed segment [a,b] intersects the closed box (slab clipping).
// Grazing contact counts as a hit.
bool segment_hits_box(const Config& a, const Config& b, const Box& box);

// True iff the closed segment [a,b] comes within ball.radius of ball.center.
bool segment_hits_ball(const Config& a, const Config& b, const Ball& ball);

// Minimum distance from point p to the closed segment [a,b].
double point_segment_distance(const Config& p, const Config& a, const Config& b);

// Lebesgue measure of an n-ball of radius r.
double ball_measure(double r, int dim);

// Volume of the unit n-ball (pi for n=2, 4*pi/3 for n=3, ...).
double unit_ball_measure(int dim);

}  // namespace rrts

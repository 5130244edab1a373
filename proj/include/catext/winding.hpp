#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "catext/charted_group.hpp"
#include "catext/report.hpp"

namespace catext {

// Angle representative in [0, 2*pi). The circle's chart uses (-pi, pi) and
// excludes -1; the path family below must cover the whole circle, so it is
// anchored to this branch instead and always runs counterclockwise.
inline double circle_angle(const Vec& p) {
  double a = std::atan2(p[1], p[0]);
  if (a < 0.0) a += 2.0 * M_PI;
  // products of sampled points can land a few ulps below the cut; those
  // must read as angle zero or grid identities lose a whole turn
  if (2.0 * M_PI - a < 1e-12) a = 0.0;
  return a;
}

namespace detail {

struct SweptAngle {
  double total = 0.0;
  double max_step = 0.0;
};

// Total signed angle swept by a closed polyline through the sample points,
// with the largest single-step angle. Because every step takes the principal
// branch, the total over a closed loop is always an exact multiple of 2*pi;
// undersampling therefore shows up as a large step, never as a fractional
// total.
inline SweptAngle swept_angle(const std::vector<Vec>& pts) {
  SweptAngle out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Vec& a = pts[i];
    const Vec& b = pts[i + 1];
    double step = std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
    out.total += step;
    out.max_step = std::max(out.max_step, std::abs(step));
  }
  return out;
}

}  // namespace detail

// Winding number of the loop (path to g) + (g times path to h) - (path to
// gh), with each path sweeping counterclockwise from 1 through the angle in
// [0, 2*pi). Equals 1 exactly when the two angles sum past a full turn.
inline long long winding_pair(const Vec& el_g, const Vec& el_h, int samples_per_segment = 64) {
  double tg = circle_angle(el_g);
  double th = circle_angle(el_h);
  Vec gh{el_g[0] * el_h[0] - el_g[1] * el_h[1], el_g[0] * el_h[1] + el_g[1] * el_h[0]};
  double tgh = circle_angle(gh);
  std::vector<Vec> pts;
  pts.reserve(3 * samples_per_segment + 4);
  auto at = [](double a) { return Vec{std::cos(a), std::sin(a)}; };
  for (int i = 0; i <= samples_per_segment; ++i)
    pts.push_back(at(tg * i / samples_per_segment));
  for (int i = 0; i <= samples_per_segment; ++i)
    pts.push_back(at(tg + th * i / samples_per_segment));
  // closing segment traversed backwards
  for (int i = samples_per_segment; i >= 0; --i)
    pts.push_back(at(tgh * i / samples_per_segment));
  detail::SweptAngle swept = detail::swept_angle(pts);
  // once a true step exceeds pi the principal branch wraps and the count
  // silently shifts by a turn; refuse at half that for margin
  if (swept.max_step > 1.5) {
    Report rep;
    rep.fail_num("winding.resolution-too-coarse", "()", swept.max_step, 1.5);
    throw Refusal("consecutive samples subtend too large an angle", rep);
  }
  double turns = swept.total / (2.0 * M_PI);
  double rounded = std::nearbyint(turns);
  if (std::abs(turns - rounded) > 0.25) {
    Report rep;
    rep.fail_num("winding.resolution-too-coarse", "()", turns, 0.25);
    throw Refusal("accumulated angle is not close to a whole number of turns", rep);
  }
  return static_cast<long long>(rounded);
}

// Deviation of the triple identity w(h,k) - w(gh,k) + w(g,hk) - w(g,h)
// over a uniform angle grid; an exact integer identity, so any nonzero
// return is a failure.
inline long long winding_triple_defect_max(int grid, int samples_per_segment = 64) {
  auto at = [](double a) { return Vec{std::cos(a), std::sin(a)}; };
  // the grid of roots of unity is closed under products, so all pairs the
  // triple sweep needs live in one table
  std::vector<std::vector<long long>> w(grid, std::vector<long long>(grid));
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      w[i][j] = winding_pair(at(2.0 * M_PI * i / grid), at(2.0 * M_PI * j / grid),
                             samples_per_segment);
  long long worst = 0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      for (int k = 0; k < grid; ++k) {
        long long d = w[j][k] - w[(i + j) % grid][k] + w[i][(j + k) % grid] - w[i][j];
        worst = std::max(worst, std::abs(d));
      }
  return worst;
}

struct CoveringCheckResult {
  int samples = 0;
  double max_hom_deviation = 0.0;
};

// Product on Z x circle twisted by the winding pair, mapped to the line by
// (a, g) -> 2*pi*a + angle(g). The map must be a homomorphism onto (R, +);
// the deviation is limited by floating point only.
inline CoveringCheckResult covering_group_check(int samples, unsigned seed = 20240823) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<long long> layer(-3, 3);
  auto at = [](double a) { return Vec{std::cos(a), std::sin(a)}; };
  auto mul = [](const Vec& x, const Vec& y) {
    return Vec{x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
  };
  CoveringCheckResult out;
  out.samples = samples;
  for (int i = 0; i < samples; ++i) {
    long long a = layer(rng), b = layer(rng);
    Vec g = at(angle(rng)), h = at(angle(rng));
    long long c = a + b + winding_pair(g, h);
    Vec gh = mul(g, h);
    double lhs = 2.0 * M_PI * c + circle_angle(gh);
    double rhs = (2.0 * M_PI * a + circle_angle(g)) + (2.0 * M_PI * b + circle_angle(h));
    out.max_hom_deviation = std::max(out.max_hom_deviation, std::abs(lhs - rhs));
  }
  return out;
}

}  // namespace catext

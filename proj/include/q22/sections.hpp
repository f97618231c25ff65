#pragma once

// Global section branches over Sigma for family quadrics whose discriminant
// circle misses the unit circle: labeling by continuation from q = 1, j-swap
// residuals, loop monodromy and a Levi-type tally.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "q22/numeric.hpp"
#include "q22/quadrics.hpp"
#include "q22/twistor.hpp"

namespace q22 {

struct LeviSummary {
  std::size_t nondegenerate = 0;
  std::size_t degenerate = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  double min_abs_value = std::numeric_limits<double>::infinity();
  double max_abs_value = 0.0;
};

struct SectionsReport {
  std::size_t grid_size = 0;
  std::size_t loops = 0;
  double max_jswap_residual = 0.0;
  double max_surface_residual = 0.0;  // worst of quadric and Q^{2,2} residuals over both branches
  std::size_t monodromy_failures = 0;
  std::size_t continuation_steps = 0;
  LeviSummary levi_summary;
};

struct SectionsOptions {
  std::size_t grid = 10000;
  std::size_t loops = 100;
  std::uint64_t seed = 1;
  double max_step = 0.1;  // radians along a great circle
  bool strict = true;     // raise MonodromyDetected instead of just counting
};

namespace detail {

inline Quat unit_quat(const std::array<double, 4>& x) {
  const double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  return Quat::from_real4({x[0] / n, x[1] / n, x[2] / n, x[3] / n});
}

/// Point at parameter t on the great circle cos(t) a + sin(t) b, a and b
/// orthonormal in R^4.
inline Quat great_circle(const std::array<double, 4>& a, const std::array<double, 4>& b, double t) {
  std::array<double, 4> x{};
  for (int i = 0; i < 4; ++i) x[i] = std::cos(t) * a[i] + std::sin(t) * b[i];
  return unit_quat(x);
}

/// Follows the labeled root `cur` along the arc t in [0, t_end]. The step is
/// halved until the drift of the tracked root stays below a third of the
/// separation between the roots.
class Tracker {
 public:
  Tracker(const QuadricSym4& q, const Tolerance& tol, double max_step)
      : q_(q), tol_(tol), max_step_(max_step) {}

  ProjPoint follow(ProjPoint cur, const std::array<double, 4>& a, const std::array<double, 4>& b,
                   double t_end) {
    double t = 0.0;
    double h = max_step_;
    while (t < t_end) {
      const double step = std::min(h, t_end - t);
      const auto [r1, r2] = fibre_roots(q_, great_circle(a, b, t + step), tol_);
      const double d1 = fs_distance(cur, r1);
      const double d2 = fs_distance(cur, r2);
      const ProjPoint& next = d1 <= d2 ? r1 : r2;
      const double drift = std::min(d1, d2);
      const double sep = fs_distance(r1, r2);
      if (drift < sep / 3.0 || step < 1e-6) {
        cur = next;
        t += step;
        ++steps;
        h = std::min(max_step_, 2.0 * h);
      } else {
        h = 0.5 * step;
      }
    }
    return cur;
  }

  std::size_t steps = 0;

 private:
  const QuadricSym4& q_;
  Tolerance tol_;
  double max_step_;
};

inline std::array<double, 4> orthonormal_to(const std::array<double, 4>& a, std::array<double, 4> b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d += a[i] * b[i];
  double n = 0.0;
  for (int i = 0; i < 4; ++i) {
    b[i] -= d * a[i];
    n += b[i] * b[i];
  }
  n = std::sqrt(n);
  for (auto& x : b) x /= n;
  return b;
}

}  // namespace detail

/// Continues the s+ branch from q = 1 to a target on Sigma along the great
/// circle through both (via j when the target is close to -1).
inline ProjPoint continue_to(detail::Tracker& tr, const ProjPoint& seed_plus, const Quat& target) {
  const std::array<double, 4> one{1.0, 0.0, 0.0, 0.0};
  auto leg = [&](const ProjPoint& start, const std::array<double, 4>& from,
                 const std::array<double, 4>& to) {
    double c = 0.0;
    for (int i = 0; i < 4; ++i) c += from[i] * to[i];
    c = std::clamp(c, -1.0, 1.0);
    const double angle = std::acos(c);
    if (angle < 1e-14) return start;
    return tr.follow(start, from, detail::orthonormal_to(from, to), angle);
  };
  const auto tx = target.as_real4();
  if (tx[0] < -0.9) {
    const std::array<double, 4> jq{0.0, 0.0, 1.0, 0.0};
    return leg(leg(seed_plus, one, jq), jq, tx);
  }
  return leg(seed_plus, one, tx);
}

/// Runs the global-section analysis of Q_{a,r} for a disjoint configuration.
inline SectionsReport sections_over_region(const FamilyParams& fp, const SectionsOptions& opt = {},
                                           const Tolerance& tol = {}) {
  const auto [circle, rel] = classify_family(fp, tol);
  if (rel.position != Position::Disjoint)
    throw Error(ErrorCode::NotDisjoint, "global sections need a discriminant circle disjoint from Sigma");
  const QuadricSym4 q = family_quadric(fp);
  SectionsReport rep;
  rep.grid_size = opt.grid;
  rep.loops = opt.loops;

  detail::Tracker tr(q, tol, opt.max_step);
  const ProjPoint seed_plus = section_roots(q, Quat::one(), tol).plus;

  Rng rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_dir = [&] {
    return std::array<double, 4>{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  };

  for (std::size_t i = 0; i < opt.grid; ++i) {
    const Quat target = detail::unit_quat(random_dir());
    const ProjPoint plus = continue_to(tr, seed_plus, target);
    const auto [r1, r2] = fibre_roots(q, target, tol);
    const ProjPoint minus = fs_distance(plus, r1) <= fs_distance(plus, r2) ? r2 : r1;
    rep.max_jswap_residual = std::max(rep.max_jswap_residual, fs_distance(apply_j(plus, tol), minus));
    for (const ProjPoint* p : {&plus, &minus}) {
      rep.max_surface_residual =
          std::max({rep.max_surface_residual, quadric_residual(q, *p), std::abs(q22_residual(*p))});
    }
    const double lv = homogeneous_levi_value(q, plus, tol);
    auto& ls = rep.levi_summary;
    if (std::abs(lv) < tol.disc_zero) ++ls.degenerate;
    else ++ls.nondegenerate;
    if (lv > 0.0) ++ls.positive;
    else ++ls.negative;
    ls.min_abs_value = std::min(ls.min_abs_value, std::abs(lv));
    ls.max_abs_value = std::max(ls.max_abs_value, std::abs(lv));
  }

  for (std::size_t k = 0; k < opt.loops; ++k) {
    const auto a = detail::unit_quat(random_dir()).as_real4();
    const auto b = detail::orthonormal_to(a, random_dir());
    const ProjPoint start = continue_to(tr, seed_plus, Quat::from_real4(a));
    const ProjPoint end = tr.follow(start, a, b, 2.0 * pi);
    const auto [r1, r2] = fibre_roots(q, Quat::from_real4(a), tol);
    const ProjPoint& other = fs_distance(start, r1) <= fs_distance(start, r2) ? r2 : r1;
    if (fs_distance(end, start) >= fs_distance(end, other)) ++rep.monodromy_failures;
  }
  rep.continuation_steps = tr.steps;
  if (opt.strict && rep.monodromy_failures > 0)
    throw Error(ErrorCode::MonodromyDetected, "a loop exchanged the two branches");
  return rep;
}

}  // namespace q22

#pragma once

// Affine charts U0 = {z0 != 0} and U3 = {z3 != 0} of Q^{2,2}, their defining
// functions, the contact form, CR generators and the Levi matrix.

#include <array>
#include <cmath>

#include "q22/numeric.hpp"
#include "q22/twistor.hpp"

namespace q22 {

enum class Chart { U0, U3 };

/// Chart coordinates: (u1, u2, u3) = (z1, z2, z3) / z0 on U0 and
/// (w0, w1, w2) = (z0, z1, z2) / z3 on U3.
struct ChartPoint {
  Chart chart = Chart::U0;
  Vec3C coords{};
};

/// Signs of the Hermitian form in chart coordinates: rho = const + sum s_k |x_k|^2.
inline std::array<double, 3> chart_signs(Chart c) {
  return c == Chart::U0 ? std::array<double, 3>{1.0, -1.0, -1.0}
                        : std::array<double, 3>{1.0, 1.0, -1.0};
}

inline double chart_constant(Chart c) { return c == Chart::U0 ? 1.0 : -1.0; }

inline ChartPoint to_chart(const ProjPoint& p, Chart chart, const Tolerance& tol = {}) {
  const Vec4C& z = p.coords();
  const std::size_t k = chart == Chart::U0 ? 0 : 3;
  if (std::abs(z[k]) <= tol.eq_abs)
    throw Error(ErrorCode::ChartUndefined, "dividing homogeneous coordinate vanishes");
  ChartPoint cp{chart, {}};
  std::size_t out = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != k) cp.coords[out++] = z[i] / z[k];
  return cp;
}

inline ProjPoint from_chart(const ChartPoint& cp, const Tolerance& tol = {}) {
  const auto& c = cp.coords;
  if (cp.chart == Chart::U0) return ProjPoint::from({1.0, c[0], c[1], c[2]}, tol);
  return ProjPoint::from({c[0], c[1], c[2], 1.0}, tol);
}

/// rho_0 = 1 + |u1|^2 - |u2|^2 - |u3|^2, rho_3 = |w0|^2 + |w1|^2 - |w2|^2 - 1.
inline double rho(const ChartPoint& cp) {
  const auto s = chart_signs(cp.chart);
  double r = chart_constant(cp.chart);
  for (std::size_t k = 0; k < 3; ++k) r += s[k] * std::norm(cp.coords[k]);
  return r;
}

/// Coefficients of d(rho) on holomorphic differentials: d rho = 2 Re sum g_k dx_k.
inline Vec3C partial_rho(const ChartPoint& cp) {
  const auto s = chart_signs(cp.chart);
  Vec3C g{};
  for (std::size_t k = 0; k < 3; ++k) g[k] = s[k] * std::conj(cp.coords[k]);
  return g;
}

/// d rho evaluated on the real tangent vector given as a complex variation.
inline double d_rho(const ChartPoint& cp, const Vec3C& variation) {
  return 2.0 * dot(partial_rho(cp), variation).real();
}

/// The contact form (i/2)(d rho - dbar rho) on a tangent vector of Q^{2,2}.
inline double contact_eval(const ChartPoint& cp, const Vec3C& tangent, const Tolerance& tol = {}) {
  if (std::abs(rho(cp)) >= tol.eq_abs)
    throw Error(ErrorCode::NotOnHypersurface, "contact form is evaluated on Q^{2,2} only");
  const double scale = std::max(1.0, norm(tangent) * (1.0 + norm(cp.coords)));
  if (std::abs(d_rho(cp, tangent)) >= tol.eq_abs * scale)
    throw Error(ErrorCode::NotTangent, "variation is not tangent to Q^{2,2}");
  return -dot(partial_rho(cp), tangent).imag();
}

/// Applies the antiholomorphic field sum c_k d/d(conj x_k) to rho.
inline cplx apply_antiholomorphic(const ChartPoint& cp, const Vec3C& c) {
  const auto s = chart_signs(cp.chart);
  cplx r = 0.0;
  for (std::size_t k = 0; k < 3; ++k) r += c[k] * s[k] * cp.coords[k];
  return r;
}

/// Generating fields of T^{0,1}: (M12, M13, M23) on U0, (L01, L02, L12) on U3,
/// as coefficient vectors in the basis d/d(conj x_k).
inline std::array<Vec3C, 3> cr_generators(const ChartPoint& cp) {
  const auto& x = cp.coords;
  if (cp.chart == Chart::U0) {
    return {Vec3C{x[1], x[0], 0.0}, Vec3C{x[2], 0.0, x[0]}, Vec3C{0.0, x[2], -x[1]}};
  }
  return {Vec3C{x[1], -x[0], 0.0}, Vec3C{x[2], 0.0, x[0]}, Vec3C{0.0, x[2], x[1]}};
}

/// Coefficients of the linear relation among the generators:
/// u3 M12 - u2 M13 - u1 M23 = 0 on U0, -w2 L01 + w1 L02 - w0 L12 = 0 on U3.
inline Vec3C cr_generator_relation(const ChartPoint& cp) {
  const auto& x = cp.coords;
  if (cp.chart == Chart::U0) return {x[2], -x[1], -x[0]};
  return {-x[2], x[1], -x[0]};
}

/// The T^{1,0} frame {Z1, Z2} on U0 ∩ {u3 != 0} or {Y0, Y1} on U3 ∩ {w2 != 0},
/// as coefficient vectors in the basis d/dx_k.
inline std::array<Vec3C, 2> cr_frame(const ChartPoint& cp, const Tolerance& tol = {}) {
  const auto& x = cp.coords;
  if (std::abs(x[2]) <= tol.eq_abs)
    throw Error(ErrorCode::FrameUndefined, "frame requires the third chart coordinate nonzero");
  const cplx d = std::conj(x[2]);
  if (cp.chart == Chart::U0)
    return {Vec3C{1.0, 0.0, std::conj(x[0]) / d}, Vec3C{0.0, 1.0, -std::conj(x[1]) / d}};
  return {Vec3C{1.0, 0.0, std::conj(x[0]) / d}, Vec3C{0.0, 1.0, std::conj(x[1]) / d}};
}

/// The ambient Levi form (1/2) sum s_k a_k conj(b_k) on T^{1,0} vectors.
inline cplx ambient_levi(Chart chart, const Vec3C& a, const Vec3C& b) {
  const auto s = chart_signs(chart);
  cplx r = 0.0;
  for (std::size_t k = 0; k < 3; ++k) r += s[k] * a[k] * std::conj(b[k]);
  return 0.5 * r;
}

struct LeviReport {
  Chart chart = Chart::U0;
  Mat2C matrix;
  double det = 0.0;
  Signature signature;
};

/// Levi matrix in the standard frame of the chart, from the closed forms
///   U0: [[|u3|^2 - |u1|^2, u2 conj u1], [u1 conj u2, -(|u3|^2 + |u2|^2)]] / (2|u3|^2)
///   U3: [[|w2|^2 - |w0|^2, -w1 conj w0], [-conj w1 w0, |w2|^2 - |w1|^2]] / (2|w2|^2)
inline LeviReport levi_report(const ChartPoint& cp, const Tolerance& tol = {}) {
  if (std::abs(rho(cp)) >= tol.eq_abs)
    throw Error(ErrorCode::NotOnHypersurface, "Levi matrix is defined on Q^{2,2} only");
  const auto& x = cp.coords;
  if (std::abs(x[2]) <= tol.eq_abs)
    throw Error(ErrorCode::FrameUndefined, "frame requires the third chart coordinate nonzero");
  const double n3 = std::norm(x[2]);
  const double f = 1.0 / (2.0 * n3);
  LeviReport rep;
  rep.chart = cp.chart;
  Mat2C& m = rep.matrix;
  if (cp.chart == Chart::U0) {
    m(0, 0) = f * (n3 - std::norm(x[0]));
    m(0, 1) = f * x[1] * std::conj(x[0]);
    m(1, 0) = f * x[0] * std::conj(x[1]);
    m(1, 1) = -f * (n3 + std::norm(x[1]));
  } else {
    m(0, 0) = f * (n3 - std::norm(x[0]));
    m(0, 1) = -f * x[1] * std::conj(x[0]);
    m(1, 0) = -f * std::conj(x[1]) * x[0];
    m(1, 1) = f * (n3 - std::norm(x[1]));
  }
  rep.det = det(m).real();
  rep.signature = hermitian2_signature(m, tol.eq_abs);
  return rep;
}

/// A point of Q^{2,2} in the given chart: two free coordinates drawn complex
/// Gaussian, the third solved from rho = 0 with a uniform phase; negative
/// radicands are rejected and redrawn.
inline ChartPoint sample_q22_chart(Rng& rng, Chart chart) {
  for (;;) {
    const cplx a = complex_gaussian(rng);
    const cplx b = complex_gaussian(rng);
    const double r2 = chart == Chart::U0 ? 1.0 + std::norm(a) - std::norm(b)
                                         : std::norm(a) + std::norm(b) - 1.0;
    const double phase = uniform(rng, -pi, pi);
    if (r2 < 0.0) continue;
    return {chart, {a, b, std::polar(std::sqrt(r2), phase)}};
  }
}

}  // namespace q22

#pragma once

// Points of CP^3, the split Hermitian form h = diag(1, 1, -1, -1), the
// quaternionic involution j, the twistor projection to S^4 and the twistor
// fibres.

#include <array>
#include <cmath>
#include <variant>

#include "q22/numeric.hpp"

namespace q22 {

inline constexpr std::array<double, 4> kHSigns{1.0, 1.0, -1.0, -1.0};

/// A point of CP^3 held by its canonical representative: unit Euclidean
/// norm, with the first coordinate of magnitude > eq_abs real positive.
class ProjPoint {
 public:
  ProjPoint() : z_{1.0, 0.0, 0.0, 0.0} {}

  static ProjPoint from(const Vec4C& z, const Tolerance& tol = {}) {
    const double n = norm(z);
    if (!(n > 0.0) || !std::isfinite(n))
      throw Error(ErrorCode::ZeroVector, "homogeneous coordinates must be nonzero and finite");
    Vec4C u = cplx(1.0 / n) * z;
    for (const auto& c : u) {
      if (std::abs(c) > tol.eq_abs) {
        u = std::polar(1.0, -std::arg(c)) * u;
        break;
      }
    }
    ProjPoint p;
    p.z_ = u;
    return p;
  }

  const Vec4C& coords() const noexcept { return z_; }
  const cplx& operator[](std::size_t i) const { return z_[i]; }

 private:
  Vec4C z_;
};

/// |<z_p, z_q>| >= (1 - eq_abs) |z_p| |z_q|.
inline bool proj_eq(const ProjPoint& p, const ProjPoint& q, const Tolerance& tol = {}) {
  return std::abs(inner(p.coords(), q.coords())) >= (1.0 - tol.eq_abs);
}

/// Sine of the Fubini-Study angle between two points, taken as the length of
/// the component of q orthogonal to p (sqrt(1 - c^2) bottoms out near 1e-8).
inline double fs_distance(const ProjPoint& p, const ProjPoint& q) {
  const Vec4C& a = p.coords();
  const Vec4C& b = q.coords();
  return norm(b - inner(a, b) * a);
}

/// h(z, w) = z^* H w.
inline cplx hermitian_h(const Vec4C& z, const Vec4C& w) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += kHSigns[i] * std::conj(z[i]) * w[i];
  return s;
}

inline Mat4C h_matrix() { return Mat4C::diagonal({1.0, 1.0, -1.0, -1.0}); }

/// The real structure matrix S, with J(z) = S conj(z) and J^2 = -Id.
inline Mat4C s_matrix() {
  Mat4C s;
  s(0, 1) = -1.0;
  s(1, 0) = 1.0;
  s(2, 3) = -1.0;
  s(3, 2) = 1.0;
  return s;
}

/// h(z, z) / |z|^2; zero exactly on Q^{2,2}.
inline double q22_residual(const ProjPoint& p) { return hermitian_h(p.coords(), p.coords()).real(); }

inline bool in_q22(const ProjPoint& p, const Tolerance& tol = {}) {
  return std::abs(q22_residual(p)) < tol.eq_abs;
}

/// J(z) = (-conj z1, conj z0, -conj z3, conj z2).
inline Vec4C apply_J(const Vec4C& z) {
  return {-std::conj(z[1]), std::conj(z[0]), -std::conj(z[3]), std::conj(z[2])};
}

inline ProjPoint apply_j(const ProjPoint& p, const Tolerance& tol = {}) {
  return ProjPoint::from(apply_J(p.coords()), tol);
}

// ---------------------------------------------------------------------------
// Twistor projection

struct S4Point {
  std::array<double, 5> x{};

  /// On the distinguished 3-sphere: the first coordinate vanishes.
  bool on_sigma(const Tolerance& tol = {}) const { return std::abs(x[0]) < tol.eq_abs; }
};

/// Ordering (A - B, 2 Re alpha, 2 Im alpha, 2 Re beta, 2 Im beta) / (A + B),
/// where alpha + j beta = (z2 + j z3) conj(z0 + j z1). That gives
/// alpha = z2 conj(z0) + z1 conj(z3) and beta = conj(z0) z3 - z1 conj(z2);
/// both are constant on fibres, unlike the holomorphic z0 z3 - z1 z2.
/// Away from infinity, (x1, .., x4) = 2 A q / (A + B).
inline S4Point project_r5(const ProjPoint& p) {
  const Vec4C& z = p.coords();
  const double A = std::norm(z[0]) + std::norm(z[1]);
  const double B = std::norm(z[2]) + std::norm(z[3]);
  const cplx alpha = z[2] * std::conj(z[0]) + z[1] * std::conj(z[3]);
  const cplx beta = std::conj(z[0]) * z[3] - z[1] * std::conj(z[2]);
  const double s = A + B;
  return {{(A - B) / s, 2.0 * alpha.real() / s, 2.0 * alpha.imag() / s, 2.0 * beta.real() / s,
           2.0 * beta.imag() / s}};
}

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// A point of the quaternionic affine chart of S^4, or the point at infinity.
using QuatExt = std::variant<Quat, Infinity>;

inline bool is_infinity(const QuatExt& q) { return std::holds_alternative<Infinity>(q); }

/// q = (z2 + j z3)(z0 + j z1)^{-1}; infinity when z0 = z1 = 0.
inline QuatExt project_quat(const ProjPoint& p, const Tolerance& tol = {}) {
  const Vec4C& z = p.coords();
  const Quat den{z[0], z[1]};
  if (den.norm() < tol.eq_abs) return Infinity{};
  return Quat{z[2], z[3]} * den.inverse();
}

// ---------------------------------------------------------------------------
// Projective lines

/// A projective line given by an orthonormal basis of its 2-plane.
class ProjLine {
 public:
  static ProjLine span(const Vec4C& a, const Vec4C& b) {
    const Vec4C e0 = normalized(a);
    Vec4C e1 = b - inner(e0, b) * e0;
    if (norm(e1) < 1e-12 * norm(b))
      throw Error(ErrorCode::DegenerateConfiguration, "spanning vectors are dependent");
    ProjLine l;
    l.e0_ = e0;
    l.e1_ = normalized(e1);
    return l;
  }

  const Vec4C& e0() const noexcept { return e0_; }
  const Vec4C& e1() const noexcept { return e1_; }

  ProjPoint point(cplx s, cplx t, const Tolerance& tol = {}) const {
    return ProjPoint::from(s * e0_ + t * e1_, tol);
  }

  /// Distance of the unit representative of p from the plane of the line.
  double residual(const ProjPoint& p) const {
    const Vec4C& z = p.coords();
    const Vec4C proj = inner(e0_, z) * e0_ + inner(e1_, z) * e1_;
    return norm(z - proj);
  }

  bool contains(const ProjPoint& p, const Tolerance& tol = {}) const {
    return residual(p) < tol.eq_abs;
  }

 private:
  Vec4C e0_{};
  Vec4C e1_{};
};

/// The twistor fibre over a point of S^4 together with its coordinate map.
/// Finite base q = p0 + j p1:
///   (z0, z1) -> [z0 : z1 : p0 z0 - conj(p1) z1 : p1 z0 + conj(p0) z1];
/// base at infinity: (z2, z3) -> [0 : 0 : z2 : z3].
struct FibreParam {
  QuatExt base;

  Vec4C lift(cplx s, cplx t) const {
    if (const auto* q = std::get_if<Quat>(&base)) {
      return {s, t, q->p0 * s - std::conj(q->p1) * t, q->p1 * s + std::conj(q->p0) * t};
    }
    return {0.0, 0.0, s, t};
  }

  ProjPoint map(cplx s, cplx t, const Tolerance& tol = {}) const {
    return ProjPoint::from(lift(s, t), tol);
  }

  ProjLine line() const { return ProjLine::span(lift(1.0, 0.0), lift(0.0, 1.0)); }
};

inline FibreParam fibre_over(const QuatExt& q) { return FibreParam{q}; }

inline FibreParam fibre_through(const ProjPoint& p, const Tolerance& tol = {}) {
  return fibre_over(project_quat(p, tol));
}

// ---------------------------------------------------------------------------
// Hyperplanes

/// The hyperplane {v . z = 0}; its h-normal is n_v = (conj v0, conj v1,
/// -conj v2, -conj v3).
struct HyperplaneDual {
  Vec4C v{};

  Vec4C normal() const {
    return {std::conj(v[0]), std::conj(v[1]), -std::conj(v[2]), -std::conj(v[3])};
  }

  cplx evaluate(const Vec4C& z) const { return dot(v, z); }

  /// |v . z| for the canonical unit representative of p and unit-normalized v.
  double residual(const ProjPoint& p) const { return std::abs(evaluate(p.coords())) / norm(v); }
};

}  // namespace q22

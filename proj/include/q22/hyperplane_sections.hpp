#pragma once

// Hyperplane sections Pi ∩ Q^{2,2}: smooth (spherical) versus tangent
// (Levi-flat, singular at [n_v]), graph sections over Sigma and the leaves of
// the tangent case.

#include <cmath>
#include <optional>

#include "q22/numeric.hpp"
#include "q22/symmetries.hpp"
#include "q22/twistor.hpp"

namespace q22 {

enum class SectionType { SmoothSpherical, TangentLeviFlat };

inline const char* section_type_name(SectionType t) {
  return t == SectionType::SmoothSpherical ? "smooth_spherical" : "tangent_leviflat";
}

struct SectionKind {
  SectionType type = SectionType::SmoothSpherical;
  std::optional<ProjPoint> singular_point;
  // tangent case: max |v.z| over sampled points of the fibre through [n_v]
  double fibre_in_plane_residual = 0.0;
};

inline SectionKind section_kind(const HyperplaneDual& hp, const Tolerance& tol = {}) {
  const double delta = hyperplane_delta(hp);
  SectionKind k;
  if (std::abs(delta) >= tol.disc_zero) return k;
  k.type = SectionType::TangentLeviFlat;
  const ProjPoint sp = ProjPoint::from(hp.normal(), tol);
  k.singular_point = sp;
  const FibreParam f = fibre_through(sp, tol);
  static constexpr double kSamples[][4] = {
      {1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 0}, {0.3, -1.2, 0.7, 0.25}, {-2, 0.5, 1, 1}};
  for (const auto& s : kSamples) {
    const ProjPoint p = f.map({s[0], s[1]}, {s[2], s[3]}, tol);
    k.fibre_in_plane_residual = std::max(k.fibre_in_plane_residual, hp.residual(p));
  }
  return k;
}

/// The point where the fibre over q in Sigma meets the smooth section:
/// v.lift(s, t) = a s + b t, so the parameter is (-b, a).
inline ProjPoint section_graph_point(const HyperplaneDual& hp, const Quat& q, const Tolerance& tol = {}) {
  if (std::abs(hyperplane_delta(hp)) < tol.disc_zero)
    throw Error(ErrorCode::TangentPlane, "graph sections exist for non-tangent planes only");
  if (std::abs(q.norm() - 1.0) > tol.eq_abs)
    throw Error(ErrorCode::NotUnitQuaternion, "base point must lie on Sigma");
  const Vec4C v = normalized(hp.v);
  const cplx a = v[0] + v[2] * q.p0 + v[3] * q.p1;
  const cplx b = v[1] - v[2] * std::conj(q.p1) + v[3] * std::conj(q.p0);
  if (std::abs(a) < tol.eq_abs && std::abs(b) < tol.eq_abs)
    throw Error(ErrorCode::TangentPlane, "the fibre lies in the plane");
  return fibre_over(q).map(-b, a, tol);
}

struct TangentLeaf {
  ProjLine line;
  ProjPoint singular_point;
  Mat4C witness;
  double phase = 0.0;

  /// [zeta0 : zeta1 : zeta0 : e^{i phase} zeta1] mapped by the witness.
  ProjPoint point(cplx zeta0, cplx zeta1, const Tolerance& tol = {}) const {
    return ProjPoint::from(witness * Vec4C{zeta0, zeta1, zeta0, std::polar(1.0, phase) * zeta1}, tol);
  }
};

/// Leaf L_phase of the tangent section, built on the canonical plane
/// {z0 = z2} and carried over by the classification witness.
inline TangentLeaf tangent_leaf(const HyperplaneDual& hp, double phase, const Tolerance& tol = {}) {
  const HyperplaneClass cls = classify_hyperplane(hp, tol);
  if (cls.orbit != OrbitClass::Tangent)
    throw Error(ErrorCode::NotTangent, "leaves exist for tangent planes only");
  const Mat4C& g = cls.witness.g;
  const Vec4C a = g * Vec4C{1.0, 0.0, 1.0, 0.0};
  const Vec4C b = g * Vec4C{0.0, 1.0, 0.0, std::polar(1.0, phase)};
  return {ProjLine::span(a, b), ProjPoint::from(a, tol), g, phase};
}

}  // namespace q22

#pragma once

// j-invariant quadric surfaces z^T Q z = 0: normalization, the family Q_{a,r},
// restriction to twistor fibres, discriminant circles and inversive distance,
// the two section branches and the Levi type of the induced CR structure.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "q22/numeric.hpp"
#include "q22/twistor.hpp"

namespace q22 {

using QuadricSym4 = Mat4C;

inline void require_symmetric(const QuadricSym4& q, const Tolerance& tol) {
  if (frobenius(q - transpose(q)) > tol.eq_abs * std::max(1.0, frobenius(q)))
    throw Error(ErrorCode::NotSymmetric, "quadric matrix must be symmetric");
}

/// T(Q) = S^T conj(Q) S, an antilinear involution on symmetric matrices.
inline QuadricSym4 j_transform(const QuadricSym4& q) {
  const Mat4C s = s_matrix();
  return transpose(s) * conj(q) * s;
}

struct JNormalized {
  cplx lambda;
  QuadricSym4 qn;
};

/// Finds lambda with T(Q) = lambda Q and rescales by mu = e^{i arg(lambda)/2},
/// after which T(Qn) = Qn.
inline JNormalized jinv_normalize(const QuadricSym4& q, const Tolerance& tol = {}) {
  require_symmetric(q, tol);
  const double qn = frobenius(q);
  if (!(qn > 0.0)) throw Error(ErrorCode::ZeroVector, "quadric matrix must be nonzero");
  const Mat4C t = j_transform(q);
  cplx w = 0.0;
  for (std::size_t i = 0; i < 16; ++i) w += std::conj(q.e[i]) * t.e[i];
  const cplx lambda = w / (qn * qn);
  if (frobenius(t - lambda * q) > tol.eq_abs * qn || std::abs(std::abs(lambda) - 1.0) > tol.eq_abs)
    throw Error(ErrorCode::NotJInvariant, "S^T conj(Q) S is not a multiple of Q");
  const cplx unit = lambda / std::abs(lambda);
  const cplx mu = std::polar(1.0, 0.5 * std::arg(unit));
  return {unit, mu * q};
}

/// Largest deviation of a normalized matrix from the pattern
/// [[a, ib, c, d], [ib, a', -d', c'], [c, -d', e, if], [d, c', if, e']] (' = conj).
inline double jinv_pattern_residual(const QuadricSym4& q) {
  double r = frobenius(q - transpose(q));
  const auto upd = [&](cplx d) { r = std::max(r, std::abs(d)); };
  upd(q(1, 1) - std::conj(q(0, 0)));
  upd(q(3, 3) - std::conj(q(2, 2)));
  upd(q(0, 1).real());
  upd(q(2, 3).real());
  upd(q(1, 2) + std::conj(q(0, 3)));
  upd(q(1, 3) - std::conj(q(0, 2)));
  return r;
}

struct FamilyParams {
  double a = 0.0;
  double r = 1.0;
  double c() const { return a * a - r * r; }
};

inline void require_radius(const FamilyParams& fp) {
  if (!(fp.r > 0.0) || !std::isfinite(fp.r) || !std::isfinite(fp.a))
    throw Error(ErrorCode::InvalidRadius, "family radius must be positive and finite");
}

/// Q_{a,r} for z0 z1 - a (z0 z3 + z1 z2) + (a^2 - r^2) z2 z3; the matrix
/// represents twice this form.
inline QuadricSym4 family_quadric(const FamilyParams& fp) {
  require_radius(fp);
  QuadricSym4 q;
  const double c = fp.c();
  q(0, 1) = q(1, 0) = 1.0;
  q(0, 3) = q(3, 0) = -fp.a;
  q(1, 2) = q(2, 1) = -fp.a;
  q(2, 3) = q(3, 2) = c;
  return q;
}

/// The Segre quadric z0 z3 - z1 z2, again with the matrix representing twice the form.
inline QuadricSym4 segre_quadric() {
  QuadricSym4 q;
  q(0, 3) = q(3, 0) = 1.0;
  q(1, 2) = q(2, 1) = -1.0;
  return q;
}

enum class FibreType { Two, Tangent, Contained };

inline const char* fibre_type_name(FibreType t) {
  switch (t) {
    case FibreType::Two: return "two";
    case FibreType::Tangent: return "tangent";
    case FibreType::Contained: return "contained";
  }
  return "two";
}

/// F|fibre = alpha z0^2 + 2 beta z0 z1 + gamma z1^2 with F = z^T Q z / 2.
struct FibreQuadratic {
  cplx alpha, beta, gamma;

  cplx disc() const { return beta * beta - alpha * gamma; }

  FibreType type(const Tolerance& tol = {}) const {
    if (std::abs(alpha) < tol.disc_zero && std::abs(beta) < tol.disc_zero &&
        std::abs(gamma) < tol.disc_zero)
      return FibreType::Contained;
    if (std::abs(disc()) < tol.disc_zero) return FibreType::Tangent;
    return FibreType::Two;
  }
};

inline FibreQuadratic restrict_to_fibre(const QuadricSym4& q, const QuatExt& base) {
  const FibreParam f = fibre_over(base);
  const Vec4C m0 = f.lift(1.0, 0.0);
  const Vec4C m1 = f.lift(0.0, 1.0);
  const Vec4C q0 = q * m0;
  const Vec4C q1 = q * m1;
  return {0.5 * dot(m0, q0), 0.5 * dot(m0, q1), 0.5 * dot(m1, q1)};
}

/// The discriminant locus of Q_{a,r} in the slice p1 = 0:
/// 1 - 2a Re z + (a^2 - r^2)|z|^2 = 0.
struct DiscriminantCircle {
  enum class Kind { Circle, Line, ContainedUnitCircle };
  Kind kind = Kind::Circle;
  cplx center{0.0};
  double radius = 0.0;
  double re_equals = 0.0;  // Line kind: Re z = re_equals

  /// Value of the defining equation at z.
  static double equation(const FamilyParams& fp, cplx z) {
    return 1.0 - 2.0 * fp.a * z.real() + fp.c() * std::norm(z);
  }

  /// n points on the locus; the line is sampled for Im z in [-span, span].
  std::vector<cplx> sample(std::size_t n, double span = 3.0) const {
    std::vector<cplx> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (kind == Kind::Line) {
        const double t = n == 1 ? 0.0 : -span + 2.0 * span * double(i) / double(n - 1);
        out.emplace_back(re_equals, t);
      } else {
        const double t = 2.0 * pi * double(i) / double(n);
        out.push_back(center + std::polar(radius, t));
      }
    }
    return out;
  }
};

inline const char* circle_kind_name(DiscriminantCircle::Kind k) {
  switch (k) {
    case DiscriminantCircle::Kind::Circle: return "circle";
    case DiscriminantCircle::Kind::Line: return "line";
    case DiscriminantCircle::Kind::ContainedUnitCircle: return "contained_unit_circle";
  }
  return "circle";
}

enum class Position { Contained, TwoPoints, Tangent, Disjoint };

inline const char* position_name(Position p) {
  switch (p) {
    case Position::Contained: return "contained";
    case Position::TwoPoints: return "two_points";
    case Position::Tangent: return "tangent";
    case Position::Disjoint: return "disjoint";
  }
  return "disjoint";
}

struct RelPosition {
  Position position = Position::Disjoint;
  double I = 0.0;
  std::vector<cplx> branch_points;
};

/// I = |a^2 - r^2 - 1| / (2r).
inline double inversive_distance(const FamilyParams& fp) {
  require_radius(fp);
  return std::abs(fp.c() - 1.0) / (2.0 * fp.r);
}

/// Circle center a/c and radius r/|c| (the image of |w - a| = r under
/// z = 1/w), or the line Re z = 1/(2a) when c = 0. Containment is checked
/// before the inversive-distance trichotomy. On the unit circle the locus
/// equation reduces to Re z = (1 + c)/(2a).
inline std::pair<DiscriminantCircle, RelPosition> classify_family(const FamilyParams& fp,
                                                                  const Tolerance& tol = {}) {
  require_radius(fp);
  DiscriminantCircle dc;
  RelPosition rp;
  rp.I = inversive_distance(fp);
  const double c = fp.c();
  if (std::abs(c) < tol.containment) {
    dc.kind = DiscriminantCircle::Kind::Line;
    dc.re_equals = 1.0 / (2.0 * fp.a);
  } else {
    dc.center = fp.a / c;
    dc.radius = fp.r / std::abs(c);
    if (std::abs(dc.center) < tol.containment && std::abs(dc.radius - 1.0) < tol.containment) {
      dc.kind = DiscriminantCircle::Kind::ContainedUnitCircle;
      rp.position = Position::Contained;
      return {dc, rp};
    }
  }
  if (std::abs(rp.I - 1.0) < tol.containment) {
    rp.position = Position::Tangent;
    const double x = (1.0 + c) / (2.0 * fp.a);
    rp.branch_points.emplace_back(x >= 0.0 ? 1.0 : -1.0, 0.0);
  } else if (rp.I < 1.0) {
    rp.position = Position::TwoPoints;
    const double x = std::clamp((1.0 + c) / (2.0 * fp.a), -1.0, 1.0);
    const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
    rp.branch_points.emplace_back(x, y);
    rp.branch_points.emplace_back(x, -y);
  } else {
    rp.position = Position::Disjoint;
  }
  return {dc, rp};
}

// ---------------------------------------------------------------------------
// Section branches

/// Lexicographic order on canonical representatives (real then imaginary
/// part, coordinate by coordinate); differences below eq_abs are ties.
inline bool lex_greater(const ProjPoint& a, const ProjPoint& b, const Tolerance& tol = {}) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (int part = 0; part < 2; ++part) {
      const double x = part == 0 ? a[i].real() : a[i].imag();
      const double y = part == 0 ? b[i].real() : b[i].imag();
      if (std::abs(x - y) > tol.eq_abs) return x > y;
    }
  }
  return false;
}

struct SectionRoots {
  ProjPoint plus;
  ProjPoint minus;
};

/// Both roots of the fibre quadratic, lifted to the fibre. With
/// s = -(beta + sigma sqrt(disc)) and sigma chosen to maximize |s|, the roots
/// are [s : alpha] and [gamma : s]. Unordered; see section_roots.
inline std::pair<ProjPoint, ProjPoint> fibre_roots(const QuadricSym4& q, const Quat& base,
                                                   const Tolerance& tol = {}) {
  const FibreQuadratic fq = restrict_to_fibre(q, base);
  switch (fq.type(tol)) {
    case FibreType::Contained:
      throw Error(ErrorCode::FibreContained, "the fibre lies in the quadric");
    case FibreType::Tangent:
      throw Error(ErrorCode::OnBranchLocus, "the fibre is tangent to the quadric");
    case FibreType::Two: break;
  }
  const cplx sq = std::sqrt(fq.disc());
  const cplx s1 = -(fq.beta + sq);
  const cplx s2 = -(fq.beta - sq);
  const cplx s = std::abs(s1) >= std::abs(s2) ? s1 : s2;
  const FibreParam f = fibre_over(base);
  return {f.map(s, fq.alpha, tol), f.map(fq.gamma, s, tol)};
}

inline SectionRoots section_roots(const QuadricSym4& q, const Quat& base, const Tolerance& tol = {}) {
  if (std::abs(base.norm() - 1.0) > tol.eq_abs)
    throw Error(ErrorCode::NotUnitQuaternion, "base point must lie on Sigma");
  // a j-invariant quadric has no tangent fibres: a double root p would make
  // j(p) a second root, so degenerate fibres over Sigma are contained ones and
  // those base points make up the branch locus
  if (restrict_to_fibre(q, base).type(tol) != FibreType::Two)
    throw Error(ErrorCode::OnBranchLocus, "base point lies on the branch locus");
  auto [r1, r2] = fibre_roots(q, base, tol);
  if (lex_greater(r2, r1, tol)) std::swap(r1, r2);
  return {r1, r2};
}

// ---------------------------------------------------------------------------
// Levi type of the CR structure induced on S ∩ Q^{2,2}

/// |z^T Q z| / (||Q|| ||z||^2).
inline double quadric_residual(const QuadricSym4& q, const ProjPoint& p) {
  const Vec4C& z = p.coords();
  return std::abs(dot(z, q * z)) / std::max(frobenius(q), 1e-300);
}

struct LeviType {
  bool degenerate = false;
  double value = 0.0;
  Vec3C kernel{};  // unit-normalized direction in chart U0
};

/// Kernel of {dF, d rho0} in chart U0 via the complex cross product, and the
/// ambient Levi value (1/2)(|a1|^2 - |a2|^2 - |a3|^2) on the unit kernel vector.
inline LeviType section_levi_type(const QuadricSym4& q, const ProjPoint& p, const Tolerance& tol = {}) {
  if (quadric_residual(q, p) >= tol.eq_abs || !in_q22(p, tol))
    throw Error(ErrorCode::NotOnIntersection, "point is not on both hypersurfaces");
  const Vec4C& z = p.coords();
  if (std::abs(z[0]) <= tol.eq_abs)
    throw Error(ErrorCode::ChartUndefined, "chart U0 needs z0 != 0");
  const Vec4C x{1.0, z[1] / z[0], z[2] / z[0], z[3] / z[0]};
  const Vec4C qx = q * x;
  const Vec3C df{2.0 * qx[1], 2.0 * qx[2], 2.0 * qx[3]};
  const Vec3C drho{std::conj(x[1]), -std::conj(x[2]), -std::conj(x[3])};
  const Vec3C a = cross(df, drho);
  if (norm(a) < tol.disc_zero * norm(df) * norm(drho))
    throw Error(ErrorCode::NonTransverse, "the differentials are dependent");
  LeviType lt;
  lt.kernel = normalized(a);
  const auto& k = lt.kernel;
  lt.value = 0.5 * (std::norm(k[0]) - std::norm(k[1]) - std::norm(k[2]));
  lt.degenerate = std::abs(lt.value) < tol.disc_zero;
  return lt;
}

/// Gradient of rho0 after eliminating u1 through F = 0:
/// d rho / d u_k = conj(u1) (-F_k / F_1) - conj(u_k), k = 2, 3.
inline std::pair<cplx, cplx> eliminated_rho_gradient(const QuadricSym4& q, const ProjPoint& p,
                                                     const Tolerance& tol = {}) {
  const Vec4C& z = p.coords();
  if (std::abs(z[0]) <= tol.eq_abs)
    throw Error(ErrorCode::ChartUndefined, "chart U0 needs z0 != 0");
  const Vec4C x{1.0, z[1] / z[0], z[2] / z[0], z[3] / z[0]};
  const Vec4C qx = q * x;
  if (std::abs(qx[1]) <= tol.disc_zero * std::max(1.0, frobenius(q)))
    throw Error(ErrorCode::NonTransverse, "u1 cannot be eliminated: dF/du1 vanishes");
  const cplx u1b = std::conj(x[1]);
  return {u1b * (-qx[2] / qx[1]) - std::conj(x[2]), u1b * (-qx[3] / qx[1]) - std::conj(x[3])};
}

/// Chart-free version: v orthogonal to z with z^T Q v = 0 and h(z, v) = 0;
/// returns h(v, v) / (2 ||v||^2). Works on the whole intersection, including z0 = 0.
inline double homogeneous_levi_value(const QuadricSym4& q, const ProjPoint& p, const Tolerance& tol = {}) {
  const Vec4C& z = p.coords();
  const Vec4C r0 = q * z;
  Vec4C r1{}, r2{};
  for (std::size_t i = 0; i < 4; ++i) {
    r1[i] = kHSigns[i] * std::conj(z[i]);
    r2[i] = std::conj(z[i]);
  }
  // kernel of the 3x4 system by signed 3x3 minors
  const auto minor = [&](std::size_t skip) {
    std::array<std::size_t, 3> c{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) c[k++] = i;
    return r0[c[0]] * (r1[c[1]] * r2[c[2]] - r1[c[2]] * r2[c[1]]) -
           r0[c[1]] * (r1[c[0]] * r2[c[2]] - r1[c[2]] * r2[c[0]]) +
           r0[c[2]] * (r1[c[0]] * r2[c[1]] - r1[c[1]] * r2[c[0]]);
  };
  Vec4C v{};
  for (std::size_t i = 0; i < 4; ++i) v[i] = (i % 2 == 0 ? 1.0 : -1.0) * minor(i);
  const double nv = norm(v);
  if (nv < tol.disc_zero * std::max(1.0, norm(r0)))
    throw Error(ErrorCode::NonTransverse, "the differentials are dependent");
  return 0.5 * hermitian_h(v, v).real() / (nv * nv);
}

}  // namespace q22

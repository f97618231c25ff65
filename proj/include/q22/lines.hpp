#pragma once

// Lines of Q^{2,2} as graphs of unitary 2x2 matrices, twistor fibres among
// them, the round spheres they project to in S^3 = SU(2), and the trace
// criteria for incidence and tangency.

#include <cmath>
#include <variant>
#include <vector>

#include "q22/numeric.hpp"
#include "q22/twistor.hpp"

namespace q22 {

inline Mat2C j0_matrix() {
  Mat2C m;
  m(0, 1) = -1.0;
  m(1, 0) = 1.0;
  return m;
}

/// The line {[z : A z]} for unitary A, with its phase split A = e^{i theta} U.
class LineU2 {
 public:
  static LineU2 from(const Mat2C& a, const Tolerance& tol = {}) {
    if (unitarity_defect(a) > tol.eq_abs)
      throw Error(ErrorCode::NotUnitary, "line matrix must be unitary");
    LineU2 l;
    l.a_ = a;
    l.split_ = unitary_phase_split(a, tol);
    return l;
  }

  const Mat2C& matrix() const noexcept { return a_; }
  double theta() const noexcept { return split_.theta; }
  const Mat2C& su2_part() const noexcept { return split_.U; }

  Vec4C lift(cplx s, cplx t) const {
    const Vec2C z{s, t};
    const Vec2C w = a_ * z;
    return {s, t, w[0], w[1]};
  }

  ProjPoint point(cplx s, cplx t, const Tolerance& tol = {}) const {
    return ProjPoint::from(lift(s, t), tol);
  }

  ProjLine line() const { return ProjLine::span(lift(1.0, 0.0), lift(0.0, 1.0)); }

 private:
  Mat2C a_ = Mat2C::identity();
  PhaseSplit split_{0.0, Mat2C::identity()};
};

inline LineU2 line_from_unitary(const Mat2C& a, const Tolerance& tol = {}) {
  return LineU2::from(a, tol);
}

/// ||(z2, z3) - A (z0, z1)|| on the unit representative.
inline double line_residual(const LineU2& l, const ProjPoint& p) {
  const Vec4C& z = p.coords();
  const Vec2C w = l.matrix() * Vec2C{z[0], z[1]};
  return std::hypot(std::abs(z[2] - w[0]), std::abs(z[3] - w[1]));
}

inline bool line_contains(const LineU2& l, const ProjPoint& p, const Tolerance& tol = {}) {
  return line_residual(l, p) < tol.eq_abs;
}

/// A line is a fibre iff A is in SU(2), equivalently A J0 = J0 conj(A).
/// Both tests measure 2|sin theta| and must agree.
inline bool is_fibre(const LineU2& l, const Tolerance& tol = {}) {
  const Mat2C& a = l.matrix();
  const bool by_det = std::abs(det(a) - 1.0) < tol.eq_abs;
  const Mat2C j0 = j0_matrix();
  const bool by_commutator = spectral_norm(a * j0 - j0 * conj(a)) < tol.eq_abs;
  if (by_det != by_commutator)
    throw Error(ErrorCode::CriteriaDisagree, "determinant and J0-commutation fibre tests disagree");
  return by_det;
}

inline LineU2 j_line(const LineU2& l, const Tolerance& tol = {}) {
  return LineU2::from(std::polar(1.0, -l.theta()) * l.su2_part(), tol);
}

struct SpherePoint {
  Mat2C x;
};

/// The round 2-sphere {x : tr(U^{-1} x) = 2 cos theta} of SU(2).
struct Sphere {
  Mat2C center;
  double radius = 0.0;
};

using SphereOrPoint = std::variant<SpherePoint, Sphere>;

inline SphereOrPoint line_sphere(const LineU2& l, const Tolerance& tol = {}) {
  if (is_fibre(l, tol)) return SpherePoint{l.matrix()};
  return Sphere{l.su2_part(), l.theta()};
}

struct SphereMembership {
  double det_residual = 0.0;    // |det(A - x)|
  double trace_residual = 0.0;  // |tr(U^{-1} x) - 2 cos theta|
  bool member = false;
};

/// Membership of x in SU(2) in the projection of the line; both criteria
/// are evaluated and must agree under disc_zero.
inline SphereMembership sphere_membership(const LineU2& l, const Mat2C& x, const Tolerance& tol = {}) {
  if (!is_su2(x, tol)) throw Error(ErrorCode::NotSU2, "sphere points are elements of SU(2)");
  SphereMembership m;
  m.det_residual = std::abs(det(l.matrix() - x));
  m.trace_residual =
      std::abs(trace(adjoint(l.su2_part()) * x) - 2.0 * std::cos(l.theta()));
  const bool a = m.det_residual < tol.disc_zero;
  const bool b = m.trace_residual < tol.disc_zero;
  if (a != b) throw Error(ErrorCode::CriteriaDisagree, "determinant and trace sphere tests disagree");
  m.member = a;
  return m;
}

struct IncidenceValues {
  double det_value = 0.0;    // |det(A - B)|
  double trace_value = 0.0;  // |tr(V^{-1} U) - 2 cos(theta - phi)|
};

inline IncidenceValues incidence_values(const LineU2& l1, const LineU2& l2) {
  IncidenceValues v;
  v.det_value = std::abs(det(l1.matrix() - l2.matrix()));
  v.trace_value = std::abs(trace(adjoint(l2.su2_part()) * l1.su2_part()) -
                           2.0 * std::cos(l1.theta() - l2.theta()));
  return v;
}

inline bool lines_meet(const LineU2& l1, const LineU2& l2, const Tolerance& tol = {}) {
  const IncidenceValues v = incidence_values(l1, l2);
  const bool a = v.det_value < tol.disc_zero;
  const bool b = v.trace_value < tol.disc_zero;
  if (a != b) throw Error(ErrorCode::CriteriaDisagree, "determinant and trace incidence tests disagree");
  return a;
}

enum class Tangency { Compatible, Opposite, Both, None };

inline const char* tangency_name(Tangency t) {
  switch (t) {
    case Tangency::Compatible: return "compatible";
    case Tangency::Opposite: return "opposite";
    case Tangency::Both: return "both";
    case Tangency::None: return "none";
  }
  return "none";
}

/// Compatible: l1 meets l2. Opposite: l1 meets j(l2).
inline Tangency tangency_relation(const LineU2& l1, const LineU2& l2, const Tolerance& tol = {}) {
  if (is_fibre(l1, tol) || is_fibre(l2, tol))
    throw Error(ErrorCode::FibreInput, "tangency is defined for non-fibre lines");
  const bool comp = lines_meet(l1, l2, tol);
  const bool opp = lines_meet(l1, j_line(l2, tol), tol);
  if (comp && opp) return Tangency::Both;
  if (comp) return Tangency::Compatible;
  if (opp) return Tangency::Opposite;
  return Tangency::None;
}

/// Base point of the fibre that is the graph of x: project_quat([1 : 0 : x(1,0)^T]).
inline Quat fibre_basepoint(const Mat2C& x, const Tolerance& tol = {}) {
  if (!is_su2(x, tol)) throw Error(ErrorCode::NotSU2, "fibre base points are defined for SU(2)");
  const QuatExt q = project_quat(ProjPoint::from({1.0, 0.0, x(0, 0), x(1, 0)}, tol), tol);
  return std::get<Quat>(q);
}

/// Recovers the unitary graph matrix of a line of Q^{2,2} from points on it.
/// The two points whose (z0, z1) parts are best conditioned fix A; the rest
/// are checked against it.
inline LineU2 recover_line(const std::vector<ProjPoint>& points, const Tolerance& tol = {}) {
  if (points.size() < 2)
    throw Error(ErrorCode::DegenerateConfiguration, "at least two points are required");
  for (const auto& p : points)
    if (!in_q22(p, tol)) throw Error(ErrorCode::NotOnHypersurface, "input point is not on Q^{2,2}");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t k = i + 1; k < points.size(); ++k)
      if (proj_eq(points[i], points[k], tol))
        throw Error(ErrorCode::DegenerateConfiguration, "input points must be pairwise distinct");

  double best = -1.0;
  std::size_t bi = 0, bk = 1;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t k = i + 1; k < points.size(); ++k) {
      const double d = std::abs(points[i][0] * points[k][1] - points[i][1] * points[k][0]);
      if (d > best) {
        best = d;
        bi = i;
        bk = k;
      }
    }
  if (best < tol.eq_abs)
    throw Error(ErrorCode::DegenerateConfiguration, "(z0, z1) parts of the inputs are dependent");

  Mat2C z, w;
  z.set_col(0, {points[bi][0], points[bi][1]});
  z.set_col(1, {points[bk][0], points[bk][1]});
  w.set_col(0, {points[bi][2], points[bi][3]});
  w.set_col(1, {points[bk][2], points[bk][3]});
  const Mat2C a = w * inverse(z);

  if (unitarity_defect(a) > 10.0 * tol.eq_abs)
    throw Error(ErrorCode::NotUnitary, "recovered graph matrix is not unitary");
  Tolerance loose = tol;
  loose.eq_abs = 10.0 * tol.eq_abs;
  const LineU2 l = LineU2::from(a, loose);
  for (const auto& p : points)
    if (!line_contains(l, p, loose))
      throw Error(ErrorCode::NotOnCommonLine, "inputs do not lie on a common line");
  return l;
}

/// x = V diag(e^{i theta}, e^{-i theta}) V^{-1}: a point of C_theta.
inline Mat2C sample_c_theta(Rng& rng, double theta) {
  const Mat2C v = haar_unitary(rng, UnitaryGroup::SU2);
  return v * Mat2C::diagonal({std::polar(1.0, theta), std::polar(1.0, -theta)}) * adjoint(v);
}

}  // namespace q22

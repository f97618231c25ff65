#pragma once

// Projective symmetries of Q^{2,2} commuting with j, the hyperplane
// invariant Delta and the three hyperplane orbits with explicit witnesses.

#include <cmath>
#include <optional>

#include "q22/numeric.hpp"
#include "q22/twistor.hpp"

namespace q22 {

struct GroupMembership {
  std::optional<double> stabilizer_scale;  // lambda with G^* H G = lambda H
  bool commutes_j = false;
  bool in_gjq = false;
  Mat4C aligned;            // e^{i psi} G, the representative used for the j test
  double commute_residual = 0.0;
};

/// Stabilizer test: lambda read off the (0,0) entry, then checked on the whole
/// matrix. The j test picks the unimodular rescaling e^{i psi} G minimizing
/// ||e^{2 i psi} G S - S conj(G)||, which is the least-squares phase.
inline GroupMembership group_membership(const Mat4C& g, const Tolerance& tol = {}) {
  GroupMembership m;
  const double gn = frobenius(g);
  if (std::abs(det(g)) <= tol.eq_abs * std::pow(std::max(gn, 1.0), 4)) {
    m.aligned = g;
    return m;
  }
  const Mat4C h = h_matrix();
  const Mat4C ghg = adjoint(g) * h * g;
  const double lambda = ghg(0, 0).real();
  if (std::abs(lambda) > 1e-8 * gn * gn && frobenius(ghg - cplx(lambda) * h) <= 1e-8 * gn * gn)
    m.stabilizer_scale = lambda;

  const Mat4C s = s_matrix();
  const Mat4C gs = g * s;
  const Mat4C sg = s * conj(g);
  cplx w = 0.0;
  for (std::size_t i = 0; i < 16; ++i) w += std::conj(gs.e[i]) * sg.e[i];
  if (std::abs(w) > 0.0) {
    const cplx omega = w / std::abs(w);
    m.commute_residual = frobenius(omega * gs - sg);
    m.commutes_j = m.commute_residual < tol.eq_abs * gn;
    m.aligned = std::sqrt(omega) * g;
  } else {
    m.commute_residual = frobenius(gs - sg);
    m.aligned = g;
  }
  m.in_gjq = m.stabilizer_scale.has_value() && m.commutes_j;
  return m;
}

/// Entrywise distance of G from the quaternionic pattern
/// [[a, b, c, d], [-b', a', -d', c'], [e, f, g, h], [-f', e', -h', g']] (' = conj).
inline double quaternionic_pattern_residual(const Mat4C& g) {
  double r = 0.0;
  for (std::size_t blk = 0; blk < 4; blk += 2) {
    for (std::size_t c = 0; c < 4; c += 2) {
      r = std::max(r, std::abs(g(blk + 1, c) + std::conj(g(blk, c + 1))));
      r = std::max(r, std::abs(g(blk + 1, c + 1) - std::conj(g(blk, c))));
    }
  }
  return r;
}

/// Delta = h(n_v, n_v) on the unit-normalized covector.
inline double hyperplane_delta(const HyperplaneDual& hp) {
  const double n = norm(hp.v);
  if (!(n > 0.0)) throw Error(ErrorCode::ZeroCovector, "hyperplane covector must be nonzero");
  const Vec4C v = cplx(1.0 / n) * hp.v;
  return std::norm(v[0]) + std::norm(v[1]) - std::norm(v[2]) - std::norm(v[3]);
}

enum class OrbitClass { Positive, Negative, Tangent };

inline const char* orbit_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::Positive: return "positive";
    case OrbitClass::Negative: return "negative";
    case OrbitClass::Tangent: return "tangent";
  }
  return "tangent";
}

inline Vec4C canonical_normal(OrbitClass c) {
  switch (c) {
    case OrbitClass::Positive: return {1.0, 0.0, 0.0, 0.0};
    case OrbitClass::Negative: return {0.0, 0.0, 1.0, 0.0};
    case OrbitClass::Tangent: return {1.0, 0.0, 1.0, 0.0};
  }
  return {};
}

struct WitnessResiduals {
  double stab = 0.0;     // ||g^* H g - H||_F
  double commute = 0.0;  // ||g S - S conj(g)||_F
  double map = 0.0;      // distance of g.target from the line of n_v (unit vectors)
};

struct Witness {
  Mat4C g;
  Vec4C target{};
  WitnessResiduals residuals;
};

struct HyperplaneClass {
  OrbitClass orbit = OrbitClass::Positive;
  double delta = 0.0;
  Witness witness;
};

/// U_w = [[conj xi, conj eta], [-eta, xi]] / ||w||, so U_w w = (||w||, 0).
/// The zero vector gets the identity.
inline Mat2C u_w(const Vec2C& w) {
  const double n = norm(w);
  if (n == 0.0) return Mat2C::identity();
  Mat2C u;
  u(0, 0) = std::conj(w[0]) / n;
  u(0, 1) = std::conj(w[1]) / n;
  u(1, 0) = -w[1] / n;
  u(1, 1) = w[0] / n;
  return u;
}

inline Mat4C block_diag(const Mat2C& a, const Mat2C& b) {
  Mat4C m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      m(i, k) = a(i, k);
      m(i + 2, k + 2) = b(i, k);
    }
  return m;
}

/// The boost [[r I, s I], [s I, r I]].
inline Mat4C boost_c(double r, double s) {
  Mat4C m;
  for (std::size_t i = 0; i < 2; ++i) {
    m(i, i) = r;
    m(i + 2, i + 2) = r;
    m(i, i + 2) = s;
    m(i + 2, i) = s;
  }
  return m;
}

/// Block swap: R^* H R = -H and R S = S conj(R).
inline Mat4C r_element() {
  Mat4C m;
  m(0, 2) = 1.0;
  m(1, 3) = 1.0;
  m(2, 0) = 1.0;
  m(3, 1) = 1.0;
  return m;
}

/// || b/|b| - <a, b>/|<a, b>| a/|a| ||: zero iff a and b are proportional.
inline double proportionality_residual(const Vec4C& a, const Vec4C& b) {
  const Vec4C ua = normalized(a);
  const Vec4C ub = normalized(b);
  const cplx c = inner(ua, ub);
  const cplx ph = std::abs(c) > 0.0 ? c / std::abs(c) : cplx(1.0);
  return norm(ub - ph * ua);
}

inline WitnessResiduals witness_residuals(const Mat4C& g, const Vec4C& target, const Vec4C& n) {
  const Mat4C h = h_matrix();
  const Mat4C s = s_matrix();
  return {frobenius(adjoint(g) * h * g - h), frobenius(g * s - s * conj(g)),
          proportionality_residual(g * target, n)};
}

/// Classifies Pi_v by the sign of Delta and builds g in the j-compatible
/// stabilizer with g . target proportional to n_v: g = D_n^{-1} C_{r,s} for
/// the definite cases, g = D_n^{-1} in the tangent case.
inline HyperplaneClass classify_hyperplane(const HyperplaneDual& hp, const Tolerance& tol = {}) {
  HyperplaneClass out;
  out.delta = hyperplane_delta(hp);
  // canonical phase, so an already canonical plane gets g = I
  const Vec4C n = ProjPoint::from(hp.normal(), tol).coords();
  const Vec2C x{n[0], n[1]};
  const Vec2C y{n[2], n[3]};
  const Mat4C d_inv = adjoint(block_diag(u_w(x), u_w(y)));

  Mat4C g;
  if (std::abs(out.delta) < tol.disc_zero) {
    out.orbit = OrbitClass::Tangent;
    g = d_inv;
  } else {
    const double scale = 1.0 / std::sqrt(std::abs(out.delta));
    const double nx = norm(x) * scale;
    const double ny = norm(y) * scale;
    if (out.delta > 0.0) {
      out.orbit = OrbitClass::Positive;
      g = d_inv * boost_c(nx, ny);
    } else {
      out.orbit = OrbitClass::Negative;
      g = d_inv * boost_c(ny, nx);
    }
  }
  out.witness.g = g;
  out.witness.target = canonical_normal(out.orbit);
  out.witness.residuals = witness_residuals(g, out.witness.target, n);
  return out;
}

/// The image of Pi_v under z -> G z is Pi_{v'} with v' = G^{-T} v.
inline HyperplaneDual transform_hyperplane(const Mat4C& g, const HyperplaneDual& hp) {
  return {transpose(inverse(g)) * hp.v};
}

/// A random element of the j-compatible stabilizer: SU(2) blocks around a
/// boost of rapidity t in [-2, 2].
inline Mat4C random_gjq_element(Rng& rng) {
  const auto blocks = [&] {
    const Mat2C a = haar_unitary(rng, UnitaryGroup::SU2);
    const Mat2C b = haar_unitary(rng, UnitaryGroup::SU2);
    return block_diag(a, b);
  };
  const double t = uniform(rng, -2.0, 2.0);
  return blocks() * boost_c(std::cosh(t), std::sinh(t)) * blocks();
}

}  // namespace q22

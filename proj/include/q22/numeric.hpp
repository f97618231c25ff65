#pragma once

// Fixed-size complex linear algebra, quaternions in the complex-pair
// convention q = p0 + j*p1 (with j*a = conj(a)*j), seeded samplers and the
// shared tolerance policy.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

#include "q22/error.hpp"

namespace q22 {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Thresholds shared by every approximate predicate in the library.
struct Tolerance {
  double eq_abs = 1e-9;       ///< absolute equality after normalization
  double disc_zero = 1e-8;    ///< discriminant / incidence zero test
  double containment = 1e-8;  ///< matching of circle parameters

  void validate() const {
    if (!(eq_abs > 0.0) || !(disc_zero > 0.0) || !(containment > 0.0))
      throw Error(ErrorCode::InvalidTolerance, "all tolerance fields must be strictly positive");
  }
};

// ---------------------------------------------------------------------------
// Vectors

template <std::size_t N>
using CVec = std::array<cplx, N>;
using Vec2C = CVec<2>;
using Vec3C = CVec<3>;
using Vec4C = CVec<4>;

template <std::size_t N>
constexpr CVec<N> operator+(const CVec<N>& a, const CVec<N>& b) {
  CVec<N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
constexpr CVec<N> operator-(const CVec<N>& a, const CVec<N>& b) {
  CVec<N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
constexpr CVec<N> operator*(cplx s, const CVec<N>& a) {
  CVec<N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
  return r;
}

template <std::size_t N>
CVec<N> conj(const CVec<N>& a) {
  CVec<N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = std::conj(a[i]);
  return r;
}

/// Hermitian inner product, conjugate-linear in the first slot.
template <std::size_t N>
cplx inner(const CVec<N>& a, const CVec<N>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Bilinear pairing sum a_i b_i (no conjugation).
template <std::size_t N>
cplx dot(const CVec<N>& a, const CVec<N>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
double norm_sq(const CVec<N>& a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(x);
  return s;
}

template <std::size_t N>
double norm(const CVec<N>& a) {
  return std::sqrt(norm_sq(a));
}

template <std::size_t N>
CVec<N> normalized(const CVec<N>& a) {
  const double n = norm(a);
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  return cplx(1.0 / n) * a;
}

/// Complex cross product: the vector annihilated by both linear forms a, b
/// under the bilinear pairing.
inline Vec3C cross(const Vec3C& a, const Vec3C& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// ---------------------------------------------------------------------------
// Square matrices, row-major

template <std::size_t N>
struct CMat {
  std::array<cplx, N * N> e{};

  static constexpr CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr CMat diagonal(const CVec<N>& d) {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr cplx& operator()(std::size_t r, std::size_t c) { return e[r * N + c]; }
  constexpr const cplx& operator()(std::size_t r, std::size_t c) const { return e[r * N + c]; }

  CVec<N> col(std::size_t c) const {
    CVec<N> v{};
    for (std::size_t r = 0; r < N; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_col(std::size_t c, const CVec<N>& v) {
    for (std::size_t r = 0; r < N; ++r) (*this)(r, c) = v[r];
  }
};

using Mat2C = CMat<2>;
using Mat4C = CMat<4>;

template <std::size_t N>
CMat<N> operator*(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <std::size_t N>
CVec<N> operator*(const CMat<N>& a, const CVec<N>& v) {
  CVec<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
  return r;
}

template <std::size_t N>
CMat<N> operator*(cplx s, const CMat<N>& a) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.e[i] = s * a.e[i];
  return r;
}

template <std::size_t N>
CMat<N> operator+(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

template <std::size_t N>
CMat<N> operator-(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

template <std::size_t N>
CMat<N> conj(const CMat<N>& a) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.e[i] = std::conj(a.e[i]);
  return r;
}

template <std::size_t N>
CMat<N> transpose(const CMat<N>& a) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = a(j, i);
  return r;
}

template <std::size_t N>
CMat<N> adjoint(const CMat<N>& a) {
  return conj(transpose(a));
}

template <std::size_t N>
cplx trace(const CMat<N>& a) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

/// Frobenius norm.
template <std::size_t N>
double frobenius(const CMat<N>& a) {
  double s = 0.0;
  for (const auto& x : a.e) s += std::norm(x);
  return std::sqrt(s);
}

template <std::size_t N>
double max_abs(const CMat<N>& a) {
  double m = 0.0;
  for (const auto& x : a.e) m = std::max(m, std::abs(x));
  return m;
}

inline cplx det(const Mat2C& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

/// Determinant by Gaussian elimination with partial pivoting.
template <std::size_t N>
cplx det(CMat<N> a) {
  cplx d = 1.0;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (a(piv, c) == cplx(0.0)) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < N; ++k) std::swap(a(piv, k), a(c, k));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t r = c + 1; r < N; ++r) {
      const cplx f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < N; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

inline Mat2C inverse(const Mat2C& a) {
  const cplx d = det(a);
  if (d == cplx(0.0)) throw Error(ErrorCode::DegenerateConfiguration, "singular 2x2 matrix");
  Mat2C r;
  r(0, 0) = a(1, 1) / d;
  r(0, 1) = -a(0, 1) / d;
  r(1, 0) = -a(1, 0) / d;
  r(1, 1) = a(0, 0) / d;
  return r;
}

/// Gauss-Jordan inverse with partial pivoting.
template <std::size_t N>
CMat<N> inverse(CMat<N> a) {
  CMat<N> inv = CMat<N>::identity();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (a(piv, c) == cplx(0.0)) throw Error(ErrorCode::DegenerateConfiguration, "singular matrix");
    if (piv != c)
      for (std::size_t k = 0; k < N; ++k) {
        std::swap(a(piv, k), a(c, k));
        std::swap(inv(piv, k), inv(c, k));
      }
    const cplx p = a(c, c);
    for (std::size_t k = 0; k < N; ++k) {
      a(c, k) /= p;
      inv(c, k) /= p;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c) continue;
      const cplx f = a(r, c);
      if (f == cplx(0.0)) continue;
      for (std::size_t k = 0; k < N; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

/// Deviation of A from unitarity, ||A*A - I||_F.
template <std::size_t N>
double unitarity_defect(const CMat<N>& a) {
  return frobenius(adjoint(a) * a - CMat<N>::identity());
}

/// Largest singular value of a 2x2 matrix, closed form.
inline double spectral_norm(const Mat2C& a) {
  const Mat2C g = adjoint(a) * a;
  const double t = g(0, 0).real() + g(1, 1).real();
  const double d = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
  const double disc = std::max(0.0, t * t / 4.0 - d);
  return std::sqrt(std::max(0.0, t / 2.0 + std::sqrt(disc)));
}

/// Eigenvalues of a 2x2 Hermitian matrix from trace and determinant,
/// ascending.
inline std::pair<double, double> hermitian2_eigenvalues(const Mat2C& m) {
  const double t = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double half_diff = 0.5 * (m(0, 0).real() - m(1, 1).real());
  const double r = std::hypot(half_diff, std::abs(m(0, 1)));
  return {t - r, t + r};
}

struct Signature {
  int pos = 0;
  int neg = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature hermitian2_signature(const Mat2C& m, double zero_tol) {
  const auto [lo, hi] = hermitian2_eigenvalues(m);
  Signature s;
  for (double ev : {lo, hi}) {
    if (ev > zero_tol) ++s.pos;
    else if (ev < -zero_tol) ++s.neg;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Quaternions q = p0 + j*p1, with j*a = conj(a)*j for complex a.

struct Quat {
  cplx p0{0.0};
  cplx p1{0.0};

  static constexpr Quat one() { return {1.0, 0.0}; }
  static constexpr Quat j() { return {0.0, 1.0}; }

  double norm_sq() const { return std::norm(p0) + std::norm(p1); }
  double norm() const { return std::sqrt(norm_sq()); }
  Quat conjugate() const { return {std::conj(p0), -p1}; }

  Quat inverse() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw Error(ErrorCode::ZeroVector, "zero quaternion has no inverse");
    const Quat c = conjugate();
    return {c.p0 / n2, c.p1 / n2};
  }

  /// Real coordinates (Re p0, Im p0, Re p1, Im p1).
  std::array<double, 4> as_real4() const { return {p0.real(), p0.imag(), p1.real(), p1.imag()}; }
  static Quat from_real4(const std::array<double, 4>& x) { return {{x[0], x[1]}, {x[2], x[3]}}; }
};

/// (a0 + j a1)(b0 + j b1) = (a0 b0 - conj(a1) b1) + j (a1 b0 + conj(a0) b1).
inline Quat operator*(const Quat& a, const Quat& b) {
  return {a.p0 * b.p0 - std::conj(a.p1) * b.p1, a.p1 * b.p0 + std::conj(a.p0) * b.p1};
}

inline Quat operator+(const Quat& a, const Quat& b) { return {a.p0 + b.p0, a.p1 + b.p1}; }
inline Quat operator-(const Quat& a, const Quat& b) { return {a.p0 - b.p0, a.p1 - b.p1}; }
inline Quat operator*(double s, const Quat& a) { return {s * a.p0, s * a.p1}; }

inline Quat quat_mul(const Quat& a, const Quat& b) { return a * b; }

inline double distance(const Quat& a, const Quat& b) { return (a - b).norm(); }

// ---------------------------------------------------------------------------
// Unitary phase split A = e^{i theta} U with theta in [0, pi), U in SU(2).

struct PhaseSplit {
  double theta = 0.0;
  Mat2C U;
};

inline PhaseSplit unitary_phase_split(const Mat2C& a, const Tolerance& tol = {}) {
  if (unitarity_defect(a) > tol.eq_abs)
    throw Error(ErrorCode::NotUnitary, "phase split requires a unitary matrix");
  // half the principal argument lies in (-pi/2, pi/2]; negative values are
  // folded up by pi, which absorbs a factor -1 into U.
  double theta = 0.5 * std::arg(det(a));
  if (theta < 0.0) theta += pi;
  if (theta >= pi) theta -= pi;
  return {theta, std::polar(1.0, -theta) * a};
}

inline bool is_su2(const Mat2C& x, const Tolerance& tol = {}) {
  return unitarity_defect(x) <= tol.eq_abs && std::abs(det(x) - 1.0) <= tol.eq_abs;
}

/// SU(2) -> unit quaternion. For x = [[alpha, beta], [-conj(beta), conj(alpha)]]
/// returns alpha - j*conj(beta): the base point of the twistor fibre that is
/// the graph of x, so the fibre base-point map is the identity under this
/// bridge.
inline Quat su2_to_quat(const Mat2C& x, const Tolerance& tol = {}) {
  if (!is_su2(x, tol)) throw Error(ErrorCode::NotSU2, "input is not in SU(2)");
  return {x(0, 0), x(1, 0)};
}

inline Mat2C quat_to_su2(const Quat& q, const Tolerance& tol = {}) {
  if (std::abs(q.norm() - 1.0) > tol.eq_abs)
    throw Error(ErrorCode::NotUnitQuaternion, "quaternion must have unit norm");
  Mat2C x;
  x(0, 0) = q.p0;
  x(0, 1) = -std::conj(q.p1);
  x(1, 0) = q.p1;
  x(1, 1) = std::conj(q.p0);
  return x;
}

// ---------------------------------------------------------------------------
// Deterministic sampling

using Rng = std::mt19937_64;

inline cplx complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

template <std::size_t N>
CVec<N> complex_gaussian_vec(Rng& rng) {
  CVec<N> v{};
  for (auto& x : v) x = complex_gaussian(rng);
  return v;
}

inline double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

enum class UnitaryGroup { U2, SU2 };

/// Haar-distributed unitary: Gram-Schmidt on two complex-Gaussian columns;
/// for SU(2) the first column is divided by the determinant.
inline Mat2C haar_unitary(Rng& rng, UnitaryGroup group) {
  Vec2C c0 = complex_gaussian_vec<2>(rng);
  Vec2C c1 = complex_gaussian_vec<2>(rng);
  c0 = normalized(c0);
  c1 = c1 - inner(c0, c1) * c0;
  c1 = normalized(c1);
  Mat2C a;
  a.set_col(0, c0);
  a.set_col(1, c1);
  if (group == UnitaryGroup::SU2) {
    const cplx d = det(a);
    a.set_col(0, cplx(1.0) / d * c0);
  }
  return a;
}

inline Mat2C haar_unitary(std::uint64_t seed, UnitaryGroup group) {
  Rng rng(seed);
  return haar_unitary(rng, group);
}

/// Uniform point of the unit 3-sphere as a unit quaternion.
inline Quat random_unit_quat(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::array<double, 4> x{};
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& c : x) {
      c = n(rng);
      s += c * c;
    }
  } while (s < 1e-12);
  const double inv = 1.0 / std::sqrt(s);
  for (auto& c : x) c *= inv;
  return Quat::from_real4(x);
}

}  // namespace q22

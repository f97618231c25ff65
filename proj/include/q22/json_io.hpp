#pragma once

// JSON wire format: complex numbers as [re, im], vectors as arrays of those,
// matrices as row-major nested arrays, the point at infinity as "inf".

#include <json.hpp>

#include "q22/numeric.hpp"
#include "q22/twistor.hpp"

namespace q22 {

using json = nlohmann::json;

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

/// Accepts [re, im] or a bare real number.
inline cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument("expected a complex number [re, im]");
}

template <std::size_t N>
json to_json(const CVec<N>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

template <std::size_t N>
CVec<N> vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != N)
    throw std::invalid_argument("expected an array of " + std::to_string(N) + " complex numbers");
  CVec<N> v{};
  for (std::size_t i = 0; i < N; ++i) v[i] = complex_from_json(j[i]);
  return v;
}

template <std::size_t N>
json to_json(const CMat<N>& m) {
  json a = json::array();
  for (std::size_t r = 0; r < N; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back(to_json(m(r, c)));
    a.push_back(row);
  }
  return a;
}

template <std::size_t N>
CMat<N> mat_from_json(const json& j) {
  if (!j.is_array() || j.size() != N)
    throw std::invalid_argument("expected a " + std::to_string(N) + "x" + std::to_string(N) + " matrix");
  CMat<N> m;
  for (std::size_t r = 0; r < N; ++r) {
    const CVec<N> row = vec_from_json<N>(j[r]);
    for (std::size_t c = 0; c < N; ++c) m(r, c) = row[c];
  }
  return m;
}

inline json to_json(const ProjPoint& p) { return to_json(p.coords()); }

inline json to_json(const Quat& q) { return {{"p0", to_json(q.p0)}, {"p1", to_json(q.p1)}}; }

inline json to_json(const QuatExt& q) {
  if (is_infinity(q)) return "inf";
  return to_json(std::get<Quat>(q));
}

}  // namespace q22

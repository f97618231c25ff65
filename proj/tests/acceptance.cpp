// Acceptance gate: one PASS/FAIL line per criterion. Arguments, if any, are
// unit-test executables that criterion 11 runs and times.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "q22/q22.hpp"

using namespace q22;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) note << what;
    pass = pass && ok;
  }
};

cplx e_i(double t) { return std::polar(1.0, t); }

Outcome family_determinant() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const FamilyParams fp{uniform(rng, -3.0, 3.0), uniform(rng, 1e-3, 3.0)};
    const double r4 = std::pow(fp.r, 4);
    worst = std::max(worst, std::abs(det(family_quadric(fp)) - r4) / r4);
  }
  const double secs = seconds_since(t0);
  o.check(worst < 1e-9, "relative error too large");
  o.check(secs < 1.0, "too slow");
  o.note << "max rel err " << worst << ", " << secs << " s";
  return o;
}

Outcome inversive_distances() {
  Outcome o;
  const double a = inversive_distance({1.0, 1.0});
  const double b = inversive_distance({2.0, 1.0});
  const double c = inversive_distance({0.0, 0.5});
  o.check(std::abs(a - 0.5) < 1e-12 && std::abs(b - 1.0) < 1e-12 && std::abs(c - 1.25) < 1e-12,
          "value mismatch ");
  o.note << "I = " << a << ", " << b << ", " << c;
  return o;
}

Outcome levi_law() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(103);
  double worst = 0.0;
  bool sig = true;
  for (Chart chart : {Chart::U0, Chart::U3}) {
    for (int i = 0; i < 1000; ++i) {
      const ChartPoint cp = sample_q22_chart(rng, chart);
      const LeviReport rep = levi_report(cp);
      const double want = -1.0 / (4.0 * std::norm(cp.coords[2]));
      worst = std::max(worst, std::abs(rep.det - want) / std::abs(want));
      sig = sig && rep.signature.pos == 1 && rep.signature.neg == 1;
    }
  }
  const double secs = seconds_since(t0);
  o.check(worst < 1e-8, "determinant mismatch ");
  o.check(sig, "signature not (1,1) ");
  o.check(secs < 1.0, "too slow ");
  o.note << "max rel err " << worst << ", " << secs << " s";
  return o;
}

Outcome incidence_equivalence() {
  Outcome o;
  const Tolerance tol;
  Rng rng(104);
  int agree = 0, total = 0, tangent_hits = 0;
  const auto test_pair = [&](const LineU2& a, const LineU2& b) {
    const bool by_det = std::abs(det(a.matrix() - b.matrix())) < tol.disc_zero;
    const cplx tr = trace(adjoint(b.su2_part()) * a.su2_part());
    const bool by_trace = std::abs(tr - 2.0 * std::cos(a.theta() - b.theta())) < tol.disc_zero;
    ++total;
    if (by_det == by_trace) ++agree;
    return by_det && by_trace;
  };
  for (int i = 0; i < 1000; ++i)
    test_pair(line_from_unitary(haar_unitary(rng, UnitaryGroup::U2)),
              line_from_unitary(haar_unitary(rng, UnitaryGroup::U2)));
  for (int i = 0; i < 1000; ++i) {
    const LineU2 a = line_from_unitary(haar_unitary(rng, UnitaryGroup::U2));
    const double phi = uniform(rng, 0.0, pi);
    const Mat2C w = sample_c_theta(rng, a.theta() - phi);
    if (test_pair(a, line_from_unitary(e_i(phi) * a.su2_part() * adjoint(w)))) ++tangent_hits;
  }
  o.check(agree == total, "criteria disagree ");
  o.check(tangent_hits == 1000, "constructed pairs not incident ");

  const LineU2 a3 = line_from_unitary(e_i(pi / 3) * Mat2C::identity());
  const LineU2 b3 = line_from_unitary(e_i(pi / 6) * Mat2C::diagonal({e_i(pi / 6), e_i(-pi / 6)}));
  const LineU2 a4 = line_from_unitary(e_i(pi / 4) * Mat2C::identity());
  const LineU2 b4 = line_from_unitary(e_i(pi / 4) * Mat2C::diagonal({cplx(0, 1), cplx(0, -1)}));
  const Tangency t3 = tangency_relation(a3, b3);
  const Tangency t4 = tangency_relation(a4, b4);
  o.check(t3 == Tangency::Compatible, "example (iii) ");
  o.check(t4 == Tangency::Opposite, "example (iv) ");
  o.note << agree << "/" << total << " agree, " << tangent_hits << "/1000 constructed incident, examples "
         << tangency_name(t3) << "/" << tangency_name(t4);
  return o;
}

Outcome discriminant_geometry() {
  Outcome o;
  {
    const auto [dc, rp] = classify_family({2.0, 1.0});
    o.check(dc.kind == DiscriminantCircle::Kind::Circle && std::abs(dc.center - 2.0 / 3.0) < 1e-12 &&
                std::abs(dc.radius - 1.0 / 3.0) < 1e-12,
            "(2,1) circle ");
    // circle |z - c| = rho against |z| = 1: x = (1 + c^2 - rho^2) / (2c)
    const double x = (1.0 + 4.0 / 9.0 - 1.0 / 9.0) / (4.0 / 3.0);
    o.check(std::abs(x - 1.0) < 1e-12 && rp.position == Position::Tangent && rp.branch_points.size() == 1 &&
                std::abs(rp.branch_points[0] - cplx(x, 0.0)) < 1e-12,
            "(2,1) branch point ");
    // and the fibre over q = 1 really is degenerate
    o.check(restrict_to_fibre(family_quadric({2.0, 1.0}), Quat::one()).type() != FibreType::Two,
            "(2,1) fibre over 1 ");
  }
  {
    const auto [dc, rp] = classify_family({1.0, 1.0});
    o.check(dc.kind == DiscriminantCircle::Kind::Line && std::abs(dc.re_equals - 0.5) < 1e-12, "(1,1) line ");
    // line Re z = 1/2 against |z| = 1
    const double y = std::sqrt(1.0 - 0.25);
    bool found_up = false, found_dn = false;
    for (const cplx z : rp.branch_points) {
      found_up = found_up || std::abs(z - cplx(0.5, y)) < 1e-12;
      found_dn = found_dn || std::abs(z - cplx(0.5, -y)) < 1e-12;
    }
    o.check(rp.position == Position::TwoPoints && rp.branch_points.size() == 2 && found_up && found_dn,
            "(1,1) branch points ");
  }
  {
    const auto [dc, rp] = classify_family({0.0, 1.0});
    o.check(rp.position == Position::Contained && dc.kind == DiscriminantCircle::Kind::ContainedUnitCircle,
            "(0,1) contained ");
  }
  o.note << "(2,1) tangent at 1, (1,1) line with two points, (0,1) contained";
  return o;
}

Outcome degenerate_levi() {
  Outcome o;
  const QuadricSym4 q = family_quadric({2.0, std::sqrt(3.0)});
  const ProjPoint p = ProjPoint::from({1.0, 1.0, -1.0, 1.0});
  const LeviType lt = section_levi_type(q, p);
  const auto [g2, g3] = eliminated_rho_gradient(q, p);
  // finite-difference check of the same partial on the explicit rho(u2, u3)
  const auto rho = [](cplx u2, cplx u3) {
    return 1.0 + std::norm((2.0 - u2) / (1.0 - 2.0 * u2)) * std::norm(u3) - std::norm(u2) - std::norm(u3);
  };
  const double h = 1e-5;
  const cplx fd(0.5 * (rho(-1.0 + h, 1.0) - rho(-1.0 - h, 1.0)) / (2 * h),
                -0.5 * (rho(cplx(-1.0, h), 1.0) - rho(cplx(-1.0, -h), 1.0)) / (2 * h));
  o.check(std::abs(lt.value) < 1e-10 && lt.degenerate, "Levi value ");
  o.check(std::abs(g2 - 4.0 / 3.0) < 1e-10, "d rho / d u2 ");
  o.check(std::abs(fd - 4.0 / 3.0) < 1e-8, "finite-difference partial ");
  o.note << "value " << lt.value << ", d rho/d u2 = " << g2.real() << " (fd " << fd.real() << ")";
  return o;
}

Outcome projection_identity() {
  Outcome o;
  const Tolerance tol;
  Rng rng(107);
  double worst = 0.0;
  int consistent = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vec4C z = complex_gaussian_vec<4>(rng);
    const double A = std::norm(z[0]) + std::norm(z[1]);
    const double B = std::norm(z[2]) + std::norm(z[3]);
    const cplx alpha = z[2] * std::conj(z[0]) + z[1] * std::conj(z[3]);
    const cplx beta = std::conj(z[0]) * z[3] - z[1] * std::conj(z[2]);
    const double lhs = (A - B) * (A - B) + 4 * std::norm(alpha) + 4 * std::norm(beta);
    worst = std::max(worst, std::abs(lhs - (A + B) * (A + B)) / ((A + B) * (A + B)));
    // the same identity with the holomorphic pair z2 conj z0 + z3 conj z1, z0 z3 - z1 z2
    const cplx alpha_h = z[2] * std::conj(z[0]) + z[3] * std::conj(z[1]);
    const cplx beta_h = z[0] * z[3] - z[1] * z[2];
    const double lhs_h = (A - B) * (A - B) + 4 * std::norm(alpha_h) + 4 * std::norm(beta_h);
    worst = std::max(worst, std::abs(lhs_h - (A + B) * (A + B)) / ((A + B) * (A + B)));
    // and the library's point is the normalized tuple
    const S4Point xs = project_r5(ProjPoint::from(z));
    worst = std::max({worst, std::abs(xs.x[0] - (A - B) / (A + B)), std::abs(xs.x[1] - 2 * alpha.real() / (A + B)),
                      std::abs(xs.x[4] - 2 * beta.imag() / (A + B))});

    // half the samples on Q^{2,2}, half generic
    const ProjPoint p = i % 2 == 0 ? fibre_over(random_unit_quat(rng)).map(z[0], z[1]) : ProjPoint::from(z);
    const S4Point x = project_r5(p);
    const QuatExt q = project_quat(p);
    const bool on_sigma_q = !is_infinity(q) && std::abs(std::get<Quat>(q).norm() - 1.0) < tol.eq_abs;
    if (on_sigma_q == x.on_sigma(tol) && (i % 2 != 0 || on_sigma_q)) ++consistent;
  }
  o.check(worst < 1e-10, "identity ");
  o.check(consistent == 1000, "Sigma consistency ");
  o.note << "max rel err " << worst << ", " << consistent << "/1000 consistent";
  return o;
}

Outcome hyperplane_orbits() {
  Outcome o;
  Rng rng(108);
  double worst = 0.0;
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    Vec4C v = complex_gaussian_vec<4>(rng);
    if (i % 10 == 0) {
      // force the tangent orbit: |(v0, v1)| = |(v2, v3)|
      const double s = std::sqrt((std::norm(v[0]) + std::norm(v[1])) / (std::norm(v[2]) + std::norm(v[3])));
      v[2] *= s;
      v[3] *= s;
    }
    const HyperplaneDual hp{v};
    const HyperplaneClass c = classify_hyperplane(hp);
    ++counts[static_cast<int>(c.orbit)];
    const Mat4C& g = c.witness.g;
    const double stab = frobenius(adjoint(g) * h_matrix() * g - h_matrix());
    const double comm = frobenius(g * s_matrix() - s_matrix() * conj(g));
    const double map = proportionality_residual(g * c.witness.target, hp.normal());
    worst = std::max({worst, stab, comm, map});
  }
  const Mat4C r = r_element();
  const Vec4C e0{1.0, 0.0, 0.0, 0.0}, e2{0.0, 0.0, 1.0, 0.0};
  const bool swaps = r * e0 == e2 && r * e2 == e0 && frobenius(adjoint(r) * h_matrix() * r + h_matrix()) == 0.0 &&
                     frobenius(r * s_matrix() - s_matrix() * conj(r)) == 0.0;
  o.check(worst < 1e-8, "witness residual ");
  o.check(swaps, "R element ");
  o.check(counts[2] >= 100, "tangent orbit not exercised ");
  o.note << "max residual " << worst << ", orbits +" << counts[0] << " -" << counts[1] << " 0:" << counts[2];
  return o;
}

Outcome global_sections() {
  Outcome o;
  const auto t0 = Clock::now();
  SectionsOptions opt;
  opt.grid = 10000;
  opt.loops = 100;
  opt.strict = false;
  const SectionsReport rep = sections_over_region({0.0, 0.5}, opt);
  const double secs = seconds_since(t0);
  o.check(rep.max_jswap_residual < 1e-8, "j-swap residual ");
  o.check(rep.monodromy_failures == 0, "monodromy ");
  o.check(secs < 30.0, "too slow ");
  o.note << "max j-swap " << rep.max_jswap_residual << ", " << rep.monodromy_failures << " monodromy failures, "
         << secs << " s";
  return o;
}

Outcome line_recovery() {
  Outcome o;
  Rng rng(110);
  double worst = 0.0, worst_unit = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Mat2C a = haar_unitary(rng, UnitaryGroup::U2);
    const LineU2 l = line_from_unitary(a);
    std::vector<ProjPoint> pts;
    for (int k = 0; k < 5; ++k) pts.push_back(l.point(complex_gaussian(rng), complex_gaussian(rng)));
    const LineU2 back = recover_line(pts);
    worst = std::max(worst, frobenius(back.matrix() - a));
    worst_unit = std::max(worst_unit, unitarity_defect(back.matrix()));
  }
  o.check(worst < 1e-8, "matrix mismatch ");
  o.check(worst_unit < 1e-9, "not unitary ");
  o.note << "max error " << worst << ", max unitarity defect " << worst_unit;
  return o;
}

Outcome suite_runtime(const std::vector<std::string>& suites, double own_seconds) {
  Outcome o;
  if (suites.empty()) {
    o.check(false, "no unit-test executables given");
    return o;
  }
  const auto t0 = Clock::now();
  int failed = 0;
  for (const auto& exe : suites) {
    const std::string cmd = "\"" + exe + "\" > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) ++failed;
  }
  const double secs = seconds_since(t0) + own_seconds;
  o.check(failed == 0, "failing suites ");
  o.check(secs < 60.0, "too slow ");
  o.note << suites.size() << " suites, " << failed << " failing, " << secs << " s including the gate";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> suites(argv + 1, argv + argc);
  const auto t0 = Clock::now();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"family determinant", family_determinant},
      {"inversive distances", inversive_distances},
      {"Levi law", levi_law},
      {"incidence equivalence", incidence_equivalence},
      {"discriminant geometry", discriminant_geometry},
      {"degenerate Levi witness", degenerate_levi},
      {"projection identity", projection_identity},
      {"hyperplane orbits", hyperplane_orbits},
      {"global sections", global_sections},
      {"line recovery", line_recovery},
  };
  int failures = 0;
  int n = 0;
  const auto report = [&](const char* name, const Outcome& o) {
    ++n;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << n << " " << name << ": " << o.note.str() << "\n";
    if (!o.pass) ++failures;
  };
  for (const auto& [name, fn] : criteria) {
    try {
      report(name, fn());
    } catch (const std::exception& e) {
      Outcome o;
      o.check(false, std::string("exception: ") + e.what());
      report(name, o);
    }
  }
  report("full suite runtime", suite_runtime(suites, seconds_since(t0)));
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}

#pragma once

// Command-line dispatch for the q22 tool. run_cli is the whole program; the
// executable only forwards argv and the standard streams.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "q22/q22.hpp"

namespace q22::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitPrecondition = 3;

namespace detail {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json parse_json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    throw ValidationError(std::string(what) + ": not valid JSON");
  }
}

template <class F>
auto validated(const char* what, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

inline json circle_json(const DiscriminantCircle& dc) {
  json j{{"kind", circle_kind_name(dc.kind)}};
  if (dc.kind == DiscriminantCircle::Kind::Line) {
    j["re_equals"] = dc.re_equals;
  } else if (dc.kind == DiscriminantCircle::Kind::Circle) {
    j["center"] = to_json(dc.center);
    j["radius"] = dc.radius;
  } else {
    j["center"] = to_json(cplx(0.0));
    j["radius"] = 1.0;
  }
  return j;
}

inline json levi_json(const ChartPoint& cp, const LeviReport& rep) {
  return {{"chart", cp.chart == Chart::U0 ? "U0" : "U3"},
          {"coords", to_json(cp.coords)},
          {"matrix", to_json(rep.matrix)},
          {"det", rep.det},
          {"signature", {rep.signature.pos, rep.signature.neg}}};
}

}  // namespace detail

/// Runs one CLI invocation. Results go to `out` (or the --out file),
/// diagnostics to `err`. Exit codes: 0 ok, 2 validation, 3 precondition.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twistor geometry of the hyperquadric Q^{2,2}"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  Tolerance tol;
  if (const char* env = std::getenv("Q22_TOL")) {
    try {
      tol.eq_abs = std::stod(env);
    } catch (const std::exception&) {
      err << "{\"error\":\"InvalidTolerance\",\"detail\":\"Q22_TOL is not a number\"}\n";
      return kExitValidation;
    }
  }
  app.add_option("--seed", seed, "random seed");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--out", out_path, "write the result to this file");
  app.add_option("--eq-abs", tol.eq_abs, "absolute equality tolerance");
  app.add_option("--disc-zero", tol.disc_zero, "discriminant zero threshold");
  app.add_option("--containment", tol.containment, "circle matching tolerance");

  std::string v_text, matrix_text, a_text, b_text, point_text, chart_text = "U0";
  double fa = 0.0, fr = 1.0;
  std::size_t grid = 10000, loops = 100;

  auto* c_hyp = app.add_subcommand("classify-hyperplane", "orbit class and witness of {v.z = 0}");
  c_hyp->add_option("--v", v_text, "covector as JSON [[re,im] x4]")->required();
  auto* c_quad = app.add_subcommand("classify-quadric", "discriminant circle of Q_{a,r}");
  c_quad->add_option("--a", fa)->required();
  c_quad->add_option("--r", fr)->required();
  auto* c_ls = app.add_subcommand("line-sphere", "sphere of the line with unitary graph matrix");
  c_ls->add_option("--matrix", matrix_text, "2x2 unitary as JSON")->required();
  auto* c_tan = app.add_subcommand("tangency", "tangency relation of two non-fibre lines");
  c_tan->add_option("--A", a_text)->required();
  c_tan->add_option("--B", b_text)->required();
  auto* c_levi = app.add_subcommand("levi", "Levi matrix at a point of Q^{2,2}");
  c_levi->add_option("--point", point_text, "point as JSON [[re,im] x4]")->required();
  c_levi->add_option("--chart", chart_text)->check(CLI::IsMember({"U0", "U3"}));
  auto* c_sec = app.add_subcommand("sections", "global section branches over Sigma");
  c_sec->add_option("--a", fa)->required();
  c_sec->add_option("--r", fr)->required();
  c_sec->add_option("--grid", grid);
  c_sec->add_option("--loops", loops);
  auto* c_slevi = app.add_subcommand("section-levi", "Levi type of the section CR structure");
  c_slevi->add_option("--a", fa)->required();
  c_slevi->add_option("--r", fr)->required();
  c_slevi->add_option("--point", point_text)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "ValidationError"}, {"detail", e.what()}}.dump() << "\n";
    return kExitValidation;
  }

  std::string payload;
  try {
    tol.validate();
    if (format != "json" && !c_quad->parsed())
      throw detail::ValidationError("--format csv|svg is only available for classify-quadric");

    json result;
    if (c_hyp->parsed()) {
      const HyperplaneDual hp{detail::validated(
          "--v", [&] { return vec_from_json<4>(detail::parse_json_arg(v_text, "--v")); })};
      const HyperplaneClass cls = classify_hyperplane(hp, tol);
      const SectionKind kind = section_kind(hp, tol);
      const auto& w = cls.witness;
      result = {{"class", orbit_name(cls.orbit)},
                {"delta", cls.delta},
                {"section", section_type_name(kind.type)},
                {"witness",
                 {{"matrix", to_json(w.g)},
                  {"target", to_json(w.target)},
                  {"residuals",
                   {{"stab", w.residuals.stab},
                    {"commute", w.residuals.commute},
                    {"map", w.residuals.map}}}}}};
      if (kind.singular_point) result["singular_point"] = to_json(*kind.singular_point);
    } else if (c_quad->parsed()) {
      const FamilyParams fp{fa, fr};
      const auto [dc, rp] = classify_family(fp, tol);
      if (format == "csv") {
        payload = figure_csv(fp, tol);
      } else if (format == "svg") {
        payload = figure_svg(fp, tol);
      } else {
        json bps = json::array();
        for (const cplx z : rp.branch_points) bps.push_back(to_json(z));
        result = {{"a", fa},
                  {"r", fr},
                  {"position", position_name(rp.position)},
                  {"I", rp.I},
                  {"circle", detail::circle_json(dc)},
                  {"branch_points", bps}};
      }
    } else if (c_ls->parsed()) {
      const Mat2C a = detail::validated(
          "--matrix", [&] { return mat_from_json<2>(detail::parse_json_arg(matrix_text, "--matrix")); });
      const LineU2 l = line_from_unitary(a, tol);
      const SphereOrPoint sp = line_sphere(l, tol);
      result = {{"is_fibre", std::holds_alternative<SpherePoint>(sp)},
                {"theta", l.theta()},
                {"U", to_json(l.su2_part())}};
      if (const auto* p = std::get_if<SpherePoint>(&sp)) {
        result["point"] = to_json(p->x);
        result["basepoint"] = to_json(fibre_basepoint(p->x, tol));
      } else {
        const auto& s = std::get<Sphere>(sp);
        result["sphere"] = {{"center", to_json(s.center)}, {"radius", s.radius}};
      }
    } else if (c_tan->parsed()) {
      const Mat2C a = detail::validated(
          "--A", [&] { return mat_from_json<2>(detail::parse_json_arg(a_text, "--A")); });
      const Mat2C b = detail::validated(
          "--B", [&] { return mat_from_json<2>(detail::parse_json_arg(b_text, "--B")); });
      const LineU2 la = line_from_unitary(a, tol);
      const LineU2 lb = line_from_unitary(b, tol);
      const Tangency t = tangency_relation(la, lb, tol);
      const IncidenceValues direct = incidence_values(la, lb);
      const IncidenceValues flipped = incidence_values(la, j_line(lb, tol));
      result = {{"relation", tangency_name(t)},
                {"compatible_residual", direct.det_value},
                {"opposite_residual", flipped.det_value}};
    } else if (c_levi->parsed()) {
      const Vec4C z = detail::validated(
          "--point", [&] { return vec_from_json<4>(detail::parse_json_arg(point_text, "--point")); });
      const ProjPoint p = ProjPoint::from(z, tol);
      const ChartPoint cp = to_chart(p, chart_text == "U3" ? Chart::U3 : Chart::U0, tol);
      result = detail::levi_json(cp, levi_report(cp, tol));
    } else if (c_sec->parsed()) {
      SectionsOptions opt;
      opt.grid = grid;
      opt.loops = loops;
      opt.seed = seed;
      const SectionsReport rep = sections_over_region({fa, fr}, opt, tol);
      const auto& ls = rep.levi_summary;
      result = {{"grid_size", rep.grid_size},
                {"loops", rep.loops},
                {"max_jswap_residual", rep.max_jswap_residual},
                {"max_surface_residual", rep.max_surface_residual},
                {"monodromy_failures", rep.monodromy_failures},
                {"levi_summary",
                 {{"nondegenerate", ls.nondegenerate},
                  {"degenerate", ls.degenerate},
                  {"positive", ls.positive},
                  {"negative", ls.negative},
                  {"min_abs_value", grid > 0 ? ls.min_abs_value : 0.0},
                  {"max_abs_value", ls.max_abs_value}}}};
    } else if (c_slevi->parsed()) {
      const Vec4C z = detail::validated(
          "--point", [&] { return vec_from_json<4>(detail::parse_json_arg(point_text, "--point")); });
      const QuadricSym4 q = family_quadric({fa, fr});
      const LeviType lt = section_levi_type(q, ProjPoint::from(z, tol), tol);
      result = {{"degenerate", lt.degenerate}, {"value", lt.value}, {"kernel", to_json(lt.kernel)}};
    }
    if (payload.empty()) payload = result.dump(2) + "\n";
  } catch (const detail::ValidationError& e) {
    err << json{{"error", "ValidationError"}, {"detail", e.what()}}.dump() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << json{{"error", std::string(e.name())}, {"detail", e.what()}}.dump() << "\n";
    return e.code() == ErrorCode::InvalidTolerance ? kExitValidation : kExitPrecondition;
  }

  if (out_path.empty()) {
    out << payload;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f || !(f << payload)) {
    err << json{{"error", "IOFailure"}, {"detail", "cannot write " + out_path}}.dump() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace q22::cli

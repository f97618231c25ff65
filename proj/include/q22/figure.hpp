#pragma once

// Figure data for the discriminant locus of Q_{a,r} against the unit circle:
// CSV samples and a static SVG. Numbers go through std::to_chars so the
// output never depends on the locale.

#include <charconv>
#include <string>

#include "q22/quadrics.hpp"

namespace q22 {

/// Shortest round-trip decimal form of x.
inline std::string fmt_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline constexpr std::size_t kFigureSamples = 360;
inline constexpr double kFigureHalfWidth = 2.5;

inline std::string figure_csv(const FamilyParams& fp, const Tolerance& tol = {}) {
  const auto [dc, rp] = classify_family(fp, tol);
  std::string out = "curve_id,x,y\n";
  const auto row = [&](const char* id, cplx z) {
    out += id;
    out += ',';
    out += fmt_double(z.real());
    out += ',';
    out += fmt_double(z.imag());
    out += '\n';
  };
  for (std::size_t i = 0; i < kFigureSamples; ++i)
    row("unit_circle", std::polar(1.0, 2.0 * pi * double(i) / double(kFigureSamples)));
  DiscriminantCircle locus = dc;
  if (locus.kind == DiscriminantCircle::Kind::ContainedUnitCircle) {
    locus.center = 0.0;
    locus.radius = 1.0;
  }
  for (const cplx z : locus.sample(kFigureSamples, kFigureHalfWidth)) row("discriminant", z);
  for (const cplx z : rp.branch_points) row("branch_point", z);
  return out;
}

inline std::string figure_svg(const FamilyParams& fp, const Tolerance& tol = {}) {
  const auto [dc, rp] = classify_family(fp, tol);
  const double scale = 600.0 / (2.0 * kFigureHalfWidth);
  const auto px = [&](double x) { return fmt_double((x + kFigureHalfWidth) * scale); };
  const auto py = [&](double y) { return fmt_double((kFigureHalfWidth - y) * scale); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  s += "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  s += "<line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#cccccc\"/>\n";
  s += "<line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#cccccc\"/>\n";
  s += "<circle id=\"unit_circle\" cx=\"" + px(0.0) + "\" cy=\"" + py(0.0) + "\" r=\"" +
       fmt_double(scale) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  switch (dc.kind) {
    case DiscriminantCircle::Kind::ContainedUnitCircle:
      s += "<circle id=\"discriminant\" cx=\"" + px(0.0) + "\" cy=\"" + py(0.0) + "\" r=\"" +
           fmt_double(scale) +
           "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\" stroke-dasharray=\"8 6\"/>\n";
      break;
    case DiscriminantCircle::Kind::Circle:
      s += "<circle id=\"discriminant\" cx=\"" + px(dc.center.real()) + "\" cy=\"" +
           py(dc.center.imag()) + "\" r=\"" + fmt_double(dc.radius * scale) +
           "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\" stroke-dasharray=\"8 6\"/>\n";
      break;
    case DiscriminantCircle::Kind::Line:
      s += "<line id=\"discriminant\" x1=\"" + px(dc.re_equals) + "\" y1=\"0\" x2=\"" +
           px(dc.re_equals) +
           "\" y2=\"600\" stroke=\"crimson\" stroke-width=\"2\" stroke-dasharray=\"8 6\"/>\n";
      break;
  }
  for (const cplx z : rp.branch_points)
    s += "<circle class=\"branch_point\" cx=\"" + px(z.real()) + "\" cy=\"" + py(z.imag()) +
         "\" r=\"6\" fill=\"navy\"/>\n";
  s += "<text x=\"12\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">a = " + fmt_double(fp.a) +
       ", r = " + fmt_double(fp.r) + "</text>\n";
  s += "<text x=\"12\" y=\"46\" font-family=\"sans-serif\" font-size=\"16\">I = " + fmt_double(rp.I) +
       " (" + position_name(rp.position) + ")</text>\n";
  s += "<text x=\"12\" y=\"68\" font-family=\"sans-serif\" font-size=\"14\">solid: unit circle, "
       "dashed: discriminant locus</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace q22

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "q22/cli.hpp"

using namespace q22;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json parse(const CliRun& r) { return json::parse(r.out); }

std::string mat_text(const Mat2C& m) { return to_json(m).dump(); }

// circumcircle of three points
std::pair<cplx, double> circumcircle(cplx a, cplx b, cplx c) {
  const double d = 2.0 * (a.real() * (b.imag() - c.imag()) + b.real() * (c.imag() - a.imag()) +
                          c.real() * (a.imag() - b.imag()));
  const double ux = (std::norm(a) * (b.imag() - c.imag()) + std::norm(b) * (c.imag() - a.imag()) +
                     std::norm(c) * (a.imag() - b.imag())) /
                    d;
  const double uy = (std::norm(a) * (c.real() - b.real()) + std::norm(b) * (a.real() - c.real()) +
                     std::norm(c) * (b.real() - a.real())) /
                    d;
  const cplx center(ux, uy);
  return {center, std::abs(a - center)};
}

std::vector<std::pair<std::string, cplx>> read_csv(const std::string& text) {
  std::vector<std::pair<std::string, cplx>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "curve_id,x,y");
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    rows.emplace_back(line.substr(0, c1),
                      cplx(std::stod(line.substr(c1 + 1, c2 - c1 - 1)), std::stod(line.substr(c2 + 1))));
  }
  return rows;
}

}  // namespace

TEST(Cli, ClassifyQuadric) {
  const CliRun r = run({"classify-quadric", "--a", "2", "--r", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = parse(r);
  EXPECT_EQ(j["position"], "tangent");
  EXPECT_NEAR(j["I"].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(j["circle"]["center"][0].get<double>(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(j["circle"]["center"][1].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(j["circle"]["radius"].get<double>(), 1.0 / 3.0, 1e-15);
  ASSERT_EQ(j["branch_points"].size(), 1u);
  EXPECT_NEAR(j["branch_points"][0][0].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(j["branch_points"][0][1].get<double>(), 0.0, 1e-15);

  const json line = parse(run({"classify-quadric", "--a", "1", "--r", "1"}));
  EXPECT_EQ(line["circle"]["kind"], "line");
  EXPECT_EQ(line["position"], "two_points");
  EXPECT_EQ(parse(run({"classify-quadric", "--a", "0", "--r", "1"}))["position"], "contained");
  EXPECT_EQ(parse(run({"classify-quadric", "--a", "0", "--r", "0.5"}))["position"], "disjoint");
}

TEST(Cli, ClassifyHyperplane) {
  const CliRun r = run({"classify-hyperplane", "--v", "[[1,0],[0,0],[-1,0],[0,0]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = parse(r);
  EXPECT_EQ(j["class"], "tangent");
  EXPECT_EQ(j["section"], "tangent_leviflat");
  const Vec4C sp = vec_from_json<4>(j["singular_point"]);
  EXPECT_TRUE(proj_eq(ProjPoint::from(sp), ProjPoint::from({1.0, 0.0, 1.0, 0.0})));
  EXPECT_LT(j["witness"]["residuals"]["stab"].get<double>(), 1e-12);

  const json pos = parse(run({"classify-hyperplane", "--v", "[[0,0],[2,0],[0,1],[0,0]]"}));
  EXPECT_EQ(pos["class"], "positive");
  EXPECT_FALSE(pos.contains("singular_point"));
  const Mat4C g = mat_from_json<4>(pos["witness"]["matrix"]);
  const GroupMembership m = group_membership(g);
  EXPECT_TRUE(m.in_gjq);
}

TEST(Cli, Tangency) {
  const cplx e = std::polar(1.0, pi / 4);
  const Mat2C a = e * Mat2C::identity();
  const Mat2C b = e * Mat2C::diagonal({cplx(0, 1), cplx(0, -1)});
  const CliRun r = run({"tangency", "--A", mat_text(a), "--B", mat_text(b)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["relation"], "opposite");

  const cplx f = std::polar(1.0, pi / 6);
  const Mat2C c = f * Mat2C::diagonal({f, std::conj(f)});
  EXPECT_EQ(parse(run({"tangency", "--A", mat_text(std::polar(1.0, pi / 3) * Mat2C::identity()), "--B",
                             mat_text(c)}))["relation"],
            "compatible");
}

TEST(Cli, LineSphere) {
  const CliRun fib = run({"line-sphere", "--matrix", mat_text(Mat2C::identity())});
  ASSERT_EQ(fib.code, 0) << fib.err;
  EXPECT_TRUE(parse(fib)["is_fibre"].get<bool>());

  const CliRun tr = run({"line-sphere", "--matrix", mat_text(cplx(0, 1) * Mat2C::identity())});
  ASSERT_EQ(tr.code, 0) << tr.err;
  const json j = parse(tr);
  EXPECT_FALSE(j["is_fibre"].get<bool>());
  EXPECT_NEAR(j["theta"].get<double>(), pi / 2, 1e-15);
  EXPECT_NEAR(j["sphere"]["radius"].get<double>(), pi / 2, 1e-12);
}

TEST(Cli, Levi) {
  const std::string pt = to_json(Vec4C{1.0, 1.0, 1.0, 1.0}).dump();
  for (const char* chart : {"U0", "U3"}) {
    const CliRun r = run({"levi", "--point", pt, "--chart", chart});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = parse(r);
    EXPECT_EQ(j["signature"][0], 1);
    EXPECT_EQ(j["signature"][1], 1);
    EXPECT_LT(j["det"].get<double>(), 0.0);
  }
  EXPECT_NEAR(parse(run({"levi", "--point", pt}))["det"].get<double>(), -0.25, 1e-12);
  // off the hypersurface
  EXPECT_EQ(run({"levi", "--point", "[[1,0],[0,0],[0,0],[0,0]]"}).code, 3);
}

TEST(Cli, Sections) {
  const CliRun r = run({"--seed", "3", "sections", "--a", "0", "--r", "0.5", "--grid", "200", "--loops", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = parse(r);
  EXPECT_EQ(j["grid_size"], 200);
  EXPECT_EQ(j["monodromy_failures"], 0);
  EXPECT_LT(j["max_jswap_residual"].get<double>(), 1e-8);
  const CliRun bad = run({"sections", "--a", "2", "--r", "1"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_EQ(json::parse(bad.err)["error"], "NotDisjoint");
}

TEST(Cli, SectionLevi) {
  const CliRun r = run({"section-levi", "--a", "2", "--r", "1.7320508075688772", "--point",
                     "[[1,0],[1,0],[-1,0],[1,0]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = parse(r);
  EXPECT_TRUE(j["degenerate"].get<bool>());
  EXPECT_LT(std::abs(j["value"].get<double>()), 1e-10);
  const CliRun off = run({"section-levi", "--a", "0", "--r", "0.5", "--point", "[[1,0],[1,0],[1,0],[1,0]]"});
  EXPECT_EQ(off.code, 3);
  EXPECT_EQ(json::parse(off.err)["error"], "NotOnIntersection");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"classify-quadric", "--a", "1"}).code, 2);
  EXPECT_EQ(run({"classify-quadric", "--a", "x", "--r", "1"}).code, 2);
  EXPECT_EQ(run({"classify-hyperplane", "--v", "[1,2"}).code, 2);
  EXPECT_EQ(run({"classify-hyperplane", "--v", "[[1,0],[0,0]]"}).code, 2);
  EXPECT_EQ(run({"line-sphere", "--matrix", "[[[1,0],[0,0]],[[0,0],[2,0]]]"}).code, 3);
  EXPECT_EQ(run({"classify-hyperplane", "--v", "[[0,0],[0,0],[0,0],[0,0]]"}).code, 3);
  EXPECT_EQ(run({"classify-quadric", "--a", "1", "--r", "0"}).code, 3);
  EXPECT_EQ(run({"--eq-abs", "-1", "classify-quadric", "--a", "1", "--r", "1"}).code, 2);
  EXPECT_EQ(run({"--format", "csv", "levi", "--point", "[[1,0],[0,0],[1,0],[0,0]]"}).code, 2);
  EXPECT_EQ(run({"--format", "png", "classify-quadric", "--a", "1", "--r", "1"}).code, 2);
  const CliRun e = run({"classify-hyperplane", "--v", "[[0,0],[0,0],[0,0],[0,0]]"});
  const json ej = json::parse(e.err);
  EXPECT_EQ(ej["error"], "ZeroCovector");
  EXPECT_TRUE(e.out.empty());
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"--seed", "9", "sections", "--a", "0", "--r", "0.5", "--grid", "100",
                                      "--loops", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> svg{"--format", "svg", "classify-quadric", "--a", "2", "--r", "1"};
  EXPECT_EQ(run(svg).out, run(svg).out);
}

TEST(Cli, CsvRoundTrip) {
  for (const FamilyParams fp : {FamilyParams{2.0, 1.0}, FamilyParams{0.0, 0.5}, FamilyParams{-1.3, 0.4},
                                FamilyParams{1.0, 1.0}, FamilyParams{0.0, 1.0}}) {
    const CliRun r = run({"--format", "csv", "classify-quadric", "--a", fmt_double(fp.a), "--r", fmt_double(fp.r)});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = read_csv(r.out);
    std::vector<cplx> unit, disc, bps;
    for (const auto& [id, z] : rows) {
      if (id == "unit_circle") unit.push_back(z);
      else if (id == "discriminant") disc.push_back(z);
      else if (id == "branch_point") bps.push_back(z);
      else ADD_FAILURE() << "unexpected curve id " << id;
    }
    ASSERT_EQ(unit.size(), kFigureSamples);
    ASSERT_EQ(disc.size(), kFigureSamples);
    for (const cplx z : unit) ASSERT_NEAR(std::abs(z), 1.0, 1e-15);
    const auto [dc, rp] = classify_family(fp);
    ASSERT_EQ(bps.size(), rp.branch_points.size());
    for (std::size_t i = 0; i < bps.size(); ++i) ASSERT_EQ(bps[i], rp.branch_points[i]);
    if (dc.kind == DiscriminantCircle::Kind::Line) {
      for (const cplx z : disc) ASSERT_NEAR(z.real(), dc.re_equals, 1e-12);
      continue;
    }
    const auto [center, radius] = circumcircle(disc[0], disc[kFigureSamples / 3], disc[2 * kFigureSamples / 3]);
    const cplx want_c = dc.kind == DiscriminantCircle::Kind::ContainedUnitCircle ? cplx(0.0) : dc.center;
    const double want_r = dc.kind == DiscriminantCircle::Kind::ContainedUnitCircle ? 1.0 : dc.radius;
    EXPECT_LT(std::abs(center - want_c), 1e-9);
    EXPECT_NEAR(radius, want_r, 1e-9);
  }
}

TEST(Cli, Svg) {
  const CliRun r = run({"--format", "svg", "classify-quadric", "--a", "0", "--r", "0.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("viewBox=\"0 0 600 600\""), std::string::npos);
  EXPECT_NE(r.out.find("id=\"unit_circle\""), std::string::npos);
  EXPECT_NE(r.out.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(r.out.find("I = 1.25"), std::string::npos);
  // concentric circles of radii 1 and 2: 120 and 240 pixels
  EXPECT_NE(r.out.find("r=\"120\""), std::string::npos);
  EXPECT_NE(r.out.find("r=\"240\""), std::string::npos);
}

TEST(Cli, OutFileAndEnvTolerance) {
  const auto path = std::filesystem::temp_directory_path() / "q22_cli_test_out.json";
  const CliRun r = run({"--out", path.string(), "classify-quadric", "--a", "2", "--r", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const json j = json::parse(f);
  EXPECT_EQ(j["position"], "tangent");
  std::filesystem::remove(path);

  EXPECT_EQ(run({"--out", "/nonexistent-dir/x.json", "classify-quadric", "--a", "2", "--r", "1"}).code, 3);

  ::setenv("Q22_TOL", "abc", 1);
  EXPECT_EQ(run({"classify-quadric", "--a", "2", "--r", "1"}).code, 2);
  ::setenv("Q22_TOL", "1e-6", 1);
  EXPECT_EQ(run({"classify-quadric", "--a", "2", "--r", "1"}).code, 0);
  ::unsetenv("Q22_TOL");
}

TEST(Cli, Executable) {
  const std::string cmd = std::string(Q22_CLI_PATH) + " classify-quadric --a 0 --r 0.5";
  FILE* p = ::popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, p)) out += buf;
  const int status = ::pclose(p);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(out, run({"classify-quadric", "--a", "0", "--r", "0.5"}).out);

  const std::string bad = std::string(Q22_CLI_PATH) + " classify-quadric --a 2 --r 1 --bogus 2>/dev/null";
  FILE* q = ::popen(bad.c_str(), "r");
  ASSERT_NE(q, nullptr);
  while (std::fgets(buf, sizeof buf, q)) {
  }
  EXPECT_EQ(WEXITSTATUS(::pclose(q)), 2);
}

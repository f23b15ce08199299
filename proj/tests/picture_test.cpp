// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "trophilb/cli.hpp"
#include "trophilb/picture.hpp"
#include "trophilb/report.hpp"

namespace trophilb {
namespace {

namespace fs = std::filesystem;

constexpr const char* kCubic = "x^3+x^2*y+2*x*y^2+3*y^3; x^5; x*y^4";

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

/// Compares against tests/golden/<name>. With TROPHILB_UPDATE_GOLDEN set the
/// file is rewritten instead.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(TROPHILB_GOLDEN_DIR) / name;
  if (std::getenv("TROPHILB_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << "missing golden file " << path;
  EXPECT_EQ(read_file(path), actual) << name;
}

Picture cubic_picture(bool omit) {
  return build_picture(tropicalize(GradedIdeal::parse(kCubic), 7), omit);
}

/// Monomials of degree <= max_degree outside the monomial ideal.
std::vector<Monomial> staircase(const std::vector<Monomial>& gens, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (int b = 0; b <= d; ++b) {
      const Monomial m{d - b, b};
      bool inside = false;
      for (const auto& g : gens) inside = inside || (m.a >= g.a && m.b >= g.b);
      if (!inside) out.push_back(m);
    }
  }
  return out;
}

std::vector<Monomial> cells_with(const Picture& p, bool blue) {
  std::vector<Monomial> out;
  for (int d = 0; d <= p.max_degree; ++d) {
    for (int b = 0; b <= d; ++b) {
      const CellColor c = p.color(d - b, b);
      if (blue ? has_blue(c) : has_red(c)) out.push_back({d - b, b});
    }
  }
  return out;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

/// Brute force over all shift sets: a lower-degree circuit S' and a set T of
/// shifts with S inside the union U of the shifted copies and |S| > |U| - |T|.
/// On success u_out and t_out hold the witness.
bool omission_witness(const TruncatedTropIdeal& t, int d, Subset s, Subset& u_out, int& t_out) {
  for (int dp = 0; dp < d; ++dp) {
    const int shifts = d - dp + 1;
    for (Subset sp : t.piece(dp).circuit_sets()) {
      for (Subset tset = 1; tset < (Subset{1} << shifts); ++tset) {
        Subset u = 0;
        for (int j : subset_elements(tset)) u |= sp << j;
        if ((s & ~u) != 0) continue;
        if (subset_size(s) > subset_size(u) - subset_size(tset)) {
          u_out = u;
          t_out = subset_size(tset);
          return true;
        }
      }
    }
  }
  return false;
}

TEST(Picture, CubicStaircases) {
  for (bool omit : {false, true}) {
    const Picture p = cubic_picture(omit);
    EXPECT_EQ(cells_with(p, true), staircase({{5, 0}, {3, 2}, {0, 3}}, 7));
    EXPECT_EQ(cells_with(p, false), staircase({{3, 0}, {1, 4}, {0, 5}}, 7));
    EXPECT_EQ(p.hilbert, (std::vector<int>{1, 2, 3, 3, 3, 1, 0, 0}));
  }
  EXPECT_LT(cubic_picture(true).segments.size(), cubic_picture(false).segments.size());
}

TEST(Picture, CubicDotRuleWithoutOmission) {
  const Picture p = cubic_picture(false);
  EXPECT_EQ(dot_rule_colors(p), p.colors);
}

TEST(Picture, CubicGolden) {
  expect_golden("cubic_all.txt", render_ascii(cubic_picture(false)));
  expect_golden("cubic_omit.txt", render_ascii(cubic_picture(true)));
  expect_golden("cubic_all.svg", render_svg(cubic_picture(false)));
  expect_golden("cubic_omit.svg", render_svg(cubic_picture(true)));
}

TEST(Picture, PrincipalBinomialGolden) {
  const Picture p = build_picture(tropicalize(GradedIdeal::parse("x^2-y^2"), 5), false);
  for (const auto& seg : p.segments) {
    const auto dots = seg.dots();
    for (const auto& m : dots) EXPECT_EQ(m.degree(), seg.degree);
  }
  expect_golden("x2_minus_y2.txt", render_ascii(p));
}

TEST(Picture, NecklaceGolden) {
  const auto all = enumerate_necklaces(6, 2);
  ASSERT_EQ(all.size(), 3u);
  for (const auto& gamma : all) expect_golden("necklace_" + gamma.bits() + ".svg", render_necklace_svg(gamma));
  const std::string svg = render_necklace_svg(all[0]);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
}

TEST(Picture, Deterministic) {
  for (int trial = 0; trial < 10; ++trial) {
    const GradedIdeal ideal = testing::random_ideal(3, 3);
    const TruncatedTropIdeal t = tropicalize(ideal, 6);
    EXPECT_EQ(render_svg(build_picture(t, true)), render_svg(build_picture(t, true)));
    EXPECT_EQ(render_ascii(build_picture(t, false)), render_ascii(build_picture(t, false)));
  }
}

TEST(Picture, EmptyPicture) {
  const std::string svg = render_svg(Picture{});
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Picture, MonomialIdealHasNoSegmentsDrawnAboveItsGenerators) {
  const TruncatedTropIdeal t = tropicalize(GradedIdeal::parse("x^2; x*y^2; y^4"), 6);
  const Picture p = build_picture(t, true);
  for (const auto& seg : p.segments) EXPECT_EQ(subset_size(seg.elements), 1);
  for (int d = 0; d <= 6; ++d) {
    for (int b = 0; b <= d; ++b) {
      const bool inside = (d - b >= 2) || (d - b >= 1 && b >= 2) || b >= 4;
      EXPECT_EQ(p.color(d - b, b), inside ? CellColor::kNone : CellColor::kBoth);
    }
  }
}

TEST(Omission, ColorsUnchangedAndDotRuleWhenOff) {
  for (int trial = 0; trial < 50; ++trial) {
    const GradedIdeal ideal = testing::random_ideal(3, 3);
    const TruncatedTropIdeal t = tropicalize(ideal, 7);
    const Picture on = build_picture(t, true);
    const Picture off = build_picture(t, false);
    EXPECT_EQ(on.colors, off.colors) << ideal.to_string();
    EXPECT_EQ(dot_rule_colors(off), off.colors) << ideal.to_string();
    EXPECT_TRUE(off.omitted.empty());
    EXPECT_EQ(on.segments.size() + on.omitted.size(), off.segments.size());
  }
}

TEST(Omission, MatchesBruteForceAndIsForced) {
  for (int trial = 0; trial < 25; ++trial) {
    const GradedIdeal ideal = testing::random_ideal(3, 3);
    const TruncatedTropIdeal t = tropicalize(ideal, 7);
    for (int d = 0; d <= 7; ++d) {
      for (Subset s : t.piece(d).circuit_sets()) {
        Subset u = 0;
        int shifts = 0;
        const bool brute = omission_witness(t, d, s, u, shifts);
        EXPECT_EQ(is_uninformative(t, d, s), brute) << ideal.to_string() << " d=" << d;
        // The |T| shifted circuits cut the rank of U by at least |T|, so any
        // subset of U larger than |U| - |T| is dependent.
        if (brute) EXPECT_LE(t.piece(d).rank(u), subset_size(u) - shifts);
      }
    }
  }
}

TEST(Report, TropJson) {
  const GradedIdeal ideal = GradedIdeal::parse(kCubic);
  const TruncatedTropIdeal t = tropicalize(ideal, 7);
  const nlohmann::json j = trop_report(ideal, build_picture(t, true), t);
  EXPECT_EQ(j["schema"], "trop-hilb/1");
  EXPECT_EQ(j["field"], "q");
  EXPECT_EQ(j["hilbert"], nlohmann::json({1, 2, 3, 3, 3, 1, 0, 0}));
  using Labels = std::set<std::string>;
  EXPECT_EQ(j["initial"]["x>y"].get<Labels>(), (Labels{"x^5*y^0", "x^3*y^2", "x^0*y^3"}));
  EXPECT_EQ(j["initial"]["x<y"].get<Labels>(), (Labels{"x^3*y^0", "x^1*y^4", "x^0*y^5"}));
  EXPECT_EQ(j["degrees"].size(), 8u);
}

TEST(Cli, TropWritesFiles) {
  const fs::path dir = fs::temp_directory_path() / "trophilb_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const CliRun r = run_cli({"trop", "--ideal", "x^2-y^2", "--max-degree", "4", "--svg", (dir / "out.svg").string(),
                            "--out", (dir / "report").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir / "out.svg"));
  for (const char* f : {"trop.json", "trop.svg", "trop.txt"}) EXPECT_TRUE(fs::exists(dir / "report" / f)) << f;
  const auto j = nlohmann::json::parse(read_file(dir / "report" / "trop.json"));
  EXPECT_EQ(j["max_degree"], 4);
  fs::remove_all(dir);
}

TEST(Cli, Formats) {
  EXPECT_EQ(run_cli({"trop", "--ideal", kCubic, "--max-degree", "7", "--format", "ascii"}).out,
            render_ascii(cubic_picture(true)));
  EXPECT_EQ(
      run_cli({"trop", "--ideal", kCubic, "--max-degree", "7", "--format", "ascii", "--keep-uninformative"}).out,
      render_ascii(cubic_picture(false)));
  const CliRun svg = run_cli({"trop", "--ideal", "x^2-y^2", "--format", "svg", "--field", "cyclotomic:6"});
  EXPECT_EQ(svg.code, kExitOk);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  const auto j = nlohmann::json::parse(run_cli({"trop", "--ideal", "x-z(3)*y", "--max-degree", "2"}).out);
  EXPECT_EQ(j["field"], "cyclotomic:3");
}

TEST(Cli, NecklaceCensus) {
  const CliRun r = run_cli({"necklace", "census", "--d", "6", "--k", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["necklaces"].size(), 3u);
  for (const auto& n : j["necklaces"]) EXPECT_TRUE(n.contains("degrees") || n.contains("circuits")) << n.dump();
}

TEST(Cli, RectangleEdge) {
  const fs::path file = fs::temp_directory_path() / "trophilb_edge.json";
  const CliRun r = run_cli({"tgraph", "rectangle-edge", "--k", "2", "--d0", "6", "--json", file.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 3);
  for (const auto& p : j["points"]) EXPECT_TRUE(p["verified"].get<bool>());
  EXPECT_EQ(nlohmann::json::parse(read_file(file)), j);
  fs::remove(file);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run_cli({"schur", "eval", "--lambda", "4,1", "--points", "(1,1);(z(6),1)", "--box-h", "5"}).code, kExitOk);
  const auto skip = nlohmann::json::parse(run_cli({"necklace", "skip", "--necklace", "11000", "--a", "3"}).out);
  EXPECT_FALSE(skip.empty());
  EXPECT_EQ(run_cli({"tgraph", "convex-hull", "--ideal", kCubic, "--degree", "5", "--order", "x<y"}).code, kExitOk);
  EXPECT_EQ(run_cli({"matroid", "--matrix", "1,0,1;0,1,1", "--labels", "a,b,c"}).code, kExitOk);
  EXPECT_EQ(run_cli({"matroid", "--ideal", "x^2-y^2", "--degree", "3"}).code, kExitOk);
  EXPECT_EQ(run_cli({"necklace", "converse", "--d", "6", "--k", "2", "--max-degree", "8"}).code, kExitOk);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"trop"}).code, kExitUsage);
  const CliRun bad = run_cli({"trop", "--ideal", "x^2+*y"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("position"), std::string::npos) << bad.err;
  EXPECT_EQ(run_cli({"trop", "--ideal", "x", "--format", "png"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"trop", "--ideal", "x", "--field", "cyclotomic:0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"schur", "eval", "--lambda", "1,2", "--points", "(1,1)"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"necklace", "skip", "--necklace", "110000", "--a", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace trophilb

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

#include "trophilb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "trophilb/report.hpp"

namespace trophilb {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
}

/// "q" or "cyclotomic:d"; returns the requested order, or nullopt for "auto".
std::optional<unsigned> parse_field(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  if (text == "q" || text == "Q") return 1U;
  const std::string prefix = "cyclotomic:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string rest = text.substr(prefix.size());
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const unsigned long d = std::stoul(rest);
      if (d >= 1 && d <= 1000) return static_cast<unsigned>(d);
    }
  }
  throw UsageError("--field must be q or cyclotomic:d, got '" + text + "'");
}

GradedIdeal load_ideal(const std::string& text, const std::string& field) {
  GradedIdeal ideal = GradedIdeal::parse(text);
  if (const auto order = parse_field(field)) {
    if (*order % ideal.order() != 0) {
      throw UsageError("coefficients do not lie in the field " + field);
    }
    ideal = ideal.embed(*order);
  }
  return ideal;
}

struct TropArgs {
  std::string ideal;
  int max_degree = -1;
  std::string field;
  std::string format = "json";
  bool omit = true;
  std::string out_dir;
  std::string svg;
};

int run_trop(const TropArgs& a, std::ostream& out) {
  const GradedIdeal ideal = load_ideal(a.ideal, a.field);
  const int d = a.max_degree >= 0 ? a.max_degree : ideal.default_max_degree();
  const TruncatedTropIdeal t = tropicalize(ideal, d);
  const Picture picture = build_picture(t, a.omit);
  json report = trop_report(ideal, picture, t);
  const AxiomReport axioms = tropical_axiom_check(t);
  report["axioms_ok"] = axioms.ok();
  if (!a.svg.empty()) write_file(a.svg, render_svg(picture));
  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    const std::filesystem::path dir(a.out_dir);
    write_file(dir / "trop.json", report.dump(2) + "\n");
    write_file(dir / "trop.svg", render_svg(picture));
    write_file(dir / "trop.txt", render_ascii(picture));
  } else if (a.format == "svg") {
    out << render_svg(picture);
  } else if (a.format == "ascii") {
    out << render_ascii(picture);
  } else {
    out << report.dump(2) << '\n';
  }
  return axioms.ok() ? kExitOk : kExitVerificationFailed;
}

int run_schur_eval(const std::string& partition, const std::string& points, int h, std::ostream& out) {
  const Partition lambda = Partition::parse(partition);
  const PointConfig p = parse_points(points).normalized();
  json e = json::array();
  for (const auto& v : elementary_all(p)) e.push_back(v.to_string());
  const CycNum jt = schur_eval_jacobi_trudi(lambda, p);
  json report = {{"schema", kReportSchema},
                 {"kind", "schur-eval"},
                 {"partition", lambda.to_string()},
                 {"points", p.to_string()},
                 {"elementary", e},
                 {"jacobi_trudi", jt.to_string()}};
  bool ok = true;
  try {
    const CycNum bi = schur_eval_bialternant(lambda, p);
    report["bialternant"] = bi.to_string();
    report["agree"] = bi == jt;
    ok = bi == jt;
  } catch (const std::domain_error&) {
    report["bialternant"] = nullptr;  // repeated points
  }
  if (h >= 0) {
    if (!lambda.fits_in_box(p.size(), h)) throw UsageError("partition does not fit in the k x h box");
    const TheoremCheck c = theorem_check(p, lambda, h);
    report["theorem"] = to_json(c);
    ok = ok && c.holds();
  }
  out << report.dump(2) << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_necklace_census(int d, int k, int max_degree, const std::string& svg_dir, std::ostream& out) {
  const auto necklaces = enumerate_necklaces(d, k);
  const int top = max_degree >= 0 ? max_degree : d + k;
  std::vector<TruncatedTropIdeal> trops;
  json list = json::array();
  for (std::size_t i = 0; i < necklaces.size(); ++i) {
    trops.push_back(trop_of(necklaces[i], top));
    json entry = to_json(necklaces[i]);
    entry["polynomial"] = necklace_polynomial(necklaces[i]).to_string();
    json circuits = json::object();
    for (int e = 0; e <= top; ++e) {
      json cs = json::array();
      for (Subset c : trops.back().piece(e).circuit_sets()) cs.push_back(to_json(monomials_of(e, c)));
      circuits[std::to_string(e)] = cs;
    }
    entry["circuits"] = circuits;
    list.push_back(entry);
    if (!svg_dir.empty()) {
      std::filesystem::create_directories(svg_dir);
      write_file(std::filesystem::path(svg_dir) / ("necklace_" + necklaces[i].bits() + ".svg"),
                 render_necklace_svg(necklaces[i]));
    }
  }
  json classes = json::array();
  std::vector<bool> used(necklaces.size(), false);
  for (std::size_t i = 0; i < necklaces.size(); ++i) {
    if (used[i]) continue;
    json cls = json::array({i});
    for (std::size_t j = i + 1; j < necklaces.size(); ++j) {
      if (!used[j] && same_tropicalization(trops[i], trops[j])) {
        used[j] = true;
        cls.push_back(j);
      }
    }
    classes.push_back(cls);
  }
  const long burnside = necklace_count(d, k);
  out << json{{"schema", kReportSchema},
              {"kind", "necklace-census"},
              {"d", d},
              {"k", k},
              {"max_degree", top},
              {"count", necklaces.size()},
              {"burnside_count", burnside},
              {"necklaces", list},
              {"trop_classes", classes}}
             .dump(2)
      << '\n';
  return static_cast<long>(necklaces.size()) == burnside ? kExitOk : kExitVerificationFailed;
}

int run_necklace_skip(const std::string& bits, int a, std::ostream& out) {
  const Necklace gamma = Necklace::parse(bits);
  const Necklace image = skip(gamma, a);
  out << json{{"schema", kReportSchema}, {"kind", "necklace-skip"}, {"a", a}, {"necklace", to_json(gamma)},
              {"image", to_json(image)}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int run_necklace_converse(int d, int k, int max_degree, std::ostream& out) {
  const int top = max_degree >= 0 ? max_degree : d + k;
  json pairs = json::array();
  for (const auto& p : converse_skip_search(d, k, top)) pairs.push_back({to_json(p.first), to_json(p.second)});
  out << json{{"schema", kReportSchema}, {"kind", "necklace-converse"}, {"d", d}, {"k", k},
              {"max_degree", top},         {"pairs", pairs}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int run_rectangle_edge(int k, int d0, int d1, const std::string& json_path, std::ostream& out) {
  const auto points = rectangle_edge_points(k, d0, d1 >= 0 ? std::optional<int>(d1) : std::nullopt);
  json list = json::array();
  bool ok = true;
  for (const auto& p : points) {
    list.push_back(to_json(p));
    ok = ok && p.verified();
  }
  json report = {{"schema", kReportSchema}, {"kind", "rectangle-edge"}, {"k", k}, {"d0", d0},
                 {"count", points.size()},   {"points", list}};
  if (d1 >= 0) report["d1"] = d1;
  if (!json_path.empty()) write_file(json_path, report.dump(2) + "\n");
  out << report.dump(2) << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_convex_hull(const std::string& ideal_text, int d, const std::string& order_text, std::ostream& out) {
  const GradedIdeal ideal = GradedIdeal::parse(ideal_text);
  const Order order = degree_order(d, parse_monomial_order(order_text));
  const Matroid& m = ideal.piece_matroid(d);
  const ConvexHullResult r = convex_hull_classify(m, order);
  json rows = json::array();
  for (int e = 0; e < m.size(); ++e) {
    rows.push_back({{"monomial", m.ground()[static_cast<std::size_t>(e)]},
                    {"lhs", r.lhs[static_cast<std::size_t>(e)]},
                    {"rhs", r.rhs[static_cast<std::size_t>(e)]},
                    {"satisfying", contains(r.satisfying, e)},
                    {"loop", contains(r.loops, e)},
                    {"coloop", contains(r.coloops, e)}});
  }
  out << json{{"schema", kReportSchema}, {"kind", "convex-hull"}, {"degree", d}, {"order", order_text},
              {"elements", rows},          {"consistent", r.consistent()}}
             .dump(2)
      << '\n';
  return r.consistent() ? kExitOk : kExitVerificationFailed;
}

ExactMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<CycNum>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    std::vector<CycNum> row;
    std::size_t s = start;
    while (s <= end) {
      const std::size_t e = std::min(text.find(',', s), end);
      try {
        row.push_back(parse_cycnum(std::string_view(text).substr(s, e - s)));
      } catch (const ParseError& err) {
        throw ParseError("bad matrix entry", s + err.position());
      }
      s = e + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix row", start);
    rows.push_back(std::move(row));
    start = end + 1;
  }
  ExactMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return m;
}

int run_matroid(const std::string& ideal_text, int d, const std::string& matrix_text, const std::string& labels,
                std::ostream& out) {
  Matroid m;
  if (!matrix_text.empty()) {
    const ExactMatrix q = parse_matrix(matrix_text);
    std::vector<std::string> ground;
    if (labels.empty()) {
      for (Index j = 0; j < q.cols(); ++j) ground.push_back(std::to_string(j));
    } else {
      std::size_t s = 0;
      while (s <= labels.size()) {
        const std::size_t e = std::min(labels.find(',', s), labels.size());
        ground.push_back(labels.substr(s, e - s));
        s = e + 1;
      }
      if (static_cast<Index>(ground.size()) != q.cols()) throw UsageError("--labels must name every column");
    }
    m = Matroid::from_realization(ground, q);
  } else if (!ideal_text.empty()) {
    if (d < 0) throw UsageError("--degree is required with --ideal");
    m = GradedIdeal::parse(ideal_text).piece_matroid(d);
  } else {
    throw UsageError("matroid needs --ideal with --degree, or --matrix");
  }
  json report = to_json(m);
  report["schema"] = kReportSchema;
  report["kind"] = "matroid";
  report["loops"] = m.labels_of(m.loops());
  report["coloops"] = m.labels_of(m.coloops());
  out << report.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropicalizations of graded ideals in two variables"};
  app.name("trophilb");
  app.require_subcommand(1);

  TropArgs trop;
  auto* trop_cmd = app.add_subcommand("trop", "Tropicalize an ideal and draw it");
  trop_cmd->add_option("--ideal", trop.ideal, "Generators separated by ';'")->required();
  trop_cmd->add_option("--max-degree", trop.max_degree, "Truncation degree (default 2*maxgen+2)");
  trop_cmd->add_option("--field", trop.field, "q or cyclotomic:d");
  trop_cmd->add_option("--format", trop.format, "svg, ascii or json")->check(CLI::IsMember({"svg", "ascii", "json"}));
  trop_cmd->add_flag("--omit-uninformative,!--keep-uninformative", trop.omit, "Hide forced circuits (default true)");
  trop_cmd->add_option("--out", trop.out_dir, "Write trop.json, trop.svg and trop.txt here");
  trop_cmd->add_option("--svg", trop.svg, "Also write the SVG picture to this file");

  auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial evaluations");
  schur_cmd->require_subcommand(1);
  std::string partition, points;
  int schur_h = -1;
  auto* eval_cmd = schur_cmd->add_subcommand("eval", "Evaluate s_lambda at points of P^1");
  eval_cmd->add_option("--lambda,--partition", partition, "e.g. 2,1")->required();
  eval_cmd->add_option("--points", points, "e.g. (1,1);(z(6),1)")->required();
  eval_cmd->add_option("--box-h", schur_h, "Also run the vanishing theorem check for U_lambda^{h,k}");

  auto* necklace_cmd = app.add_subcommand("necklace", "Binary necklaces");
  necklace_cmd->require_subcommand(1);
  int nd = 0, nk = 0, nmax = -1, skip_a = 1;
  std::string svg_dir, beads;
  auto* census_cmd = necklace_cmd->add_subcommand("census", "List N_{d,k} with circuit tables");
  census_cmd->add_option("--d", nd)->required();
  census_cmd->add_option("--k", nk)->required();
  census_cmd->add_option("--max-degree", nmax, "Default d+k");
  census_cmd->add_option("--emit-figures,--svg-dir", svg_dir, "Write one d-gon picture per necklace");
  auto* skip_cmd = necklace_cmd->add_subcommand("skip", "Traverse a necklace by jumps of length a");
  skip_cmd->add_option("--necklace", beads, "Bead string such as 110000")->required();
  skip_cmd->add_option("--a", skip_a)->required();
  auto* converse_cmd = necklace_cmd->add_subcommand("converse", "Equal tropicalizations not related by a skip");
  converse_cmd->add_option("--d", nd)->required();
  converse_cmd->add_option("--k", nk)->required();
  converse_cmd->add_option("--max-degree", nmax, "Default d+k");

  auto* tgraph_cmd = app.add_subcommand("tgraph", "T-graph edge checks");
  tgraph_cmd->require_subcommand(1);
  int tk = 0, d0 = 0, d1 = -1, hull_degree = -1;
  std::string edge_json;
  std::string hull_ideal, hull_order = "x<y";
  auto* edge_cmd = tgraph_cmd->add_subcommand("rectangle-edge", "Verify the edge points of one rectangle edge");
  edge_cmd->add_option("--k", tk)->required();
  edge_cmd->add_option("--d0", d0)->required();
  edge_cmd->add_option("--d1", d1, "Also add every monomial of this degree");
  edge_cmd->add_option("--json", edge_json, "Also write the report to this file");
  auto* hull_cmd = tgraph_cmd->add_subcommand("convex-hull", "Loop/coloop test from the two greedy bases");
  hull_cmd->add_option("--ideal", hull_ideal)->required();
  hull_cmd->add_option("--degree", hull_degree)->required();
  hull_cmd->add_option("--order", hull_order, "x<y or x>y");

  auto* matroid_cmd = app.add_subcommand("matroid", "Matroid of a graded piece or of a matrix");
  std::string m_ideal, m_matrix, m_labels;
  int m_degree = -1;
  matroid_cmd->add_option("--ideal", m_ideal);
  matroid_cmd->add_option("--degree", m_degree);
  matroid_cmd->add_option("--matrix", m_matrix, "Rows separated by ';', entries by ','; columns are elements");
  matroid_cmd->add_option("--labels", m_labels, "Comma-separated column labels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*trop_cmd) return run_trop(trop, out);
    if (*eval_cmd) return run_schur_eval(partition, points, schur_h, out);
    if (*census_cmd) return run_necklace_census(nd, nk, nmax, svg_dir, out);
    if (*skip_cmd) return run_necklace_skip(beads, skip_a, out);
    if (*converse_cmd) return run_necklace_converse(nd, nk, nmax, out);
    if (*edge_cmd) return run_rectangle_edge(tk, d0, d1, edge_json, out);
    if (*hull_cmd) return run_convex_hull(hull_ideal, hull_degree, hull_order, out);
    if (*matroid_cmd) return run_matroid(m_ideal, m_degree, m_matrix, m_labels, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace trophilb

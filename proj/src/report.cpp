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

#include "trophilb/report.hpp"

namespace trophilb {

using nlohmann::json;

json to_json(const Matroid& m) {
  json circuits = json::array();
  for (Subset c : m.circuit_sets()) circuits.push_back(m.labels_of(c));
  return {{"ground", m.ground()}, {"rank", m.rank()}, {"circuits", circuits}};
}

json to_json(const std::vector<Monomial>& monomials) {
  json out = json::array();
  for (const auto& m : monomials) out.push_back(m.label());
  return out;
}

json to_json(const Necklace& gamma) {
  return {{"d", gamma.d()},
          {"k", gamma.k()},
          {"beads", gamma.bits()},
          {"canonical", gamma.canonical()},
          {"positions", gamma.positions()},
          {"alpha", gcd_alpha(gamma)}};
}

json to_json(const EdgePoint& p) {
  json out = {{"ideal", p.ideal.to_string()},
              {"hilbert", p.hilbert},
              {"expected_hilbert", p.expected_hilbert},
              {"initial_x_above_y", to_json(p.init_x_above)},
              {"initial_x_below_y", to_json(p.init_x_below)},
              {"expected_x_above_y", to_json(p.expected_x_above)},
              {"expected_x_below_y", to_json(p.expected_x_below)},
              {"colength", p.colength},
              {"expected_colength", p.expected_colength},
              {"constraint", to_string(p.constraint)},
              {"verified", p.verified()}};
  if (p.necklace) out["necklace"] = to_json(*p.necklace);
  return out;
}

json to_json(const TheoremCheck& c) {
  return {{"dependent", c.dependent},  {"det_zero", c.det_zero},
          {"schur_zero", c.schur_zero}, {"det", c.det.to_string()},
          {"schur_product", c.schur_product.to_string()}, {"sign", c.sign},
          {"holds", c.holds()}};
}

json trop_report(const GradedIdeal& ideal, const Picture& picture, const TruncatedTropIdeal& t) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  json degrees = json::array();
  for (int d = 0; d <= t.max_degree; ++d) {
    json omitted = json::array();
    for (const auto& seg : picture.omitted) {
      if (seg.degree == d) omitted.push_back(to_json(seg.dots()));
    }
    degrees.push_back({{"degree", d}, {"matroid", to_json(t.piece(d))}, {"omitted", omitted}});
  }
  json blue = json::array();
  json red = json::array();
  for (int d = 0; d <= picture.max_degree; ++d) {
    for (int b = 0; b <= d; ++b) {
      const Monomial m{d - b, b};
      if (has_blue(picture.color(m.a, m.b))) blue.push_back(m.label());
      if (has_red(picture.color(m.a, m.b))) red.push_back(m.label());
    }
  }
  const unsigned order = ideal.order();
  return {{"schema", kReportSchema},
          {"kind", "trop"},
          {"ideal", gens},
          {"field", order == 1 ? std::string("q") : "cyclotomic:" + std::to_string(order)},
          {"max_degree", t.max_degree},
          {"hilbert", picture.hilbert},
          {"degrees", degrees},
          {"initial",
           {{"x>y", to_json(initial_monomial_ideal(ideal, MonomialOrder::kXAboveY, t.max_degree))},
            {"x<y", to_json(initial_monomial_ideal(ideal, MonomialOrder::kXBelowY, t.max_degree))}}},
          {"colors", {{"blue", blue}, {"red", red}}},
          {"omitted_count", picture.omitted.size()}};
}

}  // namespace trophilb

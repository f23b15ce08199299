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

#include "trophilb/tgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace trophilb {

Subset greedy_basis(const Matroid& m, const Order& order) {
  return initial_matroid(m, reversed(order)).coloops;
}

ConvexHullResult convex_hull_classify(const Matroid& m, const Order& order) {
  ConvexHullResult r;
  r.basis_low = greedy_basis(m, order);
  r.basis_high = greedy_basis(m, reversed(order));
  r.loops = m.loops();
  r.coloops = m.coloops();
  const int n = m.size();
  r.lhs.assign(static_cast<std::size_t>(n), 0);
  r.rhs.assign(static_cast<std::size_t>(n), 0);
  for (int pos = 0; pos < n; ++pos) {
    Subset at_most = 0;
    Subset at_least = 0;
    for (int i = 0; i < n; ++i) {
      const Subset bit = Subset{1} << order[static_cast<std::size_t>(i)];
      if (i <= pos) at_most |= bit;
      if (i >= pos) at_least |= bit;
    }
    const int e = order[static_cast<std::size_t>(pos)];
    const int lhs = subset_size(r.basis_low & at_most) - subset_size(r.basis_high & at_most);
    const int rhs = subset_size(r.basis_low & at_least) - subset_size(r.basis_high & at_least);
    r.lhs[static_cast<std::size_t>(e)] = lhs;
    r.rhs[static_cast<std::size_t>(e)] = rhs;
    if (lhs <= rhs) r.satisfying |= Subset{1} << e;
  }
  return r;
}

std::vector<Monomial> monomial_ideal_degree(const std::vector<Monomial>& gens, int d) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(d)) {
    if (std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) out.push_back(m);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kNotApplicable:
      return "not applicable";
  }
  return "unknown";
}

Verdict constraint_preserved_check(const HomogPoly& f, const std::vector<Monomial>& n, int d,
                                   const std::vector<Monomial>& u) {
  const auto nd = monomial_ideal_degree(n, d);
  for (const auto& m : u) {
    if (std::find(nd.begin(), nd.end(), m) == nd.end()) return Verdict::kNotApplicable;
  }
  const GradedIdeal principal({f});
  const GradedIdeal ppm = add_monomial_ideal(principal, n);
  const int threshold = principal.hilbert_function(d) - ppm.hilbert_function(d);
  if (subset_size(subset_of(u)) <= threshold) return Verdict::kNotApplicable;
  return is_dependent_in(principal, d, u) ? Verdict::kHolds : Verdict::kViolated;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    const bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Monomial& h) { return !(h == g) && h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.a > b.a; });
  return out;
}

std::vector<int> monomial_hilbert_function(const std::vector<Monomial>& gens, int max_degree) {
  std::vector<int> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(d + 1 - static_cast<int>(monomial_ideal_degree(gens, d).size()));
  return out;
}

EdgePoint verify_edge_point(const HomogPoly& f, int d0, std::optional<int> d1) {
  const int k = f.degree();
  if (k < 1 || d0 <= k) throw std::invalid_argument("verify_edge_point: requires d0 > k >= 1");
  if (d0 > 16) throw std::invalid_argument("verify_edge_point: d0 is limited to 16");
  if (d1 && *d1 <= d0) throw std::invalid_argument("verify_edge_point: the cut-off degree must exceed d0");
  std::vector<Monomial> n{{d0, 0}, {0, d0}};
  std::vector<Monomial> cutoff;
  if (d1) cutoff = monomials_of_degree(*d1);
  n.insert(n.end(), cutoff.begin(), cutoff.end());

  EdgePoint p;
  p.ideal = add_monomial_ideal(GradedIdeal({f}), n);
  const int top = d0 + k;
  for (int d = 0; d <= top; ++d) p.hilbert.push_back(p.ideal.hilbert_function(d));

  std::vector<Monomial> above{{d0, 0}, {0, k}};
  std::vector<Monomial> below{{k, 0}, {0, d0}};
  above.insert(above.end(), cutoff.begin(), cutoff.end());
  below.insert(below.end(), cutoff.begin(), cutoff.end());
  p.expected_x_above = minimal_generators(above);
  p.expected_x_below = minimal_generators(below);
  // The two staircases have the same Hilbert function; the rectangle one is
  // the profile 1, 2, .., k, k, .., k, k-1, .., 1, 0.
  p.expected_hilbert = monomial_hilbert_function(p.expected_x_below, top);

  p.init_x_above = minimal_generators(initial_monomial_ideal(p.ideal, MonomialOrder::kXAboveY, top));
  p.init_x_below = minimal_generators(initial_monomial_ideal(p.ideal, MonomialOrder::kXBelowY, top));
  p.colength = std::accumulate(p.hilbert.begin(), p.hilbert.end(), 0);
  p.expected_colength = std::accumulate(p.expected_hilbert.begin(), p.expected_hilbert.end(), 0);
  p.constraint = constraint_preserved_check(f, n, d0, {{d0, 0}, {0, d0}});
  return p;
}

std::vector<EdgePoint> rectangle_edge_points(int k, int d0, std::optional<int> d1) {
  if (k < 1 || d0 <= k || d0 > 16) throw std::invalid_argument("rectangle_edge_points: requires 1 <= k < d0 <= 16");
  std::vector<EdgePoint> out;
  for (const auto& gamma : enumerate_necklaces(d0, k)) {
    EdgePoint p = verify_edge_point(necklace_polynomial(gamma), d0, d1);
    p.necklace = gamma;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<std::size_t>> stratum_probe(const std::vector<GradedIdeal>& ideals, int max_degree) {
  std::vector<std::vector<std::size_t>> groups;
  if (ideals.empty()) return groups;
  for (int d = 0; d <= max_degree; ++d) {
    const int h = ideals.front().hilbert_function(d);
    for (const auto& ideal : ideals) {
      if (ideal.hilbert_function(d) != h) throw std::invalid_argument("stratum_probe: Hilbert functions differ");
    }
  }
  std::vector<TruncatedTropIdeal> trops;
  for (const auto& ideal : ideals) trops.push_back(tropicalize(ideal, max_degree));
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    bool placed = false;
    for (std::size_t g = 0; g < groups.size() && !placed; ++g) {
      if (same_tropicalization(trops[representative[g]], trops[i])) {
        groups[g].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      groups.push_back({i});
      representative.push_back(i);
    }
  }
  return groups;
}

}  // namespace trophilb

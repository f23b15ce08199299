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

#include "trophilb/graded_ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace trophilb {

std::vector<std::string> degree_labels(int d) {
  std::vector<std::string> out;
  for (const auto& m : monomials_of_degree(d)) out.push_back(m.label());
  return out;
}

Subset subset_of(const std::vector<Monomial>& monomials) {
  Subset s = 0;
  for (const auto& m : monomials) s |= Subset{1} << index_in_degree(m);
  return s;
}

std::vector<Monomial> monomials_of(int d, Subset s) {
  std::vector<Monomial> out;
  for (int i : subset_elements(s)) out.push_back({d - i, i});
  return out;
}

Order degree_order(int d, MonomialOrder order) {
  Order o = index_order(d + 1);
  return order == MonomialOrder::kXBelowY ? o : reversed(o);
}

MonomialOrder parse_monomial_order(std::string_view text) {
  if (text == "x<y" || text == "y>x") return MonomialOrder::kXBelowY;
  if (text == "x>y" || text == "y<x") return MonomialOrder::kXAboveY;
  throw ParseError("expected a monomial order x<y or x>y", 0);
}

struct GradedIdeal::Cache {
  std::mutex mutex;
  std::map<int, ExactMatrix> pieces;
  std::map<int, Matroid> matroids;
};

GradedIdeal::GradedIdeal() : cache_(std::make_shared<Cache>()) {}

GradedIdeal::GradedIdeal(std::vector<HomogPoly> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.is_zero()) throw std::invalid_argument("GradedIdeal: zero generator");
    order_ = std::lcm(order_, g.order());
  }
  if (order_ != 1) {
    for (auto& g : generators_) g = g.embed(order_);
  }
}

GradedIdeal GradedIdeal::parse(std::string_view text) { return GradedIdeal(parse_generators(text)); }

int GradedIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

GradedIdeal GradedIdeal::embed(unsigned order) const {
  std::vector<HomogPoly> gens;
  for (const auto& g : generators_) gens.push_back(g.embed(order));
  GradedIdeal out(std::move(gens));
  if (out.generators_.empty()) out.order_ = order;
  return out;
}

ExactMatrix GradedIdeal::graded_piece(int d) const {
  if (d < 0) throw std::invalid_argument("graded_piece: negative degree");
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->pieces.find(d);
    if (it != cache_->pieces.end()) return it->second;
  }
  std::vector<HomogPoly> products;
  for (const auto& g : generators_) {
    if (g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(d - g.degree())) products.push_back(m * g);
  }
  ExactMatrix spanning(d + 1, static_cast<Index>(products.size()));
  for (std::size_t j = 0; j < products.size(); ++j) {
    for (int i = 0; i <= d; ++i) spanning(i, static_cast<Index>(j)) = products[j].coeff_by_y(i);
  }
  ExactMatrix basis = independent_columns(spanning);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->pieces.emplace(d, std::move(basis)).first->second;
}

int GradedIdeal::dim(int d) const { return static_cast<int>(graded_piece(d).cols()); }

Matroid GradedIdeal::piece_matroid(int d) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->matroids.find(d);
    if (it != cache_->matroids.end()) return it->second;
  }
  Matroid m = Matroid::from_subspace(degree_labels(d), graded_piece(d));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->matroids.emplace(d, std::move(m)).first->second;
}

std::string GradedIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

TruncatedTropIdeal tropicalize(const GradedIdeal& ideal, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("tropicalize: negative degree bound");
  TruncatedTropIdeal t;
  t.max_degree = max_degree;
  for (int d = 0; d <= max_degree; ++d) {
    if (static_cast<std::size_t>(d + 1) > kDefaultCircuitBound) {
      throw TooLargeError("tropicalize: degree " + std::to_string(d) + " exceeds the circuit enumeration bound");
    }
    t.pieces.push_back(ideal.piece_matroid(d));
  }
  return t;
}

bool same_tropicalization(const TruncatedTropIdeal& a, const TruncatedTropIdeal& b) {
  const int top = std::min(a.max_degree, b.max_degree);
  for (int d = 0; d <= top; ++d) {
    if (!same_matroid(a.piece(d), b.piece(d))) return false;
  }
  return true;
}

bool is_dependent_in(const GradedIdeal& ideal, int d, const std::vector<Monomial>& u) {
  for (const auto& m : u) {
    if (m.degree() != d) throw std::invalid_argument("is_dependent_in: monomial " + m.pretty() + " not of degree " + std::to_string(d));
  }
  const Subset s = subset_of(u);
  const int size = subset_size(s);
  if (size == 0) return false;
  const ExactMatrix piece = ideal.graded_piece(d);
  ExactMatrix augmented = ExactMatrix::Constant(d + 1, piece.cols() + size, CycNum(0));
  augmented.leftCols(piece.cols()) = piece;
  Index col = piece.cols();
  for (int i : subset_elements(s)) augmented(i, col++) = CycNum(1);
  return rank(augmented) < piece.cols() + size;
}

AxiomReport tropical_axiom_check(const TruncatedTropIdeal& trop) {
  AxiomReport report;
  for (int d = 0; d <= trop.max_degree; ++d) {
    for (const auto& c : trop.piece(d).circuits()) {
      for (int e = 1; d + e <= trop.max_degree; ++e) {
        const Matroid& target = trop.piece(d + e);
        for (const auto& m : monomials_of_degree(e)) {
          // m * x^(d-i) y^i has index i + m.b in degree d + e.
          const Subset shifted = c.elements << m.b;
          if (!target.is_cycle(shifted)) report.violations.push_back({d, c.elements, m});
        }
      }
    }
  }
  return report;
}

GradedIdeal add_monomial_ideal(const GradedIdeal& ideal, const std::vector<Monomial>& monomials) {
  std::vector<HomogPoly> gens = ideal.generators();
  for (const auto& m : monomials) gens.push_back(HomogPoly::monomial(m));
  GradedIdeal out(std::move(gens));
  return ideal.order() == out.order() ? out : out.embed(std::lcm(ideal.order(), out.order()));
}

std::vector<Subset> initial_loops(const GradedIdeal& ideal, MonomialOrder order, int max_degree) {
  std::vector<Subset> out;
  for (int d = 0; d <= max_degree; ++d) {
    out.push_back(initial_matroid(ideal.piece_matroid(d), degree_order(d, order)).loops);
  }
  return out;
}

std::vector<Monomial> initial_monomial_ideal(const GradedIdeal& ideal, MonomialOrder order, int max_degree) {
  const auto loops = initial_loops(ideal, order, max_degree);
  std::vector<Monomial> gens;
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& m : monomials_of(d, loops[static_cast<std::size_t>(d)])) {
      const bool divisible = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!divisible) gens.push_back(m);
    }
  }
  return gens;
}

EquivalenceCheck dependence_intersection_check(const HomogPoly& f, int h, const std::vector<Monomial>& u) {
  const int k = f.degree();
  const int d = h + k - 1;
  const GradedIdeal ideal({f});
  EquivalenceCheck check;
  check.lhs = is_dependent_in(ideal, d, u);
  check.rhs = true;
  const Subset base = subset_of(u);
  const int missing = k - subset_size(base);
  if (missing < 0) return check;
  const Subset rest = full_subset(d + 1) & ~base;
  const auto free_elems = subset_elements(rest);
  // Walk all subsets of `rest` of size `missing`.
  std::vector<int> pick(static_cast<std::size_t>(missing));
  std::iota(pick.begin(), pick.end(), 0);
  if (static_cast<std::size_t>(missing) > free_elems.size()) return check;
  while (check.rhs) {
    Subset w = base;
    for (int p : pick) w |= Subset{1} << free_elems[static_cast<std::size_t>(p)];
    check.rhs = is_dependent_in(ideal, d, monomials_of(d, w));
    int i = missing - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(free_elems.size()) - missing + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < missing; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return check;
}

EquivalenceCheck strata_pullback_check(const GradedIdeal& ideal, Variable var, int d,
                                       const std::vector<Monomial>& u) {
  const Monomial xi = var == Variable::kX ? Monomial{1, 0} : Monomial{0, 1};
  std::vector<HomogPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(xi * g);
  const GradedIdeal shifted(std::move(gens));
  std::vector<Monomial> divided;
  for (const auto& m : u) {
    if (xi.divides(m)) divided.push_back({m.a - xi.a, m.b - xi.b});
  }
  EquivalenceCheck check;
  check.lhs = is_dependent_in(shifted, d, u);
  check.rhs = d >= 1 ? is_dependent_in(ideal, d - 1, divided) : false;
  return check;
}

}  // namespace trophilb

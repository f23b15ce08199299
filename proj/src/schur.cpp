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

#include "trophilb/schur.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trophilb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return Partition();
  while (true) {
    skip_ws();
    const std::size_t start = pos;
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw ParseError("partition part too large", start);
      ++pos;
    }
    if (start == pos) throw ParseError("expected a non-negative integer", pos);
    parts.push_back(static_cast<int>(v));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) throw ParseError("partition parts must be weakly decreasing", 0);
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts()) {
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

namespace {

void box_partitions(int k, int h, std::vector<int>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == k) return;
  const int cap = prefix.empty() ? h : prefix.back();
  for (int v = 1; v <= cap; ++v) {
    prefix.push_back(v);
    box_partitions(k, h, prefix, out);
    prefix.pop_back();
  }
}

void check_box(const Partition& lambda, int h, int k) {
  if (h < 0 || k < 0 || !lambda.fits_in_box(k, h)) {
    throw std::invalid_argument("partition " + lambda.to_string() + " does not fit in the " + std::to_string(k) + "x" +
                                std::to_string(h) + " box");
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int k, int h) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  box_partitions(k, h, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

RimPath rim_path(const Partition& lambda, int h, int k) {
  check_box(lambda, h, k);
  RimPath path{h, k, {}};
  int previous = h;
  for (int i = 1; i <= k; ++i) {
    for (int s = 0; s < previous - lambda[i]; ++s) path.steps.push_back(Step::kLeft);
    path.steps.push_back(Step::kDown);
    previous = lambda[i];
  }
  for (int s = 0; s < previous; ++s) path.steps.push_back(Step::kLeft);
  return path;
}

std::vector<Monomial> monomial_set(const Partition& lambda, int h, int k) {
  const RimPath path = rim_path(lambda, h, k);
  std::vector<Monomial> out;
  for (int i = 0; i < h + k; ++i) {
    if (path.steps[static_cast<std::size_t>(i)] == Step::kDown) out.push_back({h + k - 1 - i, i});
  }
  return out;
}

Partition partition_of(const std::vector<Monomial>& u, int h, int k) {
  if (static_cast<int>(u.size()) != k) throw std::invalid_argument("partition_of: |U| must equal k");
  std::vector<int> ys;
  for (const auto& m : u) {
    if (m.degree() != h + k - 1) throw std::invalid_argument("partition_of: monomial " + m.pretty() + " has the wrong degree");
    ys.push_back(m.b);
  }
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) throw std::invalid_argument("partition_of: repeated monomial");
  std::vector<int> parts;
  for (int r = 1; r <= k; ++r) parts.push_back(h - ys[static_cast<std::size_t>(r - 1)] + r - 1);
  return Partition(std::move(parts));
}

PointConfig PointConfig::normalized() const {
  unsigned order = 1;
  for (const auto& [x, y] : pairs) order = std::lcm(order, std::lcm(x.order(), y.order()));
  PointConfig out;
  for (const auto& [x, y] : pairs) out.pairs.emplace_back(x.embed(order), y.embed(order));
  return out;
}

std::string PointConfig::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += ";";
    out += "(" + pairs[i].first.to_string() + "," + pairs[i].second.to_string() + ")";
  }
  return out;
}

PointConfig parse_points(std::string_view text) {
  PointConfig config;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_at = [&](std::size_t start, std::size_t end) {
    try {
      return parse_cycnum(text.substr(start, end - start));
    } catch (const ParseError& e) {
      throw ParseError("bad coordinate", start + e.position());
    }
  };
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    // Split "(a,b)" at the top-level comma; coordinates may contain parentheses.
    int depth = 0;
    std::size_t comma = std::string_view::npos;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = pos; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) {
          close = i;
          break;
        }
        --depth;
      } else if (c == ',' && depth == 0 && comma == std::string_view::npos) {
        comma = i;
      }
    }
    if (close == std::string_view::npos) throw ParseError("unbalanced parentheses", pos);
    if (comma == std::string_view::npos) throw ParseError("expected ',' between coordinates", close);
    CycNum x = parse_at(pos, comma);
    CycNum y = parse_at(comma + 1, close);
    if (x.is_zero() && y.is_zero()) throw ParseError("(0,0) is not a point of P^1", pos);
    config.pairs.emplace_back(std::move(x), std::move(y));
    pos = close + 1;
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ';') throw ParseError("expected ';'", pos);
    ++pos;
  }
  return config;
}

PointConfig necklace_points(unsigned d, const std::vector<int>& positions) {
  PointConfig p;
  for (int pos : positions) p.pairs.emplace_back(-CycNum::zeta_power(d, pos), CycNum(1).embed(d));
  return p;
}

std::vector<CycNum> elementary_all(const PointConfig& config) {
  const PointConfig p = config.normalized();
  // Coefficients of prod (y_i + x_i t).
  std::vector<CycNum> e{CycNum(1)};
  for (const auto& [x, y] : p.pairs) {
    std::vector<CycNum> next(e.size() + 1, CycNum(0));
    for (std::size_t j = 0; j < e.size(); ++j) {
      next[j] += e[j] * y;
      next[j + 1] += e[j] * x;
    }
    e = std::move(next);
  }
  return e;
}

CycNum elementary_eval(int j, const PointConfig& p) {
  if (j < 0 || j > p.size()) throw std::out_of_range("elementary_eval: index out of range");
  return elementary_all(p)[static_cast<std::size_t>(j)];
}

CycNum complete_eval(int i, const PointConfig& config) {
  if (i < 0) throw std::out_of_range("complete_eval: negative index");
  const PointConfig p = config.normalized();
  std::vector<CycNum> acc(static_cast<std::size_t>(i + 1), CycNum(0));
  acc[0] = CycNum(1);
  for (const auto& [x, y] : p.pairs) {
    // factor(t) = sum_a x^a y^(i-a) t^a
    std::vector<CycNum> factor(static_cast<std::size_t>(i + 1));
    for (int a = 0; a <= i; ++a) factor[static_cast<std::size_t>(a)] = x.pow(a) * y.pow(i - a);
    std::vector<CycNum> next(static_cast<std::size_t>(i + 1), CycNum(0));
    for (int s = 0; s <= i; ++s) {
      if (acc[static_cast<std::size_t>(s)].is_zero()) continue;
      for (int a = 0; s + a <= i; ++a) {
        next[static_cast<std::size_t>(s + a)] += acc[static_cast<std::size_t>(s)] * factor[static_cast<std::size_t>(a)];
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(i)];
}

namespace {

CycNum alternant(const std::vector<int>& l, const PointConfig& p) {
  const int k = p.size();
  ExactMatrix a(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const auto& [x, y] = p.pairs[static_cast<std::size_t>(j)];
      a(i, j) = x.pow(l[static_cast<std::size_t>(i)]) * y.pow(l[0] - l[static_cast<std::size_t>(i)]);
    }
  }
  return determinant(a);
}

}  // namespace

CycNum schur_eval_bialternant(const Partition& lambda, const PointConfig& config) {
  const PointConfig p = config.normalized();
  const int k = p.size();
  if (lambda.length() > k) throw std::invalid_argument("schur_eval_bialternant: more parts than points");
  if (k == 0) return CycNum(1);
  std::vector<int> num(static_cast<std::size_t>(k));
  std::vector<int> den(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    num[static_cast<std::size_t>(i - 1)] = lambda[i] + k - i;
    den[static_cast<std::size_t>(i - 1)] = k - i;
  }
  const CycNum denominator = alternant(den, p);
  if (denominator.is_zero()) throw std::domain_error("schur_eval_bialternant: denominator zero (repeated points)");
  return alternant(num, p) / denominator;
}

CycNum jacobi_trudi_from_elementary(const Partition& lambda, const std::vector<CycNum>& e) {
  const Partition conj = conjugate(lambda);
  const int n = lambda.largest();
  if (n == 0) return CycNum(1);
  const int k = static_cast<int>(e.size()) - 1;
  unsigned order = 1;
  for (const auto& v : e) order = std::lcm(order, v.order());
  ExactMatrix m(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int idx = conj[i] + j - i;
      m(i - 1, j - 1) = idx >= 0 && idx <= k ? e[static_cast<std::size_t>(idx)].embed(order) : CycNum(0).embed(order);
    }
  }
  return determinant(m);
}

CycNum schur_eval_jacobi_trudi(const Partition& lambda, const PointConfig& p) {
  if (lambda.length() > p.size()) return CycNum(0);
  return jacobi_trudi_from_elementary(lambda, elementary_all(p));
}

HomogPoly polynomial_of_points(const PointConfig& p) {
  const auto e = elementary_all(p);
  return HomogPoly(p.size(), e);
}

ExactMatrix build_xa(const std::vector<CycNum>& e, int h) {
  const int k = static_cast<int>(e.size()) - 1;
  if (k < 0 || h < 0) throw std::invalid_argument("build_xa: shape mismatch");
  unsigned order = 1;
  for (const auto& v : e) order = std::lcm(order, v.order());
  const CycNum zero = CycNum(0).embed(order);
  ExactMatrix xa(h + k, h);
  for (int b = 0; b < h + k; ++b) {
    for (int j = 0; j < h; ++j) {
      const int idx = b - j;
      xa(b, j) = idx >= 0 && idx <= k ? e[static_cast<std::size_t>(idx)].embed(order) : zero;
    }
  }
  return xa;
}

ExactMatrix build_xa(const HomogPoly& f, int h) { return build_xa(f.coeffs(), h); }

ExactMatrix delete_rows(const ExactMatrix& xa, int h, int k, const std::vector<Monomial>& u) {
  if (xa.rows() != h + k || xa.cols() != h) throw std::invalid_argument("delete_rows: shape mismatch");
  const Subset drop = subset_of(u);
  for (const auto& m : u) {
    if (m.degree() != h + k - 1) throw std::invalid_argument("delete_rows: monomial of the wrong degree");
  }
  ExactMatrix out(h + k - subset_size(drop), h);
  Index r = 0;
  for (int b = 0; b < h + k; ++b) {
    if (contains(drop, b)) continue;
    out.row(r++) = xa.row(b);
  }
  return out;
}

bool TheoremCheck::holds() const {
  if (dependent != det_zero || det_zero != schur_zero) return false;
  return det_zero || sign != 0;
}

namespace {

TheoremCheck assemble(const HomogPoly& f, const std::vector<CycNum>& e, const CycNum& schur, const Partition& lambda,
                      int h) {
  const int k = f.degree();
  check_box(lambda, h, k);
  const auto u = monomial_set(lambda, h, k);
  TheoremCheck check;
  check.dependent = is_dependent_in(GradedIdeal({f}), h + k - 1, u);
  check.det = determinant(delete_rows(build_xa(e, h), h, k, u));
  check.schur_product = e[0].pow(h - lambda.largest()) * schur;
  check.det_zero = check.det.is_zero();
  check.schur_zero = check.schur_product.is_zero();
  if (!check.det_zero && !check.schur_zero) {
    if (check.det == check.schur_product) {
      check.sign = 1;
    } else if (check.det == -check.schur_product) {
      check.sign = -1;
    }
  }
  return check;
}

}  // namespace

TheoremCheck theorem_check(const PointConfig& p, const Partition& lambda, int h) {
  const HomogPoly f = polynomial_of_points(p);
  const auto e = elementary_all(p);
  return assemble(f, e, schur_eval_jacobi_trudi(lambda, p), lambda, h);
}

TheoremCheck theorem_check(const HomogPoly& f, const Partition& lambda, int h) {
  if (f.is_zero()) throw std::invalid_argument("theorem_check: zero polynomial");
  return assemble(f, f.coeffs(), jacobi_trudi_from_elementary(lambda, f.coeffs()), lambda, h);
}

std::vector<Partition> admissible_partitions(const std::vector<Monomial>& u, int h, int k) {
  const Subset need = subset_of(u);
  std::vector<Partition> out;
  for (const auto& lambda : partitions_in_box(k, h)) {
    const Subset have = subset_of(monomial_set(lambda, h, k));
    if ((need & ~have) == 0) out.push_back(lambda);
  }
  return out;
}

EquivalenceCheck lambda_intersection_check(const PointConfig& p, int h, const std::vector<Monomial>& u) {
  const int k = p.size();
  const HomogPoly f = polynomial_of_points(p);
  const auto e = elementary_all(p);
  EquivalenceCheck check;
  check.lhs = is_dependent_in(GradedIdeal({f}), h + k - 1, u);
  check.rhs = true;
  for (const auto& lambda : admissible_partitions(u, h, k)) {
    const CycNum value = e[0].pow(h - lambda.largest()) * jacobi_trudi_from_elementary(lambda, e);
    if (!value.is_zero()) {
      check.rhs = false;
      break;
    }
  }
  return check;
}

}  // namespace trophilb

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

#include "trophilb/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace trophilb {

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Order index_order(int n) {
  Order o(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) o[static_cast<std::size_t>(i)] = i;
  return o;
}

Order reversed(const Order& order) { return Order(order.rbegin(), order.rend()); }

struct Matroid::CircuitCache {
  std::once_flag once;
  std::vector<Circuit> circuits;
};

namespace {

ExactMatrix select_columns(const ExactMatrix& q, Subset s) {
  const auto idx = subset_elements(s);
  ExactMatrix out(q.rows(), static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Index>(j)) = q.col(idx[j]);
  return out;
}

ExactMatrix transpose(const ExactMatrix& m) {
  ExactMatrix t(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

// Gauss-Jordan state for the circuit search: rows [0, s) carry unit pivots in
// the columns of the current independent set, listed in `pivot_cols`.
struct Reduced {
  std::vector<std::vector<CycNum>> rows;
  std::vector<int> pivot_cols;
};

// Pivots column e into row s (requires a nonzero entry in rows >= s).
Reduced extend(const Reduced& in, int e) {
  Reduced out = in;
  const std::size_t s = in.pivot_cols.size();
  std::size_t p = s;
  while (out.rows[p][static_cast<std::size_t>(e)].is_zero()) ++p;
  std::swap(out.rows[p], out.rows[s]);
  auto& prow = out.rows[s];
  const CycNum inv = prow[static_cast<std::size_t>(e)].inverse();
  for (auto& v : prow) {
    if (!v.is_zero()) v *= inv;
  }
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    if (i == s) continue;
    const CycNum f = out.rows[i][static_cast<std::size_t>(e)];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (!prow[j].is_zero()) out.rows[i][j] -= f * prow[j];
    }
  }
  out.pivot_cols.push_back(e);
  return out;
}

Reduced initial_state(const ExactMatrix& m) {
  Reduced r;
  r.rows.assign(static_cast<std::size_t>(m.rows()), std::vector<CycNum>(static_cast<std::size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) r.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return r;
}

bool column_free_below(const Reduced& r, int e) {
  for (std::size_t i = r.pivot_cols.size(); i < r.rows.size(); ++i) {
    if (!r.rows[i][static_cast<std::size_t>(e)].is_zero()) return false;
  }
  return true;
}

// Circuits as I + e with I independent and e > max(I): q_e = sum c_i q_i and
// the circuit condition is that every c_i is nonzero.
void primal_search(const Reduced& state, Subset current, int next, int n, std::vector<Circuit>& out) {
  for (int e = next; e < n; ++e) {
    if (column_free_below(state, e)) {
      bool full_support = true;
      for (std::size_t i = 0; i < state.pivot_cols.size() && full_support; ++i) {
        full_support = !state.rows[i][static_cast<std::size_t>(e)].is_zero();
      }
      if (!full_support) continue;
      Circuit c;
      c.elements = current | (Subset{1} << e);
      c.certificate = ExactVector::Constant(n, CycNum(0));
      for (std::size_t i = 0; i < state.pivot_cols.size(); ++i) {
        c.certificate(state.pivot_cols[i]) = state.rows[i][static_cast<std::size_t>(e)];
      }
      c.certificate(e) = CycNum(-1);
      out.push_back(std::move(c));
    } else {
      primal_search(extend(state, e), current | (Subset{1} << e), e + 1, n, out);
    }
  }
}

// Minimal supports of the row space of a full-row-rank B (rho rows): for each
// independent column set Z of size rho-1, the unique row vanishing on Z.
void dual_search(const Reduced& state, int next, int n, std::unordered_set<Subset>& seen,
                 std::vector<Circuit>& out) {
  const std::size_t rho = state.rows.size();
  if (state.pivot_cols.size() + 1 == rho) {
    const auto& row = state.rows[rho - 1];
    Subset support = 0;
    for (int j = 0; j < n; ++j) {
      if (!row[static_cast<std::size_t>(j)].is_zero()) support |= Subset{1} << j;
    }
    if (seen.insert(support).second) {
      Circuit c;
      c.elements = support;
      c.certificate = ExactVector(n);
      for (int j = 0; j < n; ++j) c.certificate(j) = row[static_cast<std::size_t>(j)];
      out.push_back(std::move(c));
    }
    return;
  }
  for (int e = next; e < n; ++e) {
    if (!column_free_below(state, e)) dual_search(extend(state, e), e + 1, n, seen, out);
  }
}

}  // namespace

Matroid Matroid::from_realization(std::vector<std::string> ground, ExactMatrix q) {
  if (static_cast<Index>(ground.size()) != q.cols()) {
    throw std::domain_error("Matroid: realization has " + std::to_string(q.cols()) + " columns for " +
                            std::to_string(ground.size()) + " ground elements");
  }
  if (ground.size() > 64) throw TooLargeError("Matroid: ground sets are limited to 64 elements");
  {
    std::set<std::string> distinct(ground.begin(), ground.end());
    if (distinct.size() != ground.size()) throw std::invalid_argument("Matroid: ground labels must be distinct");
  }
  const unsigned order = common_order(q);
  if (order != 1) q = embed(q, order);
  auto e = bareiss_echelon(q);
  Matroid m;
  m.ground_ = std::move(ground);
  m.rank_ = static_cast<int>(e.pivots.size());
  m.q_ = e.reduced.topRows(m.rank_);
  m.cache_ = std::make_shared<CircuitCache>();
  return m;
}

Matroid Matroid::from_subspace(std::vector<std::string> ground, const ExactMatrix& span_vectors) {
  if (static_cast<Index>(ground.size()) != span_vectors.rows()) {
    throw std::domain_error("from_subspace: vectors have " + std::to_string(span_vectors.rows()) +
                            " coordinates for " + std::to_string(ground.size()) + " ground elements");
  }
  ExactMatrix s = span_vectors;
  const unsigned order = common_order(s);
  if (order != 1) s = embed(s, order);
  ExactMatrix annihilator = kernel_basis(transpose(s));
  return from_realization(std::move(ground), transpose(annihilator));
}

ExactMatrix Matroid::subspace() const {
  if (q_.rows() == 0) {
    ExactMatrix id = ExactMatrix::Constant(size(), size(), CycNum(0));
    for (int i = 0; i < size(); ++i) id(i, i) = CycNum(1);
    return id;
  }
  return kernel_basis(q_);
}

int Matroid::index_of(const std::string& label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  if (it == ground_.end()) throw std::out_of_range("unknown ground label: " + label);
  return static_cast<int>(it - ground_.begin());
}

Subset Matroid::subset_of(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) s |= Subset{1} << index_of(l);
  return s;
}

std::vector<std::string> Matroid::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int i : subset_elements(s)) out.push_back(ground_.at(static_cast<std::size_t>(i)));
  return out;
}

int Matroid::rank(Subset s) const {
  if ((s & ~full_subset(size())) != 0) throw std::out_of_range("subset outside the ground set");
  if (s == 0 || rank_ == 0) return 0;
  return static_cast<int>(trophilb::rank(select_columns(q_, s)));
}

bool Matroid::is_circuit(Subset s) const {
  if (s == 0 || !is_dependent(s)) return false;
  for (int e : subset_elements(s)) {
    if (is_dependent(s & ~(Subset{1} << e))) return false;
  }
  return true;
}

bool Matroid::is_cycle(Subset s) const {
  const int r = rank(s);
  for (int e : subset_elements(s)) {
    if (rank(s & ~(Subset{1} << e)) != r) return false;
  }
  return true;
}

Subset Matroid::loops() const {
  Subset out = 0;
  for (int i = 0; i < size(); ++i) {
    if (rank(Subset{1} << i) == 0) out |= Subset{1} << i;
  }
  return out;
}

Subset Matroid::coloops() const {
  Subset out = 0;
  const Subset all = full_subset(size());
  for (int i = 0; i < size(); ++i) {
    if (rank(all & ~(Subset{1} << i)) < rank_) out |= Subset{1} << i;
  }
  return out;
}

const std::vector<Circuit>& Matroid::circuits() const {
  if (static_cast<std::size_t>(size()) > bound_) {
    throw TooLargeError("circuit enumeration: ground set of " + std::to_string(size()) +
                        " elements exceeds the bound " + std::to_string(bound_));
  }
  if (!cache_) {
    static const std::vector<Circuit> empty;
    return empty;
  }
  std::call_once(cache_->once, [this] {
    std::vector<Circuit> found;
    const int n = size();
    const int rho = n - rank_;
    if (rho > 0) {
      if (rank_ < rho) {
        primal_search(initial_state(q_), 0, 0, n, found);
      } else {
        std::unordered_set<Subset> seen;
        dual_search(initial_state(transpose(subspace())), 0, n, seen, found);
      }
    }
    std::sort(found.begin(), found.end(), [](const Circuit& a, const Circuit& b) {
      const int sa = subset_size(a.elements);
      const int sb = subset_size(b.elements);
      if (sa != sb) return sa < sb;
      return subset_elements(a.elements) < subset_elements(b.elements);
    });
    cache_->circuits = std::move(found);
  });
  return cache_->circuits;
}

std::vector<Subset> Matroid::circuit_sets() const {
  std::vector<Subset> out;
  for (const auto& c : circuits()) out.push_back(c.elements);
  return out;
}

Matroid Matroid::with_circuit_bound(std::size_t bound) const {
  Matroid m = *this;
  m.bound_ = bound;
  return m;
}

bool same_matroid(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  auto ca = a.circuit_sets();
  auto cb = b.circuit_sets();
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

Matroid uniform(int k, std::vector<std::string> ground) {
  const int n = static_cast<int>(ground.size());
  if (k < 0 || k > n) throw std::out_of_range("uniform: rank out of range");
  ExactMatrix q(k, n);
  for (int j = 0; j < n; ++j) {
    Integer node = j + 1;
    Integer p = 1;
    for (int i = 0; i < k; ++i) {
      q(i, j) = CycNum(Rational(p));
      p *= node;
    }
  }
  return Matroid::from_realization(std::move(ground), std::move(q));
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  std::vector<std::string> ground = m1.ground();
  ground.insert(ground.end(), m2.ground().begin(), m2.ground().end());
  const ExactMatrix& a = m1.realization();
  const ExactMatrix& b = m2.realization();
  ExactMatrix q = ExactMatrix::Constant(a.rows() + b.rows(), a.cols() + b.cols(), CycNum(0));
  q.topLeftCorner(a.rows(), a.cols()) = a;
  q.bottomRightCorner(b.rows(), b.cols()) = b;
  return Matroid::from_realization(std::move(ground), std::move(q));
}

namespace {

// Rows span the left kernel of Q_S; multiplying Q by it contracts S.
ExactMatrix contract_realization(const Matroid& m, Subset s) {
  const ExactMatrix& q = m.realization();
  if (q.rows() == 0) return q;
  ExactMatrix left = transpose(kernel_basis(transpose(select_columns(q, s))));
  if (left.rows() == 0) return ExactMatrix(0, q.cols());
  return exact_product(left, q);
}

}  // namespace

Matroid contraction(const Matroid& m, Subset s) {
  if ((s & ~full_subset(m.size())) != 0) throw std::out_of_range("contraction: subset outside the ground set");
  ExactMatrix pq = contract_realization(m, s);
  const Subset keep = full_subset(m.size()) & ~s;
  return Matroid::from_realization(m.labels_of(keep), select_columns(pq, keep));
}

Matroid looped_contraction(const Matroid& m, Subset s) {
  if ((s & ~full_subset(m.size())) != 0) {
    throw std::out_of_range("looped_contraction: subset outside the ground set");
  }
  return Matroid::from_realization(m.ground(), contract_realization(m, s));
}

DiscreteMatroid initial_matroid(const Matroid& m, const Order& order) {
  if (static_cast<int>(order.size()) != m.size()) throw std::invalid_argument("initial_matroid: order size mismatch");
  DiscreteMatroid out;
  out.ground = m.ground();
  Subset above = 0;
  int r = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Subset e = Subset{1} << *it;
    const int r_next = m.rank(above | e);
    if (r_next > r) {
      out.coloops |= e;
    } else {
      out.loops |= e;
    }
    r = r_next;
    above |= e;
  }
  return out;
}

}  // namespace trophilb

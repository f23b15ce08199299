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

#include "trophilb/necklace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trophilb {

std::string canonical_rotation(std::string_view bits) {
  std::string best(bits);
  const std::size_t n = bits.size();
  for (std::size_t r = 1; r < n; ++r) {
    std::string rot;
    rot.reserve(n);
    rot.append(bits.substr(r));
    rot.append(bits.substr(0, r));
    if (rot < best) best = std::move(rot);
  }
  return best;
}

namespace {

std::string bits_of(int d, const std::vector<int>& positions) {
  std::string s(static_cast<std::size_t>(d), '0');
  for (int p : positions) s[static_cast<std::size_t>(p)] = '1';
  return s;
}

std::vector<int> positions_of(const std::string& bits) {
  std::vector<int> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

Necklace::Necklace(int d, std::vector<int> positions) : d_(d) {
  if (d < 1 || d > 64) throw std::invalid_argument("Necklace: bead count must be in [1, 64]");
  for (int& p : positions) p = ((p % d) + d) % d;
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw std::invalid_argument("Necklace: repeated bead position");
  }
  if (positions.empty()) throw std::invalid_argument("Necklace: at least one black bead is required");
  positions_ = std::move(positions);
  canonical_ = canonical_rotation(bits_of(d_, positions_));
}

Necklace Necklace::parse(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty necklace", 0);
  std::vector<int> positions;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      positions.push_back(static_cast<int>(i));
    } else if (bits[i] != '0') {
      throw ParseError("necklace beads must be '0' or '1'", i);
    }
  }
  if (positions.empty()) throw ParseError("necklace has no black bead", 0);
  if (bits.size() > 64) throw ParseError("necklace longer than 64 beads", 64);
  return Necklace(static_cast<int>(bits.size()), std::move(positions));
}

std::string Necklace::bits() const { return bits_of(d_, positions_); }

std::vector<int> Necklace::canonical_positions() const { return positions_of(canonical_); }

std::vector<Necklace> enumerate_necklaces(int d, int k) {
  if (d < 1 || d > kMaxNecklaceBeads) throw std::out_of_range("enumerate_necklaces: d must be in [1, 24]");
  if (k < 1 || k > d) throw std::out_of_range("enumerate_necklaces: k must be in [1, d]");
  using Word = std::uint32_t;
  const Word mask = (Word{1} << d) - 1;
  auto rotate = [&](Word v, int r) { return r == 0 ? v : (((v << r) | (v >> (d - r))) & mask); };
  std::vector<std::pair<Word, Necklace>> found;
  // Gosper's hack over all k-subsets; keep words that are their least rotation.
  Word v = (Word{1} << k) - 1;
  while (true) {
    Word least = v;
    Word most = v;
    for (int r = 1; r < d; ++r) {
      const Word w = rotate(v, r);
      least = std::min(least, w);
      most = std::max(most, w);
    }
    if (least == v) {
      std::vector<int> positions;
      for (int i = 0; i < d; ++i) {
        if ((most >> (d - 1 - i)) & 1U) positions.push_back(i);
      }
      found.emplace_back(most, Necklace(d, std::move(positions)));
    }
    if (k == d) break;
    const Word c = v & (~v + 1);
    const Word r = v + c;
    if (r > mask || r == 0) break;
    v = (((r ^ v) >> 2) / c) | r;
    if (v > mask) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Necklace> out;
  for (auto& [w, n] : found) out.push_back(std::move(n));
  return out;
}

long necklace_count(int d, int k) {
  auto binom = [](long n, long r) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
  };
  const int g = std::gcd(d, k);
  Integer total = 0;
  for (int t = 1; t <= g; ++t) {
    if (g % t == 0) total += Integer(euler_phi(static_cast<unsigned>(t))) * binom(d / t, k / t);
  }
  total /= d;
  return total.get_si();
}

Necklace skip(const Necklace& gamma, int a) {
  const int d = gamma.d();
  if (std::gcd(((a % d) + d) % d, d) != 1) throw std::invalid_argument("skip: a must be a unit modulo d");
  std::vector<int> positions;
  for (int p : gamma.positions()) positions.push_back(static_cast<int>((static_cast<long>(a) * p % d + d) % d));
  return Necklace(d, std::move(positions));
}

HomogPoly necklace_polynomial(const Necklace& gamma) {
  const unsigned d = static_cast<unsigned>(gamma.d());
  HomogPoly f(0, {CycNum(1).embed(d)});
  for (int p : gamma.positions()) f = f * HomogPoly(1, {CycNum(1).embed(d), -CycNum::zeta_power(d, p)});
  return f;
}

GradedIdeal ideal_of(const Necklace& gamma) { return GradedIdeal({necklace_polynomial(gamma)}); }

PointConfig points_of(const Necklace& gamma) {
  return necklace_points(static_cast<unsigned>(gamma.d()), gamma.positions());
}

TruncatedTropIdeal trop_of(const Necklace& gamma, int max_degree) { return tropicalize(ideal_of(gamma), max_degree); }

bool trop_equal(const Necklace& a, const Necklace& b, int max_degree) {
  if (a.d() != b.d() || a.k() != b.k()) throw std::invalid_argument("trop_equal: necklaces from different N_{d,k}");
  return same_tropicalization(trop_of(a, max_degree), trop_of(b, max_degree));
}

int gcd_alpha(const Necklace& gamma) {
  const auto& p = gamma.positions();
  int alpha = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int next = i + 1 < p.size() ? p[i + 1] : p[0] + gamma.d();
    alpha = std::gcd(alpha, next - p[i]);
  }
  return alpha;
}

bool power_pair_dependent(const Necklace& gamma, int d_prime) {
  if (d_prime < gamma.k()) throw std::invalid_argument("power_pair_dependent: requires d' >= k");
  const int period = gamma.d() / gcd_alpha(gamma);
  return d_prime % period == 0;
}

CycNum necklace_determinant(const Necklace& a, const Necklace& b) {
  if (a.d() != b.d() || a.k() != b.k()) throw std::invalid_argument("necklace_determinant: necklaces from different N_{d,k}");
  const auto p = a.canonical_positions();
  const auto q = b.canonical_positions();
  const int k = a.k();
  ExactMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m(i, j) = CycNum::zeta_power(static_cast<unsigned>(a.d()),
                                   static_cast<long>(p[static_cast<std::size_t>(i)]) * q[static_cast<std::size_t>(j)]);
    }
  }
  return determinant(m);
}

EtaResult eta(int d, int k, const Partition& lambda, bool shift_minus_one) {
  if (lambda.length() > k) throw std::invalid_argument("eta: partition has more than k parts");
  if (d < 1) throw std::invalid_argument("eta: d must be positive");
  EtaResult r;
  for (int i = 1; i <= k; ++i) {
    const int e = lambda[i] + k - i - (shift_minus_one ? 1 : 0);
    r.exponents.push_back(((e % d) + d) % d);
  }
  std::vector<int> sorted = r.exponents;
  std::sort(sorted.begin(), sorted.end());
  r.collision = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  if (!r.collision) r.necklace = Necklace(d, sorted);
  return r;
}

namespace {

bool member(const Necklace& gamma, const Partition& lambda, int g) {
  return theorem_check(ideal_of(gamma).generators().front(), lambda, g).dependent;
}

}  // namespace

CommutativityResult commutativity_check(int d, const Partition& lambda, const Partition& lambda_prime, int g, int k) {
  CommutativityResult r;
  const EtaResult a = eta(d, k, lambda);
  const EtaResult b = eta(d, k, lambda_prime);
  if (a.collision || b.collision) {
    r.note = std::string("collision in eta(") + (a.collision ? lambda : lambda_prime).to_string() + ")";
    return r;
  }
  if (!lambda.fits_in_box(k, g) || !lambda_prime.fits_in_box(k, g)) {
    throw std::invalid_argument("commutativity_check: partitions must fit in the k x g box");
  }
  r.applicable = true;
  r.lhs = member(a.necklace, lambda_prime, g);
  r.rhs = member(b.necklace, lambda, g);
  return r;
}

CommutativityResult commutativity_check(const Necklace& gamma, const Partition& lambda, const Partition& lambda_prime,
                                        int g) {
  const EtaResult a = eta(gamma.d(), gamma.k(), lambda);
  if (!a.collision && !(a.necklace == gamma)) {
    throw std::invalid_argument("commutativity_check: gamma is not eta(lambda)");
  }
  return commutativity_check(gamma.d(), lambda, lambda_prime, g, gamma.k());
}

namespace {

std::vector<std::vector<Subset>> fingerprint(const TruncatedTropIdeal& t) {
  std::vector<std::vector<Subset>> out;
  for (const auto& piece : t.pieces) {
    auto c = piece.circuit_sets();
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<ConversePair> find_converse_pairs(const std::vector<Necklace>& necklaces,
                                              const std::vector<TruncatedTropIdeal>& trops) {
  if (necklaces.size() != trops.size()) throw std::invalid_argument("find_converse_pairs: size mismatch");
  std::vector<ConversePair> out;
  std::vector<std::vector<std::vector<Subset>>> prints;
  for (const auto& t : trops) prints.push_back(fingerprint(t));
  for (std::size_t i = 0; i < necklaces.size(); ++i) {
    for (std::size_t j = i + 1; j < necklaces.size(); ++j) {
      if (prints[i] != prints[j]) continue;
      const int d = necklaces[i].d();
      bool related = false;
      for (int a = 1; a < d + (d == 1) && !related; ++a) {
        if (std::gcd(a, d) == 1 && skip(necklaces[i], a) == necklaces[j]) related = true;
      }
      if (!related) out.push_back({necklaces[i], necklaces[j]});
    }
  }
  return out;
}

std::vector<ConversePair> converse_skip_search(int d, int k, int max_degree) {
  const auto necklaces = enumerate_necklaces(d, k);
  std::vector<TruncatedTropIdeal> trops;
  for (const auto& n : necklaces) trops.push_back(trop_of(n, max_degree));
  return find_converse_pairs(necklaces, trops);
}

}  // namespace trophilb

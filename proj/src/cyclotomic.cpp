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

#include "trophilb/cyclotomic.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace trophilb {

namespace detail {

struct CyclotomicField {
  unsigned order = 1;
  unsigned phi = 1;
  IntPoly modulus;
  // power[e] = x^e mod Phi_order for 0 <= e < order, each of length phi.
  std::vector<std::vector<long>> power;
};

}  // namespace detail

namespace {

using QPoly = std::vector<Rational>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic divisor b; throws if the remainder is nonzero.
IntPoly exact_div_monic(IntPoly a, const IntPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("cyclotomic division: degree underflow");
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic division: nonzero remainder");
  return q;
}

const IntPoly& cached_cyclotomic(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e == 0) p = exact_div_monic(p, cached_cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(d, std::move(p)).first->second;
}

std::unique_ptr<detail::CyclotomicField> build_field(unsigned order) {
  auto field = std::make_unique<detail::CyclotomicField>();
  field->order = order;
  field->modulus = cached_cyclotomic(order);
  field->phi = static_cast<unsigned>(field->modulus.size() - 1);
  const unsigned phi = field->phi;

  std::vector<Integer> cur(phi, 0);
  cur[0] = 1;
  field->power.reserve(order);
  for (unsigned e = 0; e < order; ++e) {
    std::vector<long> row(phi);
    for (unsigned i = 0; i < phi; ++i) {
      if (!cur[i].fits_slong_p()) throw std::overflow_error("cyclotomic power table overflow");
      row[i] = cur[i].get_si();
    }
    field->power.push_back(std::move(row));
    // cur <- x * cur mod Phi
    Integer top = cur[phi - 1];
    for (unsigned i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < phi; ++i) cur[i] -= top * field->modulus[i];
  }
  return field;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

QPoly to_qpoly(const IntPoly& p) {
  QPoly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rational(p[i]);
  return q;
}

// Polynomial long division over Q; b must be nonzero after trimming.
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  rem = a;
  trim(rem);
  const std::size_t db = b.size() - 1;
  quot.assign(rem.size() >= b.size() ? rem.size() - db : 1, Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    Rational c = rem.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= c * b[j];
    trim(rem);
  }
  trim(quot);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

namespace detail {

const CyclotomicField& cyclotomic_field(unsigned order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  // Lock-free path for the small orders that dominate in practice.
  constexpr unsigned kFast = 128;
  static std::atomic<const CyclotomicField*> fast[kFast] = {};
  if (order < kFast) {
    if (const CyclotomicField* f = fast[order].load(std::memory_order_acquire)) return *f;
  }
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = fields.find(order);
  if (it == fields.end()) it = fields.emplace(order, build_field(order)).first;
  if (order < kFast) fast[order].store(it->second.get(), std::memory_order_release);
  return *it->second;
}

}  // namespace detail

unsigned euler_phi(unsigned n) {
  if (n == 0) return 0;
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_polynomial(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic_polynomial: d must be >= 1");
  return cached_cyclotomic(d);
}

CycNum::CycNum() : CycNum(0L) {}

CycNum::CycNum(long value) : field_(&detail::cyclotomic_field(1)), coeffs_{Rational(value)} {}

CycNum::CycNum(const Rational& value) : field_(&detail::cyclotomic_field(1)), coeffs_{value} {}

CycNum::CycNum(const detail::CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CycNum CycNum::from_power_coeffs(unsigned order, const std::vector<Rational>& coeffs) {
  const auto& field = detail::cyclotomic_field(order);
  std::vector<Rational> out(field.phi, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const auto& row = field.power[i % order];
    for (unsigned j = 0; j < field.phi; ++j) {
      if (row[j] != 0) out[j] += coeffs[i] * row[j];
    }
  }
  return CycNum(&field, std::move(out));
}

CycNum CycNum::zeta_power(unsigned order, long exponent) {
  const auto& field = detail::cyclotomic_field(order);
  long e = exponent % static_cast<long>(order);
  if (e < 0) e += order;
  const auto& row = field.power[static_cast<std::size_t>(e)];
  std::vector<Rational> out(field.phi);
  for (unsigned j = 0; j < field.phi; ++j) out[j] = row[j];
  return CycNum(&field, std::move(out));
}

unsigned CycNum::order() const { return field_->order; }

unsigned CycNum::degree() const { return field_->phi; }

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycNum CycNum::embed(unsigned m) const {
  if (m == field_->order) return *this;
  if (m % field_->order != 0) throw std::invalid_argument("CycNum::embed: order does not divide target");
  const auto& target = detail::cyclotomic_field(m);
  const unsigned step = m / field_->order;
  std::vector<Rational> out(target.phi, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = target.power[(i * step) % m];
    for (unsigned j = 0; j < target.phi; ++j) {
      if (row[j] != 0) out[j] += coeffs_[i] * row[j];
    }
  }
  return CycNum(&target, std::move(out));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum::inverse: division by zero");
  if (field_->phi == 1) return CycNum(field_, {1 / coeffs_[0]});

  QPoly r0 = to_qpoly(field_->modulus);
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant because Phi_d is irreducible.
  const Rational scale = 1 / r1[0];
  std::vector<Rational> out(field_->phi, Rational(0));
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] * scale;
  return CycNum(field_, std::move(out));
}

CycNum CycNum::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return CycNum(field_, std::move(out));
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  if (field_ != rhs.field_) {
    const unsigned m = lcm_order(order(), rhs.order());
    *this = embed(m);
    return *this += rhs.embed(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  if (field_ != rhs.field_) {
    const unsigned m = lcm_order(order(), rhs.order());
    *this = embed(m);
    return *this -= rhs.embed(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNum operator*(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.field_ != rhs.field_) {
    // Rationals scale coefficientwise without a change of field.
    if (lhs.field_->phi == 1 && lhs.field_->order == 1) {
      std::vector<Rational> out(rhs.coeffs_.size());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.coeffs_[0] * rhs.coeffs_[i];
      return CycNum(rhs.field_, std::move(out));
    }
    if (rhs.field_->phi == 1 && rhs.field_->order == 1) return rhs * lhs;
    const unsigned m = lcm_order(lhs.order(), rhs.order());
    return lhs.embed(m) * rhs.embed(m);
  }
  const auto* field = lhs.field_;
  const unsigned phi = field->phi;
  if (phi == 1) return CycNum(field, {lhs.coeffs_[0] * rhs.coeffs_[0]});

  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      conv[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + phi);
  for (unsigned e = phi; e < conv.size(); ++e) {
    if (conv[e] == 0) continue;
    const auto& row = field->power[e % field->order];
    for (unsigned j = 0; j < phi; ++j) {
      if (row[j] != 0) out[j] += conv[e] * row[j];
    }
  }
  return CycNum(field, std::move(out));
}

CycNum& CycNum::operator*=(const CycNum& rhs) { return *this = *this * rhs; }

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this = *this * rhs.inverse(); }

bool operator==(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.field_ == rhs.field_) return lhs.coeffs_ == rhs.coeffs_;
  const unsigned m = std::lcm(lhs.order(), rhs.order());
  return lhs.embed(m).coeffs_ == rhs.embed(m).coeffs_;
}

CycNum CycNum::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNum result = CycNum(1).embed(order());
  CycNum base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string CycNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Rational c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "z(" << order() << ")";
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& value) { return os << value.to_string(); }

}  // namespace trophilb

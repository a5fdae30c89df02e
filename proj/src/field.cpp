#include "hopfad/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hopfad {

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

namespace poly {

void trim(RationalPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPoly sub(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

void divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& quot,
            RationalPoly& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    Rational c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  trim(quot);
}

}  // namespace poly

RationalPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::mutex mu;
  static std::map<int, RationalPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  RationalPoly p(static_cast<std::size_t>(n) + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RationalPoly q, r;
    poly::divmod(p, cyclotomic_polynomial(d), q, r);
    if (!r.empty()) throw std::logic_error("cyclotomic recursion left a remainder");
    p = std::move(q);
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {
  const std::size_t deg = degree();
  const std::size_t top = deg == 0 ? 1 : 2 * deg - 1;
  powers_.reserve(top);
  // x^k for k < deg is a unit vector; beyond that fold x^k = x * x^{k-1}.
  for (std::size_t k = 0; k < top; ++k) {
    std::vector<Rational> v(deg, Rational(0));
    if (k < deg) {
      v[k] = 1;
    } else {
      const auto& prev = powers_[k - 1];
      // x * prev: shift up, then replace x^deg by -(modulus without leading term).
      Rational carry = prev[deg - 1];
      for (std::size_t i = deg - 1; i > 0; --i) v[i] = prev[i - 1];
      v[0] = 0;
      for (std::size_t i = 0; i < deg; ++i) v[i] -= carry * modulus_[i];
    }
    powers_.push_back(std::move(v));
  }
}

FieldContext make_field(int n) {
  if (n < 1) throw std::invalid_argument("make_field: conductor must be >= 1");
  static std::mutex mu;
  static std::map<int, FieldContext> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[n];
  if (!slot) slot = std::make_shared<const CyclotomicField>(n);
  return slot;
}

Scalar::Scalar(const FieldContext& field)
    : field_(field.get()), coords_(field->degree(), Rational(0)) {}

Scalar::Scalar(const FieldContext& field, const Rational& value) : Scalar(field) {
  coords_[0] = value;
  coords_[0].canonicalize();
}

Scalar::Scalar(const FieldContext& field, std::vector<Rational> coords)
    : field_(field.get()), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree())
    throw std::invalid_argument("scalar coordinate count does not match field degree");
  for (auto& c : coords_) c.canonicalize();
}

Scalar::Scalar(const CyclotomicField* field, std::vector<Rational> coords)
    : field_(field), coords_(std::move(coords)) {}

bool Scalar::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && coords_[0] == 1; }

Scalar Scalar::operator-() const {
  Scalar out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  const std::size_t deg = coords_.size();
  if (o.is_rational()) {
    const Rational& s = o.coords_[0];
    for (auto& c : coords_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = coords_[0];
    coords_ = o.coords_;
    for (auto& c : coords_) c *= s;
    return *this;
  }
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (sgn(coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (sgn(o.coords_[j]) == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  const auto& table = field_->power_table();
  for (std::size_t i = 0; i < deg; ++i) coords_[i] = prod[i];
  for (std::size_t k = deg; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    for (std::size_t i = 0; i < deg; ++i)
      if (sgn(table[k][i]) != 0) coords_[i] += prod[k] * table[k][i];
  }
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    Scalar out(*this);
    out.coords_[0] = 1 / coords_[0];
    return out;
  }
  // Extended Euclid: maintain s_i with s_i * a = r_i (mod Phi).
  RationalPoly r0 = field_->modulus();
  RationalPoly r1 = coords_;
  poly::trim(r1);
  RationalPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    RationalPoly q, r;
    poly::divmod(r0, r1, q, r);
    RationalPoly s = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant because Phi is irreducible.
  const Rational c = r1.at(0);
  RationalPoly quot, rem;
  poly::divmod(s1, field_->modulus(), quot, rem);
  std::vector<Rational> out(coords_.size(), Rational(0));
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / c;
  return Scalar(field_, std::move(out));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.coords_ == b.coords_;
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    const bool unit = (mag == 1);
    if (i == 0 || !unit) os << to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Scalar zeta_power(const FieldContext& field, long k) {
  const long n = field->conductor();
  long e = k % n;
  if (e < 0) e += n;
  if (field->degree() == 1) {
    // n = 1 or 2: zeta is the rational 1 or -1.
    return Scalar(field, Rational(n == 2 && (e % 2 == 1) ? -1 : 1));
  }
  Scalar z(field, [&] {
    std::vector<Rational> v(field->degree(), Rational(0));
    v[1] = 1;
    return v;
  }());
  return pow(z, static_cast<unsigned>(e));
}

Scalar pow(const Scalar& s, unsigned e) {
  Scalar base(s);
  Scalar out = s.one_like();
  while (e > 0) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

Scalar Scalar::zero_like() const {
  return Scalar(field_, std::vector<Rational>(coords_.size(), Rational(0)));
}

Scalar Scalar::one_like() const {
  std::vector<Rational> v(coords_.size(), Rational(0));
  v[0] = 1;
  return Scalar(field_, std::move(v));
}

}  // namespace hopfad

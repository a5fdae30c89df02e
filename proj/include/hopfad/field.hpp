#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfad {

/// Arbitrary-precision rational. gmpxx keeps every arithmetic result in
/// canonical form (positive denominator, coprime parts).
using Rational = mpq_class;

/// "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Dense polynomial over Q, coefficients from low to high degree, no
/// trailing zeros (the zero polynomial is empty).
using RationalPoly = std::vector<Rational>;

namespace poly {
void trim(RationalPoly& p);
RationalPoly mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly sub(const RationalPoly& a, const RationalPoly& b);
/// Long division; throws std::domain_error on a zero divisor.
void divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& quot,
            RationalPoly& rem);
}  // namespace poly

/// Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
RationalPoly cyclotomic_polynomial(int n);
int euler_phi(int n);

class FieldMismatch : public std::logic_error {
 public:
  FieldMismatch() : std::logic_error("scalars from different cyclotomic fields") {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inversion of zero") {}
};

/// Q(zeta_n) presented as Q[x]/Phi_n(x) in the power basis 1, x, ..., x^{phi-1}.
class CyclotomicField {
 public:
  explicit CyclotomicField(int conductor);

  int conductor() const { return conductor_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  const RationalPoly& modulus() const { return modulus_; }

  /// Coordinates of x^k for 0 <= k <= 2*degree-2, used to fold products.
  const std::vector<std::vector<Rational>>& power_table() const { return powers_; }

 private:
  int conductor_;
  RationalPoly modulus_;
  std::vector<std::vector<Rational>> powers_;
};

/// Handle on an interned field; fields live for the whole process.
using FieldContext = std::shared_ptr<const CyclotomicField>;

FieldContext make_field(int n);

class Scalar {
 public:
  explicit Scalar(const FieldContext& field);
  Scalar(const FieldContext& field, const Rational& value);
  Scalar(const FieldContext& field, std::vector<Rational> coords);

  static Scalar zero(const FieldContext& f) { return Scalar(f); }
  static Scalar one(const FieldContext& f) { return Scalar(f, Rational(1)); }

  const CyclotomicField& field() const { return *field_; }
  const CyclotomicField* field_ptr() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  Scalar zero_like() const;
  Scalar one_like() const;

  bool is_zero() const;
  bool is_one() const;
  /// True when only the constant coordinate can be nonzero.
  bool is_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  /// Solves a*x = 1 by the extended Euclidean algorithm against Phi_n.
  Scalar inv() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human-readable form such as "1/2 - z + 3*z^2".
  std::string str() const;

 private:
  Scalar(const CyclotomicField* field, std::vector<Rational> coords);
  void check_same(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }

  const CyclotomicField* field_;
  std::vector<Rational> coords_;
};

/// zeta_n^(k mod n) in the power basis.
Scalar zeta_power(const FieldContext& field, long k);

Scalar pow(const Scalar& s, unsigned e);

}  // namespace hopfad

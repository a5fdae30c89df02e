#include <doctest.h>

#include "hopfad/field.hpp"

#include <random>

using namespace hopfad;

namespace {

// Integer long division by a monic divisor; oracle for the cyclotomic recursion.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1];
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  for (long r : num) CHECK(r == 0);
  return q;
}

RationalPoly to_poly(const std::vector<long>& v) {
  RationalPoly p;
  for (long c : v) p.emplace_back(c);
  return p;
}

Scalar random_scalar(const FieldContext& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < f->degree(); ++i) c.emplace_back(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return Scalar(f, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(make_field(1)->modulus() == to_poly({-1, 1}));
  CHECK(make_field(2)->modulus() == to_poly({1, 1}));
  // x^4 - 1 = (x - 1)(x + 1) Phi_4
  const auto phi4 = divide_monic(divide_monic({-1, 0, 0, 0, 1}, {-1, 1}), {1, 1});
  CHECK(make_field(4)->modulus() == to_poly(phi4));
  CHECK(make_field(4)->modulus() == to_poly({1, 0, 1}));
  CHECK(make_field(6)->modulus() == to_poly({1, -1, 1}));
  CHECK(make_field(12)->degree() == 4);

  for (int n = 1; n <= 12; ++n) {
    RationalPoly prod{Rational(1)};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly::mul(prod, cyclotomic_polynomial(d));
    RationalPoly xn(n + 1, Rational(0));
    xn[0] = -1;
    xn[n] = 1;
    CHECK(prod == xn);
    CHECK(static_cast<int>(make_field(n)->degree()) == euler_phi(n));
  }
}

TEST_CASE("field operations") {
  const auto f4 = make_field(4);
  const Scalar i = zeta_power(f4, 1);
  CHECK(i * i == Scalar(f4, Rational(-1)));
  CHECK(zeta_power(f4, 2) == Scalar(f4, Rational(-1)));
  CHECK(zeta_power(make_field(3), 3).is_one());
  CHECK(zeta_power(make_field(2), 1) == Scalar(make_field(2), Rational(-1)));

  const auto f3 = make_field(3);
  const Scalar z = zeta_power(f3, 1);
  const Scalar a = Scalar::one(f3) + z;
  // 1 + z = -z^2, so (1 + z)^{-1} = -z
  CHECK(a.inv() == -z);
  CHECK((a * a.inv()).is_one());
  CHECK(a + Scalar::zero(f3) == a);
  CHECK_THROWS_AS(Scalar::zero(f3).inv(), DivisionByZero);
  CHECK_THROWS_AS(a + Scalar::one(f4), FieldMismatch);
}

TEST_CASE("zeta powers") {
  for (int n = 1; n <= 8; ++n) {
    const auto f = make_field(n);
    const Scalar z = zeta_power(f, 1);
    CHECK(pow(z, static_cast<unsigned>(n)).is_one());
    // Phi_n(z) = 0
    Scalar acc = Scalar::zero(f);
    const auto& phi = f->modulus();
    for (std::size_t k = 0; k < phi.size(); ++k) acc += Scalar(f, phi[k]) * pow(z, static_cast<unsigned>(k));
    CHECK(acc.is_zero());
    CHECK(zeta_power(f, -1) * z == Scalar::one(f));
  }
}

TEST_CASE("field axioms on seeded triples") {
  std::mt19937_64 rng(20240601);
  for (int n : {3, 4, 5, 8}) {
    const auto f = make_field(n);
    for (int t = 0; t < 25; ++t) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
}

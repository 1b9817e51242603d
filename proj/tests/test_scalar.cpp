#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qtsym/scalar.hpp"

using namespace qtsym;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

// Random polynomial with small degrees and coefficients.
Poly random_poly(std::mt19937_64& rng, int max_terms = 4, int max_deg = 3, int max_coeff = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<Poly::Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Mono m;
    m[Var::q] = deg(rng);
    m[Var::t] = deg(rng);
    m[Var::z] = deg(rng);
    terms.push_back({m, Int(coeff(rng))});
  }
  return Poly::from_terms(std::move(terms));
}

Scalar random_scalar(std::mt19937_64& rng) {
  Poly den;
  while (den.is_zero()) den = random_poly(rng, 3, 2, 4);
  return Scalar(random_poly(rng), den);
}

}  // namespace

TEST_CASE("field identities on simple values") {
  CHECK((S("1 - q") + S("q")) == Scalar::one());
  CHECK((S("1") / S("q")) * S("q^3") == S("q^2"));
  CHECK(S("(1 - q^2)/(1 - q)") == S("1 + q"));
}

TEST_CASE("canonical form is independent of the construction route") {
  Scalar a = S("(1 - q^2)/(1 - q)") * Scalar::one();
  Scalar b = S("1 + q");
  CHECK(a == b);
  CHECK(a.num() == b.num());
  CHECK(a.den() == b.den());

  // Sign normalization: denominators keep a positive leading coefficient.
  Scalar c = Scalar(Poly::constant(1), Poly::constant(-2));
  CHECK(c == Scalar::ratio(-1, 2));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), std::domain_error);
  CHECK_THROWS_AS(Scalar(Poly::constant(1), Poly::zero()), std::domain_error);
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(20140828);
  for (int trial = 0; trial < 40; ++trial) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar::zero());
    if (!a.is_zero()) {
      CHECK(a / a == Scalar::one());
      CHECK(a * (Scalar::one() / a) == Scalar::one());
    }
  }
}

TEST_CASE("pochhammer products") {
  CHECK(pochhammer(Scalar::z(), 0) == Scalar::one());
  CHECK(pochhammer(Scalar::z(), 1) == S("1 - z"));
  CHECK(pochhammer(Scalar::z(), 3) == S("(1 - z)*(1 - q*z)*(1 - q^2*z)"));
}

TEST_CASE("q binomials") {
  CHECK(q_binomial(3, 1) == S("1 + q + q^2"));
  CHECK(q_binomial(5, 0) == Scalar::one());
  CHECK(q_binomial(4, -1) == Scalar::zero());
  CHECK(q_binomial(4, 5) == Scalar::zero());
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      Scalar qb = q_binomial(n, k);
      CHECK(qb.is_polynomial());
      // q -> 1 specialization recovers ordinary binomials.
      long long expect = 1;
      for (int i = 1; i <= k; ++i) expect = expect * (n - k + i) / i;
      CHECK(qb.specialize(Var::q, Scalar::one()) == Scalar(Int(expect)));
    }
}

TEST_CASE("q multinomials") {
  CHECK(q_multinomial(2, {2}) == Scalar::one());
  CHECK(q_multinomial(2, {1, 1}) == S("1 + q"));
  CHECK_THROWS_AS(q_multinomial(2, {3}), std::invalid_argument);
}

TEST_CASE("rendering follows the fixed print order") {
  Scalar c3 = S("t^3 + q*t^2 + q*t + q^2*t + q^3");
  CHECK(c3.to_string() == "q^3 + q^2*t + q*t + q*t^2 + t^3");
  CHECK(S("q^-3 - q^-2").to_string() == "-q^-2 + q^-3");
  CHECK(Scalar::zero().to_string() == "0");
  CHECK(S("(1 + q)/(1 + t)").to_string() == "(q + 1)/(1 + t)");
}

TEST_CASE("parse and render round trip on random values") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = random_scalar(rng);
    CHECK(Scalar::parse(a.to_string()) == a);
  }
}

TEST_CASE("laurent values use q-power denominators") {
  Scalar v = q_pow(-3) - q_pow(-2);
  CHECK(v.den() == Poly::variable(Var::q, 3));
  CHECK(v == S("(1 - q)/q^3"));
}

TEST_CASE("substitution") {
  Scalar f = S("(1 - q^2)/(1 - q*t)");
  CHECK(f.substitute(Scalar::one(), Scalar::zero(), Scalar::z()) == Scalar::zero());
  CHECK(S("q^2").specialize(Var::q, Scalar::one() / Scalar::q()) == q_pow(-2));
  CHECK_THROWS_AS(S("1/(1 - q)").specialize(Var::q, Scalar::one()), std::domain_error);
}

TEST_CASE("z coefficient extraction") {
  Scalar f = S("(1 + q) + q*z + z^2*t");
  auto zc = f.z_coefficients();
  REQUIRE(zc.size() == 3);
  CHECK(zc[0] == S("1 + q"));
  CHECK(zc[1] == S("q"));
  CHECK(zc[2] == S("t"));
  CHECK_THROWS_AS(S("1/(1 - z)").z_coefficients(), std::domain_error);
}

// Exact arithmetic in the fraction field of Z[q,t,z].
//
// Scalar is the coefficient field for everything else in the library.
// Values are kept in a canonical form (coprime numerator/denominator,
// positive leading denominator coefficient), so equality of values is
// equality of representations.  There is no floating point anywhere.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtsym {

using Int = boost::multiprecision::cpp_int;

/// Polynomial parameters, in canonical variable order.
enum class Var : int { q = 0, t = 1, z = 2 };
inline constexpr int kNumVars = 3;

/// Exponent vector of a monomial q^a t^b z^c (all exponents >= 0).
struct Mono {
  std::array<int, kNumVars> e{0, 0, 0};

  int& operator[](Var v) { return e[static_cast<int>(v)]; }
  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  bool operator==(const Mono&) const = default;

  bool divides(const Mono& other) const;
  Mono operator*(const Mono& other) const;
  Mono operator/(const Mono& other) const;  // requires divides(other) ... other/this
  int total_degree() const { return e[0] + e[1] + e[2]; }
};

/// Lexicographic q > t > z with exponents compared descending.  This is the
/// admissible order used for leading terms, division and sign normalization.
bool mono_lex_less(const Mono& a, const Mono& b);

/// Sparse polynomial in Z[q,t,z]; terms held in decreasing lex order.
class Poly {
 public:
  struct Term {
    Mono mono;
    Int coeff;
    bool operator==(const Term&) const = default;
  };

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(Int c);
  static Poly variable(Var v, int power = 1);
  static Poly monomial(Mono m, Int c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading() const;  // under the lex order; poly must be nonzero
  int degree(Var v) const;      // -1 for the zero polynomial
  int total_degree() const;     // -1 for the zero polynomial

  Poly operator-() const;
  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  bool operator==(const Poly&) const = default;

  Poly mul_int(const Int& c) const;
  Poly mul_mono(const Mono& m) const;

  /// Exact division; throws std::logic_error if *this is not divisible by d.
  Poly div_exact(const Poly& d) const;

  /// Integer content (gcd of coefficients), nonnegative; 0 for zero poly.
  Int int_content() const;

  std::string to_string() const;

  /// Builds a polynomial from unsorted (mono, coeff) pairs, merging duplicates.
  static Poly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;  // decreasing lex order, no zero coefficients
};

/// gcd over Z[q,t,z] (includes integer content), leading coefficient positive.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Exact rational function num/den over Z[q,t,z] in canonical form:
/// gcd(num, den) = 1 and the denominator's leading coefficient is positive.
class Scalar {
 public:
  Scalar() : num_(), den_(Poly::constant(1)) {}     // zero
  Scalar(long v);                                   // NOLINT(google-explicit-constructor)
  Scalar(const Int& v);                             // NOLINT(google-explicit-constructor)
  explicit Scalar(const Poly& p);
  Scalar(Poly num, Poly den);                       // throws on zero denominator

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar q() { return variable(Var::q); }
  static Scalar t() { return variable(Var::t); }
  static Scalar z() { return variable(Var::z); }
  static Scalar variable(Var v);
  static Scalar ratio(const Int& num, const Int& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const;  // denominator == 1
  bool is_integer() const;
  bool depends_on(Var v) const;

  Scalar operator-() const;
  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator/(const Scalar&) const;  // throws std::domain_error on /0
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar&) const = default;

  /// Integer power; negative exponents invert (throws on zero base).
  Scalar pow(int e) const;

  /// Simultaneous substitution of values for q, t, z.  Throws
  /// std::domain_error if the denominator vanishes under the substitution.
  Scalar substitute(const Scalar& q_to, const Scalar& t_to, const Scalar& z_to) const;

  /// Substitutes one variable, fixing the others.
  Scalar specialize(Var v, const Scalar& value) const;

  /// Coefficients of z^0, z^1, ... as z-free scalars.  Throws
  /// std::domain_error if the denominator involves z.
  std::vector<Scalar> z_coefficients() const;

  /// Renders in the fixed print order (see mono_print_less).  Output is
  /// parseable by Scalar::parse; pure Laurent values use negative exponents.
  std::string to_string() const;

  /// Parses the textual grammar: + - * / ^ ( ), integers and q, t, z.
  /// Throws std::invalid_argument on malformed input.
  static Scalar parse(std::string_view text);

 private:
  void canonicalize();
  Poly num_, den_;
};

std::ostream& operator<<(std::ostream&, const Scalar&);

/// q^e and t^e as scalars; negative exponents give denominators.
Scalar q_pow(int e);
Scalar t_pow(int e);

/// Rising product (x; q)_k = (1 - x)(1 - qx)...(1 - q^{k-1} x); k = 0 gives 1.
Scalar pochhammer(const Scalar& x, int k);

/// Gaussian binomial [n k]_q; zero when k is outside [0, n].
Scalar q_binomial(int n, int k);

/// (q;q)_k / prod_i (q;q)_{m_i}; throws std::invalid_argument if sum(m) != k.
Scalar q_multinomial(int k, const std::vector<int>& m);

}  // namespace qtsym

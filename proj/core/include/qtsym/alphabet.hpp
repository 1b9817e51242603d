// Formal plethystic alphabets and the substitution f[A].
//
// An Alphabet is an expression over the main alphabet X, the sign alphabet
// eps, and scalar summands (parameters, integers, arbitrary rational
// functions), combined with +, -, *.  Power sums act as ring morphisms:
//   p_r[X] = p_r,  p_r[eps] = (-1)^r,  p_r[c] = c with q,t,z -> q^r,t^r,z^r.
// Every expression built from these nodes has a well-defined finite p_r
// image; unbounded series (such as the Newton element) are not representable.
#pragma once

#include <memory>

#include "qtsym/scalar.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

class Alphabet {
 public:
  static Alphabet X();
  static Alphabet eps();
  static Alphabet scalar(Scalar value);
  static Alphabet q() { return scalar(Scalar::q()); }
  static Alphabet t() { return scalar(Scalar::t()); }
  static Alphabet z() { return scalar(Scalar::z()); }
  static Alphabet constant(long v) { return scalar(Scalar(v)); }

  friend Alphabet operator+(const Alphabet&, const Alphabet&);
  friend Alphabet operator-(const Alphabet&, const Alphabet&);
  friend Alphabet operator*(const Alphabet&, const Alphabet&);
  friend Alphabet operator*(const Scalar&, const Alphabet&);

  /// The image p_r[A] as a symmetric function (p basis); r >= 1.
  SymFunc p_image(int r) const;

  struct Node;  // implementation detail

 private:
  static Alphabet combine(int kind, const Alphabet&, const Alphabet&);
  explicit Alphabet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Plethystic substitution f[A]: replaces each p_r in the p expansion of f
/// by p_r[A], leaving coefficients untouched.
SymFunc plethysm(const SymFunc& f, const Alphabet& a);

}  // namespace qtsym

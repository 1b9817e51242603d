// Graded symmetric functions over Scalar in the classical bases
// p (power sum), m (monomial), e (elementary), h (complete homogeneous)
// and s (Schur).
//
// The power sum basis is the internal canonical form: multiplication, the
// Hall pairing, omega and skewing are all (near-)diagonal there.  Conversions
// go through per-degree transition data (Schur via Murnaghan-Nakayama
// characters) that is memoized behind a lock on first use.
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qtsym/scalar.hpp"
#include "qtsym/shapes.hpp"

namespace qtsym {

enum class Basis : char { p = 'p', m = 'm', e = 'e', h = 'h', s = 's' };

Basis basis_from_char(char c);  // throws std::invalid_argument
char basis_to_char(Basis b);

class SymFunc {
 public:
  using CoeffMap = std::map<Partition, Scalar>;

  SymFunc() : basis_(Basis::p) {}
  explicit SymFunc(Basis b) : basis_(b) {}
  SymFunc(Basis b, CoeffMap coeffs);

  static SymFunc zero(Basis b = Basis::p) { return SymFunc(b); }
  static SymFunc one();  // the empty partition in the p basis
  static SymFunc basis_element(Basis b, const Partition& shape);
  /// e_n / h_n / p_n; n = 0 gives 1 and n < 0 gives 0 for e and h.
  static SymFunc elementary(int n);
  static SymFunc homogeneous(int n);
  static SymFunc power(int n);  // requires n >= 1
  static SymFunc schur(const Partition& shape);
  static SymFunc monomial(const Partition& shape);

  Basis basis() const { return basis_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;  // max component degree; -1 when zero
  bool is_homogeneous() const;
  Scalar coefficient(const Partition& shape) const;  // in the current basis

  SymFunc operator-() const;
  SymFunc operator+(const SymFunc&) const;
  SymFunc operator-(const SymFunc&) const;
  SymFunc operator*(const SymFunc&) const;  // product, in the p basis
  SymFunc operator*(const Scalar&) const;
  bool operator==(const SymFunc& o) const;
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  /// Applies a map to every coefficient (e.g. a specialization), dropping zeros.
  template <typename Fn>
  SymFunc map_coeffs(Fn&& fn) const {
    SymFunc out(basis_);
    for (const auto& [shape, c] : coeffs_) {
      Scalar v = fn(c);
      if (!v.is_zero()) out.coeffs_.emplace(shape, std::move(v));
    }
    return out;
  }

  SymFunc homogeneous_component(int d) const;
  std::vector<int> degrees() const;  // degrees present, increasing

  /// Structured dump: basis tag and (shape, rendered scalar) rows in
  /// decreasing lexicographic shape order.
  std::vector<std::pair<Partition, std::string>> dump() const;
  std::string to_string() const;

 private:
  friend SymFunc convert(const SymFunc&, Basis);
  Basis basis_;
  CoeffMap coeffs_;  // no zero values stored
};

SymFunc operator*(const Scalar& c, const SymFunc& f);
std::ostream& operator<<(std::ostream&, const SymFunc&);

/// Change of basis; the identity when the target matches.
SymFunc convert(const SymFunc& f, Basis target);

/// Product, computed (and returned) in the internal p basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Hall scalar product: <p_l, p_m> = chi(l = m) z_l, Schur orthonormal.
Scalar hall_inner(const SymFunc& f, const SymFunc& g);

/// The involution omega: p_l -> (-1)^{|l| + len(l)} p_l.
SymFunc omega(const SymFunc& f);

/// g-perp f, the Hall adjoint of multiplication by g.
SymFunc skew(const SymFunc& g, const SymFunc& f);

/// Expands f as a polynomial in x_1..x_nvars.  Faithful when
/// nvars >= deg(f); throws std::invalid_argument otherwise.
using MonomialMap = std::map<std::vector<int>, Scalar>;
MonomialMap to_monomials(const SymFunc& f, int nvars);

/// Murnaghan-Nakayama character chi^lambda(mu) for |lambda| = |mu|.
long long mn_character(const Partition& lambda, const Partition& mu);

}  // namespace qtsym

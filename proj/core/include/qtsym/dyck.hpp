// Dyck paths in arm-sequence form, their q,t statistics, constrained
// enumeration, labeling words, and the path-side q,t-sums the verification
// catalog compares against the symmetric function side.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qtsym/scalar.hpp"
#include "qtsym/shapes.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

/// A lattice path from (0,0) to (n,n) staying weakly above the diagonal,
/// encoded by its arm sequence: a_1 = 0 and 0 <= a_{i+1} <= a_i + 1.
class DyckPath {
 public:
  explicit DyckPath(std::vector<int> arm);  // throws on invalid arm sequences

  const std::vector<int>& arm() const { return arm_; }
  int size() const { return static_cast<int>(arm_.size()); }

  int area() const;  // sum of arms
  int dinv() const;  // pairs i < j with a_i - a_j in {0, 1}
  /// The composition of rows where the path returns to the diagonal.
  Composition touch() const;

  std::string to_string() const;  // "[0,1,2]"
  auto operator<=>(const DyckPath&) const = default;

 private:
  std::vector<int> arm_;
};

std::ostream& operator<<(std::ostream&, const DyckPath&);

/// Component-wise comparison of arm sequences; throws on size mismatch.
bool path_leq(const DyckPath& a, const DyckPath& b);

/// The staircase path of alpha: blocks (0, 1, ..., alpha_i - 1).
DyckPath dp_of(const Composition& alpha);

/// doff_alpha(D) = sum_k (len(alpha) - k) r_k, where r_k counts the zero arms
/// inside the k-th block of alpha.  Requires touch(D) <= alpha in refinement
/// order; throws std::invalid_argument otherwise.
int doff(const Composition& alpha, const DyckPath& d);

/// Complete enumerations in lexicographic arm order.
std::vector<DyckPath> all_paths(int n);
std::vector<DyckPath> paths_with_touch(const Composition& alpha);
std::vector<DyckPath> paths_below(const Composition& alpha);  // D <= DP(alpha)

/// Words w in {1..n}^n with w_i < w_{i+1} whenever a_i < a_{i+1}.
using Word = std::vector<int>;
std::vector<Word> words_of(const DyckPath& d);

/// Word dinv: pairs with equal arms and increasing letters, plus pairs with
/// arm difference one and decreasing letters.  Throws if w is not a word of d.
int dinv_word(const DyckPath& d, const Word& w);

/// Path-side sums of the catalog:
///   B flavor: over D <= DP(alpha),   weight t^area q^{dinv + doff_alpha}
///   C flavor: over touch(D) = alpha, weight t^area q^dinv
Scalar comb_B_scalar(const Composition& alpha);
Scalar comb_C_scalar(const Composition& alpha);

/// Word-resolved flavors: exponent-vector maps over x_1..x_n with the same
/// weights, q graded by the word dinv.
MonomialMap comb_B_monomial(const Composition& alpha);
MonomialMap comb_C_monomial(const Composition& alpha);

}  // namespace qtsym

// The modified Macdonald basis, the nabla operator and dual Hall-Littlewood
// functions.
//
// Tables are built per degree by solving the linear triangularity system
// (support conditions on f[X(1-q)] and f[X(1-t)] in dominance order plus the
// normalization <f, s_(n)> = 1) and are cached immutably; the quadratic
// orthogonality characterization is kept as a test-suite ground truth.
#pragma once

#include <memory>
#include <vector>

#include "qtsym/scalar.hpp"
#include "qtsym/shapes.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

class MacdonaldTable {
 public:
  MacdonaldTable(int degree, std::vector<Partition> parts, std::vector<SymFunc> rows);

  int degree() const { return degree_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  /// The row for mu, in the Schur basis.
  const SymFunc& row(const Partition& mu) const;
  const std::vector<SymFunc>& rows() const { return rows_; }

 private:
  int degree_;
  std::vector<Partition> parts_;
  std::vector<SymFunc> rows_;
};

/// The complete table for degree n (cached; thread-safe first use).
std::shared_ptr<const MacdonaldTable> macd_basis(int n);

/// nabla: the operator with the modified Macdonald rows as eigenfunctions,
/// scaling the mu component by t^{n(mu)} q^{n(mu')}.
SymFunc nabla(const SymFunc& f);

/// Inverse of nabla (the eigenvalues are invertible monomials).
SymFunc nabla_inv(const SymFunc& f);

/// nabla with q specialized to 1 throughout the eigenvalue scaling: expands
/// in the q = 1 table and scales the mu component by t^{n(mu)}.
SymFunc nabla_q1(const SymFunc& f);

/// Dual Hall-Littlewood function Q'_lambda, built by iterated row-adding
/// operators H_{lambda_1} ... H_{lambda_l} (1).
SymFunc hall_littlewood_Qp(const Partition& lambda);

/// Dominance order on partitions of equal size: a >= b component-partial-sums.
bool dominates(const Partition& a, const Partition& b);

}  // namespace qtsym

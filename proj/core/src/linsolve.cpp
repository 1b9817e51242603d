#include "qtsym/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace qtsym {

namespace {

// Fraction-free Gauss-Jordan (Bareiss one-step): works on polynomial rows, so
// the only divisions are exact divisions by the previous pivot.  Entries stay
// minor-sized; rational arithmetic happens once, at read-out time.
struct FractionFree {
  std::vector<std::vector<Poly>> m;
  std::vector<int> pivot_row_of_col;
  std::vector<int> pivot_col_of_row;
  int rank = 0;

  static FractionFree from_scalar_rows(const Matrix& a) {
    FractionFree ff;
    ff.m.reserve(a.size());
    for (const auto& row : a) {
      // Clear denominators: scale the row by the lcm of them.
      Poly lcm = Poly::constant(1);
      for (const Scalar& x : row) {
        if (x.den() == Poly::constant(1)) continue;
        Poly g = poly_gcd(lcm, x.den());
        lcm = lcm * x.den().div_exact(g);
      }
      std::vector<Poly> cleared;
      cleared.reserve(row.size());
      for (const Scalar& x : row)
        cleared.push_back(x.num() * lcm.div_exact(x.den()));
      ff.m.push_back(std::move(cleared));
    }
    return ff;
  }

  // Eliminates on the first `cols` columns; the remaining columns ride along
  // as an augment.
  void run(int cols) {
    int rows = static_cast<int>(m.size());
    size_t width = rows ? m[0].size() : 0;
    pivot_row_of_col.assign(static_cast<size_t>(cols), -1);
    pivot_col_of_row.assign(static_cast<size_t>(rows), -1);
    Poly prev = Poly::constant(1);
    for (int c = 0; c < cols && rank < rows; ++c) {
      // Markowitz-style pivot: among candidate rows prefer the sparsest one
      // (fewest nonzero entries), then the one with the fewest pivot terms;
      // ties break on the row index, keeping the elimination deterministic.
      int piv = -1;
      size_t best_nonzeros = 0, best_terms = 0;
      for (int r = rank; r < rows; ++r) {
        const auto& row = m[static_cast<size_t>(r)];
        if (row[static_cast<size_t>(c)].is_zero()) continue;
        size_t nonzeros = 0;
        for (const Poly& x : row)
          if (!x.is_zero()) ++nonzeros;
        size_t terms = row[static_cast<size_t>(c)].terms().size();
        if (piv < 0 || nonzeros < best_nonzeros ||
            (nonzeros == best_nonzeros && terms < best_terms)) {
          piv = r;
          best_nonzeros = nonzeros;
          best_terms = terms;
        }
      }
      if (piv < 0) continue;
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(rank)]);
      const std::vector<Poly>& prow = m[static_cast<size_t>(rank)];
      const Poly& pivot = prow[static_cast<size_t>(c)];
      for (int r = 0; r < rows; ++r) {
        if (r == rank) continue;
        auto& row = m[static_cast<size_t>(r)];
        Poly f = row[static_cast<size_t>(c)];
        for (size_t j = 0; j < width; ++j) {
          Poly x = row[j] * pivot - f * prow[j];
          row[j] = x.is_zero() ? Poly() : x.div_exact(prev);
        }
      }
      pivot_row_of_col[static_cast<size_t>(c)] = rank;
      pivot_col_of_row[static_cast<size_t>(rank)] = c;
      prev = pivot;
      ++rank;
    }
  }
};

}  // namespace

std::vector<Scalar> lin_solve(Matrix a, std::vector<Scalar> b) {
  size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("lin_solve: size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("lin_solve: matrix not square");
    a[i].push_back(b[i]);
  }
  FractionFree ff = FractionFree::from_scalar_rows(a);
  ff.run(static_cast<int>(n));
  std::vector<Scalar> x(n);
  for (size_t c = 0; c < n; ++c) {
    int r = ff.pivot_row_of_col[c];
    if (r < 0) throw std::domain_error("lin_solve: singular matrix");
    x[c] = Scalar(ff.m[static_cast<size_t>(r)][n], ff.m[static_cast<size_t>(r)][c]);
  }
  return x;
}

Matrix lin_invert(Matrix a) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("lin_invert: matrix not square");
    for (size_t j = 0; j < n; ++j)
      a[i].push_back(i == j ? Scalar::one() : Scalar::zero());
  }
  FractionFree ff = FractionFree::from_scalar_rows(a);
  ff.run(static_cast<int>(n));
  Matrix inv(n, std::vector<Scalar>(n));
  for (size_t c = 0; c < n; ++c) {
    int r = ff.pivot_row_of_col[c];
    if (r < 0) throw std::domain_error("lin_invert: singular matrix");
    const auto& row = ff.m[static_cast<size_t>(r)];
    for (size_t j = 0; j < n; ++j) inv[c][j] = Scalar(row[n + j], row[c]);
  }
  return inv;
}

std::vector<Scalar> lin_kernel_1d(Matrix a, int cols) {
  for (auto& row : a)
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("lin_kernel_1d: ragged matrix");
  FractionFree ff = FractionFree::from_scalar_rows(a);
  ff.run(cols);
  int free_col = -1;
  for (int c = 0; c < cols; ++c) {
    if (ff.pivot_row_of_col[static_cast<size_t>(c)] < 0) {
      if (free_col >= 0) throw std::domain_error("lin_kernel_1d: kernel dimension > 1");
      free_col = c;
    }
  }
  if (free_col < 0) throw std::domain_error("lin_kernel_1d: trivial kernel");
  std::vector<Scalar> x(static_cast<size_t>(cols), Scalar::zero());
  x[static_cast<size_t>(free_col)] = Scalar::one();
  for (int c = 0; c < cols; ++c) {
    int r = ff.pivot_row_of_col[static_cast<size_t>(c)];
    if (r < 0) continue;
    const auto& row = ff.m[static_cast<size_t>(r)];
    x[static_cast<size_t>(c)] =
        -Scalar(row[static_cast<size_t>(free_col)], row[static_cast<size_t>(c)]);
  }
  return x;
}

}  // namespace qtsym

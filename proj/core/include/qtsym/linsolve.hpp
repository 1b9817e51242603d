// Exact dense linear algebra over the rational function field Scalar.
#pragma once

#include <vector>

#include "qtsym/scalar.hpp"

namespace qtsym {

using Matrix = std::vector<std::vector<Scalar>>;

/// Solves A x = b for square nonsingular A; throws std::domain_error otherwise.
std::vector<Scalar> lin_solve(Matrix a, std::vector<Scalar> b);

/// Inverse of a square nonsingular matrix; throws std::domain_error otherwise.
Matrix lin_invert(Matrix a);

/// One-dimensional kernel of an m x n matrix.  Throws std::domain_error if the
/// kernel dimension is not exactly one.
std::vector<Scalar> lin_kernel_1d(Matrix a, int cols);

}  // namespace qtsym

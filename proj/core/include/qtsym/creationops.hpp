// Degree-raising creation operators on symmetric functions and the families
// they generate.
//
// All four operators are computed from their finite summation forms: the
// degree of the argument truncates the r-sum, so no formal series machinery
// is involved.  Negative indices are allowed; e_k and h_k vanish for k < 0.
//
//   H_m f = sum_r (-1)^r     h_{m+r} (e_r[(1-q)X])-perp f   (row adder)
//   B_m f = sum_r (-1)^r     e_{m+r} (h_r[X(1-q)])-perp f
//   C_m f = (-1/q)^{m-1} sum_r q^{-r} h_{m+r} (h_r[X(1-q)])-perp f
//   S_m f = sum_r (-1)^r     h_{m+r} (e_r)-perp f           (Schur creator)
#pragma once

#include "qtsym/shapes.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

struct OperatorKind {
  enum class Tag : char { H = 'H', S = 'S', B = 'B', C = 'C' };
  Tag tag;
  int index;
};

SymFunc apply(OperatorKind op, const SymFunc& f);

SymFunc apply_H(int m, const SymFunc& f);
SymFunc apply_S(int m, const SymFunc& f);
SymFunc apply_B(int m, const SymFunc& f);
SymFunc apply_C(int m, const SymFunc& f);

/// The equivalent contour form of C_m,
///   (-1/q)^{m-1} P[X - (1-1/q)/z] Omega[zX] | z^m,
/// expanded as (-1/q)^{m-1} sum_r (-1)^r h_{m+r} (e_r[(1-1/q)X])-perp.
SymFunc apply_C_alt(int m, const SymFunc& f);

/// B_alpha = B_{a_l} B_{a_{l-1}} ... B_{a_1} (1): indices applied in reverse
/// order (alpha_1 acts first).  Results are memoized.
SymFunc build_B(const Composition& alpha);

/// C_alpha = C_{a_1} C_{a_2} ... C_{a_l} (1): alpha_l acts first.  Memoized.
SymFunc build_C(const Composition& alpha);

/// E_{n,k}, extracted from e_n[X (1-z)/(1-q)] by solving the triangular
/// change between the z-power and (z;q)_k/(q;q)_k expansions.
/// Throws std::invalid_argument unless 1 <= k <= n.
SymFunc E_nk(int n, int k);

}  // namespace qtsym

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtsym/creationops.hpp"

using namespace qtsym;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

SymFunc schur_sum(std::initializer_list<std::pair<const char*, const char*>> rows) {
  SymFunc acc(Basis::s);
  for (const auto& [shape, coeff] : rows)
    acc = acc + SymFunc::schur(Partition::parse(shape)) * Scalar::parse(coeff);
  return acc;
}

}  // namespace

TEST_CASE("operators on the unit") {
  for (int m = 1; m <= 4; ++m) {
    CHECK(apply_B(m, SymFunc::one()) == SymFunc::elementary(m));
    CHECK(apply_H(m, SymFunc::one()) == SymFunc::homogeneous(m));
    CHECK(apply_S(m, SymFunc::one()) == SymFunc::schur(Partition({m})));
    CHECK(apply_C(m, SymFunc::one()) ==
          SymFunc::homogeneous(m) * (-Scalar::one() / Scalar::q()).pow(m - 1));
  }
  // Vanishing tails for negative indices.
  CHECK(apply_B(-1, SymFunc::one()).is_zero());
  CHECK(apply_C(-2, SymFunc::one()).is_zero());
  CHECK(apply_S(0, SymFunc::one()) == SymFunc::one());
}

TEST_CASE("C_4 on the unit, in the Schur basis") {
  SymFunc c4 = convert(apply_C(4, SymFunc::one()), Basis::s);
  CHECK(c4 == schur_sum({{"[4]", "0 - q^-3"}}));
}

TEST_CASE("iterated Schur creation") {
  CHECK(apply_S(2, apply_S(1, SymFunc::one())) == SymFunc::schur(Partition({2, 1})));
  CHECK(apply_S(3, apply_S(2, apply_S(2, SymFunc::one()))) ==
        SymFunc::schur(Partition({3, 2, 2})));
}

TEST_CASE("operator kind dispatch") {
  SymFunc f = SymFunc::schur(Partition({2}));
  CHECK(apply({OperatorKind::Tag::B, 2}, f) == apply_B(2, f));
  CHECK(apply({OperatorKind::Tag::C, 2}, f) == apply_C(2, f));
  CHECK(apply({OperatorKind::Tag::H, 2}, f) == apply_H(2, f));
  CHECK(apply({OperatorKind::Tag::S, 2}, f) == apply_S(2, f));
  // Degree raising: homogeneous degree d input gives degree d + m.
  SymFunc out = apply_B(3, f);
  CHECK(out.is_homogeneous());
  CHECK(out.degree() == 5);
}

TEST_CASE("B family basics") {
  for (int n = 1; n <= 5; ++n)
    CHECK(build_B(Composition({n})) == SymFunc::elementary(n));

  // Mixed-sign row.
  CHECK(convert(build_B(Composition({3, 1})), Basis::s) ==
        schur_sum({{"[1,1,1,1]", "q^3"}, {"[2,1,1]", "q^2"}, {"[2,2]", "q - 1"}}));

  // q -> 1 collapses to products of elementaries.
  for (const Composition& alpha : compositions_of(4)) {
    SymFunc at_one = build_B(alpha).map_coeffs(
        [](const Scalar& c) { return c.specialize(Var::q, Scalar::one()); });
    SymFunc e_alpha = SymFunc::one();
    for (int part : alpha.parts()) e_alpha = e_alpha * SymFunc::elementary(part);
    CHECK(at_one == e_alpha);
  }
}

TEST_CASE("C family basics") {
  // Straightening example.
  CHECK(build_C(Composition({1, 3})) ==
        build_C(Composition({2, 2})) * S("1/q - 1") +
            build_C(Composition({3, 1})) * S("1/q"));

  CHECK(convert(build_C(Composition({1, 1, 1, 1})), Basis::s) ==
        schur_sum({{"[1,1,1,1]", "1"},
                   {"[2,1,1]", "q^-3 + q^-2 + q^-1"},
                   {"[2,2]", "q^-4 + q^-2"},
                   {"[3,1]", "q^-5 + q^-4 + q^-3"},
                   {"[4]", "q^-6"}}));

  // q -> 1 collapses to signed products of completes; summed over all alpha
  // this is the classical alternating expansion of e_n.
  for (const Composition& alpha : compositions_of(4)) {
    SymFunc at_one = build_C(alpha).map_coeffs(
        [](const Scalar& c) { return c.specialize(Var::q, Scalar::one()); });
    SymFunc h_alpha = SymFunc::one();
    for (int part : alpha.parts()) h_alpha = h_alpha * SymFunc::homogeneous(part);
    int sign = (alpha.size() - alpha.length()) % 2 == 0 ? 1 : -1;
    CHECK(at_one == h_alpha * Scalar(sign));
  }
  SymFunc alternating;
  for (const Composition& alpha : compositions_of(4)) {
    SymFunc h_alpha = SymFunc::one();
    for (int part : alpha.parts()) h_alpha = h_alpha * SymFunc::homogeneous(part);
    int sign = (alpha.size() - alpha.length()) % 2 == 0 ? 1 : -1;
    alternating = alternating + h_alpha * Scalar(sign);
  }
  CHECK(alternating == SymFunc::elementary(4));
}

TEST_CASE("families use opposite application orders") {
  // B indexes act in reverse: B_(1,3) applies index 1 first, then 3.
  CHECK(build_B(Composition({1, 3})) == apply_B(3, apply_B(1, SymFunc::one())));
  CHECK(build_C(Composition({1, 3})) == apply_C(1, apply_C(3, SymFunc::one())));
}

TEST_CASE("E pieces") {
  CHECK_THROWS_AS(E_nk(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(E_nk(4, 5), std::invalid_argument);

  for (int n = 1; n <= 6; ++n) {
    // Sum over k recovers e_n.
    SymFunc sum;
    for (int k = 1; k <= n; ++k) sum = sum + E_nk(n, k);
    CHECK(sum == SymFunc::elementary(n));
    // The k = n piece is the all-ones C family member.
    CHECK(E_nk(n, n) == build_C(Composition(std::vector<int>(n, 1))));
  }

  // Extraction oracle: E_{4,1} coincides with C_(4).
  CHECK(E_nk(4, 1) == build_C(Composition({4})));
  CHECK(convert(E_nk(4, 1), Basis::s) == schur_sum({{"[4]", "0 - q^-3"}}));
}

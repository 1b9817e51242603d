#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtsym/shapes.hpp"

using namespace qtsym;

TEST_CASE("n statistic") {
  CHECK(Composition({2, 1}).n_stat() == 1);
  CHECK(Composition({1, 1, 1, 1}).n_stat() == 6);
  CHECK(Composition({7}).n_stat() == 0);
  CHECK(Composition::empty().n_stat() == 0);
}

TEST_CASE("conjugation") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({1, 1, 1, 1, 1}).conjugate() == Partition({5}));
  CHECK(Partition({4, 2, 1}).conjugate().conjugate() == Partition({4, 2, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("descents, refinement and reversal") {
  CHECK(Composition({3, 5, 6}).descent_set() == std::set<int>{3, 8});
  CHECK(refines(Composition({3, 5, 6}), Composition({8, 6})));
  Composition a({2, 1, 3});
  CHECK(refines(a, a));
  CHECK(a.reversed() == Composition({3, 1, 2}));
  CHECK_THROWS_AS(refines(Composition({2}), Composition({3})), std::invalid_argument);
}

TEST_CASE("refinement is a partial order") {
  for (int n = 1; n <= 8; ++n) {
    auto comps = compositions_of(n);
    for (const auto& a : comps) {
      CHECK(refines(a, a));
      for (const auto& b : comps) {
        if (refines(a, b) && refines(b, a)) CHECK(a == b);
      }
    }
    // Transitivity via descent masks.
    for (const auto& a : comps)
      for (const auto& b : comps) {
        if (!refines(a, b)) continue;
        for (const auto& c : comps)
          if (refines(b, c)) CHECK(refines(a, c));
      }
  }
}

TEST_CASE("multiplicities and z") {
  CHECK(z_mu(Partition({2})) == 2);
  CHECK(z_mu(Partition({1, 1})) == 2);
  CHECK(z_mu(Partition({3, 1, 1})) == 6);
  CHECK(Partition({2, 2, 1}).multiplicity_vector() == std::vector<int>{1, 2, 0, 0, 0});
  CHECK(m_stat(Partition({2, 2, 1})) == 4);  // binom(2,2) + binom(3,2)
}

TEST_CASE("enumeration sizes and order") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(compositions_of(4).size() == 8);
  CHECK(compositions_of(4, 2) ==
        std::vector<Composition>{Composition({1, 3}), Composition({2, 2}), Composition({3, 1})});
  CHECK(partitions_of(0).size() == 1);
  CHECK(compositions_of(0).size() == 1);

  // Partitions in decreasing lex order, compositions lexicographic.
  auto parts = partitions_of(4);
  CHECK(parts.front() == Partition({4}));
  CHECK(parts.back() == Partition({1, 1, 1, 1}));
  auto comps = compositions_of(3);
  CHECK(comps.front() == Composition({1, 1, 1}));
  CHECK(comps.back() == Composition({3}));

  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(static_cast<long long>(compositions_of(n, k).size()) == binomial(n - 1, k - 1));
}

TEST_CASE("conjugate n statistic identity") {
  // n(conj(lambda)) = sum_i binom(lambda_i, 2)
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) {
      long long expect = 0;
      for (int part : p.parts()) expect += binomial(part, 2);
      CHECK(p.conjugate().n_stat() == expect);
    }
}

TEST_CASE("validation and parsing") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
  CHECK(Partition::parse("[3,1]") == Partition({3, 1}));
  CHECK(Composition::parse("[1,3]") == Composition({1, 3}));
  CHECK(Composition::parse("[]") == Composition::empty());
  CHECK_THROWS_AS(Composition::parse("[1,"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("1,3"), std::invalid_argument);
  CHECK(Composition({1, 3}).to_string() == "[1,3]");
}

TEST_CASE("widening conversion") {
  Partition p({3, 1});
  CHECK(Composition::of(p) == Composition({3, 1}));
  CHECK(Composition({1, 3}).sorted() == p);
}

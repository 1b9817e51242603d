#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qtsym/dyck.hpp"

using namespace qtsym;

namespace {
Scalar S(const char* text) { return Scalar::parse(text); }
}

TEST_CASE("arm sequence validation") {
  CHECK_THROWS_AS(DyckPath({1}), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath({0, 1, -1}), std::invalid_argument);
  CHECK_NOTHROW(DyckPath({0, 1, 2, 0, 1}));
}

TEST_CASE("area and dinv") {
  CHECK(DyckPath({0, 0, 0, 0, 0}).area() == 0);
  CHECK(DyckPath({0, 0, 0, 0, 0}).dinv() == 10);
  CHECK(DyckPath({0, 1, 2, 3, 4}).area() == 10);
  CHECK(DyckPath({0, 1, 2, 3, 4}).dinv() == 0);
  CHECK(DyckPath({0, 1, 2, 2, 1}).area() == 6);
  CHECK(DyckPath({0, 1, 2, 2, 1}).dinv() == 4);
  CHECK(DyckPath({0, 1, 0, 1, 0}).area() == 2);
  CHECK(DyckPath({0, 1, 0, 1, 0}).dinv() == 7);
}

TEST_CASE("touch composition") {
  CHECK(DyckPath({0, 1, 2, 0, 1, 2, 2, 1, 0, 1, 2, 3, 2, 1}).touch() ==
        Composition({3, 5, 6}));
  CHECK(DyckPath({0, 0, 0}).touch() == Composition({1, 1, 1}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& alpha : compositions_of(n)) CHECK(dp_of(alpha).touch() == alpha);
}

TEST_CASE("staircase construction and the path order") {
  CHECK(dp_of(Composition({3, 5, 6})).arm() ==
        std::vector<int>{0, 1, 2, 0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 5});
  DyckPath d({0, 1, 1});
  CHECK(path_leq(d, d));
  CHECK(path_leq(DyckPath({0, 0, 1}), DyckPath({0, 1, 1})));
  CHECK(!path_leq(DyckPath({0, 1, 0}), DyckPath({0, 0, 1})));
  CHECK_THROWS_AS(path_leq(DyckPath({0}), DyckPath({0, 1})), std::invalid_argument);
}

TEST_CASE("path order is consistent with touch refinement") {
  for (int n = 1; n <= 6; ++n) {
    auto paths = all_paths(n);
    for (const auto& d1 : paths)
      for (const auto& d2 : paths)
        if (path_leq(d1, d2)) CHECK(refines(d1.touch(), d2.touch()));
  }
}

TEST_CASE("doff") {
  DyckPath d({0, 1, 2, 0, 1, 2, 2, 1, 0, 1, 2, 3, 2, 1});
  CHECK(doff(Composition({8, 6}), d) == 2);
  // On its own staircase: binomial(len, 2).
  for (int n = 1; n <= 6; ++n)
    for (const auto& alpha : compositions_of(n))
      CHECK(doff(alpha, dp_of(alpha)) == binomial(alpha.length(), 2));
  // One block: always zero.
  for (const auto& d5 : all_paths(5)) CHECK(doff(Composition({5}), d5) == 0);
  // touch(D) must refine alpha.
  CHECK_THROWS_AS(doff(Composition({1, 2}), DyckPath({0, 1, 1})), std::invalid_argument);
}

TEST_CASE("doff depends only on the touch class") {
  for (int n = 1; n <= 6; ++n) {
    auto comps = compositions_of(n);
    for (const auto& alpha : comps) {
      for (const auto& gamma : comps) {
        if (!refines(gamma, alpha)) continue;
        auto cls = paths_with_touch(gamma);
        int expected = doff(alpha, cls.front());
        for (const auto& d : cls) CHECK(doff(alpha, d) == expected);
      }
    }
  }
}

TEST_CASE("enumeration counts") {
  CHECK(all_paths(5).size() == 42);
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long long>(all_paths(n).size()) == catalan(n));
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long long>(paths_with_touch(Composition({n})).size()) ==
          catalan(n - 1));
  for (int n = 1; n <= 6; ++n)
    for (const auto& alpha : compositions_of(n)) {
      long long expect = 1;
      for (int part : alpha.parts()) expect *= catalan(part - 1);
      CHECK(static_cast<long long>(paths_with_touch(alpha).size()) == expect);
    }
}

TEST_CASE("touch classes partition the path set") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> seen;
    size_t total = 0;
    for (const auto& alpha : compositions_of(n)) {
      for (const auto& d : paths_with_touch(alpha)) {
        CHECK(d.touch() == alpha);
        CHECK(seen.insert(d.arm()).second);
        ++total;
      }
    }
    CHECK(total == all_paths(n).size());
  }
}

TEST_CASE("below enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& alpha : compositions_of(n)) {
      DyckPath top = dp_of(alpha);
      auto below = paths_below(alpha);
      std::set<std::vector<int>> below_set;
      for (const auto& d : below) {
        CHECK(path_leq(d, top));
        below_set.insert(d.arm());
      }
      // Complete: agrees with a filter over all paths.
      for (const auto& d : all_paths(n))
        CHECK(below_set.count(d.arm()) == static_cast<size_t>(path_leq(d, top)));
    }
}

TEST_CASE("every enumerated arm sequence is valid") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : all_paths(n)) CHECK_NOTHROW(DyckPath(d.arm()));
}

TEST_CASE("words") {
  DyckPath flat({0, 0, 0});
  auto words = words_of(flat);
  CHECK(words.size() == 27);  // no ascent constraint at all
  CHECK(dinv_word(flat, {3, 2, 1}) == 0);
  CHECK(dinv_word(flat, {1, 2, 3}) == 3);

  DyckPath stairs({0, 1, 2});
  auto stair_words = words_of(stairs);
  CHECK(stair_words.size() == 1);  // strictly increasing forced
  CHECK(stair_words[0] == Word{1, 2, 3});

  CHECK_THROWS_AS(dinv_word(stairs, {2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(dinv_word(stairs, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(dinv_word(flat, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("scalar path sums") {
  // alpha = (3): the two touch-(3) paths carry t^2 q and t^3.
  CHECK(comb_C_scalar(Composition({3})) == S("q*t^2 + t^3"));
  // Summed over all compositions of 3: the full q,t-Catalan.
  Scalar total;
  for (const auto& alpha : compositions_of(3)) total += comb_C_scalar(alpha);
  CHECK(total == S("q^3 + q^2*t + q*t + q*t^2 + t^3"));

  // B-side single path for alpha = (1^n): q^(2 binom(n,2)).
  for (int n = 1; n <= 5; ++n) {
    Composition ones(std::vector<int>(n, 1));
    CHECK(comb_B_scalar(ones) == q_pow(2 * static_cast<int>(binomial(n, 2))));
  }
}

TEST_CASE("monomial path sums are symmetric") {
  // Coefficients must agree on permuted exponent vectors.
  for (const auto& alpha : {Composition({2, 1}), Composition({3})}) {
    MonomialMap m = comb_C_monomial(alpha);
    for (const auto& [expo, c] : m) {
      std::vector<int> sorted_expo = expo;
      std::sort(sorted_expo.begin(), sorted_expo.end(), std::greater<int>());
      CHECK(m.at(sorted_expo) == c);
    }
  }
}

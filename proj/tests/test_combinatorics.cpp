#include <doctest.h>

#include <random>
#include <set>

#include "tradekit/combinatorics.hpp"

using namespace tradekit;

TEST_CASE("binomial uses the vanishing convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
  CHECK(binomial_u64(10, 3) == 120);
}

TEST_CASE("binomial satisfies Pascal's rule") {
  for (int a = 1; a <= 40; ++a)
    for (int b = 0; b <= a; ++b) REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("colex rank and unrank") {
  CHECK(colex_rank(Subset(4, {1, 2})) == 0);
  CHECK(colex_rank(Subset(4, {1, 3})) == 1);
  CHECK(colex_rank(Subset(4, {2, 3})) == 2);
  CHECK(colex_unrank(0, 2, 4) == Subset(4, {1, 2}));
  CHECK(colex_unrank(2, 2, 4) == Subset(4, {2, 3}));
  CHECK(colex_unrank(5, 2, 4) == Subset(4, {3, 4}));
  CHECK_THROWS(colex_unrank(6, 2, 4));
}

TEST_CASE("colex unrank inverts rank for n <= 12") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      std::uint64_t expected = 0;
      for (const auto& s : subsets_iter(k, n)) {
        REQUIRE(colex_rank(s) == expected);
        REQUIRE(colex_unrank(expected, k, n) == s);
        ++expected;
      }
    }
}

TEST_CASE("subsets_iter") {
  auto ones = subsets_iter(1, 3);
  REQUIRE(ones.size() == 3);
  CHECK(ones[0] == Subset(3, {1}));
  CHECK(ones[2] == Subset(3, {3}));
  auto none = subsets_iter(0, 3);
  REQUIRE(none.size() == 1);
  CHECK(none[0].size() == 0);
  auto pairs = subsets_iter(2, 4);
  CHECK(pairs.size() == 6);
  CHECK(pairs.back() == Subset(4, {3, 4}));
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      auto all = subsets_iter(k, n);
      std::set<Subset> distinct(all.begin(), all.end());
      CHECK(distinct.size() == binomial_u64(n, k));
    }
}

TEST_CASE("subset basics") {
  Subset s(5, {1, 4});
  CHECK(s.elements() == std::vector<int>{1, 4});
  CHECK(s.to_string() == "{1,4}");
  CHECK(Subset::empty(3).to_string() == "{}");
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(2));
  CHECK(s.united(Subset(5, {2})) == Subset(5, {1, 2, 4}));
  CHECK(s.without(Subset(5, {1})) == Subset(5, {4}));
  CHECK(Subset(5, {1}).is_subset_of(s));
  CHECK_THROWS(Subset(3, {4}));
  CHECK_THROWS(Subset(3, {1, 1}));
  CHECK_THROWS(Subset(3, {2, 1}));
  CHECK(Subset(4, {1, 2}) < Subset(4, {1, 3}));
  CHECK(Subset(4, {3}) < Subset(4, {1, 2}));
}

TEST_CASE("intersection_size") {
  CHECK(intersection_size(Subset(3, {1, 2}), Subset(3, {2, 3})) == 1);
  CHECK(intersection_size(Subset(3, {1, 2}), Subset(3, {1, 2})) == 2);
  CHECK(intersection_size(Subset(3, {1}), Subset(3, {2, 3})) == 0);
}

TEST_CASE("apply_permutation") {
  CHECK(apply_permutation(Permutation({2, 1, 3}), Subset(3, {1, 3})) == Subset(3, {2, 3}));
  CHECK(apply_permutation(Permutation::identity(3), Subset(3, {1, 2})) == Subset(3, {1, 2}));
  CHECK(apply_permutation(Permutation({3, 1, 2}), Subset(3, {1, 2})) == Subset(3, {1, 3}));
  CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("permutations act on subsets as a group action") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<int> a(n), b(n);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation sigma(a), tau(b);
    const Subset s = Subset::from_mask(n, rng() & ((std::uint64_t{1} << n) - 1));
    REQUIRE(apply_permutation(sigma.compose(tau), s) == apply_permutation(sigma, apply_permutation(tau, s)));
    REQUIRE(sigma.compose(sigma.inverse()) == Permutation::identity(n));
  }
}

TEST_CASE("adjacent transposition") {
  const auto s = Permutation::adjacent_transposition(4, 2);
  CHECK(s.images() == std::vector<int>{1, 3, 2, 4});
}

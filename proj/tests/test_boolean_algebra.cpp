#include <doctest.h>

#include <random>

#include "tradekit/boolean_algebra.hpp"

using namespace tradekit;

namespace {

BooleanElement b(int n, std::initializer_list<int> s, const Rational& c = 1) {
  return BooleanElement::basis(Subset(n, s), c);
}

BooleanElement random_homogeneous(std::mt19937_64& rng, int n, int k) {
  BooleanElement e(n);
  for (const auto& s : subsets_iter(k, n))
    if (rng() % 2) e.add_term(s, static_cast<long>(rng() % 7) - 3);
  return e;
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

Subset random_subset(std::mt19937_64& rng, int n) {
  return Subset::from_mask(n, rng() & ((std::uint64_t{1} << n) - 1));
}

}  // namespace

TEST_CASE("product is union of sets") {
  CHECK(b(3, {1}) * b(3, {2}) == b(3, {1, 2}));
  const auto x = b(3, {1}, 2) - b(3, {2, 3});
  CHECK(BooleanElement::one(3) * x == x);
  CHECK((b(3, {1}) - b(3, {2})) * b(3, {1}) == b(3, {1}) - b(3, {1, 2}));
}

TEST_CASE("text rendering") {
  CHECK((b(3, {2}) - b(3, {1})).to_string() == "-1*{1} + 1*{2}");
  CHECK((b(3, {1, 2}) + b(3, {3}, Rational(1, 2))).to_string() == "1/2*{3} + 1*{1,2}");
  CHECK(BooleanElement::one(2).to_string() == "1*{}");
  CHECK(BooleanElement(2).to_string() == "0");
}

TEST_CASE("no zero coefficients are stored") {
  auto e = b(3, {1}) + b(3, {2});
  e -= b(3, {1});
  CHECK(e == b(3, {2}));
  CHECK(e.terms().size() == 1);
  CHECK_THROWS(b(3, {1}) + b(4, {1}));
}

TEST_CASE("grade") {
  CHECK(grade(b(3, {1}) + b(3, {1, 2}), 1) == b(3, {1}));
  CHECK(grade(b(3, {1}) + b(3, {1, 2, 3}), 4).is_zero());
  CHECK(grade(BooleanElement::one(3), 0) == BooleanElement::one(3));
}

TEST_CASE("sigma") {
  CHECK(sigma(Subset(3, {1, 2, 3}), 2) == b(3, {1, 2}) + b(3, {1, 3}) + b(3, {2, 3}));
  CHECK(sigma(Subset(3, {2}), 0) == BooleanElement::one(3));
  CHECK(sigma(Subset(3, {1, 2}), 3).is_zero());
}

TEST_CASE("psi") {
  CHECK(psi(b(3, {1, 2}), 1) == b(3, {1}) + b(3, {2}));
  CHECK(psi(b(3, {1, 3}) - b(3, {2, 3}), 1) == b(3, {1}) - b(3, {2}));
  CHECK(psi(b(3, {1, 2, 3}), 3) == BooleanElement::one(3));
  CHECK(psi(BooleanElement(3), 2).is_zero());
}

TEST_CASE("psi composes up to a binomial factor") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= std::min(n, 5); ++k)
      for (int a = 0; a <= k; ++a)
        for (int c = 0; a + c <= k; ++c) {
          const auto e = random_homogeneous(rng, n, k);
          auto direct = psi(e, a + c);
          direct *= Rational(binomial(a + c, a));
          REQUIRE(psi(psi(e, a), c) == direct);
        }
}

TEST_CASE("psi agrees with the inclusion matrix") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      for (int t = 0; t <= k; ++t) {
        const auto e = random_homogeneous(rng, n, k);
        const auto w = build_matrix(MatrixSpec::inclusion(n, t, k));
        REQUIRE(matvec(w, e.coordinates(k)) == psi(e, k - t).coordinates(t));
      }
}

TEST_CASE("psi commutes with the permutation action") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int k = static_cast<int>(rng() % (n + 1));
    const int steps = static_cast<int>(rng() % (k + 1));
    const auto e = random_homogeneous(rng, n, k);
    const auto s = random_permutation(rng, n);
    REQUIRE(psi(permute_element(s, e), steps) == permute_element(s, psi(e, steps)));
  }
}

TEST_CASE("permute_element") {
  const auto e = b(3, {1}) - b(3, {2, 3});
  CHECK(permute_element(Permutation::identity(3), e) == e);
  CHECK(permute_element(Permutation({2, 1}), b(2, {1}) - b(2, {2})) == b(2, {2}) - b(2, {1}));
  const Permutation s({3, 1, 4, 2});
  const Subset a(4, {1, 2, 3});
  CHECK(permute_element(s, sigma(a, 2)) == sigma(apply_permutation(s, a), 2));
}

TEST_CASE("sigma splits off one point") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Subset x = Subset::full(n);
    const Subset blocked = random_subset(rng, n);
    const auto free = x.without(blocked).elements();
    if (free.empty()) continue;
    const int w = free[rng() % free.size()];
    const Subset wb = blocked.united(Subset(n, {w}));
    for (int m = 1; m <= n; ++m)
      REQUIRE(sigma(x.without(blocked), m) ==
              sigma(x.without(wb), m) + b(n, {w}) * sigma(x.without(wb), m - 1));
  }
}

TEST_CASE("three-point identity for sigma") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    const int x = p[0], y = p[1], z = p[2];
    std::vector<int> rest(p.begin() + 3, p.end());
    rest.resize(rng() % (rest.size() + 1));
    std::sort(rest.begin(), rest.end());
    const Subset a(n, rest);
    const Subset full = Subset::full(n);
    const auto omit = [&](int u, int v) {
      std::vector<int> e{u, v};
      std::sort(e.begin(), e.end());
      return full.without(a.united(Subset(n, e)));
    };
    for (int m = 0; m <= n; ++m) {
      const auto lhs = (b(n, {x}) - b(n, {y})) * sigma(omit(x, y), m) -
                       (b(n, {z}) - b(n, {y})) * sigma(omit(z, y), m) -
                       (b(n, {x}) - b(n, {z})) * sigma(omit(x, z), m);
      REQUIRE(lhs.is_zero());
    }
  }
}

TEST_CASE("build_matrix examples") {
  const auto w = build_matrix(MatrixSpec::inclusion(2, 0, 1));
  CHECK(w.rows() == 1);
  CHECK(w.cols() == 2);
  CHECK(w(0, 0) == 1);
  CHECK(w(0, 1) == 1);
  const auto u = build_matrix(MatrixSpec::intersection(3, 1, 1, 0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(u(i, j) == (i == j ? 0 : 1));
  CHECK_THROWS(build_matrix(MatrixSpec::intersection(3, 1, 1, 2)));
  CHECK_THROWS(build_matrix(MatrixSpec::combination(4, 1, 2, {1})));
  CHECK_THROWS(build_matrix(MatrixSpec::inclusion(3, 2, 1)));
}

TEST_CASE("intersection at l = t is the inclusion matrix") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int t = 0; t < k; ++t)
        REQUIRE(build_matrix(MatrixSpec::intersection(n, t, k, t)) == build_matrix(MatrixSpec::inclusion(n, t, k)));
}

TEST_CASE("intersection matrices have constant row sums") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int t = 0; t < k; ++t)
        for (int l = 0; l <= t; ++l) {
          const auto u = build_matrix(MatrixSpec::intersection(n, t, k, l));
          std::vector<Rational> sums(u.rows());
          for (std::size_t i = 0; i < u.rows(); ++i)
            for (const auto& x : u.row(i)) sums[i] += x;
          for (const auto& s : sums) REQUIRE(s == sums.front());
          REQUIRE(sums.front() == Rational(binomial(t, l) * binomial(n - t, k - l)));
          Rational column;
          for (std::size_t i = 0; i < u.rows(); ++i) column += u(i, 0);
          REQUIRE(column == Rational(lambda_coeff(t, k, n, l, 0)));
        }
}

TEST_CASE("lambda coefficients") {
  CHECK(lambda_coeff(1, 3, 8, 0, 1) == -1);
  CHECK(lambda_coeff(1, 2, 5, 1, 0) == 2);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      for (int t = 0; t <= k; ++t)
        for (int j = 0; j <= t; ++j) {
          REQUIRE(lambda_coeff(t, k, n, t, j) == binomial(k - j, t - j));
          for (int l = 0; l <= t; ++l) {
            if (j == 0) REQUIRE(lambda_coeff(t, k, n, l, 0) == binomial(k, l) * binomial(n - k, t - l));
          }
        }
  CHECK_THROWS(lambda_coeff(1, 3, 8, 2, 0));
}

TEST_CASE("lambda table for (n,t,k) = (8,2,3)") {
  const long expected[3][3] = {{10, 15, 3}, {-4, 2, 2}, {1, -2, 1}};
  for (int j = 0; j <= 2; ++j)
    for (int l = 0; l <= 2; ++l) CHECK(lambda_coeff(2, 3, 8, l, j) == expected[j][l]);
}

TEST_CASE("j_set and predicted_rank") {
  CHECK(j_set(2, 3, 8, {0, 0, 1}) == std::vector<int>{0, 1, 2});
  CHECK(j_set(2, 3, 8, {0, 0, 0}).empty());
  CHECK(predicted_rank(2, 3, 8, {0, 0, 0}) == 0);
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int t = 0; t < k; ++t) {
        std::vector<Rational> e_t(t + 1);
        e_t[t] = 1;
        REQUIRE(predicted_rank(t, k, n, e_t) == binomial(n, t));
      }
  std::vector<int> expected;
  for (int j = 0; j <= 1; ++j)
    if (lambda_coeff(1, 2, 6, 0, j) != 0) expected.push_back(j);
  CHECK(j_set(1, 2, 6, {1, 0}) == expected);
  const auto u = build_matrix(MatrixSpec::intersection(6, 1, 2, 0));
  CHECK(predicted_rank(1, 2, 6, {1, 0}) == rank(u));
  CHECK_THROWS(j_set(2, 3, 5, {0, 0, 1}));
}

TEST_CASE("weighted index set sees cancellation") {
  // lambda_1(1,2,4;0) = -1 and lambda_1(1,2,4;1) = 1, so c = (1,1) kills j = 1.
  CHECK(j_set(1, 2, 4, {1, 1}) == std::vector<int>{0, 1});
  CHECK(effective_j_set(1, 2, 4, {1, 1}) == std::vector<int>{0});
  CHECK(effective_predicted_rank(1, 2, 4, {1, 1}) == 1);
  CHECK(rank(build_matrix(MatrixSpec::combination(4, 1, 2, {1, 1}))) == 1);
  CHECK(rank_from_j_set(4, {0, 1}) == 4);
}

TEST_CASE("predicted rank is scale invariant") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c(2), c7(2);
    for (int i = 0; i < 2; ++i) {
      c[i] = static_cast<long>(rng() % 5) - 2;
      c7[i] = 7 * c[i];
    }
    CHECK(predicted_rank(1, 2, 6, c) == predicted_rank(1, 2, 6, c7));
    CHECK(rank(build_matrix(MatrixSpec::combination(6, 1, 2, c))) ==
          rank(build_matrix(MatrixSpec::combination(6, 1, 2, c7))));
  }
}

TEST_CASE("permuting rows and columns leaves the rank unchanged") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = build_matrix(MatrixSpec::intersection(7, 2, 3, static_cast<int>(rng() % 3)));
    const auto s = random_permutation(rng, 7);
    RationalMatrix p(m.rows(), m.cols());
    const auto rows = subsets_iter(2, 7);
    const auto cols = subsets_iter(3, 7);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        p(colex_rank(apply_permutation(s, rows[i])), colex_rank(apply_permutation(s, cols[j]))) = m(i, j);
    CHECK(rank(p) == rank(m));
  }
}

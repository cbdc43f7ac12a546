#include <doctest.h>

#include <random>
#include <sstream>

#include "tradekit/linalg.hpp"
#include "tradekit/matrix_io.hpp"

using namespace tradekit;

namespace {

RationalMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t cols = rows.begin()->size();
  RationalMatrix m(rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % (2 * spread + 1)) - spread;
  return m;
}

// Low-rank product so the rank is not almost always full.
RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  const std::size_t inner = 1 + rng() % std::min(rows, cols);
  const auto a = random_matrix(rng, rows, inner, 3);
  const auto b = random_matrix(rng, inner, cols, 3);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t l = 0; l < inner; ++l) m(i, j) += a(i, l) * b(l, j);
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(make({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(make({{1, 1}})) == 1);
  CHECK(rank(RationalMatrix(0, 4)) == 0);
  CHECK(rank(RationalMatrix(3, 2)) == 0);
}

TEST_CASE("kernel basis examples") {
  const auto k = kernel_basis(make({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
  CHECK(kernel_basis(RationalMatrix::identity(2)).empty());
  const auto full = kernel_basis(RationalMatrix(2, 3));
  CHECK(full.size() == 3);
  CHECK(rank_of_columns(full) == 3);
}

TEST_CASE("rank_of_columns, in_span and matvec") {
  CHECK(rank_of_columns(std::vector<RationalVector>{{1, 0}, {0, 1}, {1, 1}}) == 2);
  CHECK(rank_of_columns(std::vector<RationalVector>{}) == 0);
  CHECK(rank_of_columns(std::vector<RationalVector>{{1, -1}, {2, -2}}) == 1);
  CHECK(in_span({1, 1}, std::vector<RationalVector>{{1, 0}, {0, 1}}));
  CHECK(in_span({0, 0}, std::vector<RationalVector>{}));
  CHECK_FALSE(in_span({1, 0}, std::vector<RationalVector>{{0, 1}}));
  CHECK(matvec(RationalMatrix::identity(2), {3, Rational(1, 2)}) == RationalVector{3, Rational(1, 2)});
  CHECK(is_zero(matvec(RationalMatrix(2, 2), {3, 4})));
  CHECK(matvec(make({{1, 1}}), {1, -1}) == RationalVector{0});
}

TEST_CASE("rank-nullity and exact kernel vectors on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_low_rank(rng, 1 + rng() % 7, 1 + rng() % 9);
    const auto kernel = kernel_basis(m);
    REQUIRE(rank(m) + kernel.size() == m.cols());
    for (const auto& v : kernel) REQUIRE(is_zero(matvec(m, v)));
    CHECK(rank_of_columns(kernel) == kernel.size());
  }
}

TEST_CASE("parallel rank agrees with the serial reference") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = trial % 2 ? random_matrix(rng, 6, 8, 5) : random_low_rank(rng, 6, 8);
    REQUIRE(rank(m) == reference::rank(m));
    REQUIRE(kernel_basis(m).size() == reference::kernel_basis(m).size());
  }
}

TEST_CASE("rank is invariant under row operations and transposition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_low_rank(rng, 6, 8);
    const auto r = rank(m);
    CHECK(rank(m.transposed()) == r);
    const std::size_t a = rng() % 6, b = rng() % 6;
    for (std::size_t j = 0; j < 8; ++j) std::swap(m(a, j), m(b, j));
    CHECK(rank(m) == r);
    const Rational scale(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 7) + 1);
    for (std::size_t j = 0; j < 8; ++j) m(a, j) *= -scale;
    CHECK(rank(m) == r);
  }
}

TEST_CASE("rank_of_columns ignores column order") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_low_rank(rng, 5, 7);
    std::vector<RationalVector> cols;
    for (std::size_t i = 0; i < m.rows(); ++i) cols.emplace_back(m.row(i).begin(), m.row(i).end());
    const auto r = rank_of_columns(cols);
    std::shuffle(cols.begin(), cols.end(), rng);
    CHECK(rank_of_columns(cols) == r);
  }
}

TEST_CASE("SpanBasis tracks rank incrementally") {
  SpanBasis span(3);
  CHECK(span.insert(RationalVector{1, 2, 0}));
  CHECK_FALSE(span.insert(RationalVector{Rational(1, 2), 1, 0}));
  CHECK(span.insert(RationalVector{0, 0, 3}));
  CHECK(span.contains(RationalVector{2, 4, -1}));
  CHECK_FALSE(span.contains(RationalVector{0, 1, 0}));
  CHECK(span.rank() == 2);
}

TEST_CASE("primitive integer vector") {
  const auto v = primitive_integer_vector(RationalVector{Rational(1, 2), Rational(-3, 4), 0});
  CHECK(v == std::vector<mpz_class>{2, -3, 0});
}

TEST_CASE("matrix text formats") {
  RationalMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(1, 1) = -3;
  std::ostringstream dense, sparse;
  write_dense(dense, m);
  write_sparse(sparse, m);
  CHECK(dense.str() == "2 2\n1/2 0\n0 -3\n");
  CHECK(sparse.str() == "2 2 2\n1 1 1/2\n2 2 -3\n");
  std::istringstream a(dense.str()), b(sparse.str());
  CHECK(read_matrix(a) == m);
  CHECK(read_matrix(b) == m);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("4/-6"));
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(Rational(-5)) == "-5");
}

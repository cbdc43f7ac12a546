#include "tradekit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace tradekit {

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// target <- (p/g) * target - (a/g) * source on columns [from, end), then
// strip content. `a` is target[col] before the update.
void eliminate(IntRow& target, const IntRow& source, std::size_t col) {
  mpz_class p = source[col];
  mpz_class a = target[col];
  mpz_class g = gcd(p, a);
  p /= g;
  a /= g;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (j == col) {
      target[j] = 0;
      continue;
    }
    if (source[j] == 0) {
      if (target[j] != 0 && p != 1) target[j] *= p;
      continue;
    }
    target[j] *= p;
    mpz_submul(target[j].get_mpz_t(), a.get_mpz_t(), source[j].get_mpz_t());
  }
  make_primitive(target);
}

std::vector<IntRow> integer_rows(const RationalMatrix& m) {
  std::vector<IntRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = primitive_integer_vector(m.row(i));
  return rows;
}

struct Echelon {
  std::vector<IntRow> rows;          // first pivots.size() rows are the pivot rows
  std::vector<std::size_t> pivots;   // pivot column of each pivot row
};

// Fraction-free elimination with content removal. With `reduced`, entries
// above each pivot are cleared too (Gauss-Jordan form, pivots not normalized).
Echelon integer_echelon(const RationalMatrix& m, bool reduced) {
  Echelon e{integer_rows(m), {}};
  auto& rows = e.rows;
  const std::size_t nrows = rows.size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < nrows; ++col) {
    std::size_t piv = r;
    while (piv < nrows && rows[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[r], rows[piv]);
    const IntRow& source = rows[r];
    const auto begin = static_cast<std::ptrdiff_t>(reduced ? 0 : r + 1);
    const auto end = static_cast<std::ptrdiff_t>(nrows);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = begin; i < end; ++i) {
      if (static_cast<std::size_t>(i) == r || rows[i][col] == 0) continue;
      eliminate(rows[i], source, col);
    }
    e.pivots.push_back(col);
    ++r;
  }
  return e;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: vector length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns, std::size_t dim) {
  RationalMatrix m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != dim) throw std::invalid_argument("from_columns: vector length mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<mpz_class> primitive_integer_vector(std::span<const Rational> v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    out[i] = l / v[i].get_den() * v[i].get_num();
  }
  make_primitive(out);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side; rank is transpose invariant.
  if (m.rows() > m.cols()) return integer_echelon(m.transposed(), false).pivots.size();
  return integer_echelon(m, false).pivots.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const Echelon e = integer_echelon(m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const auto& row = e.rows[r];
      if (row[f] == 0) continue;
      v[e.pivots[r]] = Rational(-row[f], row[e.pivots[r]]);
      v[e.pivots[r]].canonicalize();
    }
    auto ints = primitive_integer_vector(v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ints[i];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of_columns(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw std::invalid_argument("rank_of_columns: dimension mismatch");
  return rank(RationalMatrix::from_rows(vectors, dim));
}

bool in_span(const RationalVector& v, std::span<const RationalVector> vectors) {
  SpanBasis basis(v.size());
  for (const auto& w : vectors) {
    if (w.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
    basis.insert(w);
  }
  return basis.contains(v);
}

RationalVector matvec(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0 && m(i, j) != 0) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<mpz_class> SpanBasis::reduce(std::vector<mpz_class> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v[pivots_[r]] != 0) eliminate(v, rows_[r], pivots_[r]);
  return v;
}

bool SpanBasis::insert(std::span<const Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  auto reduced = reduce(primitive_integer_vector(v));
  for (std::size_t j = 0; j < dim_; ++j) {
    if (reduced[j] != 0) {
      rows_.push_back(std::move(reduced));
      pivots_.push_back(j);
      return true;
    }
  }
  return false;
}

bool SpanBasis::contains(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  const auto reduced = reduce(primitive_integer_vector(v));
  for (const auto& x : reduced)
    if (x != 0) return false;
  return true;
}

}  // namespace tradekit

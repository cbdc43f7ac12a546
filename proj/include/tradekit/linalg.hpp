#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace tradekit {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);
  /// Matrix whose columns are the given vectors (all of length `dim`).
  static RationalMatrix from_columns(std::span<const RationalVector> columns, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<Rational> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

  RationalMatrix transposed() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank over Q. Fraction-free integer elimination; the row updates
/// below each pivot run in parallel.
std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space. Each vector is scaled to a primitive
/// integer vector.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Rank of the matrix whose columns are `vectors`. Throws on mismatched lengths.
std::size_t rank_of_columns(std::span<const RationalVector> vectors);

/// True iff v lies in the span of `vectors`.
bool in_span(const RationalVector& v, std::span<const RationalVector> vectors);

RationalVector matvec(const RationalMatrix& m, const RationalVector& v);

bool is_zero(const RationalVector& v);

/// Integer vector with the same direction as v and coprime entries.
/// The zero vector maps to itself.
std::vector<mpz_class> primitive_integer_vector(std::span<const Rational> v);

/// Incrementally grown subspace of Q^dim. Rows are stored as primitive
/// integer vectors in insertion-order echelon form: each row vanishes at the
/// pivots of all earlier rows.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v; returns true iff the rank grew.
  bool insert(std::span<const Rational> v);
  bool contains(std::span<const Rational> v) const;

 private:
  std::vector<mpz_class> reduce(std::vector<mpz_class> v) const;

  std::size_t dim_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::size_t> pivots_;
};

namespace reference {

/// Textbook serial Gaussian elimination in Q. Kept as an independent path
/// for testing and benchmarking the parallel kernels.
std::size_t rank(const RationalMatrix& m);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

}  // namespace reference

}  // namespace tradekit

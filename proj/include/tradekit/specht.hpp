#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tradekit/boolean_algebra.hpp"

namespace tradekit {

struct TwoRowShape {
  int lambda1 = 0;
  int lambda2 = 0;

  int n() const { return lambda1 + lambda2; }
  void validate() const;
  std::string to_string() const;
  auto operator<=>(const TwoRowShape&) const = default;
};

/// A filling of a two-row Young diagram with 1..n, each once. Column c
/// (1-based) is row1[c-1] on top of row2[c-1] when c <= lambda2.
struct Tableau {
  TwoRowShape shape;
  std::vector<int> row1;
  std::vector<int> row2;

  Tableau() = default;
  Tableau(std::vector<int> r1, std::vector<int> r2);

  int n() const { return shape.n(); }
  void validate() const;
  bool is_standard() const;
  /// `[a b c / d e]`
  std::string to_string() const;

  auto operator<=>(const Tableau& o) const { return std::tie(row1, row2) <=> std::tie(o.row1, o.row2); }
  bool operator==(const Tableau& o) const { return row1 == o.row1 && row2 == o.row2; }
};

/// Column tabloid: a tableau with every height-2 column increasing, plus the
/// sign picked up while sorting the columns.
struct Tabloid {
  Tableau tableau;
  int sign = 1;
};

/// Finite Q-combination of column tabloids, keyed by the column-canonical
/// tableau. Column positions are part of the identity.
class TabloidExpr {
 public:
  using Terms = std::map<Tableau, Rational>;

  TabloidExpr() = default;
  static TabloidExpr of(const Tabloid& q, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Tableau& canonical) const;

  /// Adds coeff * q (q's sign included).
  void add(const Tabloid& q, const Rational& coeff);
  /// Adds coeff * [tableau]; the tableau must already be column canonical.
  void add_canonical(const Tableau& canonical, const Rational& coeff);
  TabloidExpr& operator+=(const TabloidExpr& other);
  TabloidExpr& operator-=(const TabloidExpr& other);
  friend TabloidExpr operator-(TabloidExpr a, const TabloidExpr& b) { return a -= b; }
  bool operator==(const TabloidExpr&) const = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

Tabloid canonicalize(const Tableau& t);

/// g_{U,c} for 1 <= c <= lambda1 - 1. For c <= lambda2 this is q - q1 - q2,
/// where q_i exchanges the top of column c+1 with the i-th entry of column c;
/// otherwise q - q3 with the two single entries of columns c, c+1 exchanged.
TabloidExpr garnir(const Tableau& u, int c);

/// All standard tableaux of the shape, ordered lexicographically by
/// (row1, row2).
std::vector<Tableau> standard_tableaux(const TwoRowShape& shape);

/// Rewrites an expression modulo the Garnir relations into a combination of
/// standard tabloids.
///
/// The leftmost column pair (c, c+1) that breaks standardness decides the
/// move. A first-row descent uses g_{U,c} read as q = q1 + q2 (or q = q3 in
/// the one-row tail). A descent in the second row alone uses the exchange of
/// the two full columns, the two-element Garnir relation, which lies in the
/// span of the g_{U,c} over Q. Every move sends the largest displaced entry
/// to the right, so the vector (column of n, column of n-1, ..., column of 1)
/// strictly increases and rewriting terminates. All moves have coefficients
/// +-1, so integral input stays integral.
class Straightener {
 public:
  explicit Straightener(std::size_t fuel = 1'000'000) : fuel_(fuel) {}

  TabloidExpr straighten(const TabloidExpr& e);
  std::size_t rewrites() const { return rewrites_; }

 private:
  const TabloidExpr& straighten_canonical(const Tableau& q);

  std::size_t fuel_;
  std::size_t rewrites_ = 0;
  std::map<Tableau, TabloidExpr> memo_;
};

/// Convenience wrapper with a fresh memo table. Throws std::runtime_error if
/// the fuel runs out.
TabloidExpr straighten(const TabloidExpr& e, std::size_t fuel = 1'000'000);

/// Position key used to order tabloids during straightening: entry v maps to
/// its column index, listed for v = n, n-1, ..., 1.
std::vector<int> straightening_key(const Tableau& canonical);

/// Sends the column tabloid of shape (n-t-1, t+1) with columns (x_i, y_i) to
/// sign * (x_1-y_1)...(x_{t+1}-y_{t+1}) Sigma_{k-t-1}(rest). Needs t < k and
/// t + k <= n.
BooleanElement h_map(const Tabloid& q, int k);
BooleanElement h_map(const TabloidExpr& e, int n, int k);

mpz_class specht_dim(const TwoRowShape& shape);

/// Shapes (n-j, j) for j = 0..min(k, n-k).
std::vector<TwoRowShape> young_rule(int k, int n);

}  // namespace tradekit

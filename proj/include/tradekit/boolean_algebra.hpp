#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tradekit/combinatorics.hpp"
#include "tradekit/linalg.hpp"

namespace tradekit {

/// Element of the Boolean algebra 2^[X]: a finite formal Q-combination of
/// subsets of X = {1..n}. Zero coefficients are never stored. Grades may be
/// mixed; M_k is the grade-k part.
class BooleanElement {
 public:
  using Terms = std::map<Subset, Rational>;

  explicit BooleanElement(int n) : n_(n) {}
  /// The identity: the empty set with coefficient 1.
  static BooleanElement one(int n);
  static BooleanElement basis(const Subset& s, const Rational& coeff = 1);
  /// Grade-k element with the given colex coordinates.
  static BooleanElement from_coordinates(int n, int k, const RationalVector& coords);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Subset& s) const;

  /// Adds coeff * s, merging with an existing term.
  void add_term(const Subset& s, const Rational& coeff);

  /// The common grade when nonzero and homogeneous.
  std::optional<int> homogeneous_grade() const;

  /// Coordinates in M_k, indexed by colex rank. Throws if any term has a
  /// different grade.
  RationalVector coordinates(int k) const;

  BooleanElement& operator+=(const BooleanElement& other);
  BooleanElement& operator-=(const BooleanElement& other);
  BooleanElement& operator*=(const Rational& scalar);
  BooleanElement operator-() const;
  friend BooleanElement operator+(BooleanElement a, const BooleanElement& b) { return a += b; }
  friend BooleanElement operator-(BooleanElement a, const BooleanElement& b) { return a -= b; }
  friend BooleanElement operator*(BooleanElement a, const Rational& s) { return a *= s; }
  friend BooleanElement operator*(const Rational& s, BooleanElement a) { return a *= s; }
  bool operator==(const BooleanElement& other) const = default;

  /// Terms in (grade, colex) order as `coeff*{a,b}` joined by ` + ` / ` - `.
  std::string to_string() const;

 private:
  void require_same_n(const BooleanElement& other) const;

  int n_;
  Terms terms_;
};

/// Union product: (sum a_Y Y)(sum b_Z Z) = sum a_Y b_Z (Y u Z).
BooleanElement product(const BooleanElement& a, const BooleanElement& b);
inline BooleanElement operator*(const BooleanElement& a, const BooleanElement& b) { return product(a, b); }

BooleanElement grade(const BooleanElement& e, int m);

/// Sum of all m-subsets of A. Sigma_0(A) = 1 and Sigma_m(A) = 0 for m > |A|.
BooleanElement sigma(const Subset& a, int m);

/// x_1...x_k -> sum of its (k - steps)-subsets, extended linearly.
/// Throws on inputs with mixed grades or grade < steps.
BooleanElement psi(const BooleanElement& e, int steps);

BooleanElement permute_element(const Permutation& sigma, const BooleanElement& e);

struct MatrixSpec {
  enum class Kind { inclusion, intersection, combination };

  Kind kind = Kind::inclusion;
  int n = 0;
  int t = 0;
  int k = 0;
  int l = 0;                      // intersection only
  std::vector<Rational> coeffs;   // combination only: c_0..c_t

  static MatrixSpec inclusion(int n, int t, int k) { return {Kind::inclusion, n, t, k, 0, {}}; }
  static MatrixSpec intersection(int n, int t, int k, int l) { return {Kind::intersection, n, t, k, l, {}}; }
  static MatrixSpec combination(int n, int t, int k, std::vector<Rational> c) {
    return {Kind::combination, n, t, k, 0, std::move(c)};
  }

  /// Throws std::invalid_argument when the invariants fail.
  void validate() const;
};

/// C(n,t) x C(n,k) matrix, rows and columns in colex order.
RationalMatrix build_matrix(const MatrixSpec& spec);

/// lambda_j(t,k,n;l) = sum_s (-1)^(j-s) C(j,s) C(k-s,l-s) C(n-k-j+s,t-l-j+s).
mpz_class lambda_coeff(int t, int k, int n, int l, int j);

/// { j in [0,t] : some l has c_l != 0 and lambda_j(t,k,n;l) != 0 }.
/// Requires t <= k <= n/2.
std::vector<int> j_set(int t, int k, int n, const std::vector<Rational>& coeffs);

/// sum over j_set of C(n,j) - C(n,j-1).
mpz_class predicted_rank(int t, int k, int n, const std::vector<Rational>& coeffs);

/// { j in [0,t] : sum_l c_l lambda_j(t,k,n;l) != 0 }: the summands whose
/// total weight survives. Agrees with j_set whenever at most one c_l is
/// nonzero, but can be strictly smaller when contributions cancel.
std::vector<int> effective_j_set(int t, int k, int n, const std::vector<Rational>& coeffs);
mpz_class effective_predicted_rank(int t, int k, int n, const std::vector<Rational>& coeffs);

/// Sum over the given j of C(n,j) - C(n,j-1).
mpz_class rank_from_j_set(int n, const std::vector<int>& js);

}  // namespace tradekit

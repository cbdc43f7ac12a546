#include "tradekit/boolean_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "tradekit/matrix_io.hpp"

namespace tradekit {

namespace {

// Calls f(sub) for every submask of `mask` with popcount m.
template <typename F>
void for_each_submask_of_size(std::uint64_t mask, int m, F&& f) {
  const int size = __builtin_popcountll(mask);
  if (m < 0 || m > size) return;
  if (m == 0 || m == size) {
    f(m == 0 ? std::uint64_t{0} : mask);
    return;
  }
  // Enumerate m-combinations of the set bit positions via Gosper's hack on
  // a compressed index space, then scatter back.
  int positions[64];
  int count = 0;
  for (std::uint64_t x = mask; x != 0; x &= x - 1) positions[count++] = __builtin_ctzll(x);
  const std::uint64_t last = ((std::uint64_t{1} << m) - 1) << (size - m);
  for (std::uint64_t c = (std::uint64_t{1} << m) - 1;; c = next_same_popcount(c)) {
    std::uint64_t sub = 0;
    for (std::uint64_t y = c; y != 0; y &= y - 1) sub |= std::uint64_t{1} << positions[__builtin_ctzll(y)];
    f(sub);
    if (c == last) break;
  }
}

void check_rank_range(int t, int k, int n) {
  if (t < 0 || t > k || 2 * k > n)
    throw std::invalid_argument("rank prediction requires 0 <= t <= k <= n/2");
}

void check_coeffs(int t, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(t + 1))
    throw std::invalid_argument("expected t+1 = " + std::to_string(t + 1) + " coefficients");
}

}  // namespace

BooleanElement BooleanElement::one(int n) { return basis(Subset::empty(n)); }

BooleanElement BooleanElement::basis(const Subset& s, const Rational& coeff) {
  BooleanElement e(s.n());
  e.add_term(s, coeff);
  return e;
}

BooleanElement BooleanElement::from_coordinates(int n, int k, const RationalVector& coords) {
  if (coords.size() != binomial_u64(n, k)) throw std::invalid_argument("coordinate vector has wrong length");
  BooleanElement e(n);
  for (std::size_t r = 0; r < coords.size(); ++r)
    if (coords[r] != 0) e.terms_.emplace(colex_unrank(r, k, n), coords[r]);
  return e;
}

Rational BooleanElement::coefficient(const Subset& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BooleanElement::add_term(const Subset& s, const Rational& coeff) {
  if (s.n() != n_) throw std::invalid_argument("term over a different ground set");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> BooleanElement::homogeneous_grade() const {
  if (terms_.empty()) return std::nullopt;
  const int g = terms_.begin()->first.size();
  if (terms_.rbegin()->first.size() != g) return std::nullopt;  // map is grade-ordered
  return g;
}

RationalVector BooleanElement::coordinates(int k) const {
  RationalVector v(binomial_u64(n_, k));
  for (const auto& [s, c] : terms_) {
    if (s.size() != k) throw std::invalid_argument("element has a term outside grade " + std::to_string(k));
    v[colex_rank(s)] = c;
  }
  return v;
}

void BooleanElement::require_same_n(const BooleanElement& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Boolean elements over different ground sets");
}

BooleanElement& BooleanElement::operator+=(const BooleanElement& other) {
  require_same_n(other);
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

BooleanElement& BooleanElement::operator-=(const BooleanElement& other) {
  require_same_n(other);
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

BooleanElement& BooleanElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scalar;
  return *this;
}

BooleanElement BooleanElement::operator-() const {
  BooleanElement e = *this;
  for (auto& [s, c] : e.terms_) c = -c;
  return e;
}

std::string BooleanElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    const bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    os << format_rational(abs(c)) << '*' << s.to_string();
    first = false;
  }
  return os.str();
}

BooleanElement product(const BooleanElement& a, const BooleanElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("product: mismatched n");
  BooleanElement out(a.n());
  for (const auto& [y, ay] : a.terms())
    for (const auto& [z, bz] : b.terms()) out.add_term(y.united(z), ay * bz);
  return out;
}

BooleanElement grade(const BooleanElement& e, int m) {
  BooleanElement out(e.n());
  for (const auto& [s, c] : e.terms())
    if (s.size() == m) out.add_term(s, c);
  return out;
}

BooleanElement sigma(const Subset& a, int m) {
  BooleanElement out(a.n());
  for_each_submask_of_size(a.mask(), m, [&](std::uint64_t sub) { out.add_term(Subset::from_mask(a.n(), sub), 1); });
  return out;
}

BooleanElement psi(const BooleanElement& e, int steps) {
  if (e.is_zero()) return e;
  const auto k = e.homogeneous_grade();
  if (!k) throw std::invalid_argument("psi: input is not homogeneous");
  if (steps < 0 || steps > *k) throw std::invalid_argument("psi: steps outside [0, grade]");
  BooleanElement out(e.n());
  for (const auto& [s, c] : e.terms())
    for_each_submask_of_size(s.mask(), *k - steps,
                             [&](std::uint64_t sub) { out.add_term(Subset::from_mask(e.n(), sub), c); });
  return out;
}

BooleanElement permute_element(const Permutation& sigma, const BooleanElement& e) {
  if (sigma.n() != e.n()) throw std::invalid_argument("permute_element: mismatched n");
  BooleanElement out(e.n());
  for (const auto& [s, c] : e.terms()) out.add_term(apply_permutation(sigma, s), c);
  return out;
}

void MatrixSpec::validate() const {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("n must lie in [1, 64]");
  if (t < 0 || t > k || k > n) throw std::invalid_argument("matrix spec requires 0 <= t <= k <= n");
  switch (kind) {
    case Kind::inclusion:
      break;
    case Kind::intersection:
      if (l < 0 || l > t) throw std::invalid_argument("intersection size l must satisfy 0 <= l <= t");
      break;
    case Kind::combination:
      check_coeffs(t, coeffs);
      break;
  }
}

RationalMatrix build_matrix(const MatrixSpec& spec) {
  spec.validate();
  const auto rows = subsets_iter(spec.t, spec.n);
  const auto cols = subsets_iter(spec.k, spec.n);
  RationalMatrix m(rows.size(), cols.size());
  const auto nrows = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const int meet = intersection_size(rows[i], cols[j]);
      switch (spec.kind) {
        case MatrixSpec::Kind::inclusion:
          if (rows[i].is_subset_of(cols[j])) m(i, j) = 1;
          break;
        case MatrixSpec::Kind::intersection:
          if (meet == spec.l) m(i, j) = 1;
          break;
        case MatrixSpec::Kind::combination:
          m(i, j) = spec.coeffs[meet];
          break;
      }
    }
  }
  return m;
}

mpz_class lambda_coeff(int t, int k, int n, int l, int j) {
  if (l < 0 || l > t || j < 0 || j > t) throw std::invalid_argument("lambda_coeff requires 0 <= l, j <= t");
  mpz_class total = 0;
  for (int s = 0; s <= j; ++s) {
    mpz_class term = binomial(j, s) * binomial(k - s, l - s) * binomial(n - k - j + s, t - l - j + s);
    if ((j - s) % 2) total -= term;
    else total += term;
  }
  return total;
}

std::vector<int> j_set(int t, int k, int n, const std::vector<Rational>& coeffs) {
  check_rank_range(t, k, n);
  check_coeffs(t, coeffs);
  std::vector<int> js;
  for (int j = 0; j <= t; ++j)
    for (int l = 0; l <= t; ++l)
      if (coeffs[l] != 0 && lambda_coeff(t, k, n, l, j) != 0) {
        js.push_back(j);
        break;
      }
  return js;
}

std::vector<int> effective_j_set(int t, int k, int n, const std::vector<Rational>& coeffs) {
  check_rank_range(t, k, n);
  check_coeffs(t, coeffs);
  std::vector<int> js;
  for (int j = 0; j <= t; ++j) {
    Rational weight = 0;
    for (int l = 0; l <= t; ++l)
      if (coeffs[l] != 0) weight += coeffs[l] * Rational(lambda_coeff(t, k, n, l, j));
    if (weight != 0) js.push_back(j);
  }
  return js;
}

mpz_class rank_from_j_set(int n, const std::vector<int>& js) {
  mpz_class total = 0;
  for (int j : js) total += binomial(n, j) - binomial(n, j - 1);
  return total;
}

mpz_class predicted_rank(int t, int k, int n, const std::vector<Rational>& coeffs) {
  return rank_from_j_set(n, j_set(t, k, n, coeffs));
}

mpz_class effective_predicted_rank(int t, int k, int n, const std::vector<Rational>& coeffs) {
  return rank_from_j_set(n, effective_j_set(t, k, n, coeffs));
}

}  // namespace tradekit

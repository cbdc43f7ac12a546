#include "tradekit/specht.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "tradekit/matrix_io.hpp"
#include "tradekit/trades.hpp"

namespace tradekit {

namespace {

// Exchanges two cells; (row, col) are 0-based.
void exchange(Tableau& t, int r1, int c1, int r2, int c2) {
  auto& a = r1 == 0 ? t.row1[c1] : t.row2[c1];
  auto& b = r2 == 0 ? t.row1[c2] : t.row2[c2];
  std::swap(a, b);
}

}  // namespace

void TwoRowShape::validate() const {
  if (lambda2 < 0 || lambda1 < lambda2) throw std::invalid_argument("shape needs lambda1 >= lambda2 >= 0");
  if (n() > kMaxGroundSet) throw std::invalid_argument("shape too large");
}

std::string TwoRowShape::to_string() const {
  return "(" + std::to_string(lambda1) + "," + std::to_string(lambda2) + ")";
}

Tableau::Tableau(std::vector<int> r1, std::vector<int> r2)
    : shape{static_cast<int>(r1.size()), static_cast<int>(r2.size())}, row1(std::move(r1)), row2(std::move(r2)) {}

void Tableau::validate() const {
  shape.validate();
  if (row1.size() != static_cast<std::size_t>(shape.lambda1) || row2.size() != static_cast<std::size_t>(shape.lambda2))
    throw std::invalid_argument("tableau rows do not match the shape");
  std::vector<bool> seen(n() + 1, false);
  for (const auto* row : {&row1, &row2})
    for (int v : *row) {
      if (v < 1 || v > n() || seen[v]) throw std::invalid_argument("tableau entries must be 1..n, each once");
      seen[v] = true;
    }
}

bool Tableau::is_standard() const {
  for (std::size_t c = 0; c + 1 < row1.size(); ++c)
    if (row1[c] > row1[c + 1]) return false;
  for (std::size_t c = 0; c + 1 < row2.size(); ++c)
    if (row2[c] > row2[c + 1]) return false;
  for (std::size_t c = 0; c < row2.size(); ++c)
    if (row1[c] > row2[c]) return false;
  return true;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < row1.size(); ++i) os << (i ? " " : "") << row1[i];
  os << " /";
  for (int v : row2) os << ' ' << v;
  os << ']';
  return os.str();
}

TabloidExpr TabloidExpr::of(const Tabloid& q, const Rational& coeff) {
  TabloidExpr e;
  e.add(q, coeff);
  return e;
}

Rational TabloidExpr::coefficient(const Tableau& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TabloidExpr::add_canonical(const Tableau& canonical, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(canonical, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void TabloidExpr::add(const Tabloid& q, const Rational& coeff) {
  add_canonical(q.tableau, q.sign < 0 ? Rational(-coeff) : coeff);
}

TabloidExpr& TabloidExpr::operator+=(const TabloidExpr& other) {
  for (const auto& [t, c] : other.terms_) add_canonical(t, c);
  return *this;
}

TabloidExpr& TabloidExpr::operator-=(const TabloidExpr& other) {
  for (const auto& [t, c] : other.terms_) add_canonical(t, -c);
  return *this;
}

std::string TabloidExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    os << format_rational(abs(c)) << '*' << t.to_string();
    first = false;
  }
  return os.str();
}

Tabloid canonicalize(const Tableau& t) {
  t.validate();
  Tabloid q{t, 1};
  for (std::size_t c = 0; c < q.tableau.row2.size(); ++c)
    if (q.tableau.row1[c] > q.tableau.row2[c]) {
      std::swap(q.tableau.row1[c], q.tableau.row2[c]);
      q.sign = -q.sign;
    }
  return q;
}

TabloidExpr garnir(const Tableau& u, int c) {
  u.validate();
  if (c < 1 || c > u.shape.lambda1 - 1) throw std::out_of_range("garnir: column outside [1, lambda1-1]");
  TabloidExpr g = TabloidExpr::of(canonicalize(u));
  if (c <= u.shape.lambda2) {
    for (int i = 0; i < 2; ++i) {
      Tableau ui = u;
      exchange(ui, 0, c, i, c - 1);
      g.add(canonicalize(ui), -1);
    }
  } else {
    Tableau u3 = u;
    exchange(u3, 0, c - 1, 0, c);
    g.add(canonicalize(u3), -1);
  }
  return g;
}

std::vector<Tableau> standard_tableaux(const TwoRowShape& shape) {
  shape.validate();
  const int n = shape.n();
  std::vector<Tableau> out;
  for (const auto& second : subsets_iter(shape.lambda2, n)) {
    auto row2 = second.elements();
    auto row1 = Subset::full(n).without(second).elements();
    Tableau t(std::move(row1), std::move(row2));
    if (t.is_standard()) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> straightening_key(const Tableau& canonical) {
  const int n = canonical.n();
  std::vector<int> column(n + 1, 0);
  for (std::size_t c = 0; c < canonical.row1.size(); ++c) column[canonical.row1[c]] = static_cast<int>(c);
  for (std::size_t c = 0; c < canonical.row2.size(); ++c) column[canonical.row2[c]] = static_cast<int>(c);
  std::vector<int> key;
  key.reserve(n);
  for (int v = n; v >= 1; --v) key.push_back(column[v]);
  return key;
}

const TabloidExpr& Straightener::straighten_canonical(const Tableau& q) {
  if (auto it = memo_.find(q); it != memo_.end()) return it->second;

  TabloidExpr result;
  if (q.is_standard()) {
    result.add_canonical(q, 1);
    return memo_.emplace(q, std::move(result)).first->second;
  }
  if (fuel_ == 0) throw std::runtime_error("straightening fuel exhausted");
  --fuel_;
  ++rewrites_;

  const int l1 = q.shape.lambda1;
  const int l2 = q.shape.lambda2;
  std::vector<std::pair<Tableau, Rational>> rewritten;
  for (int c = 1; c <= l1 - 1; ++c) {
    const bool top_descent = q.row1[c] < q.row1[c - 1];
    const bool bottom_descent = c + 1 <= l2 && q.row2[c] < q.row2[c - 1];
    if (!top_descent && !bottom_descent) continue;
    if (top_descent) {
      // g_{q,c} = 0 read as q = q1 + q2, or q = q3 past the second row.
      const TabloidExpr g = garnir(q, c);
      for (const auto& [t, coeff] : g.terms())
        if (t != q) rewritten.emplace_back(t, -coeff);
    } else {
      Tableau swapped = q;
      std::swap(swapped.row1[c - 1], swapped.row1[c]);
      std::swap(swapped.row2[c - 1], swapped.row2[c]);
      rewritten.emplace_back(swapped, 1);
    }
    break;
  }
  // Columns are canonical and no adjacent descent remains, so a nonstandard
  // tabloid always has a move.
  assert(!rewritten.empty());

  for (const auto& [next, weight] : rewritten) {
    assert(straightening_key(next) > straightening_key(q));
    const TabloidExpr& part = straighten_canonical(next);
    for (const auto& [t, coeff] : part.terms()) result.add_canonical(t, weight * coeff);
  }
  return memo_.emplace(q, std::move(result)).first->second;
}

TabloidExpr Straightener::straighten(const TabloidExpr& e) {
  TabloidExpr out;
  for (const auto& [t, coeff] : e.terms()) {
    const TabloidExpr& part = straighten_canonical(t);
    for (const auto& [s, c] : part.terms()) out.add_canonical(s, coeff * c);
  }
  return out;
}

TabloidExpr straighten(const TabloidExpr& e, std::size_t fuel) {
  Straightener s(fuel);
  return s.straighten(e);
}

BooleanElement h_map(const Tabloid& q, int k) {
  const auto& tab = q.tableau;
  const int t = tab.shape.lambda2 - 1;
  if (t < 0) throw std::invalid_argument("h_map needs a second row");
  if (t >= k || t + k > tab.n()) throw std::invalid_argument("h_map needs t < k and t + k <= n");
  TradeSpec spec{tab.n(), t, k, std::vector<int>(tab.row1.begin(), tab.row1.begin() + t + 1), tab.row2, std::nullopt};
  BooleanElement trade = total_trade(spec);
  if (q.sign < 0) trade = -trade;
  return trade;
}

BooleanElement h_map(const TabloidExpr& e, int n, int k) {
  BooleanElement out(n);
  for (const auto& [t, c] : e.terms()) out += h_map(Tabloid{t, 1}, k) * c;
  return out;
}

mpz_class specht_dim(const TwoRowShape& shape) {
  shape.validate();
  return binomial(shape.n(), shape.lambda2) - binomial(shape.n(), shape.lambda2 - 1);
}

std::vector<TwoRowShape> young_rule(int k, int n) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("young_rule requires 0 <= k <= n");
  std::vector<TwoRowShape> out;
  for (int j = 0; j <= std::min(k, n - k); ++j) out.push_back({n - j, j});
  return out;
}

}  // namespace tradekit

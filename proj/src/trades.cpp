#include "tradekit/trades.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tradekit/specht.hpp"

namespace tradekit {

namespace {

void check_trade_range(int t, int k, int n) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("n must lie in [1, 64]");
  if (t < 0 || t >= k) throw std::invalid_argument("trades require 0 <= t < k");
  if (t + k > n) throw std::invalid_argument("trades require t + k <= n");
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

BooleanElement pair_product(const TradeSpec& spec) {
  BooleanElement acc = BooleanElement::one(spec.n);
  for (std::size_t i = 0; i < spec.xs.size(); ++i) {
    BooleanElement diff = BooleanElement::basis(Subset(spec.n, {spec.xs[i]}));
    diff.add_term(Subset(spec.n, {spec.ys[i]}), -1);
    acc = acc * diff;
  }
  return acc;
}

SpecifiedTrade make_total(int n, int t, int k, std::vector<int> xs, std::vector<int> ys) {
  TradeSpec spec{n, t, k, std::move(xs), std::move(ys), std::nullopt};
  BooleanElement trade = total_trade(spec);
  return {std::move(spec), std::move(trade)};
}

}  // namespace

void TradeSpec::validate() const {
  check_trade_range(t, k, n);
  if (xs.size() != static_cast<std::size_t>(t + 1) || ys.size() != xs.size())
    throw std::invalid_argument("xs and ys must each have t+1 entries");
  if (tail && tail->size() != static_cast<std::size_t>(k - t - 1))
    throw std::invalid_argument("tail must have k-t-1 entries");
  std::vector<bool> used(n + 1, false);
  const auto mark = [&](const std::vector<int>& v) {
    for (int e : v) {
      if (e < 1 || e > n) throw std::invalid_argument("trade point " + std::to_string(e) + " outside [1..n]");
      if (used[e]) throw std::invalid_argument("trade points must be pairwise distinct");
      used[e] = true;
    }
  };
  mark(xs);
  mark(ys);
  if (tail) mark(*tail);
}

std::pair<TradeSpec, int> TradeSpec::normalized() const {
  int sign = 1;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] > ys[i]) {
      pairs.emplace_back(ys[i], xs[i]);
      sign = -sign;
    } else {
      pairs.emplace_back(xs[i], ys[i]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  TradeSpec out = *this;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.xs[i] = pairs[i].first;
    out.ys[i] = pairs[i].second;
  }
  if (out.tail) std::sort(out.tail->begin(), out.tail->end());
  return {out, sign};
}

TradeSpec TradeSpec::permuted(const Permutation& sigma) const {
  if (sigma.n() != n) throw std::invalid_argument("permuted: mismatched n");
  TradeSpec out = *this;
  for (auto& x : out.xs) x = sigma(x);
  for (auto& y : out.ys) y = sigma(y);
  if (out.tail)
    for (auto& z : *out.tail) z = sigma(z);
  return out;
}

std::string TradeSpec::to_string() const {
  std::string s = "xs=" + join(xs) + " ys=" + join(ys);
  if (tail) s += " tail=" + join(*tail);
  return s;
}

BooleanElement minimal_trade(const TradeSpec& spec) {
  spec.validate();
  if (!spec.tail) throw std::invalid_argument("minimal_trade needs a tail");
  std::vector<int> tail = *spec.tail;
  std::sort(tail.begin(), tail.end());
  return pair_product(spec) * BooleanElement::basis(Subset(spec.n, tail));
}

BooleanElement total_trade(const TradeSpec& spec) {
  spec.validate();
  if (spec.tail) throw std::invalid_argument("total_trade takes no tail");
  std::vector<int> used = spec.xs;
  used.insert(used.end(), spec.ys.begin(), spec.ys.end());
  std::sort(used.begin(), used.end());
  const Subset rest = Subset::full(spec.n).without(Subset(spec.n, used));
  return pair_product(spec) * sigma(rest, spec.k - spec.t - 1);
}

bool is_t_trade(const BooleanElement& e, int t) {
  if (e.is_zero()) return true;
  const auto k = e.homogeneous_grade();
  if (!k) throw std::invalid_argument("is_t_trade: input is not homogeneous");
  if (t < 0 || t > *k) throw std::invalid_argument("is_t_trade: t outside [0, grade]");
  return psi(e, *k - t).is_zero();
}

std::optional<int> trade_strength(const BooleanElement& e) {
  if (e.is_zero()) throw std::invalid_argument("trade_strength: zero element");
  const auto k = e.homogeneous_grade();
  if (!k) throw std::invalid_argument("trade_strength: input is not homogeneous");
  for (int t = *k - 1; t >= 0; --t)
    if (is_t_trade(e, t)) return t;
  return std::nullopt;
}

std::vector<SpecifiedTrade> total_trade_basis(int t, int k, int n) {
  check_trade_range(t, k, n);
  if (n - t - 1 < t + 1) throw std::invalid_argument("shape (n-t-1, t+1) is not a partition");
  std::vector<SpecifiedTrade> out;
  for (const auto& tab : standard_tableaux(TwoRowShape{n - t - 1, t + 1})) {
    std::vector<int> xs(tab.row1.begin(), tab.row1.begin() + t + 1);
    out.push_back(make_total(n, t, k, std::move(xs), tab.row2));
  }
  return out;
}

std::vector<SpecifiedTrade> all_total_trades(int t, int k, int n) {
  check_trade_range(t, k, n);
  std::vector<SpecifiedTrade> out;
  std::vector<int> xs, ys;
  std::vector<bool> used(n + 1, false);
  // Pairs are listed by increasing smaller element, so each set of pairs
  // appears exactly once.
  auto extend = [&](auto&& self, int min_x) -> void {
    if (static_cast<int>(xs.size()) == t + 1) {
      out.push_back(make_total(n, t, k, xs, ys));
      return;
    }
    for (int x = min_x; x <= n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      for (int y = x + 1; y <= n; ++y) {
        if (used[y]) continue;
        used[y] = true;
        xs.push_back(x);
        ys.push_back(y);
        self(self, x + 1);
        xs.pop_back();
        ys.pop_back();
        used[y] = false;
      }
      used[x] = false;
    }
  };
  extend(extend, 1);
  return out;
}

std::vector<SpecifiedTrade> increasing_pair_trades(int t, int k, int n) {
  check_trade_range(t, k, n);
  std::vector<SpecifiedTrade> out;
  if (2 * (t + 1) > n) return out;
  for (const auto& xset : subsets_iter(t + 1, n)) {
    const auto xs = xset.elements();
    const Subset rest = Subset::full(n).without(xset);
    for (const auto& yset : subsets_iter(t + 1, n)) {
      if (!yset.is_subset_of(rest)) continue;
      const auto ys = yset.elements();
      bool ok = true;
      for (int i = 0; i <= t && ok; ++i) ok = xs[i] < ys[i];
      if (ok) out.push_back(make_total(n, t, k, xs, ys));
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecifiedTrade& a, const SpecifiedTrade& b) {
    return std::tie(a.spec.xs, a.spec.ys) < std::tie(b.spec.xs, b.spec.ys);
  });
  return out;
}

std::vector<RationalVector> trade_coordinates(const std::vector<SpecifiedTrade>& trades, int k) {
  std::vector<RationalVector> out;
  out.reserve(trades.size());
  for (const auto& tr : trades) out.push_back(tr.trade.coordinates(k));
  return out;
}

}  // namespace tradekit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tradekit/boolean_algebra.hpp"

namespace tradekit {

/// Parameters of a minimal trade (x_1-y_1)...(x_{t+1}-y_{t+1}) x_{t+2}...x_k
/// (tail present) or of a total trade, where the tail is replaced by the sum
/// of all (k-t-1)-subsets of the unused points (tail absent).
struct TradeSpec {
  int n = 0;
  int t = 0;
  int k = 0;
  std::vector<int> xs;
  std::vector<int> ys;
  std::optional<std::vector<int>> tail;

  /// Throws std::invalid_argument when the invariants fail.
  void validate() const;

  /// Canonical representative: x_i < y_i and x_1 < x_2 < ...
  /// Returns the sign relating the trades: trade(*this) = sign * trade(result).
  std::pair<TradeSpec, int> normalized() const;
  TradeSpec permuted(const Permutation& sigma) const;

  /// `xs=[1,3] ys=[2,4] tail=[5]`; tail omitted for total-trade specs.
  std::string to_string() const;

  bool operator==(const TradeSpec&) const = default;
};

struct SpecifiedTrade {
  TradeSpec spec;
  BooleanElement trade;
};

BooleanElement minimal_trade(const TradeSpec& spec);
BooleanElement total_trade(const TradeSpec& spec);

/// psi(e, k - t) == 0. The zero element is a trade of every strength.
bool is_t_trade(const BooleanElement& e, int t);

/// Largest t <= k-1 such that e is a t-trade; nullopt when e is not even a
/// 0-trade. Throws on zero or inhomogeneous input.
std::optional<int> trade_strength(const BooleanElement& e);

/// Total trades read off the standard tableaux of shape (n-t-1, t+1): first
/// row supplies x_1..x_{t+1}, second row y_1..y_{t+1}.
std::vector<SpecifiedTrade> total_trade_basis(int t, int k, int n);

/// One total trade per set of t+1 disjoint pairs {x_i, y_i}, normalized.
std::vector<SpecifiedTrade> all_total_trades(int t, int k, int n);

/// Every total trade satisfying only x_1<...<x_{t+1}, y_1<...<y_{t+1} and
/// x_i < y_i. Used to audit that candidate set against the Specht dimension.
std::vector<SpecifiedTrade> increasing_pair_trades(int t, int k, int n);

/// Grade-k coordinate vectors of the given trades.
std::vector<RationalVector> trade_coordinates(const std::vector<SpecifiedTrade>& trades, int k);

}  // namespace tradekit

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tradekit/boolean_algebra.hpp"
#include "tradekit/specht.hpp"

namespace tradekit {

/// A predicted quantity next to an independently computed one. `computed`
/// always comes from exact row reduction or direct evaluation, never from
/// the formula under test.
struct RankReport {
  std::string id;
  std::string params;
  mpz_class predicted;
  mpz_class computed;
  bool pass = false;
  /// Audits are reported but never fail a run.
  bool asserted = true;
  std::chrono::milliseconds elapsed{0};

  /// `CHECK <id> params=<...> predicted=<int> computed=<int> pass=<bool> ms=<int>`.
  /// Without `timing` the ms field is 0 so output is reproducible.
  std::string record(bool timing) const;
};

struct SummandCheck {
  TwoRowShape shape;
  mpz_class predicted;
  mpz_class computed;
};

struct DecompositionReport {
  std::string id;
  std::string params;
  std::vector<SummandCheck> summands;
  std::vector<std::pair<std::string, bool>> containments;
  mpz_class predicted_total;
  mpz_class computed_total;
  bool pass = false;
  std::chrono::milliseconds elapsed{0};

  RankReport summary() const;
};

RankReport check_inclusion_rank(int t, int k, int n);
RankReport check_total_trade_dim(int t, int k, int n);
DecompositionReport check_kernel_decomposition(int t, int k, int n);
RankReport check_intersection_rank(int t, int k, int n, int l);

/// `random_count` seeded random rational vectors followed by the full grid
/// {-2,-1,1,2}^(t+1).
std::vector<std::vector<Rational>> combination_coefficients(int t, std::uint64_t seed, int random_count);

/// Two reports per coefficient vector: `combination-rank` tests the index
/// set as literally stated (some l with c_l != 0 and lambda_j != 0);
/// `combination-rank-weighted` tests sum_l c_l lambda_j != 0.
std::vector<RankReport> check_combination_rank(int t, int k, int n,
                                               const std::vector<std::vector<Rational>>& coeff_vectors);

struct BasisAudit {
  DecompositionReport standard;
  /// Not asserted: predicted is the Specht dimension, computed the size of
  /// the increasing-pair candidate set; its rank is recorded separately.
  RankReport increasing_pairs;
  std::size_t increasing_pairs_size = 0;
  std::size_t increasing_pairs_rank = 0;
};
BasisAudit check_basis_corollary(int t, int k, int n);

RankReport check_graver_jurkat(int t, int k, int n, std::uint64_t seed);

struct OrbitDecomposition {
  std::vector<int> strata;      // the i with every total i-trade in the span
  std::size_t span_dim = 0;
  mpz_class strata_dim;         // sum over strata of C(n,i+1) - C(n,i)
};

/// Spans the S_n-orbit of e by closing under adjacent transpositions.
/// Throws if e is not a t-trade or t < k <= n/2 fails.
OrbitDecomposition orbit_decomposition(const BooleanElement& e, int t);

/// Dimension of the span of the S_n-orbit of a homogeneous element.
std::size_t orbit_span_dim(const BooleanElement& e);

/// Witnesses: a total t-trade (strata {t}), a minimal t-trade (strata
/// {t..k-1}) and, when t+1 < k, a total t-trade plus a total (t+1)-trade
/// (strata {t, t+1}).
std::vector<RankReport> check_orbit_decomposition(int t, int k, int n, std::uint64_t seed);

/// lambda_j(t,k,n;t) = C(k-j, t-j) for 0 <= j <= t <= k <= n <= bound.
RankReport check_lambda_closed_form(int bound);

/// h(g_{U,c}) = 0 for tableaux of shape (n-t-1, t+1), all c and valid k.
/// `samples` = 0 means every tableau; otherwise that many random tableaux
/// per column index.
RankReport check_garnir_vanishing(const TwoRowShape& shape, std::uint64_t seed, int samples);

/// Straightening of random integral expressions: standard support, integral
/// coefficients and h(input) = h(output) for every valid k.
RankReport check_straightening(const TwoRowShape& shape, std::uint64_t seed, int samples);

/// Seed mixed with parameters (splitmix64), independent of wall clock.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<long> params);

std::vector<std::string> suite_names();

/// Runs every check of a suite over admissible parameters with n <= n_max.
/// Checks run in parallel; the result is in deterministic parameter order.
std::vector<RankReport> run_suite(const std::string& suite, int n_max, std::uint64_t seed);

}  // namespace tradekit

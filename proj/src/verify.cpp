#include "tradekit/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tradekit/matrix_io.hpp"
#include "tradekit/trades.hpp"

namespace tradekit {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

std::string tkn(int t, int k, int n) {
  return "t=" + std::to_string(t) + ",k=" + std::to_string(k) + ",n=" + std::to_string(n);
}

std::string format_coeffs(const std::vector<Rational>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + format_rational(c[i]);
  return s + "]";
}

std::string format_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

RankReport make_report(std::string id, std::string params, mpz_class predicted, mpz_class computed,
                       Clock::time_point start) {
  RankReport r{std::move(id), std::move(params), std::move(predicted), std::move(computed)};
  r.pass = r.predicted == r.computed;
  r.elapsed = since(start);
  return r;
}

void require_half_range(int t, int k, int n) {
  if (t < 0 || t >= k || 2 * k > n) throw std::invalid_argument("check requires 0 <= t < k <= n/2");
}

void require_trade_range(int t, int k, int n) {
  if (t < 0 || t >= k || t + k > n) throw std::invalid_argument("check requires 0 <= t < k and t + k <= n");
}

// Portable uniform index in [0, bound).
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(images[i], images[draw(rng, i + 1)]);
  return Permutation(std::move(images));
}

Tableau random_tableau(const TwoRowShape& shape, std::mt19937_64& rng) {
  const auto p = random_permutation(shape.n(), rng).images();
  return Tableau(std::vector<int>(p.begin(), p.begin() + shape.lambda1),
                 std::vector<int>(p.begin() + shape.lambda1, p.end()));
}

// Grows the span of the orbit of e by closing under adjacent transpositions.
SpanBasis orbit_span(const BooleanElement& e, int k) {
  const int n = e.n();
  SpanBasis span(binomial_u64(n, k));
  std::vector<Permutation> generators;
  for (int i = 1; i < n; ++i) generators.push_back(Permutation::adjacent_transposition(n, i));
  std::deque<BooleanElement> pending;
  if (span.insert(e.coordinates(k))) pending.push_back(e);
  while (!pending.empty()) {
    const BooleanElement b = std::move(pending.front());
    pending.pop_front();
    for (const auto& s : generators) {
      BooleanElement image = permute_element(s, b);
      if (span.insert(image.coordinates(k))) pending.push_back(std::move(image));
    }
  }
  return span;
}

mpz_class stratum_dim(int n, int i) { return binomial(n, i + 1) - binomial(n, i); }

// Valid k for h on shape (n-t-1, t+1).
std::vector<int> h_degrees(const TwoRowShape& shape) {
  std::vector<int> ks;
  const int t = shape.lambda2 - 1;
  if (t < 0) return ks;
  for (int k = t + 1; t + k <= shape.n(); ++k) ks.push_back(k);
  return ks;
}

}  // namespace

std::string RankReport::record(bool timing) const {
  std::ostringstream os;
  os << "CHECK " << id << " params=" << params << " predicted=" << predicted.get_str()
     << " computed=" << computed.get_str() << " pass=" << (pass ? "true" : "false")
     << " ms=" << (timing ? elapsed.count() : 0);
  return os.str();
}

RankReport DecompositionReport::summary() const {
  RankReport r{id, params, predicted_total, computed_total, pass, true, elapsed};
  return r;
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<long> params) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(base);
  for (long p : params) h = mix(h ^ static_cast<std::uint64_t>(p));
  return h;
}

RankReport check_inclusion_rank(int t, int k, int n) {
  require_half_range(t, k, n);
  const auto start = Clock::now();
  const auto computed = rank(build_matrix(MatrixSpec::inclusion(n, t, k)));
  return make_report("inclusion-rank", tkn(t, k, n), binomial(n, t), computed, start);
}

RankReport check_total_trade_dim(int t, int k, int n) {
  require_trade_range(t, k, n);
  const auto start = Clock::now();
  const auto computed = rank_of_columns(trade_coordinates(all_total_trades(t, k, n), k));
  return make_report("total-trade-dim", tkn(t, k, n), stratum_dim(n, t), computed, start);
}

DecompositionReport check_kernel_decomposition(int t, int k, int n) {
  require_half_range(t, k, n);
  const auto start = Clock::now();
  DecompositionReport report;
  report.id = "kernel-decomposition";
  report.params = tkn(t, k, n);
  const RationalMatrix w = build_matrix(MatrixSpec::inclusion(n, t, k));
  const std::size_t kernel_dim = w.cols() - rank(w);

  bool ok = true;
  std::vector<RationalVector> concatenated;
  mpz_class summand_total = 0;
  for (int i = t; i < k; ++i) {
    const auto all = trade_coordinates(all_total_trades(i, k, n), k);
    const auto basis = trade_coordinates(total_trade_basis(i, k, n), k);
    const TwoRowShape shape{n - i - 1, i + 1};
    SummandCheck row{shape, specht_dim(shape), rank_of_columns(all)};
    ok = ok && row.predicted == row.computed && basis.size() == row.predicted;
    summand_total += row.predicted;
    report.summands.push_back(row);

    bool inside = true;
    for (const auto& v : all) inside = inside && is_zero(matvec(w, v));
    report.containments.emplace_back("stratum " + std::to_string(i) + " in ker W", inside);
    ok = ok && inside;
    concatenated.insert(concatenated.end(), basis.begin(), basis.end());
  }
  const std::size_t concatenated_rank = rank_of_columns(concatenated);
  const bool direct = concatenated_rank == concatenated.size();
  report.containments.emplace_back("stratum bases independent", direct);
  report.containments.emplace_back("strata exhaust kernel", concatenated_rank == kernel_dim);

  report.predicted_total = binomial(n, k) - binomial(n, t);
  report.computed_total = kernel_dim;
  report.pass = ok && direct && concatenated_rank == kernel_dim && summand_total == report.predicted_total &&
                report.predicted_total == report.computed_total;
  report.elapsed = since(start);
  return report;
}

RankReport check_intersection_rank(int t, int k, int n, int l) {
  if (l < 0 || l > t) throw std::invalid_argument("check requires 0 <= l <= t");
  if (t < 0 || t > k || 2 * k > n) throw std::invalid_argument("check requires 0 <= t <= k <= n/2");
  const auto start = Clock::now();
  std::vector<Rational> coeffs(t + 1);
  coeffs[l] = 1;
  const auto computed = rank(build_matrix(MatrixSpec::intersection(n, t, k, l)));
  return make_report("intersection-rank", tkn(t, k, n) + ",l=" + std::to_string(l),
                     predicted_rank(t, k, n, coeffs), computed, start);
}

std::vector<std::vector<Rational>> combination_coefficients(int t, std::uint64_t seed, int random_count) {
  std::vector<std::vector<Rational>> out;
  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < random_count) {
    std::vector<Rational> c(t + 1);
    bool nonzero = false;
    for (auto& x : c) {
      const long num = static_cast<long>(draw(rng, 11)) - 5;
      const long den = static_cast<long>(draw(rng, 5)) + 1;
      x = Rational(num, den);
      x.canonicalize();
      nonzero = nonzero || x != 0;
    }
    if (nonzero) out.push_back(std::move(c));
  }
  static constexpr int grid[] = {-2, -1, 1, 2};
  std::size_t cells = 1;
  for (int i = 0; i <= t; ++i) cells *= 4;
  for (std::size_t code = 0; code < cells; ++code) {
    std::vector<Rational> c(t + 1);
    std::size_t rest = code;
    for (int i = 0; i <= t; ++i, rest /= 4) c[i] = grid[rest % 4];
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<RankReport> check_combination_rank(int t, int k, int n,
                                               const std::vector<std::vector<Rational>>& coeff_vectors) {
  require_half_range(t, k, n);
  std::vector<RankReport> out;
  for (const auto& c : coeff_vectors) {
    const auto start = Clock::now();
    const mpz_class computed = rank(build_matrix(MatrixSpec::combination(n, t, k, c)));
    const std::string params = tkn(t, k, n) + ",c=" + format_coeffs(c);
    out.push_back(make_report("combination-rank", params + ",J=" + format_set(j_set(t, k, n, c)),
                              predicted_rank(t, k, n, c), computed, start));
    out.push_back(make_report("combination-rank-weighted", params + ",J=" + format_set(effective_j_set(t, k, n, c)),
                              effective_predicted_rank(t, k, n, c), computed, start));
  }
  return out;
}

BasisAudit check_basis_corollary(int t, int k, int n) {
  require_trade_range(t, k, n);
  const auto start = Clock::now();
  BasisAudit audit;
  const TwoRowShape shape{n - t - 1, t + 1};
  const mpz_class dim = specht_dim(shape);

  auto& std_report = audit.standard;
  std_report.id = "basis-standard";
  std_report.params = tkn(t, k, n);
  const auto basis = trade_coordinates(total_trade_basis(t, k, n), k);
  const auto all = trade_coordinates(all_total_trades(t, k, n), k);
  const std::size_t basis_rank = rank_of_columns(basis);
  auto joined = basis;
  joined.insert(joined.end(), all.begin(), all.end());
  const bool spanning = rank_of_columns(joined) == basis_rank;
  const bool independent = basis_rank == basis.size();
  std_report.summands.push_back({shape, dim, basis_rank});
  std_report.containments.emplace_back("independent", independent);
  std_report.containments.emplace_back("spans all total trades", spanning);
  std_report.predicted_total = dim;
  std_report.computed_total = basis_rank;
  std_report.pass = independent && spanning && basis.size() == dim;
  std_report.elapsed = since(start);

  const auto literal_start = Clock::now();
  const auto candidates = trade_coordinates(increasing_pair_trades(t, k, n), k);
  audit.increasing_pairs_size = candidates.size();
  audit.increasing_pairs_rank = rank_of_columns(candidates);
  audit.increasing_pairs = make_report(
      "basis-increasing-pairs-audit",
      tkn(t, k, n) + ",rank=" + std::to_string(audit.increasing_pairs_rank),
      dim, audit.increasing_pairs_size, literal_start);
  audit.increasing_pairs.pass = audit.increasing_pairs.pass && audit.increasing_pairs_rank == dim;
  audit.increasing_pairs.asserted = false;
  return audit;
}

RankReport check_graver_jurkat(int t, int k, int n, std::uint64_t seed) {
  require_half_range(t, k, n);
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  const auto p = random_permutation(n, rng).images();
  TradeSpec spec{n, t, k, {}, {}, std::vector<int>{}};
  for (int i = 0; i <= t; ++i) {
    spec.xs.push_back(p[2 * i]);
    spec.ys.push_back(p[2 * i + 1]);
  }
  for (int i = 2 * t + 2; i < t + k + 1; ++i) spec.tail->push_back(p[i]);
  const BooleanElement trade = minimal_trade(spec);
  const std::size_t dim = orbit_span(trade, k).rank();
  std::string shown = spec.to_string();
  std::replace(shown.begin(), shown.end(), ' ', ';');
  return make_report("graver-jurkat", tkn(t, k, n) + ",trade=" + shown,
                     binomial(n, k) - binomial(n, t), dim, start);
}

std::size_t orbit_span_dim(const BooleanElement& e) {
  if (e.is_zero()) return 0;
  const auto k = e.homogeneous_grade();
  if (!k) throw std::invalid_argument("orbit_span_dim: input is not homogeneous");
  return orbit_span(e, *k).rank();
}

OrbitDecomposition orbit_decomposition(const BooleanElement& e, int t) {
  const auto k = e.homogeneous_grade();
  if (!k) throw std::invalid_argument("orbit_decomposition: input must be nonzero and homogeneous");
  const int n = e.n();
  require_half_range(t, *k, n);
  if (!is_t_trade(e, t)) throw std::invalid_argument("orbit_decomposition: input is not a t-trade");
  const SpanBasis span = orbit_span(e, *k);
  OrbitDecomposition out;
  out.span_dim = span.rank();
  out.strata_dim = 0;
  for (int i = t; i < *k; ++i) {
    bool inside = true;
    for (const auto& v : trade_coordinates(total_trade_basis(i, *k, n), *k)) {
      if (!span.contains(v)) {
        inside = false;
        break;
      }
    }
    if (inside) {
      out.strata.push_back(i);
      out.strata_dim += stratum_dim(n, i);
    }
  }
  return out;
}

std::vector<RankReport> check_orbit_decomposition(int t, int k, int n, std::uint64_t seed) {
  require_half_range(t, k, n);
  std::vector<RankReport> out;
  const auto run = [&](const std::string& witness, const BooleanElement& e, std::vector<int> expected) {
    const auto start = Clock::now();
    const OrbitDecomposition d = orbit_decomposition(e, t);
    mpz_class predicted = 0;
    for (int i : expected) predicted += stratum_dim(n, i);
    RankReport r = make_report("orbit-decomposition",
                               tkn(t, k, n) + ",witness=" + witness + ",I=" + format_set(d.strata), predicted,
                               d.span_dim, start);
    r.pass = r.pass && d.strata == expected && d.strata_dim == d.span_dim;
    out.push_back(std::move(r));
  };

  std::mt19937_64 rng(seed);
  const Permutation sigma = random_permutation(n, rng);
  const auto total = total_trade_basis(t, k, n);
  run("total", permute_element(sigma, total[draw(rng, total.size())].trade), {t});

  TradeSpec spec{n, t, k, {}, {}, std::vector<int>{}};
  for (int i = 0; i <= t; ++i) {
    spec.xs.push_back(2 * i + 1);
    spec.ys.push_back(2 * i + 2);
  }
  for (int z = 2 * t + 3; z <= t + k + 1; ++z) spec.tail->push_back(z);
  std::vector<int> all_strata(k - t);
  std::iota(all_strata.begin(), all_strata.end(), t);
  run("minimal", permute_element(sigma, minimal_trade(spec)), all_strata);

  if (t + 1 < k) {
    const auto higher = total_trade_basis(t + 1, k, n);
    run("total-sum", total.front().trade + higher.back().trade, {t, t + 1});
  }
  return out;
}

RankReport check_lambda_closed_form(int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  const auto start = Clock::now();
  mpz_class cases = 0, agree = 0;
  for (int n = 0; n <= bound; ++n)
    for (int k = 0; k <= n; ++k)
      for (int t = 0; t <= k; ++t)
        for (int j = 0; j <= t; ++j) {
          ++cases;
          if (lambda_coeff(t, k, n, t, j) == binomial(k - j, t - j)) ++agree;
        }
  return make_report("lambda-closed-form", "n<=" + std::to_string(bound), cases, agree, start);
}

RankReport check_garnir_vanishing(const TwoRowShape& shape, std::uint64_t seed, int samples) {
  shape.validate();
  const auto start = Clock::now();
  const int n = shape.n();
  const auto ks = h_degrees(shape);
  if (ks.empty()) throw std::invalid_argument("shape admits no h map");
  mpz_class cases = 0, vanishing = 0;
  const auto test = [&](const Tableau& u, int c) {
    const TabloidExpr g = garnir(u, c);
    for (int k : ks) {
      ++cases;
      if (h_map(g, n, k).is_zero()) ++vanishing;
    }
  };
  if (samples == 0) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      const Tableau u(std::vector<int>(p.begin(), p.begin() + shape.lambda1),
                      std::vector<int>(p.begin() + shape.lambda1, p.end()));
      for (int c = 1; c < shape.lambda1; ++c) test(u, c);
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    std::mt19937_64 rng(seed);
    for (int c = 1; c < shape.lambda1; ++c)
      for (int s = 0; s < samples; ++s) test(random_tableau(shape, rng), c);
  }
  return make_report("garnir-vanishing",
                     "shape=" + shape.to_string() + (samples ? ",samples=" + std::to_string(samples) : ",exhaustive"),
                     cases, vanishing, start);
}

RankReport check_straightening(const TwoRowShape& shape, std::uint64_t seed, int samples) {
  shape.validate();
  const auto start = Clock::now();
  const int n = shape.n();
  const auto ks = h_degrees(shape);
  std::mt19937_64 rng(seed);
  Straightener straightener;
  mpz_class sound = 0;
  for (int s = 0; s < samples; ++s) {
    TabloidExpr input;
    const std::size_t terms = 1 + draw(rng, 3);
    for (std::size_t i = 0; i < terms; ++i) {
      const long coeff = static_cast<long>(draw(rng, 7)) - 3;
      input.add(canonicalize(random_tableau(shape, rng)), coeff == 0 ? 1 : coeff);
    }
    const TabloidExpr output = straightener.straighten(input);
    bool ok = true;
    for (const auto& [tab, c] : output.terms()) ok = ok && tab.is_standard() && c.get_den() == 1;
    for (int k : ks) ok = ok && h_map(input, n, k) == h_map(output, n, k);
    if (ok) ++sound;
  }
  return make_report("straightening", "shape=" + shape.to_string() + ",samples=" + std::to_string(samples),
                     samples, sound, start);
}

std::vector<std::string> suite_names() {
  return {"inclusion-rank", "total-trade-dim", "kernel-decomposition", "intersection-rank",
          "combination-rank", "basis", "graver-jurkat", "orbit-decomposition",
          "lambda-closed-form", "garnir", "straighten", "all"};
}

std::vector<RankReport> run_suite(const std::string& suite, int n_max, std::uint64_t seed) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (n_max < 1 || n_max > 30) throw std::invalid_argument("n-max must lie in [1, 30]");

  using Task = std::function<std::vector<RankReport>()>;
  std::vector<Task> tasks;
  const auto wants = [&](const char* name) { return suite == "all" || suite == name; };
  const auto single = [](auto f) { return [f] { return std::vector<RankReport>{f()}; }; };

  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; 2 * k <= n; ++k)
      for (int t = 0; t < k; ++t) {
        if (wants("inclusion-rank")) tasks.push_back(single([=] { return check_inclusion_rank(t, k, n); }));
        if (wants("kernel-decomposition"))
          tasks.push_back(single([=] { return check_kernel_decomposition(t, k, n).summary(); }));
        if (wants("intersection-rank"))
          for (int l = 0; l <= t; ++l)
            tasks.push_back(single([=] { return check_intersection_rank(t, k, n, l); }));
        if (wants("combination-rank"))
          tasks.push_back([=] {
            return check_combination_rank(t, k, n, combination_coefficients(t, derive_seed(seed, {t, k, n}), 20));
          });
        if (wants("graver-jurkat"))
          tasks.push_back(single([=] { return check_graver_jurkat(t, k, n, derive_seed(seed, {t, k, n})); }));
        if (wants("orbit-decomposition"))
          tasks.push_back([=] { return check_orbit_decomposition(t, k, n, derive_seed(seed, {t, k, n})); });
      }
    for (int k = 1; k <= n; ++k)
      for (int t = 0; t < k && t + k <= n; ++t) {
        if (wants("total-trade-dim")) tasks.push_back(single([=] { return check_total_trade_dim(t, k, n); }));
        if (wants("basis") && n >= 2 * t + 2)
          tasks.push_back([=] {
            const BasisAudit a = check_basis_corollary(t, k, n);
            return std::vector<RankReport>{a.standard.summary(), a.increasing_pairs};
          });
      }
    for (int l2 = 0; 2 * l2 <= n; ++l2) {
      const TwoRowShape shape{n - l2, l2};
      if (wants("garnir") && l2 >= 1 && shape.lambda1 >= 2)
        tasks.push_back(single([=] {
          return check_garnir_vanishing(shape, derive_seed(seed, {shape.lambda1, shape.lambda2}), n <= 6 ? 0 : 100);
        }));
      if (wants("straighten"))
        tasks.push_back(
            single([=] { return check_straightening(shape, derive_seed(seed, {shape.lambda1, shape.lambda2}), 200); }));
    }
  }
  if (wants("lambda-closed-form")) tasks.push_back(single([=] { return check_lambda_closed_form(n_max); }));

  std::vector<std::vector<RankReport>> results(tasks.size());
  const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) results[i] = tasks[i]();

  std::vector<RankReport> flat;
  for (auto& r : results)
    for (auto& rep : r) flat.push_back(std::move(rep));
  return flat;
}

}  // namespace tradekit

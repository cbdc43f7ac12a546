#include "tradekit/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "tradekit/matrix_io.hpp"
#include "tradekit/trades.hpp"
#include "tradekit/verify.hpp"

namespace tradekit {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) parts.push_back(item);
  return parts;
}

std::vector<Rational> parse_coeffs(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& p : split_list(text)) out.push_back(parse_rational(p));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& p : split_list(text)) {
    std::size_t used = 0;
    const int v = std::stoi(p, &used);
    if (used != p.size()) throw UsageError("not an integer: '" + p + "'");
    out.push_back(v);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_ground_set(int n) { require(n >= 0 && n <= kMaxGroundSet, "n must lie in [0, 64]"); }

}  // namespace

void apply_thread_limit() {
  if (const char* env = std::getenv("TRADEKIT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_num_procs()));
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact inclusion matrices, trades and two-row Specht modules", "tradekit"};
  app.require_subcommand(1);

  int n = 0, t = 0, k = 0, l = 0, n_max = 8;
  std::string kind, format = "dense", out_path, coeffs_text, xs_text, ys_text, tail_text, suite;
  std::uint64_t seed = 0;
  bool timing = false;

  auto* matrix = app.add_subcommand("matrix", "Print an inclusion, intersection or combination matrix");
  matrix->add_option("--kind", kind, "inclusion | intersection | combination")
      ->required()
      ->check(CLI::IsMember({"inclusion", "intersection", "combination"}));
  matrix->add_option("--n", n)->required();
  matrix->add_option("--t", t)->required();
  matrix->add_option("--k", k)->required();
  matrix->add_option("--l", l, "intersection size (intersection only)");
  matrix->add_option("--coeffs", coeffs_text, "c_0,...,c_t (combination only)");
  matrix->add_option("--format", format)->check(CLI::IsMember({"dense", "sparse"}));
  matrix->add_option("--out", out_path, "write to a file instead of stdout");

  auto* rank_cmd = app.add_subcommand("rank", "Compare the predicted and exact rank of sum_l c_l W_{t,k}^l");
  rank_cmd->add_option("--n", n)->required();
  rank_cmd->add_option("--t", t)->required();
  rank_cmd->add_option("--k", k)->required();
  rank_cmd->add_option("--coeffs", coeffs_text, "c_0,...,c_t")->required();

  auto* lambda_cmd = app.add_subcommand("lambda", "Print the table lambda_j(t,k,n;l), rows j, columns l");
  lambda_cmd->add_option("--n", n)->required();
  lambda_cmd->add_option("--t", t)->required();
  lambda_cmd->add_option("--k", k)->required();

  auto* trades_cmd = app.add_subcommand("trades", "Build a minimal or total trade, or list all total trades");
  trades_cmd->add_option("--kind", kind, "minimal | total | all-total")
      ->required()
      ->check(CLI::IsMember({"minimal", "total", "all-total"}));
  trades_cmd->add_option("--n", n)->required();
  trades_cmd->add_option("--t", t)->required();
  trades_cmd->add_option("--k", k)->required();
  trades_cmd->add_option("--xs", xs_text, "x_1,...,x_{t+1}");
  trades_cmd->add_option("--ys", ys_text, "y_1,...,y_{t+1}");
  trades_cmd->add_option("--tail", tail_text, "z_1,...,z_{k-t-1} (minimal only)");

  auto* basis_cmd = app.add_subcommand("basis", "List the standard-tableau basis of total t-trades");
  basis_cmd->add_option("--n", n)->required();
  basis_cmd->add_option("--t", t)->required();
  basis_cmd->add_option("--k", k)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--n-max", n_max);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_flag("--timing", timing, "report wall-clock milliseconds");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tradekit: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (*matrix) {
      require_ground_set(n);
      MatrixSpec spec = kind == "inclusion"      ? MatrixSpec::inclusion(n, t, k)
                        : kind == "intersection" ? MatrixSpec::intersection(n, t, k, l)
                                                 : MatrixSpec::combination(n, t, k, parse_coeffs(coeffs_text));
      spec.validate();
      const RationalMatrix m = build_matrix(spec);
      if (format == "sparse")
        write_sparse(buffer, m);
      else
        write_dense(buffer, m);
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
        file << buffer.str();
        buffer.str("");
      }
    } else if (*rank_cmd) {
      require_ground_set(n);
      const auto coeffs = parse_coeffs(coeffs_text);
      require(0 <= t && t < k && 2 * k <= n, "rank requires 0 <= t < k <= n/2");
      require(coeffs.size() == static_cast<std::size_t>(t + 1), "expected t+1 coefficients");
      const mpz_class predicted = predicted_rank(t, k, n, coeffs);
      const std::size_t computed = rank(build_matrix(MatrixSpec::combination(n, t, k, coeffs)));
      buffer << "predicted " << predicted.get_str() << "\n"
             << "computed " << computed << "\n"
             << "J " << join_ints(j_set(t, k, n, coeffs)) << "\n";
      if (predicted != computed) status = kExitVerifyFailed;
    } else if (*lambda_cmd) {
      require_ground_set(n);
      require(0 <= t && t <= k && k <= n, "lambda requires 0 <= t <= k <= n");
      for (int j = 0; j <= t; ++j) {
        for (int col = 0; col <= t; ++col)
          buffer << (col ? " " : "") << lambda_coeff(t, k, n, col, j).get_str();
        buffer << "\n";
      }
    } else if (*trades_cmd) {
      require_ground_set(n);
      if (kind == "all-total") {
        for (const auto& st : all_total_trades(t, k, n))
          buffer << st.spec.to_string() << " : " << st.trade.to_string() << "\n";
      } else {
        require(!xs_text.empty() && !ys_text.empty(), "--xs and --ys are required");
        TradeSpec spec{n, t, k, parse_ints(xs_text), parse_ints(ys_text), std::nullopt};
        if (kind == "minimal") spec.tail = tail_text.empty() ? std::vector<int>{} : parse_ints(tail_text);
        else require(tail_text.empty(), "--tail applies to minimal trades only");
        spec.validate();
        const BooleanElement e = kind == "minimal" ? minimal_trade(spec) : total_trade(spec);
        buffer << spec.to_string() << "\n" << e.to_string() << "\n";
      }
    } else if (*basis_cmd) {
      require_ground_set(n);
      const auto basis = total_trade_basis(t, k, n);
      std::size_t i = 0;
      for (const auto& tab : standard_tableaux(TwoRowShape{n - t - 1, t + 1})) {
        buffer << tab.to_string() << " " << basis[i].spec.to_string() << " : " << basis[i].trade.to_string() << "\n";
        ++i;
      }
      buffer << "size " << basis.size() << " rank " << rank_of_columns(trade_coordinates(basis, k)) << "\n";
    } else if (*verify_cmd) {
      const auto names = suite_names();
      require(std::find(names.begin(), names.end(), suite) != names.end(), "unknown suite '" + suite + "'");
      const auto reports = run_suite(suite, n_max, seed);
      std::size_t asserted = 0, passed = 0;
      for (const auto& r : reports) {
        buffer << r.record(timing) << "\n";
        if (!r.asserted) continue;
        ++asserted;
        if (r.pass) ++passed;
      }
      buffer << "TOTAL pass=" << passed << "/" << asserted << "\n";
      if (passed != asserted) status = kExitVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    err << "tradekit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "tradekit: value out of range: " << e.what() << "\n";
    return kExitUsage;
  }
  out << buffer.str();
  return status;
}

}  // namespace tradekit

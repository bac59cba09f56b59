// Command-line surface: predict Betti tables of grid fat-point schemes,
// verify predictions against the exact linear-algebra oracle (single
// instance or exhaustive sweep), and certify symbolic-vs-ordinary power
// equality. Exit codes: 0 success, 1 usage error, 2 verification mismatch,
// 3 box or internal resource failure.
#include <array>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gridres/arrangement.hpp"
#include "gridres/betti_table.hpp"
#include "gridres/hilbert.hpp"
#include "gridres/io.hpp"
#include "gridres/mingens.hpp"
#include "gridres/powers.hpp"
#include "gridres/predictor.hpp"
#include "gridres/scheme.hpp"
#include "gridres/syzygy.hpp"
#include "gridres/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

using gridres::AciParams;
using gridres::BettiTable;
using gridres::BiDegree;

struct SchemeFlags {
  std::vector<int> alpha;
  std::vector<int> beta;
  std::vector<int> m;

  AciParams to_params() const {
    AciParams p;
    p.alpha1 = alpha[0];
    p.alpha2 = alpha[1];
    p.beta1 = beta[0];
    p.beta2 = beta[1];
    p.m11 = m[0];
    p.m12 = m[1];
    p.m21 = m[2];
    p.validate();
    return p;
  }
};

void add_scheme_flags(CLI::App* cmd, SchemeFlags& f, bool required) {
  auto* oa = cmd->add_option("--alpha", f.alpha,
                             "Horizontal line block sizes alpha1 alpha2")
                 ->expected(2);
  auto* ob = cmd->add_option("--beta", f.beta,
                             "Vertical line block sizes beta1 beta2")
                 ->expected(2);
  auto* om = cmd->add_option("--m", f.m,
                             "Block multiplicities m11 m12 m21")
                 ->expected(3);
  if (required) {
    oa->required();
    ob->required();
    om->required();
  }
}

/// Default prime: the optional environment override, else 32003.
uint32_t default_prime() {
  const char* env = std::getenv("GRIDRES_PRIME");
  if (env == nullptr || *env == '\0') return gridres::kDefaultPrime;
  char* end = nullptr;
  long val = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || val <= 0)
    throw gridres::ParamError(
        "GRIDRES_PRIME must be a positive integer prime");
  gridres::validate_prime(static_cast<uint32_t>(val));
  return static_cast<uint32_t>(val);
}

struct VerifyOutcome {
  AciParams params;
  bool table_match = false;
  bool euler_match = false;
  std::string diff;
  long long wall_ms = 0;
  bool pass() const { return table_match && euler_match; }
};

VerifyOutcome verify_instance(const AciParams& params,
                              const gridres::FieldConfig& cfg,
                              bool inject_corruption) {
  auto start = std::chrono::steady_clock::now();
  VerifyOutcome out;
  out.params = params;

  auto [predicted, rec] = gridres::predict_table(params);
  (void)rec;
  if (inject_corruption) predicted.add(0, {0, 0}, 1);

  BiDegree box = gridres::verification_box(predicted);
  gridres::FatPointGrid grid = gridres::build_grid(params);
  gridres::Fp fp(cfg.prime);
  gridres::LineArrangement arr =
      gridres::make_arrangement(grid.rows, grid.cols, cfg);
  gridres::ConditionSet cs(grid, 1, arr, fp, box);
  gridres::HilbertTable table(cs, box, gridres::ExecMode::Parallel);
  gridres::MinGens mg =
      gridres::min_generators(table, cs, gridres::ExecMode::Parallel);
  BettiTable oracle =
      gridres::syzygy_betti(table, cs, mg, gridres::ExecMode::Parallel);

  out.table_match = (predicted == oracle);
  if (!out.table_match) out.diff = BettiTable::diff(predicted, oracle);

  out.euler_match = true;
  for (int a = 0; a <= box.a && out.euler_match; ++a)
    for (int b = 0; b <= box.b; ++b)
      if (gridres::euler_hilbert(predicted, {a, b}) != table.dim({a, b})) {
        out.euler_match = false;
        break;
      }

  auto end = std::chrono::steady_clock::now();
  out.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
          .count();
  return out;
}

nlohmann::ordered_json params_json(const AciParams& p) {
  nlohmann::ordered_json j;
  j["alpha"] = {p.alpha1, p.alpha2};
  j["beta"] = {p.beta1, p.beta2};
  j["m"] = {p.m11, p.m12, p.m21};
  return j;
}

int run_predict(const SchemeFlags& flags, const std::string& format) {
  AciParams params = flags.to_params();
  auto [table, rec] = gridres::predict_table(params);
  if (format == "json")
    std::cout << gridres::table_to_json(table, rec).dump(2) << "\n";
  else
    std::cout << gridres::table_to_text(table, rec);
  return kExitOk;
}

/// All normalized multiplicity triples (m21 <= m12) with entries <= max_m,
/// in ascending lexicographic order.
std::vector<std::array<int, 3>> normalized_triples(int max_m) {
  std::vector<std::array<int, 3>> out;
  for (int m11 = 0; m11 <= max_m; ++m11)
    for (int m12 = 0; m12 <= max_m; ++m12)
      for (int m21 = 0; m21 <= m12; ++m21) out.push_back({m11, m12, m21});
  return out;
}

int run_verify_single(const AciParams& params, const gridres::FieldConfig& cfg,
                      bool inject, const std::string& format) {
  VerifyOutcome out = verify_instance(params, cfg, inject);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["params"] = params_json(params);
    j["prime"] = cfg.prime;
    j["seed"] = cfg.seed;
    j["pass"] = out.pass();
    j["table_match"] = out.table_match;
    j["euler_match"] = out.euler_match;
    j["diff"] = out.diff;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << gridres::csv_header() << "\n"
              << gridres::csv_row(params, out.pass(), out.wall_ms) << "\n";
  } else {
    std::cout << (out.pass() ? "PASS" : "FAIL") << ": predictor vs oracle on ("
              << params.alpha1 << "," << params.alpha2 << ";" << params.beta1
              << "," << params.beta2 << ";" << params.m11 << "," << params.m12
              << "," << params.m21 << ")\n";
    if (!out.table_match) std::cout << out.diff;
    if (!out.euler_match)
      std::cout << "Euler characteristic / Hilbert function cross-check "
                   "failed\n";
  }
  return out.pass() ? kExitOk : kExitMismatch;
}

int run_verify_sweep(int max_alpha, int max_beta, int max_m,
                     const gridres::FieldConfig& cfg, bool inject,
                     const std::string& format) {
  if (max_alpha < 1 || max_beta < 1 || max_m < 0)
    throw gridres::ParamError("sweep bounds must be positive");
  std::vector<VerifyOutcome> outcomes;
  for (int a1 = 1; a1 <= max_alpha; ++a1)
    for (int a2 = 1; a2 <= max_alpha; ++a2)
      for (int b1 = 1; b1 <= max_beta; ++b1)
        for (int b2 = 1; b2 <= max_beta; ++b2)
          for (const auto& m : normalized_triples(max_m)) {
            AciParams p{a1, a2, b1, b2, m[0], m[1], m[2]};
            outcomes.push_back(verify_instance(p, cfg, inject));
          }

  size_t failed = 0;
  for (const VerifyOutcome& o : outcomes)
    if (!o.pass()) ++failed;

  if (format == "csv") {
    std::cout << gridres::csv_header() << "\n";
    for (const VerifyOutcome& o : outcomes)
      std::cout << gridres::csv_row(o.params, o.pass(), o.wall_ms) << "\n";
  } else if (format == "json") {
    nlohmann::ordered_json inst = nlohmann::ordered_json::array();
    for (const VerifyOutcome& o : outcomes) {
      nlohmann::ordered_json j;
      j["params"] = params_json(o.params);
      j["pass"] = o.pass();
      inst.push_back(j);
    }
    nlohmann::ordered_json j;
    j["prime"] = cfg.prime;
    j["seed"] = cfg.seed;
    j["total"] = outcomes.size();
    j["failed"] = failed;
    j["instances"] = inst;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const VerifyOutcome& o : outcomes)
      if (!o.pass())
        std::cout << "FAIL: (" << o.params.alpha1 << "," << o.params.alpha2
                  << ";" << o.params.beta1 << "," << o.params.beta2 << ";"
                  << o.params.m11 << "," << o.params.m12 << ","
                  << o.params.m21 << ")\n";
    std::cout << "swept " << outcomes.size() << " instances: "
              << (outcomes.size() - failed) << " passed, " << failed
              << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitMismatch;
}

int run_powers(const SchemeFlags& flags, int power,
               const gridres::FieldConfig& cfg, const std::string& format) {
  AciParams params = flags.to_params();
  gridres::PowerReport report = gridres::check_power_equality(
      params, power, cfg, gridres::ExecMode::Parallel);
  if (format == "json") {
    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    for (const gridres::PowerCheckLine& ln : report.lines) {
      nlohmann::ordered_json j;
      j["degree"] = {ln.d.a, ln.d.b};
      j["dim_symbolic"] = ln.dim_symbolic;
      j["dim_power"] = ln.dim_power;
      j["equal"] = ln.equal;
      lines.push_back(j);
    }
    nlohmann::ordered_json j;
    j["params"] = params_json(params);
    j["power"] = report.m;
    j["prime"] = cfg.prime;
    j["seed"] = cfg.seed;
    j["pass"] = report.all_equal;
    j["lines"] = lines;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const gridres::PowerCheckLine& ln : report.lines)
      std::cout << "degree (" << ln.d.a << "," << ln.d.b
                << "): symbolic " << ln.dim_symbolic << ", ordinary "
                << ln.dim_power << (ln.equal ? "" : "  <- differs") << "\n";
    std::cout << (report.all_equal ? "PASS" : "FAIL")
              << ": ordinary power vs symbolic power, exponent " << report.m
              << "\n";
  }
  return report.all_equal ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bigraded Betti tables of grid fat-point schemes on P1 x P1: "
      "closed-form prediction, exact finite-field verification, and "
      "symbolic-vs-ordinary power checks"};
  app.require_subcommand(1);

  SchemeFlags predict_flags;
  std::string predict_format = "json";
  CLI::App* predict = app.add_subcommand(
      "predict", "Print the predicted minimal free resolution");
  add_scheme_flags(predict, predict_flags, true);
  predict->add_option("--format", predict_format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  SchemeFlags verify_flags;
  std::string verify_format = "json";
  uint32_t verify_prime = 0;
  uint64_t verify_seed = 0;
  bool sweep = false;
  bool inject = false;
  int max_alpha = 2, max_beta = -1, max_m = 3;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the prediction against the linear-algebra oracle");
  add_scheme_flags(verify, verify_flags, false);
  verify->add_option("--prime", verify_prime,
                     "Field characteristic (default 32003 or GRIDRES_PRIME)");
  verify->add_option("--seed", verify_seed,
                     "Scalar seed; 0 picks canonical small scalars");
  verify->add_flag("--sweep", sweep, "Verify every instance up to the bounds");
  verify->add_option("--max-alpha", max_alpha, "Sweep bound on alpha blocks");
  verify->add_option("--max-beta", max_beta,
                     "Sweep bound on beta blocks (default: --max-alpha)");
  verify->add_option("--max-m", max_m, "Sweep bound on multiplicities");
  verify->add_option("--format", verify_format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  verify->add_flag("--inject-corruption", inject,
                   "Corrupt the prediction before comparing (test hook)")
      ->group("");  // hidden

  SchemeFlags powers_flags;
  std::string powers_format = "json";
  uint32_t powers_prime = 0;
  uint64_t powers_seed = 0;
  int power = 2;
  CLI::App* powers = app.add_subcommand(
      "powers", "Certify ordinary = symbolic power at generator degrees");
  add_scheme_flags(powers, powers_flags, true);
  powers->add_option("--power", power, "Exponent m >= 1")->required();
  powers->add_option("--prime", powers_prime,
                     "Field characteristic (default 32003 or GRIDRES_PRIME)");
  powers->add_option("--seed", powers_seed,
                     "Scalar seed; 0 picks canonical small scalars");
  powers->add_option("--format", powers_format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (predict->parsed()) return run_predict(predict_flags, predict_format);

    if (verify->parsed()) {
      gridres::FieldConfig cfg;
      cfg.prime = (verify_prime != 0) ? verify_prime : default_prime();
      cfg.seed = verify_seed;
      gridres::validate_prime(cfg.prime);
      if (sweep) {
        if (max_beta < 0) max_beta = max_alpha;
        return run_verify_sweep(max_alpha, max_beta, max_m, cfg, inject,
                                verify_format);
      }
      if (verify_flags.alpha.empty() || verify_flags.beta.empty() ||
          verify_flags.m.empty())
        throw gridres::ParamError(
            "verify needs --alpha/--beta/--m, or --sweep with bounds");
      return run_verify_single(verify_flags.to_params(), cfg, inject,
                               verify_format);
    }

    if (powers->parsed()) {
      gridres::FieldConfig cfg;
      cfg.prime = (powers_prime != 0) ? powers_prime : default_prime();
      cfg.seed = powers_seed;
      gridres::validate_prime(cfg.prime);
      return run_powers(powers_flags, power, cfg, powers_format);
    }
  } catch (const gridres::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gridres::BoxError& e) {
    std::cerr << "box error: " << e.what() << "\n";
    return kExitResource;
  } catch (const gridres::OracleError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}

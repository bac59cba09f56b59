// Acceptance gate: one checkable criterion per run (--criterion N) or all
// in sequence, each reported as a single [PASS]/[FAIL] line. Criteria 1-3
// exercise the installed CLI binary (path in GRIDRES_BIN) against stored
// golden tables; the rest drive the library directly: the full
// 640-instance prediction-vs-oracle sweep, the alternating-sum Hilbert
// identity, power equality, generator splitting, and structural
// invariants including prime/seed independence.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "gridres/arrangement.hpp"
#include "gridres/betti_table.hpp"
#include "gridres/hilbert.hpp"
#include "gridres/io.hpp"
#include "gridres/powers.hpp"
#include "gridres/predictor.hpp"
#include "gridres/scheme.hpp"
#include "gridres/syzygy.hpp"

namespace {

using namespace gridres;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

struct Outcome {
  bool pass = false;
  std::string detail;  // appended to the report line
};

// ---------------------------------------------------------------- CLI glue

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("GRIDRES_BIN");
  CliResult r;
  if (bin == nullptr) {
    r.out = "GRIDRES_BIN is not set";
    return r;
  }
  std::string cmd = "\"" + std::string(bin) + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    r.out = "failed to launch the CLI";
    return r;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

/// Runs `predict` through the CLI and parses the JSON table; empty optional
/// plus a message in `err` on any failure.
bool cli_predict(const AciParams& p, BettiTable& table,
                 NormalizationRecord& rec, std::string& err) {
  std::ostringstream args;
  args << "predict --alpha " << p.alpha1 << " " << p.alpha2 << " --beta "
       << p.beta1 << " " << p.beta2 << " --m " << p.m11 << " " << p.m12 << " "
       << p.m21 << " --format json";
  CliResult r = run_cli(args.str());
  if (r.code != 0) {
    err = "CLI exited with code " + std::to_string(r.code) + ": " + r.out;
    return false;
  }
  try {
    std::tie(table, rec) =
        table_from_json(nlohmann::ordered_json::parse(r.out));
  } catch (const std::exception& e) {
    err = std::string("CLI output did not parse: ") + e.what();
    return false;
  }
  return true;
}

// ------------------------------------------------------------ golden data

using Shift = std::array<int, 3>;  // (a, b, multiplicity)

BettiTable make_table(const std::vector<Shift>& f0, const std::vector<Shift>& f1,
                      const std::vector<Shift>& f2) {
  BettiTable t;
  for (const Shift& s : f0) t.add(0, {s[0], s[1]}, s[2]);
  for (const Shift& s : f1) t.add(1, {s[0], s[1]}, s[2]);
  for (const Shift& s : f2) t.add(2, {s[0], s[1]}, s[2]);
  return t;
}

/// The three corner-point schemes (m11, 4, m21) for (0,4,1), (1,4,2),
/// (2,4,3), with their stored resolutions.
struct CornerGolden {
  int m11, m12, m21;
  BettiTable table;
};

std::vector<CornerGolden> corner_goldens() {
  std::vector<CornerGolden> g;
  g.push_back({0, 4, 1,
               make_table({{5, 0, 1}, {4, 1, 2}, {3, 2, 2}, {2, 3, 2},
                           {1, 4, 2}, {0, 5, 1}},
                          {{5, 1, 2}, {4, 2, 3}, {3, 3, 3}, {2, 4, 3},
                           {1, 5, 2}},
                          {{5, 2, 1}, {4, 3, 1}, {3, 4, 1}, {2, 5, 1}})});
  g.push_back({1, 4, 2,
               make_table({{6, 0, 1}, {5, 1, 2}, {4, 2, 3}, {3, 3, 3},
                           {2, 4, 2}, {1, 5, 2}, {0, 6, 1}},
                          {{6, 1, 2}, {5, 2, 4}, {4, 3, 5}, {3, 4, 4},
                           {2, 5, 3}, {1, 6, 2}},
                          {{6, 2, 1}, {5, 3, 2}, {4, 4, 2}, {3, 5, 1},
                           {2, 6, 1}})});
  g.push_back({2, 4, 3,
               make_table({{7, 0, 1}, {6, 1, 2}, {5, 2, 3}, {4, 3, 3},
                           {3, 4, 3}, {2, 5, 2}, {1, 6, 2}, {0, 7, 1}},
                          {{7, 1, 2}, {6, 2, 4}, {5, 3, 5}, {4, 4, 5},
                           {3, 5, 4}, {2, 6, 3}, {1, 7, 2}},
                          {{7, 2, 1}, {6, 3, 2}, {5, 4, 2}, {4, 5, 2},
                           {3, 6, 1}, {2, 7, 1}})});
  return g;
}

/// Stored resolution of the mixed-block reference instance
/// (2,1,2,2; 2,4,3): 17 + 25 + 9 summands.
BettiTable mixed_block_golden() {
  return make_table(
      {{10, 2, 1}, {9, 4, 1}, {8, 6, 1}, {8, 4, 1}, {7, 6, 1}, {6, 8, 1},
       {6, 6, 1}, {5, 8, 1}, {4, 10, 1}, {4, 8, 1}, {3, 10, 1}, {2, 12, 1},
       {1, 12, 1}, {0, 14, 1}, {7, 4, 1}, {9, 2, 1}, {11, 0, 1}},
      {{10, 4, 2}, {9, 6, 2}, {8, 8, 1}, {8, 6, 2}, {7, 8, 2}, {6, 10, 1},
       {6, 8, 2}, {5, 10, 2}, {4, 10, 1}, {4, 12, 1}, {3, 12, 2}, {2, 14, 1},
       {1, 14, 1}, {7, 6, 1}, {9, 4, 2}, {11, 2, 2}},
      {{10, 6, 1}, {9, 8, 1}, {8, 8, 1}, {7, 10, 1}, {6, 10, 1}, {5, 12, 1},
       {3, 14, 1}, {9, 6, 1}, {11, 4, 1}});
}

/// Stored shift pattern of the uniform multiplicity-3 case, in terms of the
/// two horizontal block sizes (c, d), the total vertical width a, and the
/// first vertical block b: ten F0, twelve F1, three F2 summands.
BettiTable uniform3_pattern(int c, int d, int a, int b) {
  return make_table({{3 * c + 3 * d, 0, 1},
                     {3 * c + 2 * d, b, 1},
                     {2 * c + 2 * d, a, 1},
                     {3 * c + d, 2 * b, 1},
                     {2 * c + d, a + b, 1},
                     {c + d, 2 * a, 1},
                     {3 * c, 3 * b, 1},
                     {2 * c, a + 2 * b, 1},
                     {c, 2 * a + b, 1},
                     {0, 3 * a, 1}},
                    {{c, 3 * a, 1},
                     {2 * c, 2 * a + b, 1},
                     {3 * c, a + 2 * b, 1},
                     {c + d, 2 * a + b, 1},
                     {2 * c + d, a + 2 * b, 1},
                     {3 * c + d, 3 * b, 1},
                     {2 * c + d, 2 * a, 1},
                     {3 * c + d, a + b, 1},
                     {2 * c + 2 * d, a + b, 1},
                     {3 * c + 2 * d, 2 * b, 1},
                     {3 * c + 2 * d, a, 1},
                     {3 * c + 3 * d, b, 1}},
                    {{3 * c + 2 * d, a + b, 1},
                     {3 * c + d, a + 2 * b, 1},
                     {2 * c + d, 2 * a + b, 1}});
}

/// The full acceptance sweep: every block shape with entries in {1,2} and
/// every normalized multiplicity triple with entries in {0..3}.
std::vector<AciParams> sweep_params() {
  std::vector<AciParams> out;
  for (int a1 = 1; a1 <= 2; ++a1)
    for (int a2 = 1; a2 <= 2; ++a2)
      for (int b1 = 1; b1 <= 2; ++b1)
        for (int b2 = 1; b2 <= 2; ++b2)
          for (int m11 = 0; m11 <= 3; ++m11)
            for (int m12 = 0; m12 <= 3; ++m12)
              for (int m21 = 0; m21 <= m12; ++m21)
                out.push_back({a1, a2, b1, b2, m11, m12, m21});
  return out;
}

std::string params_str(const AciParams& p) {
  std::ostringstream s;
  s << "(" << p.alpha1 << "," << p.alpha2 << ";" << p.beta1 << "," << p.beta2
    << ";" << p.m11 << "," << p.m12 << "," << p.m21 << ")";
  return s.str();
}

// -------------------------------------------------------------- criteria

Outcome criterion1() {
  auto t0 = Clock::now();
  for (const CornerGolden& g : corner_goldens()) {
    BettiTable table;
    NormalizationRecord rec;
    std::string err;
    if (!cli_predict({1, 1, 1, 1, g.m11, g.m12, g.m21}, table, rec, err))
      return {false, err};
    if (rec.transposed)
      return {false, "unexpected factor swap on a normalized instance"};
    if (!(table == g.table))
      return {false, "(" + std::to_string(g.m11) + ",4," +
                         std::to_string(g.m21) + "): " +
                         BettiTable::diff(g.table, table)};
  }
  long long ms = ms_since(t0);
  if (ms >= 1000)
    return {false, "runtime " + std::to_string(ms) + " ms exceeds 1 s"};
  return {true, "3 tables, " + std::to_string(ms) + " ms"};
}

Outcome criterion2() {
  auto t0 = Clock::now();
  AciParams p{2, 1, 2, 2, 2, 4, 3};
  if (aset_z(0, p) != DegreeSet{{7, 4}, {9, 2}, {11, 0}})
    return {false, "level-0 antidiagonal set differs from the stored one"};
  if (aset_z(1, p) != DegreeSet{{9, 4}, {11, 2}})
    return {false, "level-1 antidiagonal set differs from the stored one"};
  BettiTable table;
  NormalizationRecord rec;
  std::string err;
  if (!cli_predict(p, table, rec, err)) return {false, err};
  BettiTable want = mixed_block_golden();
  if (!(table == want)) return {false, BettiTable::diff(want, table)};
  long long ms = ms_since(t0);
  if (ms >= 1000)
    return {false, "runtime " + std::to_string(ms) + " ms exceeds 1 s"};
  return {true, "17+25+9 summands, " + std::to_string(ms) + " ms"};
}

Outcome criterion3() {
  auto t0 = Clock::now();
  struct Blocks {
    int a1, a2, b1, b2;
  };
  for (Blocks blk : {Blocks{1, 1, 1, 1}, Blocks{2, 1, 2, 2}}) {
    AciParams p{blk.a1, blk.a2, blk.b1, blk.b2, 3, 3, 3};
    BettiTable table;
    NormalizationRecord rec;
    std::string err;
    if (!cli_predict(p, table, rec, err)) return {false, err};
    BettiTable want =
        uniform3_pattern(blk.a1, blk.a2, blk.b1 + blk.b2, blk.b1);
    if (!(table == want)) return {false, BettiTable::diff(want, table)};
    if (table.total(0) != 10 || table.total(1) != 12 || table.total(2) != 3)
      return {false, "summand totals differ from 10/12/3"};
  }
  long long ms = ms_since(t0);
  if (ms >= 1000)
    return {false, "runtime " + std::to_string(ms) + " ms exceeds 1 s"};
  return {true, "10/12/3 summands at two block shapes, " +
                    std::to_string(ms) + " ms"};
}

Outcome criterion4() {
  auto t0 = Clock::now();
  std::vector<AciParams> sweep = sweep_params();
  for (const AciParams& p : sweep) {
    auto [predicted, rec] = predict_table(p);
    (void)rec;
    try {
      BettiTable oracle =
          syzygy_betti(build_grid(p), verification_box(predicted),
                       FieldConfig{}, ExecMode::Parallel);
      if (!(oracle == predicted))
        return {false, params_str(p) + ": " +
                           BettiTable::diff(predicted, oracle)};
    } catch (const std::exception& e) {
      return {false, params_str(p) + ": " + e.what()};
    }
  }
  return {true, std::to_string(sweep.size()) + " instances, " +
                    std::to_string(ms_since(t0)) + " ms"};
}

Outcome criterion5() {
  auto t0 = Clock::now();
  std::vector<AciParams> sweep = sweep_params();
  long long degrees = 0;
  for (const AciParams& p : sweep) {
    auto [predicted, rec] = predict_table(p);
    (void)rec;
    BiDegree box = verification_box(predicted);
    FatPointGrid grid = build_grid(p);
    FieldConfig cfg;
    LineArrangement arr = make_arrangement(grid.rows, grid.cols, cfg);
    Fp fp(cfg.prime);
    for (int a = 0; a <= box.a; ++a)
      for (int b = 0; b <= box.b; ++b) {
        ++degrees;
        if (euler_hilbert(predicted, {a, b}) !=
            hilbert_dim_symbolic(grid, 1, {a, b}, arr, fp))
          return {false, params_str(p) + " at degree (" + std::to_string(a) +
                             "," + std::to_string(b) + ")"};
      }
  }
  return {true, std::to_string(sweep.size()) + " instances, " +
                    std::to_string(degrees) + " degrees, " +
                    std::to_string(ms_since(t0)) + " ms"};
}

Outcome criterion6() {
  // Smoke subset first: unit blocks, exponent 2, under a minute.
  auto smoke0 = Clock::now();
  for (int m11 = 0; m11 <= 3; ++m11)
    for (int m12 = 0; m12 <= 3; ++m12)
      for (int m21 = 0; m21 <= m12; ++m21) {
        AciParams p{1, 1, 1, 1, m11, m12, m21};
        try {
          if (!check_power_equality(p, 2, FieldConfig{}, ExecMode::Parallel)
                   .all_equal)
            return {false, "smoke: inequality at " + params_str(p)};
        } catch (const std::exception& e) {
          return {false, "smoke: " + params_str(p) + ": " + e.what()};
        }
      }
  long long smoke_ms = ms_since(smoke0);
  if (smoke_ms >= 60000)
    return {false, "smoke subset took " + std::to_string(smoke_ms) +
                       " ms, exceeding 1 min"};

  auto t0 = Clock::now();
  std::vector<AciParams> sweep = sweep_params();
  for (int m = 2; m <= 3; ++m)
    for (const AciParams& p : sweep) {
      try {
        PowerReport r =
            check_power_equality(p, m, FieldConfig{}, ExecMode::Parallel);
        if (!r.all_equal)
          return {false, "inequality at " + params_str(p) + " with exponent " +
                             std::to_string(m)};
      } catch (const std::exception& e) {
        return {false, params_str(p) + " with exponent " + std::to_string(m) +
                           ": " + e.what()};
      }
    }
  return {true, "smoke " + std::to_string(smoke_ms) + " ms; " +
                    std::to_string(2 * sweep.size()) + " full checks, " +
                    std::to_string(ms_since(t0)) + " ms"};
}

Outcome criterion7() {
  auto t0 = Clock::now();
  long long splits = 0;
  for (int m11 = 0; m11 <= 3; ++m11)
    for (int m12 = 0; m12 <= 3; ++m12)
      for (int m21 = 0; m21 <= 3; ++m21)
        for (int m = 1; m <= 3; ++m)
          for (const ExpTuple& g :
               staircase_family(m * m11, m * m12, m * m21)) {
            ++splits;
            std::pair<ExpTuple, ExpTuple> f;
            try {
              f = split_factor(g, m, m11, m12, m21);
            } catch (const std::exception& e) {
              return {false, std::string("split failed: ") + e.what()};
            }
            if (!(f.first + f.second == g))
              return {false, "factors do not sum to the generator"};
            if (!satisfies_constraints(f.first, m11, m12, m21, 1))
              return {false, "first factor misses the single-cover level"};
            if (!satisfies_constraints(f.second, m11, m12, m21, m - 1))
              return {false, "second factor misses the lower-power level"};
          }
  long long ms = ms_since(t0);
  if (ms >= 60000)
    return {false, "runtime " + std::to_string(ms) + " ms exceeds 1 min"};
  return {true, std::to_string(splits) + " generators split, " +
                    std::to_string(ms) + " ms"};
}

Outcome criterion8() {
  auto t0 = Clock::now();
  std::vector<AciParams> sweep = sweep_params();

  // Rank identity and transpose equivariance, predictor side.
  for (const AciParams& p : sweep) {
    auto [t, rec] = predict_table(p);
    (void)rec;
    if (t.alternating_total() != 1)
      return {false, "rank identity fails at " + params_str(p)};
    auto [tt, rect] = predict_table(transpose_of(p));
    (void)rect;
    if (!(tt == t.transposed()))
      return {false, "transpose equivariance fails at " + params_str(p)};
  }

  // Oracle independence of prime and scalar seed.
  const uint32_t primes[] = {kDefaultPrime, kAltPrime};
  const uint64_t seeds[] = {0, 17, 911};
  for (const AciParams& p : sweep) {
    auto [predicted, rec] = predict_table(p);
    (void)rec;
    BiDegree box = verification_box(predicted);
    FatPointGrid grid = build_grid(p);
    BettiTable ref;
    bool have_ref = false;
    for (uint32_t prime : primes)
      for (uint64_t seed : seeds) {
        BettiTable t = syzygy_betti(grid, box, FieldConfig{prime, seed},
                                    ExecMode::Parallel);
        if (!have_ref) {
          ref = t;
          have_ref = true;
        } else if (!(t == ref)) {
          return {false, "oracle table depends on (prime, seed) at " +
                             params_str(p)};
        }
      }
  }
  return {true, std::to_string(sweep.size()) + " instances x 6 field "
                    "configurations, " +
                    std::to_string(ms_since(t0)) + " ms"};
}

struct Criterion {
  int id;
  const char* description;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "CLI prediction reproduces the three stored corner-point tables",
     criterion1},
    {2, "CLI prediction reproduces the stored mixed-block table and its "
        "antidiagonal sets",
     criterion2},
    {3, "uniform multiplicity-3 prediction follows the stored 10/12/3 "
        "shift pattern",
     criterion3},
    {4, "oracle Betti tables equal predictions on the full sweep",
     criterion4},
    {5, "alternating-sum Hilbert values equal symbolic slice dimensions "
        "throughout every verification box",
     criterion5},
    {6, "ordinary power equals symbolic power at generator degrees for "
        "every sweep instance, exponents 2 and 3",
     criterion6},
    {7, "every staircase generator of a scaled corner scheme splits into "
        "valid lower-level factors",
     criterion7},
    {8, "rank identity, transpose equivariance, and prime/seed "
        "independence hold across the sweep",
     criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;  // 0 = all
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 2;
    }
  }
  if (selected < 0 || selected > 8) {
    std::cerr << "criterion must be between 1 and 8\n";
    return 2;
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (selected != 0 && c.id != selected) continue;
    Outcome out = c.run();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id
              << ": " << c.description;
    if (!out.detail.empty()) std::cout << " — " << out.detail;
    std::cout << "\n";
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

// Ordinary vs symbolic powers: the staircase generator family, slices of
// ordinary powers, the Euclidean-division splitting of generators, the
// end-to-end equality certificate, and the dimension-level check of the
// sum/intersection identity behind the corner-point recursion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>

#include "gridres/hilbert.hpp"
#include "gridres/mingens.hpp"
#include "gridres/powers.hpp"
#include "gridres/predictor.hpp"
#include "gridres/scheme.hpp"
#include "gridres/splitting.hpp"

using namespace gridres;

namespace {

uint32_t dot_mod(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y,
                 const Fp& fp) {
  uint64_t acc = 0;
  for (size_t i = 0; i < x.size(); ++i)
    acc += static_cast<uint64_t>(x[i]) * y[i];
  return fp.reduce(acc);
}

}  // namespace

TEST_CASE("staircase constraints at scale one and scale m") {
  // (m11, m12, m21) = (2, 4, 3), twice the multiplicities.
  CHECK_FALSE(satisfies_constraints({4, 3, 0, 4}, 2, 4, 3, 2));  // a2+b1 = 3 < 6
  CHECK(satisfies_constraints({4, 6, 2, 4}, 2, 4, 3, 2));
  CHECK(satisfies_constraints({2, 3, 1, 2}, 2, 4, 3, 1));
  CHECK(satisfies_constraints({0, 0, 0, 0}, 0, 0, 0, 1));
  CHECK_FALSE(satisfies_constraints({0, 0, 0, 0}, 0, 1, 0, 1));
}

TEST_CASE("staircase family: hand-checked antichains") {
  CHECK(staircase_family(0, 0, 0) == TupleSet{{0, 0, 0, 0}});
  // Two disjoint reduced blocks: all four mixed products are minimal.
  CHECK(staircase_family(0, 1, 1) ==
        TupleSet{{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}});
  // Three reduced corner points: the classical three-generator family.
  CHECK(staircase_family(1, 1, 1) ==
        TupleSet{{0, 0, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}});
}

TEST_CASE("staircase family: antichain and covering properties") {
  int m11 = 2, m12 = 4, m21 = 3;
  TupleSet fam = staircase_family(m11, m12, m21);
  for (const ExpTuple& t : fam) CHECK(satisfies_constraints(t, m11, m12, m21));
  for (const ExpTuple& s : fam)
    for (const ExpTuple& t : fam)
      if (!(s == t)) CHECK_FALSE(s.leq(t));
  // Every satisfying tuple in the search box dominates a family member.
  for (int a1 = 0; a1 <= std::max(m11, m12); ++a1)
    for (int a2 = 0; a2 <= m21; ++a2)
      for (int b1 = 0; b1 <= std::max(m11, m21); ++b1)
        for (int b2 = 0; b2 <= m12; ++b2) {
          ExpTuple t{a1, a2, b1, b2};
          if (!satisfies_constraints(t, m11, m12, m21)) continue;
          CHECK(std::any_of(fam.begin(), fam.end(),
                            [&](const ExpTuple& f) { return f.leq(t); }));
        }
}

TEST_CASE("euclidean splitting of power-constraint tuples") {
  // Exact division, no carries.
  CHECK(split_factor({4, 6, 2, 4}, 2, 2, 4, 3) ==
        std::pair<ExpTuple, ExpTuple>({2, 3, 1, 2}, {2, 3, 1, 2}));
  // Remainders on the b side promote the quotient by one.
  CHECK(split_factor({1, 1, 1, 1}, 2, 1, 1, 1) ==
        std::pair<ExpTuple, ExpTuple>({0, 0, 1, 1}, {1, 1, 0, 0}));
  // Inputs violating the m-fold constraints are rejected.
  CHECK_THROWS_AS(split_factor(ExpTuple{4, 3, 0, 4}, 2, 2, 4, 3), ParamError);
}

TEST_CASE("splitting factors satisfy the split constraint levels") {
  int m11 = 2, m12 = 4, m21 = 3;
  for (int m = 2; m <= 3; ++m)
    for (const ExpTuple& g : staircase_family(m * m11, m * m12, m * m21)) {
      auto [f1, f2] = split_factor(g, m, m11, m12, m21);
      CHECK(f1 + f2 == g);
      CHECK(satisfies_constraints(f1, m11, m12, m21, 1));
      CHECK(satisfies_constraints(f2, m11, m12, m21, m - 1));
    }
}

TEST_CASE("realized family members lie in the ideal with the right degrees") {
  AciParams p{1, 1, 1, 1, 2, 4, 3};
  FieldConfig cfg;
  auto [arr, fam] = realize(p, cfg);
  CHECK(fam.size() == staircase_family(p.m11, p.m12, p.m21).size());
  FatPointGrid g = build_grid(p);
  Fp fp(cfg.prime);
  BiDegree cap{8, 8};
  ConditionSet cs(g, 1, arr, fp, cap);
  for (const FamilyMember& mem : fam) {
    BiDegree want{mem.e.a1 * p.alpha1 + mem.e.a2 * p.alpha2,
                  mem.e.b1 * p.beta1 + mem.e.b2 * p.beta2};
    CHECK(mem.poly.deg == want);
    for (const auto& row : cs.matrix_at(mem.poly.deg))
      CHECK(dot_mod(row, mem.poly.c, fp) == 0);
  }
}

TEST_CASE("first power of the family spans exactly the ideal slices") {
  AciParams p{1, 1, 1, 1, 1, 1, 1};
  FieldConfig cfg;
  auto [arr, fam] = realize(p, cfg);
  FatPointGrid g = build_grid(p);
  Fp fp(cfg.prime);
  BiDegree box{5, 5};
  ConditionSet cs(g, 1, arr, fp, box);
  HilbertTable ht(cs, box);
  for (BiDegree d : {BiDegree{2, 2}, BiDegree{3, 1}, BiDegree{4, 4}}) {
    DegreePiece piece = power_piece(fam, 1, d, fp);
    CHECK(static_cast<long long>(piece.rank) == ht.dim(d));
  }
}

TEST_CASE("square of the family spans the doubled-multiplicity slices") {
  AciParams p{1, 1, 1, 1, 1, 1, 1};
  FieldConfig cfg;
  auto [arr, fam] = realize(p, cfg);
  FatPointGrid g = build_grid(p);
  Fp fp(cfg.prime);
  BiDegree box{6, 6};
  ConditionSet cs(g, 2, arr, fp, box);
  HilbertTable ht(cs, box);
  for (BiDegree d : {BiDegree{2, 2}, BiDegree{3, 2}, BiDegree{4, 4}}) {
    DegreePiece piece = power_piece(fam, 2, d, fp);
    CHECK(static_cast<long long>(piece.rank) == ht.dim(d));
  }
}

TEST_CASE("power equality certificate on small schemes") {
  FieldConfig cfg;
  for (int m = 1; m <= 3; ++m) {
    PowerReport r = check_power_equality({1, 1, 1, 1, 1, 1, 1}, m, cfg);
    CHECK(r.m == m);
    CHECK(r.all_equal);
    CHECK_FALSE(r.lines.empty());
    for (const PowerCheckLine& ln : r.lines) {
      CHECK(ln.equal);
      CHECK(ln.dim_power == ln.dim_symbolic);
    }
  }
  CHECK(check_power_equality({1, 1, 1, 1, 0, 1, 1}, 2, cfg).all_equal);
  CHECK(check_power_equality({1, 1, 1, 1, 1, 2, 0}, 2, cfg).all_equal);
}

TEST_CASE("power equality certificate on the mixed-block scheme") {
  PowerReport r = check_power_equality({2, 1, 2, 2, 2, 4, 3}, 2, FieldConfig{});
  CHECK(r.all_equal);
  // Generator degrees arrive sorted and without duplicates.
  for (size_t i = 0; i + 1 < r.lines.size(); ++i)
    CHECK(r.lines[i].d < r.lines[i + 1].d);
}

TEST_CASE("power comparison on a plain grid scheme") {
  // The full 2x2 reduced grid is a complete intersection, so ordinary and
  // symbolic powers agree; the factors here are the oracle's own generators.
  FatPointGrid g{2, 2, {1, 1, 1, 1}};
  FieldConfig cfg;
  PowerReport r = compare_powers_on_grid(g, 2, {8, 8}, cfg);
  CHECK(r.all_equal);
  std::set<BiDegree> degs;
  for (const PowerCheckLine& ln : r.lines) degs.insert(ln.d);
  CHECK(degs == std::set<BiDegree>{{4, 0}, {2, 2}, {0, 4}});
}

TEST_CASE("sum and intersection identity of the corner-point recursion") {
  for (auto [m11, m12, m21] :
       {std::tuple{0, 0, 0}, {1, 1, 1}, {0, 2, 1}, {2, 4, 3}, {3, 3, 3}}) {
    SplitIdentityReport r = check_splitting_identity(m11, m12, m21, FieldConfig{});
    CHECK(r.all_ok);
    CHECK_FALSE(r.lines.empty());
    for (const SplitIdentityLine& ln : r.lines) {
      CHECK(ln.ok);
      CHECK(ln.dim_sum == ln.dim_ideal);
      CHECK(ln.dim_inter == ln.dim_inter_expected);
    }
  }
}

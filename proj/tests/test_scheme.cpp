// Parameter validation, grid construction, factor-swap normalization, the
// reduction step, and base-case classification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gridres/scheme.hpp"

using namespace gridres;

TEST_CASE("validation accepts the reference parameters") {
  CHECK(AciParams{2, 1, 2, 2, 2, 4, 3}.validate_message().empty());
  CHECK(AciParams{1, 1, 1, 1, 0, 0, 0}.validate_message().empty());
  CHECK_NOTHROW(AciParams{1, 1, 1, 1, 2, 4, 3}.validate());
}

TEST_CASE("validation names the offending field") {
  CHECK(AciParams{0, 1, 1, 1, 0, 0, 0}.validate_message().find("alpha1") !=
        std::string::npos);
  CHECK(AciParams{1, -1, 1, 1, 0, 0, 0}.validate_message().find("alpha2") !=
        std::string::npos);
  CHECK(AciParams{1, 1, 0, 1, 0, 0, 0}.validate_message().find("beta1") !=
        std::string::npos);
  CHECK(AciParams{1, 1, 1, 0, 0, 0, 0}.validate_message().find("beta2") !=
        std::string::npos);
  CHECK(AciParams{1, 1, 1, 1, -1, 0, 0}.validate_message().find("m11") !=
        std::string::npos);
  CHECK(AciParams{1, 1, 1, 1, 0, -2, 0}.validate_message().find("m12") !=
        std::string::npos);
  CHECK(AciParams{1, 1, 1, 1, 0, 0, -3}.validate_message().find("m21") !=
        std::string::npos);
  CHECK_THROWS_AS((AciParams{0, 1, 1, 1, 0, 0, 0}.validate()), ParamError);
}

TEST_CASE("grid of the large reference parameters") {
  FatPointGrid g = build_grid({2, 1, 2, 2, 2, 4, 3});
  REQUIRE(g.rows == 3);
  REQUIRE(g.cols == 4);
  CHECK(g.weights == std::vector<int>{2, 2, 4, 4, 2, 2, 4, 4, 3, 3, 0, 0});
}

TEST_CASE("grid of the unit-block parameters") {
  FatPointGrid g = build_grid({1, 1, 1, 1, 2, 4, 3});
  REQUIRE(g.rows == 2);
  REQUIRE(g.cols == 2);
  CHECK(g.weights == std::vector<int>{2, 4, 3, 0});
}

TEST_CASE("grid helpers: transpose, scale, condition count, zero test") {
  FatPointGrid g = build_grid({1, 1, 1, 1, 2, 4, 3});
  FatPointGrid t = g.transposed();
  CHECK(t.rows == 2);
  CHECK(t.cols == 2);
  CHECK(t.weights == std::vector<int>{2, 3, 4, 0});
  FatPointGrid s = g.scaled(2);
  CHECK(s.weights == std::vector<int>{4, 8, 6, 0});
  // sum of w(w+1)/2: 3 + 10 + 6.
  CHECK(g.condition_count() == 19);
  CHECK_FALSE(g.all_zero());
  CHECK(build_grid({1, 1, 1, 1, 0, 0, 0}).all_zero());
}

TEST_CASE("normalization swaps factors exactly when m21 > m12") {
  AciParams p{2, 1, 2, 2, 2, 3, 4};
  auto [n, rec] = normalize(p);
  CHECK(rec.transposed);
  CHECK(n == AciParams{2, 2, 2, 1, 2, 4, 3});

  AciParams q{2, 1, 2, 2, 2, 4, 3};
  auto [nq, recq] = normalize(q);
  CHECK_FALSE(recq.transposed);
  CHECK(nq == q);

  // Ties need no swap.
  auto [nt, rect] = normalize(AciParams{1, 2, 3, 1, 5, 2, 2});
  CHECK_FALSE(rect.transposed);
  CHECK(nt == AciParams{1, 2, 3, 1, 5, 2, 2});
}

TEST_CASE("factor swap is an involution and transposes the grid") {
  for (int m11 = 0; m11 <= 2; ++m11)
    for (int m12 = 0; m12 <= 2; ++m12)
      for (int m21 = 0; m21 <= 2; ++m21) {
        AciParams p{2, 1, 3, 2, m11, m12, m21};
        CHECK(transpose_of(transpose_of(p)) == p);
        CHECK(build_grid(transpose_of(p)) == build_grid(p).transposed());
      }
}

TEST_CASE("reduction step decrements the diagonal multiplicities") {
  CHECK(reduce_step({1, 1, 1, 1, 2, 4, 3}) == AciParams{1, 1, 1, 1, 1, 4, 2});
  CHECK(reduce_step({1, 1, 1, 1, 0, 4, 0}) == AciParams{1, 1, 1, 1, 0, 4, 0});
  CHECK(reduce_step({2, 1, 2, 2, 1, 2, 0}) == AciParams{2, 1, 2, 2, 0, 2, 0});
}

TEST_CASE("classification matches its defining conditions exhaustively") {
  for (int m11 = 0; m11 <= 4; ++m11)
    for (int m12 = 0; m12 <= 4; ++m12)
      for (int m21 = 0; m21 <= m12; ++m21) {
        AciParams p{1, 2, 2, 1, m11, m12, m21};
        BaseCaseTag tag = classify(p);
        if (m11 > 0 && m21 > 0)
          CHECK(tag == BaseCaseTag::GENERAL);
        else if (m21 > 0)
          CHECK(tag == BaseCaseTag::DISJOINT_CI);
        else if (m11 > 0)
          CHECK(tag == BaseCaseTag::ACM_COLUMN_BLOCKS);
        else
          CHECK(tag == BaseCaseTag::EQUAL_MU_CI);
      }
  CHECK(classify({1, 1, 1, 1, 2, 4, 3}) == BaseCaseTag::GENERAL);
  CHECK(classify({1, 1, 1, 1, 0, 4, 3}) == BaseCaseTag::DISJOINT_CI);
  CHECK(classify({1, 1, 1, 1, 3, 3, 0}) == BaseCaseTag::ACM_COLUMN_BLOCKS);
  CHECK(classify({1, 1, 1, 1, 0, 4, 0}) == BaseCaseTag::EQUAL_MU_CI);
}

TEST_CASE("classification tags have readable names") {
  CHECK(to_string(BaseCaseTag::GENERAL) == "GENERAL");
  CHECK(to_string(BaseCaseTag::DISJOINT_CI) == "DISJOINT_CI");
  CHECK(to_string(BaseCaseTag::ACM_COLUMN_BLOCKS) == "ACM_COLUMN_BLOCKS");
  CHECK(to_string(BaseCaseTag::EQUAL_MU_CI) == "EQUAL_MU_CI");
}

TEST_CASE("grid round-trip recovers parameters when unambiguous") {
  for (int a1 = 1; a1 <= 2; ++a1)
    for (int a2 = 1; a2 <= 2; ++a2)
      for (int b1 = 1; b1 <= 2; ++b1)
        for (int b2 = 1; b2 <= 2; ++b2)
          for (int m11 = 0; m11 <= 3; ++m11)
            for (int m12 = 0; m12 <= 3; ++m12)
              for (int m21 = 0; m21 <= 3; ++m21) {
                AciParams p{a1, a2, b1, b2, m11, m12, m21};
                FatPointGrid g = build_grid(p);
                auto back = params_from_grid(g);
                REQUIRE(back.has_value());
                // The grid is always reproduced.
                CHECK(build_grid(*back) == g);
                // Degenerate grids admit several decompositions (identical
                // row groups when m11 = m21 and m12 = 0, identical column
                // groups when m11 = m12 and m21 = 0, or all weights zero);
                // everywhere else the parameters themselves come back.
                bool ambiguous = (m11 == m21 && m12 == 0) ||
                                 (m11 == m12 && m21 == 0) ||
                                 (m11 == 0 && m12 == 0 && m21 == 0);
                if (!ambiguous) CHECK(*back == p);
              }
}

TEST_CASE("grid recovery rejects non-block grids") {
  CHECK_FALSE(params_from_grid({2, 2, {1, 1, 1, 1}}).has_value());
  CHECK_FALSE(params_from_grid({2, 3, {1, 2, 3, 4, 5, 6}}).has_value());
  CHECK_FALSE(params_from_grid({1, 2, {1, 0}}).has_value());  // one row only
  // A 3x3 grid whose top-right block is not constant.
  CHECK_FALSE(params_from_grid({3, 3, {1, 2, 2, 1, 2, 3, 1, 1, 0}}).has_value());
}

TEST_CASE("support, column-sum, and dispatching tuples") {
  // All blocks occupied: rows have 4, 4, and beta1 = 2 support points.
  FatPointGrid g = build_grid({2, 1, 2, 2, 1, 1, 1});
  CHECK(support_tuple(g) == std::vector<int>{4, 4, 2});
  CHECK(alpha_tuple(g) == std::vector<int>{4, 4, 2});  // reduced grid

  FatPointGrid empty = build_grid({1, 1, 1, 1, 0, 0, 0});
  CHECK(support_tuple(empty).empty());
  CHECK(alpha_tuple(empty).empty());

  FatPointGrid one{1, 1, {1}};
  CHECK(support_tuple(one) == std::vector<int>{1});

  // Fat grid: column sums, sorted non-increasing.
  FatPointGrid f = build_grid({1, 1, 1, 1, 2, 4, 3});  // [[2,4],[3,0]]
  CHECK(gamma_tuple(f) == std::vector<int>{5, 4});
  CHECK(alpha_tuple(f) == std::vector<int>{5, 4});  // fat grid dispatches here
}

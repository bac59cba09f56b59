#include "gridres/scheme.hpp"

#include <algorithm>
#include <sstream>

namespace gridres {

std::string AciParams::validate_message() const {
  auto positive = [](const char* name, int v) -> std::string {
    if (v >= 1) return {};
    std::ostringstream os;
    os << name << " must be >= 1 (got " << v << ")";
    return os.str();
  };
  auto nonneg = [](const char* name, int v) -> std::string {
    if (v >= 0) return {};
    std::ostringstream os;
    os << name << " must be >= 0 (got " << v << ")";
    return os.str();
  };
  for (const auto& [name, v] : {std::pair{"alpha1", alpha1},
                                std::pair{"alpha2", alpha2},
                                std::pair{"beta1", beta1},
                                std::pair{"beta2", beta2}}) {
    if (auto msg = positive(name, v); !msg.empty()) return msg;
  }
  for (const auto& [name, v] : {std::pair{"m11", m11}, std::pair{"m12", m12},
                                std::pair{"m21", m21}}) {
    if (auto msg = nonneg(name, v); !msg.empty()) return msg;
  }
  return {};
}

void AciParams::validate() const {
  if (auto msg = validate_message(); !msg.empty()) throw ParamError(msg);
}

FatPointGrid FatPointGrid::transposed() const {
  FatPointGrid t;
  t.rows = cols;
  t.cols = rows;
  t.weights.assign(weights.size(), 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

FatPointGrid FatPointGrid::scaled(int m) const {
  FatPointGrid s = *this;
  for (int& w : s.weights) w *= m;
  return s;
}

long long FatPointGrid::condition_count() const {
  long long n = 0;
  for (int w : weights) n += static_cast<long long>(w) * (w + 1) / 2;
  return n;
}

bool FatPointGrid::all_zero() const {
  return std::all_of(weights.begin(), weights.end(),
                     [](int w) { return w == 0; });
}

std::string to_string(BaseCaseTag tag) {
  switch (tag) {
    case BaseCaseTag::ACM_COLUMN_BLOCKS: return "ACM_COLUMN_BLOCKS";
    case BaseCaseTag::DISJOINT_CI: return "DISJOINT_CI";
    case BaseCaseTag::EQUAL_MU_CI: return "EQUAL_MU_CI";
    case BaseCaseTag::GENERAL: return "GENERAL";
  }
  return "?";
}

FatPointGrid build_grid(const AciParams& params) {
  params.validate();
  FatPointGrid g;
  g.rows = params.alpha1 + params.alpha2;
  g.cols = params.beta1 + params.beta2;
  g.weights.assign(static_cast<size_t>(g.rows) * g.cols, 0);
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) {
      bool top = i < params.alpha1;
      bool left = j < params.beta1;
      int w = top ? (left ? params.m11 : params.m12) : (left ? params.m21 : 0);
      g.at(i, j) = w;
    }
  }
  return g;
}

std::optional<AciParams> params_from_grid(const FatPointGrid& grid) {
  if (grid.rows < 2 || grid.cols < 2) return std::nullopt;

  // Candidate block splits; scan returns the first (alpha1, beta1) whose
  // four-block reading reproduces the grid, preferring the widest first
  // blocks so that degenerate grids decompose canonically.
  for (int a1 = grid.rows - 1; a1 >= 1; --a1) {
    for (int b1 = grid.cols - 1; b1 >= 1; --b1) {
      int m11 = grid.at(0, 0);
      int m12 = grid.at(0, grid.cols - 1);
      int m21 = grid.at(grid.rows - 1, 0);
      AciParams p{a1, grid.rows - a1, b1, grid.cols - b1, m11, m12, m21};
      if (build_grid(p) == grid) return p;
    }
  }
  return std::nullopt;
}

AciParams reduce_step(const AciParams& params) {
  AciParams r = params;
  r.m11 = pos(r.m11 - 1);
  r.m21 = pos(r.m21 - 1);
  return r;
}

AciParams transpose_of(const AciParams& params) {
  return AciParams{params.beta1, params.beta2, params.alpha1, params.alpha2,
                   params.m11, params.m21, params.m12};
}

std::pair<AciParams, NormalizationRecord> normalize(const AciParams& params) {
  params.validate();
  if (params.is_normalized()) return {params, NormalizationRecord{false}};
  return {transpose_of(params), NormalizationRecord{true}};
}

BaseCaseTag classify(const AciParams& params) {
  if (params.m11 > 0 && params.m21 > 0) return BaseCaseTag::GENERAL;
  if (params.m21 > 0) return BaseCaseTag::DISJOINT_CI;
  if (params.m11 > 0) return BaseCaseTag::ACM_COLUMN_BLOCKS;
  return BaseCaseTag::EQUAL_MU_CI;
}

std::vector<int> support_tuple(const FatPointGrid& grid) {
  std::vector<int> t;
  for (int i = 0; i < grid.rows; ++i) {
    int n = 0;
    for (int j = 0; j < grid.cols; ++j)
      if (grid.at(i, j) > 0) ++n;
    if (n > 0) t.push_back(n);
  }
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

std::vector<int> gamma_tuple(const FatPointGrid& grid) {
  std::vector<int> t;
  for (int j = 0; j < grid.cols; ++j) {
    int s = 0;
    for (int i = 0; i < grid.rows; ++i) s += grid.at(i, j);
    if (s > 0) t.push_back(s);
  }
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

std::vector<int> alpha_tuple(const FatPointGrid& grid) {
  bool reduced = std::all_of(grid.weights.begin(), grid.weights.end(),
                             [](int w) { return w == 0 || w == 1; });
  return reduced ? support_tuple(grid) : gamma_tuple(grid);
}

}  // namespace gridres

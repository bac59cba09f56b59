#include "gridres/echelon.hpp"

#include <cassert>

namespace gridres {

Echelon::Echelon(const Fp& fp, size_t ncols, ExecMode mode)
    : fp_(fp), ncols_(ncols), mode_(mode), row_of_pivot_col_(ncols, -1),
      acc_(ncols, 0) {}

bool Echelon::insert(const std::vector<uint32_t>& v) {
  assert(v.size() == ncols_);
  return insert(v.data(), v.size());
}

bool Echelon::insert(const uint32_t* v, size_t n) {
  assert(n == ncols_);
  (void)n;
  const uint32_t p = fp_.p();
  for (size_t i = 0; i < ncols_; ++i) acc_[i] = v[i];

  // Sweep columns left to right; reduce against the unique pivot row per
  // occupied column. Products of values < 2^15 accumulate exactly in the
  // 64-bit lanes (at most ~2^15 reductions of magnitude < 2^30 each).
  for (size_t c = 0; c < ncols_; ++c) {
    uint32_t val = static_cast<uint32_t>(acc_[c] % p);
    if (val == 0) continue;
    int r = row_of_pivot_col_[c];
    if (r < 0) {
      // New pivot: normalize the remainder so the leading coefficient is 1.
      std::vector<uint32_t> row(ncols_, 0);
      uint32_t scale = fp_.inv(val);
      for (size_t i = c; i < ncols_; ++i)
        row[i] = fp_.mul(static_cast<uint32_t>(acc_[i] % p), scale);
      row_of_pivot_col_[c] = static_cast<int>(rows_.size());
      pivot_col_of_row_.push_back(static_cast<int>(c));
      rows_.push_back(std::move(row));
      return true;
    }
    const uint32_t coef = p - val;  // acc += coef * row  ==  acc -= val * row
    const uint32_t* row = rows_[static_cast<size_t>(r)].data();
    uint64_t* acc = acc_.data();
    if (mode_ == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
      for (size_t i = c; i < ncols_; ++i)
        acc[i] += static_cast<uint64_t>(coef) * row[i];
    } else {
      for (size_t i = c; i < ncols_; ++i)
        acc[i] += static_cast<uint64_t>(coef) * row[i];
    }
  }
  return false;
}

size_t rank_of(const DenseMatrix& rows, size_t ncols, const Fp& fp,
               ExecMode mode) {
  Echelon e(fp, ncols, mode);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<int> rref_in_place(DenseMatrix& m, size_t ncols, const Fp& fp) {
  std::vector<int> pivots;
  size_t nr = m.size();
  size_t lead_row = 0;
  for (size_t c = 0; c < ncols && lead_row < nr; ++c) {
    size_t sel = lead_row;
    while (sel < nr && m[sel][c] == 0) ++sel;
    if (sel == nr) continue;
    std::swap(m[sel], m[lead_row]);
    uint32_t scale = fp.inv(m[lead_row][c]);
    for (size_t i = c; i < ncols; ++i)
      m[lead_row][i] = fp.mul(m[lead_row][i], scale);
    for (size_t r = 0; r < nr; ++r) {
      if (r == lead_row) continue;
      uint32_t val = m[r][c];
      if (val == 0) continue;
      uint32_t coef = fp.p() - val;
      for (size_t i = c; i < ncols; ++i)
        m[r][i] = fp.reduce(m[r][i] + static_cast<uint64_t>(coef) * m[lead_row][i]);
    }
    pivots.push_back(static_cast<int>(c));
    ++lead_row;
  }
  return pivots;
}

DenseMatrix nullspace(const DenseMatrix& rows, size_t ncols, const Fp& fp) {
  DenseMatrix m = rows;
  std::vector<int> pivots = rref_in_place(m, ncols, fp);
  std::vector<int> pivot_row_of_col(ncols, -1);
  for (size_t r = 0; r < pivots.size(); ++r)
    pivot_row_of_col[static_cast<size_t>(pivots[r])] = static_cast<int>(r);

  DenseMatrix basis;
  for (size_t c = 0; c < ncols; ++c) {
    if (pivot_row_of_col[c] >= 0) continue;
    std::vector<uint32_t> v(ncols, 0);
    v[c] = 1;
    for (size_t pc = 0; pc < ncols; ++pc) {
      int r = pivot_row_of_col[pc];
      if (r >= 0) v[pc] = fp.neg(m[static_cast<size_t>(r)][c]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LeftNullspace left_nullspace(const DenseMatrix& m, size_t ncols, const Fp& fp) {
  size_t k = m.size();
  DenseMatrix aug(k);
  for (size_t r = 0; r < k; ++r) {
    aug[r].assign(ncols + k, 0);
    std::copy(m[r].begin(), m[r].end(), aug[r].begin());
    aug[r][ncols + r] = 1;
  }
  // Eliminate with pivots restricted to the first ncols columns.
  size_t lead_row = 0;
  for (size_t c = 0; c < ncols && lead_row < k; ++c) {
    size_t sel = lead_row;
    while (sel < k && aug[sel][c] == 0) ++sel;
    if (sel == k) continue;
    std::swap(aug[sel], aug[lead_row]);
    uint32_t scale = fp.inv(aug[lead_row][c]);
    for (size_t i = c; i < ncols + k; ++i)
      aug[lead_row][i] = fp.mul(aug[lead_row][i], scale);
    for (size_t r = lead_row + 1; r < k; ++r) {
      uint32_t val = aug[r][c];
      if (val == 0) continue;
      uint32_t coef = fp.p() - val;
      for (size_t i = c; i < ncols + k; ++i)
        aug[r][i] =
            fp.reduce(aug[r][i] + static_cast<uint64_t>(coef) * aug[lead_row][i]);
    }
    ++lead_row;
  }
  LeftNullspace out;
  out.rank = lead_row;
  for (size_t r = lead_row; r < k; ++r) {
    // Rows below the pivot block have zero image part; their tails are
    // independent left-nullspace vectors.
    out.basis.emplace_back(aug[r].begin() + static_cast<long>(ncols),
                           aug[r].end());
  }
  return out;
}

}  // namespace gridres

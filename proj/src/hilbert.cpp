#include "gridres/hilbert.hpp"

#include <algorithm>
#include <cassert>

namespace gridres {

ConditionSet::ConditionSet(const FatPointGrid& grid, int mscale,
                           const LineArrangement& arr, const Fp& fp,
                           BiDegree degree_cap)
    : fp_(fp), cap_(degree_cap),
      binom_(fp, std::max(degree_cap.a, degree_cap.b)) {
  if (mscale < 1) throw ParamError("multiplicity scale must be >= 1");
  assert(static_cast<int>(arr.h.size()) >= grid.rows &&
         static_cast<int>(arr.v.size()) >= grid.cols);
  for (int i = 0; i < grid.rows; ++i) {
    for (int j = 0; j < grid.cols; ++j) {
      int mult = mscale * grid.at(i, j);
      if (mult == 0) continue;
      PointData pd;
      pd.row = i;
      pd.col = j;
      pd.h = arr.h[static_cast<size_t>(i)];
      pd.v = arr.v[static_cast<size_t>(j)];
      pd.mult = mult;
      pd.hpow.assign(static_cast<size_t>(cap_.a) + 1, 1);
      for (int s = 1; s <= cap_.a; ++s)
        pd.hpow[static_cast<size_t>(s)] =
            fp_.mul(pd.hpow[static_cast<size_t>(s) - 1], pd.h);
      pd.vpow.assign(static_cast<size_t>(cap_.b) + 1, 1);
      for (int t = 1; t <= cap_.b; ++t)
        pd.vpow[static_cast<size_t>(t)] =
            fp_.mul(pd.vpow[static_cast<size_t>(t) - 1], pd.v);
      points_.push_back(std::move(pd));
    }
  }
}

int ConditionSet::mult_at(int i, int j) const {
  for (const PointData& pt : points_)
    if (pt.row == i && pt.col == j) return pt.mult;
  return 0;
}

DenseMatrix ConditionSet::matrix_at(BiDegree d) const {
  assert(d.a <= cap_.a && d.b <= cap_.b);
  size_t ncols = static_cast<size_t>(d.a + 1) * (d.b + 1);
  DenseMatrix rows;
  for (const PointData& pt : points_) {
    for (int u = 0; u <= std::min(d.a, pt.mult - 1); ++u) {
      for (int t = 0; t <= std::min(d.b, pt.mult - 1 - u); ++t) {
        // Divided partial of order (u, t) at (h, v), chart x0 = x2 = 1:
        // entry on monomial (s, tau) is C(s,u) h^(s-u) C(tau,t) v^(tau-t).
        std::vector<uint32_t> row(ncols, 0);
        for (int s = u; s <= d.a; ++s) {
          uint32_t xval = fp_.mul(binom_.at(s, u),
                                  pt.hpow[static_cast<size_t>(s - u)]);
          if (xval == 0) continue;
          for (int tau = t; tau <= d.b; ++tau) {
            uint32_t zval = fp_.mul(binom_.at(tau, t),
                                    pt.vpow[static_cast<size_t>(tau - t)]);
            row[static_cast<size_t>(s) * (d.b + 1) + tau] = fp_.mul(xval, zval);
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

DenseMatrix ConditionSet::ideal_basis_at(BiDegree d) const {
  size_t ncols = static_cast<size_t>(d.a + 1) * (d.b + 1);
  return nullspace(matrix_at(d), ncols, fp_);
}

HilbertTable::HilbertTable(const ConditionSet& cs, BiDegree box, ExecMode mode)
    : box_(box) {
  if (box.a > cs.degree_cap().a || box.b > cs.degree_cap().b)
    throw ParamError("hilbert box exceeds the condition-set degree cap");
  dims_.assign(static_cast<size_t>(box.a + 1) * (box.b + 1), 0);
  const Fp& fp = cs.fp_;
  const BinomialTable& binom = cs.binom_;

  auto run_row = [&](int b) {
    // Conditions alive anywhere in this table row: z-order at most b,
    // x-order at most box.a.
    struct Cond {
      const ConditionSet::PointData* pt;
      int u, t;
    };
    std::vector<Cond> conds;
    for (const auto& pt : cs.points_)
      for (int u = 0; u <= std::min(box.a, pt.mult - 1); ++u)
        for (int t = 0; t <= std::min(b, pt.mult - 1 - u); ++t)
          conds.push_back({&pt, u, t});
    const size_t nc = conds.size();
    std::vector<long long> ranks(static_cast<size_t>(box.a) + 1,
                                 static_cast<long long>(nc));
    if (nc > 0) {
      Echelon ech(fp, nc, ExecMode::Serial);
      std::vector<uint32_t> col(nc);
      for (int s = 0; s <= box.a; ++s) {
        for (int tau = 0; tau <= b; ++tau) {
          for (size_t r = 0; r < nc; ++r) {
            const Cond& cd = conds[r];
            if (cd.u > s || cd.t > tau) {
              col[r] = 0;
              continue;
            }
            uint32_t xv = fp.mul(binom.at(s, cd.u),
                                 cd.pt->hpow[static_cast<size_t>(s - cd.u)]);
            uint32_t zv = fp.mul(binom.at(tau, cd.t),
                                 cd.pt->vpow[static_cast<size_t>(tau - cd.t)]);
            col[r] = fp.mul(xv, zv);
          }
          ech.insert(col);
        }
        ranks[static_cast<size_t>(s)] = static_cast<long long>(ech.rank());
        if (ech.rank() == nc) break;  // saturated: later prefixes keep rank nc
      }
    }
    for (int a = 0; a <= box.a; ++a)
      dims_[static_cast<size_t>(a) * (box.b + 1) + b] =
          static_cast<long long>(a + 1) * (b + 1) -
          ranks[static_cast<size_t>(a)];
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b <= box.b; ++b) run_row(b);
  } else {
    for (int b = 0; b <= box.b; ++b) run_row(b);
  }
}

long long HilbertTable::dim(BiDegree d) const {
  if (d.a < 0 || d.b < 0) return 0;
  if (d.a > box_.a || d.b > box_.b)
    throw OracleError("hilbert table queried outside its box");
  return dims_[static_cast<size_t>(d.a) * (box_.b + 1) + d.b];
}

long long hilbert_dim_symbolic(const FatPointGrid& grid, int m, BiDegree d,
                               const LineArrangement& arr, const Fp& fp) {
  ConditionSet cs(grid, m, arr, fp, d);
  DenseMatrix rows = cs.matrix_at(d);
  size_t ncols = static_cast<size_t>(d.a + 1) * (d.b + 1);
  return static_cast<long long>(ncols) - rank_of(rows, ncols, fp);
}

}  // namespace gridres

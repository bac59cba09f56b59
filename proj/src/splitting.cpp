#include "gridres/splitting.hpp"

#include "gridres/bipoly.hpp"
#include "gridres/echelon.hpp"
#include "gridres/hilbert.hpp"
#include "gridres/predictor.hpp"
#include "gridres/scheme.hpp"

namespace gridres {

SplitIdentityReport check_splitting_identity(int m11, int m12, int m21,
                                             const FieldConfig& cfg) {
  if (m11 < 0 || m12 < 0 || m21 < 0)
    throw ParamError("multiplicities must be nonnegative");
  validate_prime(cfg.prime);
  Fp fp(cfg.prime);

  AciParams unit_blocks{1, 1, 1, 1, m11, m12, m21};
  BiDegree box = verification_box(predict_table(unit_blocks).first);
  LineArrangement arr = make_arrangement(2, 2, cfg);

  const int e = pos(m12 - m11);
  const int hdeg = m11 + m21;
  FatPointGrid gridW{2, 2, {m11, m12, m21, 0}};
  FatPointGrid gridW1{2, 2, {pos(m11 - 1), m12, pos(m21 - 1), 0}};
  FatPointGrid grid12{2, 2, {0, e, 0, 0}};

  ConditionSet csW(gridW, 1, arr, fp, box);
  HilbertTable tW(csW, box);
  ConditionSet csW1(gridW1, 1, arr, fp, box);
  ConditionSet cs12(grid12, 1, arr, fp, box);
  HilbertTable t12(cs12, box);

  BiPoly v1 = zform_from_roots({{arr.v[0], 1}}, fp);
  BiPoly hfac = xform_from_roots({{arr.h[0], m11}, {arr.h[1], m21}}, fp);

  SplitIdentityReport report;
  report.all_ok = true;
  for (int a = 0; a <= box.a; ++a) {
    for (int b = 0; b <= box.b; ++b) {
      BiDegree d{a, b};
      SplitIdentityLine line;
      line.d = d;
      line.dim_ideal = tW.dim(d);

      DenseMatrix stacked;
      long long dim_a = 0, dim_b = 0;
      if (b >= 1) {
        for (std::vector<uint32_t>& vec : csW1.ideal_basis_at({a, b - 1})) {
          BiPoly f{BiDegree{a, b - 1}, std::move(vec)};
          stacked.push_back(multiply(f, v1, fp).c);
          ++dim_a;
        }
      }
      if (a >= hdeg) {
        for (std::vector<uint32_t>& vec : cs12.ideal_basis_at({a - hdeg, b})) {
          BiPoly f{BiDegree{a - hdeg, b}, std::move(vec)};
          stacked.push_back(multiply(f, hfac, fp).c);
          ++dim_b;
        }
      }
      size_t ncols = static_cast<size_t>(a + 1) * (b + 1);
      long long rank = static_cast<long long>(rank_of(stacked, ncols, fp));

      line.dim_sum = rank;
      line.dim_inter = dim_a + dim_b - rank;
      line.dim_inter_expected = t12.dim({a - hdeg, b - 1});
      line.ok = (line.dim_sum == line.dim_ideal) &&
                (line.dim_inter == line.dim_inter_expected);
      report.all_ok = report.all_ok && line.ok;
      report.lines.push_back(line);
    }
  }
  return report;
}

}  // namespace gridres

#include "gridres/predictor.hpp"

#include <algorithm>
#include <cassert>

namespace gridres {

BettiTable resolve_single_fat_point(int m) {
  if (m < 0) throw ParamError("multiplicity must be >= 0");
  if (m == 0) return BettiTable::unit();
  BettiTable t;
  for (int i = 0; i <= m; ++i) t.add(0, {m - i, i});
  for (int i = 1; i <= m; ++i) t.add(1, {m + 1 - i, i});
  return t;
}

BettiTable resolve_ci_column_blocks(int alpha, int beta1, int beta2, int m11,
                                    int m12) {
  if (alpha < 1 || beta1 < 1 || beta2 < 1)
    throw ParamError("block sizes must be >= 1");
  if (m11 < 0 || m12 < 0) throw ParamError("multiplicities must be >= 0");
  if (m11 == 0 && m12 == 0) return BettiTable::unit();
  int M = std::max(m11, m12);
  BettiTable t;
  for (int i = 0; i <= M; ++i)
    t.add(0, {alpha * i, beta1 * pos(m11 - i) + beta2 * pos(m12 - i)});
  for (int i = 1; i <= M; ++i)
    t.add(1, {alpha * i, beta1 * pos(m11 - i + 1) + beta2 * pos(m12 - i + 1)});
  return t;
}

BettiTable resolve_ci_homogeneous(int alpha, int beta, int m) {
  if (alpha < 1 || beta < 1 || m < 1)
    throw ParamError("homogeneous CI needs alpha, beta, m >= 1");
  BettiTable t;
  for (int i = 0; i <= m; ++i) t.add(0, {i * alpha, (m - i) * beta});
  for (int i = 0; i < m; ++i) t.add(1, {(i + 1) * alpha, (m - i) * beta});
  return t;
}

BettiTable resolve_two_fat_points(int m12, int m21) {
  if (m12 < 0 || m21 < 0) throw ParamError("multiplicities must be >= 0");
  if (m21 > m12) throw ParamError("expects m21 <= m12 (normalize first)");
  if (m12 == 0) return BettiTable::unit();
  BettiTable t;
  int s = m12 + m21;
  for (int a = 0; a <= s; ++a) t.add(0, {a, s - a}, std::min({a, s - a, m21}) + 1);
  for (int a = 1; a <= s; ++a) {
    int b = s + 1 - a;
    if (b < 1) continue;
    t.add(1, {a, b},
          std::min({a, b - 1, m21}) + std::min({a - 1, b, m21}) + 1);
  }
  for (int a = 2; a <= s; ++a) {
    int b = s + 2 - a;
    if (b < 2) continue;
    if (int mult = std::min({a - 1, b - 1, m21}); mult > 0) t.add(2, {a, b}, mult);
  }
  return t;
}

DegreeSet aset_w(int k, int m11, int m12, int m21) {
  int e = pos(m12 - m11);
  int s = m11 + m21 + e + k;
  int blo = k == 0 ? 0 : k;           // 0, 1, 2
  int bhi = k == 2 ? e + 1 : e;       // e, e, e+1
  DegreeSet out;
  for (int b = blo; b <= bhi; ++b) out.push_back({s - b, b});
  return out;
}

BettiTable resolve_three_points(int m11, int m12, int m21) {
  if (m21 > m12) throw ParamError("expects m21 <= m12 (normalize first)");
  if (m11 == 0) return resolve_two_fat_points(m12, m21);
  if (m21 == 0) return resolve_ci_column_blocks(1, 1, 1, m11, m12);
  BettiTable prev =
      resolve_three_points(m11 - 1, m12, m21 - 1).shifted({0, 1});
  BettiTable t = prev;
  int e = pos(m12 - m11);
  for (BiDegree d : aset_w(0, m11, m12, m21)) t.add(0, d);
  for (BiDegree d : aset_w(1, m11, m12, m21)) t.add(1, d, 2);
  t.add(1, {m11 + m21, e + 1});
  for (BiDegree d : aset_w(2, m11, m12, m21)) t.add(2, d);
  return t;
}

TupleSet dset(int k, int m12, int m21) {
  if (m12 < 0 || m21 < 0) throw ParamError("multiplicities must be >= 0");
  TupleSet out;
  auto box_scan = [&](int sum_ad, int sum_bc) {
    for (int a = 0; a <= m12; ++a) {
      int d = sum_ad - a;
      if (d < 0 || d > m12) continue;
      for (int b = 0; b <= m21; ++b) {
        int c = sum_bc - b;
        if (c < 0 || c > m21) continue;
        out.push_back({a, b, c, d});
      }
    }
  };
  switch (k) {
    case 0: box_scan(m12, m21); break;
    case 1:
      box_scan(m12 + 1, m21);
      box_scan(m12, m21 + 1);
      break;
    default: box_scan(m12 + 1, m21 + 1); break;
  }
  return out;
}

namespace {

BettiTable table_from_tuples(int alpha1, int alpha2, int beta1, int beta2,
                             const TupleSet& t0, const TupleSet& t1,
                             const TupleSet& t2) {
  auto image = [&](const ExpTuple& t) -> BiDegree {
    return {t.a1 * alpha1 + t.a2 * alpha2, t.b1 * beta1 + t.b2 * beta2};
  };
  BettiTable t;
  for (const ExpTuple& e : t0) t.add(0, image(e));
  for (const ExpTuple& e : t1) t.add(1, image(e));
  for (const ExpTuple& e : t2) t.add(2, image(e));
  return t;
}

}  // namespace

BettiTable resolve_disjoint_ci(int alpha1, int alpha2, int beta1, int beta2,
                               int m12, int m21) {
  if (alpha1 < 1 || alpha2 < 1 || beta1 < 1 || beta2 < 1)
    throw ParamError("block sizes must be >= 1");
  if (m12 == 0 && m21 == 0) return BettiTable::unit();
  // Tuple coordinates (a,b,c,d) put a,d on the m12-side blocks (alpha1,
  // beta2) and b,c on the m21-side blocks (alpha2, beta1).
  return table_from_tuples(alpha1, alpha2, beta1, beta2, dset(0, m12, m21),
                           dset(1, m12, m21), dset(2, m12, m21));
}

DegreeSet aset_z(int k, const AciParams& params) {
  const auto& p = params;
  int e = pos(p.m12 - p.m11);
  DegreeSet out;
  if (k == 0) {
    for (int i = 0; i <= e; ++i)
      out.push_back({p.alpha1 * (p.m11 + i) + p.alpha2 * p.m21,
                     (e - i) * p.beta2});
  } else {
    for (int i = 0; i + 1 <= e; ++i)
      out.push_back({p.alpha1 * (p.m11 + i + 1) + p.alpha2 * p.m21,
                     (e - i) * p.beta2});
  }
  return out;
}

BettiTable resolve_fat_aci(const AciParams& params) {
  params.validate();
  if (!params.is_normalized())
    throw ParamError("expects normalized params (m21 <= m12)");
  switch (classify(params)) {
    case BaseCaseTag::EQUAL_MU_CI:
      if (params.m12 == 0) return BettiTable::unit();
      return resolve_ci_homogeneous(params.alpha1, params.beta2, params.m12);
    case BaseCaseTag::ACM_COLUMN_BLOCKS:
      return resolve_ci_column_blocks(params.alpha1, params.beta1,
                                      params.beta2, params.m11, params.m12);
    case BaseCaseTag::DISJOINT_CI:
      return resolve_disjoint_ci(params.alpha1, params.alpha2, params.beta1,
                                 params.beta2, params.m12, params.m21);
    case BaseCaseTag::GENERAL:
      break;
  }
  BettiTable lower =
      resolve_fat_aci(reduce_step(params)).shifted({0, params.beta1});
  BettiTable t = lower;
  DegreeSet a0 = aset_z(0, params);
  DegreeSet a1 = aset_z(1, params);
  for (BiDegree d : a0) t.add(0, d);
  for (BiDegree d : a0) t.add(1, d + BiDegree{0, params.beta1});
  for (BiDegree d : a1) t.add(1, d);
  for (BiDegree d : a1) t.add(2, d + BiDegree{0, params.beta1});
  return t;
}

std::pair<BettiTable, NormalizationRecord> predict_table(
    const AciParams& params) {
  auto [norm, rec] = normalize(params);
  BettiTable t = resolve_fat_aci(norm);
  if (rec.transposed) t = t.transposed();
  return {t, rec};
}

TupleSet bset(int k, int n, int m) {
  if (n < 0 || m < 0) throw ParamError("multiplicities must be >= 0");
  if (n > m) throw ParamError("expects n <= m (normalize first)");
  TupleSet out;
  switch (k) {
    case 0:
      for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= std::min(p, n); ++q)
          out.push_back({p, q, n - q, m - p});
      break;
    case 1:
      for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= std::min(p - 1, n); ++q)
          out.push_back({p, q, n - q, m + 1 - p});
      for (int p = 0; p <= m; ++p)
        for (int q = 1; q <= std::min(p, n); ++q)
          out.push_back({p, q, n + 1 - q, m - p});
      break;
    default:
      for (int p = 0; p <= m; ++p)
        for (int q = 1; q <= std::min(p - 1, n); ++q)
          out.push_back({p, q, n + 1 - q, m + 1 - p});
      break;
  }
  return out;
}

BettiTable resolve_equal_multiplicity(const AciParams& params) {
  params.validate();
  if (params.m11 != params.m21)
    throw ParamError("expects m11 == m21");
  if (params.m21 > params.m12)
    throw ParamError("expects normalized params (m21 <= m12)");
  int n = params.m11;
  int m = params.m12;
  if (n == 0 && m == 0) return BettiTable::unit();
  return table_from_tuples(params.alpha1, params.alpha2, params.beta1,
                           params.beta2, bset(0, n, m), bset(1, n, m),
                           bset(2, n, m));
}

BettiTable resolve_homogeneous_aci(const AciParams& blocks, int m) {
  AciParams p = blocks;
  p.m11 = p.m12 = p.m21 = m;
  return resolve_equal_multiplicity(p);
}

long long dim_ring(int s, int t) {
  if (s < 0 || t < 0) return 0;
  return static_cast<long long>(s + 1) * (t + 1);
}

long long euler_hilbert(const BettiTable& table, BiDegree d) {
  long long v = 0;
  for (int k = 0; k < 3; ++k) {
    long long sign = k == 1 ? -1 : 1;
    for (const auto& [s, m] : table.layer(k))
      v += sign * m * dim_ring(d.a - s.a, d.b - s.b);
  }
  return v;
}

BiDegree verification_box(const BettiTable& table) {
  return table.max_shift() + BiDegree{2, 2};
}

}  // namespace gridres

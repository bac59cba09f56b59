// Closed-form and recursive predictions of minimal bigraded free resolutions
// (Betti tables) for grid-supported fat point schemes, purely combinatorial:
// base-case formulas, the mapping-cone recursion, the equal-multiplicity
// tuple sets, and the Hilbert-function evaluation of a predicted table.
#ifndef GRIDRES_PREDICTOR_HPP
#define GRIDRES_PREDICTOR_HPP

#include "gridres/betti_table.hpp"
#include "gridres/scheme.hpp"
#include "gridres/types.hpp"

namespace gridres {

/// Resolution of the m-th power of one point's ideal:
/// beta0 = {(m-t, t): t=0..m}, beta1 = {(m+1-t, t): t=1..m}, beta2 empty.
/// m = 0 gives the unit table.
BettiTable resolve_single_fat_point(int m);

/// Fat points on a complete intersection supported on alpha horizontal lines
/// and beta1 + beta2 vertical lines, multiplicities m11 on the first column
/// block and m12 on the second. With M = max(m11, m12):
///   beta0 = {(alpha*t, beta1*(m11-t)+ + beta2*(m12-t)+)   : t=0..M}
///   beta1 = {(alpha*t, beta1*(m11-t+1)+ + beta2*(m12-t+1)+): t=1..M}
/// beta2 empty. m11 = m12 = 0 gives the unit table.
BettiTable resolve_ci_column_blocks(int alpha, int beta1, int beta2, int m11,
                                    int m12);

/// Homogeneous fat complete intersection of type (alpha, beta) with uniform
/// multiplicity m >= 1 (Koszul-type two-module resolution):
///   beta0 = {(i*alpha, (m-i)*beta): i=0..m}
///   beta1 = {((i+1)*alpha, (m-i)*beta): i=0..m-1}.
BettiTable resolve_ci_homogeneous(int alpha, int beta, int m);

/// Two fat points in general position with multiplicities m12 >= m21:
///   beta0(a,b) = min(a,b,m21)+1             on a+b = m12+m21, a,b >= 0
///   beta1(a,b) = min(a,b-1,m21)+min(a-1,b,m21)+1 on a+b = m12+m21+1, a,b >= 1
///   beta2(a,b) = min(a-1,b-1,m21)           on a+b = m12+m21+2, a,b >= 2.
/// m21 = 0 collapses to resolve_single_fat_point(m12).
BettiTable resolve_two_fat_points(int m12, int m21);

/// The three antidiagonal degree sets of the one-step three-point recursion,
/// with e = (m12 - m11)+:
///   k=0: {(a,b): a+b = m11+m21+e,   0 <= b <= e}
///   k=1: {(a,b): a+b = m11+m21+e+1, 1 <= b <= e}
///   k=2: {(a,b): a+b = m11+m21+e+2, 2 <= b <= e+1}.
DegreeSet aset_w(int k, int m11, int m12, int m21);

/// Three fat points (multiplicities m11, m12, m21 with m21 <= m12) at the
/// corners of the unit grid: recursion on min(m11, m21), base cases the two
/// ops above, inductive step shifting the reduced table by (0,1) and adding
/// aset_w(0) to beta0, aset_w(1) twice plus the one extra shift
/// (m11+m21, e+1) to beta1, and aset_w(2) to beta2.
BettiTable resolve_three_points(int m11, int m12, int m21);

/// The 4-tuple index sets of the disjoint-CI resolution, inside the box
/// 0 <= a,d <= m12, 0 <= b,c <= m21:
///   k=0: a+d = m12,   b+c = m21
///   k=1: (a+d = m12+1, b+c = m21) or (a+d = m12, b+c = m21+1)
///   k=2: a+d = m12+1, b+c = m21+1.
TupleSet dset(int k, int m12, int m21);

/// Disjoint union of two fat complete intersections (m11 = 0): the images of
/// dset(k) under (a,b,c,d) -> (a*alpha1 + b*alpha2, c*beta1 + d*beta2),
/// multiplicities accumulating on collisions. m12 = m21 = 0 gives the unit
/// table.
BettiTable resolve_disjoint_ci(int alpha1, int alpha2, int beta1, int beta2,
                               int m12, int m21);

/// The block-weighted antidiagonal sets of the general one-step recursion,
/// with e = (m12 - m11)+:
///   k=0: {(alpha1*(m11+i) + alpha2*m21, (e-i)*beta2): i = 0..e}
///   k=1: {(alpha1*(m11+i+1) + alpha2*m21, (e-i)*beta2): i = 0..e-1}.
DegreeSet aset_z(int k, const AciParams& params);

/// Full predicted table for normalized params (m21 <= m12): routes base
/// cases by classify() and otherwise recurses on reduce_step(params) with
/// the mapping-cone assembly
///   beta0 = aset_z(0) u L0+(0,beta1)
///   beta1 = (aset_z(0)+(0,beta1)) u aset_z(1) u L1+(0,beta1)
///   beta2 = (aset_z(1)+(0,beta1)) u L2+(0,beta1)
/// where (L0, L1, L2) is the table of the reduced params.
BettiTable resolve_fat_aci(const AciParams& params);

/// Predicted table for arbitrary valid params: normalizes first and maps the
/// bidegrees back through the recorded factor swap.
std::pair<BettiTable, NormalizationRecord> predict_table(const AciParams& params);

/// Closed-form 4-tuple index sets for the equal-multiplicity case
/// m11 = m21 = n, m12 = m with n <= m (images under the same block-weighted
/// map as dset give the table):
///   k=0: {(p, q, n-q,   m-p)  : 0 <= q <= min(p, n),   p <= m}
///   k=1: {(p, q, n-q,   m+1-p): 0 <= q <= min(p-1, n), p <= m}
///        u {(p, q, n+1-q, m-p): 1 <= q <= min(p, n),   p <= m}
///   k=2: {(p, q, n+1-q, m+1-p): 1 <= q <= min(p-1, n), p <= m}.
TupleSet bset(int k, int n, int m);

/// Table from the bset closed forms; params must have m11 = m21 <= m12.
/// Equals resolve_fat_aci on the same params.
BettiTable resolve_equal_multiplicity(const AciParams& params);

/// Homogeneous specialization m11 = m12 = m21 = m of the bset closed forms.
BettiTable resolve_homogeneous_aci(const AciParams& blocks, int m);

/// Alternating Hilbert-function value of a predicted table at bidegree d:
/// sum_k (-1)^k sum_{(a,b) in beta_k} mult * dimR(d.a-a, d.b-b) with
/// dimR(s,t) = (s+1)(t+1) for s,t >= 0 and 0 otherwise. Equals the dimension
/// of the ideal's bidegree-d slice when the table resolves the ideal.
long long euler_hilbert(const BettiTable& table, BiDegree d);

/// dimR(s,t) helper used by euler_hilbert: (s+1)(t+1) if s,t >= 0 else 0.
long long dim_ring(int s, int t);

/// Componentwise max over all shifts of the table plus a (2,2) margin: the
/// box inside which the oracle verifies the prediction.
BiDegree verification_box(const BettiTable& table);

}  // namespace gridres

#endif  // GRIDRES_PREDICTOR_HPP

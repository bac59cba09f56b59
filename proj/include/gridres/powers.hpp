// Ordinary vs symbolic powers: the product-of-lines generator family of a
// grid scheme, slices of ordinary powers spanned by m-fold products, the
// Euclidean-division splitting of a symbolic-power generator into an ideal
// member and a lower-power member, and the end-to-end equality certificate
// (dimension agreement at every minimal generator degree of the symbolic
// power, which suffices because the ordinary power is always contained in
// the symbolic one).
#ifndef GRIDRES_POWERS_HPP
#define GRIDRES_POWERS_HPP

#include <utility>
#include <vector>

#include "gridres/bipoly.hpp"
#include "gridres/echelon.hpp"
#include "gridres/hilbert.hpp"
#include "gridres/scheme.hpp"
#include "gridres/types.hpp"

namespace gridres {

/// One member of the generator family: exponents (a1, a2, b1, b2) on the
/// block forms (Q1, Q2, U1, U2) and the realized polynomial of bidegree
/// (a1*alpha1 + a2*alpha2, b1*beta1 + b2*beta2).
struct FamilyMember {
  ExpTuple e;
  BiPoly poly;
};

using GeneratorFamily = std::vector<FamilyMember>;

/// The three staircase constraints a1+b1 >= m11, a1+b2 >= m12,
/// a2+b1 >= m21 (multiplicities scaled by mscale).
bool satisfies_constraints(const ExpTuple& t, int m11, int m12, int m21,
                           int mscale = 1);

/// Minimal antichain of exponent tuples satisfying the constraints inside
/// the finite box a1 <= max(m11, m12), a2 <= m21, b1 <= max(m11, m21),
/// b2 <= m12 (all zero multiplicities give the single tuple (0,0,0,0), the
/// unit ideal). Sufficiency of the box is certified downstream by span
/// agreement with the oracle's minimal generators.
TupleSet staircase_family(int m11, int m12, int m21);

/// Scalars for the grid plus the realized generator family of the ideal.
std::pair<LineArrangement, GeneratorFamily> realize(const AciParams& params,
                                                    const FieldConfig& cfg);

/// Row-space basis and rank of the bidegree-d slice spanned by all products
/// of m factor polynomials times all monomials. `cap` bounds the rank from
/// above (insertion stops early once reached); pass the symbolic dimension
/// when known. Rank exceeding a true containment bound signals a bug
/// upstream, so callers compare rank to cap afterwards.
struct DegreePiece {
  BiDegree d;
  DenseMatrix basis;
  size_t rank = 0;
};
DegreePiece power_piece(const std::vector<BiPoly>& factors, int m, BiDegree d,
                        const Fp& fp, size_t cap, ExecMode mode = ExecMode::Serial);
DegreePiece power_piece(const GeneratorFamily& fam, int m, BiDegree d,
                        const Fp& fp, ExecMode mode = ExecMode::Serial);

/// Euclidean-division splitting: with a_i = c_i*m + r_i, b_j = d_j*m + s_j
/// and delta_j = [s_j != 0], returns F1 = (c1, c2, d1+delta1, d2+delta2)
/// and F2 = input - F1. The input must satisfy the m-fold constraints
/// (throws ParamError otherwise); F1 then satisfies the 1-fold and F2 the
/// (m-1)-fold constraints.
std::pair<ExpTuple, ExpTuple> split_factor(const ExpTuple& input, int m,
                                           int m11, int m12, int m21);

struct PowerCheckLine {
  BiDegree d;
  long long dim_symbolic = 0;
  long long dim_power = 0;
  bool equal = false;
};

struct PowerReport {
  int m = 1;
  bool all_equal = false;
  std::vector<PowerCheckLine> lines;  // one per generator degree, sorted
};

/// Equality certificate for the scheme of `params`: generator degrees of
/// the m-th symbolic power (itself the grid scheme with scaled weights) are
/// found by the oracle, and at each one the ordinary-power slice dimension
/// is compared with the symbolic slice dimension. Product factors are the
/// realized staircase family, whose generating property is certified
/// against the oracle's minimal generators first.
PowerReport check_power_equality(const AciParams& params, int m,
                                 const FieldConfig& cfg,
                                 ExecMode mode = ExecMode::Serial);

/// Comparator form for an arbitrary multiplicity grid (no block structure
/// required, no equality asserted): reports per-degree dimensions of the
/// m-th ordinary vs symbolic power at the symbolic power's generator
/// degrees, with the oracle's own minimal generators of the base ideal as
/// product factors. `box` bounds the search.
PowerReport compare_powers_on_grid(const FatPointGrid& grid, int m,
                                   BiDegree box, const FieldConfig& cfg,
                                   ExecMode mode = ExecMode::Serial);

}  // namespace gridres

#endif  // GRIDRES_POWERS_HPP

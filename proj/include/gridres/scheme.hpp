// Parameter space and combinatorial scheme objects: the block parameters of
// a grid-supported fat point scheme on P1 x P1, the dense multiplicity grid,
// factor-swap normalization, the one-step multiplicity reduction, and the
// base-case classification that drives the resolution recursion.
#ifndef GRIDRES_SCHEME_HPP
#define GRIDRES_SCHEME_HPP

#include <optional>
#include <string>
#include <vector>

#include "gridres/types.hpp"

namespace gridres {

/// Block parameters of the scheme: the support is a grid of
/// (alpha1 + alpha2) horizontal lines by (beta1 + beta2) vertical lines with
/// the bottom-right alpha2 x beta2 block of points removed (an almost
/// complete intersection), and the remaining three blocks carry constant
/// multiplicities m11 (top-left), m12 (top-right), m21 (bottom-left).
struct AciParams {
  int alpha1 = 1;
  int alpha2 = 1;
  int beta1 = 1;
  int beta2 = 1;
  int m11 = 0;
  int m12 = 0;
  int m21 = 0;

  friend auto operator<=>(const AciParams&, const AciParams&) = default;

  /// Empty string if valid; otherwise the violated constraint, for error
  /// messages that name the offending field.
  std::string validate_message() const;

  /// Throws ParamError naming the violated constraint.
  void validate() const;

  bool is_normalized() const { return m21 <= m12; }
};

/// Records whether normalization swapped the two P1 factors. Applying the
/// swap twice is the identity; when transposed, every predicted bidegree
/// (a,b) of the normalized problem maps back to (b,a) for the original.
struct NormalizationRecord {
  bool transposed = false;
};

/// Dense multiplicity grid w[i][j] over the full (alpha1+alpha2) x
/// (beta1+beta2) line grid. Grids built from AciParams follow the four-block
/// pattern; arbitrary dense grids are also representable (the linear-algebra
/// oracle accepts them, the predictor does not).
struct FatPointGrid {
  int rows = 0;
  int cols = 0;
  std::vector<int> weights;  // row-major, rows*cols entries

  int at(int i, int j) const { return weights[static_cast<size_t>(i) * cols + j]; }
  int& at(int i, int j) { return weights[static_cast<size_t>(i) * cols + j]; }

  friend bool operator==(const FatPointGrid&, const FatPointGrid&) = default;

  /// Grid with rows and columns swapped.
  FatPointGrid transposed() const;

  /// Grid with every weight multiplied by m.
  FatPointGrid scaled(int m) const;

  /// Sum of w*(w+1)/2 over all points: number of vanishing conditions the
  /// grid imposes in large bidegrees.
  long long condition_count() const;

  bool all_zero() const;
};

/// Which closed-form resolution applies directly, or GENERAL when at least
/// one more reduce_step is needed (i.e. min(m11, m21) > 0).
///   ACM_COLUMN_BLOCKS: m21 = 0 < m11 (column-block complete-intersection
///     support; two-module resolution).
///   DISJOINT_CI:       m11 = 0 < m21 (disjoint union of two complete
///     intersections).
///   EQUAL_MU_CI:       m11 = m21 = 0, the state reached after fully
///     reducing an equal-multiplicity pair; only the m12 block remains and
///     the homogeneous complete-intersection formula applies.
enum class BaseCaseTag { ACM_COLUMN_BLOCKS, DISJOINT_CI, EQUAL_MU_CI, GENERAL };

std::string to_string(BaseCaseTag tag);

/// The four-block multiplicity grid of the given parameters.
FatPointGrid build_grid(const AciParams& params);

/// Recover block parameters from a four-block grid. Returns nullopt when the
/// grid is not of the four-block shape. Degenerate grids that several
/// parameter choices produce (m21 = 0 with m11 = m12 > 0, or the all-zero
/// grid) are decomposed with a canonical tie-break: the first block is taken
/// as wide/tall as possible (beta1 = cols-1, alpha1 = rows-1).
std::optional<AciParams> params_from_grid(const FatPointGrid& grid);

/// One multiplicity-reduction step: m11 -> (m11-1)+, m21 -> (m21-1)+, m12
/// and the block widths unchanged.
AciParams reduce_step(const AciParams& params);

/// The factor-swapped parameters: alpha and beta blocks exchange roles and
/// m12 <-> m21.
AciParams transpose_of(const AciParams& params);

/// Enforce m21 <= m12, swapping the two factors when necessary.
std::pair<AciParams, NormalizationRecord> normalize(const AciParams& params);

/// Base-case classification; expects normalized params.
BaseCaseTag classify(const AciParams& params);

/// Per-row point counts of the support (weights > 0), sorted non-increasing.
std::vector<int> support_tuple(const FatPointGrid& grid);

/// Column sums of the multiplicities, sorted non-increasing.
std::vector<int> gamma_tuple(const FatPointGrid& grid);

/// For a reduced grid (all weights 0/1) the support row-count tuple; for a
/// fat grid the gamma column-sum tuple. Both underlying tuples are exposed
/// above since neither meaning is canonical for fat grids.
std::vector<int> alpha_tuple(const FatPointGrid& grid);

}  // namespace gridres

#endif  // GRIDRES_SCHEME_HPP

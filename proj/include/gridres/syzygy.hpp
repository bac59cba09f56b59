// Degree-by-degree syzygy computation: from the minimal generators of an
// ideal, extract minimal first and second syzygies by the same marching
// scheme as the generator search (dimension tables for the kernels come for
// free from rank-nullity once the previous stage is known to generate), and
// certify that third syzygies vanish throughout the box. The result is the
// oracle Betti table the predictor is checked against.
#ifndef GRIDRES_SYZYGY_HPP
#define GRIDRES_SYZYGY_HPP

#include <vector>

#include "gridres/betti_table.hpp"
#include "gridres/hilbert.hpp"
#include "gridres/mingens.hpp"
#include "gridres/types.hpp"

namespace gridres {

/// A free bigraded module given by its generator shifts; basis elements of
/// the degree-d slice are (component i, monomial of R_{d - gens[i]}) pairs,
/// ordered by component then s-major monomial.
class FreeModule {
 public:
  explicit FreeModule(std::vector<BiDegree> gens) : gens_(std::move(gens)) {}

  const std::vector<BiDegree>& gens() const { return gens_; }
  size_t count() const { return gens_.size(); }

  /// Dimension of the degree-d slice.
  long long dim_at(BiDegree d) const;

  /// Offset of component i inside the degree-d coordinate vector.
  size_t offset_at(size_t i, BiDegree d) const;

 private:
  std::vector<BiDegree> gens_;
};

/// Full oracle pipeline for one grid: Hilbert table, minimal generators,
/// first and second syzygies, third-syzygy vanishing certificate.
/// Throws BoxError on boundary contact and OracleError when a nonzero third
/// syzygy (or any internal rank inconsistency) is detected inside the box.
BettiTable syzygy_betti(const FatPointGrid& grid, BiDegree box,
                        const FieldConfig& cfg,
                        ExecMode mode = ExecMode::Serial);

/// Same, reusing an existing table/condition set and generator list.
BettiTable syzygy_betti(const HilbertTable& table, const ConditionSet& cs,
                        const MinGens& mg, ExecMode mode = ExecMode::Serial);

}  // namespace gridres

#endif  // GRIDRES_SYZYGY_HPP

// Concrete realization of the line grid over a prime field: one scalar per
// horizontal line (H_i = x1 - h_i*x0) and per vertical line
// (V_j = x3 - v_j*x2), so point (i,j) is [1 : h_i] x [1 : v_j]. Scalars are
// distinct and nonzero, which keeps every point off the coordinate lines —
// the saturation facts the generator-search pruning relies on.
#ifndef GRIDRES_ARRANGEMENT_HPP
#define GRIDRES_ARRANGEMENT_HPP

#include <cstdint>
#include <vector>

#include "gridres/field.hpp"
#include "gridres/types.hpp"

namespace gridres {

/// Field and scalar-choice configuration. seed = 0 selects the canonical
/// scalars h_i = i, v_j = j (1-based); any other seed draws distinct nonzero
/// scalars from a deterministic generator. Results of every oracle
/// computation are independent of the choice (tested), since only
/// distinctness matters for these grid schemes.
struct FieldConfig {
  uint32_t prime = kDefaultPrime;
  uint64_t seed = 0;
};

struct LineArrangement {
  std::vector<uint32_t> h;  // one scalar per horizontal line (grid row)
  std::vector<uint32_t> v;  // one scalar per vertical line (grid column)
};

/// Build scalars for a rows x cols grid. Throws ParamError when the field is
/// too small (requires prime > rows + cols so distinct nonzero scalars
/// exist for both families).
LineArrangement make_arrangement(int rows, int cols, const FieldConfig& cfg);

/// Validate the prime choice (primality and the 2^15 kernel bound); throws
/// ParamError naming the violated constraint.
void validate_prime(uint32_t prime);

}  // namespace gridres

#endif  // GRIDRES_ARRANGEMENT_HPP

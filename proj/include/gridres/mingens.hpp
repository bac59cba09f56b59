// Minimal generator extraction by marching the degree box in graded order.
// At each degree the count of new generators is dim I_d minus the dimension
// of the slice generated in lower degrees; the latter is certified zero-gap
// in the interior by an exact two-term difference identity (valid because
// the points avoid the coordinate lines, making x0, x1 and x2, x3 regular),
// and computed by an explicit pushed-span rank only near the staircase
// frontier. New generator vectors are completed from the nullspace of the
// condition matrix.
#ifndef GRIDRES_MINGENS_HPP
#define GRIDRES_MINGENS_HPP

#include <map>
#include <vector>

#include "gridres/bipoly.hpp"
#include "gridres/hilbert.hpp"
#include "gridres/types.hpp"

namespace gridres {

struct MinGens {
  std::map<BiDegree, int> counts;
  std::vector<BiPoly> gens;  // one explicit polynomial per counted generator
};

/// All degrees of the box in a linear order refining the componentwise
/// order: ascending total degree, then ascending first coordinate.
std::vector<BiDegree> graded_degrees(BiDegree box);

/// Minimal generator degrees and explicit generators of the ideal whose
/// slice dimensions are tabulated in `table` (conditions from `cs`).
/// Throws BoxError when a generator degree touches the box boundary — the
/// box was too small and the result would be untrustworthy.
MinGens min_generators(const HilbertTable& table, const ConditionSet& cs,
                       ExecMode mode = ExecMode::Serial);

}  // namespace gridres

#endif  // GRIDRES_MINGENS_HPP

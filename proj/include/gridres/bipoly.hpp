// Dense bihomogeneous polynomials over a prime field. A polynomial of
// bidegree (a, b) is stored as the coefficient vector of the monomial basis
// x0^(a-s) x1^s x2^(b-t) x3^t, indexed s-major: c[s*(b+1) + t].
#ifndef GRIDRES_BIPOLY_HPP
#define GRIDRES_BIPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gridres/field.hpp"
#include "gridres/types.hpp"

namespace gridres {

struct BiPoly {
  BiDegree deg;
  std::vector<uint32_t> c;  // (deg.a + 1) * (deg.b + 1) coefficients

  size_t idx(int s, int t) const {
    return static_cast<size_t>(s) * (deg.b + 1) + t;
  }

  /// The constant 1 in bidegree (0,0).
  static BiPoly one();
};

/// Product of linear x-side forms: prod over the given scalars h of
/// (x1 - h*x0), each factor repeated per its multiplicity. Bidegree (n, 0).
BiPoly xform_from_roots(const std::vector<std::pair<uint32_t, int>>& roots,
                        const Fp& fp);

/// Same on the z side: prod (x3 - v*x2); bidegree (0, n).
BiPoly zform_from_roots(const std::vector<std::pair<uint32_t, int>>& roots,
                        const Fp& fp);

BiPoly multiply(const BiPoly& f, const BiPoly& g, const Fp& fp);

/// Write the coefficients of x0^(da-q) x1^q x2^(db-w) x3^w * f into `out`
/// (length (target.a+1)*(target.b+1), pre-zeroed by the caller), where
/// (da, db) = target - f.deg and 0 <= q <= da, 0 <= w <= db. Multiplying by
/// a monomial is a pure index translation (s, t) -> (s + q, t + w).
void translate_into(const BiPoly& f, BiDegree target, int q, int w,
                    std::vector<uint32_t>& out);

}  // namespace gridres

#endif  // GRIDRES_BIPOLY_HPP

#include "gridres/mingens.hpp"

#include <algorithm>
#include <sstream>

namespace gridres {

std::vector<BiDegree> graded_degrees(BiDegree box) {
  std::vector<BiDegree> out;
  out.reserve(static_cast<size_t>(box.a + 1) * (box.b + 1));
  for (int a = 0; a <= box.a; ++a)
    for (int b = 0; b <= box.b; ++b) out.push_back({a, b});
  std::sort(out.begin(), out.end(), [](BiDegree l, BiDegree r) {
    if (l.total() != r.total()) return l.total() < r.total();
    return l.a < r.a;
  });
  return out;
}

MinGens min_generators(const HilbertTable& table, const ConditionSet& cs,
                       ExecMode mode) {
  const BiDegree box = table.box();
  const Fp& fp = cs.field();
  MinGens out;

  for (BiDegree d : graded_degrees(box)) {
    long long dim_here = table.dim(d);
    if (dim_here == 0) continue;

    // Exact interior certificates: because the points miss the coordinate
    // lines, (I : x0) = (I : x1) = I and x0 I cap x1 I = x0 x1 I, so
    // dim (x0 I + x1 I)_d = 2 dim I_{d-(1,0)} - dim I_{d-(2,0)} exactly.
    // When that equals dim I_d the slice is generated in lower degrees;
    // symmetrically on the z side.
    if (2 * table.dim({d.a - 1, d.b}) - table.dim({d.a - 2, d.b}) == dim_here)
      continue;
    if (2 * table.dim({d.a, d.b - 1}) - table.dim({d.a, d.b - 2}) == dim_here)
      continue;

    // Frontier degree: measure the span of lower-degree generators pushed
    // up by all monomial multipliers.
    const size_t ncols = static_cast<size_t>(d.a + 1) * (d.b + 1);
    Echelon pushed(fp, ncols, mode);
    std::vector<uint32_t> buf(ncols);
    const size_t target = static_cast<size_t>(dim_here);
    for (const BiPoly& g : out.gens) {
      if (!g.deg.leq(d)) continue;
      BiDegree delta = d - g.deg;
      for (int q = 0; q <= delta.a && pushed.rank() < target; ++q)
        for (int w = 0; w <= delta.b && pushed.rank() < target; ++w) {
          std::fill(buf.begin(), buf.end(), 0);
          translate_into(g, d, q, w, buf);
          pushed.insert(buf);
        }
      if (pushed.rank() >= target) break;
    }
    if (pushed.rank() == target) continue;

    // Genuinely new generators: complete the pushed span to a basis of the
    // slice, drawing candidates from the condition-matrix nullspace.
    DenseMatrix basis = cs.ideal_basis_at(d);
    if (basis.size() != static_cast<size_t>(dim_here))
      throw OracleError("ideal slice dimension disagrees with its table");
    int added = 0;
    for (std::vector<uint32_t>& v : basis) {
      if (pushed.rank() == target) break;
      if (pushed.insert(v)) {
        out.gens.push_back(BiPoly{d, std::move(v)});
        ++added;
      }
    }
    if (pushed.rank() != target)
      throw OracleError("generator completion failed to reach full rank");
    if (added > 0) {
      out.counts[d] = added;
      if (d.a == box.a || d.b == box.b) {
        std::ostringstream msg;
        msg << "generator at degree (" << d.a << ", " << d.b
            << ") touches the degree box boundary (" << box.a << ", " << box.b
            << "); enlarge the box";
        throw BoxError(msg.str());
      }
    }
  }
  return out;
}

}  // namespace gridres

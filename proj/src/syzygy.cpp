#include "gridres/syzygy.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <utility>

#include "gridres/arrangement.hpp"
#include "gridres/predictor.hpp"

namespace gridres {

long long FreeModule::dim_at(BiDegree d) const {
  long long total = 0;
  for (BiDegree g : gens_) total += dim_ring(d.a - g.a, d.b - g.b);
  return total;
}

size_t FreeModule::offset_at(size_t i, BiDegree d) const {
  assert(i <= gens_.size());
  long long off = 0;
  for (size_t j = 0; j < i; ++j)
    off += dim_ring(d.a - gens_[j].a, d.b - gens_[j].b);
  return static_cast<size_t>(off);
}

namespace {

/// One found kernel generator: its degree and its coordinates in the
/// ambient free module's slice of that degree.
struct ModGen {
  BiDegree deg;
  std::vector<uint32_t> vec;
};

/// Write src (a degree src_deg slice vector of F) multiplied by the
/// monomial with x1-exponent q and x3-exponent w (and x0/x2 filling up to
/// bidegree target - src_deg) into the degree-target coordinates. Mirrors
/// translate_into componentwise. `out` must be pre-zeroed with length
/// F.dim_at(target).
void translate_module(const FreeModule& F, const std::vector<uint32_t>& src,
                      BiDegree src_deg, BiDegree target, int q, int w,
                      std::vector<uint32_t>& out) {
  for (size_t i = 0; i < F.count(); ++i) {
    BiDegree g = F.gens()[i];
    int sa = src_deg.a - g.a, sb = src_deg.b - g.b;
    if (sa < 0 || sb < 0) continue;
    size_t soff = F.offset_at(i, src_deg);
    size_t doff = F.offset_at(i, target);
    int tb = target.b - g.b;
    for (int s = 0; s <= sa; ++s)
      for (int t = 0; t <= sb; ++t)
        out[doff + static_cast<size_t>(s + q) * (tb + 1) + (t + w)] =
            src[soff + static_cast<size_t>(s) * (sb + 1) + t];
  }
}

/// March the degree box extracting minimal generators of the kernel of a
/// graded map out of `ambient`. dim_kernel gives the kernel slice dimension
/// (0 for degrees with a negative coordinate); extract_at returns the
/// kernel slice basis at a degree, throwing on any rank inconsistency.
/// Kernels of graded maps between torsion-free modules admit the same exact
/// x-side and z-side lower-degree certificates as ideals, so the marching
/// logic mirrors min_generators.
struct KernelMarch {
  std::map<BiDegree, int> counts;
  std::vector<ModGen> gens;
};

KernelMarch march_kernel(
    const FreeModule& ambient, BiDegree box, const Fp& fp,
    const std::function<long long(BiDegree)>& dim_kernel,
    const std::function<DenseMatrix(BiDegree)>& extract_at,
    const char* stage_name, ExecMode mode) {
  KernelMarch out;
  for (BiDegree d : graded_degrees(box)) {
    long long dim_here = dim_kernel(d);
    if (dim_here < 0) throw OracleError("negative kernel dimension");
    if (dim_here == 0) continue;
    if (2 * dim_kernel({d.a - 1, d.b}) - dim_kernel({d.a - 2, d.b}) ==
        dim_here)
      continue;
    if (2 * dim_kernel({d.a, d.b - 1}) - dim_kernel({d.a, d.b - 2}) ==
        dim_here)
      continue;

    const size_t ncols = static_cast<size_t>(ambient.dim_at(d));
    const size_t target = static_cast<size_t>(dim_here);
    Echelon pushed(fp, ncols, mode);
    std::vector<uint32_t> buf(ncols);
    for (const ModGen& g : out.gens) {
      if (!g.deg.leq(d)) continue;
      BiDegree delta = d - g.deg;
      for (int q = 0; q <= delta.a && pushed.rank() < target; ++q)
        for (int w = 0; w <= delta.b && pushed.rank() < target; ++w) {
          std::fill(buf.begin(), buf.end(), 0);
          translate_module(ambient, g.vec, g.deg, d, q, w, buf);
          pushed.insert(buf);
        }
      if (pushed.rank() >= target) break;
    }
    if (pushed.rank() == target) continue;

    DenseMatrix basis = extract_at(d);
    if (basis.size() != target)
      throw OracleError(std::string(stage_name) +
                        ": kernel slice dimension disagrees with its table");
    int added = 0;
    for (std::vector<uint32_t>& v : basis) {
      if (pushed.rank() == target) break;
      if (pushed.insert(v)) {
        out.gens.push_back(ModGen{d, std::move(v)});
        ++added;
      }
    }
    if (pushed.rank() != target)
      throw OracleError(std::string(stage_name) +
                        ": kernel completion failed to reach full rank");
    if (added > 0) {
      out.counts[d] = added;
      if (d.a == box.a || d.b == box.b) {
        std::ostringstream msg;
        msg << stage_name << " generator at degree (" << d.a << ", " << d.b
            << ") touches the degree box boundary (" << box.a << ", " << box.b
            << "); enlarge the box";
        throw BoxError(msg.str());
      }
    }
  }
  return out;
}

}  // namespace

BettiTable syzygy_betti(const HilbertTable& table, const ConditionSet& cs,
                        const MinGens& mg, ExecMode mode) {
  const BiDegree box = table.box();
  const Fp& fp = cs.field();

  BettiTable result;
  for (const auto& [deg, count] : mg.counts) result.add(0, deg, count);

  std::vector<BiDegree> shifts0;
  shifts0.reserve(mg.gens.size());
  for (const BiPoly& g : mg.gens) shifts0.push_back(g.deg);
  FreeModule F0(shifts0);

  // First syzygies: kernel of the evaluation F0 -> I. Slice dimensions come
  // from rank-nullity because the generators were certified to span every
  // in-box slice of the ideal.
  auto dim_syz1 = [&](BiDegree d) -> long long {
    if (d.a < 0 || d.b < 0) return 0;
    return F0.dim_at(d) - table.dim(d);
  };
  auto extract_syz1 = [&](BiDegree d) -> DenseMatrix {
    size_t ring_cols = static_cast<size_t>(d.a + 1) * (d.b + 1);
    DenseMatrix phi;
    phi.reserve(static_cast<size_t>(F0.dim_at(d)));
    std::vector<uint32_t> buf(ring_cols);
    for (const BiPoly& g : mg.gens) {
      int qa = d.a - g.deg.a, qb = d.b - g.deg.b;
      if (qa < 0 || qb < 0) continue;
      for (int q = 0; q <= qa; ++q)
        for (int w = 0; w <= qb; ++w) {
          std::fill(buf.begin(), buf.end(), 0);
          translate_into(g, d, q, w, buf);
          phi.push_back(buf);
        }
    }
    LeftNullspace ln = left_nullspace(phi, ring_cols, fp);
    if (ln.rank != static_cast<size_t>(table.dim(d)))
      throw OracleError("generator image rank disagrees with the ideal slice");
    return std::move(ln.basis);
  };
  KernelMarch syz1 = march_kernel(F0, box, fp, dim_syz1, extract_syz1,
                                  "first syzygy", mode);
  for (const auto& [deg, count] : syz1.counts) result.add(1, deg, count);

  std::vector<BiDegree> shifts1;
  shifts1.reserve(syz1.gens.size());
  for (const ModGen& g : syz1.gens) shifts1.push_back(g.deg);
  FreeModule F1(shifts1);

  // Second syzygies: kernel of F1 -> F0 sending basis elements to the first
  // syzygy vectors.
  auto dim_syz2 = [&](BiDegree d) -> long long {
    if (d.a < 0 || d.b < 0) return 0;
    return F1.dim_at(d) - dim_syz1(d);
  };
  auto extract_syz2 = [&](BiDegree d) -> DenseMatrix {
    size_t f0_cols = static_cast<size_t>(F0.dim_at(d));
    DenseMatrix psi;
    psi.reserve(static_cast<size_t>(F1.dim_at(d)));
    std::vector<uint32_t> buf(f0_cols);
    for (const ModGen& g : syz1.gens) {
      int qa = d.a - g.deg.a, qb = d.b - g.deg.b;
      if (qa < 0 || qb < 0) continue;
      for (int q = 0; q <= qa; ++q)
        for (int w = 0; w <= qb; ++w) {
          std::fill(buf.begin(), buf.end(), 0);
          translate_module(F0, g.vec, g.deg, d, q, w, buf);
          psi.push_back(buf);
        }
    }
    LeftNullspace ln = left_nullspace(psi, f0_cols, fp);
    if (ln.rank != static_cast<size_t>(dim_syz1(d)))
      throw OracleError(
          "first syzygy image rank disagrees with its slice dimension");
    return std::move(ln.basis);
  };
  KernelMarch syz2 = march_kernel(F1, box, fp, dim_syz2, extract_syz2,
                                  "second syzygy", mode);
  for (const auto& [deg, count] : syz2.counts) result.add(2, deg, count);

  // Freeness certificate: the free module on the second syzygy generators
  // must match the kernel dimension at every box degree, otherwise a third
  // syzygy lives inside the box.
  std::vector<BiDegree> shifts2;
  shifts2.reserve(syz2.gens.size());
  for (const ModGen& g : syz2.gens) shifts2.push_back(g.deg);
  FreeModule F2(shifts2);
  for (int a = 0; a <= box.a; ++a)
    for (int b = 0; b <= box.b; ++b) {
      BiDegree d{a, b};
      long long kernel_dim = F1.dim_at(d) - dim_syz1(d);
      if (F2.dim_at(d) != kernel_dim) {
        std::ostringstream msg;
        msg << "nonzero third syzygy detected at degree (" << a << ", " << b
            << ")";
        throw OracleError(msg.str());
      }
    }

  return result;
}

BettiTable syzygy_betti(const FatPointGrid& grid, BiDegree box,
                        const FieldConfig& cfg, ExecMode mode) {
  validate_prime(cfg.prime);
  Fp fp(cfg.prime);
  LineArrangement arr = make_arrangement(grid.rows, grid.cols, cfg);
  ConditionSet cs(grid, 1, arr, fp, box);
  HilbertTable table(cs, box, mode);
  MinGens mg = min_generators(table, cs, mode);
  return syzygy_betti(table, cs, mg, mode);
}

}  // namespace gridres

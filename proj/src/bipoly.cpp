#include "gridres/bipoly.hpp"

#include <cassert>

namespace gridres {

BiPoly BiPoly::one() { return BiPoly{{0, 0}, {1}}; }

namespace {

// Coefficients of prod (y - root*x)^mult as a univariate vector c[s] on
// x^(n-s) y^s.
std::vector<uint32_t> univariate_from_roots(
    const std::vector<std::pair<uint32_t, int>>& roots, const Fp& fp) {
  std::vector<uint32_t> c{1};
  for (const auto& [root, mult] : roots) {
    for (int k = 0; k < mult; ++k) {
      std::vector<uint32_t> next(c.size() + 1, 0);
      uint32_t neg = fp.neg(root % fp.p());
      for (size_t s = 0; s < c.size(); ++s) {
        next[s + 1] = fp.add(next[s + 1], c[s]);          // * y
        next[s] = fp.add(next[s], fp.mul(neg, c[s]));     // * (-root x)
      }
      c = std::move(next);
    }
  }
  return c;
}

}  // namespace

BiPoly xform_from_roots(const std::vector<std::pair<uint32_t, int>>& roots,
                        const Fp& fp) {
  std::vector<uint32_t> c = univariate_from_roots(roots, fp);
  return BiPoly{{static_cast<int>(c.size()) - 1, 0}, std::move(c)};
}

BiPoly zform_from_roots(const std::vector<std::pair<uint32_t, int>>& roots,
                        const Fp& fp) {
  std::vector<uint32_t> c = univariate_from_roots(roots, fp);
  return BiPoly{{0, static_cast<int>(c.size()) - 1}, std::move(c)};
}

BiPoly multiply(const BiPoly& f, const BiPoly& g, const Fp& fp) {
  BiPoly h;
  h.deg = f.deg + g.deg;
  h.c.assign(static_cast<size_t>(h.deg.a + 1) * (h.deg.b + 1), 0);
  for (int s1 = 0; s1 <= f.deg.a; ++s1) {
    for (int t1 = 0; t1 <= f.deg.b; ++t1) {
      uint32_t cf = f.c[f.idx(s1, t1)];
      if (cf == 0) continue;
      for (int s2 = 0; s2 <= g.deg.a; ++s2) {
        for (int t2 = 0; t2 <= g.deg.b; ++t2) {
          uint32_t cg = g.c[g.idx(s2, t2)];
          if (cg == 0) continue;
          size_t i = h.idx(s1 + s2, t1 + t2);
          h.c[i] = fp.reduce(h.c[i] + static_cast<uint64_t>(cf) * cg);
        }
      }
    }
  }
  return h;
}

void translate_into(const BiPoly& f, BiDegree target, int q, int w,
                    std::vector<uint32_t>& out) {
  assert(f.deg.a + q <= target.a && f.deg.b + w <= target.b);
  assert(out.size() == static_cast<size_t>(target.a + 1) * (target.b + 1));
  const int tb = target.b + 1;
  for (int s = 0; s <= f.deg.a; ++s) {
    const uint32_t* src = f.c.data() + f.idx(s, 0);
    uint32_t* dst = out.data() + static_cast<size_t>(s + q) * tb + w;
    for (int t = 0; t <= f.deg.b; ++t) dst[t] = src[t];
  }
}

}  // namespace gridres

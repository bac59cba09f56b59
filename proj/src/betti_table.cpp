#include "gridres/betti_table.hpp"

#include <sstream>

namespace gridres {

BettiTable::Layer& BettiTable::layer(int k) {
  switch (k) {
    case 0: return beta0;
    case 1: return beta1;
    default: return beta2;
  }
}

const BettiTable::Layer& BettiTable::layer(int k) const {
  switch (k) {
    case 0: return beta0;
    case 1: return beta1;
    default: return beta2;
  }
}

void BettiTable::add(int k, BiDegree d, int mult) {
  if (mult == 0) return;
  layer(k)[d] += mult;
}

long long BettiTable::total(int k) const {
  long long n = 0;
  for (const auto& [d, m] : layer(k)) n += m;
  return n;
}

long long BettiTable::alternating_total() const {
  return total(0) - total(1) + total(2);
}

BiDegree BettiTable::max_shift() const {
  BiDegree mx{0, 0};
  for (int k = 0; k < 3; ++k) {
    for (const auto& [d, m] : layer(k)) {
      mx.a = std::max(mx.a, d.a);
      mx.b = std::max(mx.b, d.b);
    }
  }
  return mx;
}

BettiTable BettiTable::shifted(BiDegree s) const {
  BettiTable out;
  for (int k = 0; k < 3; ++k)
    for (const auto& [d, m] : layer(k)) out.add(k, d + s, m);
  return out;
}

BettiTable BettiTable::transposed() const {
  BettiTable out;
  for (int k = 0; k < 3; ++k)
    for (const auto& [d, m] : layer(k)) out.add(k, d.transposed(), m);
  return out;
}

BettiTable BettiTable::unit() {
  BettiTable t;
  t.beta0[{0, 0}] = 1;
  return t;
}

std::string BettiTable::diff(const BettiTable& expected, const BettiTable& got) {
  std::ostringstream os;
  for (int k = 0; k < 3; ++k) {
    const Layer& e = expected.layer(k);
    const Layer& g = got.layer(k);
    for (const auto& [d, m] : e) {
      auto it = g.find(d);
      int gm = it == g.end() ? 0 : it->second;
      if (gm != m)
        os << "beta" << k << " (" << d.a << "," << d.b << "): expected " << m
           << ", got " << gm << "\n";
    }
    for (const auto& [d, m] : g) {
      if (!e.count(d))
        os << "beta" << k << " (" << d.a << "," << d.b << "): expected 0, got "
           << m << "\n";
    }
  }
  return os.str();
}

}  // namespace gridres

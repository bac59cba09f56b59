// Prime-field arithmetic for the exact linear-algebra kernels. Moduli are
// restricted to odd primes below 2^15 so that products fit comfortably in
// 32 bits and long accumulation chains fit in 64 bits without intermediate
// reduction.
#ifndef GRIDRES_FIELD_HPP
#define GRIDRES_FIELD_HPP

#include <cstdint>
#include <vector>

#include "gridres/types.hpp"

namespace gridres {

inline constexpr uint32_t kDefaultPrime = 32003;
inline constexpr uint32_t kAltPrime = 101;
inline constexpr uint32_t kMaxPrime = 1u << 15;  // exclusive bound

bool is_prime(uint32_t n);

/// Arithmetic modulo a fixed odd prime p < 2^15. Elements are canonical
/// representatives in [0, p).
class Fp {
 public:
  explicit Fp(uint32_t p);

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t x, uint32_t y) const {
    uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t x, uint32_t y) const {
    return x >= y ? x - y : x + p_ - y;
  }
  uint32_t neg(uint32_t x) const { return x == 0 ? 0 : p_ - x; }
  uint32_t mul(uint32_t x, uint32_t y) const { return (x * y) % p_; }
  uint32_t reduce(uint64_t x) const { return static_cast<uint32_t>(x % p_); }
  uint32_t pow(uint32_t base, uint64_t e) const;
  uint32_t inv(uint32_t x) const;  // throws OracleError on 0

 private:
  uint32_t p_;
};

/// Pascal-triangle table of binomial coefficients mod p, C(n, k) for
/// 0 <= k <= n <= nmax.
class BinomialTable {
 public:
  BinomialTable(const Fp& fp, int nmax);

  uint32_t at(int n, int k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }

 private:
  std::vector<std::vector<uint32_t>> rows_;
};

}  // namespace gridres

#endif  // GRIDRES_FIELD_HPP

#include "gridres/field.hpp"

#include <sstream>

namespace gridres {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(uint32_t p) : p_(p) {
  if (p < 2 || p >= kMaxPrime || !is_prime(p)) {
    std::ostringstream os;
    os << "modulus must be a prime below " << kMaxPrime << " (got " << p << ")";
    throw ParamError(os.str());
  }
}

uint32_t Fp::pow(uint32_t base, uint64_t e) const {
  uint32_t r = 1;
  uint32_t b = base % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint32_t Fp::inv(uint32_t x) const {
  if (x % p_ == 0) throw OracleError("inverse of zero requested");
  return pow(x, p_ - 2);
}

BinomialTable::BinomialTable(const Fp& fp, int nmax) {
  rows_.resize(static_cast<size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    auto& row = rows_[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k)
      row[static_cast<size_t>(k)] =
          fp.add(rows_[static_cast<size_t>(n) - 1][static_cast<size_t>(k) - 1],
                 rows_[static_cast<size_t>(n) - 1][static_cast<size_t>(k)]);
  }
}

}  // namespace gridres

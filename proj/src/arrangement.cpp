#include "gridres/arrangement.hpp"

#include <random>
#include <sstream>
#include <unordered_set>

namespace gridres {

void validate_prime(uint32_t prime) {
  if (prime >= kMaxPrime) {
    std::ostringstream os;
    os << "prime must be below " << kMaxPrime
       << " (64-bit accumulation bound); got " << prime;
    throw ParamError(os.str());
  }
  if (!is_prime(prime)) {
    std::ostringstream os;
    os << "modulus must be prime; got " << prime;
    throw ParamError(os.str());
  }
}

namespace {

std::vector<uint32_t> distinct_nonzero(int n, uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> dist(1, p - 1);
  std::unordered_set<uint32_t> seen;
  std::vector<uint32_t> out;
  out.reserve(static_cast<size_t>(n));
  while (static_cast<int>(out.size()) < n) {
    uint32_t x = dist(rng);
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

}  // namespace

LineArrangement make_arrangement(int rows, int cols, const FieldConfig& cfg) {
  validate_prime(cfg.prime);
  if (cfg.prime <= static_cast<uint32_t>(rows + cols)) {
    std::ostringstream os;
    os << "field too small: need prime > rows + cols = " << rows + cols
       << ", got " << cfg.prime;
    throw ParamError(os.str());
  }
  LineArrangement arr;
  if (cfg.seed == 0) {
    for (int i = 1; i <= rows; ++i) arr.h.push_back(static_cast<uint32_t>(i));
    for (int j = 1; j <= cols; ++j) arr.v.push_back(static_cast<uint32_t>(j));
  } else {
    std::mt19937_64 rng(cfg.seed);
    arr.h = distinct_nonzero(rows, cfg.prime, rng);
    arr.v = distinct_nonzero(cols, cfg.prime, rng);
  }
  return arr;
}

}  // namespace gridres

// Bigraded Betti tables: the shift multisets of a length-two free resolution
// 0 -> F2 -> F1 -> F0 -> I -> 0, stored as bidegree -> multiplicity maps.
#ifndef GRIDRES_BETTI_TABLE_HPP
#define GRIDRES_BETTI_TABLE_HPP

#include <map>
#include <string>

#include "gridres/types.hpp"

namespace gridres {

/// Shifts of the free modules F0, F1, F2. An entry (a,b) -> n means the
/// summand R(-a,-b)^n; absent keys mean multiplicity 0. beta2 may be empty
/// (the arithmetically Cohen-Macaulay case). The unit ideal is represented
/// as beta0 = {(0,0): 1} with beta1, beta2 empty, so the alternating count
/// identity sum(beta0) - sum(beta1) + sum(beta2) = 1 holds for every table.
struct BettiTable {
  using Layer = std::map<BiDegree, int>;
  Layer beta0;
  Layer beta1;
  Layer beta2;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

  Layer& layer(int k);
  const Layer& layer(int k) const;

  /// Accumulate multiplicity (colliding bidegrees add).
  void add(int k, BiDegree d, int mult = 1);

  /// Total multiplicity in layer k.
  long long total(int k) const;

  /// sum(beta0) - sum(beta1) + sum(beta2); equals 1 for every valid table.
  long long alternating_total() const;

  /// Componentwise max over all shifts in all three layers ((0,0) if the
  /// table is the unit table).
  BiDegree max_shift() const;

  /// Table with every bidegree shifted by s.
  BettiTable shifted(BiDegree s) const;

  /// Table with every bidegree (a,b) replaced by (b,a).
  BettiTable transposed() const;

  /// The unit-ideal table: beta0 = {(0,0): 1}.
  static BettiTable unit();

  /// Human-readable diff of two tables; empty string when equal.
  static std::string diff(const BettiTable& expected, const BettiTable& got);
};

}  // namespace gridres

#endif  // GRIDRES_BETTI_TABLE_HPP

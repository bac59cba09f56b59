// Core value types shared across the library: bidegrees, exponent tuples,
// execution-mode selection for the parallel kernels, and error categories.
#ifndef GRIDRES_TYPES_HPP
#define GRIDRES_TYPES_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridres {

/// A bidegree (a, b): degree in the first and second factor of the bigrading.
/// Shifts of free modules are stored as positive bidegrees, so an entry
/// (a, b) in a Betti table means a summand R(-a, -b).
struct BiDegree {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;

  BiDegree operator+(const BiDegree& o) const { return {a + o.a, b + o.b}; }
  BiDegree operator-(const BiDegree& o) const { return {a - o.a, b - o.b}; }

  /// Componentwise partial order: true when this divides-into (fits under) o.
  bool leq(const BiDegree& o) const { return a <= o.a && b <= o.b; }

  int total() const { return a + b; }

  /// Swap the two factors.
  BiDegree transposed() const { return {b, a}; }
};

/// A finite multiset of bidegrees, kept as a plain list (duplicates allowed).
using DegreeSet = std::vector<BiDegree>;

/// An exponent 4-tuple (a1, a2, b1, b2) on the four block forms
/// (Q1, Q2, U1, U2); also used for the combinatorial index tuples whose
/// image under (a1,a2,b1,b2) -> (a1*alpha1 + a2*alpha2, b1*beta1 + b2*beta2)
/// produces Betti-table shifts.
struct ExpTuple {
  int a1 = 0;
  int a2 = 0;
  int b1 = 0;
  int b2 = 0;

  friend auto operator<=>(const ExpTuple&, const ExpTuple&) = default;

  ExpTuple operator+(const ExpTuple& o) const {
    return {a1 + o.a1, a2 + o.a2, b1 + o.b1, b2 + o.b2};
  }
  ExpTuple operator-(const ExpTuple& o) const {
    return {a1 - o.a1, a2 - o.a2, b1 - o.b1, b2 - o.b2};
  }

  /// Componentwise domination.
  bool leq(const ExpTuple& o) const {
    return a1 <= o.a1 && a2 <= o.a2 && b1 <= o.b1 && b2 <= o.b2;
  }
};

using TupleSet = std::vector<ExpTuple>;

/// (n)+ = max(n, 0).
inline int pos(int n) { return n > 0 ? n : 0; }

/// Serial reference kernels vs. the OpenMP-parallel variants. Both produce
/// bit-identical results; tests compare them and benchmarks time them.
enum class ExecMode { Serial, Parallel };

/// Invalid user-facing parameters (CLI maps this to the usage exit code).
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation box was too small (a generator or syzygy degree touched the
/// box boundary) or a resource limit was hit. Reported, never silently
/// truncated; the CLI maps this to its own exit code, distinct from a
/// verification mismatch.
class BoxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed (e.g. a rank that must equal a known
/// dimension did not). Signals a kernel bug; fails loudly.
class OracleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gridres

#endif  // GRIDRES_TYPES_HPP

// Exact dense row-reduction kernels over a prime field: an incremental
// echelon form with rank tracking (the workhorse of every rank and span
// computation here), plus one-shot reduced-row-echelon and nullspace
// helpers. Inner loops accumulate 32-bit products in 64-bit lanes and defer
// the modular reduction, which is why the modulus is capped below 2^15.
//
// Each kernel has one code path whose only parallel construct is an OpenMP
// work-sharing loop over independent elements, so the Serial and Parallel
// execution modes produce bit-identical states.
#ifndef GRIDRES_ECHELON_HPP
#define GRIDRES_ECHELON_HPP

#include <cstdint>
#include <vector>

#include "gridres/field.hpp"
#include "gridres/types.hpp"

namespace gridres {

using DenseMatrix = std::vector<std::vector<uint32_t>>;

/// Incremental echelon form: rows are kept with unit leading coefficients at
/// distinct pivot columns. insert() reduces the incoming vector against the
/// current rows and either absorbs the remainder as a new row (rank grows)
/// or discards it (the vector was already in the row space).
class Echelon {
 public:
  Echelon(const Fp& fp, size_t ncols, ExecMode mode = ExecMode::Serial);

  /// Returns true when the vector enlarged the row space.
  bool insert(const std::vector<uint32_t>& v);
  bool insert(const uint32_t* v, size_t n);

  size_t rank() const { return rows_.size(); }
  size_t ncols() const { return ncols_; }
  const DenseMatrix& rows() const { return rows_; }
  const Fp& field() const { return fp_; }

 private:
  Fp fp_;
  size_t ncols_;
  ExecMode mode_;
  DenseMatrix rows_;                 // unit pivot coefficient each
  std::vector<int> pivot_col_of_row_;
  std::vector<int> row_of_pivot_col_;  // -1 when the column has no pivot
  std::vector<uint64_t> acc_;          // reduction workspace
};

/// Rank of an arbitrary stack of rows (all of length ncols).
size_t rank_of(const DenseMatrix& rows, size_t ncols, const Fp& fp,
               ExecMode mode = ExecMode::Serial);

/// In-place reduced row echelon form. Returns the pivot columns in order.
std::vector<int> rref_in_place(DenseMatrix& m, size_t ncols, const Fp& fp);

/// Basis of the right nullspace {x : M x = 0} of the matrix with the given
/// rows, one canonical vector per free column (free coordinate set to 1),
/// ordered by free column index.
DenseMatrix nullspace(const DenseMatrix& rows, size_t ncols, const Fp& fp);

/// Left nullspace {y : y M = 0} of the k x n matrix m, returned as a basis
/// of length-k vectors, together with the rank of m (pivots are searched in
/// the first n columns only; the identity-augmented tail of each fully
/// reduced row yields the basis). Deterministic row order.
struct LeftNullspace {
  size_t rank = 0;
  DenseMatrix basis;
};
LeftNullspace left_nullspace(const DenseMatrix& m, size_t ncols, const Fp& fp);

}  // namespace gridres

#endif  // GRIDRES_ECHELON_HPP

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidkit/cyclotomic.hpp"

namespace braidkit {

struct Entry {
  std::uint32_t row;
  CycScalar value;
};

/// Column-sparse exact matrix. Each column holds its nonzero entries sorted
/// by row; explicit zeros are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;

  const std::vector<Entry>& column(std::size_t j) const { return cols_[j]; }
  /// Replaces column j; entries need not be sorted and may repeat rows.
  void set_column(std::size_t j, std::vector<Entry> entries);
  /// Adds v at (i, j).
  void add(std::size_t i, std::size_t j, const CycScalar& v);
  CycScalar at(std::size_t i, std::size_t j) const;

  SparseMatrix scaled(const CycScalar& s) const;
  SparseMatrix plus(const SparseMatrix& o) const;
  SparseMatrix minus(const SparseMatrix& o) const;
  SparseMatrix transposed() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> cols_;
};

/// Sorts by row, merges duplicates and drops zeros.
void normalize_column(std::vector<Entry>& col);

namespace kernels {

namespace serial {
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);
}  // namespace serial

namespace parallel {
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);
}  // namespace parallel

/// Dispatch to the parallel kernels when more than one thread is allowed
/// and the work is large enough to amortize the fork.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);

void set_max_threads(int n);
int max_threads();
/// Reads BRAIDKIT_THREADS; ignores unset or malformed values.
void configure_threads_from_env();

/// Sparse row of a linear system: (column, coefficient), sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, CycScalar>>;

/// Finds some x with A x = rhs by exact Gauss-Jordan elimination, free
/// variables set to zero. Returns nullopt if the system is inconsistent.
std::optional<std::vector<CycScalar>> solve(std::vector<SparseRow> rows, std::vector<CycScalar> rhs,
                                            std::size_t unknowns);

/// Exact inverse of a square matrix, nullopt if singular.
std::optional<SparseMatrix> inverse(const SparseMatrix& a);

}  // namespace kernels
}  // namespace braidkit

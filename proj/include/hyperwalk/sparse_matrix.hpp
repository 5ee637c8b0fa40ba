#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace hyperwalk {

using Index = std::uint32_t;

struct Triplet {
  Index row;
  Index col;
  double value;
};

/// Sparse vector with strictly ascending indices and no stored zeros.
struct SparseVector {
  std::vector<Index> indices;
  std::vector<double> values;

  std::size_t nnz() const noexcept { return indices.size(); }
  /// Value at `i`, zero when not stored. O(log nnz).
  double at(Index i) const;
  double sum() const;
};

/// Real matrix in compressed sparse row layout.
///
/// Invariants: column indices are strictly ascending within a row, there
/// are no duplicate coordinates and no stored zeros.
class CsrMatrix {
 public:
  CsrMatrix() = default;
  CsrMatrix(std::size_t rows, std::size_t cols);

  /// Duplicated coordinates are summed; resulting zeros are dropped.
  static CsrMatrix from_triplets(std::size_t rows, std::size_t cols,
                                 std::vector<Triplet> triplets);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return col_.size(); }

  std::span<const Index> row_indices(Index r) const {
    return {col_.data() + ptr_[r], col_.data() + ptr_[r + 1]};
  }
  std::span<const double> row_values(Index r) const {
    return {val_.data() + ptr_[r], val_.data() + ptr_[r + 1]};
  }

  double at(Index r, Index c) const;
  double row_sum(Index r) const;

  /// y = A x
  std::vector<double> multiply(std::span<const double> x) const;
  /// Dense copy, row-major. Intended for tests and small matrices.
  std::vector<double> to_dense() const;

  /// Coordinate dump, one `row col value` line per stored entry.
  void write_coordinates(std::ostream& out) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> ptr_{0};
  std::vector<Index> col_;
  std::vector<double> val_;
};

}  // namespace hyperwalk

#include "hyperwalk/sparse_matrix.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

double SparseVector::at(Index i) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), i);
  if (it == indices.end() || *it != i) return 0.0;
  return values[static_cast<std::size_t>(it - indices.begin())];
}

double SparseVector::sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

CsrMatrix::CsrMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), ptr_(rows + 1, 0) {}

CsrMatrix CsrMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                   std::vector<Triplet> triplets) {
  for (const auto& t : triplets)
    if (t.row >= rows || t.col >= cols)
      throw ContractViolation("triplet outside matrix bounds");
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  CsrMatrix m(rows, cols);
  m.col_.reserve(triplets.size());
  m.val_.reserve(triplets.size());
  std::size_t i = 0;
  while (i < triplets.size()) {
    const Index r = triplets[i].row;
    const Index c = triplets[i].col;
    double v = 0.0;
    for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i)
      v += triplets[i].value;
    if (v == 0.0) continue;
    m.col_.push_back(c);
    m.val_.push_back(v);
    ++m.ptr_[r + 1];
  }
  std::partial_sum(m.ptr_.begin(), m.ptr_.end(), m.ptr_.begin());
  return m;
}

double CsrMatrix::at(Index r, Index c) const {
  auto idx = row_indices(r);
  auto it = std::lower_bound(idx.begin(), idx.end(), c);
  if (it == idx.end() || *it != c) return 0.0;
  return val_[ptr_[r] + static_cast<std::size_t>(it - idx.begin())];
}

double CsrMatrix::row_sum(Index r) const {
  auto v = row_values(r);
  return std::accumulate(v.begin(), v.end(), 0.0);
}

std::vector<double> CsrMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw ContractViolation("dimension mismatch in multiply");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double acc = 0.0;
    for (std::size_t k = ptr_[r]; k < ptr_[r + 1]; ++k) acc += val_[k] * x[col_[k]];
    y[r] = acc;
  }
  return y;
}

std::vector<double> CsrMatrix::to_dense() const {
  std::vector<double> d(rows_ * cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = ptr_[r]; k < ptr_[r + 1]; ++k) d[r * cols_ + col_[k]] = val_[k];
  return d;
}

void CsrMatrix::write_coordinates(std::ostream& out) const {
  const auto old = out.precision(17);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = ptr_[r]; k < ptr_[r + 1]; ++k)
      out << r << ' ' << col_[k] << ' ' << val_[k] << '\n';
  out.precision(old);
}

}  // namespace hyperwalk

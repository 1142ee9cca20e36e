#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "superpoisson/field.hpp"

namespace spo {

// Dense row-major matrix of field elements. Linear maps are stored with
// column j holding the image of basis vector j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  void append_row(const Vec& v);
  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vec apply(const Field& f, const Matrix& m, const Vec& v);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix sum(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form. Pivots are taken at the leftmost nonzero column,
// from the first available row, so results are reproducible.
Echelon rref(const Field& f, const Matrix& m);
std::size_t rank(const Field& f, const Matrix& m);
// Right kernel, one vector per free column in increasing column order.
std::vector<Vec> kernel_basis(const Field& f, const Matrix& m);
// dim span(big) - dim span(small); throws NotASubspace unless small lies in span(big).
std::size_t quotient_dim(const Field& f, const std::vector<Vec>& big, const std::vector<Vec>& small);
// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Field& f, const Matrix& m, const Vec& b);

// Reduced basis of a growing subspace, for membership tests and coordinates.
class SpanBasis {
 public:
  SpanBasis(const Field& f, std::size_t dim) : field_(&f), dim_(dim) {}
  bool insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  const Field* field_;
  std::size_t dim_;
  std::vector<Vec> rows_;  // pivot entries normalised to 1, fully reduced
  std::vector<std::size_t> pivots_;
};

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

// Sorts by column and merges duplicates, dropping zeros.
void canonicalize(SparseRow& row);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  SparseRow& row(std::size_t i) { return data_[i]; }
  const SparseRow& row(std::size_t i) const { return data_[i]; }
  std::size_t nonzeros() const;
  bool is_zero() const;
  Matrix to_dense() const;
  Vec apply(const Field& f, const Vec& v) const;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

SparseMatrix multiply(const Field& f, const SparseMatrix& a, const SparseMatrix& b);

}  // namespace spo

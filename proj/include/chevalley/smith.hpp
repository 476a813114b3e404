#pragma once

#include <string>
#include <vector>

#include "chevalley/rational.hpp"

namespace chevalley {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit IntMatrix(const std::vector<std::vector<int>>& rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  IntMatrix transpose() const;
  bool is_diagonal() const;
  std::vector<Integer> diagonal() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntMatrix d;
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
};

/// U*M*V = D with D diagonal, nonnegative and d_i | d_{i+1}.
/// Pivot: smallest nonzero |entry| in the remaining block, first in row-major order.
SmithForm smith_normal_form(const IntMatrix& m);

/// Bareiss elimination.  Throws NotSquare.
Integer determinant(const IntMatrix& m);

}  // namespace chevalley

#pragma once

#include <optional>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

using Vec = std::vector<Scalar>;

Vec zeros(const FieldSpec& field, std::size_t n);
Vec unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vec>& cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_column(std::size_t c, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transposed() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct LinearSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry scanning downward from the current row.
Echelon rref(Matrix m);

/// Solves m * x = b. std::nullopt means the system is inconsistent. Free
/// variables are set to zero in the particular solution; the kernel basis
/// has one vector per free column (value 1 there, in increasing order).
std::optional<LinearSolution> solve_linear(const Matrix& m, const Vec& b);
std::vector<Vec> kernel_basis(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> invert(const Matrix& m);

/// Coordinates of v in the span of `basis` (columns), if v lies in it.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v, const FieldSpec& field);

}  // namespace hopf

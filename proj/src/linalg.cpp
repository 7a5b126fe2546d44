#include "hopf/linalg.hpp"

namespace hopf {

Vec zeros(const FieldSpec& field, std::size_t n) { return Vec(n, field.zero()); }

Vec unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vec v = zeros(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "vector lengths differ");
  Vec out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "vector lengths differ");
  Vec out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(c * x);
  return out;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "vector lengths differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

// ---------------------------------------------------------------------------

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error(Errc::ShapeMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) {
    field_.check(v[r]);
    (*this)(r, c) = v[r];
  }
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::ShapeMismatch, "matrix product shape mismatch");
  if (field_ != o.field_) throw Error(Errc::FieldMismatch, "matrix fields differ");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw Error(Errc::ShapeMismatch, "matrix-vector shape mismatch");
  Vec out = zeros(field_, rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) out[i] += a * v[k];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------

Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Scalar inv = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::optional<LinearSolution> solve_linear(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(Errc::ShapeMismatch, "right-hand side length mismatch");
  const FieldSpec& field = m.field();
  Matrix aug(field, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    field.check(b[i]);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  const std::size_t n = m.cols();
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;

  LinearSolution sol{zeros(field, n), {}};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    is_pivot[e.pivot_cols[r]] = true;
    sol.particular[e.pivot_cols[r]] = e.reduced(r, n);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec k = zeros(field, n);
    k[f] = field.one();
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      if (!e.reduced(r, f).is_zero()) k[e.pivot_cols[r]] = -e.reduced(r, f);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  return solve_linear(m, zeros(m.field(), m.rows()))->kernel;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::ShapeMismatch, "cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(m.field(), 0, 0);
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  Echelon e = rref(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v, const FieldSpec& field) {
  if (basis.empty()) {
    if (is_zero(v)) return Vec{};
    return std::nullopt;
  }
  Matrix m = Matrix::from_columns(field, v.size(), basis);
  auto sol = solve_linear(m, v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace hopf

#pragma once

#include <cstddef>
#include <vector>

namespace gencls::num {

// Dense 64-bit float vector. Images, latents and weight blocks all live here.
using Vector = std::vector<double>;

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  Vector row_vector(std::size_t i) const {
    return Vector(row(i), row(i) + cols_);
  }
  void set_row(std::size_t i, const Vector& v);

  Vector& storage() { return data_; }
  const Vector& storage() const { return data_; }

  static Matrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);
double norm_inf(const Vector& a);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, double s);
// y += alpha * x
void axpy(double alpha, const Vector& x, Vector& y);

bool all_finite(const Vector& a);
bool all_finite(const Matrix& a);

// A x
Vector matvec(const Matrix& a, const Vector& x);
// A^T x
Vector matvec_t(const Matrix& a, const Vector& x);
Matrix transpose(const Matrix& a);
// A B
Matrix matmul(const Matrix& a, const Matrix& b);

}  // namespace gencls::num

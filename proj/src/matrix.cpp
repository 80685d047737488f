#include "schatten/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace schatten {

Matrix::Matrix(int order, Field field) : order_(order), field_(field) {
  if (order < 1 || order > 64) throw std::invalid_argument("Matrix: order must be in [1, 64]");
  re_.assign(static_cast<std::size_t>(order) * order, 0.0);
  if (field == Field::Complex) im_.assign(re_.size(), 0.0);
}

int Matrix::idx(int i, int j) const {
  if (i < 0 || i >= order_ || j < 0 || j >= order_) {
    throw std::out_of_range("Matrix: index out of range");
  }
  return i * order_ + j;
}

Matrix Matrix::identity(int order, Field field) {
  Matrix m(order, field);
  for (int i = 0; i < order; ++i) m.re_[static_cast<std::size_t>(i) * order + i] = 1.0;
  return m;
}

Matrix Matrix::unit_entry(int order, Field field, int row, int col) {
  Matrix m(order, field);
  m.set(row, col, 1.0, 0.0);
  return m;
}

void Matrix::set(int i, int j, double re_val, double im_val) {
  const int k = idx(i, j);
  re_[k] = re_val;
  if (field_ == Field::Complex) {
    im_[k] = im_val;
  } else if (im_val != 0.0) {
    throw std::invalid_argument("Matrix: imaginary entry in a real matrix");
  }
}

Matrix Matrix::scaled(std::complex<double> c) const {
  if (field_ == Field::Real && c.imag() != 0.0) {
    throw std::invalid_argument("Matrix: complex scalar on a real matrix");
  }
  Matrix out(order_, field_);
  for (std::size_t k = 0; k < re_.size(); ++k) {
    const std::complex<double> v{re_[k], field_ == Field::Complex ? im_[k] : 0.0};
    const std::complex<double> w = c * v;
    out.re_[k] = w.real();
    if (field_ == Field::Complex) out.im_[k] = w.imag();
  }
  return out;
}

Matrix Matrix::add(const Matrix& other) const {
  if (other.order_ != order_ || other.field_ != field_) {
    throw std::invalid_argument("Matrix: add requires matching order and field");
  }
  Matrix out(order_, field_);
  for (std::size_t k = 0; k < re_.size(); ++k) out.re_[k] = re_[k] + other.re_[k];
  if (field_ == Field::Complex) {
    for (std::size_t k = 0; k < im_.size(); ++k) out.im_[k] = im_[k] + other.im_[k];
  }
  return out;
}

Matrix Matrix::conjugate_transpose() const {
  Matrix out(order_, field_);
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      out.re_[static_cast<std::size_t>(j) * order_ + i] = re_[static_cast<std::size_t>(i) * order_ + j];
      if (field_ == Field::Complex) {
        out.im_[static_cast<std::size_t>(j) * order_ + i] =
            -im_[static_cast<std::size_t>(i) * order_ + j];
      }
    }
  }
  return out;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (other.order_ != order_ || other.field_ != field_) {
    throw std::invalid_argument("Matrix: multiply requires matching order and field");
  }
  Matrix out(order_, field_);
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (int k = 0; k < order_; ++k) acc += at(i, k) * other.at(k, j);
      out.re_[static_cast<std::size_t>(i) * order_ + j] = acc.real();
      if (field_ == Field::Complex) {
        out.im_[static_cast<std::size_t>(i) * order_ + j] = acc.imag();
      }
    }
  }
  return out;
}

bool Matrix::all_finite() const noexcept {
  for (double v : re_) {
    if (!std::isfinite(v)) return false;
  }
  for (double v : im_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace schatten

#pragma once

#include <complex>
#include <vector>

namespace schatten {

enum class Field { Real, Complex };

// Dense square matrix over Field. Entries are stored row-major as separate
// real/imaginary arrays; the imaginary array is empty for Field::Real.
class Matrix {
 public:
  Matrix(int order, Field field);

  static Matrix identity(int order, Field field);
  // Matrix with a single unit entry at (row, col).
  static Matrix unit_entry(int order, Field field, int row, int col);

  int order() const noexcept { return order_; }
  Field field() const noexcept { return field_; }

  double re(int i, int j) const { return re_[idx(i, j)]; }
  double im(int i, int j) const { return field_ == Field::Real ? 0.0 : im_[idx(i, j)]; }
  void set(int i, int j, double re_val, double im_val = 0.0);

  std::complex<double> at(int i, int j) const { return {re(i, j), im(i, j)}; }

  Matrix scaled(std::complex<double> c) const;
  Matrix add(const Matrix& other) const;
  Matrix conjugate_transpose() const;
  Matrix multiply(const Matrix& other) const;

  bool all_finite() const noexcept;

  const std::vector<double>& raw_re() const noexcept { return re_; }
  const std::vector<double>& raw_im() const noexcept { return im_; }

 private:
  int idx(int i, int j) const;

  int order_;
  Field field_;
  std::vector<double> re_;
  std::vector<double> im_;
};

}  // namespace schatten

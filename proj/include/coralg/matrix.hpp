#ifndef CORALG_MATRIX_HPP
#define CORALG_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "coralg/scalar.hpp"

namespace coralg {

/// Dense matrix over an exact field, row-major storage.
class Matrix {
 public:
  Matrix(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  }

  static Matrix identity(const Field& f, int n);
  /// Builds from nested integer lists (test convenience).
  static Matrix from_int_rows(const Field& f,
                              std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix column(const Field& f, std::initializer_list<long long> entries);

  Field field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[idx(i, j)]; }
  const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  /// Kronecker product: (A (x) B)[(i,k),(j,l)] = A[i,j] * B[k,l].
  Matrix kron(const Matrix& o) const;

  Matrix col(int j) const;
  Matrix row(int i) const;
  void set_col(int j, const Matrix& v);
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  /// Columns selected by index list.
  Matrix select_cols(const std::vector<int>& idxs) const;

  void swap_rows(int i, int j);

  std::string str() const;  // human-readable, for diagnostics

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Column vector as an n x 1 matrix.
using Vector = Matrix;

Vector unit_vector(const Field& f, int dim, int i);

}  // namespace coralg

#endif

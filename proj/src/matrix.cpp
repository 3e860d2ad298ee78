#include "coralg/matrix.hpp"

#include <sstream>

namespace coralg {

namespace {
void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("matrix shape/field mismatch");
}
}  // namespace

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_int_rows(const Field& f,
                             std::initializer_list<std::initializer_list<long long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw std::invalid_argument("ragged rows");
    int j = 0;
    for (long long v : row) m.at(i, j++) = Scalar::from_int(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::column(const Field& f, std::initializer_list<long long> entries) {
  Matrix m(f, static_cast<int>(entries.size()), 1);
  int i = 0;
  for (long long v : entries) m.at(i++, 0) = Scalar::from_int(f, v);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) r.a_[k] += o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) r.a_[k] -= o.a_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.a_)
    if (!x.is_zero()) x *= s;
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.a_)
    if (!x.is_zero()) x = -x;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l) {
          const Scalar& b = o.at(k, l);
          if (!b.is_zero()) r.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
        }
    }
  return r;
}

Matrix Matrix::col(int j) const {
  Matrix r(field_, rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Matrix Matrix::row(int i) const {
  Matrix r(field_, 1, cols_);
  for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

void Matrix::set_col(int j, const Matrix& v) {
  if (v.rows() != rows_ || v.cols() != 1) throw std::invalid_argument("set_col shape");
  for (int i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_ || field_ != o.field_) throw std::invalid_argument("hcat shape");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_ || field_ != o.field_) throw std::invalid_argument("vcat shape");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix Matrix::select_cols(const std::vector<int>& idxs) const {
  Matrix r(field_, rows_, static_cast<int>(idxs.size()));
  for (int j = 0; j < static_cast<int>(idxs.size()); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idxs[j]);
  return r;
}

void Matrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(a_[idx(i, c)], a_[idx(j, c)]);
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Vector unit_vector(const Field& f, int dim, int i) {
  Vector v(f, dim, 1);
  v.at(i, 0) = Scalar::one(f);
  return v;
}

}  // namespace coralg

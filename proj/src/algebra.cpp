#include "coralg/algebra.hpp"

namespace coralg {

Matrix Algebra::multiply(const Matrix& a, const Matrix& b) const {
  return left_mult_by(a) * b;
}

Matrix Algebra::left_mult_by(const Matrix& a) const {
  Matrix m(field, dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Scalar& ai = a.at(i, 0);
    if (ai.is_zero()) continue;
    m = m + lmul[i] * ai;
  }
  return m;
}

Matrix Algebra::right_mult_by(const Matrix& a) const {
  Matrix m(field, dim, dim);
  for (int j = 0; j < dim; ++j) {
    const Scalar& aj = a.at(j, 0);
    if (aj.is_zero()) continue;
    m = m + rmul[j] * aj;
  }
  return m;
}

std::string Algebra::basis_name(int i) const {
  if (i < static_cast<int>(basis_names.size()) && !basis_names[i].empty())
    return basis_names[i];
  return "b" + std::to_string(i);
}

Algebra make_algebra(const Field& f, int dim,
                     const std::vector<std::vector<std::vector<Scalar>>>& mu,
                     const Matrix& unit,
                     std::vector<std::string> basis_names) {
  if (dim <= 0) throw ValidationError("ShapeMismatch", "dim must be positive");
  if (static_cast<int>(mu.size()) != dim)
    throw ValidationError("ShapeMismatch", "mu has wrong outer length");
  for (const auto& row : mu) {
    if (static_cast<int>(row.size()) != dim)
      throw ValidationError("ShapeMismatch", "mu has a wrong middle length");
    for (const auto& cell : row)
      if (static_cast<int>(cell.size()) != dim)
        throw ValidationError("ShapeMismatch", "mu has a wrong inner length");
  }
  if (unit.rows() != dim || unit.cols() != 1 || unit.field() != f)
    throw ValidationError("ShapeMismatch", "unit must be a dim x 1 column over the field");

  Algebra a;
  a.field = f;
  a.dim = dim;
  a.basis_names = std::move(basis_names);
  a.unit = unit;
  a.lmul.reserve(dim);
  a.rmul.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    Matrix L(f, dim, dim), R(f, dim, dim);
    for (int j = 0; j < dim; ++j)
      for (int l = 0; l < dim; ++l) {
        L.at(l, j) = mu[i][j][l];   // column j of L_i = b_i b_j
        R.at(l, j) = mu[j][i][l];   // column j of R_i = b_j b_i
      }
    a.lmul.push_back(std::move(L));
    a.rmul.push_back(std::move(R));
  }

  // Associativity: L_i L_j = sum_l mu[i][j][l] L_l, i.e. left multiplication
  // by b_i b_j. Column k of the difference witnesses the failing triple.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Matrix expect(f, dim, dim);
      for (int l = 0; l < dim; ++l) {
        const Scalar& c = mu[i][j][l];
        if (!c.is_zero()) expect = expect + a.lmul[l] * c;
      }
      const Matrix got = a.lmul[i] * a.lmul[j];
      if (got != expect) {
        for (int k = 0; k < dim; ++k)
          if (got.col(k) != expect.col(k))
            throw ValidationError(
                "NotAssociative",
                "(" + a.basis_name(i) + " " + a.basis_name(j) + ") " + a.basis_name(k) +
                    " != " + a.basis_name(i) + " (" + a.basis_name(j) + " " + a.basis_name(k) +
                    ")  [i=" + std::to_string(i) + " j=" + std::to_string(j) +
                    " k=" + std::to_string(k) + "]");
      }
    }

  const Matrix lu = a.left_mult_by(a.unit);
  const Matrix ru = a.right_mult_by(a.unit);
  const Matrix id = Matrix::identity(f, dim);
  for (int i = 0; i < dim; ++i) {
    if (lu.col(i) != id.col(i) || ru.col(i) != id.col(i))
      throw ValidationError("UnitLawFails",
                            "unit law fails on basis element " + a.basis_name(i) +
                                " [i=" + std::to_string(i) + "]");
  }
  return a;
}

Algebra opposite(const Algebra& a) {
  std::vector<std::vector<std::vector<Scalar>>> mu_op(
      a.dim, std::vector<std::vector<Scalar>>(
                 a.dim, std::vector<Scalar>(a.dim, Scalar::zero(a.field))));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int l = 0; l < a.dim; ++l) mu_op[i][j][l] = a.mu(j, i, l);
  return make_algebra(a.field, a.dim, mu_op, a.unit, a.basis_names);
}

RingMap check_ring_map(const Matrix& f, const Algebra& source, const Algebra& target) {
  if (f.rows() != target.dim || f.cols() != source.dim || f.field() != source.field ||
      source.field != target.field)
    throw ValidationError("ShapeMismatch", "ring map matrix must be dim(target) x dim(source)");
  if (f * source.unit != target.unit)
    throw ValidationError("NotUnital", "f(1) != 1");
  for (int i = 0; i < source.dim; ++i) {
    const Matrix fi = f.col(i);
    for (int j = 0; j < source.dim; ++j) {
      Matrix src_prod(source.field, source.dim, 1);
      for (int l = 0; l < source.dim; ++l) src_prod.at(l, 0) = source.mu(i, j, l);
      if (f * src_prod != target.multiply(fi, f.col(j)))
        throw ValidationError("NotMultiplicative",
                              "f(" + source.basis_name(i) + " " + source.basis_name(j) +
                                  ") != f(" + source.basis_name(i) + ") f(" +
                                  source.basis_name(j) + ")  [i=" + std::to_string(i) +
                                  " j=" + std::to_string(j) + "]");
    }
  }
  return RingMap(source, target, f);
}

RingMap identity_map(const Algebra& a) {
  return RingMap(a, a, Matrix::identity(a.field, a.dim));
}

}  // namespace coralg

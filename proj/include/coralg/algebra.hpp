#ifndef CORALG_ALGEBRA_HPP
#define CORALG_ALGEBRA_HPP

#include <string>
#include <vector>

#include "coralg/linalg.hpp"
#include "coralg/report.hpp"

namespace coralg {

/// Finite-dimensional unital associative algebra given by structure
/// constants: b_i * b_j = sum_l mu[i][j][l] b_l. Validated at construction
/// (make_algebra); downstream code may assume associativity and unit laws.
struct Algebra {
  Field field;
  int dim = 0;
  std::vector<std::string> basis_names;
  Matrix unit;                 // dim x 1, coordinates of 1
  std::vector<Matrix> lmul;    // lmul[i] = matrix of x -> b_i * x
  std::vector<Matrix> rmul;    // rmul[j] = matrix of x -> x * b_j

  Algebra() : field(Field::rationals()), unit(field, 0, 1) {}

  Scalar mu(int i, int j, int l) const { return lmul[i].at(l, j); }

  /// Coordinates of a * b.
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  /// Matrix of x -> a * x for a given by coordinates.
  Matrix left_mult_by(const Matrix& a) const;
  /// Matrix of x -> x * a.
  Matrix right_mult_by(const Matrix& a) const;

  std::string basis_name(int i) const;
};

/// Validates shapes, all dim^3 associativity triples and the unit laws.
/// Throws ValidationError: ShapeMismatch, NotAssociative(i,j,k), UnitLawFails(i).
Algebra make_algebra(const Field& f, int dim,
                     const std::vector<std::vector<std::vector<Scalar>>>& mu,
                     const Matrix& unit,
                     std::vector<std::string> basis_names = {});

/// Same algebra with reversed multiplication: mu_op[i][j] = mu[j][i].
Algebra opposite(const Algebra& a);

/// Unital ring homomorphism between validated algebras, stored as the
/// matrix sending source coordinates to target coordinates.
struct RingMap {
  Algebra source;
  Algebra target;
  Matrix matrix;  // target.dim x source.dim

  RingMap() : matrix(Field::rationals(), 0, 0) {}
  RingMap(Algebra s, Algebra t, Matrix m)
      : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {}

  Matrix apply(const Matrix& a) const { return matrix * a; }
};

/// Validates multiplicativity on all basis pairs and unitality.
/// Throws ValidationError: NotMultiplicative(i,j), NotUnital, ShapeMismatch.
RingMap check_ring_map(const Matrix& f, const Algebra& source, const Algebra& target);

RingMap identity_map(const Algebra& a);

}  // namespace coralg

#endif

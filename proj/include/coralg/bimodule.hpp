#ifndef CORALG_BIMODULE_HPP
#define CORALG_BIMODULE_HPP

#include <optional>

#include "coralg/algebra.hpp"

namespace coralg {

/// (X,Y)-bimodule: a finite-dimensional space with a left action of X and a
/// right action of Y, both ring actions, commuting with each other. All three
/// conditions are machine-checked by make_bimodule.
struct Bimodule {
  Algebra left_ring;   // X
  Algebra right_ring;  // Y
  int dim = 0;
  std::vector<Matrix> left_act;   // left_act[i]: m -> x_i . m
  std::vector<Matrix> right_act;  // right_act[j]: m -> m . y_j

  /// Matrix of m -> a.m for a in X-coordinates.
  Matrix left_act_by(const Matrix& a) const;
  /// Matrix of m -> m.a for a in Y-coordinates.
  Matrix right_act_by(const Matrix& a) const;
};

/// Throws ValidationError: ShapeMismatch, LeftActionNotRingAction(i,j),
/// RightActionNotRingAction(i,j), ActionsDontCommute(i,j).
Bimodule make_bimodule(const Algebra& left_ring, const Algebra& right_ring,
                       std::vector<Matrix> left_act, std::vector<Matrix> right_act);

/// A as an (A,A)-bimodule by left/right multiplication.
Bimodule regular_bimodule(const Algebra& a);

/// Pulls the actions of M back along ring maps (either side optional):
/// the left X'-action becomes x' . m = f_left(x') . m, and similarly on the
/// right. Result is re-validated.
Bimodule restrict_scalars(const Bimodule& m, const RingMap* left, const RingMap* right);

/// Quotient of an ambient coordinate space by the span of relation vectors,
/// with the lexicographically-first surviving ambient basis vectors as the
/// quotient basis. project * lift = I; project kills exactly the relations.
struct QuotientPresentation {
  Field field;
  int ambient_dim = 0;
  int dim = 0;
  std::vector<int> basis_index;  // indices of kept ambient basis vectors
  Matrix project;                // dim x ambient_dim
  Matrix lift;                   // ambient_dim x dim

  QuotientPresentation()
      : field(Field::rationals()), project(field, 0, 0), lift(field, 0, 0) {}
};

QuotientPresentation quotient_by(TrailingEchelon& relations);

/// M (x)_A N presented as a quotient of the ambient M (x)_k N (row-major
/// pure-tensor index i * dim(N) + j) by span{ m.a (x) n - m (x) a.n }.
/// The quotient carries the induced outer (X,Y)-bimodule structure.
struct TensorPresentation {
  QuotientPresentation pres;
  Bimodule quotient;  // over (X, Y)
  int dim_left = 0;   // dim M
  int dim_right = 0;  // dim N

  int dim() const { return pres.dim; }
  const Matrix& project() const { return pres.project; }
  const Matrix& lift() const { return pres.lift; }

  /// Class of a pure tensor of coordinate vectors.
  Matrix pure(const Matrix& m, const Matrix& n) const;
};

/// Requires M.right_ring == N.left_ring (the middle algebra).
/// Throws ValidationError: MiddleRingMismatch.
TensorPresentation tensor_over(const Bimodule& m, const Bimodule& n);

/// Basis of M^A = { m : a.m = m.a for all a }, as columns.
/// Requires left_ring == right_ring. Throws ValidationError: RingMismatch.
Matrix invariants(const Bimodule& m);

struct HomFlags {
  bool left = false;
  bool right = false;
};

/// Basis of the space of maps f: M -> N intertwining the requested actions
/// (f(a.m) = a.f(m) and/or f(m.a) = f(m).a), returned as matrices.
std::vector<Matrix> hom_space(const Bimodule& m, const Bimodule& n, HomFlags flags);

/// Basis of the left dual *M = Hom_{A-}(M, A): left-A-linear functionals
/// M -> A, each a dim(A) x dim(M) matrix. dual_right gives Hom_{-A}(M, A).
std::vector<Matrix> dual_left(const Bimodule& m);
std::vector<Matrix> dual_right(const Bimodule& m);

/// Basis of { F : F * on_source[i] = on_target[i] * F for all i }.
/// The bare intertwiner solver behind hom_space, for module maps that are
/// not packaged as bimodules.
std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& on_source,
                                      const std::vector<Matrix>& on_target,
                                      int source_dim, int target_dim, const Field& f);

/// Canonical isomorphism (M (x)_A N) (x)_A P -> M (x)_A (N (x)_A P) on the
/// given presentations; the result is verified invertible.
Matrix reassociate(const TensorPresentation& mn, const TensorPresentation& mn_p,
                   const TensorPresentation& np, const TensorPresentation& m_np);

/// Coordinates of a matrix inside the span of a basis of matrices
/// (flattened); nullopt if outside.
std::optional<Matrix> matrix_coordinates(const std::vector<Matrix>& basis, const Matrix& v);

/// The member of the span with the given coordinates.
Matrix matrix_combination(const std::vector<Matrix>& basis, const Matrix& coords);

}  // namespace coralg

#endif

#ifndef CORALG_LINALG_HPP
#define CORALG_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "coralg/matrix.hpp"

namespace coralg {

/// Reduced row echelon form. Pivoting picks the first nonzero entry of each
/// column, so the result depends only on the row space; RREF itself is unique.
struct RrefResult {
  Matrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

RrefResult rref(Matrix m);

int rank(const Matrix& m);

/// Determinant of a square matrix (exact, by elimination).
Scalar det(const Matrix& m);

/// Columns form the canonical kernel basis (free-column parameterization of
/// the RREF, one basis vector per non-pivot column).
Matrix kernel_basis(const Matrix& m);

struct SolveResult {
  bool consistent = false;
  Matrix x;       // one exact solution (cols = b's cols) when consistent
  Matrix kernel;  // kernel basis of M (independent of b)
};

/// Solves M x = b exactly; also returns the kernel basis.
SolveResult solve(const Matrix& m, const Matrix& b);

/// Inverse of a square invertible matrix; std::nullopt when singular.
std::optional<Matrix> try_inverse(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws std::domain_error when singular

/// Expresses each column of `v` in the span of `basis` columns; nullopt if
/// some column is outside the span.
std::optional<Matrix> coordinates_in_span(const Matrix& basis, const Matrix& v);

/// Deterministic column of integers in [-bound, bound], embedded as Scalars.
/// PRNG: std::mt19937_64 seeded with `seed`; entry = (draw mod (2*bound+1)) - bound.
Vector random_vector(const Field& f, int dim, std::uint64_t seed, long long bound);

/// Derives an independent stream seed (splitmix64 step over seed ^ stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Incremental echelon with pivots at the *last* nonzero coordinate of each
/// row. Feeding relation vectors and taking the complement of the pivot set
/// yields the lexicographically-first basis of the quotient.
class TrailingEchelon {
 public:
  TrailingEchelon(Field f, int n) : field_(f), n_(n) {}

  /// Reduces v against the current rows; inserts the remainder if nonzero.
  /// Returns true when the rank grew.
  bool add(std::vector<Scalar> v);

  /// Back-substitutes so every stored row is zero at all other pivots.
  void finalize();

  const std::map<int, std::vector<Scalar>>& rows() const { return rows_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  Field field() const { return field_; }
  std::vector<int> pivots() const;
  std::vector<int> non_pivots() const;

 private:
  Field field_;
  int n_;
  std::map<int, std::vector<Scalar>> rows_;  // pivot index -> row, row[pivot] == 1
};

}  // namespace coralg

#endif

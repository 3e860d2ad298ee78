#include "coralg/linalg.hpp"

#include <random>

namespace coralg {

RrefResult rref(Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    m.swap_rows(r, p);
    const Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < cols; ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar factor = m.at(i, c);
      if (factor.is_zero()) continue;
      for (int j = c; j < cols; ++j) {
        const Scalar& rj = m.at(r, j);
        if (!rj.is_zero()) m.at(i, j) -= factor * rj;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots), r};
}

int rank(const Matrix& m) { return rref(m).rank; }

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = m;
  const Field f = a.field();
  const int n = a.rows();
  Scalar d = Scalar::one(f);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) return Scalar::zero(f);
    if (p != c) {
      a.swap_rows(c, p);
      d = -d;
    }
    const Scalar piv = a.at(c, c);
    d *= piv;
    const Scalar inv = piv.inverse();
    for (int i = c + 1; i < n; ++i) {
      const Scalar factor = a.at(i, c);
      if (factor.is_zero()) continue;
      const Scalar t = factor * inv;
      for (int j = c; j < n; ++j) {
        const Scalar& rj = a.at(c, j);
        if (!rj.is_zero()) a.at(i, j) -= t * rj;
      }
    }
  }
  return d;
}

Matrix kernel_basis(const Matrix& m) {
  const Field f = m.field();
  const int cols = m.cols();
  const RrefResult e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, cols, static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    const int fc = free_cols[j];
    k.at(fc, j) = Scalar::one(f);
    for (int r = 0; r < e.rank; ++r)
      k.at(e.pivot_cols[r], j) = -e.mat.at(r, fc);
  }
  return k;
}

SolveResult solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows() || m.field() != b.field())
    throw std::invalid_argument("solve: dimension mismatch");
  const Field f = m.field();
  const RrefResult e = rref(m.hcat(b));
  SolveResult res{true, Matrix(f, m.cols(), b.cols()), kernel_basis(m)};
  // A pivot in the appended block means that column of b is outside the span.
  for (int c : e.pivot_cols)
    if (c >= m.cols()) { res.consistent = false; return res; }
  for (int r = 0; r < e.rank; ++r)
    for (int j = 0; j < b.cols(); ++j)
      res.x.at(e.pivot_cols[r], j) = e.mat.at(r, m.cols() + j);
  return res;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  const RrefResult e = rref(m.hcat(Matrix::identity(m.field(), n)));
  if (e.rank < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
  return inv;
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::domain_error("matrix is singular");
  return *inv;
}

std::optional<Matrix> coordinates_in_span(const Matrix& basis, const Matrix& v) {
  SolveResult s = solve(basis, v);
  if (!s.consistent) return std::nullopt;
  return s.x;
}

Vector random_vector(const Field& f, int dim, std::uint64_t seed, long long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::mt19937_64 gen(seed);
  Vector v(f, dim, 1);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  for (int i = 0; i < dim; ++i) {
    const long long draw = static_cast<long long>(gen() % span) - bound;
    v.at(i, 0) = Scalar::from_int(f, draw);
  }
  return v;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step; keeps per-use streams decorrelated under one user seed
  std::uint64_t z = seed ^ (stream + 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool TrailingEchelon::add(std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("TrailingEchelon: wrong length");
  int t = n_ - 1;
  for (;;) {
    while (t >= 0 && v[static_cast<std::size_t>(t)].is_zero()) --t;
    if (t < 0) return false;
    auto it = rows_.find(t);
    if (it == rows_.end()) break;
    const Scalar factor = v[static_cast<std::size_t>(t)];
    const std::vector<Scalar>& row = it->second;
    for (int j = 0; j <= t; ++j)
      if (!row[static_cast<std::size_t>(j)].is_zero())
        v[static_cast<std::size_t>(j)] -= factor * row[static_cast<std::size_t>(j)];
  }
  const Scalar inv = v[static_cast<std::size_t>(t)].inverse();
  for (int j = 0; j <= t; ++j)
    if (!v[static_cast<std::size_t>(j)].is_zero()) v[static_cast<std::size_t>(j)] *= inv;
  rows_.emplace(t, std::move(v));
  return true;
}

void TrailingEchelon::finalize() {
  // Ascending pivot order: each row is reduced against already-reduced rows.
  for (auto it = rows_.begin(); it != rows_.end(); ++it) {
    std::vector<Scalar>& row = it->second;
    for (auto jt = rows_.begin(); jt != it; ++jt) {
      const int p = jt->first;
      Scalar factor = row[static_cast<std::size_t>(p)];
      if (factor.is_zero()) continue;
      const std::vector<Scalar>& prow = jt->second;
      for (int j = 0; j <= p; ++j)
        if (!prow[static_cast<std::size_t>(j)].is_zero())
          row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
    }
  }
}

std::vector<int> TrailingEchelon::pivots() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& [piv, _] : rows_) p.push_back(piv);
  return p;
}

std::vector<int> TrailingEchelon::non_pivots() const {
  std::vector<int> np;
  auto it = rows_.begin();
  for (int c = 0; c < n_; ++c) {
    if (it != rows_.end() && it->first == c) { ++it; continue; }
    np.push_back(c);
  }
  return np;
}

}  // namespace coralg

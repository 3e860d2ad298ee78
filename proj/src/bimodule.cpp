#include "coralg/bimodule.hpp"

namespace coralg {

Matrix Bimodule::left_act_by(const Matrix& a) const {
  Matrix r(left_ring.field, dim, dim);
  for (int i = 0; i < left_ring.dim; ++i) {
    const Scalar& ai = a.at(i, 0);
    if (!ai.is_zero()) r = r + left_act[i] * ai;
  }
  return r;
}

Matrix Bimodule::right_act_by(const Matrix& a) const {
  Matrix r(right_ring.field, dim, dim);
  for (int j = 0; j < right_ring.dim; ++j) {
    const Scalar& aj = a.at(j, 0);
    if (!aj.is_zero()) r = r + right_act[j] * aj;
  }
  return r;
}

namespace {

// act(b_i) act(b_j) must equal act(b_i b_j); for right actions the roles of
// i and j swap because (m.y_i).y_j = m.(y_i y_j).
void check_ring_action(const Algebra& ring, const std::vector<Matrix>& act, int dim,
                       bool is_left, const char* code) {
  const Field f = ring.field;
  for (int i = 0; i < ring.dim; ++i)
    for (int j = 0; j < ring.dim; ++j) {
      Matrix expect(f, dim, dim);
      for (int l = 0; l < ring.dim; ++l) {
        const Scalar c = ring.mu(i, j, l);
        if (!c.is_zero()) expect = expect + act[l] * c;
      }
      const Matrix got = is_left ? act[i] * act[j] : act[j] * act[i];
      if (got != expect)
        throw ValidationError(code, "action violates the product on basis pair (i=" +
                                        std::to_string(i) + ", j=" + std::to_string(j) + ")");
    }
  Matrix unit_act(f, dim, dim);
  for (int i = 0; i < ring.dim; ++i) {
    const Scalar& u = ring.unit.at(i, 0);
    if (!u.is_zero()) unit_act = unit_act + act[i] * u;
  }
  if (!unit_act.is_identity())
    throw ValidationError(code, "unit does not act as the identity");
}

}  // namespace

Bimodule make_bimodule(const Algebra& left_ring, const Algebra& right_ring,
                       std::vector<Matrix> left_act, std::vector<Matrix> right_act) {
  if (left_ring.field != right_ring.field)
    throw ValidationError("ShapeMismatch", "left and right rings over different fields");
  if (static_cast<int>(left_act.size()) != left_ring.dim ||
      static_cast<int>(right_act.size()) != right_ring.dim)
    throw ValidationError("ShapeMismatch", "one action matrix per ring basis element");
  int dim = -1;
  for (const auto& m : left_act) {
    if (dim < 0) dim = m.rows();
    if (m.rows() != dim || m.cols() != dim || m.field() != left_ring.field)
      throw ValidationError("ShapeMismatch", "left action matrices must be square of equal size");
  }
  for (const auto& m : right_act)
    if (m.rows() != dim || m.cols() != dim || m.field() != left_ring.field)
      throw ValidationError("ShapeMismatch", "right action matrices must match the module size");
  if (dim < 0) throw ValidationError("ShapeMismatch", "cannot infer module dimension");

  check_ring_action(left_ring, left_act, dim, true, "LeftActionNotRingAction");
  check_ring_action(right_ring, right_act, dim, false, "RightActionNotRingAction");
  for (int i = 0; i < left_ring.dim; ++i)
    for (int j = 0; j < right_ring.dim; ++j)
      if (left_act[i] * right_act[j] != right_act[j] * left_act[i])
        throw ValidationError("ActionsDontCommute", "left basis i=" + std::to_string(i) +
                                                        " vs right basis j=" + std::to_string(j));

  Bimodule b;
  b.left_ring = left_ring;
  b.right_ring = right_ring;
  b.dim = dim;
  b.left_act = std::move(left_act);
  b.right_act = std::move(right_act);
  return b;
}

Bimodule regular_bimodule(const Algebra& a) {
  return make_bimodule(a, a, a.lmul, a.rmul);
}

Bimodule restrict_scalars(const Bimodule& m, const RingMap* left, const RingMap* right) {
  const Algebra& lr = left ? left->source : m.left_ring;
  const Algebra& rr = right ? right->source : m.right_ring;
  std::vector<Matrix> lact, ract;
  if (left) {
    for (int i = 0; i < lr.dim; ++i) lact.push_back(m.left_act_by(left->matrix.col(i)));
  } else {
    lact = m.left_act;
  }
  if (right) {
    for (int j = 0; j < rr.dim; ++j) ract.push_back(m.right_act_by(right->matrix.col(j)));
  } else {
    ract = m.right_act;
  }
  return make_bimodule(lr, rr, std::move(lact), std::move(ract));
}

QuotientPresentation quotient_by(TrailingEchelon& relations) {
  relations.finalize();
  QuotientPresentation q;
  q.field = relations.field();
  q.ambient_dim = relations.ambient();
  q.basis_index = relations.non_pivots();
  q.dim = static_cast<int>(q.basis_index.size());
  q.project = Matrix(q.field, q.dim, q.ambient_dim);
  q.lift = Matrix(q.field, q.ambient_dim, q.dim);
  std::vector<int> pos(static_cast<std::size_t>(q.ambient_dim), -1);
  for (int t = 0; t < q.dim; ++t) {
    pos[static_cast<std::size_t>(q.basis_index[t])] = t;
    q.project.at(t, q.basis_index[t]) = Scalar::one(q.field);
    q.lift.at(q.basis_index[t], t) = Scalar::one(q.field);
  }
  // A pivot basis vector maps to minus the non-pivot tail of its reduced row.
  for (const auto& [piv, row] : relations.rows())
    for (int j = 0; j < piv; ++j) {
      const Scalar& c = row[static_cast<std::size_t>(j)];
      if (!c.is_zero() && pos[static_cast<std::size_t>(j)] >= 0)
        q.project.at(pos[static_cast<std::size_t>(j)], piv) = -c;
    }
  return q;
}

Matrix TensorPresentation::pure(const Matrix& m, const Matrix& n) const {
  Matrix amb(pres.field, pres.ambient_dim, 1);
  for (int i = 0; i < dim_left; ++i) {
    const Scalar& mi = m.at(i, 0);
    if (mi.is_zero()) continue;
    for (int j = 0; j < dim_right; ++j) {
      const Scalar& nj = n.at(j, 0);
      if (!nj.is_zero()) amb.at(i * dim_right + j, 0) = mi * nj;
    }
  }
  return pres.project * amb;
}

TensorPresentation tensor_over(const Bimodule& m, const Bimodule& n) {
  const Algebra& mid = m.right_ring;
  // Middle algebras must be the same presented algebra.
  if (mid.dim != n.left_ring.dim || mid.field != n.left_ring.field ||
      mid.unit != n.left_ring.unit)
    throw ValidationError("MiddleRingMismatch", "M.right_ring != N.left_ring");
  for (int i = 0; i < mid.dim; ++i)
    if (mid.lmul[i] != n.left_ring.lmul[i])
      throw ValidationError("MiddleRingMismatch", "structure constants differ at basis " +
                                                      std::to_string(i));

  const Field f = mid.field;
  const int dm = m.dim, dn = n.dim;
  const int ambient = dm * dn;
  TrailingEchelon ech(f, ambient);
  std::vector<Scalar> rel(static_cast<std::size_t>(ambient), Scalar::zero(f));
  for (int a = 0; a < mid.dim; ++a) {
    const Matrix& ra = m.right_act[a];
    const Matrix& la = n.left_act[a];
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j) {
        bool nonzero = false;
        for (int l = 0; l < dm; ++l) {
          const Scalar& c = ra.at(l, i);
          if (!c.is_zero()) { rel[static_cast<std::size_t>(l) * dn + j] += c; nonzero = true; }
        }
        for (int l = 0; l < dn; ++l) {
          const Scalar& c = la.at(l, j);
          if (!c.is_zero()) { rel[static_cast<std::size_t>(i) * dn + l] -= c; nonzero = true; }
        }
        if (nonzero) {
          ech.add(rel);
          std::fill(rel.begin(), rel.end(), Scalar::zero(f));
        }
      }
  }

  TensorPresentation t;
  t.pres = quotient_by(ech);
  t.pres.field = f;
  t.dim_left = dm;
  t.dim_right = dn;

  const Matrix idn = Matrix::identity(f, dn);
  const Matrix idm = Matrix::identity(f, dm);
  std::vector<Matrix> lact, ract;
  for (int i = 0; i < m.left_ring.dim; ++i)
    lact.push_back(t.pres.project * m.left_act[i].kron(idn) * t.pres.lift);
  for (int j = 0; j < n.right_ring.dim; ++j)
    ract.push_back(t.pres.project * idm.kron(n.right_act[j]) * t.pres.lift);
  t.quotient = make_bimodule(m.left_ring, n.right_ring, std::move(lact), std::move(ract));
  return t;
}

Matrix invariants(const Bimodule& m) {
  const Algebra& a = m.left_ring;
  if (a.dim != m.right_ring.dim || a.unit != m.right_ring.unit)
    throw ValidationError("RingMismatch", "invariants need an (A,A)-bimodule");
  for (int i = 0; i < a.dim; ++i)
    if (a.lmul[i] != m.right_ring.lmul[i])
      throw ValidationError("RingMismatch", "left and right rings differ");
  Matrix stacked(a.field, 0, m.dim);
  for (int i = 0; i < a.dim; ++i)
    stacked = stacked.vcat(m.left_act[i] - m.right_act[i]);
  return kernel_basis(stacked);
}

std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& on_source,
                                      const std::vector<Matrix>& on_target,
                                      int source_dim, int target_dim, const Field& f) {
  if (on_source.size() != on_target.size())
    throw std::invalid_argument("intertwiner_space: length mismatch");
  const int unknowns = target_dim * source_dim;
  Matrix op(f, 0, unknowns);
  const Matrix idr = Matrix::identity(f, target_dim);
  const Matrix idc = Matrix::identity(f, source_dim);
  // Row-major vec: vec(F S) = (I (x) S^T) vec F, vec(T F) = (T (x) I) vec F.
  for (std::size_t i = 0; i < on_source.size(); ++i)
    op = op.vcat(idr.kron(on_source[i].transpose()) - on_target[i].kron(idc));
  const Matrix k = op.rows() == 0 ? Matrix::identity(f, unknowns) : kernel_basis(op);
  std::vector<Matrix> basis;
  basis.reserve(k.cols());
  for (int c = 0; c < k.cols(); ++c) {
    Matrix fm(f, target_dim, source_dim);
    for (int i = 0; i < target_dim; ++i)
      for (int j = 0; j < source_dim; ++j) fm.at(i, j) = k.at(i * source_dim + j, c);
    basis.push_back(std::move(fm));
  }
  return basis;
}

std::vector<Matrix> hom_space(const Bimodule& m, const Bimodule& n, HomFlags flags) {
  if (flags.left && (m.left_ring.dim != n.left_ring.dim || m.left_ring.unit != n.left_ring.unit))
    throw ValidationError("RingMismatch", "left rings differ");
  if (flags.right &&
      (m.right_ring.dim != n.right_ring.dim || m.right_ring.unit != n.right_ring.unit))
    throw ValidationError("RingMismatch", "right rings differ");
  const Field f = m.left_ring.field;
  std::vector<Matrix> on_source, on_target;
  if (flags.left)
    for (int i = 0; i < m.left_ring.dim; ++i) {
      on_source.push_back(m.left_act[i]);
      on_target.push_back(n.left_act[i]);
    }
  if (flags.right)
    for (int j = 0; j < m.right_ring.dim; ++j) {
      on_source.push_back(m.right_act[j]);
      on_target.push_back(n.right_act[j]);
    }
  return intertwiner_space(on_source, on_target, m.dim, n.dim, f);
}

std::vector<Matrix> dual_left(const Bimodule& m) {
  Bimodule a_reg = regular_bimodule(m.left_ring);
  return hom_space(m, a_reg, HomFlags{true, false});
}

std::vector<Matrix> dual_right(const Bimodule& m) {
  Bimodule a_reg = regular_bimodule(m.right_ring);
  return hom_space(m, a_reg, HomFlags{false, true});
}

Matrix reassociate(const TensorPresentation& mn, const TensorPresentation& mn_p,
                   const TensorPresentation& np, const TensorPresentation& m_np) {
  // (M (x) N) (x) P -> M (x) (N (x) P): lift twice, regroup pure indices,
  // project twice. Everything in sight is A-balanced, so the composite is
  // well defined on the quotients.
  const Field f = mn.pres.field;
  const int dm = mn.dim_left, dn = mn.dim_right, dp = mn_p.dim_right;
  if (mn_p.dim_left != mn.dim() || np.dim_left != dn || np.dim_right != dp ||
      m_np.dim_left != dm || m_np.dim_right != np.dim())
    throw ValidationError("ShapeMismatch", "presentations do not chain");
  Matrix out(f, m_np.dim(), mn_p.dim());
  for (int c = 0; c < mn_p.dim(); ++c) {
    const Matrix w = mn_p.lift() * unit_vector(f, mn_p.dim(), c);  // (dim MN * dp) x 1
    Matrix acc(f, m_np.dim(), 1);
    for (int t = 0; t < mn.dim(); ++t)
      for (int p = 0; p < dp; ++p) {
        const Scalar& wtp = w.at(t * dp + p, 0);
        if (wtp.is_zero()) continue;
        const Matrix u = mn.lift() * unit_vector(f, mn.dim(), t);  // (dm*dn) x 1
        for (int i = 0; i < dm; ++i)
          for (int j = 0; j < dn; ++j) {
            const Scalar& uij = u.at(i * dn + j, 0);
            if (uij.is_zero()) continue;
            acc = acc + m_np.pure(unit_vector(f, dm, i),
                                  np.pure(unit_vector(f, dn, j), unit_vector(f, dp, p))) *
                            (wtp * uij);
          }
      }
    out.set_col(c, acc);
  }
  if (!try_inverse(out))
    throw ValidationError("ReassociationNotInvertible", "canonical map is singular");
  return out;
}

std::optional<Matrix> matrix_coordinates(const std::vector<Matrix>& basis, const Matrix& v) {
  if (basis.empty()) return v.is_zero() ? std::optional<Matrix>(Matrix(v.field(), 0, 1))
                                        : std::nullopt;
  const Field f = v.field();
  const int n = v.rows() * v.cols();
  Matrix stacked(f, n, static_cast<int>(basis.size()));
  for (int b = 0; b < static_cast<int>(basis.size()); ++b)
    for (int i = 0; i < v.rows(); ++i)
      for (int j = 0; j < v.cols(); ++j)
        stacked.at(i * v.cols() + j, b) = basis[static_cast<std::size_t>(b)].at(i, j);
  Matrix flat(f, n, 1);
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) flat.at(i * v.cols() + j, 0) = v.at(i, j);
  return coordinates_in_span(stacked, flat);
}

Matrix matrix_combination(const std::vector<Matrix>& basis, const Matrix& coords) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  Matrix r(basis[0].field(), basis[0].rows(), basis[0].cols());
  for (int b = 0; b < static_cast<int>(basis.size()); ++b) {
    const Scalar& c = coords.at(b, 0);
    if (!c.is_zero()) r = r + basis[static_cast<std::size_t>(b)] * c;
  }
  return r;
}

}  // namespace coralg

#include "coralg/coring.hpp"

namespace coralg {

namespace {

// Presentation of M (x)_A N without the induced outer actions (projection
// target only, e.g. triple tensors in the coassociativity check).
QuotientPresentation tensor_quotient(const Bimodule& m, const Bimodule& n) {
  const Algebra& mid = m.right_ring;
  if (mid.dim != n.left_ring.dim || mid.unit != n.left_ring.unit)
    throw ValidationError("MiddleRingMismatch", "M.right_ring != N.left_ring");
  const Field f = mid.field;
  const int dm = m.dim, dn = n.dim;
  TrailingEchelon ech(f, dm * dn);
  std::vector<Scalar> rel(static_cast<std::size_t>(dm) * dn, Scalar::zero(f));
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
  return quotient_by(ech);
}

struct AxiomCheck {
  Coring coring;
  Report report;
};

AxiomCheck run_coring_checks(const Algebra& base, const Bimodule& carrier,
                             const Matrix& coproduct_raw, const Matrix& counit) {
  const Field f = base.field;
  const int n = carrier.dim;
  if (carrier.left_ring.dim != base.dim || carrier.right_ring.dim != base.dim ||
      carrier.left_ring.unit != base.unit || carrier.right_ring.unit != base.unit)
    throw ValidationError("ShapeMismatch", "carrier must be an (A,A)-bimodule over the base");
  if (coproduct_raw.rows() != n * n || coproduct_raw.cols() != n)
    throw ValidationError("ShapeMismatch", "coproduct_raw must be dim(C)^2 x dim(C)");
  if (counit.rows() != base.dim || counit.cols() != n)
    throw ValidationError("ShapeMismatch", "counit must be dim(A) x dim(C)");

  AxiomCheck out;
  out.coring.base = base;
  out.coring.carrier = carrier;
  out.coring.cc = tensor_over(carrier, carrier);
  out.coring.coproduct = out.coring.cc.project() * coproduct_raw;
  out.coring.counit = counit;
  Report& rep = out.report;

  const Coring& c = out.coring;
  const Matrix& delta = c.coproduct;

  for (int i = 0; i < base.dim; ++i) {
    if (delta * carrier.left_act[i] != c.cc.quotient.left_act[i] * delta) {
      rep.record("coproduct.bimodule.left", false, "fails at base index " + std::to_string(i));
      break;
    }
    if (i == base.dim - 1) rep.record("coproduct.bimodule.left", true);
  }
  for (int i = 0; i < base.dim; ++i) {
    if (delta * carrier.right_act[i] != c.cc.quotient.right_act[i] * delta) {
      rep.record("coproduct.bimodule.right", false, "fails at base index " + std::to_string(i));
      break;
    }
    if (i == base.dim - 1) rep.record("coproduct.bimodule.right", true);
  }
  for (int i = 0; i < base.dim; ++i) {
    if (counit * carrier.left_act[i] != base.lmul[i] * counit) {
      rep.record("counit.bimodule.left", false, "fails at base index " + std::to_string(i));
      break;
    }
    if (i == base.dim - 1) rep.record("counit.bimodule.left", true);
  }
  for (int i = 0; i < base.dim; ++i) {
    if (counit * carrier.right_act[i] != base.rmul[i] * counit) {
      rep.record("counit.bimodule.right", false, "fails at base index " + std::to_string(i));
      break;
    }
    if (i == base.dim - 1) rep.record("counit.bimodule.right", true);
  }

  // Coassociativity through the left-associated triple (C (x)_A C) (x)_A C.
  const QuotientPresentation t3 = tensor_quotient(c.cc.quotient, carrier);
  const Matrix lifted = c.coproduct_lifted();  // n^2 x n
  const Matrix id_n = Matrix::identity(f, n);
  const Matrix route_first = t3.project * delta.kron(id_n) * lifted;
  const Matrix embed = t3.project * c.cc.project().kron(id_n);  // n^3 -> T3
  const Matrix route_second = embed * id_n.kron(lifted) * lifted;
  if (route_first == route_second) {
    rep.record("coassociativity", true);
  } else {
    int witness = 0;
    for (int j = 0; j < n; ++j)
      if (route_first.col(j) != route_second.col(j)) { witness = j; break; }
    rep.record("coassociativity", false,
               "(Delta (x) I) Delta != (I (x) Delta) Delta at basis index " +
                   std::to_string(witness));
  }

  // Counit laws: (eps (x) I) Delta = I = (I (x) eps) Delta.
  bool left_ok = true, right_ok = true;
  int left_witness = -1, right_witness = -1;
  for (int cidx = 0; cidx < n; ++cidx) {
    const Matrix w = lifted.col(cidx);
    Matrix acc_left(f, n, 1), acc_right(f, n, 1);
    for (int u = 0; u < n; ++u) {
      Matrix wu(f, n, 1), wv(f, n, 1);
      bool any_u = false, any_v = false;
      for (int v = 0; v < n; ++v) {
        const Scalar& x = w.at(u * n + v, 0);
        if (!x.is_zero()) { wu.at(v, 0) = x; any_u = true; }
        const Scalar& y = w.at(v * n + u, 0);
        if (!y.is_zero()) { wv.at(v, 0) = y; any_v = true; }
      }
      if (any_u) acc_left = acc_left + carrier.left_act_by(counit.col(u)) * wu;
      if (any_v) acc_right = acc_right + carrier.right_act_by(counit.col(u)) * wv;
    }
    if (left_ok && acc_left != unit_vector(f, n, cidx)) { left_ok = false; left_witness = cidx; }
    if (right_ok && acc_right != unit_vector(f, n, cidx)) { right_ok = false; right_witness = cidx; }
  }
  rep.record("counit.law.left", left_ok,
             left_ok ? "" : "(eps (x) I) Delta != I at basis index " + std::to_string(left_witness));
  rep.record("counit.law.right", right_ok,
             right_ok ? "" : "(I (x) eps) Delta != I at basis index " + std::to_string(right_witness));
  return out;
}

}  // namespace

Report check_coring_axioms(const Algebra& base, const Bimodule& carrier,
                           const Matrix& coproduct_raw, const Matrix& counit) {
  return run_coring_checks(base, carrier, coproduct_raw, counit).report;
}

Coring make_coring(const Algebra& base, const Bimodule& carrier,
                   const Matrix& coproduct_raw, const Matrix& counit) {
  AxiomCheck out = run_coring_checks(base, carrier, coproduct_raw, counit);
  if (!out.report.pass) {
    const ClauseResult* fail = out.report.first_failure();
    std::string code = "CounitLawFails";
    if (fail->clause == "coassociativity") code = "NotCoassociative";
    if (fail->clause.find("bimodule") != std::string::npos) code = "NotBimoduleMap";
    throw ValidationError(code, fail->clause + (fail->detail.empty() ? "" : ", " + fail->detail));
  }
  return std::move(out.coring);
}

Coring trivial_coring(const Algebra& a) {
  const Field f = a.field;
  const int n = a.dim;
  Matrix delta_raw(f, n * n, n);
  for (int c = 0; c < n; ++c)
    for (int l = 0; l < n; ++l) {
      const Scalar& u = a.unit.at(l, 0);
      if (!u.is_zero()) delta_raw.at(c * n + l, c) = u;  // c -> c (x) 1
    }
  return make_coring(a, regular_bimodule(a), delta_raw, Matrix::identity(f, n));
}

SweedlerCoring sweedler_coring(const RingMap& ext) {
  const Algebra& a = ext.target;
  const Field f = a.field;
  Bimodule a_reg = regular_bimodule(a);
  Bimodule a_as_ab = restrict_scalars(a_reg, nullptr, &ext);  // (A,B)
  Bimodule a_as_ba = restrict_scalars(a_reg, &ext, nullptr);  // (B,A)
  TensorPresentation pres = tensor_over(a_as_ab, a_as_ba);    // A (x)_B A over (A,A)

  const int t = pres.dim();
  const int n = a.dim;
  // Delta [a_u (x) a_v] = [a_u (x) 1] (x) [1 (x) a_v]; the raw map lives on
  // the k-tensor of the carrier with itself and is projected by make_coring.
  Matrix delta_raw(f, t * t, t);
  Matrix counit(f, n, t);
  for (int col = 0; col < t; ++col) {
    const int pure = pres.pres.basis_index[col];
    const int u = pure / n, v = pure % n;
    const Matrix first = pres.pure(unit_vector(f, n, u), a.unit);
    const Matrix second = pres.pure(a.unit, unit_vector(f, n, v));
    for (int i = 0; i < t; ++i) {
      const Scalar& fi = first.at(i, 0);
      if (fi.is_zero()) continue;
      for (int j = 0; j < t; ++j) {
        const Scalar& sj = second.at(j, 0);
        if (!sj.is_zero()) delta_raw.at(i * t + j, col) = fi * sj;
      }
    }
    counit.set_col(col, a.multiply(unit_vector(f, n, u), unit_vector(f, n, v)));
  }

  SweedlerCoring sw;
  sw.coring = make_coring(a, pres.quotient, delta_raw, counit);
  sw.ext = ext;
  sw.carrier_pres = std::move(pres);
  sw.grouplike = sw.carrier_pres.pure(a.unit, a.unit);
  return sw;
}

namespace {

// (xi xi')(c) for the left dual: xi(c_(1) xi'(c_(2))).
Matrix convolve_left(const Coring& c, const Matrix& xi, const Matrix& xi2) {
  const Field f = c.base.field;
  const int n = c.dim();
  const Matrix lifted = c.coproduct_lifted();
  Matrix out(f, c.base.dim, n);
  std::vector<Matrix> rv;
  rv.reserve(n);
  for (int v = 0; v < n; ++v) rv.push_back(c.carrier.right_act_by(xi2.col(v)));
  for (int col = 0; col < n; ++col) {
    Matrix acc(f, n, 1);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const Scalar& w = lifted.at(u * n + v, col);
        if (!w.is_zero()) acc = acc + rv[static_cast<std::size_t>(v)].col(u) * w;
      }
    out.set_col(col, xi * acc);
  }
  return out;
}

// (xi xi')(c) for the right dual: xi'(xi(c_(1)) c_(2)).
Matrix convolve_right(const Coring& c, const Matrix& xi, const Matrix& xi2) {
  const Field f = c.base.field;
  const int n = c.dim();
  const Matrix lifted = c.coproduct_lifted();
  Matrix out(f, c.base.dim, n);
  std::vector<Matrix> lu;
  lu.reserve(n);
  for (int u = 0; u < n; ++u) lu.push_back(c.carrier.left_act_by(xi.col(u)));
  for (int col = 0; col < n; ++col) {
    Matrix acc(f, n, 1);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const Scalar& w = lifted.at(u * n + v, col);
        if (!w.is_zero()) acc = acc + lu[static_cast<std::size_t>(u)].col(v) * w;
      }
    out.set_col(col, xi2 * acc);
  }
  return out;
}

}  // namespace

DualRing dual_ring(const Coring& c, Side side) {
  const Field f = c.base.field;
  DualRing d;
  d.side = side;
  d.functionals = side == Side::Left ? dual_left(c.carrier) : dual_right(c.carrier);
  const int dd = static_cast<int>(d.functionals.size());
  if (dd == 0) throw ValidationError("DualRingEmpty", "dual space is zero");

  std::vector<std::vector<std::vector<Scalar>>> mu(
      dd, std::vector<std::vector<Scalar>>(dd, std::vector<Scalar>(dd, Scalar::zero(f))));
  for (int i = 0; i < dd; ++i)
    for (int j = 0; j < dd; ++j) {
      const Matrix prod = side == Side::Left
                              ? convolve_left(c, d.functionals[i], d.functionals[j])
                              : convolve_right(c, d.functionals[i], d.functionals[j]);
      auto coords = matrix_coordinates(d.functionals, prod);
      if (!coords)
        throw ValidationError("DualProductOutsideSpan",
                              "convolution left the dual space at basis pair (" +
                                  std::to_string(i) + ", " + std::to_string(j) + ")");
      for (int l = 0; l < dd; ++l) mu[i][j][l] = coords->at(l, 0);
    }

  auto unit_coords = matrix_coordinates(d.functionals, c.counit);
  if (!unit_coords)
    throw ValidationError("DualUnitOutsideSpan", "counit is not in the dual space");
  d.counit_coords = *unit_coords;
  d.ring = make_algebra(f, dd, mu, d.counit_coords);
  return d;
}

DualActions dual_actions(const Coring& c, const DualRing& left_dual,
                         const DualRing& right_dual) {
  const Field f = c.base.field;
  const int n = c.dim();
  const Matrix lifted = c.coproduct_lifted();
  DualActions acts;

  for (const Matrix& xi : left_dual.functionals) {
    Matrix act(f, n, n);
    std::vector<Matrix> rv;
    rv.reserve(n);
    for (int v = 0; v < n; ++v) rv.push_back(c.carrier.right_act_by(xi.col(v)));
    for (int col = 0; col < n; ++col) {
      Matrix acc(f, n, 1);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const Scalar& w = lifted.at(u * n + v, col);
          if (!w.is_zero()) acc = acc + rv[static_cast<std::size_t>(v)].col(u) * w;
        }
      act.set_col(col, acc);
    }
    acts.left.push_back(std::move(act));
  }
  for (const Matrix& xi : right_dual.functionals) {
    Matrix act(f, n, n);
    std::vector<Matrix> lu;
    lu.reserve(n);
    for (int u = 0; u < n; ++u) lu.push_back(c.carrier.left_act_by(xi.col(u)));
    for (int col = 0; col < n; ++col) {
      Matrix acc(f, n, 1);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const Scalar& w = lifted.at(u * n + v, col);
          if (!w.is_zero()) acc = acc + lu[static_cast<std::size_t>(u)].col(v) * w;
        }
      act.set_col(col, acc);
    }
    acts.right.push_back(std::move(act));
  }

  // Re-check the module axioms against the dual ring products.
  const Algebra& sl = left_dual.ring;
  for (int i = 0; i < sl.dim; ++i)
    for (int j = 0; j < sl.dim; ++j) {
      Matrix expect(f, n, n);
      for (int l = 0; l < sl.dim; ++l) {
        const Scalar cl = sl.mu(i, j, l);
        if (!cl.is_zero()) expect = expect + acts.left[static_cast<std::size_t>(l)] * cl;
      }
      if (acts.left[static_cast<std::size_t>(i)] * acts.left[static_cast<std::size_t>(j)] != expect)
        throw ValidationError("DualActionInvalid", "left action violates *C product at (" +
                                                       std::to_string(i) + ", " +
                                                       std::to_string(j) + ")");
    }
  const Algebra& sr = right_dual.ring;
  for (int i = 0; i < sr.dim; ++i)
    for (int j = 0; j < sr.dim; ++j) {
      Matrix expect(f, n, n);
      for (int l = 0; l < sr.dim; ++l) {
        const Scalar cl = sr.mu(i, j, l);
        if (!cl.is_zero()) expect = expect + acts.right[static_cast<std::size_t>(l)] * cl;
      }
      if (acts.right[static_cast<std::size_t>(j)] * acts.right[static_cast<std::size_t>(i)] !=
          expect)
        throw ValidationError("DualActionInvalid", "right action violates C* product at (" +
                                                       std::to_string(i) + ", " +
                                                       std::to_string(j) + ")");
    }

  Matrix eps_left(f, n, n), eps_right(f, n, n);
  for (int m = 0; m < sl.dim; ++m) {
    const Scalar& cm = left_dual.counit_coords.at(m, 0);
    if (!cm.is_zero()) eps_left = eps_left + acts.left[static_cast<std::size_t>(m)] * cm;
  }
  for (int m = 0; m < sr.dim; ++m) {
    const Scalar& cm = right_dual.counit_coords.at(m, 0);
    if (!cm.is_zero()) eps_right = eps_right + acts.right[static_cast<std::size_t>(m)] * cm;
  }
  if (!eps_left.is_identity())
    throw ValidationError("DualActionInvalid", "eps does not act as identity on the left");
  if (!eps_right.is_identity())
    throw ValidationError("DualActionInvalid", "eps does not act as identity on the right");
  return acts;
}

bool is_grouplike(const Coring& c, const Vector& g) {
  if (g.rows() != c.dim() || g.cols() != 1) return false;
  return c.coproduct * g == c.cc.pure(g, g) && c.counit * g == c.base.unit;
}

CoFrobeniusEvidence co_frobenius_evidence(const Coring& c, Side side, int trials,
                                          std::uint64_t seed) {
  const Field f = c.base.field;
  const int n = c.dim();
  DualRing dl = dual_ring(c, Side::Left);
  DualRing dr = dual_ring(c, Side::Right);
  DualActions acts = dual_actions(c, dl, dr);

  // Left: maps C -> *C with f(xi -> c) = xi * f(c); right: C -> C* with
  // f(c <- xi) = f(c) * xi.
  const Algebra& dual_alg = side == Side::Left ? dl.ring : dr.ring;
  const std::vector<Matrix>& on_c = side == Side::Left ? acts.left : acts.right;
  const std::vector<Matrix>& on_dual = side == Side::Left ? dual_alg.lmul : dual_alg.rmul;
  std::vector<Matrix> maps = intertwiner_space(on_c, on_dual, n, dual_alg.dim, f);

  CoFrobeniusEvidence ev;
  ev.hom_dim = static_cast<int>(maps.size());
  ev.needed_rank = n;
  ev.seed = seed;
  if (dual_alg.dim < n) {
    ev.status = CoFrobeniusEvidence::Status::CertifiedNo;
    return ev;
  }
  if (maps.empty()) {
    ev.status = CoFrobeniusEvidence::Status::ProbablyNo;
    return ev;
  }

  auto consider = [&](const Matrix& cand) {
    const int r = rank(cand);
    if (r > ev.max_rank) ev.max_rank = r;
    return r == n;
  };
  for (const Matrix& m : maps) {
    ++ev.trials;
    if (consider(m)) {
      ev.status = CoFrobeniusEvidence::Status::CertifiedYes;
      ev.map = m;
      return ev;
    }
  }
  for (int t = 0; t < trials; ++t) {
    const Vector coeffs = random_vector(f, static_cast<int>(maps.size()),
                                        derive_seed(seed, static_cast<std::uint64_t>(t)),
                                        1 << 16);
    const Matrix cand = matrix_combination(maps, coeffs);
    ++ev.trials;
    if (consider(cand)) {
      ev.status = CoFrobeniusEvidence::Status::CertifiedYes;
      ev.map = cand;
      return ev;
    }
  }
  ev.status = CoFrobeniusEvidence::Status::ProbablyNo;
  return ev;
}

}  // namespace coralg

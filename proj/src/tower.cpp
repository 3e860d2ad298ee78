#include "coralg/tower.hpp"

namespace coralg {

namespace {

// Scalar lambda with target = lambda * ref, or nullopt.
std::optional<Scalar> proportionality(const Vector& target, const Vector& ref) {
  int i0 = -1;
  for (int i = 0; i < ref.rows(); ++i)
    if (!ref.at(i, 0).is_zero()) { i0 = i; break; }
  if (i0 < 0) return std::nullopt;
  const Scalar lambda = target.at(i0, 0) / ref.at(i0, 0);
  if (target != ref * lambda) return std::nullopt;
  return lambda;
}

}  // namespace

Algebra ring_from_coring(const Coring& c, const Matrix& pi, const Vector& e) {
  const Field f = c.base.field;
  const int n = c.dim();
  const Matrix pip = pi * c.cc.project();  // product on pure pairs

  // The two gamma-expressions for the product must agree with pi's.
  const Matrix gamma = c.counit * pi;
  const Matrix via_gamma = pi_from_gamma(c, gamma) * c.cc.project();
  if (via_gamma != pip)
    throw ValidationError("ProductFormulaMismatch",
                          "c_(1) gamma(c_(2) (x) c') does not reproduce pi");

  std::vector<std::vector<std::vector<Scalar>>> mu(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::zero(f))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) mu[i][j][l] = pip.at(l, i * n + j);
  return make_algebra(f, n, mu, e);
}

ThetaExtension theta_extension(const Coring& c, const Matrix& pi, const Vector& e) {
  const Field f = c.base.field;
  const int n = c.dim();
  ThetaExtension out;
  out.ring = ring_from_coring(c, pi, e);

  Matrix theta(f, n, c.base.dim);
  for (int i = 0; i < c.base.dim; ++i) theta.set_col(i, c.carrier.left_act[i] * e);
  out.theta = check_ring_map(theta, c.base, out.ring);

  // The A-actions through Theta must reproduce the carrier actions.
  for (int i = 0; i < c.base.dim; ++i) {
    if (out.ring.left_mult_by(theta.col(i)) != c.carrier.left_act[i] ||
        out.ring.right_mult_by(theta.col(i)) != c.carrier.right_act[i])
      throw ValidationError("InducedActionMismatch",
                            "Theta does not induce the carrier actions at base index " +
                                std::to_string(i));
  }

  const Vector beta = c.coproduct * e;
  ExtensionVerification ver = verify_frobenius_extension(out.theta, c.counit, beta);
  if (!ver.report.pass)
    throw ValidationError("ExtensionInvalid",
                          "(eps, Delta(e)) fails to verify: " + ver.report.summary());
  if (ver.bb.pres.basis_index != c.cc.pres.basis_index)
    throw ValidationError("PresentationMismatch",
                          "B (x)_A B presentation deviates from C (x)_A C");
  out.data.ext = out.theta;
  out.data.hom = c.counit;
  out.data.element = beta;
  out.data.bb = std::move(ver.bb);
  return out;
}

bool induced_coring_coincides(const Coring& c, const Matrix& pi, const Vector& e) {
  ThetaExtension theta = theta_extension(c, pi, e);
  ExtensionCoring induced = coring_from_extension(theta.data);
  return induced.coring.coproduct == c.coproduct && induced.coring.counit == c.counit &&
         induced.system.pi == pi && induced.system.e == e;
}

StrongCoseparability strongly_coseparable(const Coring& c, const Matrix& pi, const Vector& e) {
  StrongCoseparability out;
  const Vector pde = pi * (c.coproduct * e);
  const Vector epse = c.counit * e;

  const auto u = proportionality(pde, e);
  if (!u || u->is_zero()) {
    out.witness = "pi(Delta(e)) = " + pde.transpose().str() +
                  " is not a unit multiple of e = " + e.transpose().str();
    return out;
  }
  const auto v = proportionality(epse, c.base.unit);
  if (!v || v->is_zero()) {
    out.witness = "eps(e) = " + epse.transpose().str() + " is not a unit multiple of 1";
    return out;
  }
  out.found = true;
  out.index = CoseparabilityIndex{*u, *v};
  return out;
}

namespace {

// Verifies the two displayed level-2 identities: the product formula
// (c (x) c')(c'' (x) c''') = c (x) gamma(c' (x) c'') c''' on the ring, and
// the Frobenius element e_(1) (x) e (x) e_(2) with homomorphism pi.
void check_level2_formulas(const Coring& base_coring, const Matrix& pi, const Vector& e,
                           const SweedlerCoring& sw2, const SweedlerSystem& sys2,
                           const Algebra& ring2, const FrobeniusExtensionData& ext2) {
  const Field f = base_coring.base.field;
  const int n = base_coring.dim();
  const int t = sw2.coring.dim();
  const Matrix gamma = base_coring.counit * pi;

  for (int s1 = 0; s1 < t; ++s1) {
    const int p1 = sw2.carrier_pres.pres.basis_index[s1];
    const int x = p1 / n, y = p1 % n;
    for (int s2 = 0; s2 < t; ++s2) {
      const int p2 = sw2.carrier_pres.pres.basis_index[s2];
      const int z = p2 / n, w = p2 % n;
      const Vector g = gamma * base_coring.cc.pure(unit_vector(f, n, y), unit_vector(f, n, z));
      const Vector second = base_coring.carrier.left_act_by(g) * unit_vector(f, n, w);
      const Vector expected = sw2.carrier_pres.pure(unit_vector(f, n, x), second);
      Vector got(f, t, 1);
      for (int l = 0; l < t; ++l) got.at(l, 0) = ring2.mu(s1, s2, l);
      if (got != expected)
        throw ValidationError("TowerFormulaMismatch",
                              "level-2 product formula fails at (" + std::to_string(s1) + ", " +
                                  std::to_string(s2) + ")");
    }
  }

  // ext2.element lives in C^2 (x)_{C^1} C^2; map it through the verified
  // identification with C (x)_A C (x)_A C and compare with e_(1) (x) e (x) e_(2).
  const Matrix w_e = lifted_tensor_matrix(base_coring, base_coring.coproduct * e);
  Vector expected(f, sys2.triple.dim(), 1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const Scalar& wv = w_e.at(u, v);
      if (wv.is_zero()) continue;
      const Vector first = sw2.carrier_pres.pure(unit_vector(f, n, u), e);
      expected = expected + sys2.triple.pure(first, unit_vector(f, n, v)) * wv;
    }
  if (sys2.to_triple * ext2.element != expected)
    throw ValidationError("TowerFormulaMismatch",
                          "level-2 Frobenius element is not e_(1) (x) e (x) e_(2)");
  if (ext2.hom != pi)
    throw ValidationError("TowerFormulaMismatch", "level-2 Frobenius homomorphism is not pi");
}

}  // namespace

std::vector<TowerLevel> build_tower(const Coring& c, const Matrix& pi, const Vector& e,
                                    int levels, int budget) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  std::vector<TowerLevel> tower;

  Coring current = c;
  Matrix cur_pi = pi;
  Vector cur_e = e;
  std::optional<SweedlerCoring> cur_sweedler;  // set for levels >= 2
  std::optional<SweedlerSystem> cur_sys;

  for (int k = 1; k <= levels; ++k) {
    TowerLevel level;
    level.k = k;

    Report sys_check = verify_frobenius_system(current, cur_pi, cur_e);
    if (!sys_check.pass)
      throw ValidationError("SystemInvalid", "level " + std::to_string(k) +
                                                 " system fails: " + sys_check.summary());
    level.gates.record("system", true);
    level.gates.record("coring", true);  // built by make_coring (level 1: caller's input)

    ThetaExtension theta = theta_extension(current, cur_pi, cur_e);
    level.gates.record("ring", true);       // make_algebra re-verified associativity
    level.gates.record("inclusion", true);  // check_ring_map + induced-action equality
    level.gates.record("extension", true);  // verify_frobenius_extension passed

    if (k == 2 && cur_sweedler && cur_sys)
      check_level2_formulas(tower[0].coring, tower[0].system.pi, tower[0].system.e,
                            *cur_sweedler, *cur_sys, theta.ring, theta.data);

    level.ring = theta.ring;
    level.inclusion = theta.theta;
    level.ext_data = theta.data;
    level.coring = current;
    level.system = FrobeniusSystem{cur_pi, cur_e};
    StrongCoseparability sc = strongly_coseparable(current, cur_pi, cur_e);
    if (sc.found)
      level.index = sc.index;
    else
      level.index_witness = sc.witness;
    tower.push_back(level);

    if (k == levels) break;

    const long long ambient =
        static_cast<long long>(level.ring.dim) * static_cast<long long>(level.ring.dim);
    if (ambient > budget)
      throw ValidationError("DimensionBudgetExceeded",
                            "level " + std::to_string(k + 1) + " carrier ambient dimension " +
                                std::to_string(ambient) + " exceeds budget " +
                                std::to_string(budget));

    SweedlerCoring next = sweedler_coring(level.inclusion);
    SweedlerSystem next_sys = sweedler_frobenius_system(next, level.ext_data);
    current = next.coring;
    cur_pi = next_sys.system.pi;
    cur_e = next_sys.system.e;
    cur_sweedler = std::move(next);
    cur_sys = std::move(next_sys);
  }
  return tower;
}

IndexProfile tower_index_profile(const std::vector<TowerLevel>& levels) {
  IndexProfile out;
  for (const TowerLevel& level : levels) {
    if (!level.index)
      throw ValidationError("NotStronglyCoseparable",
                            "level " + std::to_string(level.k) + ": " + level.index_witness);
    out.indices.push_back(*level.index);
  }
  out.alternation_ok = true;
  if (!levels.empty()) {
    const Scalar u = out.indices[0].u, v = out.indices[0].v;
    for (std::size_t i = 0; i < out.indices.size(); ++i) {
      const bool odd = (i % 2) == 0;  // level k = i + 1
      const Scalar eu = odd ? u : v, ev = odd ? v : u;
      if (out.indices[i].u != eu || out.indices[i].v != ev) {
        out.alternation_ok = false;
        out.detail = "level " + std::to_string(i + 1) + " index (" + out.indices[i].u.str() +
                     ":" + out.indices[i].v.str() + ") breaks the (u:v)/(v:u) alternation";
        break;
      }
    }
  }
  return out;
}

}  // namespace coralg

#ifndef CORALG_TOWER_HPP
#define CORALG_TOWER_HPP

#include "coralg/frobenius.hpp"

namespace coralg {

/// Ring structure on a Frobenius coring: product c c' = pi(c (x) c'), unit e.
/// Associativity and the unit laws are re-verified through make_algebra, and
/// the two alternative product formulas
///   c c' = gamma(c (x) c'_(1)) c'_(2) = c_(1) gamma(c_(2) (x) c')
/// (gamma = eps o pi) are checked to agree exactly.
/// Precondition: (pi, e) is a verified Frobenius system.
Algebra ring_from_coring(const Coring& c, const Matrix& pi, const Vector& e);

/// Theta: A -> C, a -> a.e = e.a, as a ring map into the pi-product ring,
/// together with the Frobenius data (E = eps, beta = Delta(e)) for it. Also
/// checks that the A-actions induced through Theta equal the carrier actions.
struct ThetaExtension {
  Algebra ring;  // C with the pi-product
  RingMap theta;
  FrobeniusExtensionData data;
};

ThetaExtension theta_extension(const Coring& c, const Matrix& pi, const Vector& e);

/// True iff the coring built from theta_extension's data (coproduct
/// b -> beta b, counit eps) reproduces the original coproduct and counit as
/// exact matrix equalities.
bool induced_coring_coincides(const Coring& c, const Matrix& pi, const Vector& e);

struct CoseparabilityIndex {
  Scalar u;
  Scalar v;
};

/// Checks pi(Delta(e)) = u e and eps(e) = v 1 for nonzero scalars u, v.
struct StrongCoseparability {
  bool found = false;
  std::optional<CoseparabilityIndex> index;
  std::string witness;  // failure description when not strongly coseparable
};

StrongCoseparability strongly_coseparable(const Coring& c, const Matrix& pi, const Vector& e);

/// One storey of the tower: C^k as a ring, the inclusion C^{k-1} -> C^k with
/// its Frobenius data, C^k as a C^{k-1}-coring with its Frobenius system, and
/// the coseparability index when one exists. `gates` records the five
/// verification gates (ring, inclusion, extension, coring, system).
struct TowerLevel {
  int k = 0;
  Algebra ring;
  RingMap inclusion;
  FrobeniusExtensionData ext_data;
  Coring coring;
  FrobeniusSystem system;
  std::optional<CoseparabilityIndex> index;
  std::string index_witness;
  Report gates;
};

/// Levels 1..n of the tower over a verified Frobenius system on C. Level 1
/// packages C itself; level k >= 2 is the Sweedler coring of the previous
/// inclusion, with the Frobenius system transported along the verified
/// triple-tensor identification. Every level passes all five gates or the
/// construction aborts. The budget bounds the ambient dimension of each new
/// carrier (dim of the previous ring squared).
/// Throws ValidationError("DimensionBudgetExceeded", ...).
std::vector<TowerLevel> build_tower(const Coring& c, const Matrix& pi, const Vector& e,
                                    int levels, int budget = 4096);

/// Per-level indices with the alternation law: odd levels report (u:v), even
/// levels (v:u). Throws ValidationError("NotStronglyCoseparable", witness)
/// when a level has no index.
struct IndexProfile {
  std::vector<CoseparabilityIndex> indices;
  bool alternation_ok = false;
  std::string detail;
};

IndexProfile tower_index_profile(const std::vector<TowerLevel>& levels);

}  // namespace coralg

#endif

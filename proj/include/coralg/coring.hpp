#ifndef CORALG_CORING_HPP
#define CORALG_CORING_HPP

#include "coralg/bimodule.hpp"

namespace coralg {

/// A-coring: an (A,A)-bimodule C with a coproduct C -> C (x)_A C and a counit
/// C -> A, both bimodule maps, coassociative and counital. All axioms are
/// machine-checked by make_coring against the stored tensor presentation.
struct Coring {
  Algebra base;            // A
  Bimodule carrier;        // C
  TensorPresentation cc;   // C (x)_A C
  Matrix coproduct;        // cc.dim() x dim C, already projected into cc
  Matrix counit;           // dim A x dim C

  Coring()
      : coproduct(Field::rationals(), 0, 0), counit(Field::rationals(), 0, 0) {}

  int dim() const { return carrier.dim; }
  /// Lift of the coproduct into C (x)_k C (column per basis vector).
  Matrix coproduct_lifted() const { return cc.lift() * coproduct; }
};

/// Builds and fully verifies a coring. `coproduct_raw` maps into the plain
/// k-tensor C (x)_k C (dim C^2 rows); it is projected into C (x)_A C, which
/// makes well-definedness over the middle A automatic.
/// Throws ValidationError: NotBimoduleMap, NotCoassociative, CounitLawFails.
Coring make_coring(const Algebra& base, const Bimodule& carrier,
                   const Matrix& coproduct_raw, const Matrix& counit);

/// Report-based variant of the axiom check (used by the CLI and by tests on
/// deliberately broken inputs).
Report check_coring_axioms(const Algebra& base, const Bimodule& carrier,
                           const Matrix& coproduct_raw, const Matrix& counit);

/// A as a coring over itself: coproduct a -> [a (x) 1], counit the identity.
Coring trivial_coring(const Algebra& a);

/// Sweedler coring A (x)_B A of a ring extension ext: B -> A, with the
/// coproduct inserting 1_A and the counit multiplying. Keeps the carrier
/// presentation and the grouplike [1 (x) 1].
struct SweedlerCoring {
  Coring coring;
  RingMap ext;                      // B -> A
  TensorPresentation carrier_pres;  // A (x)_B A
  Vector grouplike;                 // class of 1 (x) 1

  SweedlerCoring() : grouplike(Field::rationals(), 0, 1) {}
};

SweedlerCoring sweedler_coring(const RingMap& ext);

enum class Side { Left, Right };

/// Dual ring *C = Hom_{A-}(C,A) (left) or C* = Hom_{-A}(C,A) (right) with the
/// convolution product; the unit is the counit. Associativity is re-verified
/// through make_algebra, which certifies coassociativity a second way.
struct DualRing {
  Side side = Side::Left;
  Algebra ring;                     // on the dual space
  std::vector<Matrix> functionals;  // basis, each dim A x dim C
  Matrix counit_coords;             // coordinates of eps in the basis

  DualRing() : counit_coords(Field::rationals(), 0, 1) {}
};

DualRing dual_ring(const Coring& c, Side side);

/// xi -> c = c_(1) xi(c_(2)) (left *C-action) and c <- xi = xi(c_(1)) c_(2)
/// (right C*-action), verified as module actions over the dual rings.
struct DualActions {
  std::vector<Matrix> left;   // per *C basis element
  std::vector<Matrix> right;  // per C* basis element
};

DualActions dual_actions(const Coring& c, const DualRing& left_dual,
                         const DualRing& right_dual);

/// True iff Delta(g) = [g (x) g] and eps(g) = 1 exactly.
bool is_grouplike(const Coring& c, const Vector& g);

/// Searches for an injective morphism C -> *C of left *C-modules (left side;
/// right side uses C -> C* over C*). A returned map is exactly verified
/// injective; "probably no" reports the best rank seen over the sampled
/// combinations and is not a proof unless the dimension obstruction applies.
struct CoFrobeniusEvidence {
  enum class Status { CertifiedYes, CertifiedNo, ProbablyNo };
  Status status = Status::ProbablyNo;
  std::optional<Matrix> map;  // injective module map when certified yes
  int hom_dim = 0;
  int max_rank = 0;
  int needed_rank = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

CoFrobeniusEvidence co_frobenius_evidence(const Coring& c, Side side, int trials,
                                          std::uint64_t seed);

}  // namespace coralg

#endif

#include <doctest.h>

#include "coralg/tower.hpp"
#include "fixtures_common.hpp"

using namespace coralg;
using namespace coralg::testfix;

namespace {
const Field Q = Field::rationals();

struct Fixture {
  SweedlerCoring sw;
  FrobeniusSystem system;
};

Fixture dualnum_fixture() {
  const Algebra q = rationals_alg(Q);
  const Algebra d = dual_numbers(Q);
  const RingMap ext = unit_inclusion(q, d);
  const auto found = find_frobenius_extension_data(ext, 20, 1);
  REQUIRE(found.status == FindExtensionResult::Status::Found);
  SweedlerCoring sw = sweedler_coring(ext);
  const SweedlerSystem sys = sweedler_frobenius_system(sw, *found.data);
  return Fixture{std::move(sw), sys.system};
}

Fixture group_fixture() {
  const Algebra q = rationals_alg(Q);
  const Algebra g = group_c2(Q);
  const RingMap ext = unit_inclusion(q, g);
  Matrix e_hom(Q, 1, 2);
  e_hom.at(0, 0) = Scalar::from_int(Q, 2);
  Vector beta(Q, 4, 1);
  beta.at(0, 0) = Scalar::from_fraction(Q, 1, 2);
  beta.at(3, 0) = Scalar::from_fraction(Q, 1, 2);
  const ExtensionVerification ver = verify_frobenius_extension(ext, e_hom, beta);
  REQUIRE(ver.report.pass);
  FrobeniusExtensionData data;
  data.ext = ext;
  data.hom = e_hom;
  data.element = beta;
  data.bb = ver.bb;
  SweedlerCoring sw = sweedler_coring(ext);
  const SweedlerSystem sys = sweedler_frobenius_system(sw, data);
  return Fixture{std::move(sw), sys.system};
}

FrobeniusSystem trivial_system(const Coring& triv) {
  // gamma = multiplication is the identity in quotient coordinates.
  const Matrix gamma = Matrix::identity(triv.base.field, triv.dim());
  return FrobeniusSystem{pi_from_gamma(triv, gamma), triv.base.unit};
}
}  // namespace

TEST_CASE("ring_from_coring: trivial coring returns the base algebra") {
  const Algebra d = dual_numbers(Q);
  const Coring triv = trivial_coring(d);
  const FrobeniusSystem sys = trivial_system(triv);
  const Algebra ring = ring_from_coring(triv, sys.pi, sys.e);
  CHECK(ring.dim == d.dim);
  CHECK(ring.unit == d.unit);
  for (int i = 0; i < d.dim; ++i)
    for (int j = 0; j < d.dim; ++j)
      for (int l = 0; l < d.dim; ++l) CHECK(ring.mu(i, j, l) == d.mu(i, j, l));
}

TEST_CASE("ring_from_coring on the Sweedler fixtures: unit is e") {
  const Fixture fx = dualnum_fixture();
  const Algebra r1 = ring_from_coring(fx.sw.coring, fx.system.pi, fx.system.e);
  CHECK(r1.dim == 4);
  CHECK(r1.unit == fx.system.e);  // x (x) 1 + 1 (x) x

  const Fixture gx = group_fixture();
  const Algebra r2 = ring_from_coring(gx.sw.coring, gx.system.pi, gx.system.e);
  CHECK(r2.dim == 4);
  CHECK(r2.unit == gx.system.e);  // (1 (x) 1 + g (x) g)/2
}

TEST_CASE("theta_extension: trivial coring gives the identity extension") {
  const Algebra d = dual_numbers(Q);
  const Coring triv = trivial_coring(d);
  const FrobeniusSystem sys = trivial_system(triv);
  const ThetaExtension theta = theta_extension(triv, sys.pi, sys.e);
  CHECK(theta.theta.matrix == Matrix::identity(Q, 2));
  CHECK(theta.data.hom == triv.counit);
  CHECK(theta.data.element == triv.coproduct * sys.e);
}

TEST_CASE("theta_extension verifies on both fixtures") {
  for (const Fixture& fx : {dualnum_fixture(), group_fixture()}) {
    const ThetaExtension theta = theta_extension(fx.sw.coring, fx.system.pi, fx.system.e);
    CHECK(theta.data.hom == fx.sw.coring.counit);
    // Re-verify the data once more through the public verifier.
    CHECK(verify_frobenius_extension(theta.theta, theta.data.hom, theta.data.element)
              .report.pass);
  }
}

TEST_CASE("induced coring coincides with the original") {
  const Algebra d = dual_numbers(Q);
  const Coring triv = trivial_coring(d);
  const FrobeniusSystem sys_t = trivial_system(triv);
  CHECK(induced_coring_coincides(triv, sys_t.pi, sys_t.e));

  const Fixture fx = dualnum_fixture();
  CHECK(induced_coring_coincides(fx.sw.coring, fx.system.pi, fx.system.e));
  const Fixture gx = group_fixture();
  CHECK(induced_coring_coincides(gx.sw.coring, gx.system.pi, gx.system.e));
}

TEST_CASE("strong coseparability: found, found with index, and refused") {
  const Algebra d = dual_numbers(Q);
  const Coring triv = trivial_coring(d);
  const FrobeniusSystem sys_t = trivial_system(triv);
  const auto sc_t = strongly_coseparable(triv, sys_t.pi, sys_t.e);
  REQUIRE(sc_t.found);
  CHECK(sc_t.index->u == Scalar::one(Q));
  CHECK(sc_t.index->v == Scalar::one(Q));

  const Fixture gx = group_fixture();
  const auto sc_g = strongly_coseparable(gx.sw.coring, gx.system.pi, gx.system.e);
  REQUIRE(sc_g.found);
  CHECK(sc_g.index->u == Scalar::from_int(Q, 2));
  CHECK(sc_g.index->v == Scalar::one(Q));

  // pi(Delta(e)) = 0 for the dual numbers: u = 0 is not a unit.
  const Fixture fx = dualnum_fixture();
  const Vector pde = fx.system.pi * (fx.sw.coring.coproduct * fx.system.e);
  CHECK(pde.is_zero());
  const auto sc_d = strongly_coseparable(fx.sw.coring, fx.system.pi, fx.system.e);
  CHECK_FALSE(sc_d.found);
  CHECK(!sc_d.witness.empty());
}

TEST_CASE("degenerate tower over the trivial coring") {
  const Algebra d = dual_numbers(Q);
  const Coring triv = trivial_coring(d);
  const FrobeniusSystem sys = trivial_system(triv);
  const auto tower = build_tower(triv, sys.pi, sys.e, 3);
  REQUIRE(tower.size() == 3);
  for (const TowerLevel& level : tower) {
    CHECK(level.ring.dim == d.dim);
    CHECK(level.gates.pass);
    CHECK(level.inclusion.matrix == Matrix::identity(Q, 2));
    REQUIRE(level.index.has_value());
    CHECK(level.index->u == Scalar::one(Q));
    CHECK(level.index->v == Scalar::one(Q));
  }
  const IndexProfile prof = tower_index_profile(tower);
  CHECK(prof.alternation_ok);
}

TEST_CASE("dual-number tower to level 3: dimensions double") {
  const Fixture fx = dualnum_fixture();
  const auto tower = build_tower(fx.sw.coring, fx.system.pi, fx.system.e, 3);
  REQUIRE(tower.size() == 3);
  CHECK(fx.sw.coring.base.dim == 2);
  CHECK(tower[0].ring.dim == 4);
  CHECK(tower[1].ring.dim == 8);
  CHECK(tower[2].ring.dim == 16);
  for (const TowerLevel& level : tower) CHECK(level.gates.pass);
  // dim C^k = dim C * (dim C / dim A)^(k-1) on this free fixture.
  for (int k = 1; k <= 3; ++k) {
    int expect = 4;
    for (int i = 1; i < k; ++i) expect *= 2;
    CHECK(tower[static_cast<std::size_t>(k - 1)].ring.dim == expect);
  }
  // Index profile must refuse: the system is not strongly coseparable.
  CHECK_FALSE(tower[0].index.has_value());
  CHECK_THROWS_AS((void)tower_index_profile(tower), ValidationError);
}

TEST_CASE("group-algebra tower to level 2: indices alternate") {
  const Fixture gx = group_fixture();
  const auto tower = build_tower(gx.sw.coring, gx.system.pi, gx.system.e, 2);
  REQUIRE(tower.size() == 2);
  CHECK(tower[0].ring.dim == 4);
  CHECK(tower[1].ring.dim == 8);

  // Level-2 ring unit is Delta(e).
  CHECK(tower[1].coring.carrier.dim == tower[1].ring.dim);
  CHECK(tower[1].system.e == tower[0].coring.coproduct * tower[0].system.e);

  const IndexProfile prof = tower_index_profile(tower);
  REQUIRE(prof.indices.size() == 2);
  CHECK(prof.indices[0].u == Scalar::from_int(Q, 2));
  CHECK(prof.indices[0].v == Scalar::one(Q));
  CHECK(prof.indices[1].u == Scalar::one(Q));
  CHECK(prof.indices[1].v == Scalar::from_int(Q, 2));
  CHECK(prof.alternation_ok);
}

TEST_CASE("tower inclusion at level 2 is the coproduct") {
  // The second tower map is Delta: C^1 -> C^2 (c e_2 = Delta(c)).
  const Fixture gx = group_fixture();
  const auto tower = build_tower(gx.sw.coring, gx.system.pi, gx.system.e, 2);
  CHECK(tower[1].inclusion.matrix == tower[0].coring.coproduct);
}

TEST_CASE("noncommutative fixture: M2(Q) with the trace form") {
  // E = tr, beta = sum e_ij (x) e_ji; the index is (2:2).
  const Algebra q = rationals_alg(Q);
  const Algebra m2 = matrix2(Q);
  const RingMap ext = unit_inclusion(q, m2);
  Matrix e_hom(Q, 1, 4);
  e_hom.at(0, 0) = Scalar::one(Q);
  e_hom.at(0, 3) = Scalar::one(Q);
  Vector beta(Q, 16, 1);
  beta.at(0, 0) = Scalar::one(Q);    // e11 (x) e11
  beta.at(6, 0) = Scalar::one(Q);    // e12 (x) e21
  beta.at(9, 0) = Scalar::one(Q);    // e21 (x) e12
  beta.at(15, 0) = Scalar::one(Q);   // e22 (x) e22
  const ExtensionVerification ver = verify_frobenius_extension(ext, e_hom, beta);
  REQUIRE(ver.report.pass);

  FrobeniusExtensionData data;
  data.ext = ext;
  data.hom = e_hom;
  data.element = beta;
  data.bb = ver.bb;
  SweedlerCoring sw = sweedler_coring(ext);
  CHECK(sw.coring.dim() == 16);
  const SweedlerSystem sys = sweedler_frobenius_system(sw, data);

  const auto sc = strongly_coseparable(sw.coring, sys.system.pi, sys.system.e);
  REQUIRE(sc.found);
  CHECK(sc.index->u == Scalar::from_int(Q, 2));
  CHECK(sc.index->v == Scalar::from_int(Q, 2));

  const Algebra ring = ring_from_coring(sw.coring, sys.system.pi, sys.system.e);
  CHECK(ring.unit == sys.system.e);
  CHECK(induced_coring_coincides(sw.coring, sys.system.pi, sys.system.e));
}

TEST_CASE("the whole pipeline runs over a prime field") {
  const Field f5 = Field::gf(5);
  const Algebra q5 = rationals_alg(f5);
  const Algebra g5 = group_c2(f5);
  const RingMap ext = unit_inclusion(q5, g5);
  Matrix e_hom(f5, 1, 2);
  e_hom.at(0, 0) = Scalar::from_int(f5, 2);
  Vector beta(f5, 4, 1);
  beta.at(0, 0) = Scalar::from_fraction(f5, 1, 2);  // 1/2 = 3 mod 5
  beta.at(3, 0) = Scalar::from_fraction(f5, 1, 2);
  const ExtensionVerification ver = verify_frobenius_extension(ext, e_hom, beta);
  REQUIRE(ver.report.pass);
  FrobeniusExtensionData data;
  data.ext = ext;
  data.hom = e_hom;
  data.element = beta;
  data.bb = ver.bb;
  SweedlerCoring sw = sweedler_coring(ext);
  const SweedlerSystem sys = sweedler_frobenius_system(sw, data);
  const auto tower = build_tower(sw.coring, sys.system.pi, sys.system.e, 2);
  REQUIRE(tower.size() == 2);
  CHECK(tower[1].ring.dim == 8);
  const IndexProfile prof = tower_index_profile(tower);
  CHECK(prof.indices[0].u == Scalar::from_int(f5, 2));
  CHECK(prof.indices[1].v == Scalar::from_int(f5, 2));
  CHECK(prof.alternation_ok);
}

TEST_CASE("budget guard") {
  const Fixture fx = dualnum_fixture();
  try {
    build_tower(fx.sw.coring, fx.system.pi, fx.system.e, 3, 10);
    FAIL("expected DimensionBudgetExceeded");
  } catch (const ValidationError& e) {
    CHECK(e.code == "DimensionBudgetExceeded");
  }
  // Ambient for level 2 is 16 > 10; with budget 16 it passes to level 2 but
  // level 3 needs 64.
  try {
    build_tower(fx.sw.coring, fx.system.pi, fx.system.e, 3, 16);
    FAIL("expected DimensionBudgetExceeded");
  } catch (const ValidationError& e) {
    CHECK(e.code == "DimensionBudgetExceeded");
    CHECK(e.detail.find("level 3") != std::string::npos);
  }
}

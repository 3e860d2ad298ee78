#ifndef CORALG_TESTS_FIXTURES_COMMON_HPP
#define CORALG_TESTS_FIXTURES_COMMON_HPP

#include "coralg/algebra.hpp"

namespace coralg::testfix {

inline Algebra rationals_alg(const Field& f) {
  auto o = Scalar::one(f);
  std::vector<std::vector<std::vector<Scalar>>> mu(
      1, std::vector<std::vector<Scalar>>(1, std::vector<Scalar>(1, o)));
  return make_algebra(f, 1, mu, Matrix::column(f, {1}), {"1"});
}

// Q[x]/(x^2), basis (1, x).
inline Algebra dual_numbers(const Field& f) {
  auto z = Scalar::zero(f), o = Scalar::one(f);
  std::vector<std::vector<std::vector<Scalar>>> mu(
      2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2, z)));
  mu[0][0][0] = o;
  mu[0][1][1] = o;
  mu[1][0][1] = o;
  return make_algebra(f, 2, mu, Matrix::column(f, {1, 0}), {"1", "x"});
}

// Group algebra Q[C2], basis (1, g) with g^2 = 1.
inline Algebra group_c2(const Field& f) {
  auto z = Scalar::zero(f), o = Scalar::one(f);
  std::vector<std::vector<std::vector<Scalar>>> mu(
      2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2, z)));
  mu[0][0][0] = o;
  mu[0][1][1] = o;
  mu[1][0][1] = o;
  mu[1][1][0] = o;
  return make_algebra(f, 2, mu, Matrix::column(f, {1, 0}), {"1", "g"});
}

// Full 2x2 matrix algebra, basis (e11, e12, e21, e22): e_ij e_kl = d_jk e_il.
inline Algebra matrix2(const Field& f) {
  auto z = Scalar::zero(f), o = Scalar::one(f);
  std::vector<std::vector<std::vector<Scalar>>> mu(
      4, std::vector<std::vector<Scalar>>(4, std::vector<Scalar>(4, z)));
  auto idx = [](int i, int j) { return (i - 1) * 2 + (j - 1); };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          if (j == k) mu[static_cast<std::size_t>(idx(i, j))][static_cast<std::size_t>(
                          idx(k, l))][static_cast<std::size_t>(idx(i, l))] = o;
  Matrix unit(f, 4, 1);
  unit.at(0, 0) = o;
  unit.at(3, 0) = o;
  return make_algebra(f, 4, mu, unit, {"e11", "e12", "e21", "e22"});
}

// Upper triangular 2x2 matrices, basis (e11, e12, e22).
inline Algebra upper_triangular2(const Field& f) {
  auto z = Scalar::zero(f), o = Scalar::one(f);
  std::vector<std::vector<std::vector<Scalar>>> mu(
      3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3, z)));
  mu[0][0][0] = o;  // e11 e11 = e11
  mu[0][1][1] = o;  // e11 e12 = e12
  mu[1][2][1] = o;  // e12 e22 = e12
  mu[2][2][2] = o;  // e22 e22 = e22
  return make_algebra(f, 3, mu, Matrix::column(f, {1, 0, 1}), {"e11", "e12", "e22"});
}

// Unital inclusion of the ground field.
inline RingMap unit_inclusion(const Algebra& ground, const Algebra& target) {
  Matrix m(target.field, target.dim, 1);
  for (int i = 0; i < target.dim; ++i) m.at(i, 0) = target.unit.at(i, 0);
  return check_ring_map(m, ground, target);
}

}  // namespace coralg::testfix

#endif

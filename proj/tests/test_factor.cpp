#include <gtest/gtest.h>

#include "vndim/factor.hpp"

using namespace vndim;
using namespace vndim::factor;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return {BigInt(n), BigInt(d)}; }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Usage;
}

}  // namespace

TEST(MatrixCoupling, Examples) {
  EXPECT_EQ(matrix_coupling(2, 3), q(3, 2));
  EXPECT_EQ(matrix_coupling(3, 1), q(1, 3));
  for (std::int64_t n = 1; n <= 20; ++n) EXPECT_EQ(matrix_coupling(n, n), Rational(1));
  EXPECT_EQ(matrix_coupling(2, 30000), Rational(15000));
  EXPECT_EQ(kind_of([] { matrix_coupling(0, 3); }), ErrorKind::ZeroSize);
  EXPECT_EQ(kind_of([] { matrix_coupling(2, 0); }), ErrorKind::ZeroSize);
}

TEST(JonesIndex, Examples) {
  EXPECT_EQ(jones_index(q(3, 2), q(1, 6)), Rational(9));
  EXPECT_EQ(jones_index(q(7, 5), q(7, 5)), Rational(1));
  // [RF_2 : RF_5] on D_1: dims 2m and m/2.
  EXPECT_EQ(jones_index(Rational(2), q(1, 2)), Rational(4));
  EXPECT_EQ(kind_of([] { jones_index(Rational(0), Rational(1)); }), ErrorKind::NonPositive);
  EXPECT_EQ(kind_of([] { jones_index(Rational(1), Rational(-1)); }), ErrorKind::NonPositive);
}

TEST(JonesIndex, MatrixAmplification) {
  // M_n (x) M_k on C^n (x) C^k is M_{nk} on C^{nk}; its subfactor M_n (x) 1 has index k^2.
  for (std::int64_t n = 1; n <= 6; ++n)
    for (std::int64_t k = 1; k <= 6; ++k)
      EXPECT_EQ(jones_index(matrix_coupling(n, k), matrix_coupling(n * k, 1)), Rational(k * k));
}

TEST(FreeGroupIndex, Examples) {
  EXPECT_EQ(free_group_index(2, 5), 4);
  EXPECT_EQ(free_group_index(3, 5), 2);
  EXPECT_EQ(kind_of([] { free_group_index(3, 6); }), ErrorKind::NotFiniteIndex);
}

TEST(FreeGroupIndex, TowerMultiplicativity) {
  for (std::int64_t a = 2; a <= 8; ++a)
    for (std::int64_t e1 = 1; e1 <= 6; ++e1)
      for (std::int64_t e2 = 1; e2 <= 6; ++e2) {
        const auto b = 1 + e1 * (a - 1);
        const auto c = 1 + e2 * (b - 1);
        EXPECT_EQ(free_group_index(a, b) * free_group_index(b, c), free_group_index(a, c));
      }
}

TEST(FreeGroupIndex, AmplificationExponent) {
  for (std::int64_t n : {2, 3})
    for (std::int64_t k : {1, 2, 3}) {
      if ((n - 1) * k * k + 1 < 2) continue;
      EXPECT_EQ(free_group_index(n, (n - 1) * k * k + 1), k * k);
    }
}

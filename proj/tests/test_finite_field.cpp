#include <array>
#include <set>

#include <gtest/gtest.h>

#include "vndim/finite_field.hpp"

using namespace vndim;
using namespace vndim::ff;

namespace {

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

const std::int64_t kSmallQ[] = {3, 5, 7, 9};

// Oracle for prime q only: plain modular arithmetic, no field tables.
std::pair<std::int64_t, std::int64_t> count_gl2_mod_p(std::int64_t p) {
  std::int64_t all = 0, borel = 0;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p != 0) {
            ++all;
            if (c == 0) ++borel;
          }
  return {all, borel};
}

}  // namespace

TEST(PrimePower, Validation) {
  PrimePower nine(9);
  EXPECT_EQ(nine.p(), 3);
  EXPECT_EQ(nine.f(), 2);
  EXPECT_EQ(kind_of([] { PrimePower(2); }), ErrorKind::EvenResidue);
  EXPECT_EQ(kind_of([] { PrimePower(8); }), ErrorKind::EvenResidue);
  EXPECT_EQ(kind_of([] { PrimePower(6); }), ErrorKind::NotPrimePower);
  EXPECT_EQ(kind_of([] { PrimePower(1); }), ErrorKind::NotPrimePower);
}

TEST(GroupOrders, Examples) {
  auto o3 = group_orders(PrimePower(3));
  EXPECT_EQ(o3.gl2_order, 48);
  EXPECT_EQ(o3.borel_order, 12);
  EXPECT_EQ(o3.borel_index, 4);
  auto o5 = group_orders(PrimePower(5));
  EXPECT_EQ(o5.gl2_order, 480);
  EXPECT_EQ(o5.borel_order, 80);
  EXPECT_EQ(o5.borel_index, 6);
}

TEST(GroupOrders, MatchExhaustiveCount) {
  for (auto qv : kSmallQ) {
    PrimePower pq(qv);
    auto counted = enumerate_gl2(pq);
    auto closed = group_orders(pq);
    EXPECT_EQ(BigInt(counted.counted_order), closed.gl2_order) << qv;
    EXPECT_EQ(BigInt(counted.counted_borel), closed.borel_order) << qv;
    EXPECT_EQ(closed.borel_index, qv + 1);
    if (is_prime(qv)) {
      auto [all, borel] = count_gl2_mod_p(qv);
      EXPECT_EQ(counted.counted_order, all);
      EXPECT_EQ(counted.counted_borel, borel);
    }
  }
  EXPECT_EQ(kind_of([] { enumerate_gl2(PrimePower(11)); }), ErrorKind::TooLarge);
}

TEST(GaloisField, FieldAxioms) {
  for (std::int64_t qv : {3, 9, 25, 27}) {
    GaloisField F{PrimePower(qv)};
    for (std::int64_t a = 0; a < qv; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0);
      if (a) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1);
      }
      for (std::int64_t b = 0; b < qv; ++b) {
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        if (a && b) {
          EXPECT_NE(F.mul(a, b), 0);
        }
        for (std::int64_t c = 0; c < qv; c += 3) EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST(QuadraticExtension, SmallestIrreducible) {
  // F_9 = F_3[x]/(x^2 + 1)
  QuadraticExtension E{GaloisField(PrimePower(3))};
  EXPECT_EQ(E.quadratic(), (std::pair<std::int64_t, std::int64_t>{0, 1}));
  // -1 is a square mod 5, so x^2 + 1 splits; x^2 + 2 is the first irreducible.
  QuadraticExtension E5{GaloisField(PrimePower(5))};
  EXPECT_EQ(E5.quadratic(), (std::pair<std::int64_t, std::int64_t>{0, 2}));
}

TEST(QuadraticExtension, MultiplicativeGroupIsCyclic) {
  for (auto qv : kSmallQ) {
    QuadraticExtension E{GaloisField(PrimePower(qv))};
    const auto order = qv * qv - 1;
    bool found_generator = false;
    for (const auto& x : E.elements()) {
      if (x == QuadraticExtension::Element{0, 0}) continue;
      ASSERT_EQ(E.pow(x, order), (QuadraticExtension::Element{1, 0}));
      std::set<std::pair<std::int64_t, std::int64_t>> powers;
      auto y = x;
      for (std::int64_t i = 0; i < order; ++i, y = E.mul(y, x)) powers.insert(y);
      if (static_cast<std::int64_t>(powers.size()) == order) {
        found_generator = true;
        break;
      }
    }
    EXPECT_TRUE(found_generator) << qv;
  }
}

TEST(Characters, IsRegularExamples) {
  PrimePower three(3);
  EXPECT_FALSE(is_regular(three, CharacterIndex(three, 0)));
  EXPECT_TRUE(is_regular(three, CharacterIndex(three, 1)));
  EXPECT_FALSE(is_regular(three, CharacterIndex(three, 4)));
}

TEST(Characters, CountExamples) {
  PrimePower three(3), five(5);
  EXPECT_EQ(count_regular_characters(three, 0), 2);
  EXPECT_EQ(count_regular_characters(three, sign_character(three)), 4);
  EXPECT_EQ(count_regular_characters(five, 0), 4);
  EXPECT_EQ(brute_force_regular_characters(three, 0), 2);
  EXPECT_EQ(brute_force_regular_characters(three, sign_character(three)), 4);
  EXPECT_EQ(brute_force_regular_characters(five, 0), 4);
  EXPECT_EQ(kind_of([] { brute_force_regular_characters(PrimePower(11), 0); }), ErrorKind::TooLarge);
}

TEST(Characters, RegularSetsForQ3) {
  PrimePower three(3);
  std::vector<std::int64_t> trivial, sign;
  for (std::int64_t a = 0; a < 8; ++a) {
    CharacterIndex chi(three, a);
    if (!is_regular(three, chi)) continue;
    (restriction_index(three, chi) == 0 ? trivial : sign).push_back(a);
  }
  EXPECT_EQ(trivial, (std::vector<std::int64_t>{2, 6}));
  EXPECT_EQ(sign, (std::vector<std::int64_t>{1, 3, 5, 7}));
}

TEST(Characters, ClosedFormMatchesEnumerationForEveryNu) {
  for (auto qv : kSmallQ) {
    PrimePower pq(qv);
    std::int64_t total = 0;
    for (std::int64_t nu = 0; nu < qv - 1; ++nu) {
      const auto brute = brute_force_regular_characters(pq, nu);
      EXPECT_EQ(brute, count_regular_characters(pq, nu)) << "q=" << qv << " nu=" << nu;
      total += brute;
    }
    EXPECT_EQ(total, qv * qv - qv);
    EXPECT_EQ(brute_force_regular_characters(pq, 0), qv - 1);
  }
}

TEST(Characters, RegularIffNotFactoringThroughNorm) {
  for (auto qv : kSmallQ) EXPECT_TRUE(regular_iff_not_norm_factoring(PrimePower(qv))) << qv;
}

TEST(NormTrace, Facts) {
  for (auto qv : kSmallQ) {
    auto f = norm_trace_facts(PrimePower(qv));
    EXPECT_TRUE(f.norm_surjective) << qv;
    EXPECT_TRUE(f.trace_surjective) << qv;
    EXPECT_EQ(f.norm_kernel_size, qv + 1);
    EXPECT_EQ(f.hilbert90_image_size, qv + 1);
    EXPECT_TRUE(f.hilbert90_matches_kernel);
  }
  EXPECT_EQ(kind_of([] { norm_trace_facts(PrimePower(11)); }), ErrorKind::TooLarge);
}

TEST(FiniteRepDims, Examples) {
  auto d3 = finite_rep_dims(PrimePower(3));
  EXPECT_EQ(d3.principal_series_dim, 4);
  EXPECT_EQ(d3.cuspidal_dim, 2);
  EXPECT_EQ(d3.steinberg_dim, 3);
  auto d5 = finite_rep_dims(PrimePower(5));
  EXPECT_EQ((std::array{d5.principal_series_dim, d5.cuspidal_dim, d5.steinberg_dim}), (std::array<std::int64_t, 3>{6, 4, 5}));
  auto d7 = finite_rep_dims(PrimePower(7));
  EXPECT_EQ((std::array{d7.principal_series_dim, d7.cuspidal_dim, d7.steinberg_dim}), (std::array<std::int64_t, 3>{8, 6, 7}));
}

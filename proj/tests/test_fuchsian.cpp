#include <random>

#include <gtest/gtest.h>

#include "vndim/factor.hpp"
#include "vndim/fuchsian.hpp"

using namespace vndim;
using namespace vndim::fuchsian;

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

const Signature kModular{0, {2, 3}, 1};  // PSL(2,Z)
const Signature kGamma04{0, {}, 3};

// Oracle: M_*(SL(2,Z)) = C[E4, E6], so dim M_k counts 4a + 6b = k, and the
// cusp forms have codimension one for k >= 4.
std::int64_t oracle_dim_s_level1(std::int64_t k) {
  if (k < 4) return 0;
  std::int64_t monomials = 0;
  for (std::int64_t a = 0; 4 * a <= k; ++a)
    if ((k - 4 * a) % 6 == 0) ++monomials;
  return monomials - 1;
}

// Oracle: M_*(Gamma0(4)) is a polynomial ring on two weight-2 forms, and
// Eisenstein series fill one dimension per cusp (3 cusps) for k >= 4.
std::int64_t oracle_dim_s_gamma04(std::int64_t k) {
  if (k < 4) return 0;
  std::int64_t monomials = 0;
  for (std::int64_t a = 0; 2 * a <= k; ++a) ++monomials;
  return monomials - 3;
}

Signature random_signature(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> genus(0, 4), count(0, 4), order(2, 12), cusps(0, 5);
  while (true) {
    std::vector<std::int64_t> orders(count(rng));
    for (auto& o : orders) o = order(rng);
    try {
      return Signature(genus(rng), orders, cusps(rng));
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST(Signature, ParseAndPrint) {
  EXPECT_EQ(Signature::parse("0;2,3;1"), kModular);
  EXPECT_EQ(Signature::parse("0;-;3"), kGamma04);
  EXPECT_EQ(kModular.str(), "0;2,3;1");
  EXPECT_EQ(kGamma04.str(), "0;-;3");
  for (const char* bad : {"", "0;2,3", "0;;3", "a;-;3", "0;2,x;1", "0;-;3;4"})
    EXPECT_EQ(kind_of([&] { Signature::parse(bad); }), ErrorKind::Usage) << bad;
}

TEST(Signature, RejectsNonHyperbolic) {
  EXPECT_EQ(kind_of([] { Signature(1, {}, 0); }), ErrorKind::NonHyperbolic);
  EXPECT_EQ(kind_of([] { Signature(0, {2, 2, 2, 2}, 0); }), ErrorKind::NonHyperbolic);
  EXPECT_EQ(kind_of([] { Signature(0, {2, 3}, 0); }), ErrorKind::NonHyperbolic);
  EXPECT_EQ(kind_of([] { Signature(0, {1, 3}, 2); }), ErrorKind::InvalidSignature);
}

TEST(Covolume, Examples) {
  EXPECT_EQ(covolume(kModular), PiRational(q(1, 3), 1));
  EXPECT_EQ(covolume(kGamma04), PiRational(Rational(2), 1));
  EXPECT_EQ(covolume(Signature(0, {}, 6)), PiRational(Rational(8), 1));
}

TEST(Covolume, HeckeGroups) {
  for (std::int64_t n = 3; n <= 30; ++n) {
    auto expected = PiRational(Rational(1) - q(2, n), 1);
    EXPECT_EQ(covolume(catalog("H" + std::to_string(n))), expected) << n;
  }
}

TEST(CuspFormDim, Examples) {
  EXPECT_EQ(cusp_form_dim(kModular, 12), 1);
  EXPECT_EQ(cusp_form_dim(kGamma04, 6), 1);
  EXPECT_EQ(cusp_form_dim(kGamma04, 2), 0);
  EXPECT_EQ(cusp_form_dim(kGamma04, 0), 0);
  EXPECT_EQ(cusp_form_dim(kGamma04, -4), 0);
  EXPECT_EQ(cusp_form_dim(Signature(2, {}, 0), 0), 1);
  EXPECT_EQ(cusp_form_dim(Signature(2, {}, 0), 2), 2);
  EXPECT_EQ(kind_of([] { cusp_form_dim(kGamma04, 5); }), ErrorKind::OddWeight);
}

TEST(CuspFormDim, AgreesWithRingOracles) {
  for (std::int64_t k = -6; k <= 200; k += 2) {
    EXPECT_EQ(cusp_form_dim(kModular, k), oracle_dim_s_level1(k)) << k;
    EXPECT_EQ(cusp_form_dim(kGamma04, k), oracle_dim_s_gamma04(k)) << k;
  }
}

TEST(CuspFormDim, NonNegativeAndMonotoneWithoutEllipticPoints) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto sig = random_signature(rng);
    std::int64_t prev = -1;
    for (std::int64_t k = -4; k <= 60; k += 2) {
      auto d = cusp_form_dim(sig, k);
      EXPECT_GE(d, 0) << sig.str() << " k=" << k;
      if (sig.elliptic_orders().empty() && k >= 4) {
        EXPECT_GE(d, prev) << sig.str() << " k=" << k;
        prev = d;
      }
    }
  }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(discrete_series_multiplicity(kGamma04, 5), 1);
  EXPECT_EQ(discrete_series_multiplicity(kModular, 11), 1);
  EXPECT_EQ(discrete_series_multiplicity(kGamma04, 1), 0);
  EXPECT_EQ(kind_of([] { discrete_series_multiplicity(kGamma04, 4); }), ErrorKind::ParityViolation);
  // SL(2,R) lattices accept even m, but S_{m+1} with m+1 odd is not covered.
  EXPECT_EQ(kind_of([] { discrete_series_multiplicity(kGamma04, 4, GroupMode::SL2R); }), ErrorKind::OddWeight);
}

TEST(FormalDimension, Examples) {
  EXPECT_EQ(formal_dimension_psl(1), PiRational(q(1, 4), -1));
  EXPECT_EQ(formal_dimension_psl(5), PiRational(q(5, 4), -1));
  EXPECT_EQ(kind_of([] { formal_dimension_psl(2); }), ErrorKind::ParityViolation);
  EXPECT_EQ(kind_of([] { formal_dimension_psl(-1); }), ErrorKind::NonPositiveWeight);
  EXPECT_EQ(formal_dimension_psl(2, GroupMode::SL2R), PiRational(q(1, 2), -1));
}

TEST(VnDimension, Examples) {
  EXPECT_EQ(vn_dimension(kGamma04, 5), q(5, 2));
  EXPECT_EQ(vn_dimension(Signature(0, {}, 4), 3), Rational(3));
  EXPECT_EQ(vn_dimension(Signature(0, {}, 6), 3), Rational(6));
  EXPECT_EQ(vn_dimension(Signature(2, {}, 0), 3), Rational(3));
}

TEST(VnDimension, ClosedFormAndProductIdentity) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> num(1, 1000), den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    auto sig = random_signature(rng);
    for (std::int64_t m = 1; m <= 15; m += 2) {
      const auto vn = vn_dimension(sig, m);
      EXPECT_EQ(PiRational(vn), mul(formal_dimension_psl(m), covolume(sig)));
      EXPECT_EQ(vn, q(m, 2) * sig.euler_term());
      // Rescaling the Haar measure by c rescales d_m by 1/c.
      const Rational c = q(num(rng), den(rng));
      EXPECT_EQ(mul(formal_dimension_psl(m).scaled(c), covolume(sig).scaled(c.reciprocal())), PiRational(vn));
    }
  }
}

TEST(VnDimension, CocompactTorsionFreeIsInteger) {
  for (std::int64_t g = 2; g <= 12; ++g)
    for (std::int64_t m = 3; m <= 31; m += 2) {
      const auto vn = vn_dimension(Signature(g, {}, 0), m);
      EXPECT_TRUE(vn.is_integer());
      EXPECT_GT(vn, Rational(0));
      EXPECT_EQ(vn, Rational(m * (g - 1)));
    }
}

TEST(MinimalWeight, Examples) {
  EXPECT_EQ(minimal_discrete_series_weight(kGamma04), 5);
  EXPECT_EQ(minimal_discrete_series_weight(kModular), 11);
  EXPECT_EQ(minimal_discrete_series_weight(Signature(2, {}, 0)), 1);
  EXPECT_EQ(minimal_discrete_series_weight(kModular, GroupMode::SL2R), 11);
  EXPECT_EQ(kind_of([] { minimal_discrete_series_weight(kModular, GroupMode::PSL2R, 9); }),
            ErrorKind::ScanCapExceeded);
}

TEST(MinimalWeight, MatchesOracleScan) {
  auto first = [](auto oracle) {
    for (std::int64_t m = 1;; m += 2)
      if (oracle(m + 1) > 0) return m;
  };
  EXPECT_EQ(minimal_discrete_series_weight(kModular), first(oracle_dim_s_level1));
  EXPECT_EQ(minimal_discrete_series_weight(kGamma04), first(oracle_dim_s_gamma04));
}

TEST(TwoLattice, Examples) {
  EXPECT_EQ(two_lattice_vn_dimension(kModular, kGamma04, 11), q(11, 2));
  EXPECT_EQ(two_lattice_vn_dimension(kGamma04, kGamma04, 5), q(5, 2));
  try {
    two_lattice_vn_dimension(kGamma04, Signature(0, {}, 6), 3);
    FAIL() << "expected NoOccurrence";
  } catch (const NoOccurrenceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoOccurrence);
    EXPECT_EQ(e.minimal_weight(), 5);
  }
}

TEST(TwoLattice, IndependentOfFirstLattice) {
  std::mt19937_64 rng(5);
  std::vector<Signature> sigs;
  for (int i = 0; i < 40; ++i) sigs.push_back(random_signature(rng));
  for (std::int64_t m = 1; m <= 21; m += 2)
    for (const auto& target : sigs) {
      std::optional<Rational> seen;
      for (const auto& source : sigs) {
        if (discrete_series_multiplicity(source, m) == 0) {
          EXPECT_EQ(kind_of([&] { two_lattice_vn_dimension(source, target, m); }), ErrorKind::NoOccurrence);
          continue;
        }
        auto v = two_lattice_vn_dimension(source, target, m);
        if (seen) {
          EXPECT_EQ(v, *seen);
        }
        seen = v;
      }
    }
}

TEST(Catalog, Entries) {
  EXPECT_EQ(catalog("H3"), kModular);
  EXPECT_EQ(catalog("H7"), Signature(0, {2, 7}, 1));
  EXPECT_EQ(catalog("Gamma0(4)"), kGamma04);
  EXPECT_EQ(catalog("Gamma0(4)capGamma(2)"), Signature(0, {}, 4));
  EXPECT_EQ(catalog("Gamma(4)"), Signature(0, {}, 6));
  for (const char* bad : {"H2", "H", "Hx", "Gamma(5)", ""})
    EXPECT_EQ(kind_of([&] { catalog(bad); }), ErrorKind::UnknownGroup) << bad;
}

TEST(Catalog, FreeChainCovolumesScaleWithIndex) {
  const auto names = free_congruence_names();
  const std::pair<std::size_t, std::size_t> inclusions[] = {{0, 1}, {1, 2}, {0, 2}};
  const std::int64_t expected[] = {2, 2, 4};
  for (std::size_t i = 0; i < 3; ++i) {
    auto big = catalog(names[inclusions[i].first]);
    auto small = catalog(names[inclusions[i].second]);
    auto ratio = (covolume(small) / covolume(big)).rational();
    EXPECT_EQ(ratio, Rational(expected[i]));
    EXPECT_EQ(ratio, Rational(factor::free_group_index(*big.free_rank(), *small.free_rank())));
  }
}

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vndim/pi_rational.hpp"

namespace vndim::fuchsian {

/// Lattices in PSL(2,R) require odd m (the discrete series must be trivial on
/// -I); lattices in SL(2,R) without -I admit every m >= 1.
enum class GroupMode { PSL2R, SL2R };

inline constexpr std::int64_t kDefaultScanCap = 1'000'000;

/// Signature (g; m_1, ..., m_l; h) of a Fuchsian group of the first kind.
///
/// Construction rejects non-hyperbolic data, so every instance describes a
/// quotient of positive finite area.
class Signature {
 public:
  Signature(std::int64_t genus, std::vector<std::int64_t> elliptic_orders, std::int64_t cusps)
      : genus_(genus), elliptic_(std::move(elliptic_orders)), cusps_(cusps) {
    if (genus_ < 0) fail(ErrorKind::InvalidSignature, "genus must be non-negative");
    if (cusps_ < 0) fail(ErrorKind::InvalidSignature, "cusp count must be non-negative");
    for (auto m : elliptic_)
      if (m < 2) fail(ErrorKind::InvalidSignature, "elliptic order " + std::to_string(m) + " < 2");
    if (euler_term().sign() <= 0)
      fail(ErrorKind::NonHyperbolic, "signature " + str() + " has non-positive area");
  }

  std::int64_t genus() const { return genus_; }
  std::span<const std::int64_t> elliptic_orders() const { return elliptic_; }
  std::int64_t cusps() const { return cusps_; }

  /// 2g - 2 + sum(1 - 1/m_j) + h, i.e. area / 2pi.
  Rational euler_term() const {
    Rational t(2 * genus_ - 2 + cusps_);
    for (auto m : elliptic_) t += Rational(1) - Rational(BigInt(1), BigInt(m));
    return t;
  }

  /// Text form "g;m1,m2,...;h" with "-" for no elliptic points.
  std::string str() const {
    std::string s = std::to_string(genus_) + ";";
    if (elliptic_.empty()) {
      s += "-";
    } else {
      for (std::size_t i = 0; i < elliptic_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elliptic_[i]);
      }
    }
    return s + ";" + std::to_string(cusps_);
  }

  static Signature parse(std::string_view text) {
    auto bad = [&]() -> void {
      fail(ErrorKind::Usage, "malformed signature '" + std::string(text) + "' (expected g;m1,...;h)");
    };
    auto first = text.find(';');
    auto second = first == std::string_view::npos ? first : text.find(';', first + 1);
    if (second == std::string_view::npos || text.find(';', second + 1) != std::string_view::npos) bad();
    auto to_int = [&](std::string_view s) -> std::int64_t {
      if (s.empty() || s.size() > 18) bad();
      std::int64_t v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') bad();
        v = v * 10 + (c - '0');
      }
      return v;
    };
    std::int64_t g = to_int(text.substr(0, first));
    std::string_view mid = text.substr(first + 1, second - first - 1);
    std::int64_t h = to_int(text.substr(second + 1));
    std::vector<std::int64_t> orders;
    if (mid != "-") {
      std::size_t pos = 0;
      while (true) {
        auto comma = mid.find(',', pos);
        orders.push_back(to_int(mid.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    }
    return {g, std::move(orders), h};
  }

  /// Rank of the group when it is free (genus 0 is not required: any
  /// torsion-free group with a cusp is free of rank 2g + h - 1).
  std::optional<std::int64_t> free_rank() const {
    if (!elliptic_.empty() || cusps_ == 0) return std::nullopt;
    return 2 * genus_ + cusps_ - 1;
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::int64_t genus_;
  std::vector<std::int64_t> elliptic_;
  std::int64_t cusps_;
};

/// Gauss-Bonnet area 2pi(2g - 2 + sum(1 - 1/m_j) + h) for the measure y^-2 dx dy.
inline PiRational covolume(const Signature& sig) { return {sig.euler_term() * Rational(2), 1}; }

/// Dimension of the space of weight-k cusp forms, k even.
///
/// The k > 2 branch is the Riemann-Roch count
///   (k-1)(g-1) + sum floor((k/2)(1 - 1/e_i)) + (k/2 - 1) h.
inline std::int64_t cusp_form_dim(const Signature& sig, std::int64_t weight) {
  if (weight % 2 != 0)
    fail(ErrorKind::OddWeight, "weight " + std::to_string(weight) + " is odd; only even weights are covered");
  if (weight < 0) return 0;
  if (weight == 0) return sig.cusps() == 0 ? 1 : 0;
  if (weight == 2) return sig.genus();
  const std::int64_t half = weight / 2;
  std::int64_t dim = (weight - 1) * (sig.genus() - 1) + (half - 1) * sig.cusps();
  for (auto e : sig.elliptic_orders()) dim += (half * (e - 1)) / e;
  return dim;
}

namespace detail {
inline void check_weight(std::int64_t m, GroupMode mode) {
  if (m < 1) fail(ErrorKind::NonPositiveWeight, "m = " + std::to_string(m) + " must be >= 1");
  if (mode == GroupMode::PSL2R && m % 2 == 0)
    fail(ErrorKind::ParityViolation, "m = " + std::to_string(m) + " must be odd for PSL(2,R)");
}
}  // namespace detail

/// Multiplicity of D_m in L^2(Gamma\G), equal to dim S_{m+1}(Gamma).
inline std::int64_t discrete_series_multiplicity(const Signature& sig, std::int64_t m,
                                                 GroupMode mode = GroupMode::PSL2R) {
  detail::check_weight(m, mode);
  return cusp_form_dim(sig, m + 1);
}

/// d_m = m / (4 pi), compatible with y^-2 dx dy on the upper half plane.
inline PiRational formal_dimension_psl(std::int64_t m, GroupMode mode = GroupMode::PSL2R) {
  detail::check_weight(m, mode);
  return {Rational(BigInt(m), BigInt(4)), -1};
}

/// dim_{R Gamma} D_m = d_m * vol(Gamma\G) = (m/2)(2g - 2 + sum(1 - 1/m_j) + h).
inline Rational vn_dimension(const Signature& sig, std::int64_t m, GroupMode mode = GroupMode::PSL2R) {
  return mul(formal_dimension_psl(m, mode), covolume(sig)).rational();
}

/// Smallest m with D_m occurring in L^2(Gamma\G).
///
/// Only odd m are scanned in either mode: the multiplicity formula needs an
/// even cusp-form weight m + 1.
inline std::int64_t minimal_discrete_series_weight(const Signature& sig, GroupMode mode = GroupMode::PSL2R,
                                                   std::int64_t scan_cap = kDefaultScanCap) {
  for (std::int64_t m = 1; m <= scan_cap; m += 2)
    if (discrete_series_multiplicity(sig, m, mode) >= 1) return m;
  fail(ErrorKind::ScanCapExceeded,
       "no discrete series found for " + sig.str() + " with m <= " + std::to_string(scan_cap));
}

/// Von Neumann dimension of R Gamma_2 acting on D_{m, Gamma_1} in
/// L^2(Gamma_1\G). The value is that of Gamma_2 alone; Gamma_1 only decides
/// whether D_m occurs at all.
inline Rational two_lattice_vn_dimension(const Signature& sig1, const Signature& sig2, std::int64_t m,
                                         std::int64_t scan_cap = kDefaultScanCap) {
  if (discrete_series_multiplicity(sig1, m) == 0) {
    auto minimal = minimal_discrete_series_weight(sig1, GroupMode::PSL2R, scan_cap);
    throw NoOccurrenceError("D_" + std::to_string(m) + " does not occur in L^2 for " + sig1.str() +
                                "; smallest occurring m is " + std::to_string(minimal),
                            minimal);
  }
  return vn_dimension(sig2, m);
}

/// Named lattices: Hecke groups "H<q>" and the free congruence subgroups of
/// PSL(2,Z).
inline Signature catalog(std::string_view name) {
  if (name == "Gamma0(4)") return {0, {}, 3};
  if (name == "Gamma0(4)capGamma(2)") return {0, {}, 4};
  if (name == "Gamma(4)") return {0, {}, 6};
  if (name.size() >= 2 && name[0] == 'H' && name.size() <= 10 &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    std::int64_t q = std::stoll(std::string(name.substr(1)));
    if (q >= 3) return {0, {2, q}, 1};
  }
  fail(ErrorKind::UnknownGroup, "unknown group '" + std::string(name) + "'");
}

/// The catalog's free congruence chain Gamma(4) < Gamma0(4) cap Gamma(2) < Gamma0(4),
/// listed from the largest group down.
inline std::vector<std::string> free_congruence_names() {
  return {"Gamma0(4)", "Gamma0(4)capGamma(2)", "Gamma(4)"};
}

}  // namespace vndim::fuchsian

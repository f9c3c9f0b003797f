#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vndim/finite_field.hpp"
#include "vndim/rational.hpp"

namespace vndim::padic {

using ff::PrimePower;

inline void require_prime(std::int64_t p) {
  if (!ff::is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------------------
// Valuations

/// v_p(r), with +infinity for r = 0 ordered above every integer.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(std::int64_t v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  std::int64_t value() const {
    if (infinite_) fail(ErrorKind::Usage, "valuation of zero is infinite");
    return v_;
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.v_ <=> b.v_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return finite(a.v_ + b.v_);
  }

 private:
  Valuation(bool inf, std::int64_t v) : infinite_(inf), v_(v) {}
  bool infinite_;
  std::int64_t v_;
};

/// Multiplicity of p in an integer; n must be nonzero.
inline std::int64_t integer_valuation(BigInt n, std::int64_t p) {
  std::int64_t v = 0;
  if (n < 0) n = -n;
  const BigInt P(p);
  while (n % P == 0) {
    n /= P;
    ++v;
  }
  return v;
}

inline Valuation padic_valuation(const Rational& r, std::int64_t p) {
  require_prime(p);
  if (r.is_zero()) return Valuation::infinity();
  return Valuation::finite(integer_valuation(r.num(), p) - integer_valuation(r.den(), p));
}

/// |r|_p = p^{-v_p(r)}, and |0|_p = 0.
inline Rational padic_abs(const Rational& r, std::int64_t p) {
  const auto v = padic_valuation(r, p);
  if (v.is_infinite()) return Rational(0);
  return Rational(p).pow(-v.value());
}

/// |r + s|_p <= max(|r|_p, |s|_p).
inline bool ultrametric_check(const Rational& r, const Rational& s, std::int64_t p) {
  const auto lhs = padic_abs(r + s, p);
  return lhs <= std::max(padic_abs(r, p), padic_abs(s, p));
}

// ---------------------------------------------------------------------------
// Quadratic extensions and character levels

struct LevelArithmetic {
  std::int64_t composed_level;
  std::int64_t trace_ideal_exponent;
};

/// For E/F of ramification e: a level-n character composed with the norm has
/// level e*n, and Tr(p_E^{1+n}) = p_F^{1 + floor(n/e)}.
inline LevelArithmetic extension_level_arithmetic(std::int64_t n, std::int64_t e) {
  if (e != 1 && e != 2)
    fail(ErrorKind::BadRamification, "ramification index " + std::to_string(e) + " not in {1, 2}");
  if (n < 1) fail(ErrorKind::LevelOutOfRange, "level " + std::to_string(n) + " < 1");
  return {e * n, 1 + n / e};
}

/// Quadratic extensions of Q_p: one unramified and two ramified for odd p, seven for p = 2.
inline std::int64_t quadratic_extension_count(std::int64_t p) {
  require_prime(p);
  // Q_p^x / (Q_p^x)^2 has order 4 for odd p and 8 for p = 2.
  const std::int64_t square_classes = p == 2 ? 8 : 4;
  return square_classes - 1;
}

// ---------------------------------------------------------------------------
// Affine Weyl group W_0 = <w, w' | w^2 = w'^2 = 1>

enum class WeylLetter : char { W = 'w', WPrime = 'v' };

/// Reduced word in W_0: letters alternate between w and w'.
class ReducedWeylWord {
 public:
  ReducedWeylWord() = default;
  explicit ReducedWeylWord(std::vector<WeylLetter> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (letters_[i] == letters_[i - 1]) fail(ErrorKind::Usage, "word is not reduced");
  }

  /// Alternating word of the given length starting with `first`.
  static ReducedWeylWord alternating(WeylLetter first, std::size_t length) {
    std::vector<WeylLetter> letters(length);
    WeylLetter cur = first;
    for (auto& l : letters) {
      l = cur;
      cur = cur == WeylLetter::W ? WeylLetter::WPrime : WeylLetter::W;
    }
    return ReducedWeylWord(std::move(letters));
  }

  std::size_t length() const { return letters_.size(); }
  const std::vector<WeylLetter>& letters() const { return letters_; }

  /// "e" for the identity, otherwise e.g. "ww'w".
  std::string str() const {
    if (letters_.empty()) return "e";
    std::string s;
    for (auto l : letters_) s += l == WeylLetter::W ? "w" : "w'";
    return s;
  }

  friend bool operator==(const ReducedWeylWord&, const ReducedWeylWord&) = default;

 private:
  std::vector<WeylLetter> letters_;
};

/// All elements of W_0 of length <= max_length, by length, w before w'.
inline std::vector<ReducedWeylWord> weyl_enumerate(std::size_t max_length) {
  std::vector<ReducedWeylWord> words{ReducedWeylWord()};
  for (std::size_t k = 1; k <= max_length; ++k) {
    words.push_back(ReducedWeylWord::alternating(WeylLetter::W, k));
    words.push_back(ReducedWeylWord::alternating(WeylLetter::WPrime, k));
  }
  return words;
}

/// 2 * sum over l(g) <= L of q^{-l(g)}, the truncated norm of the Steinberg
/// matrix coefficient under vol(I.Z/Z) = 1.
inline Rational weyl_partial_sum(const PrimePower& q, std::size_t max_length) {
  Rational sum(0);
  const Rational inv_q = Rational(BigInt(1), BigInt(q.q()));
  for (const auto& word : weyl_enumerate(max_length))
    sum += inv_q.pow(static_cast<std::int64_t>(word.length()));
  return sum * Rational(2);
}

/// Limit of weyl_partial_sum: 2(q+1)/(q-1).
inline Rational weyl_closed_form(const PrimePower& q) {
  return Rational(BigInt(2 * (q.q() + 1)), BigInt(q.q() - 1));
}

// ---------------------------------------------------------------------------
// Haar measure on PGL(2,F)

enum class HaarNormalization {
  IwahoriOne,      ///< vol(I.Z/Z) = 1
  KOne,            ///< vol(K.Z/Z) = 1
  KQPlusOne,       ///< vol(K.Z/Z) = q+1
  KHalfQMinusOne,  ///< vol(K.Z/Z) = (q-1)/2, where Steinberg has formal degree 1
};

inline constexpr HaarNormalization kAllNormalizations[] = {
    HaarNormalization::IwahoriOne, HaarNormalization::KOne, HaarNormalization::KQPlusOne,
    HaarNormalization::KHalfQMinusOne};

inline std::string_view to_string(HaarNormalization n) {
  switch (n) {
    case HaarNormalization::IwahoriOne: return "iwahori1";
    case HaarNormalization::KOne: return "k1";
    case HaarNormalization::KQPlusOne: return "kq1";
    case HaarNormalization::KHalfQMinusOne: return "khalf";
  }
  return "?";
}

inline HaarNormalization parse_normalization(std::string_view s) {
  for (auto n : kAllNormalizations)
    if (to_string(n) == s) return n;
  fail(ErrorKind::Usage, "unknown normalization '" + std::string(s) + "' (iwahori1|k1|kq1|khalf)");
}

struct HaarVolumes {
  Rational vol_IZ;
  Rational vol_KZ;
};

/// I.Z/Z has index q+1 in K.Z/Z, so vol_KZ = (q+1) vol_IZ in every normalization.
inline HaarVolumes haar_volumes(const PrimePower& pq, HaarNormalization norm) {
  const BigInt q = pq.q();
  const Rational index(BigInt(q + 1));
  switch (norm) {
    case HaarNormalization::IwahoriOne: return {Rational(1), index};
    case HaarNormalization::KOne: return {Rational(1) / index, Rational(1)};
    case HaarNormalization::KQPlusOne: return {Rational(1), index};
    case HaarNormalization::KHalfQMinusOne: {
      Rational kz(BigInt(q - 1), BigInt(2));
      return {kz / index, kz};
    }
  }
  fail(ErrorKind::Usage, "bad normalization");
}

// ---------------------------------------------------------------------------
// Formal dimensions

/// Formal dimension of the Steinberg representation.
///
/// Its matrix coefficient f has f(1) = 1 and squared norm 2 sum q^{-l(g)}
/// under vol(I.Z/Z) = 1, so d = 1 / weyl_closed_form there. Formal dimension
/// scales inversely with the measure.
inline Rational steinberg_formal_dim(const PrimePower& q, HaarNormalization norm) {
  const Rational iwahori = weyl_closed_form(q).reciprocal();
  return iwahori / haar_volumes(q, norm).vol_IZ;
}

/// d = dim(pi_theta) / vol(ZK/Z) with dim(pi_theta) = q - 1.
inline Rational depth_zero_formal_dim(const PrimePower& q, HaarNormalization norm) {
  return Rational(ff::finite_rep_dims(q).cuspidal_dim) / haar_volumes(q, norm).vol_KZ;
}

/// d_St * vol(K.Z/Z) = (1/n) prod_{k=1}^{n-1} (q^k - 1) for GL(n,F).
inline Rational cms_steinberg_identity(const PrimePower& q, std::int64_t n) {
  if (n < 2) fail(ErrorKind::Usage, "n must be >= 2");
  Rational prod(1);
  for (std::int64_t k = 1; k < n; ++k) prod *= Rational(ipow(BigInt(q.q()), k) - 1);
  return prod / Rational(n);
}

// ---------------------------------------------------------------------------
// Torsion-free lattices

/// A cocompact lattice in PGL(2,F) free of rank n, with h = |Gamma\G/K| = 2(n-1)/(q-1).
class PadicLattice {
 public:
  PadicLattice(const PrimePower& q, std::int64_t n) : q_(q), n_(n) {
    if (n < 2) fail(ErrorKind::NoSuchLattice, "free rank " + std::to_string(n) + " < 2");
    const auto twice = 2 * (n - 1);
    if (twice % (q.q() - 1) != 0)
      fail(ErrorKind::NoSuchLattice, "2(n-1)/(q-1) = " + std::to_string(twice) + "/" + std::to_string(q.q() - 1) +
                                         " is not an integer for q = " + std::to_string(q.q()) +
                                         ", n = " + std::to_string(n));
    h_ = twice / (q.q() - 1);
  }

  const PrimePower& q() const { return q_; }
  std::int64_t rank() const { return n_; }
  std::int64_t h() const { return h_; }

 private:
  PrimePower q_;
  std::int64_t n_;
  std::int64_t h_ = 0;
};

inline PadicLattice ihara_lattice(const PrimePower& q, std::int64_t n) { return {q, n}; }

/// vol(Gamma\PGL(2,F)) = h * vol(K.Z/Z).
inline Rational lattice_covolume(const PrimePower& q, std::int64_t n, HaarNormalization norm) {
  return Rational(ihara_lattice(q, n).h()) * haar_volumes(q, norm).vol_KZ;
}

enum class PadicRep { Steinberg, DepthZeroCuspidal };

inline std::string_view to_string(PadicRep r) {
  return r == PadicRep::Steinberg ? "steinberg" : "cuspidal";
}

inline PadicRep parse_rep(std::string_view s) {
  if (s == "steinberg") return PadicRep::Steinberg;
  if (s == "cuspidal") return PadicRep::DepthZeroCuspidal;
  fail(ErrorKind::Usage, "unknown representation '" + std::string(s) + "' (steinberg|cuspidal)");
}

inline Rational formal_dim(const PrimePower& q, PadicRep rep, HaarNormalization norm) {
  return rep == PadicRep::Steinberg ? steinberg_formal_dim(q, norm) : depth_zero_formal_dim(q, norm);
}

/// d_pi * vol(Gamma\G): n-1 for Steinberg and 2(n-1) for depth-zero cuspidals.
inline Rational vn_dimension_padic(const PrimePower& q, std::int64_t n, PadicRep rep, HaarNormalization norm) {
  return formal_dim(q, rep, norm) * lattice_covolume(q, n, norm);
}

// ---------------------------------------------------------------------------
// Jacquet-Langlands formal degrees over Q_p, normalized so Steinberg has degree 1

enum class JLTag { GeneralizedSpecial, UnramifiedCuspidal, RamifiedCuspidal };

class JLClass {
 public:
  static JLClass special() { return JLClass(JLTag::GeneralizedSpecial, 0); }
  static JLClass unramified(std::int64_t j) {
    if (j < 1) fail(ErrorKind::InvalidConductor, "conductor " + std::to_string(j) + " < 1");
    return JLClass(JLTag::UnramifiedCuspidal, j);
  }
  static JLClass ramified(std::int64_t j) {
    if (j < 1) fail(ErrorKind::InvalidConductor, "conductor " + std::to_string(j) + " < 1");
    if (j % 2 != 0)
      fail(ErrorKind::OddRamifiedConductor, "ramified cuspidal classes need even conductor, got " + std::to_string(j));
    return JLClass(JLTag::RamifiedCuspidal, j);
  }

  /// "special", "unram:j=<n>" or "ram:j=<n>".
  static JLClass parse(std::string_view s) {
    if (s == "special") return special();
    auto conductor = [&](std::string_view digits) -> std::int64_t {
      if (digits.empty() || digits.size() > 9) fail(ErrorKind::Usage, "bad conductor in '" + std::string(s) + "'");
      std::int64_t v = 0;
      for (char c : digits) {
        if (c < '0' || c > '9') fail(ErrorKind::Usage, "bad conductor in '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
      }
      return v;
    };
    if (s.starts_with("unram:j=")) return unramified(conductor(s.substr(8)));
    if (s.starts_with("ram:j=")) return ramified(conductor(s.substr(6)));
    fail(ErrorKind::Usage, "unknown JL class '" + std::string(s) + "' (special|unram:j=<n>|ram:j=<n>)");
  }

  JLTag tag() const { return tag_; }
  std::int64_t conductor() const { return j_; }

  std::string str() const {
    switch (tag_) {
      case JLTag::GeneralizedSpecial: return "special";
      case JLTag::UnramifiedCuspidal: return "unram:j=" + std::to_string(j_);
      case JLTag::RamifiedCuspidal: return "ram:j=" + std::to_string(j_);
    }
    return "?";
  }

 private:
  JLClass(JLTag tag, std::int64_t j) : tag_(tag), j_(j) {}
  JLTag tag_;
  std::int64_t j_;
};

/// Formal degree over Q_p with vol(K.Z/Z) = (p-1)/2:
///   1 (special), 2 p^{j-1} (unramified, j >= 1), (p+1) p^{(j-2)/2} (ramified, j even).
inline BigInt jl_formal_dim(std::int64_t p, const JLClass& cls) {
  if (!ff::is_prime(p))
    fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime; the table is over Q_p, prime powers are not accepted");
  if (p == 2) fail(ErrorKind::EvenResidue, "p = 2 is excluded; odd residue characteristic required");
  const BigInt P(p);
  switch (cls.tag()) {
    case JLTag::GeneralizedSpecial: return 1;
    case JLTag::UnramifiedCuspidal: return 2 * ipow(P, cls.conductor() - 1);
    case JLTag::RamifiedCuspidal: return (P + 1) * ipow(P, (cls.conductor() - 2) / 2);
  }
  return 0;
}

}  // namespace vndim::padic

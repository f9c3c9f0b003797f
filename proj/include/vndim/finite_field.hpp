#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vndim/rational.hpp"

namespace vndim::ff {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// q = p^f with p an odd prime.
class PrimePower {
 public:
  explicit PrimePower(std::int64_t q) : q_(q) {
    if (q < 2) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    std::int64_t p = 2;
    while (q % p != 0) ++p;
    std::int64_t rest = q;
    int f = 0;
    while (rest % p == 0) {
      rest /= p;
      ++f;
    }
    if (rest != 1) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (p == 2) fail(ErrorKind::EvenResidue, "q = " + std::to_string(q) + " is even; odd residue characteristic required");
    p_ = p;
    f_ = f;
  }

  std::int64_t p() const { return p_; }
  int f() const { return f_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::int64_t q_;
  std::int64_t p_ = 0;
  int f_ = 0;
};

/// Exhaustive scans stay below this q.
inline constexpr std::int64_t kEnumerationGuard = 9;

inline void check_enumerable(const PrimePower& q, std::int64_t guard = kEnumerationGuard) {
  if (q.q() > guard)
    fail(ErrorKind::TooLarge, "q = " + std::to_string(q.q()) + " exceeds enumeration guard " + std::to_string(guard));
}

struct GroupOrders {
  BigInt gl2_order;
  BigInt borel_order;
  BigInt borel_index;
};

/// |GL(2,F_q)| = (q^2-1)(q^2-q), |B_q| = q(q-1)^2, [G_q : B_q] = q+1.
inline GroupOrders group_orders(const PrimePower& pq) {
  BigInt q = pq.q();
  GroupOrders o;
  o.gl2_order = (q * q - 1) * (q * q - q);
  o.borel_order = q * (q - 1) * (q - 1);
  o.borel_index = o.gl2_order / o.borel_order;
  return o;
}

/// F_q as F_p[x]/(f) with operation tables. Elements are encoded as integers
/// in [0, q): the base-p digits are the polynomial coefficients, lowest first.
class GaloisField {
 public:
  explicit GaloisField(const PrimePower& pq) : p_(pq.p()), degree_(pq.f()), q_(pq.q()) {
    modulus_ = smallest_irreducible();
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (std::int64_t a = 0; a < q_; ++a)
      for (std::int64_t b = 0; b < q_; ++b) {
        add_[a * q_ + b] = encode(poly_add(decode(a), decode(b)));
        mul_[a * q_ + b] = encode(poly_mulmod(decode(a), decode(b)));
      }
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (std::int64_t a = 0; a < q_; ++a)
      for (std::int64_t b = 0; b < q_; ++b) {
        if (add(a, b) == 0) neg_[a] = b;
        if (mul(a, b) == 1) inv_[a] = b;
      }
  }

  std::int64_t size() const { return q_; }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return add_[a * q_ + b]; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return mul_[a * q_ + b]; }
  std::int64_t neg(std::int64_t a) const { return neg_[a]; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
  /// Inverse of a nonzero element.
  std::int64_t inv(std::int64_t a) const { return inv_[a]; }

  /// Coefficients (lowest first, monic) of the defining polynomial over F_p.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

 private:
  using Poly = std::vector<std::int64_t>;

  Poly decode(std::int64_t a) const {
    Poly c(degree_, 0);
    for (int i = 0; i < degree_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }
  std::int64_t encode(const Poly& c) const {
    std::int64_t a = 0;
    for (int i = degree_ - 1; i >= 0; --i) a = a * p_ + c[i];
    return a;
  }
  Poly poly_add(const Poly& a, const Poly& b) const {
    Poly c(degree_);
    for (int i = 0; i < degree_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
  }
  Poly poly_mulmod(const Poly& a, const Poly& b) const {
    Poly prod(2 * degree_, 0);
    for (int i = 0; i < degree_; ++i)
      for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    for (int k = 2 * degree_ - 1; k >= degree_; --k) {
      std::int64_t lead = prod[k];
      if (lead == 0) continue;
      for (int i = 0; i <= degree_; ++i) {
        auto& slot = prod[k - degree_ + i];
        slot = ((slot - lead * modulus_[i]) % p_ + p_) % p_;
      }
    }
    prod.resize(degree_);
    return prod;
  }

  // Smallest monic irreducible of the field degree, by trial division against
  // every monic polynomial of degree 1..degree/2.
  Poly smallest_irreducible() const {
    if (degree_ == 1) return {0, 1};
    std::int64_t count = 1;
    for (int i = 0; i < degree_; ++i) count *= p_;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly f(degree_ + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < degree_; ++i) {
        f[i] = c % p_;
        c /= p_;
      }
      f[degree_] = 1;
      if (is_irreducible(f)) return f;
    }
    fail(ErrorKind::NotPrimePower, "no irreducible polynomial found");
  }

  bool is_irreducible(const Poly& f) const {
    for (int d = 1; 2 * d <= degree_; ++d) {
      std::int64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (std::int64_t code = 0; code < count; ++code) {
        Poly g(d + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < d; ++i) {
          g[i] = c % p_;
          c /= p_;
        }
        g[d] = 1;
        if (divides(g, f)) return false;
      }
    }
    return true;
  }

  bool divides(const Poly& g, Poly f) const {
    const int dg = static_cast<int>(g.size()) - 1;
    for (int k = static_cast<int>(f.size()) - 1; k >= dg; --k) {
      std::int64_t lead = f[k];
      if (lead == 0) continue;
      for (int i = 0; i <= dg; ++i) {
        auto& slot = f[k - dg + i];
        slot = ((slot - lead * g[i]) % p_ + p_) % p_;
      }
    }
    for (int i = 0; i < dg; ++i)
      if (f[i] != 0) return false;
    return true;
  }

  std::int64_t p_;
  int degree_;
  std::int64_t q_;
  Poly modulus_;
  std::vector<std::int64_t> add_, mul_, neg_, inv_;
};

/// F_{q^2} = F_q[y]/(y^2 + b y + c), with (b, c) the lexicographically
/// smallest pair (in the element encoding of F_q) giving an irreducible
/// quadratic. Elements are pairs (x0, x1) meaning x0 + x1 y.
class QuadraticExtension {
 public:
  using Element = std::pair<std::int64_t, std::int64_t>;

  explicit QuadraticExtension(GaloisField base) : base_(std::move(base)) {
    const auto q = base_.size();
    for (std::int64_t bb = 0; bb < q; ++bb)
      for (std::int64_t cc = 0; cc < q; ++cc) {
        bool has_root = false;
        for (std::int64_t r = 0; r < q && !has_root; ++r)
          has_root = base_.add(base_.add(base_.mul(r, r), base_.mul(bb, r)), cc) == 0;
        if (!has_root) {
          b_ = bb;
          c_ = cc;
          return;
        }
      }
  }

  const GaloisField& base() const { return base_; }
  std::pair<std::int64_t, std::int64_t> quadratic() const { return {b_, c_}; }

  Element add(const Element& x, const Element& y) const {
    return {base_.add(x.first, y.first), base_.add(x.second, y.second)};
  }

  Element mul(const Element& x, const Element& y) const {
    const auto& F = base_;
    // (x0 + x1 y)(y0 + y1 y) with y^2 = -b y - c
    std::int64_t s0 = F.mul(x.first, y.first);
    std::int64_t s1 = F.add(F.mul(x.first, y.second), F.mul(x.second, y.first));
    std::int64_t s2 = F.mul(x.second, y.second);
    return {F.sub(s0, F.mul(s2, c_)), F.sub(s1, F.mul(s2, b_))};
  }

  Element pow(Element x, std::int64_t e) const {
    Element r{1, 0};
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  /// Galois conjugate x^q.
  Element frobenius(const Element& x) const { return pow(x, base_.size()); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    const auto q = base_.size();
    out.reserve(q * q);
    for (std::int64_t x1 = 0; x1 < q; ++x1)
      for (std::int64_t x0 = 0; x0 < q; ++x0) out.push_back({x0, x1});
    return out;
  }

 private:
  GaloisField base_;
  std::int64_t b_ = 0;
  std::int64_t c_ = 0;
};

struct Gl2Count {
  std::int64_t counted_order = 0;
  std::int64_t counted_borel = 0;
};

/// Counts invertible and invertible upper-triangular 2x2 matrices over F_q by
/// testing every determinant.
inline Gl2Count enumerate_gl2(const PrimePower& pq, std::int64_t guard = kEnumerationGuard) {
  check_enumerable(pq, guard);
  GaloisField F(pq);
  const auto q = F.size();
  Gl2Count count;
  for (std::int64_t a = 0; a < q; ++a)
    for (std::int64_t b = 0; b < q; ++b)
      for (std::int64_t c = 0; c < q; ++c)
        for (std::int64_t d = 0; d < q; ++d) {
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
          ++count.counted_order;
          if (c == 0) ++count.counted_borel;
        }
  return count;
}

/// Index of a character theta_a of the cyclic group F_{q^2}^x, which sends a
/// fixed generator g to exp(2 pi i a / (q^2 - 1)).
class CharacterIndex {
 public:
  CharacterIndex(const PrimePower& q, std::int64_t a) : modulus_(q.q() * q.q() - 1) {
    a_ = ((a % modulus_) + modulus_) % modulus_;
  }
  std::int64_t value() const { return a_; }
  std::int64_t modulus() const { return modulus_; }

 private:
  std::int64_t modulus_;
  std::int64_t a_ = 0;
};

/// theta is regular when theta^q != theta, i.e. q a != a mod q^2 - 1.
inline bool is_regular(const PrimePower& q, const CharacterIndex& chi) {
  const auto n = chi.modulus();
  return ((q.q() - 1) * chi.value()) % n != 0;
}

/// nu is an index mod q-1 relative to the generator g^{q+1} of F_q^x.
inline std::int64_t normalize_nu(const PrimePower& q, std::int64_t nu) {
  const auto m = q.q() - 1;
  return ((nu % m) + m) % m;
}

/// The quadratic character of F_q^x.
inline std::int64_t sign_character(const PrimePower& q) { return (q.q() - 1) / 2; }

/// Number of regular characters of F_{q^2}^x restricting to nu on F_q^x:
/// q-1 when nu^{(q-1)/2} is trivial, q+1 otherwise.
inline std::int64_t count_regular_characters(const PrimePower& q, std::int64_t nu) {
  const auto m = q.q() - 1;
  const bool half_power_trivial = (normalize_nu(q, nu) * ((q.q() - 1) / 2)) % m == 0;
  return half_power_trivial ? q.q() - 1 : q.q() + 1;
}

/// Restriction of theta_a to F_q^x = <g^{q+1}>, as an index mod q-1.
inline std::int64_t restriction_index(const PrimePower& q, const CharacterIndex& chi) {
  const auto n = chi.modulus();
  // theta_a(g^{q+1}) = exp(2 pi i a (q+1) / (q^2-1)); the numerator is a
  // multiple of q+1, and dividing it out gives the exponent over q-1.
  const auto scaled = (chi.value() * (q.q() + 1)) % n;
  return scaled / (q.q() + 1);
}

/// Enumerates every a mod q^2-1 and counts regular characters restricting to nu.
inline std::int64_t brute_force_regular_characters(const PrimePower& q, std::int64_t nu,
                                                   std::int64_t guard = kEnumerationGuard) {
  check_enumerable(q, guard);
  const auto target = normalize_nu(q, nu);
  const auto n = q.q() * q.q() - 1;
  std::int64_t count = 0;
  for (std::int64_t a = 0; a < n; ++a) {
    CharacterIndex chi(q, a);
    if (is_regular(q, chi) && restriction_index(q, chi) == target) ++count;
  }
  return count;
}

/// True when the regular characters are exactly those not of the form chi o N,
/// with N(x) = x^{q+1} the norm, checked over all of Z/(q^2-1).
inline bool regular_iff_not_norm_factoring(const PrimePower& q, std::int64_t guard = kEnumerationGuard) {
  check_enumerable(q, guard);
  const auto n = q.q() * q.q() - 1;
  std::vector<bool> factors(n, false);
  for (std::int64_t b = 0; b < q.q() - 1; ++b) factors[(b * (q.q() + 1)) % n] = true;
  for (std::int64_t a = 0; a < n; ++a)
    if (is_regular(q, CharacterIndex(q, a)) == factors[a]) return false;
  return true;
}

struct NormTraceFacts {
  bool norm_surjective = false;
  bool trace_surjective = false;
  std::int64_t norm_kernel_size = 0;
  /// |{x / x^q : x in F_{q^2}^x}|
  std::int64_t hilbert90_image_size = 0;
  /// Whether that image is exactly the norm-one subgroup.
  bool hilbert90_matches_kernel = false;
};

/// Verifies the norm/trace facts by enumerating F_{q^2} as a quadratic
/// extension of an explicit model of F_q.
inline NormTraceFacts norm_trace_facts(const PrimePower& pq, std::int64_t guard = kEnumerationGuard) {
  check_enumerable(pq, guard);
  GaloisField F(pq);
  QuadraticExtension E(F);
  const auto q = F.size();
  std::vector<bool> norm_hit(q, false), trace_hit(q, false);
  std::vector<bool> in_kernel(q * q, false), in_image(q * q, false);
  auto code = [q](const QuadraticExtension::Element& x) { return x.first + q * x.second; };
  NormTraceFacts facts;
  bool lands_in_base = true;
  for (const auto& x : E.elements()) {
    const auto conj = E.frobenius(x);
    const auto trace = E.add(x, conj);
    lands_in_base = lands_in_base && trace.second == 0;
    trace_hit[trace.first] = true;
    if (x == QuadraticExtension::Element{0, 0}) continue;
    const auto norm = E.mul(x, conj);
    lands_in_base = lands_in_base && norm.second == 0;
    norm_hit[norm.first] = true;
    if (norm == QuadraticExtension::Element{1, 0}) {
      in_kernel[code(x)] = true;
      ++facts.norm_kernel_size;
    }
    // x / x^q = x^{1-q} = x^{q^2 - q} in the cyclic group of order q^2 - 1.
    in_image[code(E.pow(x, q * q - q))] = true;
  }
  facts.trace_surjective = lands_in_base;
  facts.norm_surjective = lands_in_base;
  for (std::int64_t a = 0; a < q; ++a) {
    facts.trace_surjective = facts.trace_surjective && trace_hit[a];
    if (a != 0) facts.norm_surjective = facts.norm_surjective && norm_hit[a];
  }
  facts.hilbert90_matches_kernel = true;
  for (std::int64_t i = 0; i < q * q; ++i) {
    if (in_image[i]) ++facts.hilbert90_image_size;
    if (in_image[i] != in_kernel[i]) facts.hilbert90_matches_kernel = false;
  }
  return facts;
}

struct FiniteRepDims {
  std::int64_t principal_series_dim;
  std::int64_t cuspidal_dim;
  std::int64_t steinberg_dim;
};

/// Ind_B^G 1 has dimension [G_q : B_q] = q+1 and splits as 1 + St, so
/// St has dimension q; cuspidal representations have dimension q-1.
inline FiniteRepDims finite_rep_dims(const PrimePower& q) {
  const auto induced = static_cast<std::int64_t>(group_orders(q).borel_index);
  return {induced, q.q() - 1, induced - 1};
}

}  // namespace vndim::ff

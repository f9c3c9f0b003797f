#pragma once

#include <cstdint>
#include <string>

#include "vndim/rational.hpp"

// Numeric shadows of finite factors: coupling constants of matrix algebras,
// Jones indices as ratios of coupling constants, and Nielsen-Schreier indices
// of free groups.
namespace vndim::factor {

/// dim over M_n(C) (x) 1_{C^k} of C^n (x) C^k, which is k/n.
inline Rational matrix_coupling(std::int64_t n, std::int64_t k) {
  if (n <= 0 || k <= 0)
    fail(ErrorKind::ZeroSize, "matrix sizes must be positive (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  return {BigInt(k), BigInt(n)};
}

/// [M : N] = dim_H N / dim_H M for N inside M acting on the same H.
inline Rational jones_index(const Rational& dim_sub, const Rational& dim_ambient) {
  if (dim_sub.sign() <= 0 || dim_ambient.sign() <= 0)
    fail(ErrorKind::NonPositive, "coupling constants must be positive");
  return dim_sub / dim_ambient;
}

/// Index e of F_sub in F_ambient, from sub_rank = 1 + e (ambient_rank - 1).
inline std::int64_t free_group_index(std::int64_t ambient_rank, std::int64_t sub_rank) {
  if (ambient_rank < 2 || sub_rank < 2)
    fail(ErrorKind::NotFiniteIndex, "free group ranks must be >= 2");
  if ((sub_rank - 1) % (ambient_rank - 1) != 0)
    fail(ErrorKind::NotFiniteIndex, "F_" + std::to_string(sub_rank) + " is not a finite-index subgroup of F_" +
                                         std::to_string(ambient_rank));
  return (sub_rank - 1) / (ambient_rank - 1);
}

}  // namespace vndim::factor

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vndim/factor.hpp"
#include "vndim/format.hpp"
#include "vndim/fuchsian.hpp"
#include "vndim/padic.hpp"

// Reference tables, recomputed from the library on every call.
namespace vndim::tables {

using format::Table;
using format::Value;

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    out.emplace_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

inline std::int64_t to_int(const std::string& s, std::string_view name) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::UnknownTable, "bad parameter '" + s + "' in table '" + std::string(name) + "'");
  return std::stoll(s);
}

inline std::string free_label(const fuchsian::Signature& sig) {
  return "F" + std::to_string(*sig.free_rank());
}

}  // namespace detail

/// Hecke groups H_q = Z_2 * Z_q, q = 3..qmax.
inline Table hecke(std::int64_t qmax) {
  Table t{"hecke groups", {"group", "signature", "isomorphic_to", "covolume"}, {}};
  for (std::int64_t q = 3; q <= qmax; ++q) {
    const auto name = "H" + std::to_string(q);
    const auto sig = fuchsian::catalog(name);
    t.rows.push_back({name, sig.str(), "Z2*Z" + std::to_string(q), fuchsian::covolume(sig)});
  }
  return t;
}

/// The free congruence subgroups of PSL(2,Z) with their index in Gamma0(4),
/// read off as a covolume ratio.
inline Table free_congruence() {
  Table t{"free congruence subgroups", {"group", "signature", "isomorphic_to", "covolume", "index"}, {}};
  const auto top = fuchsian::covolume(fuchsian::catalog("Gamma0(4)"));
  for (const auto& name : fuchsian::free_congruence_names()) {
    const auto sig = fuchsian::catalog(name);
    const auto vol = fuchsian::covolume(sig);
    t.rows.push_back({name, sig.str(), detail::free_label(sig), vol, (vol / top).rational().num()});
  }
  return t;
}

/// dim_{R Gamma} D_m for the free congruence subgroups.
inline Table vn_free(std::int64_t m) {
  Table t{"von Neumann dimensions on D_" + std::to_string(m), {"group", "signature", "m", "vn_dim"}, {}};
  for (const auto& name : fuchsian::free_congruence_names()) {
    const auto sig = fuchsian::catalog(name);
    t.rows.push_back({name, sig.str(), m, PiRational(fuchsian::vn_dimension(sig, m))});
  }
  return t;
}

/// Subfactor indices along RF_5 < RF_3 < RF_2 from the coupling constants on
/// D_m, next to the Nielsen-Schreier index of the underlying free groups.
inline Table subfactor(std::int64_t m) {
  Table t{"subfactor indices on D_" + std::to_string(m),
          {"inclusion", "vn_dim_sub", "vn_dim_ambient", "jones_index", "nielsen_schreier"},
          {}};
  const auto names = fuchsian::free_congruence_names();
  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {1, 2}, {0, 2}};
  for (auto [big, small] : pairs) {
    const auto ambient = fuchsian::catalog(names[big]);
    const auto sub = fuchsian::catalog(names[small]);
    const auto d_ambient = fuchsian::vn_dimension(ambient, m);
    const auto d_sub = fuchsian::vn_dimension(sub, m);
    t.rows.push_back({"[R" + detail::free_label(ambient) + ":R" + detail::free_label(sub) + "]",
                      PiRational(d_sub), PiRational(d_ambient), PiRational(factor::jones_index(d_sub, d_ambient)),
                      factor::free_group_index(*ambient.free_rank(), *sub.free_rank())});
  }
  return t;
}

/// Coupling constants of matrix algebras and the index-9 inclusion.
inline Table matrix() {
  Table t{"matrix algebra coupling constants", {"quantity", "value"}, {}};
  t.rows.push_back({std::string("dim M_3(C) on C^3"), PiRational(factor::matrix_coupling(3, 1))});
  t.rows.push_back({std::string("dim M_2(C)(x)1 on C^2(x)C^3"), PiRational(factor::matrix_coupling(2, 3))});
  t.rows.push_back(
      {std::string("dim M_2(C)(x)1 on C^2(x)C^30000"), PiRational(factor::matrix_coupling(2, 30000))});
  // M_2(C) (x) M_3(C) acts on C^6 as M_6(C).
  const auto ambient = factor::matrix_coupling(6, 1);
  t.rows.push_back({std::string("dim M_2(C)(x)M_3(C) on C^2(x)C^3"), PiRational(ambient)});
  t.rows.push_back({std::string("[M_2(C)(x)M_3(C) : M_2(C)(x)1]"),
                    PiRational(factor::jones_index(factor::matrix_coupling(2, 3), ambient))});
  return t;
}

/// Ihara lattices F_n in PGL(2,F) with residue field F_q, n = 2..nmax, and
/// the von Neumann dimensions of the Steinberg and depth-zero cuspidal
/// representations. Every normalization is evaluated and must agree.
inline Table padic_lattices(std::int64_t q_value, std::int64_t nmax) {
  const ff::PrimePower q(q_value);
  Table t{"lattices in PGL(2,F), q = " + std::to_string(q_value),
          {"n", "h", "covol_k1", "d_st_k1", "vn_steinberg", "d_cusp_k1", "vn_cuspidal"},
          {}};
  for (std::int64_t n = 2; n <= nmax; ++n) {
    if ((2 * (n - 1)) % (q_value - 1) != 0) continue;
    const auto lattice = padic::ihara_lattice(q, n);
    Rational vn_st, vn_cusp;
    bool first = true;
    for (auto norm : padic::kAllNormalizations) {
      auto st = padic::vn_dimension_padic(q, n, padic::PadicRep::Steinberg, norm);
      auto cu = padic::vn_dimension_padic(q, n, padic::PadicRep::DepthZeroCuspidal, norm);
      if (first) {
        vn_st = st;
        vn_cusp = cu;
        first = false;
      } else if (st != vn_st || cu != vn_cusp) {
        fail(ErrorKind::Usage, "normalization dependence detected at n = " + std::to_string(n));
      }
    }
    const auto k1 = padic::HaarNormalization::KOne;
    t.rows.push_back({n, lattice.h(), PiRational(padic::lattice_covolume(q, n, k1)),
                      PiRational(padic::steinberg_formal_dim(q, k1)), PiRational(vn_st),
                      PiRational(padic::depth_zero_formal_dim(q, k1)), PiRational(vn_cusp)});
  }
  return t;
}

/// Formal degrees of discrete series of GL(2,Q_p), Steinberg normalized to 1.
inline Table jl(std::int64_t p, std::int64_t jmax) {
  Table t{"formal degrees over Q_" + std::to_string(p), {"class", "j", "formal_dim"}, {}};
  t.rows.push_back({std::string("special"), std::string("-"), padic::jl_formal_dim(p, padic::JLClass::special())});
  for (std::int64_t j = 1; j <= jmax; ++j)
    t.rows.push_back({std::string("unramified"), j, padic::jl_formal_dim(p, padic::JLClass::unramified(j))});
  for (std::int64_t j = 2; j <= jmax; j += 2)
    t.rows.push_back({std::string("ramified"), j, padic::jl_formal_dim(p, padic::JLClass::ramified(j))});
  return t;
}

inline const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names{"hecke:<qmax>", "free-congruence", "vn-free:<m>", "subfactor:<m>",
                                              "matrix",       "padic:<q>:<nmax>", "jl:<p>:<jmax>"};
  return names;
}

inline Table by_name(std::string_view name) {
  const auto parts = detail::split(name, ':');
  const auto& head = parts.front();
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1)
      fail(ErrorKind::UnknownTable, "table '" + std::string(name) + "' expects " + std::to_string(n) + " parameter(s)");
  };
  if (head == "hecke") {
    arity(1);
    return hecke(detail::to_int(parts[1], name));
  }
  if (head == "free-congruence") {
    arity(0);
    return free_congruence();
  }
  if (head == "vn-free") {
    arity(1);
    return vn_free(detail::to_int(parts[1], name));
  }
  if (head == "subfactor") {
    arity(1);
    return subfactor(detail::to_int(parts[1], name));
  }
  if (head == "matrix") {
    arity(0);
    return matrix();
  }
  if (head == "padic") {
    arity(2);
    return padic_lattices(detail::to_int(parts[1], name), detail::to_int(parts[2], name));
  }
  if (head == "jl") {
    arity(2);
    return jl(detail::to_int(parts[1], name), detail::to_int(parts[2], name));
  }
  std::string known;
  for (const auto& n : table_names()) known += " " + n;
  fail(ErrorKind::UnknownTable, "unknown table '" + std::string(name) + "'; known:" + known);
}

}  // namespace vndim::tables

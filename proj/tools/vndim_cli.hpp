#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vndim/vndim.hpp"

namespace vndim::cli {

using format::OutputFormat;
using format::Record;
using format::Table;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Minimal-weight scan cap, overridable through VNDIM_SCAN_CAP.
inline std::int64_t scan_cap_from_env() {
  const char* raw = std::getenv("VNDIM_SCAN_CAP");
  if (raw == nullptr || *raw == '\0') return fuchsian::kDefaultScanCap;
  std::string s(raw);
  if (s.size() > 12 || s.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::Usage, "VNDIM_SCAN_CAP must be a positive integer, got '" + s + "'");
  return std::stoll(s);
}

/// Accepts "g;m1,...;h" or a catalog name such as "H3" or "Gamma0(4)".
inline fuchsian::Signature resolve_signature(const std::string& text) {
  if (text.find(';') != std::string::npos) return fuchsian::Signature::parse(text);
  return fuchsian::catalog(text);
}

inline fuchsian::GroupMode parse_mode(const std::string& s) {
  if (s == "psl") return fuchsian::GroupMode::PSL2R;
  if (s == "sl") return fuchsian::GroupMode::SL2R;
  fail(ErrorKind::Usage, "unknown mode '" + s + "' (psl|sl)");
}

/// "trivial", "sign", or an index mod q-1.
inline std::int64_t parse_nu(const ff::PrimePower& q, const std::string& s) {
  if (s == "trivial") return 0;
  if (s == "sign") return ff::sign_character(q);
  if (s.empty() || s.size() > 12 || s.find_first_not_of("-0123456789") != std::string::npos)
    fail(ErrorKind::Usage, "bad character '" + s + "' (trivial|sign|<index mod q-1>)");
  return ff::normalize_nu(q, std::stoll(s));
}

inline PiRational pr(const Rational& r) { return PiRational(r); }

/// Runs one command line; returns 0 on success, 1 on usage errors and 2 on
/// domain errors. Results go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact covolumes, formal dimensions and von Neumann dimensions", "vndim"};
  app.require_subcommand(1);

  std::string format_name = "text";
  bool ascii = false;
  std::function<void(OutputFormat, format::TextStyle)> action;

  // Flag storage shared by all verbs; only one verb runs per invocation.
  std::string sig, sig1, sig2, name, mode = "psl", rep = "steinberg", norm = "k1", cls, nu = "trivial";
  std::string a_text, b_text, r_text, s_text;
  std::int64_t m = 0, k = 0, q = 0, n = 0, p = 0, e = 1, chi = 0, length = 0, ambient_rank = 0, sub_rank = 0;

  auto verb = [&](CLI::App* group, const std::string& verb_name, const std::string& help) {
    auto* cmd = group->add_subcommand(verb_name, help);
    cmd->add_option("--format", format_name, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_flag("--ascii", ascii, "render pi as 'pi' and the product dot as '*'");
    return cmd;
  };
  auto emit = [&](auto producer) {
    return [&, producer]() {
      action = [&, producer](OutputFormat fmt, format::TextStyle style) {
        format::write(out, producer(), fmt, style);
      };
    };
  };

  // -- scalar ---------------------------------------------------------------
  auto* scalar = app.add_subcommand("scalar", "exact rational multiples of powers of pi");
  scalar->require_subcommand(1);
  {
    auto* c = verb(scalar, "mul", "exact product of two values such as 5/(4*pi) and 2*pi");
    c->add_option("--a", a_text)->required();
    c->add_option("--b", b_text)->required();
    c->callback(emit([&] {
      return Record{{"product", mul(format::parse_pi_rational(a_text), format::parse_pi_rational(b_text))}};
    }));
    c = verb(scalar, "compare", "order two values carrying the same power of pi");
    c->add_option("--a", a_text)->required();
    c->add_option("--b", b_text)->required();
    c->callback(emit([&] {
      auto ord = compare(format::parse_pi_rational(a_text), format::parse_pi_rational(b_text));
      std::string s = ord < 0 ? "less" : ord > 0 ? "greater" : "equal";
      return Record{{"ordering", s}};
    }));
  }

  // -- fuchsian ---------------------------------------------------------------
  auto* fuchs = app.add_subcommand("fuchsian", "Fuchsian groups and discrete series of PSL(2,R)");
  fuchs->require_subcommand(1);
  {
    auto add_sig = [&](CLI::App* c) { c->add_option("--sig", sig, "g;m1,...;h or a catalog name")->required(); };
    auto add_mode = [&](CLI::App* c) { c->add_option("--mode", mode, "psl|sl")->check(CLI::IsMember({"psl", "sl"})); };

    auto* c = verb(fuchs, "covolume", "Gauss-Bonnet covolume");
    add_sig(c);
    c->callback(emit([&] { return Record{{"covolume", fuchsian::covolume(resolve_signature(sig))}}; }));

    c = verb(fuchs, "cuspdim", "dimension of weight-k cusp forms");
    add_sig(c);
    c->add_option("--k", k, "even weight")->required();
    c->callback(emit([&] { return Record{{"dim", fuchsian::cusp_form_dim(resolve_signature(sig), k)}}; }));

    c = verb(fuchs, "mult", "multiplicity of D_m in L^2(Gamma\\G)");
    add_sig(c);
    c->add_option("--m", m)->required();
    add_mode(c);
    c->callback(emit([&] {
      return Record{
          {"multiplicity", fuchsian::discrete_series_multiplicity(resolve_signature(sig), m, parse_mode(mode))}};
    }));

    c = verb(fuchs, "formaldim", "formal dimension m/(4 pi) of D_m");
    c->add_option("--m", m)->required();
    add_mode(c);
    c->callback(emit([&] { return Record{{"formal_dim", fuchsian::formal_dimension_psl(m, parse_mode(mode))}}; }));

    c = verb(fuchs, "vndim", "von Neumann dimension of D_m over R Gamma");
    add_sig(c);
    c->add_option("--m", m)->required();
    add_mode(c);
    c->callback(emit([&] {
      return Record{{"vn_dim", pr(fuchsian::vn_dimension(resolve_signature(sig), m, parse_mode(mode)))}};
    }));

    c = verb(fuchs, "minweight", "smallest m with D_m occurring in L^2(Gamma\\G)");
    add_sig(c);
    add_mode(c);
    c->callback(emit([&] {
      return Record{{"m", fuchsian::minimal_discrete_series_weight(resolve_signature(sig), parse_mode(mode),
                                                                   scan_cap_from_env())}};
    }));

    c = verb(fuchs, "twolattice", "dimension of R Gamma_2 acting on D_m inside L^2(Gamma_1\\G)");
    c->add_option("--sig1", sig1)->required();
    c->add_option("--sig2", sig2)->required();
    c->add_option("--m", m)->required();
    c->callback(emit([&] {
      return Record{{"vn_dim", pr(fuchsian::two_lattice_vn_dimension(resolve_signature(sig1), resolve_signature(sig2),
                                                                       m, scan_cap_from_env()))}};
    }));

    c = verb(fuchs, "catalog", "signature of a named lattice");
    c->add_option("--name", name)->required();
    c->callback(emit([&] {
      auto s = fuchsian::catalog(name);
      return Record{{"signature", s.str()}, {"covolume", fuchsian::covolume(s)}};
    }));
  }

  // -- factor ---------------------------------------------------------------
  auto* fac = app.add_subcommand("factor", "coupling constants and indices of finite factors");
  fac->require_subcommand(1);
  {
    auto* c = verb(fac, "coupling", "dim over M_n(C)(x)1 of C^n(x)C^k");
    c->add_option("--n", n)->required();
    c->add_option("--k", k)->required();
    c->callback(emit([&] { return Record{{"coupling", pr(factor::matrix_coupling(n, k))}}; }));

    c = verb(fac, "jones", "index [M:N] = dim N / dim M");
    c->add_option("--sub", a_text, "coupling constant of the subfactor")->required();
    c->add_option("--ambient", b_text, "coupling constant of the ambient factor")->required();
    c->callback(emit([&] {
      return Record{{"index", pr(factor::jones_index(Rational::parse(a_text), Rational::parse(b_text)))}};
    }));

    c = verb(fac, "freeindex", "Nielsen-Schreier index of F_sub in F_ambient");
    c->add_option("--ambient-rank", ambient_rank)->required();
    c->add_option("--sub-rank", sub_rank)->required();
    c->callback(emit([&] { return Record{{"index", factor::free_group_index(ambient_rank, sub_rank)}}; }));
  }

  // -- ff -------------------------------------------------------------------
  auto* fin = app.add_subcommand("ff", "finite fields, GL(2,F_q) and characters of F_{q^2}^x");
  fin->require_subcommand(1);
  {
    auto add_q = [&](CLI::App* c) { c->add_option("--q", q, "odd prime power")->required(); };

    auto* c = verb(fin, "orders", "orders of GL(2,F_q) and its Borel subgroup");
    add_q(c);
    c->callback(emit([&] {
      auto o = ff::group_orders(ff::PrimePower(q));
      return Record{{"gl2_order", o.gl2_order}, {"borel_order", o.borel_order}, {"borel_index", o.borel_index}};
    }));

    c = verb(fin, "enumerate", "count GL(2,F_q) and its Borel subgroup exhaustively (q <= 9)");
    add_q(c);
    c->callback(emit([&] {
      auto o = ff::enumerate_gl2(ff::PrimePower(q));
      return Record{{"counted_order", o.counted_order}, {"counted_borel", o.counted_borel}};
    }));

    c = verb(fin, "regular", "is theta_a regular");
    add_q(c);
    c->add_option("--chi", chi, "character index a mod q^2-1")->required();
    c->callback(emit([&] {
      ff::PrimePower pq(q);
      return Record{{"regular", ff::is_regular(pq, ff::CharacterIndex(pq, chi))}};
    }));

    c = verb(fin, "countregular", "regular characters restricting to nu (closed form)");
    add_q(c);
    c->add_option("--nu", nu, "trivial|sign|index");
    c->callback(emit([&] {
      ff::PrimePower pq(q);
      return Record{{"count", ff::count_regular_characters(pq, parse_nu(pq, nu))}};
    }));

    c = verb(fin, "bruteregular", "regular characters restricting to nu (enumeration, q <= 9)");
    add_q(c);
    c->add_option("--nu", nu, "trivial|sign|index");
    c->callback(emit([&] {
      ff::PrimePower pq(q);
      return Record{{"count", ff::brute_force_regular_characters(pq, parse_nu(pq, nu))}};
    }));

    c = verb(fin, "normtrace", "norm/trace surjectivity and Hilbert 90 by enumeration (q <= 9)");
    add_q(c);
    c->callback(emit([&] {
      auto f = ff::norm_trace_facts(ff::PrimePower(q));
      return Record{{"norm_surjective", f.norm_surjective},
                    {"trace_surjective", f.trace_surjective},
                    {"norm_kernel_size", f.norm_kernel_size},
                    {"hilbert90_image_size", f.hilbert90_image_size}};
    }));

    c = verb(fin, "repdims", "dimensions of principal series, cuspidal and Steinberg representations");
    add_q(c);
    c->callback(emit([&] {
      auto d = ff::finite_rep_dims(ff::PrimePower(q));
      return Record{{"principal_series_dim", d.principal_series_dim},
                    {"cuspidal_dim", d.cuspidal_dim},
                    {"steinberg_dim", d.steinberg_dim}};
    }));
  }

  // -- padic ----------------------------------------------------------------
  auto* pad = app.add_subcommand("padic", "p-adic valuations, Haar measures and lattices in PGL(2,F)");
  pad->require_subcommand(1);
  {
    auto add_q = [&](CLI::App* c) { c->add_option("--q", q, "residue field order")->required(); };
    auto add_norm = [&](CLI::App* c) {
      c->add_option("--norm", norm, "iwahori1|k1|kq1|khalf")->check(CLI::IsMember({"iwahori1", "k1", "kq1", "khalf"}));
    };

    auto* c = verb(pad, "valuation", "p-adic valuation and absolute value");
    c->add_option("--r", r_text)->required();
    c->add_option("--p", p)->required();
    c->callback(emit([&] {
      auto r = Rational::parse(r_text);
      return Record{{"valuation", padic::padic_valuation(r, p).str()}, {"abs", pr(padic::padic_abs(r, p))}};
    }));

    c = verb(pad, "ultrametric", "check |r+s|_p <= max(|r|_p, |s|_p)");
    c->add_option("--r", r_text)->required();
    c->add_option("--s", s_text)->required();
    c->add_option("--p", p)->required();
    c->callback(emit([&] {
      return Record{{"holds", padic::ultrametric_check(Rational::parse(r_text), Rational::parse(s_text), p)}};
    }));

    c = verb(pad, "level", "character level and trace ideal in a quadratic extension");
    c->add_option("--n", n, "level")->required();
    c->add_option("--e", e, "ramification index 1|2")->required();
    c->callback(emit([&] {
      auto l = padic::extension_level_arithmetic(n, e);
      return Record{{"composed_level", l.composed_level}, {"trace_ideal_exponent", l.trace_ideal_exponent}};
    }));

    c = verb(pad, "quadext", "number of quadratic extensions of Q_p");
    c->add_option("--p", p)->required();
    c->callback(emit([&] { return Record{{"count", padic::quadratic_extension_count(p)}}; }));

    c = verb(pad, "weyl", "reduced words of the affine Weyl group up to length L");
    c->add_option("--L", length)->required()->check(CLI::NonNegativeNumber);
    c->callback(emit([&] {
      Table t{"reduced words", {"length", "word"}, {}};
      for (const auto& w : padic::weyl_enumerate(static_cast<std::size_t>(length)))
        t.rows.push_back({static_cast<std::int64_t>(w.length()), w.str()});
      return t;
    }));

    c = verb(pad, "weylsum", "2 sum_{l(g) <= L} q^{-l(g)} and its limit");
    add_q(c);
    c->add_option("--L", length)->required()->check(CLI::NonNegativeNumber);
    c->callback(emit([&] {
      ff::PrimePower pq(q);
      return Record{{"partial", pr(padic::weyl_partial_sum(pq, static_cast<std::size_t>(length)))},
                    {"closed_form", pr(padic::weyl_closed_form(pq))}};
    }));

    c = verb(pad, "haar", "volumes of I.Z/Z and K.Z/Z");
    add_q(c);
    add_norm(c);
    c->callback(emit([&] {
      auto v = padic::haar_volumes(ff::PrimePower(q), padic::parse_normalization(norm));
      return Record{{"vol_IZ", pr(v.vol_IZ)}, {"vol_KZ", pr(v.vol_KZ)}};
    }));

    c = verb(pad, "formaldim", "formal dimension of the Steinberg or depth-zero cuspidal representation");
    add_q(c);
    add_norm(c);
    c->add_option("--rep", rep, "steinberg|cuspidal")->check(CLI::IsMember({"steinberg", "cuspidal"}));
    c->callback(emit([&] {
      return Record{{"formal_dim", pr(padic::formal_dim(ff::PrimePower(q), padic::parse_rep(rep),
                                                        padic::parse_normalization(norm)))}};
    }));

    c = verb(pad, "lattice", "Ihara lattice data for a free lattice of rank n");
    add_q(c);
    c->add_option("--n", n)->required();
    c->callback(emit([&] {
      auto l = padic::ihara_lattice(ff::PrimePower(q), n);
      return Record{{"q", l.q().q()}, {"n", l.rank()}, {"h", l.h()}};
    }));

    c = verb(pad, "covolume", "vol(Gamma\\PGL(2,F))");
    add_q(c);
    c->add_option("--n", n)->required();
    add_norm(c);
    c->callback(emit([&] {
      return Record{
          {"covolume", pr(padic::lattice_covolume(ff::PrimePower(q), n, padic::parse_normalization(norm)))}};
    }));

    c = verb(pad, "vndim", "von Neumann dimension over R Gamma");
    add_q(c);
    c->add_option("--n", n)->required();
    c->add_option("--rep", rep, "steinberg|cuspidal")->check(CLI::IsMember({"steinberg", "cuspidal"}));
    add_norm(c);
    c->callback(emit([&] {
      return Record{{"vn_dim", pr(padic::vn_dimension_padic(ff::PrimePower(q), n, padic::parse_rep(rep),
                                                              padic::parse_normalization(norm)))}};
    }));

    c = verb(pad, "jl", "formal degree of a discrete series of GL(2,Q_p), Steinberg = 1");
    c->add_option("--p", p)->required();
    c->add_option("--class", cls, "special|unram:j=<n>|ram:j=<n>")->required();
    c->callback(emit([&] { return Record{{"formal_dim", padic::jl_formal_dim(p, padic::JLClass::parse(cls))}}; }));
  }

  // -- table ----------------------------------------------------------------
  {
    std::string known;
    for (const auto& t : tables::table_names()) known += " " + t;
    auto* c = app.add_subcommand("table", "regenerate a reference table; one of:" + known);
    c->add_option("name", name, "table name")->required();
    c->add_option("--format", format_name, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_flag("--ascii", ascii, "render pi as 'pi' and the product dot as '*'");
    c->callback(emit([&] { return tables::by_name(name); }));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    std::string verbs;
    for (auto* group : app.get_subcommands({})) {
      verbs += "  " + group->get_name();
      auto subs = group->get_subcommands({});
      if (!subs.empty()) {
        verbs += " {";
        for (std::size_t i = 0; i < subs.size(); ++i) verbs += (i ? "," : "") + subs[i]->get_name();
        verbs += "}";
      }
      verbs += "\n";
    }
    err << "valid verbs:\n" << verbs;
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage ? kExitUsage : kExitDomain;
  }

  try {
    const auto fmt = format::parse_format(format_name);
    format::TextStyle style{.ascii = ascii};
    if (!action) {
      err << "usage error: no verb given\n";
      return kExitUsage;
    }
    action(fmt, style);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage ? kExitUsage : kExitDomain;
  }
  return kExitOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"vndim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace vndim::cli

// rr5: command-line front end for the Rogers-Ramanujan continued fraction engine.
//
// Exit codes: 0 success, 1 verification mismatch, 2 bad input, 3 precision exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rr5/cache.hpp"
#include "rr5/classdata.hpp"
#include "rr5/curve5.hpp"
#include "rr5/errors.hpp"
#include "rr5/golden.hpp"
#include "rr5/hp/modular.hpp"
#include "rr5/icosa.hpp"
#include "rr5/pipeline.hpp"
#include "rr5/tauexpr.hpp"

using nlohmann::json;
using namespace rr5;

namespace {

constexpr int kOk = 0, kMismatch = 1, kBadInput = 2, kPrecision = 3;

struct Options {
  long d = 0;
  std::optional<long> prec;
  long max_prec = 1L << 20;
  int digits = 30;
  std::optional<std::string> cache_dir;
  std::string range;
  bool json = false;
  bool symbolic = false, numeric = false;
  std::string tau;
  std::string golden_file;
};

struct Output {
  std::vector<std::pair<std::string, std::string>> data;  // printed in order
  json data_json = json::object();
  Report report;

  void put(const std::string& key, const std::string& value) {
    data.emplace_back(key, value);
    data_json[key] = value;
  }
};

int emit(const std::string& command, const Output& out, const Options& opt) {
  const bool ok = out.report.ok();
  if (opt.json) {
    json checks = json::array();
    for (const auto& c : out.report.checks)
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    json j = {{"command", command}, {"ok", ok}, {"data", out.data_json}, {"checks", checks}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : out.data) std::cout << k << " = " << v << "\n";
    std::cout << out.report.to_text();
    std::cout << (ok ? "OK" : "FAILED") << "\n";
  }
  return ok ? kOk : kMismatch;
}

cache::Cache open_cache(const Options& opt) {
  return cache::Cache(cache::Cache::resolve_dir(opt.cache_dir));
}

std::vector<long> acceptance_set() { return golden::table_discriminants(0); }

// Tabulated d inside --range, or all of them.
std::vector<long> selected(const Options& opt, const std::vector<long>& all) {
  if (opt.range.empty()) return all;
  auto [a, b] = parse_range(opt.range);
  std::vector<long> out;
  for (long d : all)
    if (d >= a && d <= b) out.push_back(d);
  if (out.empty()) throw DomainError("no tabulated discriminant in range " + opt.range);
  return out;
}

// The library policy for d, clamped to the user's ceiling.
hp::PrecisionPolicy clamp(hp::PrecisionPolicy p, const Options& opt) {
  if (opt.max_prec < 128 || (opt.prec && *opt.prec < 128))
    throw DomainError("precision must be at least 128 bits");
  if (opt.prec && *opt.prec > opt.max_prec) throw DomainError("--prec exceeds --max-prec");
  if (opt.prec) p.initial_bits = *opt.prec;
  p.max_bits = opt.max_prec;
  p.initial_bits = std::min(p.initial_bits, p.max_bits);
  return p;
}

std::string disc_text(const std::vector<std::pair<long, unsigned>>& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << " * ";
    os << f[i].first;
    if (f[i].second != 1) os << "^" << f[i].second;
  }
  return os.str();
}

void pipeline_checks(const pipeline::PipelineResult& r, Report& rep, const std::string& prefix) {
  rep.add(prefix + "Q divides F_d", r.F_check);
  rep.add(prefix + "p divides G_d(x^5)", r.G_check);
  rep.add(prefix + "Q(x^5) = p q", r.div_check);
  rep.add(prefix + "R invariant under (-11z+4)/(z+11)", r.R_sym_check);
  rep.add(prefix + "p invariant under T", r.T_check);
  rep.add(prefix + "reciprocal symmetry of p and q", r.sym_check);
  rep.add(prefix + "j5 and j55 are roots of H", r.j_check);
  rep.add(prefix + "z = s^5 + 5s^3 + 5s", r.zs_check);
  rep.add(prefix + "disc(p) exponent law", r.disc_p.exponent_law);
  rep.add(prefix + "disc(p) has only primes <= d", r.disc_p.small_primes);
  if (r.irreducible) rep.add(prefix + "p irreducible (root subsets)", *r.irreducible);
}

int cmd_pipeline(const Options& opt) {
  auto r = pipeline::run_pipeline(opt.d, clamp(pipeline::policy_for(opt.d), opt));
  open_cache(opt).store(r);
  Output out;
  out.put("d", std::to_string(r.d));
  out.put("f", std::to_string(r.f));
  out.put("h", std::to_string(r.h));
  out.put("v", std::to_string(r.v) + (r.v_relaxed ? " (relaxed)" : ""));
  out.put("H", exact::to_string(r.H));
  out.put("R", exact::to_string(r.R, "z"));
  out.put("S", exact::to_string(r.S, "t"));
  out.put("Q", exact::to_string(r.Q));
  out.put("p", exact::to_string(r.p));
  out.put("q", exact::to_string(r.q));
  out.put("disc(p)", r.disc_p.to_string());
  out.put("precision", std::to_string(r.precision_used) + " bits");
  pipeline_checks(r, out.report, "");
  return emit("pipeline", out, opt);
}

std::map<long, golden::TableRow> golden_rows(const Options& opt) {
  std::map<long, golden::TableRow> rows;
  for (const auto& row : golden::table_rows()) rows[row.d] = row;
  if (opt.golden_file.empty()) return rows;
  std::ifstream in(opt.golden_file);
  if (!in) throw DomainError("cannot read " + opt.golden_file);
  json j;
  try {
    in >> j;
    for (const auto& e : j.at("rows")) {
      golden::TableRow row;
      row.d = e.at("d").get<long>();
      row.table = row.d < 100 ? 1 : 2;
      row.p = e.at("p").get<std::string>();
      for (const auto& f : e.at("disc")) row.disc.emplace_back(f.at(0).get<long>(), f.at(1).get<unsigned>());
      rows[row.d] = row;
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed golden file: ") + e.what());
  }
  return rows;
}

int cmd_verify_tables(const Options& opt) {
  auto rows = golden_rows(opt);
  std::vector<long> all;
  for (const auto& [d, row] : rows) all.push_back(d);
  auto ds = selected(opt, all);
  auto cache = open_cache(opt);
  Output out;
  for (long d : ds) {
    const auto& row = rows.at(d);
    auto r = pipeline::run_pipeline(d);
    cache.store(r);
    exact::QPoly expected = golden::poly(row.p);
    bool p_ok = r.p == expected;
    std::vector<std::pair<long, unsigned>> got;
    bool small = r.disc_p.cofactor == 1 && r.disc_p.sign == 1;
    for (const auto& [p, e] : r.disc_p.factors) {
      if (!p.fits_slong_p()) small = false;
      else got.emplace_back(p.get_si(), e);
    }
    bool disc_ok = small && got == row.disc;
    std::string detail;
    if (!p_ok)
      detail += "\n  expected p = " + exact::to_string(expected) + "\n  computed p = " +
                exact::to_string(r.p);
    if (!disc_ok)
      detail += "\n  expected disc = " + disc_text(row.disc) + "\n  computed disc = " +
                r.disc_p.to_string();
    out.report.add("d = " + std::to_string(d) + " p " + (p_ok ? "matches" : "differs") +
                       ", disc " + (disc_ok ? "matches" : "differs"),
                   p_ok && disc_ok, detail);
  }
  out.put("discriminants", std::to_string(ds.size()));
  return emit("verify-tables", out, opt);
}

int cmd_identities(const Options& opt) {
  Output out;
  auto cache = open_cache(opt);
  auto ds = selected(opt, acceptance_set());
  for (long d : ds) {
    auto r = cache.fetch(d);
    std::string tag = "d = " + std::to_string(d) + ": ";
    out.report.add(tag + "(z+11)^2h R((-11z+4)/(z+11)) = 5^3h R(z)", pipeline::verify_R_symmetry(r.R, r.h));
    out.report.add(tag + "p invariant under T up to ((5+sqrt5)/2)^2h",
                   pipeline::verify_T_invariance(r.p, r.h));
  }
  out.report.append(curve5::weierstrass_identities());
  out.report.append(curve5::tau_and_isogeny_checks());
  out.report.append(curve5::det_D_identity());
  out.report.append(icosa::verify_f5_invariance());
  {
    using icosa::Map;
    Map s2 = icosa::S() * icosa::S(), s3 = s2 * icosa::S();
    Map word = icosa::T() * s2 * icosa::T() * s3 * icosa::T() * s2;
    out.report.add("U = T S^2 T S^3 T S^2", word.same_map(icosa::U()));
  }
  for (int k = 0; k < 5; ++k)
    out.report.add("psi5(X(zeta^" + std::to_string(k) + " u), b(u)) = 0",
                   curve5::torsion_x_identity(k));
  out.put("discriminants", std::to_string(ds.size()));
  return emit("identities", out, opt);
}

int cmd_g60(const Options& opt) {
  Output out;
  auto g = icosa::generate_g60();
  out.put("elements", std::to_string(g.elements.size()));
  out.report.append(icosa::group_structure(g));
  std::vector<long> ds = opt.d ? std::vector<long>{opt.d} : std::vector<long>{11, 16, 19};
  auto cache = open_cache(opt);
  for (long d : ds) {
    auto r = cache.fetch(d);
    auto G = pipeline::build_F_G(r.H, r.h).second;
    auto orbit = icosa::orbit_and_stabilizer(r.p, g, G);
    Report sub;
    sub.append(orbit.report);
    sub.append(icosa::locate_r_minus_inverse(orbit, d));
    sub.append(icosa::verify_T_fixed_point(r.p));
    for (auto c : sub.checks) out.report.add("d = " + std::to_string(d) + ": " + c.name, c.ok, c.detail);
  }
  return emit("g60", out, opt);
}

int cmd_curve(const Options& opt) {
  Output out;
  const bool both = !opt.symbolic && !opt.numeric;
  if (opt.symbolic || both) {
    for (int k = 0; k < 5; ++k)
      out.report.add("psi5(X(zeta^" + std::to_string(k) + " u), b(u)) = 0",
                     curve5::torsion_x_identity(k));
    out.report.add("perturbing A1 breaks the identity", !curve5::torsion_x_identity(0, true));
    out.report.append(curve5::det_D_identity());
    out.report.append(curve5::tau_and_isogeny_checks());
    out.report.append(curve5::weierstrass_identities());
  }
  if (opt.numeric || both) {
    const hp::prec_t prec = opt.prec.value_or(512);
    out.report.append(curve5::numeric_division_points(
        hp::BigComplex(hp::BigFloat(exact::Rational(1, 2), 256)), 256));
    std::vector<hp::BigComplex> taus = {parse_tau("2i", prec + 32), parse_tau("1/2+3/2i", prec + 32)};
    out.report.append(curve5::verify_r_transformations(taus, prec / 2 < 256 ? 256 : prec / 2));
    auto cache = open_cache(opt);
    auto ds = opt.d ? std::vector<long>{opt.d} : selected(opt, acceptance_set());
    for (long d : ds) {
      auto r = cache.fetch(d);
      auto c5 = curve5::verify_C5_solution(d, r.p, prec);
      out.put("j(" + std::to_string(d) + ")", std::to_string(c5.j));
      for (auto c : c5.report.checks)
        out.report.add("d = " + std::to_string(d) + ": " + c.name, c.ok, c.detail);
    }
  }
  return emit("curve", out, opt);
}

int cmd_examples(const Options& opt) {
  Output out;
  auto cache = open_cache(opt);
  auto r19 = cache.fetch(19), r36 = cache.fetch(36);
  const hp::prec_t prec = opt.prec.value_or(320);
  out.put("alpha", icosa::example1_alpha(prec).to_string(opt.digits));
  out.put("Ramanujan radical for r(3i)", icosa::ramanujan_r3i(0, prec).to_string(opt.digits));
  out.put("r((4+3i)/5)", icosa::r_4_3i_over_5(prec).to_string(opt.digits));
  out.report.append(icosa::verify_radical_examples(r19, r36, prec));
  out.report.append(icosa::verify_d4_corpus());
  return emit("examples", out, opt);
}

int cmd_eval_r(const Options& opt) {
  if (opt.digits < 1 || opt.digits > 100000) throw DomainError("--digits out of range");
  const hp::prec_t prec =
      opt.prec.value_or(std::max<long>(288, static_cast<long>(opt.digits * 3.33) + 64));
  hp::BigComplex tau = parse_tau(opt.tau, prec + 32);
  if (tau.im().sign() <= 0) throw DomainError("tau must have positive imaginary part");
  Output out;
  out.put("tau", tau.to_string(opt.digits));
  out.put("r(tau)", hp::rr_r(tau, prec + 32).with_prec(prec).to_string(opt.digits));
  out.report.append(curve5::verify_r_transformations({tau}, prec));
  return emit("eval-r", out, opt);
}

int cmd_classpoly(const Options& opt) {
  auto cd = classdata::reduced_forms(opt.d);
  auto H = classdata::class_poly(cd, clamp(classdata::default_policy(cd), opt));
  Output out;
  out.put("d", std::to_string(cd.d));
  out.put("h", std::to_string(cd.h));
  std::string forms;
  for (const auto& f : cd.forms) forms += (forms.empty() ? "" : " ") + classdata::to_string(f);
  out.put("forms", forms);
  out.put("H", exact::to_string(H));
  out.report.add("degree equals the class number", H.degree() == cd.h);
  if (auto it = golden::class_polys().find(opt.d); it != golden::class_polys().end())
    out.report.add("matches the reference class polynomial", H == golden::poly(it->second));
  return emit("classpoly", out, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Abelian values of the Rogers-Ramanujan continued fraction: class polynomials, the\n"
      "p_d / q_d tower, icosahedral symmetry and 5-torsion on the Tate normal form.\n"
      "Exit codes: 0 ok, 1 mismatch, 2 bad input, 3 precision exhausted.\n"
      "Cache: <dir>/dNNNN.json; RR5_CACHE_DIR overrides --cache."};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cache", opt.cache_dir, "cache directory (default .rr5-cache)");
    sub->add_flag("--json", opt.json, "machine-readable report");
  };
  auto add_prec = [&](CLI::App* sub) {
    sub->add_option("--prec", opt.prec, "working precision in bits");
    sub->add_option("--max-prec", opt.max_prec, "precision ceiling in bits");
  };

  auto* pipe = app.add_subcommand("pipeline", "run the construction for one discriminant -d");
  pipe->add_option("-d", opt.d, "d > 4 with (-d/5) = +1")->required();
  add_prec(pipe);
  add_common(pipe);

  auto* tables = app.add_subcommand("verify-tables", "recompute the tabulated p_d and compare");
  tables->add_option("--range", opt.range, "restrict to a..b");
  tables->add_option("--golden", opt.golden_file, "JSON file overriding reference rows");
  add_common(tables);

  auto* ident = app.add_subcommand("identities", "exact identity suite");
  ident->add_option("--range", opt.range, "restrict the per-d checks to a..b");
  add_common(ident);

  auto* g60 = app.add_subcommand("g60", "icosahedral group, orbits and stabilizers");
  g60->add_option("-d", opt.d, "a single discriminant (default 11, 16, 19)");
  add_common(g60);

  auto* curve = app.add_subcommand("curve", "5-torsion on E5(b) and the quintic curve");
  curve->add_flag("--symbolic", opt.symbolic, "only the exact checks");
  curve->add_flag("--numeric", opt.numeric, "only the numeric checks");
  curve->add_option("-d", opt.d, "a single discriminant for the numeric checks");
  curve->add_option("--range", opt.range, "restrict the numeric checks to a..b");
  add_prec(curve);
  add_common(curve);

  auto* ex = app.add_subcommand("examples", "worked radical examples and the d = 4 corpus");
  ex->add_option("--digits", opt.digits, "digits printed");
  add_prec(ex);
  add_common(ex);

  auto* ev = app.add_subcommand(
      "eval-r",
      "r(tau) and identity residuals; tau as a+bi, ni, or (p+q sqrt -d)/r");
  ev->add_option("--tau", opt.tau, "point in the upper half plane")->required();
  ev->add_option("--digits", opt.digits, "digits printed");
  add_prec(ev);
  add_common(ev);

  auto* cp = app.add_subcommand("classpoly", "class polynomial H_{-d}");
  cp->add_option("-d", opt.d, "discriminant -d")->required();
  add_prec(cp);
  add_common(cp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*pipe) return cmd_pipeline(opt);
    if (*tables) return cmd_verify_tables(opt);
    if (*ident) return cmd_identities(opt);
    if (*g60) return cmd_g60(opt);
    if (*curve) return cmd_curve(opt);
    if (*ex) return cmd_examples(opt);
    if (*ev) return cmd_eval_r(opt);
    if (*cp) return cmd_classpoly(opt);
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kPrecision;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kPrecision;
  } catch (const DomainError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kBadInput;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure in " << e.stage() << ": " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kBadInput;
}

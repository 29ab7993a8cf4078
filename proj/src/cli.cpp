#include "metatheta/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "metatheta/suites.hpp"

namespace metatheta::cli {

namespace {

struct Options {
  int n = 0, r = 0, a = 1, m = 1, n1 = 0, n2 = 0;
  long long p = 0, t = 0;
  long long v1 = 0, u1 = 1, v2 = 0, u2 = 1;
  bool pretty = false, json = false, with_gauss = false;
  std::string suite = "all";
  std::string first, second;  // positionals
  std::string values, inner;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

void emit_suite_table(std::ostream& out, const SuiteResult& r) {
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.id.size());
  for (const auto& c : r.checks)
    out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2) << c.id << c.anchor
        << "\n";
  out << r.suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " passed\n";
}

int require_positive(int v, const char* name) {
  if (v < 1) throw InputError(std::string("--") + name + " must be positive");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for theta representations of metaplectic covers", "metatheta"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Indented JSON; suites print a table");
  app.add_flag("--json", o.json, "Machine-readable JSON (default)");

  std::function<int()> action;
  auto sub = [&](const std::string& name, const std::string& desc, std::function<int()> fn) {
    auto* s = app.add_subcommand(name, desc);
    s->callback([&action, fn] { action = fn; });
    return s;
  };
  auto n_opt = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--n", o.n, "Rank or residue order");
    if (required) opt->required();
  };

  auto* collapse = sub("collapse", "Sp collapse of a partition of an even number", [&] {
    const Partition p = Partition::parse(o.first);
    emit(out, Json{{"input", to_json(p)}, {"collapse", to_json(sp_collapse(p))}}, o.pretty);
    return kOk;
  });
  collapse->add_option("partition", o.first, "Parts, e.g. 7,1")->required();

  auto* dominance = sub("dominance", "Dominance relation between two partitions of equal total", [&] {
    const Partition lhs = Partition::parse(o.first), rhs = Partition::parse(o.second);
    emit(out, Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}, {"relation", to_string(dominance_compare(lhs, rhs))}},
         o.pretty);
    return kOk;
  });
  dominance->add_option("lhs", o.first)->required();
  dominance->add_option("rhs", o.second)->required();

  auto* orbit = sub("orbit", "Conjectured orbit and descent data for (n, r)", [&] {
    emit(out, to_json(descent_summary(require_positive(o.n, "n"), o.r)), o.pretty);
    return kOk;
  });
  n_opt(orbit);
  orbit->add_option("--r", o.r, "Odd cover degree")->required();

  auto* gk = sub("gk-dim", "Half the orbit dimension of a symplectic partition", [&] {
    const Partition p = Partition::parse(o.first);
    if (p.total() % 2) throw InputError("partition total must be even");
    const int n = p.total() / 2;
    emit(out, Json{{"partition", to_json(p)}, {"n", n}, {"gk_dim", to_json(gk_dimension(p, n))}}, o.pretty);
    return kOk;
  });
  gk->add_option("partition", o.first)->required();

  auto* dim = sub("dim-check", "Dimension equation n^2-n+(r-1)/2 for the conjectured orbit", [&] {
    auto rep = dimension_equation_check(require_positive(o.n, "n"), o.r);
    emit(out, to_json(rep), o.pretty);
    return rep.satisfied && rep.balanced ? kOk : kVerificationFailed;
  });
  n_opt(dim);
  dim->add_option("--r", o.r)->required();

  auto* build = sub("build", "Build a catalog element and verify it is symplectic", [&] {
    ElementParams params{o.n, o.r, o.a, parse_rational_list(o.values), {}};
    if (!o.inner.empty()) {
      const int rp = (o.r - 1) / 2;
      params.inner = build_element(o.inner, {o.n - rp, 0, 0, {}, {}}).mat;
    }
    auto e = build_element(o.first, params);
    emit(out, Json{{"name", e.name}, {"n", e.n}, {"symplectic", is_symplectic_matrix(e.n, e.mat)}, {"matrix", to_json(e.mat)}},
         o.pretty);
    return kOk;
  });
  build->add_option("name", o.first, "Element name")->required();
  n_opt(build, false);
  build->add_option("--r", o.r);
  build->add_option("--a", o.a);
  build->add_option("--values", o.values, "Comma-separated rationals");
  build->add_option("--inner", o.inner, "Catalog element placed in the middle block (embed_sp)");

  auto* identity = sub("identity", "Transport check for one conjugation step", [&] {
    auto rep = verify_integral_transport(o.first, require_positive(o.n, "n"), o.r, o.a);
    emit(out, to_json(rep), o.pretty);
    return rep.ok() ? kOk : kVerificationFailed;
  });
  identity->add_option("step", o.first, "Step id")->required();
  n_opt(identity);
  identity->add_option("--r", o.r)->required();
  identity->add_option("--a", o.a);

  auto* gauss = sub("gauss", "Gauss sum g_t in Z[zeta_{np}], tagged with q^{-1/2}", [&] {
    LocalFieldSpec spec(o.p, o.n);
    emit(out,
         Json{{"p", o.p}, {"n", o.n}, {"t", o.t}, {"generator", spec.generator()}, {"omega", spec.omega()},
              {"value", to_json(gauss_sum(o.t, spec))}},
         o.pretty);
    return kOk;
  });
  gauss->add_option("--p", o.p)->required();
  n_opt(gauss);
  gauss->add_option("--t", o.t)->required();

  auto* unit = sub("unit-integral", "Integral over the units of Z/p^m", [&] {
    LocalFieldSpec spec(o.p, o.n);
    emit(out, Json{{"p", o.p}, {"n", o.n}, {"m", o.m}, {"t", o.t}, {"value", to_json(unit_integral(require_positive(o.m, "m"), o.t, spec))}},
         o.pretty);
    return kOk;
  });
  unit->add_option("--p", o.p)->required();
  n_opt(unit);
  unit->add_option("--m", o.m)->required();
  unit->add_option("--t", o.t)->required();

  auto* hilbert = sub("hilbert", "Tame Hilbert symbol of p^v1 u1 and p^v2 u2, as an exponent of omega", [&] {
    LocalFieldSpec spec(o.p, o.n);
    emit(out,
         Json{{"p", o.p}, {"n", o.n}, {"a", Json{{"v", o.v1}, {"u", o.u1}}}, {"b", Json{{"v", o.v2}, {"u", o.u2}}},
              {"symbol", tame_hilbert(o.v1, o.u1, o.v2, o.u2, spec)}},
         o.pretty);
    return kOk;
  });
  hilbert->add_option("--p", o.p)->required();
  n_opt(hilbert);
  hilbert->add_option("--v1", o.v1);
  hilbert->add_option("--u1", o.u1);
  hilbert->add_option("--v2", o.v2);
  hilbert->add_option("--u2", o.u2);

  auto* beta = sub("beta", "Descent exponent beta and its cross-check", [&] {
    const Rational b = beta_exponent(o.n, o.r, o.a);
    const bool ok = beta_crosscheck(o.n, o.r, o.a);
    emit(out, Json{{"beta", to_json(b)}, {"crosscheck", ok}}, o.pretty);
    return ok ? kOk : kVerificationFailed;
  });
  n_opt(beta);
  beta->add_option("--r", o.r)->required();
  beta->add_option("--a", o.a)->required();

  auto* pipeline = sub("pipeline", "q-exponent of the W(t_1) term from its named factors", [&] {
    auto rep = exponent_pipeline_report(o.n);
    emit(out, to_json(rep), o.pretty);
    return rep.ok() ? kOk : kVerificationFailed;
  });
  n_opt(pipeline);

  auto* formula = sub("theorem2", "Unramified Whittaker formula over the token oracle", [&] {
    FormulaOptions fo{o.with_gauss, o.p};
    emit(out, to_json(whittaker_formula(o.n, o.n1, o.n2, token_oracle(), fo)), o.pretty);
    return kOk;
  });
  n_opt(formula);
  formula->add_option("--n1", o.n1);
  formula->add_option("--n2", o.n2);
  formula->add_flag("--with-gauss-factor", o.with_gauss, "Multiply the second term by G_{n-2}");
  formula->add_option("--p", o.p, "Prime for the Gauss factor (default: smallest p = 1 mod n)");

  auto* verify = sub("verify", "Run a verification suite", [&] {
    SuiteOptions so;
    if (o.n != 0) so.n = require_positive(o.n, "n");
    auto res = run_suite(o.suite, so);
    if (o.pretty)
      emit_suite_table(out, res);
    else
      emit(out, to_json(res), false);
    return res.passed() ? kOk : kVerificationFailed;
  });
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
  n_opt(verify, false);

  auto first = std::find_if(args.begin(), args.end(), [](const std::string& s) { return s.empty() || s[0] != '-'; });
  if (first != args.end() && app.get_subcommand_no_throw(*first) == nullptr) {
    err << "error: unknown subcommand '" << *first << "'\n" << app.help();
    return kBadInput;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kBadInput;
  }

  try {
    return action ? action() : kBadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace metatheta::cli

// Acceptance criteria: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "metatheta/cli.hpp"
#include "metatheta/suites.hpp"
#include "oracles.hpp"

using namespace metatheta;

namespace {

// Time limits in seconds. All comparisons are exact.
constexpr double kOrbitLimit = 1.0;
constexpr double kCollapseLimit = 30.0;
constexpr double kBetaLimit = 1.0;
constexpr double kPipelineLimit = 1.0;
constexpr double kCharsumLimit = 60.0;
constexpr double kIdentityLimit = 10.0;
constexpr double kFormulaLimit = 1.0;
constexpr double kDeterminismLimit = 120.0;

const std::vector<std::int64_t> kGaussGolden{2, -1, -2, 3, -2, -2, 1, 1, -1, 0, 1, -3};

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

bool report(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit) {
    o.pass = false;
    if (o.note.empty()) o.note = "time limit exceeded";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", secs, limit);
  std::cout << "AC" << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << timing << "]";
  if (!o.note.empty()) std::cout << "  " << o.note;
  std::cout << std::endl;
  return o.pass;
}

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

}  // namespace

int main() {
  bool all = true;

  all &= report(1, "orbit table and dimension equation, n <= 6", kOrbitLimit, [] {
    Outcome o;
    int cases = 0;
    for (int n = 1; n <= 6; ++n)
      for (int r = n; r < 2 * n; ++r) {
        if (r % 2 == 0) continue;
        ++cases;
        const auto rep = dimension_equation_check(n, r);
        const std::string tag = "n=" + std::to_string(n) + " r=" + std::to_string(r);
        o.require(conjectured_orbit(n, r).parts() == oracle::case_list_orbit(n, r), "orbit mismatch at " + tag);
        o.require(rep.satisfied, "dimension equation fails at " + tag);
        o.require(rep.gk_dim == Rational(n * n - n) + make_rational(r - 1, 2), "gk dimension at " + tag);
      }
    o.require(cases == 12, "unexpected number of (n, r) cases");
    return o;
  });

  all &= report(2, "Sp collapse equals the brute-force maximum, totals <= 16", kCollapseLimit, [] {
    Outcome o;
    for (int total = 2; total <= 16; total += 2)
      for (const auto& p : oracle::partitions(total))
        o.require(sp_collapse(Partition(p)).parts() == oracle::brute_collapse(p), "collapse of " + Partition(p).str());
    return o;
  });

  all &= report(3, "beta formula equals the theta exponent sum, n <= 8", kBetaLimit, [] {
    Outcome o;
    for (int n = 2; n <= 8; ++n)
      for (int r = 3; r < 2 * n; r += 2)
        for (int a = 1; a <= n - (r - 1) / 2; ++a) {
          Rational sum = 0;
          const int m = (2 * n - r + 1) / 2;
          for (int i = 1; i <= a; ++i) {
            const long k = m - i + 1;
            sum += make_rational(2 * k * r - (2 * k - 1), 2L * r);
          }
          const std::string tag = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " a=" + std::to_string(a);
          o.require(beta_exponent(n, r, a) == sum, "beta mismatch at " + tag);
          o.require(beta_crosscheck(n, r, a), "crosscheck fails at " + tag);
        }
    return o;
  });

  all &= report(4, "exponent pipeline equals -(n-2)(2n-1)/(2n), odd n <= 15", kPipelineLimit, [] {
    Outcome o;
    for (int n = 3; n <= 15; n += 2) {
      const auto rep = exponent_pipeline_report(n);
      o.require(rep.ok(), "pipeline check fails at n=" + std::to_string(n));
      o.require(rep.total == make_rational(-static_cast<long>(n - 2) * (2 * n - 1), 2L * n),
                "total wrong at n=" + std::to_string(n));
    }
    o.require(exponent_pipeline(3) == make_rational(-5, 6), "n=3 is not -5/6");
    return o;
  });

  all &= report(5, "unit integrals vanish for m >= 2; m = 1 gives q^{-1/2} G_t; |g_t|^2 = p", kCharsumLimit, [] {
    Outcome o;
    for (std::int64_t p : {7, 13, 19, 31}) {
      LocalFieldSpec spec(p, 3);
      const std::string tag = "p=" + std::to_string(p);
      for (int m = 2; m <= 4; ++m)
        for (int t = 1; t <= 5; ++t) {
          if (t % 3 == 0) continue;
          o.require(unit_integral(m, t, spec).value.is_zero(), "nonzero at " + tag + " m=" + std::to_string(m));
        }
      for (int t = 0; t <= 5; ++t) {
        const auto ui = unit_integral(1, t, spec);
        const auto g = gauss_sum(t, spec);
        o.require(ui.value == g.value && ui.q_exp == -1 && g.q_exp == make_rational(-1, 2),
                  "m=1 identity fails at " + tag);
        if (t % 3 != 0) o.require(g.value * g.value.conj() == CycScalar::integer(1, p), "norm fails at " + tag);
      }
    }
    return o;
  });

  all &= report(6, "matrix identity suite", kIdentityLimit, [] {
    Outcome o;
    const auto res = run_identities_suite();
    o.require(res.passed(), "identities suite has failures");
    auto has = [&](const std::string& prefix) {
      std::size_t count = 0;
      for (const auto& c : res.checks)
        if (c.id.rfind(prefix, 0) == 0) {
          ++count;
          o.require(c.pass, c.id);
        }
      o.require(count > 0, "missing checks " + prefix);
    };
    for (const char* prefix : {"gamma-even-factorization", "gamma-odd-factorization", "transport/sp6-reflection",
                               "decomposition/n=3", "decomposition/n=4", "decomposition/n=5", "stabilizer/psi_R",
                               "heisenberg/", "root-exchange/"})
      has(prefix);
    return o;
  });

  all &= report(7, "Whittaker formula assembly for n = 3 with the token oracle", kFormulaLimit, [] {
    Outcome o;
    int code = -1;
    auto plain = nlohmann::ordered_json::parse(cli_out({"theorem2", "--n", "3", "--n1", "0", "--n2", "0"}, &code));
    o.require(code == 0, "theorem2 exit status");
    o.require(plain["text"] == "gamma^0*(T(0,0,0) + q^(-5/6)*T(0,0,1))", "text rendering");
    o.require(plain["terms"].size() == 2, "term count");
    o.require(plain["terms"][0]["tokens"] == nlohmann::ordered_json::array({"T(0,0,0)"}), "first token");
    o.require(plain["terms"][1]["q_exp"] == "-5/6", "second exponent");
    auto gauss =
        nlohmann::ordered_json::parse(cli_out({"theorem2", "--n", "3", "--n1", "0", "--n2", "0", "--with-gauss-factor"}, &code));
    o.require(code == 0, "gauss variant exit status");
    o.require(gauss["p"] == 7, "default prime");
    o.require(gauss["terms"][0] == plain["terms"][0], "first term changed");
    o.require(gauss["terms"][1]["q_exp"] == "-4/3", "gauss variant exponent");
    o.require(gauss["terms"][1]["coeff"]["modulus"] == 21, "gauss modulus");
    o.require(gauss["terms"][1]["coeff"]["coefficients"].get<std::vector<std::int64_t>>() == kGaussGolden,
              "gauss coefficient");
    return o;
  });

  all &= report(8, "repeated suite runs give byte-identical JSON", kDeterminismLimit, [] {
    Outcome o;
    for (const auto& s : suite_names()) {
      const auto a = cli_out({"verify", "--suite", s});
      const auto b = cli_out({"verify", "--suite", s});
      o.require(!a.empty() && a == b, "suite " + s + " differs between runs");
    }
    return o;
  });

  return all ? 0 : 1;
}

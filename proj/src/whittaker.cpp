#include "metatheta/whittaker.hpp"

#include <stdexcept>

#include "metatheta/identities.hpp"

namespace metatheta {

namespace {

void check_cover_args(int rank, int r) {
  if (rank < 1) throw InputError("rank must be positive");
  if (r < 3 || r % 2 == 0) throw InputError("r must be odd and >= 3");
}

}  // namespace

Cover parse_cover(const std::string& s) {
  if (s == "odd") return Cover::Odd;
  if (s == "double") return Cover::Double;
  throw InputError("cover must be 'odd' or 'double'");
}

std::string to_string(Cover c) { return c == Cover::Odd ? "odd" : "double"; }

std::vector<Rational> pole_point(int rank, int r, Cover cover) {
  check_cover_args(rank, r);
  std::vector<Rational> s;
  for (int i = 1; i <= rank; ++i) {
    if (cover == Cover::Odd)
      s.push_back(make_rational(rank - i + 1, r));
    else
      s.push_back(make_rational(2 * (rank - i) + 1, 2 * r));
  }
  return s;
}

bool pole_point_postcondition(const std::vector<Rational>& s, int r, Cover cover) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (r * (s[i] - s[i + 1]) != 1) return false;
  const int last = cover == Cover::Odd ? r : 2 * r;
  return last * s.back() == 1;
}

std::vector<Rational> theta_character_exponents(int rank, int r, Cover cover) {
  check_cover_args(rank, r);
  std::vector<Rational> e;
  for (int i = 1; i <= rank; ++i) {
    const int k = rank - i + 1;
    if (cover == Cover::Odd)
      e.push_back(make_rational(static_cast<long>(k) * (r - 1), r));
    else
      e.push_back(make_rational(2L * k * r - (2L * k - 1), 2L * r));
  }
  return e;
}

std::vector<Rational> theta_exponents_from_poles(int rank, int r, Cover cover) {
  auto s = pole_point(rank, r, cover);
  std::vector<Rational> e;
  for (int i = 1; i <= rank; ++i) e.push_back(Rational(rank - i + 1) - s[i - 1]);
  return e;
}

Rational beta_exponent(int n, int r, int a) {
  if (r < 3 || r % 2 == 0 || r >= 2 * n) throw InputError("need r odd with 3 <= r < 2n");
  const int rp = (r - 1) / 2;
  if (a < 0 || a > n - rp) throw InputError("a must lie in 0..n-(r-1)/2");
  if (a == 0) return 0;
  const int b = n - rp - a;
  Rational beta = make_rational(static_cast<long>(a) * (r - 1) * (2 * n - a + 1), 2L * r);
  beta -= make_rational(a, 2);
  beta -= Rational(static_cast<long>(a) * (n - a - b - 1));
  return beta;
}

bool beta_crosscheck(int n, int r, int a) {
  const Rational beta = beta_exponent(n, r, a);
  const int m = (2 * n - r + 1) / 2;
  Rational sum = 0;
  if (a > 0) {
    auto e = theta_character_exponents(m, r, Cover::Double);
    for (int i = 0; i < a; ++i) sum += e[i];
  }
  return sum == beta;
}

Rational pipeline_target(int n) { return make_rational(-static_cast<long>(n - 2) * (2 * n - 1), 2L * n); }

PipelineReport exponent_pipeline_report(int n) {
  if (n < 3 || n % 2 == 0) throw InputError("n must be odd and >= 3");
  PipelineReport rep;
  rep.n = n;
  rep.p = smallest_split_prime(n);
  const LocalFieldSpec spec(rep.p, n);

  // q^{m(1 + (n-1)(n-3)/2)} at m = 1
  rep.factors.push_back({"expansion-weight", Rational(1) + make_rational(static_cast<long>(n - 1) * (n - 3), 2)});

  // the m = 1 integral equals q^{-1/2} G_{n-2}; keep only the explicit q-power
  const CycValue ui = unit_integral(1, n - 2, spec);
  const CycValue g = gauss_sum(n - 2, spec);
  rep.gauss_identity = ui.value == g.value;
  rep.factors.push_back({"unit-integral", ui.q_exp - g.q_exp});

  // m >= 2 terms vanish outright
  rep.higher_m_vanishes = unit_integral(2, 2 * (n - 2), spec).value.is_zero();
  rep.factors.push_back({"higher-m", 0});

  // delta_Q^{(n-1)/(2n)} on y(p^{-1}); |p^{-1}| = q contributes the sign
  std::vector<Rational> pattern(n, 1);
  pattern[0] = 0;
  pattern[1] = 0;
  const Rational mod = modulus_character_exponent(n, n, pattern);
  rep.factors.push_back({"modulus-character", -mod * make_rational(n - 1, 2L * n)});

  rep.total = 0;
  for (const auto& f : rep.factors) rep.total += f.exponent;
  rep.target = pipeline_target(n);
  return rep;
}

Rational exponent_pipeline(int n) {
  auto rep = exponent_pipeline_report(n);
  if (!rep.ok()) throw std::logic_error("exponent pipeline mismatch for n = " + std::to_string(n));
  return rep.total;
}

std::string token_name(const std::vector<int>& exps) {
  std::string s = "T(";
  for (std::size_t i = 0; i < exps.size(); ++i) s += (i ? "," : "") + std::to_string(exps[i]);
  return s + ")";
}

WhittakerOracle token_oracle() {
  return [](const std::vector<int>& exps) { return FormalScalar::token(token_name(exps)); };
}

FormulaResult whittaker_formula(int n, int n1, int n2, const WhittakerOracle& oracle, const FormulaOptions& opts) {
  if (n < 3 || n % 2 == 0) throw InputError("n must be odd and >= 3");
  if (n1 < 0 || n2 < 0) throw InputError("n1 and n2 must be nonnegative");
  FormulaResult res;
  res.n = n;
  res.n1 = n1;
  res.n2 = n2;
  res.weil_exp = n1 % 2;
  const Rational scale = make_rational(2 * n - 1, 2L * n);
  res.prefactor_q_exp = -Rational(n1 + 2 * n2) * scale;
  res.second_q_exp = pipeline_target(n);
  res.t0.assign(n, 0);
  res.t1.assign(n, 1);
  res.t0[0] = res.t1[0] = n1 + n2;
  res.t0[1] = res.t1[1] = n2;

  FormalScalar second = FormalScalar::q_power(res.second_q_exp);
  if (opts.with_gauss_factor) {
    res.p = opts.p ? opts.p : smallest_split_prime(n);
    const LocalFieldSpec spec(res.p, n);
    res.gauss = gauss_sum(n - 2, spec);
    second = second * FormalScalar::cyc(res.gauss->value, res.gauss->q_exp);
  }
  res.inner = oracle(res.t0) + second * oracle(res.t1);
  res.value = FormalScalar::weil_power(res.weil_exp) * FormalScalar::q_power(res.prefactor_q_exp) * res.inner;
  return res;
}

std::string FormulaResult::text() const {
  std::string s = "gamma^" + std::to_string(weil_exp) + "*";
  if (prefactor_q_exp != 0) s += render_q_power(prefactor_q_exp) + "*";
  return s + "(" + inner.str() + ")";
}

DescentSummary descent_summary(int n, int r) {
  DescentSummary d;
  d.n = n;
  d.r = r;
  const OrbitReport rep = dimension_equation_check(n, r);
  d.r_prime = (r - 1) / 2;
  d.parts = 2 * n / r;
  d.remainder = 2 * n % r;
  d.radical_dim = unipotent_radical_dim(n, d.r_prime);
  d.orbit = rep.orbit;
  d.gk_dim = rep.gk_dim;
  d.dim_eq = rep.satisfied;
  d.balanced = rep.balanced;
  return d;
}

}  // namespace metatheta

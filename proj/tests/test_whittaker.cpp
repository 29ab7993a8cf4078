#include <doctest.h>

#include <random>

#include "metatheta/identities.hpp"
#include "metatheta/whittaker.hpp"

using namespace metatheta;

namespace {

std::vector<Rational> q(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> out;
  for (auto [a, b] : v) out.push_back(make_rational(a, b));
  return out;
}

FormalScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-3, 3), den(1, 6), tok(0, 2);
  FormalScalar f;
  for (int k = 0; k < 3; ++k) {
    std::vector<std::string> tokens;
    for (int j = tok(rng); j > 0; --j) tokens.push_back("T" + std::to_string(tok(rng)));
    f = f + FormalScalar::monomial(small(rng), make_rational(small(rng), den(rng)),
                                   small(rng) * CycScalar::root_power(15, small(rng) + 3), tokens);
  }
  return f;
}

}  // namespace

TEST_CASE("formal scalars combine like monomials") {
  auto t = FormalScalar::token("T(0)");
  auto two = t + t;
  REQUIRE(two.terms().size() == 1);
  CHECK(two.terms().begin()->second == CycScalar::integer(1, 2));
  CHECK((t + FormalScalar::cyc(CycScalar::integer(1, -1)) * t).is_zero());
  CHECK((FormalScalar() * t).is_zero());
  auto p = FormalScalar::q_power(make_rational(1, 3)) * FormalScalar::q_power(make_rational(1, 6));
  CHECK(p == FormalScalar::q_power(make_rational(1, 2)));
  CHECK((FormalScalar::weil_power(1) * FormalScalar::weil_power(2)) == FormalScalar::weil_power(3));
  CHECK(FormalScalar::one() * t == t);
  CHECK(t.str() == "T(0)");
  CHECK(FormalScalar().str() == "0");
}

TEST_CASE("formal scalar arithmetic laws") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("pole point") {
  CHECK(pole_point(2, 3, Cover::Odd) == q({{2, 3}, {1, 3}}));
  CHECK(pole_point(1, 3, Cover::Odd) == q({{1, 3}}));
  CHECK(pole_point(2, 3, Cover::Double) == q({{1, 2}, {1, 6}}));
  for (int rank = 1; rank <= 10; ++rank)
    for (int r : {3, 5, 7})
      for (Cover c : {Cover::Odd, Cover::Double}) CHECK(pole_point_postcondition(pole_point(rank, r, c), r, c));
  CHECK_FALSE(pole_point_postcondition(q({{1, 3}, {1, 3}}), 3, Cover::Odd));
  CHECK_THROWS_AS(pole_point(2, 4, Cover::Odd), InputError);
  CHECK_THROWS_AS(pole_point(0, 3, Cover::Odd), InputError);
}

TEST_CASE("theta character exponents") {
  CHECK(theta_character_exponents(3, 3, Cover::Odd) == q({{2, 1}, {4, 3}, {2, 3}}));
  CHECK(theta_character_exponents(1, 3, Cover::Odd) == q({{2, 3}}));
  CHECK(theta_character_exponents(2, 3, Cover::Double) == q({{3, 2}, {5, 6}}));
  // last entry is (2r-1)/2r
  for (int r : {3, 5, 7, 9})
    for (int m = 1; m <= 6; ++m) {
      CHECK(theta_character_exponents(m, r, Cover::Double).back() == make_rational(2 * r - 1, 2 * r));
      CHECK(theta_character_exponents(m, r, Cover::Double) == theta_exponents_from_poles(m, r, Cover::Double));
      CHECK(theta_character_exponents(m, r, Cover::Odd) == theta_exponents_from_poles(m, r, Cover::Odd));
    }
}

TEST_CASE("beta exponent") {
  CHECK(beta_exponent(3, 3, 1) == make_rational(3, 2));
  CHECK(beta_crosscheck(3, 3, 1));
  CHECK(beta_crosscheck(4, 3, 1));
  CHECK(beta_exponent(4, 3, 0) == 0);
  CHECK_THROWS_AS(beta_exponent(3, 3, 3), InputError);
  CHECK_THROWS_AS(beta_exponent(3, 7, 1), InputError);
  for (int n = 2; n <= 8; ++n)
    for (int r = 3; r < 2 * n; r += 2)
      for (int a = 1; a <= n - (r - 1) / 2; ++a) {
        // modulus character part: a(r-1)(2n-a+1)/(2r) is (r-1)/(2r) times delta_{P_{2n,a}}
        std::vector<Rational> pat(n, 0);
        for (int i = 0; i < a; ++i) pat[i] = 1;
        const int b = n - (r - 1) / 2 - a;
        const Rational via_modulus = modulus_character_exponent(n, a, pat) * make_rational(r - 1, 2 * r) -
                                     make_rational(a, 2) - Rational(a * (n - a - b - 1));
        CHECK(beta_exponent(n, r, a) == via_modulus);
        CHECK(beta_crosscheck(n, r, a));
      }
}

TEST_CASE("exponent pipeline") {
  CHECK(exponent_pipeline(3) == make_rational(-5, 6));
  CHECK(exponent_pipeline(5) == make_rational(-27, 10));
  auto rep = exponent_pipeline_report(3);
  REQUIRE(rep.factors.size() == 4);
  CHECK(rep.factors[0].exponent == 1);
  CHECK(rep.factors[1].exponent == make_rational(-1, 2));
  CHECK(rep.factors[2].exponent == 0);
  CHECK(rep.factors[3].exponent == make_rational(-8, 6));
  CHECK(rep.higher_m_vanishes);
  CHECK(rep.gauss_identity);
  for (int n = 3; n <= 15; n += 2)
    CHECK(exponent_pipeline(n) == make_rational(-static_cast<long>(n - 2) * (2 * n - 1), 2 * n));
  CHECK_THROWS_AS(exponent_pipeline(4), InputError);
}

TEST_CASE("Whittaker formula with the token oracle") {
  auto r = whittaker_formula(3, 0, 0, token_oracle());
  CHECK(r.text() == "gamma^0*(T(0,0,0) + q^(-5/6)*T(0,0,1))");
  CHECK(r.t0 == std::vector<int>{0, 0, 0});
  CHECK(r.t1 == std::vector<int>{0, 0, 1});
  auto want = FormalScalar::token("T(0,0,0)") + FormalScalar::q_power(make_rational(-5, 6)) * FormalScalar::token("T(0,0,1)");
  CHECK(r.value == want);

  auto s = whittaker_formula(3, 1, 0, token_oracle());
  CHECK(s.prefactor_q_exp == make_rational(-5, 6));
  CHECK(s.weil_exp == 1);
  CHECK(s.t0 == std::vector<int>{1, 0, 0});
  CHECK(whittaker_formula(5, 2, 1, token_oracle()).t1 == std::vector<int>{3, 1, 1, 1, 1});
  CHECK(whittaker_formula(5, 2, 1, token_oracle()).weil_exp == 0);
  CHECK_THROWS_AS(whittaker_formula(3, -1, 0, token_oracle()), InputError);
  CHECK_THROWS_AS(whittaker_formula(4, 0, 0, token_oracle()), InputError);
}

TEST_CASE("Whittaker formula gauss factor") {
  auto r = whittaker_formula(3, 0, 0, token_oracle(), {true, 0});
  REQUIRE(r.gauss.has_value());
  CHECK(r.p == 7);
  const auto g = gauss_sum(1, LocalFieldSpec(7, 3));
  auto want = FormalScalar::token("T(0,0,0)") +
              FormalScalar::monomial(0, make_rational(-4, 3), g.value, {"T(0,0,1)"});
  CHECK(r.value == want);
  auto r13 = whittaker_formula(3, 0, 0, token_oracle(), {true, 13});
  CHECK(r13.p == 13);
  CHECK_THROWS_AS(whittaker_formula(3, 0, 0, token_oracle(), {true, 11}), InputError);
}

TEST_CASE("Whittaker formula is linear in the oracle") {
  auto base = token_oracle();
  auto scaled = [&](const std::vector<int>& k) { return FormalScalar::cyc(CycScalar::integer(1, 3)) * base(k); };
  auto shifted = [&](const std::vector<int>& k) { return FormalScalar::q_power(make_rational(1, 7)) * base(k); };
  auto sum = [&](const std::vector<int>& k) { return base(k) + scaled(k); };
  auto zero_t1 = [&](const std::vector<int>& k) { return k.back() == 1 ? FormalScalar() : base(k); };
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 2}, {3, 1}}) {
    auto w = whittaker_formula(5, n1, n2, base).value;
    CHECK(whittaker_formula(5, n1, n2, scaled).value == FormalScalar::cyc(CycScalar::integer(1, 3)) * w);
    CHECK(whittaker_formula(5, n1, n2, shifted).value == FormalScalar::q_power(make_rational(1, 7)) * w);
    CHECK(whittaker_formula(5, n1, n2, sum).value == w + whittaker_formula(5, n1, n2, scaled).value);
    CHECK(whittaker_formula(5, n1, n2, zero_t1).value.terms().size() == 1);
  }
}

TEST_CASE("descent summary") {
  auto a = descent_summary(3, 3);
  CHECK(a.r_prime == 1);
  CHECK(a.orbit == Partition({3, 3}));
  CHECK(a.gk_dim == 7);
  CHECK(a.dim_eq);
  auto b = descent_summary(4, 7);
  CHECK(b.orbit == Partition({6, 2}));
  CHECK(b.gk_dim == 15);
  CHECK(b.dim_eq);
  auto c = descent_summary(2, 3);
  CHECK(c.orbit == Partition({2, 2}));
  CHECK(c.gk_dim == 3);
  CHECK(c.dim_eq);
  CHECK_THROWS_AS(descent_summary(2, 5), InputError);
}

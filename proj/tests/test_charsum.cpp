#include <doctest.h>

#include <complex>
#include <random>

#include "metatheta/charsum.hpp"
#include "oracles.hpp"

using namespace metatheta;

namespace {

// g_1 for p = 7, n = 3, computed once by the reference summation and frozen.
const std::vector<std::int64_t> kGaussGolden{2, -1, -2, 3, -2, -2, 1, 1, -1, 0, 1, -3};

std::complex<double> evaluate(const CycScalar& c) {
  const double pi = std::acos(-1.0);
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < c.coefficients().size(); ++k)
    z += static_cast<double>(c.coefficients()[k]) * std::polar(1.0, 2 * pi * k / c.modulus());
  return z;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  for (int n = 1; n <= 40; ++n) CHECK(cyclotomic_polynomial(n) == oracle::cyclotomic(n));
  CHECK(euler_phi(21) == 12);
  CHECK(euler_phi(147) == 84);
}

TEST_CASE("cyclotomic arithmetic") {
  auto z = CycScalar::root_power(21, 1);
  CycScalar acc = CycScalar::integer(21, 1);
  for (int k = 0; k < 21; ++k) acc = acc * z;
  CHECK(acc == CycScalar::integer(21, 1));
  // sum of all 7th roots of unity vanishes
  CycScalar s(7);
  for (int k = 0; k < 7; ++k) s = s + CycScalar::root_power(7, k);
  CHECK(s.is_zero());
  CHECK(CycScalar::root_power(3, 1).lift(21) == CycScalar::root_power(21, 7));
  CHECK(CycScalar::root_power(21, 5).conj() == CycScalar::root_power(21, 16));
  CHECK((z - z).is_zero());
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("cyclotomic ring axioms at random points") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, 44);
  auto rnd = [&] {
    CycScalar x(45);
    for (int k = 0; k < 4; ++k) x = x + coef(rng) * CycScalar::root_power(45, expo(rng));
    return x;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-6);
  }
}

TEST_CASE("local field data") {
  LocalFieldSpec spec(7, 3);
  CHECK(spec.generator() == 3);
  CHECK(spec.omega() == 2);
  CHECK(spec.power_residue(2) == 2);
  CHECK(spec.power_residue(-1) == 0);
  CHECK_THROWS_AS(spec.power_residue(14), InputError);
  CHECK_THROWS_AS(LocalFieldSpec(8, 3), InputError);
  CHECK_THROWS_AS(LocalFieldSpec(11, 3), InputError);
  CHECK_THROWS_AS(LocalFieldSpec(13, 4), InputError);
  CHECK(smallest_split_prime(3) == 7);
  CHECK(smallest_split_prime(5) == 11);
  CHECK(smallest_split_prime(15) == 31);
}

TEST_CASE("power residue is a homomorphism") {
  for (std::int64_t p : {7, 13, 19, 31}) {
    LocalFieldSpec spec(p, 3);
    for (std::int64_t x = 1; x < p; ++x)
      for (std::int64_t y = 1; y < p; ++y)
        CHECK((spec.power_residue(x) + spec.power_residue(y)) % 3 == spec.power_residue(x * y % p));
  }
}

TEST_CASE("tame Hilbert symbol") {
  LocalFieldSpec spec(13, 3);
  for (int v1 = 0; v1 <= 2; ++v1)
    for (int v2 = 0; v2 <= 2; ++v2)
      for (std::int64_t u1 = 1; u1 < 13; ++u1)
        for (std::int64_t u2 = 1; u2 < 13; ++u2) {
          CHECK((tame_hilbert(v1, u1, v2, u2, spec) + tame_hilbert(v2, u2, v1, u1, spec)) % 3 == 0);
          CHECK(tame_hilbert(v1, u1, v2 + 1, u2 * 5 % 13, spec) ==
                (tame_hilbert(v1, u1, v2, u2, spec) + tame_hilbert(v1, u1, 1, 5, spec)) % 3);
        }
  CHECK(tame_hilbert(0, 2, 0, 5, spec) == 0);
  CHECK(tame_hilbert(1, 1, 0, 2, spec) == (3 - spec.power_residue(2)) % 3);
}

TEST_CASE("Gauss sum golden value") {
  LocalFieldSpec spec(7, 3);
  auto g = gauss_sum(1, spec);
  CHECK(g.value.modulus() == 21);
  CHECK(g.value.coefficients() == oracle::gauss_reference(7, 3, 1));
  CHECK(g.value.coefficients() == kGaussGolden);
  CHECK(g.q_exp == make_rational(-1, 2));
  CHECK(std::abs(std::norm(evaluate(g.value)) - 7.0) < 1e-9);
}

TEST_CASE("Gauss sums match the reference summation") {
  for (int p : {7, 13, 19, 31, 37})
    for (int t = 0; t < 3; ++t)
      CHECK(gauss_sum(t, LocalFieldSpec(p, 3)).value.coefficients() == oracle::gauss_reference(p, 3, t));
  for (int p : {11, 31})
    for (int t = 0; t < 5; ++t)
      CHECK(gauss_sum(t, LocalFieldSpec(p, 5)).value.coefficients() == oracle::gauss_reference(p, 5, t));
}

TEST_CASE("Gauss sum norms") {
  for (std::int64_t p = 7; p <= 31; ++p) {
    if (!is_prime(p) || (p - 1) % 3 != 0) continue;
    LocalFieldSpec spec(p, 3);
    CHECK(gauss_sum(0, spec).value == CycScalar::integer(1, -1));
    for (int t = 1; t <= 2; ++t) {
      auto g = gauss_sum(t, spec).value;
      CHECK(g * g.conj() == CycScalar::integer(g.modulus(), p));
    }
  }
}

TEST_CASE("unit integrals") {
  LocalFieldSpec spec(7, 3);
  auto v = unit_integral(2, 1, spec);
  CHECK(v.value.is_zero());
  CHECK(v.q_exp == -2);
  auto one = unit_integral(1, 1, spec);
  CHECK(one.value == gauss_sum(1, spec).value);
  CHECK(one.q_exp == -1);
  auto triv = unit_integral(1, 0, spec);
  CHECK(triv.value == CycScalar::integer(1, -1));
  CHECK(triv.q_exp == -1);
  for (std::int64_t p : {7, 13, 19, 31}) {
    LocalFieldSpec s(p, 3);
    for (int m = 2; m <= 3; ++m)
      for (int t = 1; t <= 2; ++t) CHECK(unit_integral(m, t, s).value.is_zero());
    for (int t = 0; t <= 5; ++t) CHECK(unit_integral(1, t, s).value == gauss_sum(t, s).value);
  }
  CHECK_THROWS_AS(unit_integral(0, 1, spec), InputError);
}

TEST_CASE("additive sign flag is neutral for odd n") {
  // pr(-1) = 0 for odd n, so replacing zeta_p^e by zeta_p^{-e} permutes the terms
  for (std::int64_t p : {7, 13, 31}) {
    LocalFieldSpec spec(p, 3);
    CHECK(spec.power_residue(-1) == 0);
    for (int t = 0; t < 3; ++t) CHECK(gauss_sum(t, spec, GaussConfig{true}).value == gauss_sum(t, spec).value);
  }
}

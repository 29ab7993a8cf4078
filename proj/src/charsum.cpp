#include "metatheta/charsum.hpp"

#include <string>

namespace metatheta {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  __int128 r = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t smallest_split_prime(std::int64_t n) {
  if (n < 1) throw InputError("n must be positive");
  for (std::int64_t p = n + 1;; p += n)
    if (is_prime(p)) return p;
}

LocalFieldSpec::LocalFieldSpec(std::int64_t p, std::int64_t n) : p_(p), n_(n) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (p > 2000003) throw InputError("p is too large for the discrete log table");
  if (n < 1 || n % 2 == 0) throw InputError("n must be odd and positive");
  if ((p - 1) % n != 0) throw InputError("n must divide p - 1");
  std::vector<std::int64_t> fac;
  std::int64_t m = p - 1;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fac.push_back(m);
  for (g_ = 1; g_ < p; ++g_) {
    bool prim = p == 2 || g_ > 1;
    for (auto q : fac)
      if (prim && mod_pow(g_, (p - 1) / q, p) == 1) prim = false;
    if (prim) break;
  }
  omega_ = mod_pow(g_, (p - 1) / n, p);
  log_.assign(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (std::int64_t k = 0; k < p - 1; ++k) {
    log_[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(k);
    x = x * g_ % p;
  }
}

std::int64_t LocalFieldSpec::power_residue(std::int64_t e) const {
  const std::int64_t r = ((e % p_) + p_) % p_;
  if (r == 0) throw InputError("power residue needs a unit");
  // e = g^L, so e^((p-1)/n) = omega^L.
  return log_[static_cast<std::size_t>(r)] % n_;
}

std::int64_t tame_hilbert(std::int64_t v1, std::int64_t u1, std::int64_t v2, std::int64_t u2,
                          const LocalFieldSpec& spec) {
  const auto p = spec.p(), n = spec.n();
  if (((u1 % p) + p) % p == 0 || ((u2 % p) + p) % p == 0) throw InputError("unit parts must be prime to p");
  // Work with residues: pr(-1) + v2 pr(u1) - v1 pr(u2), all mod n.
  std::int64_t sign = ((v1 * v2) % 2 != 0) ? spec.power_residue(-1) : 0;
  std::int64_t k = sign + (v2 % n) * spec.power_residue(u1) - (v1 % n) * spec.power_residue(u2);
  return ((k % n) + n) % n;
}

CycValue gauss_sum(std::int64_t t, const LocalFieldSpec& spec, const GaussConfig& cfg) {
  const std::int64_t p = spec.p(), n = spec.n(), big = n * p;
  const std::int64_t tt = ((t % n) + n) % n, sgn = cfg.negate_additive ? -1 : 1;
  std::vector<std::int64_t> dense(static_cast<std::size_t>(big), 0);
  for (std::int64_t e = 1; e < p; ++e) {
    std::int64_t k = p * ((tt * spec.power_residue(e)) % n) + sgn * n * e;
    dense[((k % big) + big) % big] += 1;
  }
  return {CycScalar::from_dense(static_cast<std::uint64_t>(big), std::move(dense)), make_rational(-1, 2)};
}

CycValue unit_integral(int m, std::int64_t t, const LocalFieldSpec& spec, const GaussConfig& cfg) {
  if (m < 1) throw InputError("m must be at least 1");
  const std::int64_t p = spec.p(), n = spec.n();
  std::int64_t pm = 1;
  for (int k = 0; k < m; ++k) {
    if (pm > (1ll << 26) / p) throw InputError("p^m too large");
    pm *= p;
  }
  const std::int64_t big = n * pm;
  if (big > (1ll << 26)) throw InputError("n p^m too large");
  const std::int64_t tt = ((t % n) + n) % n;
  // zeta_n = zeta^{p^m}, zeta_{p^m} = zeta^{n}
  std::vector<std::int64_t> residue_exp(static_cast<std::size_t>(p), 0);
  for (std::int64_t e = 1; e < p; ++e) residue_exp[e] = pm * ((tt * spec.power_residue(e)) % n) % big;
  const std::int64_t sgn = cfg.negate_additive ? -1 : 1;
  std::vector<std::int64_t> dense(static_cast<std::size_t>(big), 0);
  for (std::int64_t e = 1; e < pm; ++e) {
    if (e % p == 0) continue;
    std::int64_t add = (sgn * n * e) % big;
    std::int64_t k = (residue_exp[e % p] + add + big) % big;
    dense[k] += 1;
  }
  return {CycScalar::from_dense(static_cast<std::uint64_t>(big), std::move(dense)), Rational(-m)};
}

}  // namespace metatheta

// Power residue symbols, tame Hilbert symbols, Gauss sums and unit-group integrals over Z/p^m.
#pragma once

#include <cstdint>
#include <vector>

#include "metatheta/cyclotomic.hpp"
#include "metatheta/rational.hpp"

namespace metatheta {

/// Residue field F_p with n | p - 1 and n odd.
class LocalFieldSpec {
 public:
  /// Throws InputError unless p is prime, n is odd and positive, and n divides p - 1.
  LocalFieldSpec(std::int64_t p, std::int64_t n);

  std::int64_t p() const { return p_; }
  std::int64_t n() const { return n_; }
  /// Smallest positive primitive root mod p.
  std::int64_t generator() const { return g_; }
  /// generator^((p-1)/n) mod p.
  std::int64_t omega() const { return omega_; }
  /// k in Z/n with e^((p-1)/n) = omega^k mod p. Throws InputError if p | e.
  std::int64_t power_residue(std::int64_t e) const;

 private:
  std::int64_t p_, n_, g_, omega_;
  std::vector<std::int32_t> log_;  // discrete log base g, index by residue
};

/// A value tagged with a power of q (q = p here): value * q^{q_exp}.
struct CycValue {
  CycScalar value;
  Rational q_exp;
};

struct GaussConfig {
  /// Use zeta_p^{-e} instead of zeta_p^{e} for the additive character.
  bool negate_additive = false;
};

bool is_prime(std::int64_t p);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
/// Smallest prime p with p = 1 mod n.
std::int64_t smallest_split_prime(std::int64_t n);

/// Symbol of a = p^{v1} u1 and b = p^{v2} u2: residue of (-1)^{v1 v2} u1^{v2} u2^{-v1}.
std::int64_t tame_hilbert(std::int64_t v1, std::int64_t u1, std::int64_t v2, std::int64_t u2,
                          const LocalFieldSpec& spec);

/// g_t = sum_{e=1}^{p-1} zeta_n^{t pr(e)} zeta_p^{e} in Z[zeta_{np}], tagged with q_exp = -1/2 so the pair
/// stands for the normalized sum.
CycValue gauss_sum(std::int64_t t, const LocalFieldSpec& spec, const GaussConfig& cfg = {});

/// p^{-m} sum over units e of Z/p^m of zeta_n^{t pr(e mod p)} zeta_{p^m}^{e}, returned as the integer
/// sum in Z[zeta_{n p^m}] with q_exp = -m.
CycValue unit_integral(int m, std::int64_t t, const LocalFieldSpec& spec, const GaussConfig& cfg = {});

}  // namespace metatheta

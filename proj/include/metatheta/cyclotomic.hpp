// Exact elements of Z[zeta_N] in canonical form (reduced modulo the N-th cyclotomic polynomial).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metatheta {

/// sum_k c_k zeta_N^k with 0 <= k < phi(N); two values are equal iff moduli and coefficients agree.
class CycScalar {
 public:
  CycScalar() : CycScalar(1) {}
  explicit CycScalar(std::uint64_t modulus);

  static CycScalar integer(std::uint64_t modulus, std::int64_t value);
  /// zeta_N^k
  static CycScalar root_power(std::uint64_t modulus, std::int64_t k);
  /// Reduces sum_k dense[k] zeta_N^k, dense of length N (indices are exponents mod N).
  static CycScalar from_dense(std::uint64_t modulus, std::vector<std::int64_t> dense);

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  /// Image under Z[zeta_N] -> Z[zeta_M], zeta_N -> zeta_M^{M/N}. Requires N | M.
  CycScalar lift(std::uint64_t m) const;
  /// zeta -> zeta^{-1}
  CycScalar conj() const;

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(std::int64_t c, const CycScalar& a);
  friend bool operator==(const CycScalar& a, const CycScalar& b);

  std::string str() const;

 private:
  std::vector<std::int64_t> dense() const;
  std::uint64_t modulus_;
  std::vector<std::int64_t> coeffs_;
};

std::uint64_t euler_phi(std::uint64_t n);
/// Coefficients of the N-th cyclotomic polynomial, low degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace metatheta

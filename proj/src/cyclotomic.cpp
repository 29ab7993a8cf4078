#include "metatheta/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metatheta/rational.hpp"

namespace metatheta {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Exact division of polynomials with integer coefficients by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    std::int64_t c = num[k];
    q[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] = checked_add(num[k - dd + j], -checked_mul(c, den[j]));
  }
  return q;
}

std::vector<std::int64_t> squarefree_cyclotomic(std::uint64_t rad) {
  // Phi_{p1...pk}: start with x - 1 and apply Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x) for each prime.
  std::vector<std::int64_t> phi = {-1, 1};
  for (std::uint64_t p : prime_factors(rad)) {
    std::vector<std::int64_t> up((phi.size() - 1) * p + 1, 0);
    for (std::size_t k = 0; k < phi.size(); ++k) up[k * p] = phi[k];
    phi = divide_monic(up, phi);
  }
  return phi;
}

struct PolyCache {
  std::mutex mu;
  std::map<std::uint64_t, std::vector<std::int64_t>> radical_polys;
};

PolyCache& cache() {
  static PolyCache c;
  return c;
}

const std::vector<std::int64_t>& radical_poly(std::uint64_t rad) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.radical_polys.find(rad);
  if (it == c.radical_polys.end()) it = c.radical_polys.emplace(rad, squarefree_cyclotomic(rad)).first;
  return it->second;  // map nodes are stable
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto p : prime_factors(n)) r *= p;
  return r;
}

void check_modulus(std::uint64_t m) {
  if (m == 0) throw InputError("cyclotomic modulus must be positive");
  if (m > (1ull << 26)) throw InputError("cyclotomic modulus too large");
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n) {
  check_modulus(n);
  const std::uint64_t rad = radical(n), stride = n / rad;
  const auto& base = radical_poly(rad);
  std::vector<std::int64_t> out((base.size() - 1) * stride + 1, 0);
  for (std::size_t k = 0; k < base.size(); ++k) out[k * stride] = base[k];
  return out;
}

CycScalar::CycScalar(std::uint64_t modulus) : modulus_(modulus) {
  check_modulus(modulus);
  coeffs_.assign(euler_phi(modulus), 0);
}

CycScalar CycScalar::integer(std::uint64_t modulus, std::int64_t value) {
  check_modulus(modulus);
  std::vector<std::int64_t> d(modulus, 0);
  d[0] = value;
  return from_dense(modulus, std::move(d));
}

CycScalar CycScalar::root_power(std::uint64_t modulus, std::int64_t k) {
  check_modulus(modulus);
  std::vector<std::int64_t> d(modulus, 0);
  const auto m = static_cast<std::int64_t>(modulus);
  d[((k % m) + m) % m] = 1;
  return from_dense(modulus, std::move(d));
}

CycScalar CycScalar::from_dense(std::uint64_t modulus, std::vector<std::int64_t> dense) {
  check_modulus(modulus);
  if (dense.size() != modulus) throw InputError("dense vector length must equal the modulus");
  // Phi_N(x) = Phi_rad(y) with y = x^{N/rad}; x^N = 1 means y^rad = 1. Split exponents by their
  // residue mod N/rad and reduce each slice as a polynomial in y.
  const std::uint64_t rad = radical(modulus), stride = modulus / rad;
  const auto& phi = radical_poly(rad);
  const std::size_t deg = phi.size() - 1;
  for (std::uint64_t s = 0; s < stride; ++s) {
    for (std::size_t k = rad; k-- > deg;) {
      std::int64_t c = dense[k * stride + s];
      if (c == 0) continue;
      dense[k * stride + s] = 0;
      // y^k = y^{k-deg} * (y^deg - Phi) since Phi is monic
      for (std::size_t j = 0; j < deg; ++j)
        if (phi[j] != 0) {
          auto& slot = dense[(k - deg + j) * stride + s];
          slot = checked_add(slot, -checked_mul(c, phi[j]));
        }
    }
  }
  CycScalar out(modulus);
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = dense[k];
  return out;
}

std::vector<std::int64_t> CycScalar::dense() const {
  std::vector<std::int64_t> d(modulus_, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) d[k] = coeffs_[k];
  return d;
}

bool CycScalar::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

CycScalar CycScalar::lift(std::uint64_t m) const {
  if (m % modulus_ != 0) throw InputError("lift target must be a multiple of the modulus");
  if (m == modulus_) return *this;
  const std::uint64_t f = m / modulus_;
  std::vector<std::int64_t> d(m, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) d[k * f] = coeffs_[k];
  return from_dense(m, std::move(d));
}

CycScalar CycScalar::conj() const {
  std::vector<std::int64_t> d(modulus_, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) d[(modulus_ - k) % modulus_] = coeffs_[k];
  return from_dense(modulus_, std::move(d));
}

namespace {

std::uint64_t common(const CycScalar& a, const CycScalar& b) { return std::lcm(a.modulus(), b.modulus()); }

}  // namespace

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  const auto m = common(a, b);
  CycScalar x = a.lift(m), y = b.lift(m);
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] = checked_add(x.coeffs_[k], y.coeffs_[k]);
  return x;
}

CycScalar operator*(std::int64_t c, const CycScalar& a) {
  CycScalar x = a;
  for (auto& v : x.coeffs_) v = checked_mul(v, c);
  return x;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-1) * b; }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  const auto m = common(a, b);
  CycScalar x = a.lift(m), y = b.lift(m);
  std::vector<std::int64_t> d(m, 0);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      auto& slot = d[(i + j) % m];
      slot = checked_add(slot, checked_mul(x.coeffs_[i], y.coeffs_[j]));
    }
  }
  return CycScalar::from_dense(m, std::move(d));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  const auto m = common(a, b);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::string CycScalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const auto mag = c < 0 ? -c : c;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "z" << modulus_ << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace metatheta

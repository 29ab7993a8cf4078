// Formal sums of monomials gamma^w * q^e * (cyclotomic coefficient) * (oracle tokens).
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "metatheta/cyclotomic.hpp"
#include "metatheta/rational.hpp"

namespace metatheta {

struct Monomial {
  int weil_exp = 0;
  Rational q_exp = 0;
  std::vector<std::string> tokens;  // sorted multiset of opaque oracle values

  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);
};

/// Sum of monomials with cyclotomic coefficients; like monomials combine, zero terms are dropped.
class FormalScalar {
 public:
  FormalScalar() = default;
  static FormalScalar one();
  static FormalScalar monomial(int weil_exp, const Rational& q_exp, const CycScalar& coeff,
                               std::vector<std::string> tokens = {});
  static FormalScalar token(const std::string& name);
  static FormalScalar q_power(const Rational& e);
  static FormalScalar weil_power(int w);
  static FormalScalar cyc(const CycScalar& c, const Rational& q_exp = 0);

  const std::map<Monomial, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend FormalScalar operator+(const FormalScalar& a, const FormalScalar& b);
  friend FormalScalar operator*(const FormalScalar& a, const FormalScalar& b);
  friend bool operator==(const FormalScalar& a, const FormalScalar& b);

  /// Plain rendering, e.g. "gamma^0*T(0,0,0) + q^(-5/6)*T(0,0,1)".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const CycScalar& c);
  std::map<Monomial, CycScalar> terms_;
};

std::string render_q_power(const Rational& e);

}  // namespace metatheta

#include "metatheta/formal.hpp"

#include <algorithm>
#include <tuple>

namespace metatheta {

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.weil_exp != b.weil_exp) return a.weil_exp < b.weil_exp;
  if (a.q_exp != b.q_exp) return a.q_exp > b.q_exp;  // higher q powers first
  return a.tokens < b.tokens;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.weil_exp == b.weil_exp && a.q_exp == b.q_exp && a.tokens == b.tokens;
}

FormalScalar FormalScalar::one() { return monomial(0, 0, CycScalar::integer(1, 1)); }

FormalScalar FormalScalar::monomial(int weil_exp, const Rational& q_exp, const CycScalar& coeff,
                                    std::vector<std::string> tokens) {
  FormalScalar f;
  std::sort(tokens.begin(), tokens.end());
  f.add_term(Monomial{weil_exp, q_exp, std::move(tokens)}, coeff);
  return f;
}

FormalScalar FormalScalar::token(const std::string& name) {
  return monomial(0, 0, CycScalar::integer(1, 1), {name});
}
FormalScalar FormalScalar::q_power(const Rational& e) { return monomial(0, e, CycScalar::integer(1, 1)); }
FormalScalar FormalScalar::weil_power(int w) { return monomial(w, 0, CycScalar::integer(1, 1)); }
FormalScalar FormalScalar::cyc(const CycScalar& c, const Rational& q_exp) { return monomial(0, q_exp, c); }

void FormalScalar::add_term(const Monomial& m, const CycScalar& c) {
  auto it = terms_.find(m);
  CycScalar sum = it == terms_.end() ? c : it->second + c;
  if (sum.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
    return;
  }
  terms_.insert_or_assign(m, sum);
}

FormalScalar operator+(const FormalScalar& a, const FormalScalar& b) {
  FormalScalar r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

FormalScalar operator*(const FormalScalar& a, const FormalScalar& b) {
  FormalScalar r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.weil_exp = ma.weil_exp + mb.weil_exp;
      m.q_exp = ma.q_exp + mb.q_exp;
      m.tokens = ma.tokens;
      m.tokens.insert(m.tokens.end(), mb.tokens.begin(), mb.tokens.end());
      std::sort(m.tokens.begin(), m.tokens.end());
      r.add_term(m, ca * cb);
    }
  return r;
}

bool operator==(const FormalScalar& a, const FormalScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  return true;
}

std::string render_q_power(const Rational& e) { return "q^(" + to_string(e) + ")"; }

std::string FormalScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> f;
    if (m.weil_exp != 0) f.push_back("gamma^" + std::to_string(m.weil_exp));
    if (m.q_exp != 0) f.push_back(render_q_power(m.q_exp));
    const bool unit = c == CycScalar::integer(1, 1);
    if (!unit) f.push_back("(" + c.str() + ")");
    for (const auto& t : m.tokens) f.push_back(t);
    if (f.empty()) f.push_back("1");
    std::string s;
    for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "*" : "") + f[k];
    out += s;
  }
  return out;
}

}  // namespace metatheta

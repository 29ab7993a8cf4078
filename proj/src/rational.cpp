#include "metatheta/rational.hpp"

#include <cctype>

namespace metatheta {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw InputError("malformed rational: '" + std::string(text) + "'");
  std::string n(num), d(den);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class zd(d);
  if (zd == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(mpz_class(n), zd);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

}  // namespace metatheta

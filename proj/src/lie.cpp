#include "metatheta/lie.hpp"

#include <sstream>

namespace metatheta {

namespace {

void check_rank(int n) {
  if (n < 1) throw InputError("rank n must be positive");
}

int eps(int n, int i) { return i <= n ? 1 : -1; }

}  // namespace

RationalMatrix symplectic_form_matrix(int n) {
  check_rank(n);
  RationalMatrix j(2 * n);
  for (int i = 1; i <= n; ++i) {
    j.at(i - 1, 2 * n - i) = 1;
    j.at(n + i - 1, n - i) = -1;
  }
  return j;
}

RationalMatrix elementary(int size, int i, int j) {
  if (i < 1 || j < 1 || i > size || j > size) throw InputError("elementary matrix index out of range");
  RationalMatrix e(size);
  e.at(i - 1, j - 1) = 1;
  return e;
}

RationalMatrix estar(int n, int i, int j) {
  check_rank(n);
  const int size = 2 * n;
  RationalMatrix d = elementary(size, i, j);
  const int ip = size + 1 - i, jp = size + 1 - j;
  if (jp == i && ip == j) return d;
  d.at(jp - 1, ip - 1) -= eps(n, i) * eps(n, j);
  return d;
}

bool in_lie_algebra(int n, const RationalMatrix& d) {
  if (d.size() != static_cast<std::size_t>(2 * n)) return false;
  RationalMatrix j = symplectic_form_matrix(n);
  return (d.transpose() * j + j * d).is_zero();
}

bool is_symplectic_matrix(int n, const RationalMatrix& g) {
  if (g.size() != static_cast<std::size_t>(2 * n)) return false;
  RationalMatrix j = symplectic_form_matrix(n);
  return g.transpose() * j * g == j;
}

RationalMatrix nilpotent_exponential(const RationalMatrix& d) {
  const std::size_t n = d.size();
  RationalMatrix result = RationalMatrix::identity(n), term = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * d;
    if (term.is_zero()) return result;
    term *= make_rational(1, static_cast<long>(k));
    result += term;
  }
  if (!(term * d).is_zero()) throw InputError("exponential requires a nilpotent matrix");
  return result;
}

RationalVector flatten(const RationalMatrix& m) { return m.entries(); }

RationalMatrix unflatten(const RationalVector& v, std::size_t size) {
  if (v.size() != size * size) throw InputError("vector length is not size^2");
  RationalMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m.at(i, j) = v[i * size + j];
  return m;
}

std::vector<Root> positive_roots(int n) {
  check_rank(n);
  std::vector<Root> out;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j)
      if (i + j <= 2 * n + 1) out.emplace_back(i, j);
  return out;
}

std::vector<Root> radical_roots(int n, const std::vector<int>& gl_blocks) {
  check_rank(n);
  int used = 0;
  for (int s : gl_blocks) {
    if (s < 1) throw InputError("Levi block sizes must be positive");
    used += s;
  }
  if (used > n) throw InputError("Levi blocks exceed the rank");
  const int nb = static_cast<int>(gl_blocks.size());
  std::vector<int> block(2 * n + 1, 0);
  int pos = 1;
  for (int b = 0; b < nb; ++b)
    for (int k = 0; k < gl_blocks[b]; ++k) block[pos++] = b;
  for (; pos <= 2 * n - used; ++pos) block[pos] = nb;  // middle Sp block
  for (; pos <= 2 * n; ++pos) block[pos] = 2 * nb - block[2 * n + 1 - pos];
  std::vector<Root> out;
  for (const auto& [i, j] : positive_roots(n))
    if (block[i] != block[j]) out.emplace_back(i, j);
  return out;
}

UnipotentFamily UnipotentFamily::from_roots(int n, std::string name, const std::vector<Root>& roots) {
  UnipotentFamily f;
  f.n = n;
  f.name = std::move(name);
  for (const auto& [i, j] : roots) {
    f.directions.push_back(estar(n, i, j));
    f.labels.push_back("e*" + std::to_string(i) + "," + std::to_string(j));
  }
  return f;
}

Span UnipotentFamily::span() const {
  Span s(static_cast<std::size_t>(4 * n * n));
  for (const auto& d : directions) s.add(flatten(d));
  return s;
}

UnipotentFamily join(std::string name, const std::vector<UnipotentFamily>& parts) {
  UnipotentFamily f;
  f.name = std::move(name);
  for (const auto& p : parts) {
    if (f.n == 0) f.n = p.n;
    if (p.n != f.n && p.n != 0) throw InputError("families live in different ambient groups");
    f.directions.insert(f.directions.end(), p.directions.begin(), p.directions.end());
    f.labels.insert(f.labels.end(), p.labels.begin(), p.labels.end());
  }
  return f;
}

CharacterFunctional CharacterFunctional::from_weights(int n, const std::map<Root, Rational>& weights) {
  CharacterFunctional c;
  c.n = n;
  for (const auto& [slot, w] : weights) {
    if (slot.first < 1 || slot.second < 1 || slot.first > 2 * n || slot.second > 2 * n)
      throw InputError("character slot out of range");
    if (w != 0) c.weights[slot] = w;
  }
  return c;
}

Rational CharacterFunctional::operator()(const RationalMatrix& d) const {
  Rational v = 0;
  for (const auto& [slot, w] : weights) v += w * d.at(slot.first - 1, slot.second - 1);
  return v;
}

RationalMatrix CharacterFunctional::coefficient_matrix() const {
  RationalMatrix c(2 * n);
  for (const auto& [slot, w] : weights) c.at(slot.first - 1, slot.second - 1) = w;
  return c;
}

CharacterFunctional CharacterFunctional::from_coefficient_matrix(int n, const RationalMatrix& c) {
  CharacterFunctional f;
  f.n = n;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      if (c.at(i, j) != 0) f.weights[{i + 1, j + 1}] = c.at(i, j);
  return f;
}

std::string CharacterFunctional::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [slot, w] : weights) {
    if (!first) os << " + ";
    first = false;
    if (w != 1) os << to_string(w) << "*";
    os << "u" << slot.first << "," << slot.second;
  }
  if (first) os << "0";
  return os.str();
}

bool is_abelian(const UnipotentFamily& fam) {
  for (std::size_t a = 0; a < fam.size(); ++a)
    for (std::size_t b = a + 1; b < fam.size(); ++b)
      if (!commutator(fam.directions[a], fam.directions[b]).is_zero()) return false;
  return true;
}

bool bracket_closed(const UnipotentFamily& fam) {
  Span s = fam.span();
  for (std::size_t a = 0; a < fam.size(); ++a)
    for (std::size_t b = a + 1; b < fam.size(); ++b)
      if (!s.contains(flatten(commutator(fam.directions[a], fam.directions[b])))) return false;
  return true;
}

bool all_in_lie_algebra(const UnipotentFamily& fam) {
  for (const auto& d : fam.directions)
    if (!in_lie_algebra(fam.n, d)) return false;
  return true;
}

bool is_character(const UnipotentFamily& fam, const CharacterFunctional& chi) {
  for (std::size_t a = 0; a < fam.size(); ++a)
    for (std::size_t b = a + 1; b < fam.size(); ++b)
      if (chi(commutator(fam.directions[a], fam.directions[b])) != 0) return false;
  return true;
}

bool span_contains(const UnipotentFamily& whole, const UnipotentFamily& sub) {
  Span s = whole.span();
  for (const auto& d : sub.directions)
    if (!s.contains(flatten(d))) return false;
  return true;
}

bool same_span(const UnipotentFamily& a, const UnipotentFamily& b) {
  return a.dim() == b.dim() && span_contains(a, b);
}

bool agree_on(const UnipotentFamily& fam, const CharacterFunctional& a, const CharacterFunctional& b) {
  for (const auto& d : fam.directions)
    if (a(d) != b(d)) return false;
  return true;
}

ConjugationResult conjugate_family(const RationalMatrix& w, const UnipotentFamily& fam,
                                   const CharacterFunctional& chi) {
  if (w.size() != static_cast<std::size_t>(2 * fam.n)) throw InputError("conjugating element has the wrong size");
  RationalMatrix wi = w.inverse();
  ConjugationResult r;
  r.family.n = fam.n;
  r.family.name = fam.name + "^w";
  for (std::size_t k = 0; k < fam.size(); ++k) {
    r.family.directions.push_back(w * fam.directions[k] * wi);
    r.family.labels.push_back(k < fam.labels.size() ? "w(" + fam.labels[k] + ")" : "w(?)");
  }
  // chi(w^{-1} D w) = tr(C^T w^{-1} D w) = tr((w C^T w^{-1}) D), so C' = w^{-T} C w^T.
  RationalMatrix c = chi.coefficient_matrix();
  r.character = CharacterFunctional::from_coefficient_matrix(fam.n, wi.transpose() * c * w.transpose());
  r.closed = bracket_closed(r.family);
  r.rank_preserved = r.family.dim() == fam.dim();
  return r;
}

RationalMatrix sign_torus(int n, unsigned mask) {
  RationalMatrix t(2 * n);
  for (int i = 0; i < n; ++i) {
    int s = (mask >> i) & 1u ? -1 : 1;
    t.at(i, i) = s;
    t.at(2 * n - 1 - i, 2 * n - 1 - i) = s;
  }
  return t;
}

}  // namespace metatheta

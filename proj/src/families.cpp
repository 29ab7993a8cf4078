#include "metatheta/families.hpp"

#include <algorithm>

namespace metatheta {

namespace {

int rprime(int n, int r) {
  if (r < 3 || r % 2 == 0) throw InputError("r must be odd and at least 3");
  if (r >= 2 * n) throw InputError("r must be less than 2n");
  return (r - 1) / 2;
}

std::vector<Root> without(const std::vector<Root>& all, const std::vector<Root>& drop) {
  std::vector<Root> out;
  for (const auto& x : all)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

std::vector<Root> concat(std::vector<Root> a, const std::vector<Root>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void check_descent(int n, int r, int a) {
  int rp = rprime(n, r);
  if (a < 1 || a > n - rp) throw InputError("a must lie in 1..n-(r-1)/2");
}

}  // namespace

std::vector<Root> shift_roots(const std::vector<Root>& roots, int off) {
  std::vector<Root> out;
  for (const auto& [i, j] : roots) out.emplace_back(i + off, j + off);
  return out;
}

std::vector<Root> roots_U(int n, int k) { return radical_roots(n, std::vector<int>(k, 1)); }

std::vector<Root> roots_U_k1(int n, int k) {
  std::vector<Root> out;
  for (const auto& [i, j] : roots_U(n, k))
    if (!(i == k && j > k && j <= n)) out.emplace_back(i, j);
  return out;
}

std::vector<Root> roots_L(int n, int a) { return radical_roots(n, {a}); }

std::vector<Root> roots_L0(int n, int a) {
  std::vector<Root> out;
  for (const auto& [i, j] : roots_L(n, a))
    if (!(i <= a && j == a + 1)) out.emplace_back(i, j);
  return out;
}

int uprime_l(int n, int r) { return n - rprime(n, r); }

std::vector<Root> roots_Uprime(int n, int l, bool odd) {
  std::vector<int> blocks;
  if (odd) {
    if (n % 2 == 0) throw InputError("odd layout needs odd n");
    blocks.push_back(1);
    blocks.insert(blocks.end(), (n - 1) / 2, 2);
  } else {
    if (2 * l > n) throw InputError("l must satisfy 2l <= n");
    blocks.assign(n - 2 * l, 1);
    blocks.insert(blocks.end(), l, 2);
  }
  return radical_roots(n, blocks);
}

std::vector<Root> roots_Z_full(int n, int l, bool odd) {
  std::vector<Root> out;
  const int o = n - 2 * l;
  for (int m = 1; m <= l - 1; ++m)
    for (int k = m; k <= l - 1; ++k)
      out.push_back(odd ? Root{2 * m - 1, 2 * k} : Root{2 * m + o, 2 * k + 1 + o});
  return out;
}

std::vector<Root> roots_Z(int n, int l, bool odd) {
  auto z = roots_Z_full(n, l, odd);
  return odd ? without(z, {{1, 2}}) : z;
}

std::vector<Root> roots_V1(int n, int l, bool odd) {
  std::vector<Root> out;
  const int o = n - 2 * l;
  for (int m = 1; m <= l - 1; ++m)
    for (int k = m - 1; k <= l - 2; ++k) {
      if (odd) {
        if (k >= 1) out.emplace_back(2 * k, 2 * m - 1);  // k = 0 names no entry
      } else {
        out.emplace_back(2 * k + 1 + o, 2 * m + o);
      }
    }
  return out;
}

std::vector<Root> roots_Uprime1(int n, int l, bool odd) {
  return without(roots_Uprime(n, l, odd), roots_Z_full(n, l, odd));
}

std::vector<Root> roots_U2nn0(int n, bool odd) {
  std::vector<Root> out;
  for (const auto& [i, j] : positive_roots(n)) {
    bool drop = odd ? (i >= 2 && i <= n && j >= n + 1 && j <= n + i - 1) : (i <= n && j >= n + 1 && j <= n + i);
    if (!drop) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Root> roots_Y(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (n + i + j <= 2 * n + 1) out.emplace_back(n + i, j);
  return out;
}

std::vector<Root> roots_Y0(int n) {
  if (n < 2) throw InputError("Y0 needs n >= 2");
  return shift_roots(roots_Y(n - 1), 1);
}

std::vector<Root> roots_U0(int n, int r, int a) {
  check_descent(n, r, a);
  const int b = n - (r - 1) / 2 - a, c = n - a - b;
  std::vector<Root> out;
  for (const auto& [i, j] : positive_roots(n))
    if (i <= a && j > a + c) out.emplace_back(i, j);
  return out;
}

std::vector<Root> roots_V0(int n, int r, int a) {
  check_descent(n, r, a);
  const int b = n - (r - 1) / 2 - a, c = n - a - b;
  return shift_roots(roots_U_k1(n - a, c), a);
}

std::vector<Root> roots_k_family(int n, int r, int a) {
  check_descent(n, r, a);
  const int b = n - (r - 1) / 2 - a, c = n - a - b;
  std::vector<Root> out;
  for (int i = 1; i < c; ++i)
    for (int j = 1; j <= a; ++j) out.emplace_back(a + i, j);
  return out;
}

std::vector<Root> roots_m_family(int n, int r, int a) {
  check_descent(n, r, a);
  const int b = n - (r - 1) / 2 - a, c = n - a - b;
  std::vector<Root> out;
  for (int i = 1; i <= a; ++i)
    for (int j = 2; j <= c; ++j) out.emplace_back(i, a + j);
  return out;
}

CharacterFunctional psi_descent_source(int n, int r) {
  const int rp = rprime(n, r);
  std::map<Root, Rational> w;
  for (int i = 1; i < rp; ++i) w[{i, i + 1}] = 1;
  w[{rp, 2 * n - rp + 1}] = 1;
  return CharacterFunctional::from_weights(n, w);
}

CharacterFunctional psi_V0(int n, int r, int a) {
  check_descent(n, r, a);
  const int b = n - (r - 1) / 2 - a;
  std::map<Root, Rational> w;
  for (int i = a + 1; i <= n - b - 1; ++i) w[{i, i + 1}] = 1;
  w[{n - b, n + b + 1}] = 1;
  return CharacterFunctional::from_weights(n, w);
}

CharacterFunctional psi_whittaker_source(int n, int r, const Rational& b) {
  const int rp = rprime(n, r), m = n - rp;
  auto chi = psi_descent_source(n, r);
  for (int i = 1; i < m; ++i) chi.weights[{i + rp, i + 1 + rp}] = 1;
  if (b != 0) chi.weights[{n, n + 1}] = b;
  return chi;
}

CharacterFunctional psi_Uprime(int n, int l, bool odd, const Rational& a, const Rational& b) {
  std::map<Root, Rational> w;
  if (odd) {
    for (int i = 1; i <= n - 2; ++i) w[{i, i + 2}] = 1;
  } else {
    for (int i = 1; i <= n - 2 * l; ++i) w[{i, i + 1}] = 1;
    for (int j = n - 2 * l + 1; j <= n - 2; ++j) w[{j, j + 2}] = 1;
  }
  w[{n - 1, n + 2}] += a;
  w[{n, n + 1}] += b;
  return CharacterFunctional::from_weights(n, w);
}

CharacterFunctional psi_Uprime_gamma(int n, bool odd) {
  std::map<Root, Rational> w;
  if (odd) {
    w[{1, 2}] = 1;
    for (int i = 2; i <= n - 2; ++i) w[{i, i + 2}] = 1;
  } else {
    for (int i = 1; i <= n - 2; ++i) w[{i, i + 2}] = 1;
  }
  w[{n - 1, n + 1}] = 1;
  return CharacterFunctional::from_weights(n, w);
}

CharacterFunctional psi_U2nn(int n) {
  std::map<Root, Rational> w;
  for (int i = 1; i < n; ++i) w[{i, i + 1}] = 1;
  return CharacterFunctional::from_weights(n, w);
}

CharacteredFamily descent_source(int n, int r, int a) {
  check_descent(n, r, a);
  const int rp = (r - 1) / 2;
  auto roots = concat(roots_U_k1(n, rp), shift_roots(roots_L(n - rp, a), rp));
  return {UnipotentFamily::from_roots(n, "U_{2n,r',1} L_{a}", roots), psi_descent_source(n, r)};
}

CharacteredFamily descent_target(int n, int r, int a) {
  auto roots = concat(concat(roots_U0(n, r, a), roots_V0(n, r, a)), roots_k_family(n, r, a));
  return {UnipotentFamily::from_roots(n, "U0 V0 k(y)", roots), psi_V0(n, r, a)};
}

CharacteredFamily whittaker_source(int n, int r, const Rational& b) {
  const int rp = rprime(n, r), m = n - rp;
  auto roots = concat(roots_U_k1(n, rp), shift_roots(roots_U(m, m), rp));
  return {UnipotentFamily::from_roots(n, "U_{2n,r',1} U_{2m,m}", roots), psi_whittaker_source(n, r, b)};
}

CharacteredFamily whittaker_target(int n, int r, const Rational& b) {
  const int l = uprime_l(n, r);
  const bool odd = r == n;
  auto roots = concat(roots_Uprime1(n, l, odd), roots_V1(n, l, odd));
  return {UnipotentFamily::from_roots(n, "U'_{l,1} V1", roots), psi_Uprime(n, l, odd, 1, b)};
}

UnipotentFamily sp6_V() { return UnipotentFamily::from_roots(3, "V", without(positive_roots(3), {{2, 3}})); }
UnipotentFamily sp6_R() { return UnipotentFamily::from_roots(3, "R", radical_roots(3, {2})); }

UnipotentFamily sp6_N() {
  UnipotentFamily f;
  f.n = 3;
  f.name = "N";
  f.directions.push_back(estar(3, 1, 2) + estar(3, 3, 4));
  f.labels.push_back("e*1,2+e*3,4");
  return f;
}

UnipotentFamily sp6_U1() {
  return UnipotentFamily::from_roots(3, "U1", without(positive_roots(3), {{2, 4}, {3, 4}}));
}
UnipotentFamily sp6_Y() { return UnipotentFamily::from_roots(3, "Y", {{4, 3}}); }
UnipotentFamily sp6_X() { return UnipotentFamily::from_roots(3, "X", {{2, 4}}); }

CharacterFunctional sp6_psi_R() { return CharacterFunctional::from_weights(3, {{{1, 3}, 1}, {{2, 4}, 1}}); }

CharacterFunctional sp6_psi_V(const Rational& alpha) {
  return CharacterFunctional::from_weights(3, {{{1, 2}, alpha}, {{1, 3}, 1}, {{2, 4}, 1}});
}

CharacterFunctional sp6_psi_V_general(const std::vector<Rational>& alpha) {
  if (alpha.size() != 4) throw InputError("expected four coefficients");
  return CharacterFunctional::from_weights(
      3, {{{1, 2}, alpha[0]}, {{1, 3}, alpha[1]}, {{3, 4}, alpha[2]}, {{2, 5}, alpha[3]}});
}

CharacterFunctional sp6_psi_U1() { return CharacterFunctional::from_weights(3, {{{1, 2}, 1}, {{2, 3}, 1}}); }

std::vector<RationalMatrix> sp6_levi_gl2_sl2() {
  std::vector<RationalMatrix> out;
  for (auto [i, j] : std::vector<Root>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}, {3, 4}, {4, 3}})
    out.push_back(estar(3, i, j));
  return out;
}

std::vector<RationalMatrix> sp6_levi_gl1_gl2() {
  std::vector<RationalMatrix> out;
  for (auto [i, j] : std::vector<Root>{{1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) out.push_back(estar(3, i, j));
  return out;
}

std::vector<RationalMatrix> sp6_diagonal_sl2() {
  return {estar(3, 1, 2) + estar(3, 3, 4), estar(3, 2, 1) + estar(3, 4, 3),
          estar(3, 1, 1) - estar(3, 2, 2) + estar(3, 3, 3)};
}

}  // namespace metatheta

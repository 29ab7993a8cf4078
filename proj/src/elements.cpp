#include "metatheta/elements.hpp"

#include <stdexcept>

#include "metatheta/lie.hpp"

namespace metatheta {

namespace {

RationalMatrix m2(long a, long b, long c, long d, long den = 1) {
  return RationalMatrix::from_rows({{make_rational(a, den), make_rational(b, den)},
                                    {make_rational(c, den), make_rational(d, den)}});
}

void need(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

void need_values(const ElementParams& p, std::size_t count, const std::string& name) {
  need(p.values.size() == count,
       name + " expects " + std::to_string(count) + " values, got " + std::to_string(p.values.size()));
}

int rprime_checked(const ElementParams& p) {
  need(p.r >= 3 && p.r % 2 == 1, "r must be odd and at least 3");
  need(p.r < 2 * p.n, "r must be less than 2n");
  return (p.r - 1) / 2;
}

// Mirror a first-half permutation to all 2n positions.
std::vector<int> mirrored(int n, const std::vector<int>& first) {
  std::vector<int> perm(2 * n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    perm[j] = first[j];
    perm[2 * n + 1 - j] = 2 * n + 1 - first[j];
  }
  return perm;
}

RationalMatrix w_a(int n, int r, int a) {
  const int rp = (r - 1) / 2;
  need(a >= 1 && a <= n - rp, "a must lie in 1..n-(r-1)/2");
  const int b = n - rp - a, c = n - a - b;
  std::vector<int> first(n + 1, 0);
  for (int k = 1; k <= a; ++k) first[c + k] = k;
  for (int k = 1; k <= c; ++k) first[k] = a + k;
  for (int k = a + c + 1; k <= n; ++k) first[k] = k;
  return signed_permutation(mirrored(n, first), {});
}

RationalMatrix w0(int n, int r) {
  const int rp = (r - 1) / 2, l = n - rp, off = n - 2 * l + 1;
  need(off >= 0, "w0 needs r >= n");
  RationalMatrix g(n);
  for (int i = 0; i < off; ++i) g.at(i, i) = 1;
  for (int t = 0; t < l; ++t) g.at(off + 2 * t, off + l + t - 1) = 1;  // nu_{2t+1, l+t}
  for (int t = 1; t < l; ++t) g.at(off + 2 * t - 1, off + t - 1) = 1;  // nu_{2t, t}
  return embed_gl(g);
}

// Row i carries +1 in column 2i-1 for i <= n; the remaining signs are forced by the form.
std::vector<RationalMatrix> w0_prime_candidates(int n) {
  std::vector<int> perm(2 * n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    perm[2 * i - 1] = i;
    perm[2 * n + 2 - 2 * i] = 2 * n + 1 - i;
  }
  std::vector<int> free_cols;
  for (int c = 1; c <= 2 * n; ++c)
    if (perm[c] > n) free_cols.push_back(c);
  std::vector<RationalMatrix> out;
  for (unsigned mask = 0; mask < (1u << free_cols.size()); ++mask) {
    std::vector<int> signs(2 * n + 1, 1);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      if ((mask >> k) & 1u) signs[free_cols[k]] = -1;
    RationalMatrix w = signed_permutation(perm, signs);
    if (is_symplectic_matrix(n, w)) out.push_back(w);
  }
  return out;
}

RationalMatrix w0_prime(int n) {
  auto c = w0_prime_candidates(n);
  if (c.size() != 1) throw std::logic_error("w0_prime sign pattern is not unique");
  return c.front();
}

RationalMatrix gamma0(int n) {
  std::vector<RationalMatrix> blocks;
  RationalMatrix g;
  if (n % 2 == 0) {
    g = gamma_even_factor_lower() * gamma_even_factor_upper();
  } else {
    g = gamma_odd_factor_lower() * gamma_odd_factor_upper();
    blocks.push_back(RationalMatrix::identity(1));
  }
  for (int k = 0; k < n / 2; ++k) blocks.push_back(g);
  return embed_gl(RationalMatrix::block_diagonal(blocks));
}

RationalMatrix sum_exp(int n, const std::vector<std::pair<Root, Rational>>& terms) {
  RationalMatrix d(2 * n);
  for (const auto& [root, c] : terms) d += c * estar(n, root.first, root.second);
  return nilpotent_exponential(d);
}

}  // namespace

RationalMatrix embed_gl(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix k(n);
  for (std::size_t i = 0; i < n; ++i) k.at(i, n - 1 - i) = 1;
  RationalMatrix star = k * a.inverse().transpose() * k;
  return RationalMatrix::block_diagonal({a, star});
}

RationalMatrix signed_permutation(const std::vector<int>& perm, const std::vector<int>& signs) {
  const std::size_t size = perm.size() - 1;
  RationalMatrix m(size);
  for (std::size_t j = 1; j <= size; ++j) {
    int s = signs.empty() ? 1 : signs[j];
    m.at(perm[j] - 1, j - 1) = s;
  }
  return m;
}

RationalMatrix gamma_even_factor_lower() { return m2(1, 0, -1, 1); }
RationalMatrix gamma_even_factor_upper() { return m2(2, 1, 0, 2, 2); }
RationalMatrix gamma_odd_factor_lower() { return m2(1, 0, 1, 1); }
RationalMatrix gamma_odd_factor_upper() { return m2(2, -1, 0, 2, 2); }
std::vector<RationalMatrix> gamma_odd_three_factors() {
  return {m2(1, 1, 0, 1), m2(0, -1, 1, 0), m2(2, 1, 0, 2, 2)};
}

int w0_prime_solution_count(int n) { return static_cast<int>(w0_prime_candidates(n).size()); }

const std::vector<std::string>& element_names() {
  static const std::vector<std::string> names = {
      "w_a",    "w0",      "w0_prime", "w0_star", "gamma_even", "gamma_odd", "gamma0",
      "j",      "k",       "m",        "y_of_h",  "n_of_x",     "z_of_k",    "y_of_m",
      "t",      "t_of_a",  "embed_sp", "w1",      "w2",         "w3"};
  return names;
}

SymplecticElement build_element(const std::string& name, const ElementParams& p) {
  SymplecticElement e;
  e.name = name;
  e.n = p.n;
  auto sp6 = [&] {
    need(p.n == 3 || p.n == 0, name + " lives in Sp_6");
    e.n = 3;
  };
  if (name == "gamma_even" || name == "gamma_odd") {
    e.n = 1;
  } else if (name == "n_of_x" || name == "z_of_k" || name == "y_of_m" || name == "t_of_a" || name == "w1" ||
             name == "w2" || name == "w3") {
    sp6();
  } else {
    need(p.n >= 1, "n must be positive");
    need(p.n <= 32, "n is too large for exact dense matrices");
  }
  const int n = e.n;

  if (name == "w_a") {
    rprime_checked(p);
    e.mat = w_a(n, p.r, p.a);
  } else if (name == "w0") {
    rprime_checked(p);
    need(p.r >= n, "w0 needs n <= r");
    e.mat = w0(n, p.r);
  } else if (name == "w0_prime") {
    need(n <= 12, "w0_prime sign search is limited to n <= 12");
    e.mat = w0_prime(n);
  } else if (name == "w0_star") {
    need(n >= 2 && n <= 13, "w0_star needs 2 <= n <= 13");
    e.mat = RationalMatrix::block_diagonal(
        {RationalMatrix::identity(1), w0_prime(n - 1), RationalMatrix::identity(1)});
  } else if (name == "gamma_even") {
    e.mat = gamma_even_factor_lower() * gamma_even_factor_upper();
  } else if (name == "gamma_odd") {
    e.mat = gamma_odd_factor_lower() * gamma_odd_factor_upper();
  } else if (name == "gamma0") {
    e.mat = gamma0(n);
  } else if (name == "j") {
    const int rp = rprime_checked(p);
    need_values(p, static_cast<std::size_t>(n - rp), name);
    std::vector<std::pair<Root, Rational>> terms;
    for (int k = 1; k <= n - rp; ++k) terms.push_back({{rp, rp + k}, p.values[k - 1]});
    e.mat = sum_exp(n, terms);
  } else if (name == "k" || name == "m") {
    const int rp = rprime_checked(p);
    need(p.a >= 1 && p.a <= n - rp, "a must lie in 1..n-(r-1)/2");
    const int a = p.a, c = n - a - (n - rp - a);
    need_values(p, static_cast<std::size_t>((c - 1) * a), name);
    std::vector<std::pair<Root, Rational>> terms;
    std::size_t idx = 0;
    if (name == "k") {
      // (c-1) x a block under the identity, bottom row of y zero
      for (int i = 1; i < c; ++i)
        for (int j = 1; j <= a; ++j) terms.push_back({{a + i, j}, p.values[idx++]});
    } else {
      // a x (c-1) block, first column of z zero
      for (int i = 1; i <= a; ++i)
        for (int j = 2; j <= c; ++j) terms.push_back({{i, a + j}, p.values[idx++]});
    }
    e.mat = sum_exp(n, terms);
  } else if (name == "y_of_h") {
    need(n >= 2, "y_of_h needs n >= 2");
    need_values(p, 1, name);
    need(p.values[0] != 0, "h must be nonzero");
    std::vector<Rational> diag(n, 1);
    for (int i = 2; i < n; ++i) diag[i] = 1 / p.values[0];
    RationalMatrix g(n);
    for (int i = 0; i < n; ++i) g.at(i, i) = diag[i];
    e.mat = embed_gl(g);
  } else if (name == "n_of_x") {
    need_values(p, 1, name);
    e.mat = sum_exp(3, {{{1, 2}, p.values[0]}, {{3, 4}, p.values[0]}});
  } else if (name == "z_of_k") {
    need_values(p, 1, name);
    e.mat = sum_exp(3, {{{3, 4}, p.values[0]}});
  } else if (name == "y_of_m") {
    need_values(p, 1, name);
    e.mat = sum_exp(3, {{{2, 3}, p.values[0]}});
  } else if (name == "t") {
    need_values(p, static_cast<std::size_t>(n), name);
    RationalMatrix g(n);
    for (int i = 0; i < n; ++i) {
      need(p.values[i] != 0, "torus entries must be nonzero");
      g.at(i, i) = p.values[i];
    }
    e.mat = embed_gl(g);
  } else if (name == "t_of_a") {
    need_values(p, 1, name);
    need(p.values[0] != 0, "a must be nonzero");
    Rational a = p.values[0], ai = 1 / a;
    RationalMatrix g(3);
    g.at(0, 0) = a;
    g.at(1, 1) = ai;
    g.at(2, 2) = a;
    e.mat = embed_gl(g);
  } else if (name == "embed_sp") {
    const int rp = rprime_checked(p);
    need(p.inner.has_value(), "embed_sp needs an inner matrix");
    need(p.inner->size() == static_cast<std::size_t>(2 * (n - rp)), "inner matrix must have size 2n-r+1");
    need(is_symplectic_matrix(n - rp, *p.inner), "inner matrix is not symplectic");
    e.mat = RationalMatrix::block_diagonal(
        {RationalMatrix::identity(rp), *p.inner, RationalMatrix::identity(rp)});
  } else if (name == "w1") {
    e.mat = signed_permutation({0, 2, 1, 3, 4, 6, 5}, {});
  } else if (name == "w2") {
    e.mat = signed_permutation({0, 1, 3, 2, 5, 4, 6}, {});
  } else if (name == "w3") {
    // column 3 -> row 4 with sign -1, column 4 -> row 3
    e.mat = signed_permutation({0, 1, 2, 4, 3, 5, 6}, {0, 1, 1, -1, 1, 1, 1});
  } else {
    throw InputError("unknown element '" + name + "'");
  }
  if (!is_symplectic_matrix(n, e.mat)) throw std::logic_error("catalog element " + name + " is not symplectic");
  return e;
}

}  // namespace metatheta

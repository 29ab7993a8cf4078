#include "metatheta/identities.hpp"

#include <array>
#include <functional>
#include <stdexcept>

#include "metatheta/elements.hpp"

namespace metatheta {

bool verify_product_decomposition(const UnipotentFamily& whole, const UnipotentFamily& left,
                                  const UnipotentFamily& right) {
  if (!bracket_closed(left) || !bracket_closed(right)) return false;
  UnipotentFamily both = join("left*right", {left, right});
  const std::size_t d = both.dim();
  return d == left.dim() + right.dim() && d == whole.dim() && span_contains(whole, both);
}

RootExchangeReport root_exchange_report(const UnipotentFamily& x, const UnipotentFamily& y,
                                        const CharacteredFamily& ambient) {
  RootExchangeReport rep;
  rep.x_abelian = is_abelian(x);
  rep.y_abelian = is_abelian(y);
  Span amb = ambient.family.span();
  rep.brackets_in_ambient = true;
  std::vector<RationalVector> pairing;
  for (const auto& dx : x.directions) {
    RationalVector row;
    for (const auto& dy : y.directions) {
      RationalMatrix b = commutator(dx, dy);
      if (!amb.contains(flatten(b))) rep.brackets_in_ambient = false;
      row.push_back(ambient.character(b));
    }
    pairing.push_back(std::move(row));
  }
  rep.pairing_rank = rank_of(pairing);
  const std::size_t dx = x.dim(), dy = y.dim();
  rep.nondegenerate = dx > 0 && dx == dy && rep.pairing_rank == dx;
  return rep;
}

bool root_exchange_check(const UnipotentFamily& x, const UnipotentFamily& y, const CharacteredFamily& ambient) {
  return root_exchange_report(x, y, ambient).ok();
}

StabilizerReport stabilizer(const std::vector<RationalMatrix>& levi, const UnipotentFamily& fam,
                            const CharacterFunctional& chi) {
  if (levi.empty()) throw InputError("empty levi basis");
  const std::size_t size = levi.front().size();
  std::vector<RationalVector> flat;
  for (const auto& l : levi) {
    if (l.size() != size) throw InputError("levi basis matrices differ in size");
    flat.push_back(flatten(l));
  }
  if (rank_of(flat) != levi.size()) throw InputError("levi basis is linearly dependent");
  if (fam.size() == 0 || fam.dim() != fam.size()) throw InputError("family directions are degenerate");
  Span fs = fam.span();
  // Row k, column a: chi([levi_a, D_k]).
  std::vector<RationalVector> rows(fam.size(), RationalVector(levi.size()));
  for (std::size_t a = 0; a < levi.size(); ++a)
    for (std::size_t k = 0; k < fam.size(); ++k) {
      RationalMatrix b = commutator(levi[a], fam.directions[k]);
      if (!fs.contains(flatten(b))) throw InputError("levi does not normalize the family");
      rows[k][a] = chi(b);
    }
  StabilizerReport rep;
  rep.levi_dim = levi.size();
  for (const auto& v : nullspace(rows, levi.size())) {
    RationalMatrix m(size);
    for (std::size_t a = 0; a < levi.size(); ++a)
      if (v[a] != 0) m += v[a] * levi[a];
    rep.basis.push_back(std::move(m));
  }
  rep.dimension = rep.basis.size();
  return rep;
}

std::size_t stabilizer_dimension(const std::vector<RationalMatrix>& levi, const UnipotentFamily& fam,
                                 const CharacterFunctional& chi) {
  return stabilizer(levi, fam, chi).dimension;
}

bool HeisenbergReport::ok() const {
  const std::size_t expect = static_cast<std::size_t>(2 * (m - k) + 1);
  const bool shape = m == k ? derived_dim == 0 : derived_dim == 1;
  return kernel_normal && two_step && shape && center_dim == 1 && dimension == expect;
}

HeisenbergReport heisenberg_structure(int m, int k) {
  if (k < 1 || k > m) throw InputError("need 1 <= k <= m");
  HeisenbergReport rep;
  rep.m = m;
  rep.k = k;
  auto whole = UnipotentFamily::from_roots(m, "U_k", roots_U(m, k));
  auto kernel = UnipotentFamily::from_roots(m, "U_k-1", roots_U(m, k - 1));
  Span ks = kernel.span();
  rep.kernel_normal = true;
  for (const auto& d : whole.directions)
    for (const auto& e : kernel.directions)
      if (!ks.contains(flatten(commutator(d, e)))) rep.kernel_normal = false;

  std::vector<RationalMatrix> quot;
  for (int j = k + 1; j <= 2 * m + 1 - k; ++j) {
    quot.push_back(estar(m, k, j));
    rep.coordinates.push_back("e*" + std::to_string(k) + "," + std::to_string(j));
  }
  std::vector<RationalVector> reduced;
  for (const auto& q : quot) reduced.push_back(ks.reduce(flatten(q)));
  rep.dimension = rank_of(reduced);

  const std::size_t len = static_cast<std::size_t>(4 * m * m);
  Span derived(len);
  std::vector<std::vector<RationalVector>> br(quot.size(), std::vector<RationalVector>(quot.size()));
  for (std::size_t a = 0; a < quot.size(); ++a)
    for (std::size_t b = 0; b < quot.size(); ++b) {
      br[a][b] = ks.reduce(flatten(commutator(quot[a], quot[b])));
      derived.add(br[a][b]);
    }
  rep.derived_dim = derived.dim();
  // Center: coefficient vectors c with sum_a c_a [q_a, q_b] = 0 mod kernel for every b.
  std::vector<RationalVector> rows;
  for (std::size_t b = 0; b < quot.size(); ++b)
    for (std::size_t t = 0; t < len; ++t) {
      RationalVector row(quot.size());
      bool any = false;
      for (std::size_t a = 0; a < quot.size(); ++a) {
        row[a] = br[a][b][t];
        if (row[a] != 0) any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  auto center = nullspace(rows, quot.size());
  rep.center_dim = center.size();
  // Two-step: every bracket is central.
  rep.two_step = true;
  Span cs(len);
  for (const auto& c : center) {
    RationalVector v(len);
    for (std::size_t a = 0; a < quot.size(); ++a)
      if (c[a] != 0)
        for (std::size_t t = 0; t < len; ++t) v[t] += c[a] * reduced[a][t];
    cs.add(v);
  }
  for (const auto& d : derived.basis())
    if (!cs.contains(d)) rep.two_step = false;
  if (center.size() == 1) {
    for (std::size_t a = 0; a < quot.size(); ++a)
      if (center[0][a] != 0) {
        if (!rep.center.empty()) rep.center += "+";
        rep.center += rep.coordinates[a];
      }
  }
  return rep;
}

Rational modulus_character_exponent(int n, int a, const std::vector<Rational>& pattern) {
  if (n < 1) throw InputError("n must be positive");
  if (static_cast<int>(pattern.size()) != n) throw InputError("torus pattern must have n entries");
  if (a < 0 || a > n) throw InputError("a must lie in 0..n");
  if (a == 0) return 0;
  auto weight = [&](int i) -> Rational { return i <= n ? pattern[i - 1] : Rational(-pattern[2 * n - i]); };
  Rational total = 0;
  for (const auto& [i, j] : roots_L(n, a)) total += weight(i) - weight(j);
  return total;
}

Rational odd_case_expansion_coefficient() { return make_rational(-1, 2); }
Rational whittaker_b() { return make_rational(-1, 4); }

namespace {

struct StepData {
  RationalMatrix w;
  CharacteredFamily source, target;
};

bool valid_r(int n, int r) { return r >= 3 && r % 2 == 1 && r < 2 * n; }

const std::vector<TransportStepInfo> kSteps = {
    {"identity", "trivial conjugation leaves any family fixed", false},
    {"descent-weyl", "constant term: conjugation by w_a onto U0 V0 k(y)", true},
    {"whittaker-weyl", "Whittaker coefficient: conjugation by w0 onto U'_{l,1} V1", false},
    {"whittaker-gamma-even", "r = n+1: gamma_0 turns psi_{U'_l,1,-1/4} into psi_{U'_l}", false},
    {"whittaker-long-weyl-even", "r = n+1: w0' sends (U'_l, psi_{U'_l}) onto U_{2n,n,0} Y", false},
    {"whittaker-gamma-odd", "r = n odd: gamma_0 absorbs the z(y) expansion", false},
    {"whittaker-long-weyl-odd", "r = n odd: w0* sends (U'_l, psi_{U'_l}) onto U_{2n,n,0} Y0", false},
    {"sp6-reflection", "Sp_6: U1 Y = (w3 w2) V (w3 w2)^{-1}", false},
};

StepData step_data(const std::string& step, int n, int r, int a) {
  const Rational b = whittaker_b();
  if (step == "identity") {
    auto src = descent_source(n, r, a);
    return {RationalMatrix::identity(2 * n), src, src};
  }
  if (step == "descent-weyl")
    return {build_element("w_a", {n, r, a, {}, {}}).mat, descent_source(n, r, a), descent_target(n, r, a)};
  if (step == "whittaker-weyl")
    return {build_element("w0", {n, r, 0, {}, {}}).mat, whittaker_source(n, r, b), whittaker_target(n, r, b)};
  if (step == "whittaker-gamma-even" || step == "whittaker-gamma-odd") {
    const bool odd = step == "whittaker-gamma-odd";
    const int l = odd ? (n + 1) / 2 : n / 2;
    auto fam = UnipotentFamily::from_roots(n, "U'_l", roots_Uprime(n, l, odd));
    auto chi = psi_Uprime(n, l, odd, 1, b);
    if (odd) chi.weights[{1, 2}] = odd_case_expansion_coefficient();
    return {build_element("gamma0", {n, 0, 0, {}, {}}).mat, {fam, chi}, {fam, psi_Uprime_gamma(n, odd)}};
  }
  if (step == "whittaker-long-weyl-even" || step == "whittaker-long-weyl-odd") {
    const bool odd = step == "whittaker-long-weyl-odd";
    const int l = odd ? (n + 1) / 2 : n / 2;
    auto fam = UnipotentFamily::from_roots(n, "U'_l", roots_Uprime(n, l, odd));
    auto tgt_roots = roots_U2nn0(n, odd);
    auto lower = odd ? roots_Y0(n) : roots_Y(n);
    tgt_roots.insert(tgt_roots.end(), lower.begin(), lower.end());
    auto tgt = UnipotentFamily::from_roots(n, odd ? "U_{2n,n,0} Y0" : "U_{2n,n,0} Y", tgt_roots);
    auto w = build_element(odd ? "w0_star" : "w0_prime", {n, 0, 0, {}, {}}).mat;
    return {w, {fam, psi_Uprime_gamma(n, odd)}, {tgt, psi_U2nn(n)}};
  }
  if (step == "sp6-reflection") {
    auto w = build_element("w3", {}).mat * build_element("w2", {}).mat;
    return {w, {sp6_V(), sp6_psi_V(0)}, {join("U1 Y", {sp6_U1(), sp6_Y()}), sp6_psi_U1()}};
  }
  throw InputError("unknown step '" + step + "'");
}

}  // namespace

const std::vector<TransportStepInfo>& transport_steps() { return kSteps; }

bool transport_applicable(const std::string& step, int n, int r, int a) {
  if (n < 1 || n > 8) return false;
  if (step == "identity" || step == "descent-weyl")
    return valid_r(n, r) && a >= 1 && a <= n - (r - 1) / 2;
  if (step == "whittaker-weyl") return valid_r(n, r) && r >= n;
  if (step == "whittaker-gamma-even" || step == "whittaker-long-weyl-even")
    return n >= 2 && n % 2 == 0 && r == n + 1;
  if (step == "whittaker-gamma-odd" || step == "whittaker-long-weyl-odd") return n >= 3 && n % 2 == 1 && r == n;
  if (step == "sp6-reflection") return n == 3;
  return false;
}

std::vector<TransportInstance> transport_instances(int max_n) {
  std::vector<TransportInstance> out;
  for (const auto& s : kSteps) {
    for (int n = 1; n <= max_n; ++n)
      for (int r = 3; r < 2 * n; r += 2) {
        if (s.id == "sp6-reflection" && r != 3) continue;
        if (s.needs_a || s.id == "identity") {
          const int top = s.id == "identity" ? 1 : n - (r - 1) / 2;
          for (int a = 1; a <= top; ++a)
            if (transport_applicable(s.id, n, r, a)) out.push_back({s.id, n, r, a});
        } else if (transport_applicable(s.id, n, r, 0)) {
          out.push_back({s.id, n, r, 0});
        }
      }
  }
  return out;
}

TransportReport verify_integral_transport(const std::string& step, int n, int r, int a) {
  const TransportStepInfo* info = nullptr;
  for (const auto& s : kSteps)
    if (s.id == step) info = &s;
  if (!info) throw InputError("unknown step '" + step + "'");
  if (!transport_applicable(step, n, r, info->needs_a || step == "identity" ? a : 0))
    throw InputError("step '" + step + "' does not apply to n=" + std::to_string(n) + " r=" + std::to_string(r) +
                     " a=" + std::to_string(a));
  StepData d = step_data(step, n, r, a);
  TransportReport rep;
  rep.step = step;
  rep.anchor = info->anchor;
  rep.n = n;
  rep.r = r;
  rep.a = info->needs_a || step == "identity" ? a : 0;
  auto img = conjugate_family(d.w, d.source.family, d.source.character);
  rep.closed = img.closed;
  rep.source_dim = d.source.family.dim();
  rep.target_dim = d.target.family.dim();
  Span is = img.family.span(), ts = d.target.family.span();
  for (std::size_t k = 0; k < d.target.family.size(); ++k)
    if (!is.contains(flatten(d.target.family.directions[k]))) rep.missing_in_image.push_back(d.target.family.labels[k]);
  for (std::size_t k = 0; k < img.family.size(); ++k)
    if (!ts.contains(flatten(img.family.directions[k]))) rep.extra_in_image.push_back(d.source.family.labels[k]);
  rep.span_equal = rep.missing_in_image.empty() && rep.extra_in_image.empty();

  const auto& tf = d.target.family;
  for (std::size_t k = 0; k < tf.size(); ++k) {
    Rational lhs = img.character(tf.directions[k]), rhs = d.target.character(tf.directions[k]);
    if (lhs != rhs) rep.character_mismatch.push_back(tf.labels[k] + ": " + to_string(lhs) + " vs " + to_string(rhs));
  }
  rep.character_exact = rep.character_mismatch.empty();
  if (rep.character_exact) {
    rep.character_matches = true;
  } else {
    for (unsigned mask = 1; mask < (1u << n) && !rep.character_matches; ++mask) {
      RationalMatrix t = sign_torus(n, mask);
      bool all = true;
      for (const auto& dir : tf.directions)
        if (img.character(dir) != d.target.character(t * dir * t)) {
          all = false;
          break;
        }
      if (all) {
        rep.character_matches = true;
        rep.sign_mask = mask;
      }
    }
  }
  return rep;
}

std::vector<RootExchangeCase> root_exchange_catalog() {
  std::vector<RootExchangeCase> out;
  for (auto [n, r, a] : std::vector<std::array<int, 3>>{{3, 5, 1}, {4, 5, 1}, {4, 5, 2}}) {
    auto amb_roots = roots_U0(n, r, a);
    auto v0 = roots_V0(n, r, a);
    amb_roots.insert(amb_roots.end(), v0.begin(), v0.end());
    out.push_back({"descent-k-m n=" + std::to_string(n) + " r=" + std::to_string(r) + " a=" + std::to_string(a),
                   "constant term: k(y) against m(z) with first column zero",
                   UnipotentFamily::from_roots(n, "k(y)", roots_k_family(n, r, a)),
                   UnipotentFamily::from_roots(n, "m(z)", roots_m_family(n, r, a)),
                   {UnipotentFamily::from_roots(n, "U0 V0", amb_roots), psi_V0(n, r, a)}});
  }
  for (auto [n, r] : std::vector<std::array<int, 2>>{{4, 5}, {5, 5}, {5, 7}, {6, 9}}) {
    const bool odd = r == n;
    const int l = uprime_l(n, r);
    auto amb = odd ? UnipotentFamily::from_roots(n, "U'_{l,0}", [&] {
      std::vector<Root> v;
      for (auto x : roots_Uprime(n, l, true))
        if (x != Root{1, 2}) v.push_back(x);
      return v;
    }())
                   : UnipotentFamily::from_roots(n, "U'_{l,1}", roots_Uprime1(n, l, false));
    out.push_back({"whittaker-z-v1 n=" + std::to_string(n) + " r=" + std::to_string(r),
                   "Whittaker coefficient: Z_l against V1", UnipotentFamily::from_roots(n, "Z_l", roots_Z(n, l, odd)),
                   UnipotentFamily::from_roots(n, "V1", roots_V1(n, l, odd)),
                   {amb, psi_Uprime(n, l, odd, 1, whittaker_b())}});
  }
  out.push_back({"sp6-x-y", "Sp_6: X = {I + k(e24 + e35)} against Y = {I + m e43}", sp6_X(), sp6_Y(),
                 {sp6_U1(), sp6_psi_U1()}});
  {
    std::vector<Root> r_roots;
    for (auto x : radical_roots(3, {2}))
      if (x != Root{2, 3}) r_roots.push_back(x);
    auto psi = sp6_psi_R();
    psi.weights[{1, 2}] = 1;  // psi_alpha(n(x)) with alpha = 1
    out.push_back({"sp6-rn-v", "Sp_6: y(m) against z(k) identifies RN with V",
                   UnipotentFamily::from_roots(3, "y(m)", {{2, 3}}), UnipotentFamily::from_roots(3, "z(k)", {{3, 4}}),
                   {join("R' N", {UnipotentFamily::from_roots(3, "R'", r_roots), sp6_N()}), psi}});
  }
  return out;
}

}  // namespace metatheta

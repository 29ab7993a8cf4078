// Exact checks of group-theoretic identities: factorizations, root exchanges, stabilizers,
// Heisenberg quotients, modulus characters and conjugation transport.
#pragma once

#include <string>
#include <vector>

#include "metatheta/families.hpp"

namespace metatheta {

/// span(whole) = span(left) (+) span(right), both factors closed under bracket.
bool verify_product_decomposition(const UnipotentFamily& whole, const UnipotentFamily& left,
                                  const UnipotentFamily& right);

struct RootExchangeReport {
  bool x_abelian = false;
  bool y_abelian = false;
  bool brackets_in_ambient = false;
  bool nondegenerate = false;
  std::size_t pairing_rank = 0;
  bool ok() const { return x_abelian && y_abelian && brackets_in_ambient && nondegenerate; }
};

/// Heisenberg-pair condition: X and Y abelian, [X,Y] inside the ambient family, and
/// (x,y) -> chi([x,y]) nondegenerate on span(X) x span(Y).
RootExchangeReport root_exchange_report(const UnipotentFamily& x, const UnipotentFamily& y,
                                        const CharacteredFamily& ambient);
bool root_exchange_check(const UnipotentFamily& x, const UnipotentFamily& y, const CharacteredFamily& ambient);

struct StabilizerReport {
  std::size_t levi_dim = 0;
  std::size_t dimension = 0;
  std::vector<RationalMatrix> basis;
};

/// Lie algebra stabilizer {l : chi([l, D]) = 0 for all D in the family}. The levi basis must be
/// independent and normalize the family; otherwise InputError.
StabilizerReport stabilizer(const std::vector<RationalMatrix>& levi, const UnipotentFamily& fam,
                            const CharacterFunctional& chi);
std::size_t stabilizer_dimension(const std::vector<RationalMatrix>& levi, const UnipotentFamily& fam,
                                 const CharacterFunctional& chi);

struct HeisenbergReport {
  int m = 0, k = 0;
  std::size_t dimension = 0;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
  bool kernel_normal = false;
  bool two_step = false;
  std::vector<std::string> coordinates;
  std::string center;
  bool ok() const;
};

/// Structure of U_{2m,k} / U_{2m,k-1}.
HeisenbergReport heisenberg_structure(int m, int k);

/// Sum of root weights over the radical of P_{2n,a}, on the torus with first-half exponents
/// `pattern` (length n; the second half is mirrored with opposite sign).
Rational modulus_character_exponent(int n, int a, const std::vector<Rational>& pattern);

struct TransportReport {
  std::string step;
  std::string anchor;
  int n = 0, r = 0, a = 0;
  bool closed = false;
  bool span_equal = false;
  bool character_exact = false;
  bool character_matches = false;  // exact, or after a +-1 torus conjugation
  unsigned sign_mask = 0;
  std::size_t source_dim = 0, target_dim = 0;
  std::vector<std::string> missing_in_image;   // target directions not in w.source.w^-1
  std::vector<std::string> extra_in_image;     // image directions not in target
  std::vector<std::string> character_mismatch; // "label: transported vs target" at mask 0
  bool ok() const { return closed && span_equal && character_matches; }
};

struct TransportStepInfo {
  std::string id;
  std::string anchor;
  bool needs_a = false;
};

const std::vector<TransportStepInfo>& transport_steps();

/// Default (n, r, a) instances of each step used by the suites.
struct TransportInstance {
  std::string step;
  int n, r, a;
};
std::vector<TransportInstance> transport_instances(int max_n);

/// Whether (n, r, a) is in the domain of the step.
bool transport_applicable(const std::string& step, int n, int r, int a);

/// Throws InputError for unknown steps or parameters outside the domain.
TransportReport verify_integral_transport(const std::string& step, int n, int r, int a = 1);

/// Coefficient of u_{1,2} carried by the z(y) expansion in the odd Whittaker case.
Rational odd_case_expansion_coefficient();
/// The fixed value of b in psi_{U'_l,1,b} used before the gamma_0 moves.
Rational whittaker_b();

struct RootExchangeCase {
  std::string id;
  std::string anchor;
  UnipotentFamily x, y;
  CharacteredFamily ambient;
};
std::vector<RootExchangeCase> root_exchange_catalog();

}  // namespace metatheta

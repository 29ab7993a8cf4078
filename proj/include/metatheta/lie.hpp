// The symplectic form, Lie algebra directions, unipotent families and additive characters.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "metatheta/matrix.hpp"

namespace metatheta {

using Root = std::pair<int, int>;  // 1-based (row, column)

/// Gram matrix of <x,y> = sum_{i<=n} (x_i y_{2n-i+1} - x_{n+i} y_{n-i+1}).
RationalMatrix symplectic_form_matrix(int n);

/// Elementary matrix e_{i,j} of the given size, 1-based.
RationalMatrix elementary(int size, int i, int j);

/// Lie algebra element e_{i,j} - eps_i eps_j e_{j',i'} with k' = 2n+1-k and eps = +1 on the first
/// half, -1 on the second. When (j',i') = (i,j) it is just e_{i,j}.
RationalMatrix estar(int n, int i, int j);

bool in_lie_algebra(int n, const RationalMatrix& d);
bool is_symplectic_matrix(int n, const RationalMatrix& g);

/// exp of a nilpotent matrix as a finite sum. Throws InputError if d is not nilpotent.
RationalMatrix nilpotent_exponential(const RationalMatrix& d);

RationalVector flatten(const RationalMatrix& m);
RationalMatrix unflatten(const RationalVector& v, std::size_t size);

/// Positive roots of Sp_{2n} as (i,j) with i<j, i+j<=2n+1; n^2 of them.
std::vector<Root> positive_roots(int n);

/// Roots of the unipotent radical of the standard parabolic whose Levi has GL blocks of the given
/// sizes on the first half (and an Sp block on whatever is left).
std::vector<Root> radical_roots(int n, const std::vector<int>& gl_blocks);

/// Parameterized unipotent subgroup described by its Lie algebra directions.
struct UnipotentFamily {
  int n = 0;
  std::string name;
  std::vector<RationalMatrix> directions;
  std::vector<std::string> labels;  // one per direction, for reports

  static UnipotentFamily from_roots(int n, std::string name, const std::vector<Root>& roots);
  std::size_t size() const { return directions.size(); }
  Span span() const;
  std::size_t dim() const { return span().dim(); }
};

/// Concatenate the directions of several families in the same ambient group.
UnipotentFamily join(std::string name, const std::vector<UnipotentFamily>& parts);

/// Linear functional D -> sum c_{ij} D_{ij} on the matrix coordinates (1-based slots).
struct CharacterFunctional {
  int n = 0;
  std::map<Root, Rational> weights;

  static CharacterFunctional from_weights(int n, const std::map<Root, Rational>& weights);
  Rational operator()(const RationalMatrix& d) const;
  RationalMatrix coefficient_matrix() const;
  static CharacterFunctional from_coefficient_matrix(int n, const RationalMatrix& c);
  std::string str() const;
};

bool is_abelian(const UnipotentFamily& fam);
bool bracket_closed(const UnipotentFamily& fam);
bool all_in_lie_algebra(const UnipotentFamily& fam);
/// chi vanishes on every bracket of two family directions, so it is a character of the group.
bool is_character(const UnipotentFamily& fam, const CharacterFunctional& chi);

/// a and b have the same span.
bool same_span(const UnipotentFamily& a, const UnipotentFamily& b);
/// Every direction of sub lies in the span of whole.
bool span_contains(const UnipotentFamily& whole, const UnipotentFamily& sub);

/// Two functionals agree on every direction of the family.
bool agree_on(const UnipotentFamily& fam, const CharacterFunctional& a, const CharacterFunctional& b);

struct ConjugationResult {
  UnipotentFamily family;           // w D w^{-1}
  CharacterFunctional character;    // chi'(D') = chi(w^{-1} D' w)
  bool closed = false;              // image closed under bracket
  bool rank_preserved = false;
};

/// Throws InputError if w is singular or sizes disagree.
ConjugationResult conjugate_family(const RationalMatrix& w, const UnipotentFamily& fam,
                                   const CharacterFunctional& chi);

/// diag(s_1..s_n, s_n..s_1) with entries +-1; symplectic for every sign choice.
RationalMatrix sign_torus(int n, unsigned mask);

}  // namespace metatheta

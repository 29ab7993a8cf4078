// Named symplectic matrices used by the descent and Whittaker computations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metatheta/matrix.hpp"

namespace metatheta {

struct SymplecticElement {
  int n = 0;  // the matrix has size 2n
  std::string name;
  RationalMatrix mat;
};

struct ElementParams {
  int n = 0;
  int r = 0;
  int a = 0;
  std::vector<Rational> values;        // free coordinates, meaning depends on the element
  std::optional<RationalMatrix> inner;  // for embed_sp
};

/// Names accepted by build_element, in catalog order.
const std::vector<std::string>& element_names();

/// Builds and verifies a catalog element. Throws InputError on unknown names or bad parameters and
/// std::logic_error if the result fails the symplectic check.
SymplecticElement build_element(const std::string& name, const ElementParams& params);

/// diag(A, A*) with A* = K A^{-T} K, K the antidiagonal of ones.
RationalMatrix embed_gl(const RationalMatrix& a);

/// Signed permutation with column j sent to row perm[j] (1-based, perm[0] unused).
RationalMatrix signed_permutation(const std::vector<int>& perm, const std::vector<int>& signs);

/// The unit-lower, unit-upper and Weyl factors of the two 2x2 gamma matrices.
RationalMatrix gamma_even_factor_lower();
RationalMatrix gamma_even_factor_upper();
RationalMatrix gamma_odd_factor_lower();
RationalMatrix gamma_odd_factor_upper();
/// The three-factor form (1 1; 0 1)(0 -1; 1 0)(1 1/2; 0 1).
std::vector<RationalMatrix> gamma_odd_three_factors();

/// Number of sign patterns on the w0_prime permutation that give a symplectic matrix.
int w0_prime_solution_count(int n);

}  // namespace metatheta

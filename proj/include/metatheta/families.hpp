// Named unipotent families and characters for the descent, Whittaker and Sp_6 computations.
#pragma once

#include <vector>

#include "metatheta/lie.hpp"

namespace metatheta {

struct CharacteredFamily {
  UnipotentFamily family;
  CharacterFunctional character;
};

/// Shift every root by (off, off): the image of Sp_{2m} sitting in the middle of Sp_{2n}.
std::vector<Root> shift_roots(const std::vector<Root>& roots, int off);

// Standard radicals.
std::vector<Root> roots_U(int n, int k);       // Levi GL_1^k x Sp_{2(n-k)}
std::vector<Root> roots_U_k1(int n, int k);    // drop u_{k,j}, k < j <= n
std::vector<Root> roots_L(int n, int a);       // Levi GL_a x Sp_{2(n-a)}
std::vector<Root> roots_L0(int n, int a);      // drop u_{i,a+1}, i <= a

// Whittaker-side groups. `odd` selects the r = n layout with Levi GL_1 x GL_2^{(n-1)/2}.
int uprime_l(int n, int r);
std::vector<Root> roots_Uprime(int n, int l, bool odd);
std::vector<Root> roots_Z(int n, int l, bool odd);  // for odd, excludes (1,2)
std::vector<Root> roots_Z_full(int n, int l, bool odd);  // odd case including (1,2)
std::vector<Root> roots_V1(int n, int l, bool odd);
std::vector<Root> roots_Uprime1(int n, int l, bool odd);
std::vector<Root> roots_U2nn0(int n, bool odd);
std::vector<Root> roots_Y(int n);    // lower-left block, y_{ij} = 0 for i >= j
std::vector<Root> roots_Y0(int n);   // Y of Sp_{2n-2} placed in the middle

// Descent-side groups for (n, r, a).
std::vector<Root> roots_U0(int n, int r, int a);
std::vector<Root> roots_V0(int n, int r, int a);
std::vector<Root> roots_k_family(int n, int r, int a);
std::vector<Root> roots_m_family(int n, int r, int a);

// Characters, as weights on matrix slots.
CharacterFunctional psi_descent_source(int n, int r);               // u_{i,i+1} i<r', u_{r',2n-r'+1}
CharacterFunctional psi_V0(int n, int r, int a);
CharacterFunctional psi_whittaker_source(int n, int r, const Rational& b);
CharacterFunctional psi_Uprime(int n, int l, bool odd, const Rational& a, const Rational& b);
CharacterFunctional psi_Uprime_gamma(int n, bool odd);   // character after the gamma_0 move
CharacterFunctional psi_U2nn(int n);                     // u_{i,i+1}, i < n

// Source and target data of the descent constant-term conjugation.
CharacteredFamily descent_source(int n, int r, int a);
CharacteredFamily descent_target(int n, int r, int a);
CharacteredFamily whittaker_source(int n, int r, const Rational& b);
CharacteredFamily whittaker_target(int n, int r, const Rational& b);

// Sp_6 groups.
UnipotentFamily sp6_V();   // u_{2,3} = 0
UnipotentFamily sp6_R();   // Levi GL_2 x SL_2
UnipotentFamily sp6_N();   // n(x)
UnipotentFamily sp6_U1();  // u_{2,4} = u_{3,5} = u_{3,4} = 0
UnipotentFamily sp6_Y();   // I + m e_{4,3}
UnipotentFamily sp6_X();   // I + k(e_{2,4} + e_{3,5})
CharacterFunctional sp6_psi_R();
CharacterFunctional sp6_psi_V(const Rational& alpha);  // alpha v12 + v13 + v24
CharacterFunctional sp6_psi_V_general(const std::vector<Rational>& alpha);  // a1 v12 + a2 v13 + a3 v34 + a4 v25
CharacterFunctional sp6_psi_U1();
std::vector<RationalMatrix> sp6_levi_gl2_sl2();
std::vector<RationalMatrix> sp6_levi_gl1_gl2();
std::vector<RationalMatrix> sp6_diagonal_sl2();

}  // namespace metatheta

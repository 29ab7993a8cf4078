// Exponent bookkeeping for theta characters and the assembly of the unramified Whittaker formula.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metatheta/charsum.hpp"
#include "metatheta/formal.hpp"
#include "metatheta/partitions.hpp"
#include "metatheta/rational.hpp"

namespace metatheta {

/// r-fold cover of Sp_{2n} (r odd), or 2r-fold cover of Sp_{2m}.
enum class Cover { Odd, Double };

Cover parse_cover(const std::string& s);
std::string to_string(Cover c);

/// Point (s_1..s_rank) where the Eisenstein series has its iterated residue.
std::vector<Rational> pole_point(int rank, int r, Cover cover);
/// r(s_i - s_{i+1}) = 1 for i < rank, and r s_rank = 1 (odd) or 2r s_rank = 1 (double).
bool pole_point_postcondition(const std::vector<Rational>& s, int r, Cover cover);

/// Exponent of |a_i| in the theta character.
std::vector<Rational> theta_character_exponents(int rank, int r, Cover cover);
/// Same exponents recomputed as rho_i - s_i from the pole point.
std::vector<Rational> theta_exponents_from_poles(int rank, int r, Cover cover);

/// Character exponent of the descent torus element. a = 0 gives 0.
Rational beta_exponent(int n, int r, int a);
/// Compares beta_exponent with the sum of the first a double-cover theta exponents of rank (2n-r+1)/2.
bool beta_crosscheck(int n, int r, int a);

struct PipelineFactor {
  std::string name;
  Rational exponent;
};

struct PipelineReport {
  int n = 0;
  std::int64_t p = 0;              // prime used for the character-sum factors
  std::vector<PipelineFactor> factors;
  bool gauss_identity = false;     // unit_integral(1, n-2) == gauss_sum(n-2) as cyclotomic integers
  bool higher_m_vanishes = false;  // unit_integral(2, 2(n-2)) == 0
  Rational total;
  Rational target;
  bool ok() const { return gauss_identity && higher_m_vanishes && total == target; }
};

/// q-exponent of the W(t_1) coefficient, assembled from its named factors. n odd >= 3.
PipelineReport exponent_pipeline_report(int n);
/// Total of the pipeline; throws std::logic_error if it misses -(n-2)(2n-1)/(2n).
Rational exponent_pipeline(int n);
Rational pipeline_target(int n);

/// Values of the GL_n Whittaker function on torus elements given by valuation vectors.
using WhittakerOracle = std::function<FormalScalar(const std::vector<int>&)>;
/// Maps (k_1..k_n) to the opaque token "T(k_1,...,k_n)".
WhittakerOracle token_oracle();
std::string token_name(const std::vector<int>& exps);

struct FormulaOptions {
  bool with_gauss_factor = false;
  std::int64_t p = 0;  // 0: smallest prime = 1 mod n
};

struct FormulaResult {
  int n = 0, n1 = 0, n2 = 0;
  int weil_exp = 0;
  Rational prefactor_q_exp;
  Rational second_q_exp;
  std::vector<int> t0, t1;
  std::optional<CycValue> gauss;  // G_{n-2} when requested
  std::int64_t p = 0;
  FormalScalar inner;             // oracle(t0) + q^{second} [G] oracle(t1)
  FormalScalar value;             // gamma^w q^{prefactor} inner
  std::string text() const;
};

FormulaResult whittaker_formula(int n, int n1, int n2, const WhittakerOracle& oracle,
                            const FormulaOptions& opts = {});

struct DescentSummary {
  int n = 0, r = 0;
  int r_prime = 0;
  int parts = 0;      // number of parts equal to r before collapse
  int remainder = 0;  // 2n mod r, omitted when zero
  long radical_dim = 0;
  Partition orbit;
  Rational gk_dim;
  bool dim_eq = false;
  bool balanced = false;
};

DescentSummary descent_summary(int n, int r);

}  // namespace metatheta

// Partition combinatorics for nilpotent orbits of sp_{2n}.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "metatheta/rational.hpp"

namespace metatheta {

/// Weakly decreasing list of positive parts. Zeros are stripped on construction.
class Partition {
 public:
  Partition() = default;
  /// Sorts nothing: throws InputError unless the input is weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  /// Parses "6,2" style text.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  std::size_t length() const { return parts_.size(); }
  Partition transpose() const;
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

enum class Dominance { Less, Equal, Greater, Incomparable };
std::string to_string(Dominance d);

bool is_symplectic(const Partition& p);

/// Largest symplectic partition dominated by p. Requires an even total.
Partition sp_collapse(const Partition& p);

/// Same result as sp_collapse, found by scanning every symplectic partition dominated by p.
Partition sp_collapse_exhaustive(const Partition& p);

/// Requires equal totals.
Dominance dominance_compare(const Partition& lhs, const Partition& rhs);

/// All partitions of total, in reverse lexicographic order.
std::vector<Partition> partitions_of(int total);

/// Collapse of (r^a b) where 2n = a r + b, 0 <= b < r. Needs r odd and r < 2n.
Partition conjectured_orbit(int n, int r);

/// Half the orbit dimension of a symplectic partition of 2n.
Rational gk_dimension(const Partition& p, int n);

/// Dimension of the unipotent radical with Levi GL_1^k x Sp_{2(n-k)}.
long unipotent_radical_dim(int n, int k);

struct OrbitReport {
  Partition orbit;
  Rational gk_dim;
  Rational target_dim;
  bool satisfied = false;
  // Balance of the descent dimension count: lhs = (2n-r+1)/2 + gk,
  // rhs = dim of the unipotent radical + (2n-r+1)^2/4.
  Rational balance_lhs;
  Rational balance_rhs;
  bool balanced = false;
};

OrbitReport dimension_equation_check(int n, int r);

}  // namespace metatheta

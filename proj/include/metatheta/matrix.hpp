// Dense exact square matrices and the small amount of linear algebra built on them.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metatheta/rational.hpp"

namespace metatheta {

using RationalVector = std::vector<Rational>;

/// Square matrix over Q, row-major, 0-based indexing.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t size);
  /// Throws InputError unless rows is square.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t size);
  /// Block diagonal; blocks may have different sizes.
  static RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks);

  std::size_t size() const { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const RationalVector& entries() const { return a_; }

  RationalMatrix transpose() const;
  /// Throws InputError when singular.
  RationalMatrix inverse() const;
  bool is_zero() const;
  Rational trace() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& c);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a) { return a *= c; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_ = 0;
  RationalVector a_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Incrementally maintained reduced row-echelon basis of a subspace of Q^dim.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}
  std::size_t ambient() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }
  /// Returns true if v enlarged the span.
  bool add(const RationalVector& v);
  bool contains(const RationalVector& v) const;
  /// v minus its projection along pivot columns; zero iff v is in the span.
  RationalVector reduce(const RationalVector& v) const;
  const std::vector<RationalVector>& basis() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank_of(const std::vector<RationalVector>& rows);

/// Basis of {x : A x = 0} for A given by rows, each of length cols.
std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t cols);

/// Solves A x = b (A given by rows); nullopt when inconsistent.
std::optional<RationalVector> solve(const std::vector<RationalVector>& rows, const RationalVector& rhs,
                                    std::size_t cols);

Rational determinant(const RationalMatrix& m);

}  // namespace metatheta

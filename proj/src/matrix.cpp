#include "metatheta/matrix.hpp"

#include <utility>

namespace metatheta {

RationalMatrix::RationalMatrix(std::size_t size) : n_(size), a_(size * size) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InputError("matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::block_diagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  RationalMatrix m(total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.size();
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this, inv = identity(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && a.at(p, c) == 0) ++p;
    if (p == n_) throw InputError("matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    Rational piv = a.at(c, c);
    for (std::size_t j = 0; j < n_; ++j) {
      a.at(c, j) /= piv;
      inv.at(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (o.n_ != n_) throw InputError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (o.n_ != n_) throw InputError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix size mismatch");
  RationalMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Rational& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (b.at(k, j) != 0) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalVector Span::reduce(const RationalVector& v) const {
  if (v.size() != dim_) throw InputError("vector length does not match span ambient dimension");
  RationalVector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = r[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[k][j] != 0) r[j] -= f * rows_[k][j];
  }
  return r;
}

bool Span::contains(const RationalVector& v) const {
  for (const auto& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool Span::add(const RationalVector& v) {
  RationalVector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  Rational piv = r[p];
  for (auto& x : r) x /= piv;
  // Keep the basis fully reduced so that reduce() is a single pass.
  for (auto& row : rows_) {
    Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (r[j] != 0) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::size_t rank_of(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return 0;
  Span s(rows.front().size());
  for (const auto& r : rows) s.add(r);
  return s.dim();
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational f = m[row][c];
    for (auto& x : m[row]) x /= f;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational g = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= g * m[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

}  // namespace

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t cols) {
  std::vector<RationalVector> m = rows;
  for (const auto& r : m)
    if (r.size() != cols) throw InputError("row length mismatch");
  auto piv = rref(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    RationalVector x(cols);
    x[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -m[k][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve(const std::vector<RationalVector>& rows, const RationalVector& rhs,
                                    std::size_t cols) {
  if (rows.size() != rhs.size()) throw InputError("right-hand side length mismatch");
  std::vector<RationalVector> m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    RationalVector r = rows[i];
    r.push_back(rhs[i]);
    m.push_back(std::move(r));
  }
  auto piv = rref(m, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = m[k][cols];
  return x;
}

Rational determinant(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Rational f = a.at(i, c) / a.at(c, c);
      for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

}  // namespace metatheta

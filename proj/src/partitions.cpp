#include "metatheta/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace metatheta {

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InputError("partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1]) throw InputError("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("malformed partition: '" + std::string(text) + "'");
    if (item.size() > 6) throw InputError("partition part too large");
    parts.push_back(std::stoi(item));
  }
  if (parts.empty()) throw InputError("empty partition");
  return Partition(std::move(parts));
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition{};
  for (int k = 1; k <= parts_.front(); ++k)
    t.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [k](int x) { return x >= k; })));
  return Partition(std::move(t));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "less";
    case Dominance::Equal: return "equal";
    case Dominance::Greater: return "greater";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

bool is_symplectic(const Partition& p) {
  const auto& v = p.parts();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (v[i] % 2 == 1 && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

Partition sp_collapse(const Partition& p) {
  if (p.total() % 2 != 0) throw InputError("collapse needs an even total, got " + std::to_string(p.total()));
  std::vector<int> v = p.parts();
  for (;;) {
    Partition cur(v);
    if (is_symplectic(cur)) return cur;
    // Largest odd part with odd multiplicity: lower its last copy, raise the next part that can take it.
    int q = -1;
    std::size_t last = 0;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if (v[i] % 2 == 1 && (j - i) % 2 == 1) {
        q = v[i];
        last = j - 1;
        break;
      }
      i = j;
    }
    v[last] -= 1;
    std::size_t k = last + 1;
    while (k < v.size() && v[k] >= q - 1) ++k;
    if (k == v.size()) v.push_back(0);
    v[k] += 1;
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
}

Dominance dominance_compare(const Partition& lhs, const Partition& rhs) {
  if (lhs.total() != rhs.total())
    throw InputError("dominance needs equal totals (" + std::to_string(lhs.total()) + " vs " +
                     std::to_string(rhs.total()) + ")");
  bool ge = true, le = true;
  long a = 0, b = 0;
  std::size_t len = std::max(lhs.length(), rhs.length());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lhs.length() ? lhs.parts()[i] : 0;
    b += i < rhs.length() ? rhs.parts()[i] : 0;
    if (a < b) ge = false;
    if (a > b) le = false;
  }
  if (ge && le) return Dominance::Equal;
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

Partition sp_collapse_exhaustive(const Partition& p) {
  if (p.total() % 2 != 0) throw InputError("collapse needs an even total");
  std::vector<Partition> below;
  for (auto& q : partitions_of(p.total())) {
    if (!is_symplectic(q)) continue;
    auto d = dominance_compare(q, p);
    if (d == Dominance::Less || d == Dominance::Equal) below.push_back(std::move(q));
  }
  for (const auto& cand : below) {
    bool top = true;
    for (const auto& q : below) {
      auto d = dominance_compare(q, cand);
      if (d != Dominance::Less && d != Dominance::Equal) {
        top = false;
        break;
      }
    }
    if (top) return cand;
  }
  throw std::logic_error("no maximal symplectic partition below " + p.str());
}

Partition conjectured_orbit(int n, int r) {
  if (n < 1) throw InputError("n must be positive");
  if (r < 1 || r % 2 == 0) throw InputError("r must be an odd positive integer");
  if (r >= 2 * n) throw InputError("r >= 2n: the theta representation is generic, no orbit label");
  int a = (2 * n) / r, b = (2 * n) % r;
  std::vector<int> parts(a, r);
  if (b > 0) parts.push_back(b);
  return sp_collapse(Partition(parts));
}

Rational gk_dimension(const Partition& p, int n) {
  if (p.total() != 2 * n) throw InputError("partition total must equal 2n");
  if (!is_symplectic(p)) throw InputError("partition " + p.str() + " is not symplectic");
  long sq = 0;
  const Partition t = p.transpose();
  for (int c : t.parts()) sq += static_cast<long>(c) * c;
  long odd = std::count_if(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 1; });
  Rational dim = Rational(2L * n * n + n) - make_rational(sq, 2) - make_rational(odd, 2);
  dim /= 2;
  return dim;
}

long unipotent_radical_dim(int n, int k) {
  if (k < 0 || k > n) throw InputError("k must lie in 0..n");
  return static_cast<long>(k) * (2L * n - k);
}

OrbitReport dimension_equation_check(int n, int r) {
  OrbitReport rep;
  rep.orbit = conjectured_orbit(n, r);
  rep.gk_dim = gk_dimension(rep.orbit, n);
  rep.target_dim = Rational(static_cast<long>(n) * n - n) + make_rational(r - 1, 2);
  rep.satisfied = rep.gk_dim == rep.target_dim;
  Rational free_dim = make_rational(2 * n - r + 1, 2);
  rep.balance_lhs = free_dim + rep.gk_dim;
  rep.balance_rhs = Rational(unipotent_radical_dim(n, (r - 1) / 2)) + free_dim * free_dim;
  rep.balanced = rep.balance_lhs == rep.balance_rhs;
  return rep;
}

}  // namespace metatheta

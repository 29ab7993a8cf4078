#include <doctest.h>

#include "metatheta/lie.hpp"
#include "metatheta/partitions.hpp"
#include "oracles.hpp"

using namespace metatheta;

namespace {

// Nilpotent X in sp_2n with Jordan type p: even parts get a regular nilpotent of sp, pairs of equal odd
// parts get a regular nilpotent of the Levi gl. Blocks are nested from the outside in.
RationalMatrix nilpotent_of_type(const std::vector<int>& parts) {
  std::vector<int> blocks;  // half sizes, and whether the block is a gl-pair
  std::vector<bool> pair;
  for (std::size_t i = 0; i < parts.size();) {
    if (parts[i] % 2 == 0) {
      blocks.push_back(parts[i] / 2);
      pair.push_back(false);
      ++i;
    } else {
      blocks.push_back(parts[i]);
      pair.push_back(true);
      i += 2;
    }
  }
  int n = 0;
  for (int b : blocks) n += b;
  RationalMatrix x(2 * n);
  int off = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const int m = blocks[b];
    RationalMatrix local(2 * m);
    for (int i = 1; i < m; ++i) local += estar(m, i, i + 1);
    if (!pair[b]) local += estar(m, m, m + 1);
    // local coordinate k < m maps to off + k, k >= m maps to 2n - 2m + off + k
    auto g = [&](int k) { return k < m ? off + k : 2 * n - 2 * m - off + k; };
    for (int i = 0; i < 2 * m; ++i)
      for (int j = 0; j < 2 * m; ++j)
        if (local.at(i, j) != 0) x.at(g(i), g(j)) = local.at(i, j);
    off += m;
  }
  return x;
}

// dim sp_2n - dim centralizer, by exact linear algebra on a basis of sp_2n.
long orbit_dimension(const RationalMatrix& x, int n) {
  Span s(4 * n * n);
  std::vector<RationalMatrix> indep;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) {
      auto b = estar(n, i, j);
      if (s.add(flatten(b))) indep.push_back(b);
    }
  REQUIRE(indep.size() == static_cast<std::size_t>(n * (2 * n + 1)));
  std::vector<RationalVector> images;
  for (const auto& b : indep) images.push_back(flatten(commutator(x, b)));
  return static_cast<long>(rank_of(images));
}

}  // namespace

TEST_CASE("partition parsing and validation") {
  CHECK(Partition::parse("6,2").parts() == std::vector<int>{6, 2});
  CHECK(Partition::parse("6,2").str() == "6,2");
  CHECK_THROWS_AS(Partition::parse("2,6"), InputError);
  CHECK_THROWS_AS(Partition::parse("a"), InputError);
  CHECK_THROWS_AS(Partition::parse("3,-1"), InputError);
  CHECK(Partition::parse("4,2,2").transpose().parts() == std::vector<int>{3, 3, 1, 1});
}

TEST_CASE("symplectic partitions") {
  CHECK(is_symplectic(Partition({3, 3})));
  CHECK(is_symplectic(Partition({4, 2})));
  CHECK_FALSE(is_symplectic(Partition({3, 1})));
  CHECK_FALSE(is_symplectic(Partition({5, 3})));
}

TEST_CASE("collapse examples") {
  CHECK(sp_collapse(Partition({7, 1})) == Partition({6, 2}));
  CHECK(sp_collapse(Partition({5, 3})) == Partition({4, 4}));
  CHECK(sp_collapse(Partition({3, 3})) == Partition({3, 3}));
  CHECK(sp_collapse(Partition({3, 1})) == Partition({2, 2}));
  CHECK_THROWS_AS(sp_collapse(Partition({3})), InputError);
}

TEST_CASE("collapse agrees with the brute-force oracle for totals up to 16") {
  for (int total = 2; total <= 16; total += 2)
    for (const auto& parts : oracle::partitions(total)) {
      const auto want = oracle::brute_collapse(parts);
      CHECK_MESSAGE(sp_collapse(Partition(parts)).parts() == want, Partition(parts).str());
      CHECK(sp_collapse_exhaustive(Partition(parts)).parts() == want);
    }
}

TEST_CASE("dominance") {
  CHECK(dominance_compare(Partition({4, 2}), Partition({3, 3})) == Dominance::Greater);
  CHECK(dominance_compare(Partition({3, 3}), Partition({4, 2})) == Dominance::Less);
  CHECK(dominance_compare(Partition({3, 3}), Partition({3, 3})) == Dominance::Equal);
  CHECK(dominance_compare(Partition({4, 1, 1}), Partition({3, 3})) == Dominance::Incomparable);
  CHECK_THROWS_AS(dominance_compare(Partition({4}), Partition({3})), InputError);
  for (int total = 1; total <= 9; ++total)
    for (const auto& a : oracle::partitions(total))
      for (const auto& b : oracle::partitions(total)) {
        const auto d = dominance_compare(Partition(a), Partition(b));
        const bool le = oracle::dominated(a, b), ge = oracle::dominated(b, a);
        CHECK((d == Dominance::Equal) == (le && ge));
        CHECK((d == Dominance::Less) == (le && !ge));
        CHECK((d == Dominance::Greater) == (ge && !le));
      }
}

TEST_CASE("partitions_of counts") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int t = 1; t <= 10; ++t) CHECK(partitions_of(t).size() == counts[t]);
}

TEST_CASE("gk dimension matches the orbit dimension of an explicit nilpotent") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& parts : oracle::partitions(2 * n)) {
      if (!oracle::symplectic(parts)) continue;
      auto x = nilpotent_of_type(parts);
      REQUIRE(in_lie_algebra(n, x));
      // Jordan type check: rank of x^k
      RationalMatrix pw = RationalMatrix::identity(2 * n);
      for (int k = 1; k <= 2 * n; ++k) {
        pw = pw * x;
        long want = 0;
        for (int v : parts) want += std::max(0, v - k);
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < pw.size(); ++i) {
          RationalVector row;
          for (std::size_t j = 0; j < pw.size(); ++j) row.push_back(pw.at(i, j));
          rows.push_back(row);
        }
        REQUIRE(static_cast<long>(rank_of(rows)) == want);
      }
      const long dim = orbit_dimension(x, n);
      CHECK_MESSAGE(gk_dimension(Partition(parts), n) == make_rational(dim, 2), Partition(parts).str());
    }
}

TEST_CASE("gk dimension examples") {
  CHECK(gk_dimension(Partition({3, 3}), 3) == 7);
  CHECK(gk_dimension(Partition({2, 2}), 2) == 3);
  CHECK(gk_dimension(Partition({6, 2}), 4) == 15);
  CHECK(gk_dimension(Partition({2}), 1) == 1);
  CHECK_THROWS_AS(gk_dimension(Partition({3, 1}), 2), InputError);
  CHECK_THROWS_AS(gk_dimension(Partition({4}), 3), InputError);
}

TEST_CASE("conjectured orbit and dimension equation") {
  CHECK(conjectured_orbit(3, 3) == Partition({3, 3}));
  CHECK(conjectured_orbit(4, 7) == Partition({6, 2}));
  CHECK(conjectured_orbit(2, 3) == Partition({2, 2}));
  CHECK(conjectured_orbit(4, 3) == Partition({3, 3, 2}));
  CHECK_THROWS_AS(conjectured_orbit(3, 7), InputError);
  CHECK_THROWS_AS(conjectured_orbit(3, 4), InputError);
  for (int n = 1; n <= 8; ++n)
    for (int r = n % 2 ? n : n + 1; r < 2 * n; r += 2) {
      auto rep = dimension_equation_check(n, r);
      CHECK(rep.orbit.parts() == oracle::case_list_orbit(n, r));
      CHECK(rep.satisfied);
      CHECK(rep.balanced);
      CHECK(rep.gk_dim == Rational(n * n - n) + make_rational(r - 1, 2));
    }
}

TEST_CASE("unipotent radical dimension") {
  CHECK(unipotent_radical_dim(3, 1) == 5);
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r < 2 * n; r += 2) {
      const int k = (r - 1) / 2;
      CHECK(4 * unipotent_radical_dim(n, k) == static_cast<long>(r - 1) * (4 * n - r + 1));
    }
  CHECK_THROWS_AS(unipotent_radical_dim(2, 3), InputError);
}

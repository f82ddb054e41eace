#include <doctest.h>

#include <algorithm>
#include <set>

#include "rankone/rootsys.hpp"

using namespace rankone;

namespace {

// Compatibility degree table for rank 2 in the basis
// (-a1, -a2, a1, a2, a1+a2, 2a1+a2), as published.
constexpr int kTableC2[6][6] = {
    {0, 0, 1, 0, 1, 2}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 2, 1, 0},
    {0, 1, 1, 0, 0, 1}, {1, 2, 1, 0, 0, 0}, {1, 1, 0, 1, 0, 0},
};

}  // namespace

TEST_CASE("almost positive roots: counts and distinctness") {
  for (int n = 2; n <= 6; ++n) {
    auto roots = almost_positive_roots(Rank(n));
    CHECK(roots.size() == static_cast<std::size_t>(n * n + n));
    std::set<std::vector<int>> seen;
    int negatives = 0;
    for (const auto& r : roots) {
      seen.insert(r.eps());
      if (r.is_negative_simple()) ++negatives;
    }
    CHECK(seen.size() == roots.size());
    CHECK(negatives == n);
  }
  CHECK_THROWS_AS(Rank(1), std::invalid_argument);
}

TEST_CASE("array bijection spot values") {
  Rank n4(4);
  CHECK(to_array_position(AlmostPositiveRoot::two_eps(1, n4), n4) ==
        ArrayPosition{2, 1});
  CHECK(to_array_position(AlmostPositiveRoot::negative_simple(4, n4), n4) ==
        ArrayPosition{1, 5});
  CHECK(to_array_position(AlmostPositiveRoot::eps_diff(2, 3, n4), n4) ==
        ArrayPosition{3, 4});
  CHECK(from_array_position({3, 1}, n4) ==
        AlmostPositiveRoot::eps_sum(1, 2, n4));
  CHECK(from_array_position({1, 2}, n4) ==
        AlmostPositiveRoot::negative_simple(1, n4));
  CHECK_THROWS_AS(from_array_position({2, 2}, n4), std::invalid_argument);
}

TEST_CASE("array bijection round-trips") {
  for (int n = 2; n <= 6; ++n) {
    Rank rank(n);
    std::set<std::pair<int, int>> positions;
    for (const auto& r : almost_positive_roots(rank)) {
      ArrayPosition p = to_array_position(r, rank);
      CHECK(p.row != p.col);
      positions.insert({p.row, p.col});
      CHECK(from_array_position(p, rank) == r);
    }
    CHECK(positions.size() == static_cast<std::size_t>(n * n + n));
  }
}

TEST_CASE("tau spot values") {
  Rank n3(3);
  CHECK(tau(AlmostPositiveRoot::negative_simple(1, n3), n3) ==
        AlmostPositiveRoot::eps_diff(1, 2, n3));
  CHECK(tau(AlmostPositiveRoot::two_eps(3, n3), n3) ==
        AlmostPositiveRoot::negative_simple(3, n3));
  Rank n2(2);
  CHECK(tau(AlmostPositiveRoot::eps_diff(1, 2, n2), n2) ==
        AlmostPositiveRoot::eps_sum(1, 2, n2));
}

TEST_CASE("tau agrees with its piecewise definition") {
  for (int n = 2; n <= 6; ++n) {
    Rank rank(n);
    for (const auto& r : almost_positive_roots(rank))
      CHECK(tau(r, rank) == tau_by_definition(r, rank));
  }
}

TEST_CASE("tau orbit structure") {
  for (int n = 2; n <= 6; ++n) {
    Rank rank(n);
    auto orbits = tau_orbits(rank);
    CHECK(orbits.size() == static_cast<std::size_t>(n));
    std::set<std::vector<int>> all;
    for (const auto& orbit : orbits) {
      CHECK(orbit.size() == static_cast<std::size_t>(n + 1));
      int negatives = 0;
      for (const auto& r : orbit) {
        all.insert(r.eps());
        if (r.is_negative_simple()) ++negatives;
      }
      CHECK(negatives == 1);
      // tau^(n+1) = identity along the orbit
      AlmostPositiveRoot r = orbit.front();
      for (int k = 0; k <= n; ++k) r = tau(r, rank);
      CHECK(r == orbit.front());
    }
    CHECK(all.size() == static_cast<std::size_t>(n * n + n));
  }
}

TEST_CASE("rank-2 orbits match the published cycles") {
  Rank n2(2);
  auto orbits = tau_orbits(n2);
  REQUIRE(orbits.size() == 2);
  // {-a1, a1, a1+a2} and {-a2, 2a1+a2, a2} in cyclic tau-order
  CHECK(orbits[0][0] == AlmostPositiveRoot::negative_simple(1, n2));
  CHECK(orbits[0][1] == AlmostPositiveRoot::eps_diff(1, 2, n2));
  CHECK(orbits[0][2] == AlmostPositiveRoot::eps_sum(1, 2, n2));
  CHECK(orbits[1][0] == AlmostPositiveRoot::negative_simple(2, n2));
  CHECK(orbits[1][1] == AlmostPositiveRoot::two_eps(1, n2));
  CHECK(orbits[1][2] == AlmostPositiveRoot::two_eps(2, n2));
}

TEST_CASE("simple root coefficients") {
  Rank n3(3);
  CHECK(simple_root_coefficients(AlmostPositiveRoot::eps_diff(1, 3, n3), n3) ==
        std::vector<int>{1, 1, 0});
  CHECK(simple_root_coefficients(AlmostPositiveRoot::eps_sum(1, 2, n3), n3) ==
        std::vector<int>{1, 2, 1});
  CHECK(simple_root_coefficients(AlmostPositiveRoot::two_eps(1, n3), n3) ==
        std::vector<int>{2, 2, 1});
  CHECK(simple_root_coefficients(AlmostPositiveRoot::two_eps(3, n3), n3) ==
        std::vector<int>{0, 0, 1});
  CHECK(simple_root_coefficients(AlmostPositiveRoot::negative_simple(2, n3),
                                 n3) == std::vector<int>{0, -1, 0});
  // every expansion reproduces the eps coordinates
  for (int n = 2; n <= 5; ++n) {
    Rank rank(n);
    for (const auto& r : almost_positive_roots(rank)) {
      auto c = simple_root_coefficients(r, rank);
      std::vector<int> eps(n, 0);
      for (int i = 1; i <= n; ++i) {
        if (i < n) {
          eps[i - 1] += c[i - 1];
          eps[i] -= c[i - 1];
        } else {
          eps[n - 1] += 2 * c[n - 1];
        }
      }
      CHECK(eps == r.eps());
    }
  }
}

TEST_CASE("rank-2 compatibility degrees match the published table") {
  Rank n2(2);
  auto roots = compat_table_roots(n2);
  REQUIRE(roots.size() == 6);
  CHECK(roots[0].str() == "-e1+e2");
  CHECK(roots[1].str() == "-2e2");
  CHECK(roots[2].str() == "e1-e2");
  CHECK(roots[3].str() == "2e2");
  CHECK(roots[4].str() == "e1+e2");
  CHECK(roots[5].str() == "2e1");
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(compatibility_degree(roots[i], roots[j], n2) == kTableC2[i][j]);
}

TEST_CASE("degree base cases") {
  Rank n2(2);
  auto neg1 = AlmostPositiveRoot::negative_simple(1, n2);
  auto neg2 = AlmostPositiveRoot::negative_simple(2, n2);
  CHECK(compatibility_degree(neg1, AlmostPositiveRoot::two_eps(1, n2), n2) == 2);
  CHECK(compatibility_degree(neg1, neg2, n2) == 0);
  CHECK(compatibility_degree(neg2, neg2, n2) == 0);
  for (int n = 2; n <= 5; ++n) {
    Rank rank(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(compatibility_degree(AlmostPositiveRoot::negative_simple(i, rank),
                                   AlmostPositiveRoot::negative_simple(j, rank),
                                   rank) == 0);
  }
}

TEST_CASE("degree is tau invariant") {
  for (int n = 2; n <= 5; ++n) {
    Rank rank(n);
    auto roots = almost_positive_roots(rank);
    for (const auto& a : roots)
      for (const auto& b : roots)
        CHECK(compatibility_degree(tau(a, rank), tau(b, rank), rank) ==
              compatibility_degree(a, b, rank));
  }
}

TEST_CASE("positional predicate: stated cases") {
  Rank n4(4);
  // same row
  CHECK(is_compatible_positional(from_array_position({2, 3}, n4),
                                 from_array_position({2, 5}, n4), n4));
  // (i,j) and (j,k)
  CHECK(!is_compatible_positional(from_array_position({2, 3}, n4),
                                  from_array_position({3, 4}, n4), n4));
  // antidiagonal pair at (m,i),(k,j) with k < i and m < i
  CHECK(is_compatible_positional(from_array_position({2, 4}, n4),
                                 from_array_position({1, 5}, n4), n4));
}

TEST_CASE("predicates agree, compatibility is symmetric") {
  for (int n = 2; n <= 5; ++n) {
    Rank rank(n);
    auto roots = almost_positive_roots(rank);
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = 0; b < roots.size(); ++b) {
        bool deg = is_compatible(roots[a], roots[b], rank);
        bool pos = is_compatible_positional(roots[a], roots[b], rank);
        CHECK(deg == pos);
        CHECK(deg == is_compatible(roots[b], roots[a], rank));
      }
  }
}

TEST_CASE("exactly one diagonal of an off-diagonal 2x2 submatrix is compatible") {
  for (int n = 2; n <= 5; ++n) {
    Rank rank(n);
    const int size = n + 1;
    for (int k = 1; k <= size; ++k)
      for (int m = k + 1; m <= size; ++m)
        for (int i = 1; i <= size; ++i)
          for (int j = i + 1; j <= size; ++j) {
            if (k == i || k == j || m == i || m == j) continue;
            bool main = is_compatible_positional(
                from_array_position({k, i}, rank),
                from_array_position({m, j}, rank), rank);
            bool anti = is_compatible_positional(
                from_array_position({m, i}, rank),
                from_array_position({k, j}, rank), rank);
            CHECK(main != anti);
          }
  }
}

TEST_CASE("root strings round-trip") {
  for (int n = 2; n <= 5; ++n) {
    Rank rank(n);
    for (const auto& r : almost_positive_roots(rank))
      CHECK(parse_root(r.str(), rank) == r);
  }
  Rank n3(3);
  CHECK(parse_root("-a2", n3) == AlmostPositiveRoot::negative_simple(2, n3));
  CHECK(parse_root("-e1+e2", n3) == AlmostPositiveRoot::negative_simple(1, n3));
  CHECK(parse_root("2e3", n3) == AlmostPositiveRoot::two_eps(3, n3));
  CHECK(parse_root("-2e3", n3) == AlmostPositiveRoot::negative_simple(3, n3));
  CHECK(parse_root("e2+e1", n3) == AlmostPositiveRoot::eps_sum(1, 2, n3));
  CHECK_THROWS_AS(parse_root("-e1+e3", n3), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("-2e2", n3), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("-e2*", n3), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("2a1+a2", n3), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("e1-e1", n3), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("e4-e5", n3), std::invalid_argument);
}

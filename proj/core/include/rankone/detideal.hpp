#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rankone/groebner.hpp"
#include "rankone/rootsys.hpp"

namespace rankone {

/// Positions of an m x n matrix forced to zero.
struct ZeroPattern {
  int rows = 0;
  int cols = 0;
  std::set<std::pair<int, int>> zeros;  // 1-based

  bool is_zero(int i, int j) const { return zeros.count({i, j}) > 0; }

  /// Square pattern with zeros on the diagonal (the off-diagonal coordinate
  /// subspace of square matrices).
  static ZeroPattern diagonal(int size);
  /// Square pattern with zeros at i >= j (strictly upper triangular support).
  static ZeroPattern lower_triangle(int size);
  /// Each cell is zeroed independently with probability 1/2.
  static ZeroPattern random(int rows, int cols, std::mt19937_64& rng);

  nlohmann::json json() const;
  static ZeroPattern from_json(const nlohmann::json& j);
};

/// Bijective assignment of variables x_1..x_K to the non-zero positions of a
/// pattern.
class Labeling {
 public:
  Labeling(ZeroPattern pattern, std::map<std::pair<int, int>, int> vars);

  /// The coordinate labeling of the off-diagonal (n+1) x (n+1) matrix used
  /// for the n^2+n ambient variables: (i,j) with i < j gets
  /// x_{(n+1)(i-j+n)+i}, with i > j gets x_{(n+1)(i-j-1)+i}.
  static Labeling spade(Rank n);

  /// The strictly upper triangular labeling on n(n+1)/2 variables: (i,j)
  /// with i < j gets x_{(2n-j+i+2)(j-i-1)/2+i}.
  static Labeling heart(Rank n);

  /// Row-major labeling of any pattern's support.
  static Labeling row_major(const ZeroPattern& pattern);

  const ZeroPattern& pattern() const { return pattern_; }
  int var_count() const { return count_; }
  int var_of(int i, int j) const;
  std::pair<int, int> position_of(int var) const;

 private:
  ZeroPattern pattern_;
  std::map<std::pair<int, int>, int> var_;
  std::vector<std::pair<int, int>> pos_;  // var index - 1 -> position
  int count_ = 0;
};

/// All 2x2 minors of a generic matrix with the pattern's zeros substituted,
/// with the NW*SE term positive; identically zero minors are omitted. Terms
/// are normalized under the identity variable order.
std::vector<Polynomial> minor_generators(const Labeling& lab);

struct OrderRun {
  std::vector<int> precedence;
  bool gb_ok = false;
  std::optional<PairFailure> failure;
  bool no_new_initials = false;
  bool ok() const { return gb_ok && no_new_initials; }
};

struct UniversalGBReport {
  std::size_t generator_count = 0;
  std::uint64_t seed = 0;
  std::vector<OrderRun> runs;  // runs[0] is the canonical order
  bool all_ok() const;
};

/// Checks the Buchberger criterion for the minor generators under the
/// canonical order x_1 > ... > x_K plus `random_orders` seeded random
/// precedence permutations, and cross-checks each run against a full
/// completion (no initial monomial outside the ideal of the generators'
/// initials may appear).
UniversalGBReport verify_universal_gb(const Labeling& lab, int random_orders,
                                      std::uint64_t seed);

/// Minimal monomial generators of the initial ideal of the minor ideal under
/// the given precedence (canonical x_1 > ... > x_K by default).
std::vector<Monomial> initial_generators(const Labeling& lab);
std::vector<Monomial> initial_generators(const Labeling& lab,
                                         const VariableSet& vars);

}  // namespace rankone

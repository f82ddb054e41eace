#pragma once

#include <string>
#include <vector>

#include "rankone/common.hpp"

namespace rankone {

/// Rank of the type-C root system. Rank 1 degenerates (the array bijection
/// presupposes n >= 2) and is rejected.
struct Rank {
  int n;
  explicit Rank(int rank) : n(rank) {
    if (rank < 2) throw std::invalid_argument("rank must be >= 2");
  }
};

enum class RootKind { NegativeSimple, EpsDiff, EpsSum, TwoEps };

/// An element of the almost positive roots of type C_n: a positive root
/// (eps_i - eps_j, eps_i + eps_j with i < j, or 2 eps_i) or the negative of a
/// simple root. Stored in coordinates of the standard basis eps_1..eps_n.
class AlmostPositiveRoot {
 public:
  static AlmostPositiveRoot negative_simple(int i, Rank n);
  static AlmostPositiveRoot eps_diff(int i, int j, Rank n);
  static AlmostPositiveRoot eps_sum(int i, int j, Rank n);
  static AlmostPositiveRoot two_eps(int i, Rank n);
  /// Validates membership; throws std::invalid_argument otherwise.
  static AlmostPositiveRoot from_eps(std::vector<int> eps);

  const std::vector<int>& eps() const { return eps_; }
  RootKind kind() const { return kind_; }
  /// First index: the simple index for negative simples, i for the others.
  int index_i() const { return i_; }
  /// Second index for EpsDiff / EpsSum; 0 otherwise.
  int index_j() const { return j_; }
  bool is_negative_simple() const { return kind_ == RootKind::NegativeSimple; }
  bool is_positive() const { return kind_ != RootKind::NegativeSimple; }

  std::string str() const;

  friend bool operator==(const AlmostPositiveRoot& a,
                         const AlmostPositiveRoot& b) {
    return a.eps_ == b.eps_;
  }
  friend bool operator<(const AlmostPositiveRoot& a,
                        const AlmostPositiveRoot& b) {
    return a.eps_ < b.eps_;
  }

 private:
  std::vector<int> eps_;
  RootKind kind_;
  int i_ = 0, j_ = 0;
};

/// 1-based off-diagonal position in the (n+1) x (n+1) array.
struct ArrayPosition {
  int row = 0, col = 0;
  friend bool operator==(const ArrayPosition&, const ArrayPosition&) = default;
};

/// All n^2 + n almost positive roots, in row-major order of their array
/// positions (negative simples first).
std::vector<AlmostPositiveRoot> almost_positive_roots(Rank n);

ArrayPosition to_array_position(const AlmostPositiveRoot& r, Rank n);
AlmostPositiveRoot from_array_position(ArrayPosition p, Rank n);

/// The piecewise linear permutation of the almost positive roots, realized
/// as the (+1,+1) shift of the array position mod n+1.
AlmostPositiveRoot tau(const AlmostPositiveRoot& r, Rank n);

/// The same map computed literally from its three-case definition through
/// simple reflections; kept as a cross-check of the shift rule.
AlmostPositiveRoot tau_by_definition(const AlmostPositiveRoot& r, Rank n);

/// Exactly n orbits of size n+1, each led by its negative simple root.
std::vector<std::vector<AlmostPositiveRoot>> tau_orbits(Rank n);

/// Coefficients [beta : alpha_1..alpha_n] in the simple-root basis; a
/// negative simple root -alpha_i has -1 in slot i.
std::vector<int> simple_root_coefficients(const AlmostPositiveRoot& r, Rank n);

/// Unique tau-invariant nonnegative function with (-alpha || -alpha') = 0 and
/// (-alpha || beta) = [beta : alpha]; computed by shifting the first argument
/// onto a negative simple root.
int compatibility_degree(const AlmostPositiveRoot& a,
                         const AlmostPositiveRoot& b, Rank n);

/// Compatibility degree zero. Reflexive pairs count as compatible.
bool is_compatible(const AlmostPositiveRoot& a, const AlmostPositiveRoot& b,
                   Rank n);

/// Positional characterization on the array: same row/column, or the stated
/// diagonal/antidiagonal conditions on the spanned 2x2 submatrix. Must agree
/// with is_compatible everywhere.
bool is_compatible_positional(const AlmostPositiveRoot& a,
                              const AlmostPositiveRoot& b, Rank n);

/// Root strings: "e1-e2", "e1+e2", "2e3", "-2e3" (= -alpha_n when 3 = n),
/// "-e1+e2" (= -alpha_1), and the shorthand "-a1" for negative simples.
/// Whitespace-free; str() emits the epsilon form, which round-trips.
AlmostPositiveRoot parse_root(const std::string& s, Rank n);

/// Basis ordering used for printed compatibility tables: negative simples by
/// index, then positive roots by height with ties broken toward earlier
/// simple-root support.
std::vector<AlmostPositiveRoot> compat_table_roots(Rank n);

}  // namespace rankone

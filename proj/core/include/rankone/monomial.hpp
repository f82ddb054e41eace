#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace rankone {

/// A total order of the indeterminates x_1..x_N. precedence()[0] is the
/// greatest variable; the degree revlex comparison breaks degree ties on the
/// exponent difference written in precedence order.
class VariableSet {
 public:
  static VariableSet identity(int count);
  static VariableSet with_precedence(std::vector<int> precedence);

  int count() const { return count_; }
  const std::vector<int>& precedence() const { return precedence_; }

  /// 0-based position of variable v (1-based) in the precedence list.
  int position(int v) const;

 private:
  VariableSet(int count, std::vector<int> precedence, std::vector<int> position);

  int count_ = 0;
  std::vector<int> precedence_;
  std::vector<int> position_;
};

/// Seeded Fisher-Yates permutation of the identity precedence. Hand-rolled so
/// the sampled orders are reproducible across standard libraries.
VariableSet random_precedence(int count, std::mt19937_64& rng);

/// Power product of variables, stored as sorted (variable, exponent>0) pairs.
class Monomial {
 public:
  Monomial() = default;  // the monomial 1
  static Monomial variable(int var, int exp = 1);
  static Monomial from_exponents(std::vector<std::pair<int, int>> exps);

  int degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }
  bool is_squarefree() const;
  int exponent(int var) const;
  const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
  int max_variable() const;

  bool divides(const Monomial& m) const;
  bool coprime_to(const Monomial& m) const;
  /// Exact quotient; d must divide *this.
  Monomial divided_by(const Monomial& d) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

  /// Structural order (degree, then exponent list), independent of any
  /// monomial order. Used for canonical keys and reproducible set output.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<std::pair<int, int>> exps_;
  int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

enum class Ordering { Less, Equal, Greater };

/// Degree reverse lexicographic comparison under the variable order `vars`:
/// higher total degree wins; on ties the monomial whose exponent difference,
/// written in precedence order, has a negative rightmost nonzero entry is the
/// greater one. Throws std::invalid_argument on out-of-range variables.
Ordering compare_degrevlex(const Monomial& a, const Monomial& b,
                           const VariableSet& vars);

bool degrevlex_less(const Monomial& a, const Monomial& b,
                    const VariableSet& vars);

/// Removes duplicates and divisibility-redundant elements; result sorted in
/// the structural order.
std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens);

}  // namespace rankone

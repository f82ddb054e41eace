#pragma once

#include <string>
#include <vector>

#include "rankone/common.hpp"
#include "rankone/monomial.hpp"

namespace rankone {

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Polynomial with exact rational coefficients. Terms are kept sorted
/// strictly decreasing under the monomial order the value was normalized
/// with; arithmetic helpers take that order explicitly and assume both
/// operands are normalized under it.
class Polynomial {
 public:
  Polynomial() = default;  // zero

  static Polynomial from_terms(std::vector<Term> terms, const VariableSet& vars);
  static Polynomial single(Rational coeff, Monomial mono);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const;
  const Monomial& initial_monomial() const;
  Polynomial tail() const;

  /// Re-normalizes under a (possibly different) variable order.
  Polynomial resorted(const VariableSet& vars) const;

  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  friend Polynomial add(const Polynomial& a, const Polynomial& b,
                        const VariableSet& vars);
  friend Polynomial mul_term(const Polynomial& f, const Term& t);
  friend Polynomial negated(const Polynomial& f);
  friend Polynomial monic(const Polynomial& f);

 private:
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b, const VariableSet& vars);
Polynomial sub(const Polynomial& a, const Polynomial& b, const VariableSet& vars);

/// Multiplication by a single term preserves sortedness (multiplicativity of
/// the monomial order), so no re-sort is needed.
Polynomial mul_term(const Polynomial& f, const Term& t);

Polynomial negated(const Polynomial& f);

/// Scales so the leading coefficient is 1. Requires nonzero input.
Polynomial monic(const Polynomial& f);

}  // namespace rankone

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rankone/poly.hpp"

namespace rankone {

/// Quotients of a multivariate division, parallel to the divisor list:
/// f = sum_i quotients[i] * G[i] + remainder.
struct ReductionTrace {
  std::vector<Polynomial> quotients;
};

/// Multivariate division with the first-divisor-wins rule. The remainder has
/// no monomial divisible by any initial monomial of G; deterministic given
/// the list order of G.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G,
                  const VariableSet& vars, ReductionTrace* trace = nullptr);

/// S(f,g) = (lcm/lt(f)) f - (lcm/lt(g)) g with lcm of the initial monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const VariableSet& vars);

struct PairFailure {
  std::size_t i = 0, j = 0;
  Polynomial remainder;
};

struct VerifyReport {
  bool ok = true;
  std::optional<PairFailure> failure;
  std::size_t pairs_total = 0;
  std::size_t pairs_coprime_skipped = 0;
  std::size_t pairs_reduced = 0;
};

/// Buchberger criterion: every pairwise S-polynomial reduces to zero.
/// Pairs with coprime initial monomials are skipped. Stops at the first
/// failing pair (lexicographic pair order) and returns its remainder.
VerifyReport buchberger_verify(const std::vector<Polynomial>& G,
                               const VariableSet& vars);

/// Buchberger's algorithm with the normal pair-selection strategy (lcm
/// degree, then pair index) and the coprime criterion, followed by
/// minimalization and inter-reduction. Returns the unique reduced Groebner
/// basis, sorted by ascending initial monomial.
std::vector<Polynomial> buchberger_complete(const std::vector<Polynomial>& G,
                                            const VariableSet& vars);

/// Minimal monomial generating set of (in(g) : g in G). G is assumed to be a
/// Groebner basis (assert via buchberger_verify first).
std::vector<Monomial> initial_ideal(const std::vector<Polynomial>& G,
                                    const VariableSet& vars);

}  // namespace rankone

#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankone {

// Exact arithmetic only: arbitrary-precision integers for series numerators
// and counting, rationals for polynomial coefficients.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a computation exceeds its desk-scale budget. Callers may
/// retry with an explicit override; the error is never silently downgraded
/// to a truncated result.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int binomial(int n, int k);

/// binomial() narrowed to long long; throws on overflow.
long long binomial_ll(int n, int k);

}  // namespace rankone

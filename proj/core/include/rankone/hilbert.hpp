#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankone/groebner.hpp"

namespace rankone {

/// Rational form N(t)/(1-t)^d with integer numerator. Construction cancels
/// all possible (1-t) factors, so N(1) != 0 unless N = 0 or d = 0 blocks
/// further cancellation; equality compares cross-multiplied numerators and
/// is therefore independent of representation.
class HilbertSeries {
 public:
  HilbertSeries() = default;  // the zero series
  HilbertSeries(std::vector<Int> numerator, int denom_power);

  static HilbertSeries free_ring(int nvars);

  const std::vector<Int>& numerator() const { return num_; }
  int denom_power() const { return denom_; }
  bool is_zero() const { return num_.empty(); }
  Int numerator_at_one() const;

  /// Multiplies by (1-t)^k, i.e. cancels k denominator factors.
  HilbertSeries times_one_minus_t(int k) const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

  std::string str() const;
  nlohmann::json json() const;
  static HilbertSeries from_json(const nlohmann::json& j);

 private:
  void canonicalize();

  std::vector<Int> num_;
  int denom_ = 0;
};

/// Monomial ideal in a polynomial ring with nvars variables; generators kept
/// minimal (no generator divides another).
struct MonomialIdeal {
  std::vector<Monomial> generators;
  int nvars = 0;

  static MonomialIdeal make(std::vector<Monomial> gens, int nvars);
};

/// Exact Hilbert series of the quotient by a monomial ideal, graded by total
/// degree. Computed by the pivot recursion
///   K(I) = K(I \ {m}) - t^deg(m) K((I \ {m}) : m)
/// on the last generator, with memoization on minimalized generator sets and
/// multiplicative splitting across support-disjoint components.
HilbertSeries hilbert_series_monomial_quotient(const MonomialIdeal& ideal);

/// Squared binomial coefficients (n choose k)^2, k = 0..n.
std::vector<Int> narayana_c(int n);

/// narayana numerator over (1-t)^n.
HilbertSeries paper_series_nn(int n);

/// narayana numerator over (1-t)^(2n).
HilbertSeries omin_series(int n);

/// paper_series_nn(n) == (1-t)^n * omin_series(n) as exact canonical forms.
bool regular_sequence_identity(int n);

bool squarefree_check(const MonomialIdeal& ideal);
bool h_symmetry_check(const std::vector<long long>& h);

struct OminViaGB {
  HilbertSeries series;
  bool matches_paper = false;
  std::size_t reduced_basis_size = 0;
};

/// Completes the 2x2 minors of a full generic (n+1) x (n+1) matrix together
/// with the trace form to a reduced Groebner basis, takes the initial ideal,
/// and compares its Hilbert series with omin_series(n). Budgeted to n = 2
/// unless allow_large. The trace can be omitted (negative control) and the
/// variable order overridden.
OminViaGB verify_omin_via_gb(int n, bool allow_large = false,
                             bool include_trace = true,
                             const std::optional<VariableSet>& order = {});

}  // namespace rankone

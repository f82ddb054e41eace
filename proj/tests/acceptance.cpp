// Acceptance suite: runs every top-level claim the library is meant to
// certify, printing one pass/fail line per criterion, and enforcing the
// stated runtime ceilings. Exit code 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rankone/cluster.hpp"
#include "rankone/hilbert.hpp"
#include "rankone/orderposet.hpp"
#include "rankone/verify.hpp"

using namespace rankone;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;  // 0 = unlimited
  std::function<bool()> run;
};

// Published rank-2 compatibility degrees in the basis
// (-a1, -a2, a1, a2, a1+a2, 2a1+a2).
constexpr int kTableC2[6][6] = {
    {0, 0, 1, 0, 1, 2}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 2, 1, 0},
    {0, 1, 1, 0, 0, 1}, {1, 2, 1, 0, 0, 0}, {1, 1, 0, 1, 0, 0},
};

bool criterion_compat_table() {
  Report report = compat_table_report(2);
  const auto& degrees = report.artifacts.at("degrees");
  if (degrees.size() != 6) return false;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (degrees[i][j].get<int>() != kTableC2[i][j]) return false;
  return true;
}

bool criterion_predicate_agreement() {
  for (int n = 2; n <= 5; ++n) {
    Rank rank(n);
    auto roots = almost_positive_roots(rank);
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = 0; b < roots.size(); ++b)
        if (is_compatible(roots[a], roots[b], rank) !=
            is_compatible_positional(roots[a], roots[b], rank))
          return false;
  }
  return true;
}

bool criterion_universal_gb() {
  for (int n = 2; n <= 4; ++n) {
    if (!verify_universal_gb(Labeling::spade(Rank(n)), 20, 1001 + n).all_ok())
      return false;
    if (!verify_universal_gb(Labeling::heart(Rank(n)), 20, 2002 + n).all_ok())
      return false;
  }
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 20; ++trial) {
    ZeroPattern z = ZeroPattern::random(5, 5, rng);
    if (!verify_universal_gb(Labeling::row_major(z), 5, rng()).all_ok())
      return false;
  }
  return true;
}

bool criterion_degeneration_match() {
  for (int n = 2; n <= 4; ++n)
    if (!match_initial_to_sr(Rank(n))) return false;
  return true;
}

bool criterion_hilbert_series() {
  for (int n = 2; n <= 4; ++n) {
    Labeling lab = Labeling::spade(Rank(n));
    HilbertSeries series = hilbert_series_monomial_quotient(
        MonomialIdeal::make(initial_generators(lab), lab.var_count()));
    if (!(series == paper_series_nn(n))) return false;
    if (series.numerator_at_one() != binomial(2 * n, n)) return false;
  }
  return true;
}

bool criterion_macaulay_invariance() {
  std::mt19937_64 rng(4004);
  for (int n = 2; n <= 3; ++n) {
    Labeling lab = Labeling::spade(Rank(n));
    HilbertSeries reference = hilbert_series_monomial_quotient(
        MonomialIdeal::make(initial_generators(lab), lab.var_count()));
    for (int trial = 0; trial < 5; ++trial) {
      VariableSet vars = random_precedence(lab.var_count(), rng);
      HilbertSeries series = hilbert_series_monomial_quotient(
          MonomialIdeal::make(initial_generators(lab, vars), lab.var_count()));
      if (!(series == reference)) return false;
    }
  }
  return true;
}

bool criterion_gorenstein_certificates() {
  for (int n = 2; n <= 4; ++n) {
    Labeling lab = Labeling::spade(Rank(n));
    if (!squarefree_check(MonomialIdeal::make(initial_generators(lab),
                                              lab.var_count())))
      return false;
    SimplicialComplex cx = build_cluster_complex(Rank(n));
    if (!sphere_checks(cx).all()) return false;
    if (!h_symmetry_check(f_h_vectors(cx).h)) return false;
  }
  return true;
}

bool criterion_orbital_varieties() {
  const std::size_t expected_facets[] = {2, 4, 8, 16};
  for (int n = 2; n <= 5; ++n) {
    SimplicialComplex cx = order_complex(Rank(n));
    if (cx.facets().size() != expected_facets[n - 2]) return false;
    if (!verify_shelling(cx, paper_shelling_order_masks(Rank(n))).ok)
      return false;
  }
  for (int n = 2; n <= 4; ++n) {
    if (!match_initial_to_sr_nplus(Rank(n))) return false;
    Labeling lab = Labeling::heart(Rank(n));
    if (!squarefree_check(MonomialIdeal::make(initial_generators(lab),
                                              lab.var_count())))
      return false;
  }
  return true;
}

bool criterion_omin_series() {
  OminViaGB result = verify_omin_via_gb(2);
  if (!result.matches_paper) return false;
  if (!(result.series ==
        HilbertSeries(std::vector<Int>{1, 4, 1}, 4)))
    return false;
  for (int n = 1; n <= 6; ++n)
    if (!regular_sequence_identity(n)) return false;
  return true;
}

bool criterion_tau_structure() {
  for (int n = 2; n <= 6; ++n) {
    Rank rank(n);
    for (const auto& r : almost_positive_roots(rank)) {
      AlmostPositiveRoot s = r;
      for (int k = 0; k <= n; ++k) s = tau(s, rank);
      if (!(s == r)) return false;
    }
    auto orbits = tau_orbits(rank);
    if (orbits.size() != static_cast<std::size_t>(n)) return false;
    std::set<std::vector<int>> all;
    for (const auto& orbit : orbits) {
      if (orbit.size() != static_cast<std::size_t>(n + 1)) return false;
      int negatives = 0;
      for (const auto& r : orbit) {
        all.insert(r.eps());
        if (r.is_negative_simple()) ++negatives;
      }
      if (negatives != 1) return false;
    }
    if (all.size() != static_cast<std::size_t>(n * n + n)) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"compatibility table n=2 matches the published 36 entries", 1.0,
       criterion_compat_table},
      {"degree and positional compatibility agree for n=2..5", 1.0,
       criterion_predicate_agreement},
      {"universal Groebner property: diag/upper n=2..4 (+20 orders), "
       "20 random 5x5 patterns, no new initials",
       60.0, criterion_universal_gb},
      {"initial ideal equals cluster Stanley-Reisner ideal, n=2..4", 30.0,
       criterion_degeneration_match},
      {"Hilbert series equals sum binom(n,k)^2 t^k/(1-t)^n, n=2..4", 30.0,
       criterion_hilbert_series},
      {"Hilbert series invariant across 5 random precedences, n=2..3", 0.0,
       criterion_macaulay_invariance},
      {"reducedness + sphere + symmetric h certificates, n=2..4", 0.0,
       criterion_gorenstein_certificates},
      {"order-complex shelling n=2..5 and upper-pattern match n=2..4", 30.0,
       criterion_orbital_varieties},
      {"full-minor completion series (1+4t+t^2)/(1-t)^4 and regular "
       "sequence identity n=1..6",
       60.0, criterion_omin_series},
      {"tau^(n+1)=id with n orbits of size n+1, n=2..6", 0.0,
       criterion_tau_structure},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      ok = false;
      note = std::string(" (exception: ") + e.what() + ")";
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      ok = false;
      note = " (over time limit)";
    }
    if (!ok) ++failures;
    std::printf("[%s] %2zu. %s [%.3fs]%s\n", ok ? "PASS" : "FAIL", k + 1,
                c.name.c_str(), seconds, note.c_str());
  }
  std::printf("ACCEPTANCE: %zu/%zu criteria passed\n",
              criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

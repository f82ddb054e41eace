#pragma once

#include "rankone/rootsys.hpp"
#include "rankone/simplicial.hpp"

namespace rankone {

/// Simplicial complex on the almost positive roots whose faces are the
/// pairwise compatible subsets; facets are the maximal cliques of the
/// compatibility graph. Ground order matches almost_positive_roots(n).
/// Enumeration budget defaults to n <= 5; the ground set is capped at 64
/// vertices regardless.
SimplicialComplex build_cluster_complex(Rank n, int budget = 5);

/// Variable index of each ground vertex under the composite map
/// root -> array position -> coordinate label of the ambient matrix.
std::vector<int> cluster_vertex_vars(Rank n);

struct FanChecks {
  bool independent = false;      // each maximal cone is simplicial
  bool ridge_two_cones = false;  // each wall bounds exactly two maximal cones
};

/// Certificates that the compatible subsets span a simplicial fan: rays in
/// the simple-root lattice are linearly independent within each facet, and
/// every ridge is shared by exactly two maximal cones. Budgeted to n <= 4 by
/// default; larger ranks are opt-in.
FanChecks fan_checks(Rank n, int budget = 4);

/// True iff the minimal generators of the initial ideal of the 2x2 minors of
/// the zero-diagonal matrix equal the Stanley-Reisner generators of the
/// cluster complex under the composite vertex labeling. Budgeted to n <= 4
/// by default.
bool match_initial_to_sr(Rank n, int budget = 4);

}  // namespace rankone

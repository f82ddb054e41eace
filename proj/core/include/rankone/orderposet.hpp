#pragma once

#include <vector>

#include "rankone/rootsys.hpp"
#include "rankone/simplicial.hpp"

namespace rankone {

/// Interval [lo, hi] with 1 <= lo < hi <= n+1, a point of the containment
/// poset whose order complex is built below.
struct Interval {
  int lo = 0, hi = 0;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// All intervals in lexicographic order; this is the ground ordering of the
/// order complex.
std::vector<Interval> intervals(Rank n);

/// Containment order: a precedes b iff [a.lo, a.hi] is contained in
/// [b.lo, b.hi].
bool interval_contained(Interval a, Interval b);

/// Variable index of an interval under the strictly-upper-triangular
/// coordinate labeling.
int heart_var_of_interval(Interval v, Rank n);

/// Order complex of the containment poset: faces are chains; the facets are
/// the monotone (north/east) lattice paths from some (i,i+1) to (1,n+1).
SimplicialComplex order_complex(Rank n);

/// Facets as interval chains in the shelling order: paths sorted by starting
/// index, then north-before-east at the first differing step.
std::vector<std::vector<Interval>> paper_shelling_order(Rank n);

/// The same order as bitmasks over the ground of order_complex(n).
std::vector<SimplicialComplex::Mask> paper_shelling_order_masks(Rank n);

/// True iff the minimal generators of the initial ideal of the 2x2 minors of
/// a generic strictly upper triangular matrix equal the Stanley-Reisner
/// generators of the order complex under the interval labeling. Budgeted
/// to n <= 4 by default.
bool match_initial_to_sr_nplus(Rank n, int budget = 4);

}  // namespace rankone

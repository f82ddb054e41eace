#include "rankone/orderposet.hpp"

#include <algorithm>
#include <map>

#include "rankone/detideal.hpp"

namespace rankone {

std::vector<Interval> intervals(Rank n) {
  std::vector<Interval> out;
  for (int i = 1; i <= n.n + 1; ++i)
    for (int j = i + 1; j <= n.n + 1; ++j) out.push_back({i, j});
  return out;
}

bool interval_contained(Interval a, Interval b) {
  return b.lo <= a.lo && a.hi <= b.hi;
}

int heart_var_of_interval(Interval v, Rank n) {
  return (2 * n.n - v.hi + v.lo + 2) * (v.hi - v.lo - 1) / 2 + v.lo;
}

std::vector<std::vector<Interval>> paper_shelling_order(Rank n) {
  std::vector<std::vector<Interval>> paths;
  std::vector<Interval> current;
  // North-first depth-first walk emits paths in the shelling order: at the
  // first step where two paths from the same start differ, the earlier one
  // went north.
  auto walk = [&](auto&& self, Interval at) -> void {
    current.push_back(at);
    if (at.lo == 1 && at.hi == n.n + 1) {
      paths.push_back(current);
    } else {
      if (at.lo > 1) self(self, {at.lo - 1, at.hi});
      if (at.hi < n.n + 1) self(self, {at.lo, at.hi + 1});
    }
    current.pop_back();
  };
  for (int i = 1; i <= n.n; ++i) walk(walk, {i, i + 1});
  return paths;
}

namespace {

SimplicialComplex::Mask path_mask(const std::vector<Interval>& path,
                                  const std::vector<Interval>& ground) {
  SimplicialComplex::Mask m = 0;
  for (const Interval& v : path) {
    auto it = std::lower_bound(ground.begin(), ground.end(), v);
    m |= SimplicialComplex::Mask{1} << (it - ground.begin());
  }
  return m;
}

}  // namespace

SimplicialComplex order_complex(Rank n) {
  const auto ground = intervals(n);
  std::vector<std::string> labels;
  labels.reserve(ground.size());
  for (const Interval& v : ground)
    labels.push_back("(" + std::to_string(v.lo) + "," + std::to_string(v.hi) +
                     ")");
  std::vector<SimplicialComplex::Mask> facets;
  for (const auto& path : paper_shelling_order(n))
    facets.push_back(path_mask(path, ground));
  return SimplicialComplex(std::move(labels), std::move(facets));
}

std::vector<SimplicialComplex::Mask> paper_shelling_order_masks(Rank n) {
  const auto ground = intervals(n);
  std::vector<SimplicialComplex::Mask> masks;
  for (const auto& path : paper_shelling_order(n))
    masks.push_back(path_mask(path, ground));
  return masks;
}

bool match_initial_to_sr_nplus(Rank n, int budget) {
  if (n.n > budget)
    throw BudgetError("initial/SR match exceeds the configured budget");
  std::vector<Monomial> lhs = initial_generators(Labeling::heart(n));

  const auto ground = intervals(n);
  std::vector<int> vertex_vars;
  vertex_vars.reserve(ground.size());
  for (const Interval& v : ground)
    vertex_vars.push_back(heart_var_of_interval(v, n));
  std::vector<Monomial> rhs =
      stanley_reisner_generators(order_complex(n), vertex_vars);

  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

}  // namespace rankone

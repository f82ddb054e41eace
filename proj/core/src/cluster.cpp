#include "rankone/cluster.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "rankone/detideal.hpp"

namespace rankone {

namespace {

using Mask = SimplicialComplex::Mask;

// Bron-Kerbosch with pivoting; candidates processed in ascending bit order,
// so the facet list is deterministic.
void max_cliques(const std::vector<Mask>& adj, Mask R, Mask P, Mask X,
                 std::vector<Mask>& out) {
  if (P == 0 && X == 0) {
    out.push_back(R);
    return;
  }
  // Pivot: vertex of P|X with most neighbors in P.
  int pivot = -1, best = -1;
  for (Mask px = P | X; px; px &= px - 1) {
    int u = std::countr_zero(px);
    int k = std::popcount(P & adj[u]);
    if (k > best) {
      best = k;
      pivot = u;
    }
  }
  for (Mask cand = P & ~adj[pivot]; cand; cand &= cand - 1) {
    int v = std::countr_zero(cand);
    Mask bit = Mask{1} << v;
    max_cliques(adj, R | bit, P & adj[v], X & adj[v], out);
    P &= ~bit;
    X |= bit;
  }
}

}  // namespace

SimplicialComplex build_cluster_complex(Rank n, int budget) {
  if (n.n > budget)
    throw BudgetError("cluster complex enumeration exceeds the configured budget");
  const auto roots = almost_positive_roots(n);
  const int nv = static_cast<int>(roots.size());

  std::vector<Mask> adj(nv, 0);
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (is_compatible_positional(roots[a], roots[b], n)) {
        adj[a] |= Mask{1} << b;
        adj[b] |= Mask{1} << a;
      }

  std::vector<Mask> facets;
  Mask all = nv == 64 ? ~Mask{0} : (Mask{1} << nv) - 1;
  max_cliques(adj, 0, all, 0, facets);

  std::vector<std::string> ground;
  ground.reserve(roots.size());
  for (const auto& r : roots) ground.push_back(r.str());
  return SimplicialComplex(std::move(ground), std::move(facets));
}

std::vector<int> cluster_vertex_vars(Rank n) {
  const Labeling lab = Labeling::spade(n);
  std::vector<int> vars;
  for (const auto& r : almost_positive_roots(n)) {
    ArrayPosition p = to_array_position(r, n);
    vars.push_back(lab.var_of(p.row, p.col));
  }
  return vars;
}

namespace {

// Rank of an integer matrix over the rationals by fraction-free elimination.
int integer_rank(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      long long a = m[rank][c], b = m[r][c];
      for (int cc = 0; cc < cols; ++cc) m[r][cc] = m[r][cc] * a - m[rank][cc] * b;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FanChecks fan_checks(Rank n, int budget) {
  if (n.n > budget)
    throw BudgetError("fan checks exceed the configured budget");
  const auto roots = almost_positive_roots(n);
  SimplicialComplex cx = build_cluster_complex(n);

  FanChecks checks;
  checks.independent = true;
  for (const Mask f : cx.facets()) {
    std::vector<std::vector<long long>> rays;
    for (int v = 0; v < cx.vertex_count(); ++v)
      if (f & (Mask{1} << v)) {
        auto coeffs = simple_root_coefficients(roots[v], n);
        rays.emplace_back(coeffs.begin(), coeffs.end());
      }
    if (integer_rank(rays) != static_cast<int>(rays.size())) {
      checks.independent = false;
      break;
    }
  }

  std::map<Mask, int> ridge_count;
  for (const Mask f : cx.facets())
    for (int v = 0; v < cx.vertex_count(); ++v)
      if (f & (Mask{1} << v)) ridge_count[f & ~(Mask{1} << v)] += 1;
  checks.ridge_two_cones =
      std::all_of(ridge_count.begin(), ridge_count.end(),
                  [](const auto& rc) { return rc.second == 2; });
  return checks;
}

bool match_initial_to_sr(Rank n, int budget) {
  if (n.n > budget)
    throw BudgetError("initial/SR match exceeds the configured budget");
  std::vector<Monomial> lhs = initial_generators(Labeling::spade(n));
  SimplicialComplex cx = build_cluster_complex(n);
  std::vector<Monomial> rhs =
      stanley_reisner_generators(cx, cluster_vertex_vars(n));
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

}  // namespace rankone

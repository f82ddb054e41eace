#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankone/monomial.hpp"

namespace rankone {

/// Finite simplicial complex given by its ground set and facet list
/// (bitmasks over ground indices, at most 64 vertices). Facets must be
/// pairwise inclusion-incomparable and cover every vertex.
class SimplicialComplex {
 public:
  using Mask = std::uint64_t;

  SimplicialComplex(std::vector<std::string> ground, std::vector<Mask> facets);
  static SimplicialComplex from_vertex_lists(
      std::vector<std::string> ground,
      const std::vector<std::vector<int>>& facets);

  int vertex_count() const { return static_cast<int>(ground_.size()); }
  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<Mask>& facets() const { return facets_; }

  bool pure() const;
  /// Size of the largest facet (= dim + 1 for pure complexes).
  int max_facet_size() const;
  int dimension() const { return max_facet_size() - 1; }

  bool is_face(Mask s) const;

  /// f_{-1}..f_{d-1} by face cardinality (f_{-1} = 1 for the empty face).
  std::vector<long long> f_vector() const;

  nlohmann::json json() const;
  static SimplicialComplex from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> ground_;
  std::vector<Mask> facets_;
};

struct FHVectors {
  std::vector<long long> f;  // f_{-1}..f_{d-1}
  std::vector<long long> h;  // h_0..h_d
};

/// f by rank-wise face counting and h from the standard transform
/// sum_i f_{i-1} t^i (1-t)^{d-i} = sum_i h_i t^i. Throws on non-pure input.
FHVectors f_h_vectors(const SimplicialComplex& cx);

/// Minimal non-faces as squarefree monomials, vertex k (0-based) mapped to
/// x_{vertex_vars[k]} (identity labeling x_{k+1} by default).
std::vector<Monomial> stanley_reisner_generators(const SimplicialComplex& cx);
std::vector<Monomial> stanley_reisner_generators(
    const SimplicialComplex& cx, const std::vector<int>& vertex_vars);

struct SphereChecks {
  bool pure = false;
  bool euler_ok = false;    // Euler characteristic of S^{d-1}: 1 + (-1)^(d-1)
  bool ridge_ok = false;    // every (d-2)-face lies in exactly 2 facets
  bool connected = false;   // facet-ridge adjacency graph connected
  bool all() const { return pure && euler_ok && ridge_ok && connected; }
};

SphereChecks sphere_checks(const SimplicialComplex& cx);

struct ShellingResult {
  bool ok = true;
  std::size_t failing_index = 0;  // 1-based position in the order when !ok
};

/// Checks that each facet meets the subcomplex of its predecessors in a
/// nonempty union of its maximal proper faces. The order must enumerate the
/// facets exactly once.
ShellingResult verify_shelling(const SimplicialComplex& cx,
                               const std::vector<SimplicialComplex::Mask>& order);

}  // namespace rankone

#include "rankone/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace rankone {

SimplicialComplex::SimplicialComplex(std::vector<std::string> ground,
                                     std::vector<Mask> facets)
    : ground_(std::move(ground)), facets_(std::move(facets)) {
  if (ground_.size() > 64)
    throw std::invalid_argument("at most 64 vertices supported");
  const Mask full = ground_.empty() ? 0 : (~Mask{0} >> (64 - ground_.size()));
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  Mask covered = 0;
  for (std::size_t a = 0; a < facets_.size(); ++a) {
    if (facets_[a] == 0 || (facets_[a] & ~full))
      throw std::invalid_argument("facet out of range");
    covered |= facets_[a];
    for (std::size_t b = 0; b < facets_.size(); ++b)
      if (a != b && (facets_[a] & facets_[b]) == facets_[a])
        throw std::invalid_argument("facets must be inclusion-incomparable");
  }
  if (covered != full)
    throw std::invalid_argument("every vertex must lie in some facet");
}

SimplicialComplex SimplicialComplex::from_vertex_lists(
    std::vector<std::string> ground,
    const std::vector<std::vector<int>>& facets) {
  std::vector<Mask> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) {
    Mask m = 0;
    for (int v : f) {
      if (v < 0 || v >= static_cast<int>(ground.size()))
        throw std::invalid_argument("facet vertex out of range");
      m |= Mask{1} << v;
    }
    masks.push_back(m);
  }
  return SimplicialComplex(std::move(ground), std::move(masks));
}

bool SimplicialComplex::pure() const {
  for (const Mask f : facets_)
    if (std::popcount(f) != std::popcount(facets_.front())) return false;
  return true;
}

int SimplicialComplex::max_facet_size() const {
  int d = 0;
  for (const Mask f : facets_) d = std::max(d, std::popcount(f));
  return d;
}

bool SimplicialComplex::is_face(Mask s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](Mask f) { return (s & ~f) == 0; });
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::set<Mask> faces;
  for (const Mask f : facets_) {
    Mask s = f;
    while (true) {
      faces.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<long long> fv(max_facet_size() + 1, 0);
  for (const Mask s : faces) fv[std::popcount(s)] += 1;
  return fv;
}

nlohmann::json SimplicialComplex::json() const {
  nlohmann::json j;
  j["ground"] = ground_;
  auto arr = nlohmann::json::array();
  for (const Mask f : facets_) {
    auto face = nlohmann::json::array();
    for (int v = 0; v < vertex_count(); ++v)
      if (f & (Mask{1} << v)) face.push_back(v);
    arr.push_back(face);
  }
  j["facets"] = arr;
  return j;
}

SimplicialComplex SimplicialComplex::from_json(const nlohmann::json& j) {
  std::vector<std::string> ground = j.at("ground").get<std::vector<std::string>>();
  std::vector<std::vector<int>> facets =
      j.at("facets").get<std::vector<std::vector<int>>>();
  return from_vertex_lists(std::move(ground), facets);
}

FHVectors f_h_vectors(const SimplicialComplex& cx) {
  if (!cx.pure())
    throw std::invalid_argument("h-vector requires a pure complex");
  FHVectors fh;
  fh.f = cx.f_vector();
  const int d = cx.max_facet_size();
  // sum_i f_{i-1} t^i (1-t)^(d-i), expanded exactly.
  fh.h.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    long long binom = 1;  // (d-i choose k) * (-1)^k accumulated below
    for (int k = 0; k <= d - i; ++k) {
      long long sign = (k % 2 == 0) ? 1 : -1;
      fh.h[i + k] += fh.f[i] * sign * binom;
      binom = binom * (d - i - k) / (k + 1);
    }
  }
  return fh;
}

std::vector<Monomial> stanley_reisner_generators(const SimplicialComplex& cx) {
  std::vector<int> vars(cx.vertex_count());
  for (int v = 0; v < cx.vertex_count(); ++v) vars[v] = v + 1;
  return stanley_reisner_generators(cx, vars);
}

std::vector<Monomial> stanley_reisner_generators(
    const SimplicialComplex& cx, const std::vector<int>& vertex_vars) {
  using Mask = SimplicialComplex::Mask;
  if (static_cast<int>(vertex_vars.size()) != cx.vertex_count())
    throw std::invalid_argument("vertex labeling size mismatch");
  const int nv = cx.vertex_count();
  const int max_size = cx.max_facet_size() + 1;

  std::vector<Mask> nonfaces;
  std::vector<Monomial> gens;
  std::vector<int> pick;
  // Enumerate k-subsets in lexicographic order; a subset containing a known
  // minimal non-face is skipped, so any remaining non-face is minimal.
  auto emit = [&](Mask s) {
    std::vector<std::pair<int, int>> exps;
    for (int v = 0; v < nv; ++v)
      if (s & (Mask{1} << v)) exps.emplace_back(vertex_vars[v], 1);
    gens.push_back(Monomial::from_exponents(std::move(exps)));
  };
  auto contains_nonface = [&](Mask s) {
    return std::any_of(nonfaces.begin(), nonfaces.end(),
                       [&](Mask nf) { return (nf & ~s) == 0; });
  };
  for (int k = 1; k <= max_size; ++k) {
    std::vector<Mask> found;
    pick.assign(k, 0);
    // Iterative combination walk.
    for (int i = 0; i < k; ++i) pick[i] = i;
    if (k > nv) break;
    while (true) {
      Mask s = 0;
      for (int i = 0; i < k; ++i) s |= Mask{1} << pick[i];
      if (!contains_nonface(s) && !cx.is_face(s)) found.push_back(s);
      int i = k - 1;
      while (i >= 0 && pick[i] == nv - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    for (Mask s : found) {
      nonfaces.push_back(s);
      emit(s);
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

SphereChecks sphere_checks(const SimplicialComplex& cx) {
  using Mask = SimplicialComplex::Mask;
  SphereChecks checks;
  checks.pure = cx.pure();
  const int d = cx.max_facet_size();

  std::vector<long long> fv = cx.f_vector();
  long long euler = 0;
  for (int k = 1; k <= d; ++k) euler += (k % 2 == 1 ? 1 : -1) * fv[k];
  checks.euler_ok = euler == 1 + ((d - 1) % 2 == 0 ? 1 : -1);

  // Ridge incidences: (d-1)-subsets of facets.
  std::map<Mask, int> ridge_count;
  for (const Mask f : cx.facets())
    for (int v = 0; v < cx.vertex_count(); ++v)
      if (f & (Mask{1} << v)) ridge_count[f & ~(Mask{1} << v)] += 1;
  checks.ridge_ok =
      checks.pure &&
      std::all_of(ridge_count.begin(), ridge_count.end(),
                  [](const auto& rc) { return rc.second == 2; });

  // Connectivity of the facet graph (adjacent = sharing a ridge).
  const std::size_t nf = cx.facets().size();
  std::vector<bool> seen(nf, false);
  std::vector<std::size_t> stack;
  if (nf > 0) {
    seen[0] = true;
    stack.push_back(0);
  }
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < nf; ++b) {
      if (seen[b]) continue;
      if (std::popcount(cx.facets()[a] & cx.facets()[b]) == d - 1) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  checks.connected =
      nf > 0 && std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
  return checks;
}

ShellingResult verify_shelling(
    const SimplicialComplex& cx,
    const std::vector<SimplicialComplex::Mask>& order) {
  using Mask = SimplicialComplex::Mask;
  std::vector<Mask> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != cx.facets())
    throw std::invalid_argument("order must enumerate the facets exactly once");

  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Mask F = order[idx];
    // Predecessors giving maximal proper faces of F.
    std::vector<Mask> walls;
    for (std::size_t k = 0; k < idx; ++k)
      if (std::popcount(F & ~order[k]) == 1) walls.push_back(F & order[k]);
    if (walls.empty()) return {false, idx + 1};
    for (std::size_t j = 0; j < idx; ++j) {
      const Mask I = F & order[j];
      bool covered = std::any_of(walls.begin(), walls.end(),
                                 [&](Mask w) { return (I & ~w) == 0; });
      if (!covered) return {false, idx + 1};
    }
  }
  return {true, 0};
}

}  // namespace rankone

#include "rankone/detideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankone {

ZeroPattern ZeroPattern::diagonal(int size) {
  ZeroPattern z;
  z.rows = z.cols = size;
  for (int i = 1; i <= size; ++i) z.zeros.insert({i, i});
  return z;
}

ZeroPattern ZeroPattern::lower_triangle(int size) {
  ZeroPattern z;
  z.rows = z.cols = size;
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= i; ++j) z.zeros.insert({i, j});
  return z;
}

ZeroPattern ZeroPattern::random(int rows, int cols, std::mt19937_64& rng) {
  ZeroPattern z;
  z.rows = rows;
  z.cols = cols;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      if (rng() & 1u) z.zeros.insert({i, j});
  return z;
}

nlohmann::json ZeroPattern::json() const {
  nlohmann::json j;
  j["rows"] = rows;
  j["cols"] = cols;
  auto arr = nlohmann::json::array();
  for (const auto& [r, c] : zeros) arr.push_back({r, c});
  j["zeros"] = arr;
  return j;
}

ZeroPattern ZeroPattern::from_json(const nlohmann::json& j) {
  ZeroPattern z;
  z.rows = j.at("rows").get<int>();
  z.cols = j.at("cols").get<int>();
  if (z.rows < 1 || z.cols < 1)
    throw std::invalid_argument("zero pattern needs positive dimensions");
  for (const auto& entry : j.at("zeros")) {
    int r = entry.at(0).get<int>();
    int c = entry.at(1).get<int>();
    if (r < 1 || r > z.rows || c < 1 || c > z.cols)
      throw std::invalid_argument("zero position out of range");
    z.zeros.insert({r, c});
  }
  return z;
}

Labeling::Labeling(ZeroPattern pattern, std::map<std::pair<int, int>, int> vars)
    : pattern_(std::move(pattern)), var_(std::move(vars)) {
  const int expected =
      pattern_.rows * pattern_.cols - static_cast<int>(pattern_.zeros.size());
  count_ = expected;
  pos_.assign(expected, {0, 0});
  std::vector<bool> seen(expected + 1, false);
  int assigned = 0;
  for (const auto& [p, v] : var_) {
    if (pattern_.is_zero(p.first, p.second))
      throw std::invalid_argument("labeled position is in the zero pattern");
    if (v < 1 || v > expected || seen[v])
      throw std::invalid_argument("labeling is not a bijection onto [1,K]");
    seen[v] = true;
    pos_[v - 1] = p;
    ++assigned;
  }
  if (assigned != expected)
    throw std::invalid_argument("labeling does not cover the support");
}

Labeling Labeling::spade(Rank n) {
  ZeroPattern z = ZeroPattern::diagonal(n.n + 1);
  std::map<std::pair<int, int>, int> vars;
  for (int i = 1; i <= n.n + 1; ++i)
    for (int j = 1; j <= n.n + 1; ++j) {
      if (i == j) continue;
      int v = (i < j) ? (n.n + 1) * (i - j + n.n) + i
                      : (n.n + 1) * (i - j - 1) + i;
      vars[{i, j}] = v;
    }
  return Labeling(std::move(z), std::move(vars));
}

Labeling Labeling::heart(Rank n) {
  ZeroPattern z = ZeroPattern::lower_triangle(n.n + 1);
  std::map<std::pair<int, int>, int> vars;
  for (int i = 1; i <= n.n + 1; ++i)
    for (int j = i + 1; j <= n.n + 1; ++j)
      vars[{i, j}] = (2 * n.n - j + i + 2) * (j - i - 1) / 2 + i;
  return Labeling(std::move(z), std::move(vars));
}

Labeling Labeling::row_major(const ZeroPattern& pattern) {
  std::map<std::pair<int, int>, int> vars;
  int next = 1;
  for (int i = 1; i <= pattern.rows; ++i)
    for (int j = 1; j <= pattern.cols; ++j)
      if (!pattern.is_zero(i, j)) vars[{i, j}] = next++;
  return Labeling(pattern, std::move(vars));
}

int Labeling::var_of(int i, int j) const {
  auto it = var_.find({i, j});
  if (it == var_.end())
    throw std::invalid_argument("position is not in the support");
  return it->second;
}

std::pair<int, int> Labeling::position_of(int var) const {
  if (var < 1 || var > count_)
    throw std::invalid_argument("variable index out of range");
  return pos_[var - 1];
}

std::vector<Polynomial> minor_generators(const Labeling& lab) {
  const ZeroPattern& z = lab.pattern();
  const VariableSet vars = VariableSet::identity(lab.var_count());
  std::vector<Polynomial> gens;
  for (int k = 1; k <= z.rows; ++k)
    for (int m = k + 1; m <= z.rows; ++m)
      for (int i = 1; i <= z.cols; ++i)
        for (int j = i + 1; j <= z.cols; ++j) {
          std::vector<Term> terms;
          if (!z.is_zero(k, i) && !z.is_zero(m, j))
            terms.push_back(
                Term{1, Monomial::variable(lab.var_of(k, i)) *
                            Monomial::variable(lab.var_of(m, j))});
          if (!z.is_zero(k, j) && !z.is_zero(m, i))
            terms.push_back(
                Term{-1, Monomial::variable(lab.var_of(k, j)) *
                             Monomial::variable(lab.var_of(m, i))});
          Polynomial minor = Polynomial::from_terms(std::move(terms), vars);
          if (!minor.is_zero()) gens.push_back(std::move(minor));
        }
  return gens;
}

bool UniversalGBReport::all_ok() const {
  return std::all_of(runs.begin(), runs.end(),
                     [](const OrderRun& r) { return r.ok(); });
}

namespace {

OrderRun run_order(const std::vector<Polynomial>& gens,
                   const VariableSet& vars) {
  OrderRun run;
  run.precedence = vars.precedence();
  std::vector<Polynomial> G;
  G.reserve(gens.size());
  for (const auto& g : gens) G.push_back(g.resorted(vars));

  VerifyReport vr = buchberger_verify(G, vars);
  run.gb_ok = vr.ok;
  run.failure = vr.failure;

  std::vector<Polynomial> completed = buchberger_complete(G, vars);
  run.no_new_initials = std::all_of(
      completed.begin(), completed.end(), [&](const Polynomial& h) {
        return std::any_of(G.begin(), G.end(), [&](const Polynomial& g) {
          return g.initial_monomial().divides(h.initial_monomial());
        });
      });
  return run;
}

}  // namespace

UniversalGBReport verify_universal_gb(const Labeling& lab, int random_orders,
                                      std::uint64_t seed) {
  UniversalGBReport report;
  report.seed = seed;
  std::vector<Polynomial> gens = minor_generators(lab);
  report.generator_count = gens.size();

  report.runs.push_back(run_order(gens, VariableSet::identity(lab.var_count())));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_orders; ++t)
    report.runs.push_back(
        run_order(gens, random_precedence(lab.var_count(), rng)));
  return report;
}

std::vector<Monomial> initial_generators(const Labeling& lab) {
  return initial_generators(lab, VariableSet::identity(lab.var_count()));
}

std::vector<Monomial> initial_generators(const Labeling& lab,
                                         const VariableSet& vars) {
  std::vector<Polynomial> gens = minor_generators(lab);
  std::vector<Polynomial> G;
  G.reserve(gens.size());
  for (const auto& g : gens) G.push_back(g.resorted(vars));
  return initial_ideal(G, vars);
}

}  // namespace rankone

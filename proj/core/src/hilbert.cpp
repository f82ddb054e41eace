#include "rankone/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rankone/detideal.hpp"

namespace rankone {

namespace {

using Coeffs = std::vector<Int>;

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int eval_at_one(const Coeffs& p) {
  return std::accumulate(p.begin(), p.end(), Int(0));
}

Coeffs subtract(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Coeffs shifted(Coeffs p, int k) {
  if (p.empty()) return p;
  p.insert(p.begin(), static_cast<std::size_t>(k), Int(0));
  return p;
}

// Exact division by (1-t); requires p(1) == 0.
Coeffs divide_one_minus_t(const Coeffs& p) {
  if (p.empty()) return {};
  Coeffs q(p.size() - 1, 0);
  Int acc = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    acc += p[i];
    q[i] = acc;
  }
  trim(q);
  return q;
}

Coeffs one_minus_t_pow(int k) {
  Coeffs r{1};
  Coeffs f{1, -1};
  for (int i = 0; i < k; ++i) r = multiply(r, f);
  return r;
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<Int> numerator, int denom_power)
    : num_(std::move(numerator)), denom_(denom_power) {
  if (denom_ < 0) throw std::invalid_argument("negative denominator power");
  canonicalize();
}

void HilbertSeries::canonicalize() {
  trim(num_);
  if (num_.empty()) {
    denom_ = 0;
    return;
  }
  while (denom_ > 0 && eval_at_one(num_) == 0) {
    num_ = divide_one_minus_t(num_);
    --denom_;
  }
}

HilbertSeries HilbertSeries::free_ring(int nvars) {
  return HilbertSeries({Int(1)}, nvars);
}

Int HilbertSeries::numerator_at_one() const { return eval_at_one(num_); }

HilbertSeries HilbertSeries::times_one_minus_t(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  return HilbertSeries(multiply(num_, one_minus_t_pow(k)), denom_);
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  // Cross-multiplied comparison; robust even when a residual (1-t) factor
  // cannot be cancelled because the denominator power is already zero.
  const int d = std::max(a.denom_, b.denom_);
  Coeffs lhs = multiply(a.num_, one_minus_t_pow(d - a.denom_));
  Coeffs rhs = multiply(b.num_, one_minus_t_pow(d - b.denom_));
  return lhs == rhs;
}

std::string HilbertSeries::str() const {
  if (num_.empty()) return "0";
  std::string n;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Int a = abs(num_[i]);
    if (n.empty()) {
      if (num_[i] < 0) n += "-";
    } else {
      n += num_[i] < 0 ? " - " : " + ";
    }
    if (a != 1 || i == 0) n += a.str();
    if (i == 1) n += "t";
    if (i > 1) n += "t^" + std::to_string(i);
  }
  if (denom_ == 0) return n;
  return "(" + n + ")/(1-t)^" + std::to_string(denom_);
}

nlohmann::json HilbertSeries::json() const {
  nlohmann::json j;
  auto arr = nlohmann::json::array();
  for (const Int& c : num_) {
    if (c > Int(std::numeric_limits<long long>::max()) ||
        c < Int(std::numeric_limits<long long>::min()))
      throw std::overflow_error("series coefficient exceeds int64");
    arr.push_back(static_cast<long long>(c));
  }
  j["numerator"] = arr;
  j["denom_power"] = denom_;
  return j;
}

HilbertSeries HilbertSeries::from_json(const nlohmann::json& j) {
  std::vector<Int> num;
  for (const auto& c : j.at("numerator")) num.push_back(Int(c.get<long long>()));
  return HilbertSeries(std::move(num), j.at("denom_power").get<int>());
}

MonomialIdeal MonomialIdeal::make(std::vector<Monomial> gens, int nvars) {
  return MonomialIdeal{minimal_monomial_generators(std::move(gens)), nvars};
}

namespace {

// Numerator of the quotient series relative to (1-t)^nvars; independent of
// nvars itself.
struct SeriesContext {
  std::map<std::vector<Monomial>, Coeffs> memo;
};

Coeffs quotient_numerator(std::vector<Monomial> gens, SeriesContext& ctx);

Coeffs quotient_numerator_connected(const std::vector<Monomial>& gens,
                                    SeriesContext& ctx) {
  if (gens.size() == 1) {
    Coeffs r(gens[0].degree() + 1, 0);
    r[0] = 1;
    r[gens[0].degree()] -= 1;
    return r;
  }
  auto memo = ctx.memo.find(gens);
  if (memo != ctx.memo.end()) return memo->second;

  const Monomial pivot = gens.back();
  std::vector<Monomial> rest(gens.begin(), gens.end() - 1);

  std::vector<Monomial> colon;
  colon.reserve(rest.size());
  for (const Monomial& g : rest) colon.push_back(g.divided_by(gcd(g, pivot)));

  Coeffs r = subtract(quotient_numerator(rest, ctx),
                      shifted(quotient_numerator(std::move(colon), ctx),
                              pivot.degree()));
  ctx.memo.emplace(gens, r);
  return r;
}

Coeffs quotient_numerator(std::vector<Monomial> gens, SeriesContext& ctx) {
  gens = minimal_monomial_generators(std::move(gens));
  if (!gens.empty() && gens.front().is_one()) return {};  // unit ideal
  if (gens.empty()) return {1};
  if (gens.size() == 1) return quotient_numerator_connected(gens, ctx);

  // Split into components with disjoint variable support; the numerators
  // multiply.
  const std::size_t k = gens.size();
  std::vector<std::size_t> comp(k);
  for (std::size_t i = 0; i < k; ++i) comp[i] = i;
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (!gens[a].coprime_to(gens[b])) comp[find(a)] = find(b);

  std::map<std::size_t, std::vector<Monomial>> groups;
  for (std::size_t i = 0; i < k; ++i) groups[find(i)].push_back(gens[i]);

  if (groups.size() == 1) return quotient_numerator_connected(gens, ctx);
  Coeffs r{1};
  for (auto& [root, group] : groups)
    r = multiply(r, quotient_numerator_connected(group, ctx));
  return r;
}

}  // namespace

HilbertSeries hilbert_series_monomial_quotient(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.generators)
    if (g.max_variable() > ideal.nvars)
      throw std::invalid_argument("generator uses a variable beyond nvars");
  SeriesContext ctx;
  return HilbertSeries(quotient_numerator(ideal.generators, ctx), ideal.nvars);
}

std::vector<Int> narayana_c(int n) {
  std::vector<Int> v;
  v.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    Int b = binomial(n, k);
    v.push_back(b * b);
  }
  return v;
}

HilbertSeries paper_series_nn(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return HilbertSeries(narayana_c(n), n);
}

HilbertSeries omin_series(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return HilbertSeries(narayana_c(n), 2 * n);
}

bool regular_sequence_identity(int n) {
  return omin_series(n).times_one_minus_t(n) == paper_series_nn(n);
}

bool squarefree_check(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

bool h_symmetry_check(const std::vector<long long>& h) {
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] != h[h.size() - 1 - k]) return false;
  return true;
}

OminViaGB verify_omin_via_gb(int n, bool allow_large, bool include_trace,
                             const std::optional<VariableSet>& order) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > 2 && !allow_large)
    throw BudgetError("Groebner completion for the full minor ideal is "
                      "budgeted to n = 2; pass the override to go larger");

  const int size = n + 1;
  const int nvars = size * size;
  ZeroPattern empty;
  empty.rows = empty.cols = size;
  const Labeling lab = Labeling::row_major(empty);
  const VariableSet vars = order ? *order : VariableSet::identity(nvars);

  std::vector<Polynomial> gens;
  for (const Polynomial& g : minor_generators(lab))
    gens.push_back(g.resorted(vars));
  if (include_trace) {
    std::vector<Term> trace;
    for (int i = 1; i <= size; ++i)
      trace.push_back(Term{1, Monomial::variable(lab.var_of(i, i))});
    gens.push_back(Polynomial::from_terms(std::move(trace), vars));
  }

  OminViaGB out;
  std::vector<Polynomial> basis = buchberger_complete(gens, vars);
  out.reduced_basis_size = basis.size();
  std::vector<Monomial> init = initial_ideal(basis, vars);
  out.series = hilbert_series_monomial_quotient(
      MonomialIdeal::make(std::move(init), nvars));
  out.matches_paper = out.series == omin_series(n);
  return out;
}

}  // namespace rankone

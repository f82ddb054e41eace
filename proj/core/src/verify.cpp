#include "rankone/verify.hpp"

#include <algorithm>

#include "rankone/cluster.hpp"
#include "rankone/hilbert.hpp"
#include "rankone/orderposet.hpp"

namespace rankone {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "";
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::Pass;
  });
}

bool Report::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::Fail;
  });
}

nlohmann::json Report::json() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  auto arr = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["details"] = c.details;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  j["artifacts"] = artifacts;
  return j;
}

namespace {

nlohmann::json monomials_json(const std::vector<Monomial>& ms) {
  auto arr = nlohmann::json::array();
  for (const Monomial& m : ms) arr.push_back(m.str());
  return arr;
}

nlohmann::json gb_runs_json(const UniversalGBReport& rep) {
  nlohmann::json j;
  j["generators"] = rep.generator_count;
  j["seed"] = rep.seed;
  j["orders_tested"] = rep.runs.size();
  auto failures = nlohmann::json::array();
  for (std::size_t k = 0; k < rep.runs.size(); ++k) {
    const OrderRun& run = rep.runs[k];
    if (run.ok()) continue;
    nlohmann::json f;
    f["order_index"] = k;
    f["precedence"] = run.precedence;
    if (run.failure) {
      f["pair"] = {run.failure->i, run.failure->j};
      f["remainder"] = run.failure->remainder.str();
    }
    f["no_new_initials"] = run.no_new_initials;
    failures.push_back(f);
  }
  j["failures"] = failures;
  return j;
}

Check check_bool(const std::string& name, bool ok, nlohmann::json details) {
  return Check{name, ok ? CheckStatus::Pass : CheckStatus::Fail,
               std::move(details)};
}

Report skipped_report(Report report, const std::string& reason,
                      std::vector<std::string> names) {
  for (auto& name : names) {
    Check c;
    c.name = std::move(name);
    c.status = CheckStatus::Skipped;
    c.details = {{"reason", reason}};
    report.checks.push_back(std::move(c));
  }
  return report;
}

void run_case_nn(Report& report, int n, int trials, std::uint64_t seed,
                 int budget) {
  const Rank rank(n);
  const Labeling lab = Labeling::spade(rank);

  const auto gens = minor_generators(lab);
  const bool gens_ok = std::all_of(
      gens.begin(), gens.end(), [](const Polynomial& g) {
        return g.size() <= 2 &&
               std::all_of(g.terms().begin(), g.terms().end(),
                           [](const Term& t) {
                             return t.mono.degree() == 2 &&
                                    (t.coeff == 1 || t.coeff == -1);
                           });
      });
  report.checks.push_back(check_bool(
      "minor_generation", gens_ok,
      {{"count", gens.size()}, {"variables", lab.var_count()}}));

  UniversalGBReport gb = verify_universal_gb(lab, trials, seed);
  report.checks.push_back(
      check_bool("groebner_universal", gb.all_ok(), gb_runs_json(gb)));

  SimplicialComplex cx = build_cluster_complex(rank, std::max(5, budget));

  const bool match = match_initial_to_sr(rank, budget);
  std::vector<Monomial> init = initial_generators(lab);
  nlohmann::json match_details = {{"initial_generators", init.size()}};
  if (!match) {
    match_details["initial"] = monomials_json(init);
    match_details["stanley_reisner"] = monomials_json(
        stanley_reisner_generators(cx, cluster_vertex_vars(rank)));
  }
  report.checks.push_back(
      check_bool("initial_sr_match", match, match_details));

  HilbertSeries series = hilbert_series_monomial_quotient(
      MonomialIdeal::make(init, lab.var_count()));
  HilbertSeries expected = paper_series_nn(n);
  const bool catalan_ok =
      series.numerator_at_one() == binomial(2 * n, n);
  report.checks.push_back(check_bool(
      "hilbert_series", series == expected && catalan_ok,
      {{"series", series.json()}, {"expected", expected.json()}}));
  report.artifacts["hilbert_series"] = series.json();

  report.checks.push_back(check_bool(
      "squarefree", squarefree_check(MonomialIdeal::make(init, lab.var_count())),
      {{"initial_generators", monomials_json(init)}}));

  SphereChecks sphere = sphere_checks(cx);
  report.checks.push_back(check_bool(
      "sphere_checks", sphere.all(),
      {{"pure", sphere.pure},
       {"euler_ok", sphere.euler_ok},
       {"ridge_ok", sphere.ridge_ok},
       {"connected", sphere.connected},
       {"facets", cx.facets().size()}}));

  FHVectors fh = f_h_vectors(cx);
  report.checks.push_back(check_bool(
      "h_symmetry", h_symmetry_check(fh.h), {{"h", fh.h}}));
  report.artifacts["h_vector"] = fh.h;
}

void run_case_nplus(Report& report, int n, int trials, std::uint64_t seed,
                    int budget) {
  const Rank rank(n);
  const Labeling lab = Labeling::heart(rank);

  const auto gens = minor_generators(lab);
  report.checks.push_back(check_bool(
      "minor_generation", true,
      {{"count", gens.size()}, {"variables", lab.var_count()}}));

  UniversalGBReport gb = verify_universal_gb(lab, trials, seed);
  report.checks.push_back(
      check_bool("groebner_universal", gb.all_ok(), gb_runs_json(gb)));

  const bool match = match_initial_to_sr_nplus(rank, budget);
  std::vector<Monomial> init = initial_generators(lab);
  nlohmann::json match_details = {{"initial_generators", init.size()}};
  if (!match) {
    const auto ground = intervals(rank);
    std::vector<int> vertex_vars;
    for (const Interval& v : ground)
      vertex_vars.push_back(heart_var_of_interval(v, rank));
    match_details["initial"] = monomials_json(init);
    match_details["stanley_reisner"] =
        monomials_json(stanley_reisner_generators(order_complex(rank), vertex_vars));
  }
  report.checks.push_back(
      check_bool("initial_sr_match", match, match_details));

  SimplicialComplex cx = order_complex(rank);
  FHVectors fh = f_h_vectors(cx);
  HilbertSeries series = hilbert_series_monomial_quotient(
      MonomialIdeal::make(init, lab.var_count()));
  HilbertSeries from_h(std::vector<Int>(fh.h.begin(), fh.h.end()),
                       cx.max_facet_size());
  report.checks.push_back(check_bool(
      "hilbert_series", series == from_h,
      {{"series", series.json()}, {"from_h_vector", from_h.json()}}));
  report.artifacts["hilbert_series"] = series.json();

  report.checks.push_back(check_bool(
      "squarefree", squarefree_check(MonomialIdeal::make(init, lab.var_count())),
      {{"initial_generators", monomials_json(init)}}));

  ShellingResult shelling =
      verify_shelling(cx, paper_shelling_order_masks(rank));
  nlohmann::json details = {{"facets", cx.facets().size()},
                            {"expected_facets", 1 << (n - 1)}};
  if (!shelling.ok) details["failing_index"] = shelling.failing_index;
  const bool facet_count_ok =
      cx.facets().size() == static_cast<std::size_t>(1) << (n - 1);
  report.checks.push_back(
      check_bool("shelling", shelling.ok && facet_count_ok, details));
}

void run_case_omin(Report& report, int n, int trials, std::uint64_t seed) {
  // The report-level budget has already been applied.
  OminViaGB main = verify_omin_via_gb(n, true);
  report.checks.push_back(check_bool(
      "omin_series", main.matches_paper,
      {{"series", main.series.json()},
       {"expected", omin_series(n).json()},
       {"reduced_basis_size", main.reduced_basis_size}}));
  report.artifacts["omin_series"] = main.series.json();

  OminViaGB untraced = verify_omin_via_gb(n, true, false);
  report.checks.push_back(check_bool(
      "trace_negative_control", !untraced.matches_paper,
      {{"series_without_trace", untraced.series.json()}}));

  std::mt19937_64 rng(seed);
  bool invariant = true;
  const int orders = std::max(1, trials);
  for (int t = 0; t < orders && invariant; ++t) {
    VariableSet vars = random_precedence((n + 1) * (n + 1), rng);
    OminViaGB run = verify_omin_via_gb(n, true, true, vars);
    invariant = run.series == main.series;
  }
  report.checks.push_back(check_bool("order_invariance", invariant,
                                     {{"orders_tested", orders}}));

  bool regseq = true;
  for (int k = 1; k <= 6; ++k) regseq = regseq && regular_sequence_identity(k);
  report.checks.push_back(
      check_bool("regular_sequence_identity", regseq, {{"range", "1..6"}}));
}

}  // namespace

Report compat_table_report(int n, const Budgets& budgets) {
  Report report;
  report.command = "compat";
  report.inputs = {{"n", n}, {"mode", "table"}};
  if (n < 2 || n > budgets.compat)
    throw BudgetError("compat table supports 2 <= n <= " +
                      std::to_string(budgets.compat));

  const Rank rank(n);
  const auto roots = compat_table_roots(rank);
  auto labels = nlohmann::json::array();
  for (const auto& r : roots) labels.push_back(r.str());
  auto matrix = nlohmann::json::array();
  for (const auto& a : roots) {
    auto row = nlohmann::json::array();
    for (const auto& b : roots) row.push_back(compatibility_degree(a, b, rank));
    matrix.push_back(row);
  }
  report.artifacts["roots"] = labels;
  report.artifacts["degrees"] = matrix;
  report.checks.push_back(
      check_bool("table_computed", true, {{"size", roots.size()}}));
  return report;
}

Report compat_pair_report(int n, const std::string& a, const std::string& b,
                          const Budgets& budgets) {
  Report report;
  report.command = "compat";
  report.inputs = {{"n", n}, {"mode", "pair"}, {"a", a}, {"b", b}};
  if (n < 2 || n > budgets.compat)
    throw BudgetError("compat supports 2 <= n <= " +
                      std::to_string(budgets.compat));

  const Rank rank(n);
  const AlmostPositiveRoot ra = parse_root(a, rank);
  const AlmostPositiveRoot rb = parse_root(b, rank);
  const int dab = compatibility_degree(ra, rb, rank);
  const int dba = compatibility_degree(rb, ra, rank);
  const bool compat = is_compatible(ra, rb, rank);
  const bool compat_pos = is_compatible_positional(ra, rb, rank);
  report.artifacts = {{"degree_ab", dab},
                      {"degree_ba", dba},
                      {"compatible", compat},
                      {"compatible_positional", compat_pos}};
  report.checks.push_back(check_bool("predicates_agree", compat == compat_pos,
                                     {{"degree", dab}}));
  return report;
}

Report verify_case_report(const std::string& kase, int n, int trials,
                          std::uint64_t seed, const Budgets& budgets) {
  Report report;
  report.command = "verify";
  report.inputs = {
      {"case", kase}, {"n", n}, {"trials", trials}, {"seed", seed}};

  if (kase == "nn") {
    if (n < 2 || n > budgets.verify_nn)
      return skipped_report(std::move(report), "n exceeds the Groebner budget",
                            {"minor_generation", "groebner_universal",
                             "initial_sr_match", "hilbert_series", "squarefree",
                             "sphere_checks", "h_symmetry"});
    run_case_nn(report, n, trials, seed, budgets.verify_nn);
  } else if (kase == "nplus") {
    if (n < 2 || n > budgets.verify_nplus)
      return skipped_report(std::move(report), "n exceeds the Groebner budget",
                            {"minor_generation", "groebner_universal",
                             "initial_sr_match", "hilbert_series", "squarefree",
                             "shelling"});
    run_case_nplus(report, n, trials, seed, budgets.verify_nplus);
  } else if (kase == "omin") {
    if (n < 1 || n > budgets.verify_omin)
      return skipped_report(std::move(report), "n exceeds the completion budget",
                            {"omin_series", "trace_negative_control",
                             "order_invariance", "regular_sequence_identity"});
    run_case_omin(report, n, trials, seed);
  } else {
    throw std::invalid_argument("unknown case '" + kase + "'");
  }
  return report;
}

Report gb_report(const ZeroPattern& pattern, int trials, std::uint64_t seed) {
  Report report;
  report.command = "gb";
  report.inputs = {{"pattern", pattern.json()},
                   {"trials", trials},
                   {"seed", seed}};
  const Labeling lab = Labeling::row_major(pattern);
  UniversalGBReport gb = verify_universal_gb(lab, trials, seed);
  report.checks.push_back(
      check_bool("groebner_universal", gb.all_ok(), gb_runs_json(gb)));
  std::vector<Monomial> init = initial_generators(lab);
  report.artifacts["initial_generators"] = monomials_json(init);
  HilbertSeries series = hilbert_series_monomial_quotient(
      MonomialIdeal::make(init, lab.var_count()));
  report.artifacts["hilbert_series"] = series.json();
  return report;
}

Report complex_report(const std::string& kind, int n, const Budgets& budgets) {
  Report report;
  report.command = "complex";
  report.inputs = {{"kind", kind}, {"n", n}};

  SimplicialComplex cx = [&]() {
    if (kind == "cluster") {
      if (n < 2 || n > budgets.complex_cluster)
        throw BudgetError("cluster complex supports 2 <= n <= " +
                          std::to_string(budgets.complex_cluster));
      return build_cluster_complex(Rank(n), budgets.complex_cluster);
    }
    if (kind == "order") {
      if (n < 2 || n > budgets.complex_order)
        throw BudgetError("order complex supports 2 <= n <= " +
                          std::to_string(budgets.complex_order));
      return order_complex(Rank(n));
    }
    throw std::invalid_argument("unknown complex kind '" + kind + "'");
  }();

  FHVectors fh = f_h_vectors(cx);
  report.artifacts["complex"] = cx.json();
  report.artifacts["f"] = fh.f;
  report.artifacts["h"] = fh.h;
  report.checks.push_back(check_bool(
      "complex_built", true,
      {{"vertices", cx.vertex_count()}, {"facets", cx.facets().size()}}));
  return report;
}

}  // namespace rankone

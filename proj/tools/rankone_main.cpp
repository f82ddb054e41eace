// Command line surface: compatibility tables, universal Groebner basis
// verification, degeneration/Hilbert-series checks, complex export.
//
// Exit codes: 0 all checks passed (or skipped), 1 at least one check failed,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankone/verify.hpp"

namespace {

using rankone::Budgets;
using rankone::Check;
using rankone::CheckStatus;
using rankone::Report;

Budgets resolve_budgets(std::optional<int> max_n_flag) {
  Budgets b;
  std::optional<int> override = max_n_flag;
  if (!override) {
    if (const char* env = std::getenv("RANKONE_MAX_N")) {
      try {
        override = std::stoi(env);
      } catch (const std::exception&) {
        throw std::invalid_argument("RANKONE_MAX_N is not an integer");
      }
    }
  }
  if (override) {
    b.verify_nn = std::max(b.verify_nn, *override);
    b.verify_nplus = std::max(b.verify_nplus, *override);
    b.verify_omin = std::max(b.verify_omin, *override);
    b.compat = std::max(b.compat, *override);
    b.complex_cluster = std::max(b.complex_cluster, *override);
    b.complex_order = std::max(b.complex_order, *override);
  }
  return b;
}

void print_human(const Report& report) {
  for (const Check& c : report.checks) {
    std::cout << "[" << to_string(c.status) << "] " << c.name;
    if (c.status != CheckStatus::Pass && !c.details.is_null())
      std::cout << "  " << c.details.dump();
    std::cout << "\n";
  }
}

void print_table(const Report& report) {
  const auto& roots = report.artifacts.at("roots");
  const auto& degrees = report.artifacts.at("degrees");
  std::size_t width = 0;
  for (const auto& r : roots)
    width = std::max(width, r.get<std::string>().size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::string label = roots[i].get<std::string>();
    std::cout << label << std::string(width - label.size() + 1, ' ');
    for (std::size_t j = 0; j < degrees[i].size(); ++j)
      std::cout << (j ? " " : "") << degrees[i][j].get<int>();
    std::cout << "\n";
  }
}

int emit(const Report& report, bool as_json, const std::string& out_path,
         bool table_mode = false) {
  nlohmann::json j = report.json();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else if (table_mode) {
    print_table(report);
  } else {
    print_human(report);
    if (report.command == "complex") {
      std::cout << "vertices: "
                << report.artifacts.at("complex").at("ground").size()
                << "  facets: "
                << report.artifacts.at("complex").at("facets").size() << "\n";
      std::cout << "f: " << report.artifacts.at("f").dump()
                << "  h: " << report.artifacts.at("h").dump() << "\n";
    }
  }
  return report.any_failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for rank-one determinantal ideals "
               "and almost-positive-root combinatorics"};
  app.require_subcommand(1);

  std::optional<int> max_n_flag;
  app.add_option("--max-n", max_n_flag,
                 "widen the desk-scale budgets up to this rank "
                 "(env RANKONE_MAX_N)");

  // compat
  auto* compat = app.add_subcommand("compat", "compatibility degrees");
  int compat_n = 2;
  bool compat_table = false;
  std::vector<std::string> pair;
  bool compat_json = false;
  std::string compat_out;
  compat->add_option("--n", compat_n, "rank")->required();
  compat->add_flag("--table", compat_table, "emit the full degree matrix");
  compat->add_option("--pair", pair, "two root strings, e.g. -e1+e2 2e1")
      ->expected(2);
  compat->add_flag("--json", compat_json, "print the JSON report");
  compat->add_option("--out", compat_out, "also write the JSON report here");

  // verify
  auto* verify = app.add_subcommand("verify", "composed verification cases");
  std::string verify_case;
  int verify_n = 2;
  int verify_trials = 5;
  std::uint64_t verify_seed = 1;
  bool verify_json = false;
  std::string verify_out;
  verify->add_option("--case", verify_case, "nn | nplus | omin")->required();
  verify->add_option("--n", verify_n, "rank")->required();
  verify->add_option("--trials", verify_trials, "random order trials");
  verify->add_option("--seed", verify_seed, "PRNG seed");
  verify->add_flag("--json", verify_json, "print the JSON report");
  verify->add_option("--out", verify_out, "also write the JSON report here");

  // gb
  auto* gb = app.add_subcommand(
      "gb", "universal Groebner check for a zero pattern");
  std::string gb_zeros;
  std::string gb_preset;
  int gb_n = 2;
  int gb_trials = 5;
  std::uint64_t gb_seed = 1;
  bool gb_json = false;
  std::string gb_out;
  gb->add_option("--zeros", gb_zeros, "zero-pattern JSON file");
  gb->add_option("--preset", gb_preset, "diag | upper (with --n)");
  gb->add_option("--n", gb_n, "rank for --preset");
  gb->add_option("--trials", gb_trials, "random order trials");
  gb->add_option("--seed", gb_seed, "PRNG seed");
  gb->add_flag("--json", gb_json, "print the JSON report");
  gb->add_option("--out", gb_out, "also write the JSON report here");

  // complex
  auto* complex_cmd = app.add_subcommand("complex", "export a complex");
  std::string complex_kind;
  int complex_n = 2;
  bool complex_json = false;
  std::string complex_out;
  complex_cmd->add_option("--kind", complex_kind, "cluster | order")
      ->required();
  complex_cmd->add_option("--n", complex_n, "rank")->required();
  complex_cmd->add_flag("--json", complex_json, "print the JSON report");
  complex_cmd->add_option("--out", complex_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (argc > 1 && std::string(argv[1]) == "compat")
      std::cerr << "root grammar: e<i>-e<j>, e<i>+e<j>, 2e<i>, -2e<n>, "
                   "-e<i>+e<i+1>, -a<i>\n";
    return 2;
  }

  try {
    const Budgets budgets = resolve_budgets(max_n_flag);
    if (compat->parsed()) {
      if (compat_table != pair.empty())
        throw std::invalid_argument("choose exactly one of --table, --pair");
      Report report =
          compat_table
              ? rankone::compat_table_report(compat_n, budgets)
              : rankone::compat_pair_report(compat_n, pair[0], pair[1], budgets);
      return emit(report, compat_json, compat_out, compat_table && !compat_json);
    }
    if (verify->parsed()) {
      Report report = rankone::verify_case_report(
          verify_case, verify_n, verify_trials, verify_seed, budgets);
      return emit(report, verify_json, verify_out);
    }
    if (gb->parsed()) {
      rankone::ZeroPattern pattern;
      if (!gb_zeros.empty()) {
        std::ifstream in(gb_zeros);
        if (!in) throw std::invalid_argument("cannot open '" + gb_zeros + "'");
        nlohmann::json j;
        in >> j;
        pattern = rankone::ZeroPattern::from_json(j);
      } else if (gb_preset == "diag") {
        pattern = rankone::ZeroPattern::diagonal(gb_n + 1);
      } else if (gb_preset == "upper") {
        pattern = rankone::ZeroPattern::lower_triangle(gb_n + 1);
      } else {
        throw std::invalid_argument("pass --zeros FILE or --preset diag|upper");
      }
      Report report = rankone::gb_report(pattern, gb_trials, gb_seed);
      return emit(report, gb_json, gb_out);
    }
    if (complex_cmd->parsed()) {
      Report report =
          rankone::complex_report(complex_kind, complex_n, budgets);
      return emit(report, complex_json, complex_out);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const rankone::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    std::cerr << "root grammar: e<i>-e<j>, e<i>+e<j>, 2e<i>, -2e<n>, "
                 "-e<i>+e<i+1>, -a<i>\n";
    return 2;
  }
  return 2;
}

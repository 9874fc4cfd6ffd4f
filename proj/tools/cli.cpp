#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "matchbounds/bounds.hpp"
#include "matchbounds/config_model.hpp"
#include "matchbounds/girth_chromatic.hpp"
#include "matchbounds/oracle.hpp"
#include "matchbounds/perm_latin.hpp"
#include "matchbounds/report_json.hpp"

namespace matchbounds::cli {

namespace {

struct SpaceFlags {
  std::string space;
  int n = 0;
  int m = 0;
};

Json space_json(const MatchingSpace& space) {
  switch (space.kind()) {
    case SpaceKind::complete:
      return Json{{"space", "complete"}, {"n", space.n()}};
    case SpaceKind::bipartite:
      return Json{{"space", "bipartite"}, {"n", space.n()}, {"m", space.m()}};
    case SpaceKind::general: {
      Json edges = Json::array();
      for (const auto& [a, b] : space.graph_edges()) edges.push_back(Json::array({a, b}));
      return Json{{"space", "general"}, {"n", space.n()}, {"edges", edges}};
    }
  }
  return {};
}

MatchingSpace space_from_json(const Json& j) {
  const std::string kind = j.at("space").get<std::string>();
  if (kind == "complete") return MatchingSpace::complete(j.at("n").get<int>());
  if (kind == "bipartite") return MatchingSpace::bipartite(j.at("n").get<int>(), j.at("m").get<int>());
  if (kind == "general") {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    return MatchingSpace::general(j.at("n").get<int>(), std::move(edges));
  }
  fail(errc::bad_params, "unknown space kind '" + kind + "'");
}

Matching matching_from_json(const Json& j) {
  require(j.is_array(), errc::bad_params, "a family line must be a JSON array of edges");
  std::vector<Edge> edges;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2, errc::bad_params, "each edge must be a two-element array");
    edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  }
  return canonical_form(std::move(edges));
}

/// Family file: optional header object on the first line, then one matching
/// per line. Space flags must agree with the header when both are present.
EventFamily load_family(const std::string& path, const SpaceFlags& flags) {
  std::ifstream in(path);
  require(in.good(), errc::bad_params, "cannot open family file '" + path + "'");

  std::optional<MatchingSpace> space;
  std::vector<Matching> members;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    Json j = Json::parse(line);
    if (first && j.is_object()) {
      space = space_from_json(j);
      first = false;
      continue;
    }
    first = false;
    members.push_back(matching_from_json(j));
  }

  if (!flags.space.empty()) {
    std::optional<MatchingSpace> from_flags;
    if (flags.space == "complete")
      from_flags = MatchingSpace::complete(flags.n);
    else if (flags.space == "bipartite")
      from_flags = MatchingSpace::bipartite(flags.n, flags.m);
    else
      fail(errc::bad_params, "--space must be complete or bipartite (general spaces need a file header)");
    if (space) {
      require(space->kind() == from_flags->kind() && space->n() == from_flags->n() &&
                  space->m() == from_flags->m(),
              errc::bad_params, "--space flags disagree with the family file header");
    } else {
      space = from_flags;
    }
  }
  require(space.has_value(), errc::bad_params,
          "no space given: add a header line to the family file or pass --space/--n");
  return EventFamily(*space, std::move(members));
}

std::optional<double> parse_delta(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    fail(errc::bad_params, "--delta must be a number or 'auto'");
  }
}

int cmd_bounds(const std::string& family_path, const SpaceFlags& flags, const std::string& delta_text,
               std::optional<double> epsilon, std::ostream& out) {
  auto family = load_family(family_path, flags);
  Json report;
  report["space"] = space_json(family.space());
  report["members"] = family.size();
  if (!family.empty()) report["stats"] = to_json(family_stats(family));

  const auto sparse = delta_sparseness(family, parse_delta(delta_text));
  report["sparseness"] = to_json(sparse);

  Json bounds;
  bounds["family_lower"] = to_json(family_lower_bound(family));
  if (epsilon) bounds["simple_lower"] = to_json(simple_lower_bound(family, *epsilon));
  bounds["upper"] = to_json(family_upper_bound(family, sparse.chosen_delta));
  if (family.empty() || family_stats(family).regular)
    bounds["asymptotic_bracket"] = to_json(asymptotic_bracket(family));
  report["bounds"] = bounds;
  out << report.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& family_path, const SpaceFlags& flags, int max_subset, int cap,
               const std::string& near_positive, std::ostream& out) {
  auto family = load_family(family_path, flags);
  OracleLimits limits;
  if (cap > 0) limits.complete_max = limits.bipartite_max = limits.general_max = cap;

  Json report;
  report["space"] = space_json(family.space());
  report["members"] = family.size();
  auto dependency = check_negative_dependency(family, max_subset, limits);
  report["negative_dependency"] = to_json(dependency);
  bool violations = !dependency.passed;

  if (!near_positive.empty()) {
    std::optional<double> eps;
    if (near_positive == "auto") {
      const auto sparse = delta_sparseness(family, std::nullopt);
      if (sparse.holds()) eps = near_positive_epsilon(family, sparse.chosen_delta);
      if (!eps) report["near_positive"] = Json{{"epsilon", nullptr}, {"note", "epsilon inapplicable"}};
    } else {
      eps = std::stod(near_positive);
    }
    if (eps) {
      auto np = check_near_positive(family, *eps, max_subset, limits);
      report["near_positive"] = Json{{"epsilon", format_double(*eps)}, {"report", to_json(np)}};
      violations = violations || !np.passed;
    }
  }
  out << report.dump(2) << "\n";
  return violations ? 2 : 0;
}

int cmd_permutations(int n, int k, bool brute, bool with_bounds, std::ostream& out) {
  Json report{{"n", n}, {"k", k}};
  const Int count = k_cycle_free_count_ie(n, k);
  report["count"] = count.str();
  if (brute) report["count_bruteforce"] = k_cycle_free_count_bruteforce(n, k).str();
  const Rational ratio = Rational(count) / Rational(factorial(n));
  report["ratio"] = format_double(rational_to_double(ratio));
  report["asymptotic"] = format_double(std::exp(-1.0 / k));
  if (with_bounds) {
    auto family = k_cycle_event_family(n, k);
    require(family.size() <= 20000, errc::too_large, "cycle family too large for bound evaluation");
    report["family_size"] = family.size();
    report["bracket"] = to_json(asymptotic_bracket(family));
  }
  out << report.dump(2) << "\n";
  return 0;
}

int cmd_latin(int k, int n, bool exact, std::ostream& out) {
  Json report{{"k", k}, {"n", n}};
  if (exact) report["exact"] = latin_count_exact(k, n).str();
  report["bounds"] = to_json(latin_bounds(k, n));
  out << report.dump(2) << "\n";
  return 0;
}

int cmd_regular(int n, int d, int g, long long trials, std::uint64_t seed, int threads, bool exact,
                const std::string& csv_path, std::ostream& out) {
  auto dseq = DegreeSequence::regular(n, d);
  Json report{{"n", n}, {"d", d}, {"g", g}};
  if (d >= 3 && g >= 3) report["prediction"] = format_double(girth_prediction(d, g));
  report["condition_ratio"] =
      format_double(std::pow(g, 3) * std::pow(d, 2 * g - 3) / static_cast<double>(n));

  std::vector<std::optional<int>> record;
  auto estimate = mc_girth_at_least(dseq, g, trials, seed, threads, csv_path.empty() ? nullptr : &record);
  report["mc"] = to_json(estimate);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    require(csv.good(), errc::bad_params, "cannot open CSV path '" + csv_path + "'");
    csv << "trial,girth\n";
    for (std::size_t t = 0; t < record.size(); ++t) {
      csv << t << ",";
      if (record[t])
        csv << *record[t] << "\n";
      else
        csv << "inf\n";
    }
  }
  if (exact) report["exact"] = rational_string(exact_girth_probability(dseq, g));
  if (static_cast<long long>(n) * d % 2 == 0 && g >= 3)
    report["count_estimates"] = to_json(regular_count_estimates(n, d, g));
  out << report.dump(2) << "\n";
  return 0;
}

int cmd_girthchrom(const std::string& regular_arg, const std::string& degrees_path, int k, int ell,
                   double margin, std::ostream& out) {
  std::vector<int> degrees;
  if (!regular_arg.empty()) {
    const auto comma = regular_arg.find(',');
    require(comma != std::string::npos, errc::bad_params, "--regular expects 'd,n'");
    const int d = std::stoi(regular_arg.substr(0, comma));
    const int n = std::stoi(regular_arg.substr(comma + 1));
    require(n >= 1, errc::bad_params, "--regular expects positive n");
    degrees.assign(n, d);
  } else {
    require(!degrees_path.empty(), errc::bad_params, "pass --regular d,n or --degrees FILE");
    std::ifstream in(degrees_path);
    require(in.good(), errc::bad_params, "cannot open degrees file '" + degrees_path + "'");
    int d;
    while (in >> d) degrees.push_back(d);
  }
  DegreeSequence dseq(degrees);
  auto stats = degree_stats(dseq);
  auto cert = existence_certificate(dseq, k, ell, margin);
  Json report{{"n", dseq.n()},
              {"total_degree", stats.volume},
              {"dbar", rational_string(stats.dbar)},
              {"dtilde", rational_string(stats.dtilde)},
              {"delta_max", stats.delta_max},
              {"k", k},
              {"ell", ell},
              {"certificate", to_json(cert)}};
  out << report.dump(2) << "\n";
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bounds, exact oracles and Monte Carlo estimates for events on random perfect matchings"};
  app.require_subcommand(1);

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the lower/upper bounds for a family file");
  std::string family_path, delta_text = "auto";
  SpaceFlags flags;
  std::optional<double> epsilon;
  bounds_cmd->add_option("--family", family_path, "family file (JSONL)")->required();
  bounds_cmd->add_option("--space", flags.space, "space kind when the file has no header");
  bounds_cmd->add_option("--n", flags.n, "left/total vertex count");
  bounds_cmd->add_option("--m", flags.m, "right class size (bipartite)");
  bounds_cmd->add_option("--delta", delta_text, "sparseness delta or 'auto'");
  bounds_cmd->add_option("--epsilon", epsilon, "epsilon for the simple lower bound");

  auto* verify_cmd = app.add_subcommand("verify", "exhaustively check the dependency-graph properties");
  std::string v_family, near_positive;
  SpaceFlags v_flags;
  int max_subset = 12, cap = 0;
  verify_cmd->add_option("--family", v_family, "family file (JSONL)")->required();
  verify_cmd->add_option("--space", v_flags.space, "space kind when the file has no header");
  verify_cmd->add_option("--n", v_flags.n, "left/total vertex count");
  verify_cmd->add_option("--m", v_flags.m, "right class size (bipartite)");
  verify_cmd->add_option("--max-subset", max_subset, "cap on conditioning non-neighbors")
      ->check(CLI::Range(0, 30));
  verify_cmd->add_option("--cap", cap, "vertex cap for the enumeration (0 = defaults)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--near-positive", near_positive,
                         "also run the near-positive check at this epsilon (or 'auto')");

  auto* perm_cmd = app.add_subcommand("permutations", "k-cycle-free permutation counts and bounds");
  int p_n = 0, p_k = 1;
  bool p_brute = false, p_bounds = false;
  perm_cmd->add_option("--n", p_n, "ground set size")->required();
  perm_cmd->add_option("--k", p_k, "forbidden cycle length")->required();
  perm_cmd->add_flag("--brute", p_brute, "also count by brute force");
  perm_cmd->add_flag("--bounds", p_bounds, "evaluate the bound bracket on the cycle family");

  auto* latin_cmd = app.add_subcommand("latin", "Latin rectangle counts and bounds");
  int l_k = 1, l_n = 1;
  bool l_exact = false;
  latin_cmd->add_option("--k", l_k, "rows")->required();
  latin_cmd->add_option("--n", l_n, "columns")->required();
  latin_cmd->add_flag("--exact", l_exact, "compute the exact count (n <= 8)");

  auto* reg_cmd = app.add_subcommand("regular", "configuration-model girth estimates");
  int r_n = 0, r_d = 3, r_g = 3, r_threads = 1;
  long long r_trials = 10000;
  std::uint64_t r_seed = 0;
  bool r_exact = false;
  std::string r_csv;
  reg_cmd->add_option("--n", r_n, "vertices")->required();
  reg_cmd->add_option("--d", r_d, "degree")->required();
  reg_cmd->add_option("--g", r_g, "girth threshold")->required();
  reg_cmd->add_option("--trials", r_trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  reg_cmd->add_option("--seed", r_seed, "RNG seed");
  reg_cmd->add_option("--threads", r_threads, "worker count (result-invariant)")
      ->check(CLI::PositiveNumber);
  reg_cmd->add_flag("--exact", r_exact, "also enumerate exactly (nd <= 16)");
  reg_cmd->add_option("--csv", r_csv, "write per-trial girths to this CSV file");

  auto* gc_cmd = app.add_subcommand("girthchrom", "existence certificate for girth and chromatic number");
  std::string gc_regular, gc_degrees;
  int gc_k = 2, gc_ell = 3;
  double gc_margin = 0.10;
  gc_cmd->add_option("--regular", gc_regular, "regular degree sequence as 'd,n'");
  gc_cmd->add_option("--degrees", gc_degrees, "file of whitespace-separated degrees");
  gc_cmd->add_option("--k", gc_k, "chromatic number target")->required();
  gc_cmd->add_option("--ell", gc_ell, "girth target")->required();
  gc_cmd->add_option("--margin", gc_margin, "indeterminate margin for the log-bound comparison");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream text;
    const int code = app.exit(e, text, text);
    (code == 0 ? out : err) << text.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(family_path, flags, delta_text, epsilon, out);
    if (verify_cmd->parsed()) return cmd_verify(v_family, v_flags, max_subset, cap, near_positive, out);
    if (perm_cmd->parsed()) return cmd_permutations(p_n, p_k, p_brute, p_bounds, out);
    if (latin_cmd->parsed()) return cmd_latin(l_k, l_n, l_exact, out);
    if (reg_cmd->parsed())
      return cmd_regular(r_n, r_d, r_g, r_trials, r_seed, r_threads, r_exact, r_csv, out);
    if (gc_cmd->parsed()) return cmd_girthchrom(gc_regular, gc_degrees, gc_k, gc_ell, gc_margin, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand given\n";
  return 1;
}

} // namespace matchbounds::cli

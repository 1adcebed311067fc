// Command-line front end: solve, construct, verify, filter.
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "treeconn/constructions.hpp"
#include "treeconn/io.hpp"
#include "treeconn/steiner.hpp"
#include "treeconn/verify.hpp"

using namespace treeconn;

namespace {

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string(what) + " '" + text + "' is not an integer");
  return value;
}

int resolve_limit(int flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("TREECONN_SOLVER_LIMIT"))
    return parse_int(env, "TREECONN_SOLVER_LIMIT");
  return kDefaultSolverLimit;
}

int resolve_parallel(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

Graph read_graph(const std::string& path, const std::string& format) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open input file " + path);
    in = &file;
  }
  if (format == "g6") {
    std::string line;
    while (std::getline(*in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return parse_graph6(line);
    }
    throw ParseError("input contains no data");
  }
  return parse_edge_list(*in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << text;
}

std::string emit_graph(const Graph& g, const std::string& format) {
  return format == "g6" ? emit_graph6(g) + "\n" : emit_edge_list(g);
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

VertexSet parse_set(const std::string& text) {
  std::vector<int> members;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) members.push_back(parse_int(token, "set member"));
  return VertexSet(std::move(members));
}

std::string campaign_text(const CampaignReport& report) {
  std::string out = "campaign: " + report.campaign + "\n";
  out += "examined: " + std::to_string(report.examined) + "\n";
  for (const auto& line : report.details) out += line + "\n";
  for (const auto& line : report.violations) out += "violation: " + line + "\n";
  out += "violations: " + std::to_string(report.violations.size()) + "\n";
  out += std::string("verdict: ") + (report.passed() ? "pass" : "fail") + "\n";
  return out;
}

struct SolveOptions {
  std::string input = "-";
  std::string format = "edges";
  std::string output;
  std::string certificates;
  std::string dot;
  std::string set_text;
  bool json = false;
  int limit = kDefaultSolverLimit;
  bool limit_given = false;
  int parallel = 0;
};

void add_solve_flags(CLI::App* cmd, SolveOptions& opts, bool wants_set) {
  cmd->add_option("input", opts.input, "edge-list or graph6 file, - for standard input");
  cmd->add_option("--format", opts.format, "input format")
      ->check(CLI::IsMember({"edges", "g6"}));
  cmd->add_option("-o,--output", opts.output, "write the main output here instead of stdout");
  cmd->add_option("--certificates", opts.certificates, "write the certificate document here");
  cmd->add_option("--dot", opts.dot, "write a DOT drawing with the trees colored");
  cmd->add_flag("--json", opts.json, "print the certificate document instead of a summary line");
  cmd->add_option("--limit", opts.limit, "largest vertex count the solver accepts")
      ->each([&opts](const std::string&) { opts.limit_given = true; });
  cmd->add_option("--parallel", opts.parallel,
                  "accepted for uniformity; the triple sweep runs on one thread");
  if (wants_set)
    cmd->add_option("--set", opts.set_text, "comma-separated vertex set, e.g. 2,6,9")->required();
}

int run_solve(const SolveOptions& opts, bool whole_graph) {
  const int limit = resolve_limit(opts.limit, opts.limit_given);
  Graph g = read_graph(opts.input, opts.format);
  KappaResult result;
  std::string summary;
  if (whole_graph) {
    result = kappa3(g, limit);
    summary = "kappa3 = " + std::to_string(result.kappa) + ", witness " +
              set_text(result.witness_set) + "\n";
  } else {
    result = kappa_of_set(g, parse_set(opts.set_text), limit);
    summary = "kappa = " + std::to_string(result.kappa) + ", set " +
              set_text(result.witness_set) + "\n";
  }
  write_text(opts.output, opts.json ? emit_certificate(g, result) : summary);
  if (!opts.certificates.empty()) write_text(opts.certificates, emit_certificate(g, result));
  if (!opts.dot.empty()) write_text(opts.dot, emit_dot(g, &result.family));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and verifier for tree connectivity of vertex triples"};
  app.require_subcommand(1);

  SolveOptions kappa3_opts;
  CLI::App* cmd_kappa3 = app.add_subcommand("kappa3", "minimum kappa over all vertex triples");
  add_solve_flags(cmd_kappa3, kappa3_opts, false);

  SolveOptions set_opts;
  CLI::App* cmd_set = app.add_subcommand("kappa-set", "kappa of one chosen vertex set");
  add_solve_flags(cmd_set, set_opts, true);

  std::string construct_format = "edges";
  std::string construct_output;
  std::string construct_input = "-";
  int family_k = 0, figure_id = 0, extremal_n = 0, smooth_vertex = -1;
  CLI::App* cmd_construct = app.add_subcommand("construct", "build one of the named graphs");
  cmd_construct->require_subcommand(1);
  cmd_construct->add_option("--format", construct_format, "output format")
      ->check(CLI::IsMember({"edges", "g6"}));
  cmd_construct->add_option("-o,--output", construct_output, "write here instead of stdout");
  CLI::App* cmd_h = cmd_construct->add_subcommand("h", "cycle-plus-spokes family member");
  cmd_h->fallthrough();
  cmd_h->add_option("--k", family_k, "family index, 5k vertices")->required();
  CLI::App* cmd_figure = cmd_construct->add_subcommand("figure", "one of the shipped witnesses");
  cmd_figure->fallthrough();
  cmd_figure->add_option("--id", figure_id, "witness number 1..6")->required();
  CLI::App* cmd_extremal = cmd_construct->add_subcommand("extremal", "minimum-size witness");
  cmd_extremal->fallthrough();
  cmd_extremal->add_option("--n", extremal_n, "vertex count, at least 4")->required();
  CLI::App* cmd_smooth = cmd_construct->add_subcommand("smooth", "suppress one degree-2 vertex");
  cmd_smooth->fallthrough();
  cmd_smooth->add_option("--vertex", smooth_vertex, "vertex to remove")->required();
  cmd_smooth->add_option("input", construct_input, "graph to smooth, - for standard input");
  std::string smooth_format = "edges";
  cmd_smooth->add_option("--input-format", smooth_format, "format of the incoming graph")
      ->check(CLI::IsMember({"edges", "g6"}));

  bool verify_json = false;
  int verify_parallel = 0;
  int verify_limit = kDefaultSolverLimit;
  bool verify_limit_given = false;
  std::string verify_output;
  int lemma5_samples = 200;
  std::uint64_t lemma5_seed = 7;
  int theorem1_max_k = 3;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run one verification campaign");
  cmd_verify->require_subcommand(1);
  cmd_verify->add_flag("--json", verify_json, "machine-readable report");
  cmd_verify->add_option("--parallel", verify_parallel, "worker threads, 0 = all cores");
  cmd_verify->add_option("--limit", verify_limit, "largest vertex count the solver accepts")
      ->each([&verify_limit_given](const std::string&) { verify_limit_given = true; });
  cmd_verify->add_option("-o,--output", verify_output, "write the report here instead of stdout");
  CLI::App* cmd_lemma3 = cmd_verify->add_subcommand(
      "lemma3", "every order-10 size-12 candidate has kappa3 at most 1");
  cmd_lemma3->fallthrough();
  CLI::App* cmd_lemma4 = cmd_verify->add_subcommand(
      "lemma4", "every order-9 size-11 candidate has kappa3 at most 1");
  cmd_lemma4->fallthrough();
  CLI::App* cmd_lemma5 = cmd_verify->add_subcommand(
      "lemma5", "smoothing never lowers kappa3 on sampled graphs");
  cmd_lemma5->fallthrough();
  cmd_lemma5->add_option("--samples", lemma5_samples, "number of random graphs");
  cmd_lemma5->add_option("--seed", lemma5_seed, "generator seed");
  CLI::App* cmd_theorem1 = cmd_verify->add_subcommand(
      "theorem1", "family sizes meet the edge floor and witnesses solve to 2");
  cmd_theorem1->fallthrough();
  cmd_theorem1->add_option("--max-k", theorem1_max_k, "largest family index to check");

  int filter_exact = -1, filter_at_least = -1, filter_at_most = -1;
  bool filter_strict = false;
  int filter_parallel = 0;
  int filter_limit = kDefaultSolverLimit;
  bool filter_limit_given = false;
  CLI::App* cmd_filter =
      app.add_subcommand("filter", "keep graph6 lines whose kappa3 matches a predicate");
  auto* opt_exact = cmd_filter->add_option("--kappa3", filter_exact, "keep graphs with this exact value");
  auto* opt_at_least =
      cmd_filter->add_option("--kappa3-at-least", filter_at_least, "keep values at or above");
  auto* opt_at_most =
      cmd_filter->add_option("--kappa3-at-most", filter_at_most, "keep values at or below");
  cmd_filter->add_flag("--strict", filter_strict, "stop on the first unreadable line");
  cmd_filter->add_option("--parallel", filter_parallel, "worker threads, 0 = all cores");
  cmd_filter->add_option("--limit", filter_limit, "largest vertex count the solver accepts")
      ->each([&filter_limit_given](const std::string&) { filter_limit_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_kappa3->parsed()) return run_solve(kappa3_opts, true);
    if (cmd_set->parsed()) return run_solve(set_opts, false);

    if (cmd_construct->parsed()) {
      Graph g(0, {});
      if (cmd_h->parsed()) g = build_h(family_k);
      else if (cmd_figure->parsed()) g = figure_fixture(figure_id);
      else if (cmd_extremal->parsed()) g = build_extremal(extremal_n);
      else g = smooth(read_graph(construct_input, smooth_format), smooth_vertex);
      write_text(construct_output, emit_graph(g, construct_format));
      return 0;
    }

    if (cmd_verify->parsed()) {
      const int limit = resolve_limit(verify_limit, verify_limit_given);
      const int workers = resolve_parallel(verify_parallel);
      CampaignReport report;
      const auto started = std::chrono::steady_clock::now();
      if (cmd_lemma3->parsed()) report = verify_lemma3(workers, limit);
      else if (cmd_lemma4->parsed()) report = verify_lemma4(workers, limit);
      else if (cmd_lemma5->parsed()) report = verify_lemma5(lemma5_samples, lemma5_seed, workers, limit);
      else report = verify_theorem1(theorem1_max_k, workers, limit);
      report.elapsed_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      write_text(verify_output, verify_json ? emit_campaign_report(report) : campaign_text(report));
      std::cerr << "elapsed " << report.elapsed_seconds << "s\n";
      return report.passed() ? 0 : 1;
    }

    // filter
    const int given = (opt_exact->count() > 0) + (opt_at_least->count() > 0) +
                      (opt_at_most->count() > 0);
    if (given != 1) {
      std::cerr << "filter needs exactly one of --kappa3, --kappa3-at-least, --kappa3-at-most\n";
      return 2;
    }
    KappaPredicate predicate;
    if (opt_exact->count()) predicate = {KappaPredicateKind::kExact, filter_exact};
    else if (opt_at_least->count()) predicate = {KappaPredicateKind::kAtLeast, filter_at_least};
    else predicate = {KappaPredicateKind::kAtMost, filter_at_most};
    filter_kappa(std::cin, std::cout, std::cerr, predicate, filter_strict,
                 resolve_limit(filter_limit, filter_limit_given),
                 resolve_parallel(filter_parallel));
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

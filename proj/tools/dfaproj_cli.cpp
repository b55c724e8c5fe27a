// Command-line front end: parse and serialize automata, run projections and
// structural checks, generate witness/builtin fixtures, and scan bounds.
//
// Exit codes: 0 success, 1 property or bound violation, 2 usage/parse error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfaproj/dfaproj.hpp"
#include "dfaproj/export.hpp"

using namespace dfaproj;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw input_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw input_error("cannot open output file: " + path);
  file << text;
}

std::vector<std::string> split_names(const std::string& joined) {
  std::vector<std::string> names;
  std::string item;
  std::istringstream stream(joined);
  while (std::getline(stream, item, ','))
    if (!item.empty()) names.push_back(item);
  return names;
}

SymbolSet resolve_gamma(const Dfa& d, const std::string& gamma_option,
                        const std::optional<SymbolSet>& file_gamma) {
  if (!gamma_option.empty())
    return symbol_set_by_name(d, split_names(gamma_option));
  if (file_gamma) return *file_gamma;
  throw input_error("no observable alphabet: pass --gamma or add a gamma: line");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_project(const std::string& in, const std::string& gamma_option,
                bool minimize_output, bool use_oracle, const std::string& emit) {
  ParsedAutomaton parsed = parse_automaton(read_input(in));
  SymbolSet gamma = resolve_gamma(parsed.dfa, gamma_option, parsed.gamma);

  Dfa result;
  std::vector<std::vector<int>> labels;
  bool have_labels = false;
  if (use_oracle) {
    result = project_oracle(parsed.dfa, gamma);
  } else {
    SubsetDfa proj = project(parsed.dfa, gamma);
    result = std::move(proj.dfa);
    labels = std::move(proj.labels);
    have_labels = true;
  }
  if (minimize_output) {
    result = minimize(result);
    have_labels = false;
  }

  if (emit == "text") {
    std::string comment;
    if (have_labels) {
      std::ostringstream lines;
      for (std::size_t s = 0; s < labels.size(); ++s)
        lines << "label " << s << " = " << format_subset(labels[s]) << "\n";
      comment = lines.str();
    }
    std::cout << serialize_automaton(result, std::nullopt, comment);
  } else if (emit == "dot") {
    std::cout << to_dot(result, have_labels ? &labels : nullptr, "projection");
  } else if (emit == "json") {
    auto gamma_names = symbol_names(parsed.dfa, gamma);
    std::cout << to_json(result, have_labels ? &labels : nullptr, gamma_names).dump(2)
              << "\n";
  } else {
    throw input_error("unknown --emit format: " + emit);
  }
  return 0;
}

int run_check(const std::string& in, const std::string& gamma_option,
              const std::string& what, std::size_t cap) {
  ParsedAutomaton parsed = parse_automaton(read_input(in));
  const Dfa& d = parsed.dfa;

  if (what == "permutation") {
    bool ok = is_permutation_dfa(d);
    std::cout << "permutation: " << yes_no(ok) << "\n";
    return ok ? 0 : 1;
  }
  if (what == "commutative") {
    bool ok = is_commutative_dfa(d);
    std::cout << "commutative: " << yes_no(ok) << "\n";
    return ok ? 0 : 1;
  }

  SymbolSet gamma = resolve_gamma(d, gamma_option, parsed.gamma);
  SymbolSet delta = complement_symbols(d, gamma);

  if (what == "state-partition") {
    auto verdict = check_state_partition(d, gamma);
    std::cout << "state-partition: " << yes_no(verdict.is_state_partition) << "\n"
              << "disjoint: " << yes_no(verdict.disjoint) << "\n"
              << "covers-all-states: " << yes_no(verdict.covers_all_states) << "\n";
    if (verdict.offending_pair)
      std::cout << "offending pair: " << format_subset(verdict.offending_pair->first)
                << " and " << format_subset(verdict.offending_pair->second) << "\n";
    return verdict.is_state_partition ? 0 : 1;
  }
  if (what == "normal") {
    Normality verdict = is_normal_subgroup(d, delta, cap);
    if (verdict == Normality::inconclusive_cap_exceeded) {
      std::cout << "normal: inconclusive (cap exceeded)\n";
      return 1;
    }
    bool ok = verdict == Normality::normal;
    std::cout << "normal: " << (ok ? "yes" : "no (not normal)") << "\n";
    return ok ? 0 : 1;
  }
  if (what == "orbits-permuted") {
    bool ok = orbits_are_permuted(d, delta);
    std::cout << "orbits-permuted: " << yes_no(ok) << "\n";
    return ok ? 0 : 1;
  }
  if (what == "split-commutes") {
    auto split = split_commutes(d, gamma);
    std::cout << "split-commutes: " << yes_no(split.valid) << "\n";
    if (split.offending_triple) {
      auto [a, b, q] = *split.offending_triple;
      std::cout << "offending triple: (" << d.symbols[a] << ", " << d.symbols[b]
                << ", " << q << ")\n";
    }
    return split.valid ? 0 : 1;
  }
  throw input_error("unknown --what: " + what);
}

int run_minimize(const std::string& in, bool with_complete) {
  ParsedAutomaton parsed = parse_automaton(read_input(in));
  Dfa minimal = minimize(parsed.dfa);
  std::cout << "minimal states: " << minimal.state_count << "\n";
  if (with_complete)
    std::cout << "completed states: " << completed_state_count(minimal) << "\n";
  return 0;
}

int run_witness(int n, int m, const std::string& out_path) {
  AutomatonFixture fixture = make_witness({n, m});
  std::ostringstream comment;
  comment << "lower-bound witness automaton, n=" << n << ", m=" << m << "\n"
          << "states are 0-based; the conventional numbering is 1-based "
             "(index i = state i+1)";
  write_output(out_path, serialize_automaton(fixture.dfa, fixture.gamma, comment.str()));
  return 0;
}

int run_builtin(const std::string& name, const std::string& out_path) {
  AutomatonFixture fixture = builtin(name);
  write_output(out_path,
               serialize_automaton(fixture.dfa, fixture.gamma, "builtin fixture: " + name));
  return 0;
}

int run_scan(const ScanConfig& cfg, const std::string& report_path) {
  try {
    auto reports = scan(cfg);
    std::string csv = to_csv(reports);
    if (report_path.empty())
      std::cout << csv;
    else
      write_output(report_path, csv);
    std::cerr << reports.size() << " projections verified, all bounds hold\n";
    return 0;
  } catch (const scan_abort& abort) {
    std::cerr << abort.what() << "\n"
              << "violating instance for replay:\n"
              << abort.instance_text;
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projections of regular languages on deterministic automata"};
  app.require_subcommand(1);

  std::function<int()> action;

  // project
  auto* project_cmd = app.add_subcommand("project", "build the projection automaton");
  {
    static std::string in = "-", gamma, emit = "text";
    static bool do_minimize = false, use_oracle = false;
    project_cmd->add_option("--in", in, "input file, - for stdin");
    project_cmd->add_option("--gamma", gamma, "observable symbols, comma-separated");
    project_cmd->add_flag("--minimize", do_minimize, "minimize the result");
    project_cmd->add_flag("--oracle", use_oracle,
                          "use the epsilon-closure reference pipeline");
    project_cmd->add_option("--emit", emit, "output format: text|dot|json");
    project_cmd->callback(
        [&] { action = [=] { return run_project(in, gamma, do_minimize, use_oracle, emit); }; });
  }

  // check
  auto* check_cmd = app.add_subcommand("check", "test a structural property");
  {
    static std::string in = "-", gamma, what;
    static std::size_t cap = kDefaultSubgroupCap;
    check_cmd->add_option("--in", in, "input file, - for stdin");
    check_cmd->add_option("--gamma", gamma, "observable symbols, comma-separated");
    check_cmd
        ->add_option("--what", what,
                     "permutation|commutative|state-partition|normal|"
                     "orbits-permuted|split-commutes")
        ->required();
    check_cmd->add_option("--cap", cap, "subgroup element cap for --what normal");
    check_cmd->callback([&] { action = [=] { return run_check(in, gamma, what, cap); }; });
  }

  // minimize
  auto* minimize_cmd = app.add_subcommand("minimize", "minimal partial automaton size");
  {
    static std::string in = "-";
    static bool with_complete = false;
    minimize_cmd->add_option("--in", in, "input file, - for stdin");
    minimize_cmd->add_flag("--complete", with_complete,
                           "also report the completed size");
    minimize_cmd->callback([&] { action = [=] { return run_minimize(in, with_complete); }; });
  }

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "emit a lower-bound witness");
  {
    static int n = 4, m = 1;
    static std::string out;
    witness_cmd->add_option("--n", n, "total states")->required();
    witness_cmd->add_option("--m", m, "two-element orbit count")->required();
    witness_cmd->add_option("--out", out, "output file, default stdout");
    witness_cmd->callback([&] { action = [=] { return run_witness(n, m, out); }; });
  }

  // builtin
  auto* builtin_cmd = app.add_subcommand("builtin", "emit a builtin fixture");
  {
    static std::string name, out;
    builtin_cmd
        ->add_option("--name", name,
                     "example_commutative|example_group|remark_state_partition")
        ->required();
    builtin_cmd->add_option("--out", out, "output file, default stdout");
    builtin_cmd->callback([&] { action = [=] { return run_builtin(name, out); }; });
  }

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "verify bounds on generated automata");
  {
    static std::string mode, kind = "permutation", policy = "drop-one", gamma, report;
    static int n_min = 2, n_max = 4, letters = 2, samples = 100;
    static std::uint64_t seed = 0;
    static double undef_prob = 0.15;
    scan_cmd->add_option("--mode", mode, "exhaustive|random")->required();
    scan_cmd->add_option("--kind", kind, "permutation|general");
    scan_cmd->add_option("--n-min", n_min, "smallest state count");
    scan_cmd->add_option("--n-max", n_max, "largest state count");
    scan_cmd->add_option("--letters", letters, "alphabet size");
    scan_cmd->add_option("--samples", samples, "random instances to generate");
    auto* seed_opt = scan_cmd->add_option("--seed", seed, "random seed");
    scan_cmd->add_option("--gamma-policy", policy, "drop-one|all-proper|explicit");
    scan_cmd->add_option("--gamma", gamma, "symbols for --gamma-policy explicit");
    scan_cmd->add_option("--undef-prob", undef_prob,
                         "undefined-transition probability (general kind)");
    scan_cmd->add_option("--report", report, "CSV output file, default stdout");
    scan_cmd->callback([&, seed_opt] {
      action = [=] {
        ScanConfig cfg;
        if (mode == "exhaustive")
          cfg.mode = ScanMode::exhaustive;
        else if (mode == "random")
          cfg.mode = ScanMode::random;
        else
          throw input_error("unknown --mode: " + mode);
        if (cfg.mode == ScanMode::random && seed_opt->count() == 0)
          throw input_error("random mode requires --seed");
        if (kind == "permutation")
          cfg.kind = DfaKind::permutation;
        else if (kind == "general")
          cfg.kind = DfaKind::general;
        else
          throw input_error("unknown --kind: " + kind);
        if (policy == "drop-one")
          cfg.gamma_policy = GammaPolicy::drop_one_letter;
        else if (policy == "all-proper")
          cfg.gamma_policy = GammaPolicy::all_nonempty_proper;
        else if (policy == "explicit")
          cfg.gamma_policy = GammaPolicy::explicit_set;
        else
          throw input_error("unknown --gamma-policy: " + policy);
        cfg.explicit_gamma = split_names(gamma);
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        cfg.letters = letters;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.undefined_prob = undef_prob;
        return run_scan(cfg, report);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

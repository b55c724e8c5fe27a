#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dfaproj/dfa.hpp"
#include "dfaproj/io.hpp"
#include "dfaproj/minimize.hpp"
#include "dfaproj/projection.hpp"
#include "dfaproj/random.hpp"
#include "dfaproj/witness.hpp"

namespace dfaproj {

/// Upper bound on the projected state complexity of an n-state permutation
/// DFA with m states incident to non-loop unobservable transitions:
/// n when m = 0, otherwise 2^(n - ceil(m/2)) - 1. m = 1 is impossible
/// (a non-loop transition touches two states) and is rejected.
inline std::uint64_t perm_bound(int n, int m) {
  if (n < 1 || m < 0 || m > n) throw parameter_error("perm_bound: bad n or m");
  if (m == 1) throw parameter_error("perm_bound: m = 1 cannot occur");
  if (m == 0) return static_cast<std::uint64_t>(n);
  int exponent = n - (m + 1) / 2;
  if (exponent >= 63) throw parameter_error("perm_bound: value would overflow");
  return (std::uint64_t{1} << exponent) - 1;
}

/// General upper bound 2^(n-1) + 2^(n-m) - 1, defined for m >= 1.
inline std::uint64_t general_bound(int n, int m) {
  if (n < 1 || m < 1 || m > n) throw parameter_error("general_bound: bad n or m");
  if (n >= 63) throw parameter_error("general_bound: value would overflow");
  return (std::uint64_t{1} << (n - 1)) + (std::uint64_t{1} << (n - m)) - 1;
}

enum class ScanMode { exhaustive, random };
enum class DfaKind { permutation, general };
enum class GammaPolicy { drop_one_letter, all_nonempty_proper, explicit_set };

struct ScanConfig {
  ScanMode mode = ScanMode::random;
  DfaKind kind = DfaKind::permutation;
  int n_min = 2;
  int n_max = 4;
  int letters = 2;
  int samples = 100;
  std::uint64_t seed = 0;
  double undefined_prob = 0.15;
  GammaPolicy gamma_policy = GammaPolicy::drop_one_letter;
  std::vector<std::string> explicit_gamma;
};

/// One verified (instance, gamma) row of a scan.
struct BoundReport {
  std::string id;
  int n = 0;
  int m = 0;
  bool is_permutation = false;
  std::vector<std::string> gamma_names;
  std::uint64_t projected_minimal_size = 0;
  std::optional<std::uint64_t> perm_bound_value;
  std::optional<std::uint64_t> general_bound_value;
  std::optional<std::uint64_t> witness_expected;
  bool pass = true;
  std::uint64_t seed = 0;
};

/// Thrown when a scan hits a bound or oracle violation; carries the
/// offending instance in the text format for replay.
struct scan_abort : error {
  std::string instance_text;
  scan_abort(const std::string& message, std::string instance)
      : error(message), instance_text(std::move(instance)) {}
};

namespace detail {

inline std::vector<SymbolSet> gammas_for(const ScanConfig& cfg, const Dfa& d) {
  std::vector<SymbolSet> out;
  switch (cfg.gamma_policy) {
    case GammaPolicy::drop_one_letter:
      for (int x = 0; x < d.symbol_count(); ++x)
        out.push_back(complement_symbols(d, {x}));
      break;
    case GammaPolicy::all_nonempty_proper: {
      int total = d.symbol_count();
      for (unsigned mask = 1; mask + 1 < (1u << total); ++mask) {
        SymbolSet g;
        for (int x = 0; x < total; ++x)
          if (mask & (1u << x)) g.push_back(x);
        out.push_back(std::move(g));
      }
      break;
    }
    case GammaPolicy::explicit_set:
      out.push_back(symbol_set_by_name(d, cfg.explicit_gamma));
      break;
  }
  return out;
}

/// Evaluates one (instance, gamma) pair: projected minimal size, oracle
/// agreement, and every applicable bound. Throws scan_abort on violation.
inline BoundReport evaluate_projection(const std::string& id, const Dfa& instance,
                                       const Dfa& trimmed, bool is_perm,
                                       const SymbolSet& gamma, std::uint64_t seed,
                                       std::optional<std::uint64_t> witness_expected) {
  BoundReport report;
  report.id = id;
  report.n = instance.state_count;
  report.is_permutation = is_perm;
  report.gamma_names = symbol_names(instance, gamma);
  report.seed = seed;

  ProjectionSpec spec = unobservability_stats(instance, gamma);
  report.m = spec.m;

  SubsetDfa proj = project(instance, gamma);
  Dfa minimal = minimize(proj.dfa);
  report.projected_minimal_size = static_cast<std::uint64_t>(minimal.state_count);

  std::string failure;
  Dfa oracle = project_oracle(instance, gamma);
  if (!equivalent(proj.dfa, oracle).equal)
    failure = "projection disagrees with the epsilon-closure oracle";
  if (failure.empty() && minimize(oracle).state_count != minimal.state_count)
    failure = "oracle minimal size differs";

  if (is_perm) {
    report.perm_bound_value = spec.m == 0
                                  ? static_cast<std::uint64_t>(trimmed.state_count)
                                  : perm_bound(report.n, spec.m);
    if (failure.empty() && report.projected_minimal_size > *report.perm_bound_value)
      failure = "permutation bound violated";
  }
  if (spec.m >= 1) {
    report.general_bound_value = general_bound(report.n, spec.m);
    if (failure.empty() && report.projected_minimal_size > *report.general_bound_value)
      failure = "general bound violated";
  }
  report.witness_expected = witness_expected;
  if (failure.empty() && witness_expected &&
      report.projected_minimal_size != *witness_expected)
    failure = "witness tightness violated";

  if (!failure.empty()) {
    report.pass = false;
    throw scan_abort(
        "scan violation [" + id + "]: " + failure + " (n=" + std::to_string(report.n) +
            ", m=" + std::to_string(report.m) +
            ", projected=" + std::to_string(report.projected_minimal_size) + ")",
        serialize_automaton(instance, gamma, "violating instance " + id));
  }
  return report;
}

inline std::vector<StateMap> all_permutations(int n) {
  StateMap perm = identity_map(n);
  std::vector<StateMap> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace detail

/// Runs a bound-verification scan. Every emitted report passed all checks;
/// the first violation aborts the scan with the instance serialized for
/// replay. Identical configuration and seed give byte-identical reports.
inline std::vector<BoundReport> scan(const ScanConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw parameter_error("bad n range");
  std::vector<BoundReport> reports;

  auto run_instance = [&](const std::string& base_id, const Dfa& instance) {
    Dfa trimmed = trim(instance);
    bool is_perm = is_permutation_dfa(instance);
    auto gammas = detail::gammas_for(cfg, instance);
    for (std::size_t gi = 0; gi < gammas.size(); ++gi)
      reports.push_back(detail::evaluate_projection(
          base_id + "-g" + std::to_string(gi), instance, trimmed, is_perm, gammas[gi],
          cfg.seed, std::nullopt));
  };

  if (cfg.mode == ScanMode::exhaustive) {
    if (cfg.letters > 2 || cfg.n_max > 4)
      throw parameter_error("exhaustive mode is capped at n <= 4 and 2 letters");
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      auto perms = detail::all_permutations(n);
      std::vector<std::size_t> choice(cfg.letters, 0);
      long long combo = 0;
      for (;;) {
        Dfa base = make_empty_dfa(n, default_symbol_names(cfg.letters), 0, {});
        for (int x = 0; x < cfg.letters; ++x)
          set_letter_permutation(base, x, perms[choice[x]]);
        for (int q0 = 0; q0 < n; ++q0)
          for (unsigned finals = 0; finals < (1u << n); ++finals) {
            Dfa instance = base;
            instance.initial = q0;
            for (int q = 0; q < n; ++q)
              if (finals & (1u << q)) instance.finals.insert(q);
            std::ostringstream id;
            id << "ex-n" << n << "-p" << combo << "-q" << q0 << "-f" << finals;
            run_instance(id.str(), instance);
          }
        ++combo;
        int x = cfg.letters - 1;
        while (x >= 0 && ++choice[x] == perms.size()) choice[x--] = 0;
        if (x < 0) break;
      }
    }
    return reports;
  }

  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    int n = rng.range(cfg.n_min, cfg.n_max);
    std::ostringstream id;
    id << "rnd-" << i;
    if (cfg.kind == DfaKind::permutation) {
      run_instance(id.str(), random_permutation_dfa(rng, n, cfg.letters));
    } else {
      // General instances are evaluated after trimming, so n and m in the
      // reports refer to the trim automaton.
      run_instance(id.str(), trim(random_partial_dfa(rng, n, cfg.letters,
                                                     cfg.undefined_prob)));
    }
  }
  return reports;
}

/// Projects each witness automaton and checks its minimal size against the
/// predicted 2^(n-m) - 1 along with the usual bounds.
inline std::vector<BoundReport> witness_sweep(const std::vector<WitnessParams>& params) {
  std::vector<BoundReport> reports;
  for (const auto& p : params) {
    AutomatonFixture fixture = make_witness(p);
    Dfa trimmed = trim(fixture.dfa);
    std::uint64_t expected = (std::uint64_t{1} << (p.n - p.m)) - 1;
    std::ostringstream id;
    id << "wit-n" << p.n << "-m" << p.m;
    reports.push_back(detail::evaluate_projection(id.str(), fixture.dfa, trimmed,
                                                  true, fixture.gamma, 0, expected));
  }
  return reports;
}

/// CSV rendering: UTF-8, LF line endings, gamma symbols joined by '|',
/// booleans as 1/0, missing values empty.
inline std::string to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << "id,n,m,is_perm,gamma,proj_min,perm_bound,general_bound,"
         "witness_expected,verdict,seed\n";
  for (const auto& r : reports) {
    out << r.id << "," << r.n << "," << r.m << "," << (r.is_permutation ? 1 : 0) << ",";
    for (std::size_t i = 0; i < r.gamma_names.size(); ++i)
      out << (i ? "|" : "") << r.gamma_names[i];
    out << "," << r.projected_minimal_size << ",";
    if (r.perm_bound_value) out << *r.perm_bound_value;
    out << ",";
    if (r.general_bound_value) out << *r.general_bound_value;
    out << ",";
    if (r.witness_expected) out << *r.witness_expected;
    out << "," << (r.pass ? "pass" : "fail") << "," << r.seed << "\n";
  }
  return out.str();
}

}  // namespace dfaproj

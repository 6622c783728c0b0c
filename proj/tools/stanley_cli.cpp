// Command-line front end. Links only against the C interface in stanley.h.
//
//   stanley-cli generate --seed 0,4 --max-value 1000 --out s.txt
//   stanley-cli verify   --seed 0,1,4 --max-value 100000
//   stanley-cli analyze  --seed 0 --max-value 531441 --grid 3 --out prof
//   stanley-cli export   --seed 0,4 --terms 500 --format csv --out s.csv
//
// Data goes to standard output (or --out); progress goes to standard error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stanley/stanley.h"

namespace {

enum Exit : int {
  kOk = 0,
  kConfig = 1,
  kOverflow = 2,
  kIo = 3,
  kVerifyFailed = 4,
};

struct SequenceDeleter {
  void operator()(stanley_sequence* s) const { stanley_sequence_destroy(s); }
};
struct ViewDeleter {
  void operator()(stanley_view* v) const { stanley_view_destroy(v); }
};
using SequencePtr = std::unique_ptr<stanley_sequence, SequenceDeleter>;
using ViewPtr = std::unique_ptr<stanley_view, ViewDeleter>;

// Carries a failed status up to main, which maps it to an exit code.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(stanley_status st) {
  switch (st) {
    case STANLEY_ERR_OVERFLOW:
    case STANLEY_ERR_CAPACITY_EXCEEDED:
      return kOverflow;
    case STANLEY_ERR_IO_FAILURE:
    case STANLEY_ERR_PARSE_ERROR:
    case STANLEY_ERR_CONSISTENCY_ERROR:
      return kIo;
    default:
      return kConfig;
  }
}

void check(stanley_status st, const std::string& what) {
  if (st == STANLEY_OK) return;
  throw Failure{exit_for(st), what + ": " + stanley_status_name(st) + ": " + stanley_last_error()};
}

struct Config {
  std::string seed;
  int k = 3;
  std::optional<std::uint64_t> terms;
  std::optional<std::uint64_t> max_value;
  std::string engine = "sieve";
  bool cross_check = false;
  std::optional<double> epsilon;
  double grid_base = 1;
  double grid_ratio = 2;
  std::string out = "-";
  std::string format = "txt";
  std::string in;
  std::string resume;
  std::string fault;
  bool skip_h = false;
};

std::vector<std::int64_t> parse_seed(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kConfig, "seed: '" + item + "' is not a decimal integer"};
    }
  }
  return values;
}

std::vector<std::uint64_t> parse_values(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw Failure{kConfig, "fault value '" + item + "' is not a decimal integer"};
    }
  }
  return values;
}

stanley_engine engine_of(const std::string& name) {
  return name == "direct" ? STANLEY_ENGINE_DIRECT : STANLEY_ENGINE_SIEVE;
}

std::vector<std::uint64_t> copy_terms(const stanley_view* view) {
  std::vector<std::uint64_t> terms(stanley_view_size(view));
  std::size_t n = 0;
  check(stanley_view_copy_terms(view, 0, terms.data(), terms.size(), &n), "copy terms");
  return terms;
}

SequencePtr create(const Config& cfg, const std::string& engine) {
  const auto seed = parse_seed(cfg.seed);
  stanley_sequence* raw = nullptr;
  const stanley_status st = stanley_sequence_create(seed.data(), seed.size(), cfg.k, engine_of(engine), &raw);
  if (st != STANLEY_OK) throw Failure{exit_for(st), std::string("seed: ") + stanley_last_error()};
  return SequencePtr(raw);
}

void run_limit(const Config& cfg, stanley_sequence* seq) {
  if (cfg.max_value) check(stanley_sequence_extend_to_bound(seq, *cfg.max_value), "generate");
  if (cfg.terms) check(stanley_sequence_extend_to_count(seq, *cfg.terms), "generate");
}

ViewPtr snapshot(stanley_sequence* seq) {
  stanley_view* raw = nullptr;
  check(stanley_sequence_snapshot(seq, &raw), "snapshot");
  return ViewPtr(raw);
}

// Generates per the config, applying any sieve fault and cross-check.
ViewPtr generate_view(const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SequencePtr seq;
  if (!cfg.resume.empty()) {
    stanley_view* saved = nullptr;
    check(stanley_read_sequence(cfg.resume.c_str(), &saved), "resume");
    ViewPtr saved_view(saved);
    stanley_sequence* raw = nullptr;
    check(stanley_sequence_resume(saved, engine_of(cfg.engine), &raw), "resume");
    seq.reset(raw);
  } else {
    seq = create(cfg, cfg.engine);
  }
  if (cfg.fault.rfind("suppress-forbidden:", 0) == 0) {
    for (std::uint64_t v : parse_values(cfg.fault.substr(19)))
      check(stanley_sequence_suppress_forbidden(seq.get(), v), "inject fault");
  }
  run_limit(cfg, seq.get());
  auto view = snapshot(seq.get());

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto n = stanley_view_size(view.get());
  std::uint64_t last = 0;
  std::size_t got = 0;
  stanley_view_copy_terms(view.get(), n - 1, &last, 1, &got);
  std::cerr << "terms: " << n << " last: " << last << " complete-to: " << stanley_view_complete_to(view.get())
            << " engine: " << cfg.engine << " time: " << secs << "s\n";

  if (cfg.cross_check) {
    auto other = create(cfg, cfg.engine == "sieve" ? "direct" : "sieve");
    run_limit(cfg, other.get());
    auto other_view = snapshot(other.get());
    const auto a = copy_terms(view.get());
    const auto b = copy_terms(other_view.get());
    if (a != b) {
      std::size_t i = 0;
      while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
      throw Failure{kVerifyFailed, "cross-check: engines disagree at term " + std::to_string(i + 1)};
    }
    std::cerr << "cross-check: sieve and direct engines agree on " << a.size() << " terms\n";
  }
  return view;
}

ViewPtr apply_view_fault(const Config& cfg, ViewPtr view) {
  if (cfg.fault.empty() || cfg.fault.rfind("suppress-forbidden:", 0) == 0) return view;
  const auto colon = cfg.fault.find(':');
  const std::string kind = cfg.fault.substr(0, colon);
  const auto values = colon == std::string::npos ? std::vector<std::uint64_t>{} : parse_values(cfg.fault.substr(colon + 1));
  stanley_fault fault;
  if (kind == "phantom")
    fault = STANLEY_FAULT_PHANTOM_MEMBERS;
  else if (kind == "hidden")
    fault = STANLEY_FAULT_HIDDEN_MEMBERS;
  else if (kind == "drop")
    fault = STANLEY_FAULT_DROPPED_TERMS;
  else
    throw Failure{kConfig, "unknown fault kind '" + kind + "'"};
  stanley_view* raw = nullptr;
  check(stanley_view_corrupt(view.get(), fault, values.data(), values.size(), &raw), "inject fault");
  std::cerr << "fault injected: " << cfg.fault << "\n";
  return ViewPtr(raw);
}

void require_one_limit(const Config& cfg) {
  if (cfg.terms.has_value() == cfg.max_value.has_value())
    throw Failure{kConfig, "exactly one of --terms and --max-value is required"};
}

int cmd_generate(const Config& cfg) {
  require_one_limit(cfg);
  auto view = generate_view(cfg);
  check(stanley_write_sequence(view.get(), cfg.out.c_str()), "write");
  return kOk;
}

int cmd_verify(const Config& cfg) {
  if (!cfg.max_value || cfg.terms) throw Failure{kConfig, "verify needs --max-value (and no --terms)"};
  if (cfg.k != 3) throw Failure{kConfig, "verify: the inequalities are defined for k = 3 only"};
  auto view = apply_view_fault(cfg, generate_view(cfg));
  const std::uint64_t bound = *cfg.max_value;
  const stanley_inequality all[] = {STANLEY_INEQ_MEMBERSHIP_CRITERION, STANLEY_INEQ_PAIR_BOUND,
                                    STANLEY_INEQ_NONMEMBER_BOUND, STANLEY_INEQ_QUADRATIC_BOUND,
                                    STANLEY_INEQ_THEOREM_FLOOR};
  std::vector<stanley_report> reports;
  for (auto which : all) {
    stanley_report r{};
    check(stanley_verify(view.get(), which, bound, &r), "verify");
    reports.push_back(r);
  }
  check(stanley_write_verification_csv(reports.data(), reports.size(), cfg.out.c_str()), "write");

  if (cfg.epsilon) {
    std::vector<std::uint64_t> grid(128);
    std::size_t n = 0;
    check(stanley_geometric_grid(cfg.grid_base, cfg.grid_ratio, bound, grid.data(), grid.size(), &n), "grid");
    stanley_theorem_result t{};
    check(stanley_theorem_check(view.get(), grid.data(), n, *cfg.epsilon, &t), "theorem check");
    std::cerr << "theorem-check epsilon=" << t.epsilon << " x0_observed="
              << (t.has_x0 ? std::to_string(t.x0_observed) : std::string("none")) << " (empirical, sampled)"
              << " floor=" << (t.floor_holds ? "holds" : "violated") << "\n";
  }

  char summary[128];
  stanley_verification_summary(reports.data(), reports.size(), summary, sizeof summary);
  if (cfg.out != "-") std::cerr << summary << "\n";
  return std::string(summary) == "PASS" ? kOk : kVerifyFailed;
}

int cmd_analyze(const Config& cfg) {
  require_one_limit(cfg);
  if (cfg.k != 3 && !cfg.skip_h)
    throw Failure{kConfig, "analyze: H is defined for 3-term progressions only (k = " + std::to_string(cfg.k) +
                               "); pass --skip-h to omit it"};
  auto view = generate_view(cfg);
  const std::uint64_t complete = stanley_view_complete_to(view.get());

  std::vector<std::uint64_t> grid(128);
  std::size_t n = 0;
  check(stanley_geometric_grid(cfg.grid_base, cfg.grid_ratio, complete, grid.data(), grid.size(), &n), "grid");
  grid.resize(n);

  if (cfg.out != "-") {
    check(stanley_write_counting_csv(view.get(), grid.data(), grid.size(), (cfg.out + ".counting.csv").c_str()),
          "write counting");
    check(stanley_write_gaps_csv(view.get(), (cfg.out + ".gaps.csv").c_str()), "write gaps");
    if (!cfg.skip_h) check(stanley_write_h_csv(view.get(), 0, complete, (cfg.out + ".h.csv").c_str()), "write h");
  }

  std::ostream& out = std::cout;
  out << "seed: " << cfg.seed << "\n";
  out << "k: " << cfg.k << "\n";
  out << "terms: " << stanley_view_size(view.get()) << "\n";
  out << "complete-to: " << complete << "\n";
  out << "grid-base: " << cfg.grid_base << "\n";
  out << "grid-ratio: " << cfg.grid_ratio << "\n";
  out << "grid:";
  for (std::size_t i = 0; i < grid.size(); ++i) out << (i ? "," : " ") << grid[i];
  out << "\n";

  stanley_fit fit{};
  const stanley_status fit_status = stanley_exponent_fit(view.get(), grid.data(), grid.size(), &fit);
  out.precision(6);
  out << std::fixed;
  if (fit_status == STANLEY_OK) {
    out << "exponent-slope: " << fit.slope << "\n";
    out << "exponent-intercept: " << fit.intercept << "\n";
    out << "exponent-residual: " << fit.residual << "\n";
    out << "exponent-points: " << fit.points << "\n";
  } else {
    out << "exponent-fit: unavailable (" << stanley_status_name(fit_status) << ")\n";
  }
  out << "log2/log3: " << std::log(2.0) / std::log(3.0) << "\n";

  stanley_gap_summary gaps{};
  if (stanley_gap_summary_of(view.get(), &gaps) == STANLEY_OK) {
    out << "max-gap: " << gaps.max_gap << " at k=" << gaps.max_gap_index << "\n";
    out << "record-gaps: " << gaps.record_count << "\n";
  }
  if (!cfg.skip_h) {
    // The pair-bound left side is the running sum of H up to the bound.
    stanley_report r{};
    check(stanley_verify(view.get(), STANLEY_INEQ_PAIR_BOUND, complete, &r), "h sum");
    out << "h-sum: " << r.lhs << "\n";
    out << "h-sum/x: " << (complete ? static_cast<double>(r.lhs) / static_cast<double>(complete) : 0.0) << "\n";
  }
  if (cfg.epsilon) {
    stanley_theorem_result t{};
    check(stanley_theorem_check(view.get(), grid.data(), grid.size(), *cfg.epsilon, &t), "theorem check");
    out << "theorem-epsilon: " << t.epsilon << "\n";
    out << "theorem-x0-observed: " << (t.has_x0 ? std::to_string(t.x0_observed) : std::string("none")) << "\n";
    out << "theorem-floor: " << (t.floor_holds ? "holds" : "violated") << "\n";
  }
  return kOk;
}

int cmd_export(const Config& cfg) {
  ViewPtr view;
  if (!cfg.in.empty()) {
    stanley_view* raw = nullptr;
    check(stanley_read_sequence(cfg.in.c_str(), &raw), "read");
    view.reset(raw);
  } else {
    require_one_limit(cfg);
    view = generate_view(cfg);
  }
  const auto format = cfg.format == "csv" ? STANLEY_EXPORT_CSV : STANLEY_EXPORT_BFILE;
  check(stanley_export(view.get(), format, cfg.out.c_str()), "export");
  return kOk;
}

void add_common(CLI::App* sub, Config& cfg, bool seed_required = true) {
  auto* seed = sub->add_option("--seed", cfg.seed, "Comma-separated seed elements, e.g. 0,4");
  if (seed_required) seed->required();
  sub->add_option("--k", cfg.k, "Progression length to avoid")->check(CLI::Range(3, 1000));
  sub->add_option("--engine", cfg.engine, "Generation engine")->check(CLI::IsMember({"sieve", "direct"}));
  sub->add_flag("--cross-check", cfg.cross_check, "Also run the other engine and compare");
  sub->add_option("--out", cfg.out, "Output path ('-' for standard output)");
}

void add_limits(CLI::App* sub, Config& cfg) {
  auto* terms = sub->add_option("--terms", cfg.terms, "Generate this many terms");
  auto* value = sub->add_option("--max-value", cfg.max_value, "Generate every term up to this value");
  terms->excludes(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley sequence generator and verifier"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("generate", "Write a sequence file");
  add_common(gen, cfg, false);
  add_limits(gen, cfg);
  gen->add_option("--resume", cfg.resume, "Continue from a saved sequence file");
  gen->add_option("--inject-fault", cfg.fault)->group("");

  auto* ver = app.add_subcommand("verify", "Check the lemma inequalities and the theorem floor");
  add_common(ver, cfg);
  add_limits(ver, cfg);
  ver->add_option("--epsilon", cfg.epsilon, "Also report the empirical x0 for this epsilon");
  ver->add_option("--grid", cfg.grid_ratio, "Sample grid ratio for --epsilon");
  ver->add_option("--grid-base", cfg.grid_base, "Sample grid base for --epsilon");
  ver->add_option("--inject-fault", cfg.fault,
                  "Negative control: suppress-forbidden:N, phantom:V,..., hidden:V,..., drop:V,...");

  auto* ana = app.add_subcommand("analyze", "Counting profile, H profile, gaps and exponent fit");
  add_common(ana, cfg);
  add_limits(ana, cfg);
  ana->add_option("--grid", cfg.grid_ratio, "Geometric sample ratio");
  ana->add_option("--grid-base", cfg.grid_base, "Geometric sample base");
  ana->add_option("--epsilon", cfg.epsilon, "Report the empirical x0 for this epsilon");
  ana->add_flag("--skip-h", cfg.skip_h, "Omit H outputs (required when k != 3)");

  auto* exp = app.add_subcommand("export", "Write terms as an OEIS b-file (txt) or CSV");
  add_common(exp, cfg, false);
  add_limits(exp, cfg);
  exp->add_option("--in", cfg.in, "Read terms from a sequence file instead of generating");
  exp->add_option("--format", cfg.format, "txt (b-file) or csv")->check(CLI::IsMember({"txt", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfig;
  }

  try {
    if ((gen->parsed() || (exp->parsed() && cfg.in.empty())) && cfg.seed.empty() && cfg.resume.empty())
      throw Failure{kConfig, "--seed is required"};
    if (gen->parsed()) return cmd_generate(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    if (ana->parsed()) return cmd_analyze(cfg);
    if (exp->parsed()) return cmd_export(cfg);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kConfig;
}

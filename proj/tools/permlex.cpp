// permlex: command-line front end for the permutation complexity library.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permlex/doubling.hpp"
#include "permlex/error.hpp"
#include "permlex/perm_set.hpp"
#include "permlex/report.hpp"
#include "permlex/shift_order.hpp"
#include "permlex/verify.hpp"
#include "permlex/word.hpp"
#include "permlex/word_spec.hpp"

namespace {

using namespace permlex;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr std::size_t kMaxLength = std::size_t{1} << 20;

struct RunConfig {
  std::string word;
  std::optional<std::size_t> n;
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  std::size_t scan_window = kDefaultScanWindow;
  std::size_t max_horizon = kDefaultHorizon;
  std::string format = "csv";
  std::string output;
  bool no_saturate = false;
};

struct DeltaConfig {
  std::string word;
  std::size_t start = 0;
  std::size_t count = 0;
  std::string map = "delta";
  std::size_t max_horizon = kDefaultHorizon;
  bool verify = false;
};

struct AuditConfig {
  std::string word;
  std::string map = "delta";
  std::size_t n = 0;
  std::size_t scan_window = kDefaultScanWindow;
  std::size_t max_horizon = kDefaultHorizon;
};

struct VerifyConfig {
  std::string suite;
  std::size_t n_max = 0;
  std::size_t scan_window = kDefaultScanWindow;
  std::size_t max_horizon = kDefaultHorizon;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single writer for all data output.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

int cmd_gen(const std::string& word, std::size_t length) {
  if (length > kMaxLength * 16) throw UsageError("length too large");
  WordSource source = parse_word_spec(word);
  std::cout << extend_prefix(source, length).str() << '\n';
  return kExitOk;
}

int cmd_tau(RunConfig cfg) {
  if (cfg.n) cfg.n_min = cfg.n_max = *cfg.n;
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw UsageError("empty n range");
  if (cfg.n_max > kMaxLength) throw UsageError("n is capped at 2^20");
  if (cfg.scan_window < cfg.n_max) {
    throw UsageError("scan window must be at least the largest n");
  }
  WordSource source = parse_word_spec(cfg.word);
  const std::string spec = source.describe();
  const TauFormula formula(source);
  Enumerator enumerator(std::move(source), cfg.max_horizon);
  const bool saturate = !cfg.no_saturate;
  enumerator.index((saturate ? 2 * cfg.scan_window : cfg.scan_window) + cfg.n_max,
                   cfg.n_max);

  std::vector<TauRow> rows;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    const PermSet set = enumerator.perm_set(n, cfg.scan_window, saturate);
    rows.push_back({n, set.count(), formula(n), set.saturated, set.scan_window});
  }

  Sink sink(cfg.output);
  std::ostream& os = sink.out();
  if (cfg.format == "json") {
    os << tau_table_json(spec, rows).dump(2) << '\n';
  } else {
    os << "# permlex tau word=" << spec << " scan_window=" << cfg.scan_window
       << " max_horizon=" << cfg.max_horizon << " saturate=" << std::boolalpha
       << saturate << '\n';
    os << tau_csv_header() << '\n';
    for (const auto& row : rows) os << tau_csv_row(row) << '\n';
  }
  bool mismatch = false;
  for (const auto& row : rows) {
    if (row.mismatch()) {
      std::cerr << "mismatch at n=" << row.n << ": enumerated " << row.enumerated
                << ", formula " << *row.formula << '\n';
      mismatch = true;
    }
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int cmd_delta(const DeltaConfig& cfg) {
  if (cfg.count < 2) throw UsageError("count must be at least 2");
  WordSource source = parse_word_spec(cfg.word);
  const MapKind kind = parse_map_kind(cfg.map);
  const RunBounds bounds = default_run_bounds(source);
  const DeltaResult d = delta(source, cfg.start, cfg.count, bounds, cfg.max_horizon);
  const Permutation mapped = restrict_image(kind, d.image);

  std::cout << "word   " << source.describe() << '\n'
            << "window start=" << cfg.start << " n=" << cfg.count << " k=" << bounds.k
            << " (k0=" << bounds.k0 << " k1=" << bounds.k1 << ")\n"
            << "p      " << d.p.str() << '\n'
            << "L^k(p) " << d.q.str() << '\n'
            << "class  " << join(d.profile.class_index) << '\n'
            << "gamma  " << join(d.profile.gamma_sizes) << '\n'
            << "S      " << join(d.profile.partial_sums) << '\n'
            << to_string(kind) << "  " << mapped.str() << '\n';
  if (!cfg.verify) return kExitOk;

  const MapTarget target = map_target(kind, cfg.start, cfg.count);
  WordSource twice = doubled(source);
  const Permutation direct =
      subpermutation(twice, target.start, target.length, cfg.max_horizon);
  if (direct == mapped) {
    std::cout << "MATCH\n";
    return kExitOk;
  }
  std::cout << "direct " << direct.str() << '\n' << "MISMATCH\n";
  return kExitMismatch;
}

int cmd_audit(const AuditConfig& cfg) {
  if (cfg.n < 2 || cfg.n > kMaxLength) throw UsageError("n out of range");
  if (cfg.scan_window < cfg.n) {
    throw UsageError("scan window must be at least n");
  }
  WordSource source = parse_word_spec(cfg.word);
  AuditOptions options;
  options.scan_window = cfg.scan_window;
  options.max_horizon = cfg.max_horizon;
  const AuditReport report = audit_map(source, parse_map_kind(cfg.map), cfg.n, options);
  nlohmann::json j = to_json(report);
  j["word"] = source.describe();
  std::cout << j.dump(2) << '\n';
  return report.surjective && report.structural_ok() ? kExitOk : kExitMismatch;
}

int cmd_verify(const VerifyConfig& cfg) {
  SuiteOptions options;
  options.scan_window = cfg.scan_window;
  options.max_horizon = cfg.max_horizon;
  const auto results = run_suite(cfg.suite, cfg.n_max, options);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    if (r.passed) ++passed;
  }
  const bool all = passed == results.size();
  std::cout << (all ? "PASS" : "FAIL") << " suite " << cfg.suite << ": " << passed << "/"
            << results.size() << " checks passed\n";
  return all ? kExitOk : kExitMismatch;
}

void add_engine_options(CLI::App* sub, std::size_t* scan_window, std::size_t* max_horizon) {
  if (scan_window) {
    sub->add_option("--scan-window", *scan_window, "Start positions to scan")
        ->envname("PERMLEX_SCAN_WINDOW")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  sub->add_option("--max-horizon", *max_horizon, "Letters compared before giving up")
      ->envname("PERMLEX_MAX_HORIZON")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation complexity of binary words under letter doubling"};
  app.require_subcommand(1);

  std::string gen_word;
  std::size_t gen_length = 0;
  auto* gen = app.add_subcommand("gen", "Print a prefix of a word");
  gen->add_option("--word", gen_word, "Word spec")->required();
  gen->add_option("--length", gen_length, "Prefix length")->required();

  RunConfig tau_cfg;
  std::size_t tau_n = 0;
  auto* tau = app.add_subcommand("tau", "Tabulate permutation complexity");
  tau->add_option("--word", tau_cfg.word, "Word spec")->required();
  auto* n_opt = tau->add_option("--n", tau_n, "Single length");
  tau->add_option("--n-min", tau_cfg.n_min, "First length")->excludes(n_opt)
      ->capture_default_str();
  tau->add_option("--n-max", tau_cfg.n_max, "Last length")->excludes(n_opt)
      ->capture_default_str();
  tau->add_option("--format", tau_cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  tau->add_option("--output", tau_cfg.output, "Output file (default stdout)");
  tau->add_flag("--no-saturate", tau_cfg.no_saturate, "Scan one window only");
  add_engine_options(tau, &tau_cfg.scan_window, &tau_cfg.max_horizon);

  DeltaConfig delta_cfg;
  auto* delta_cmd = app.add_subcommand("delta", "Show the doubling map on one window");
  delta_cmd->add_option("--word", delta_cfg.word, "Word spec")->required();
  delta_cmd->add_option("--start", delta_cfg.start, "Window start")->required();
  delta_cmd->add_option("--count", delta_cfg.count, "Window length n")->required();
  delta_cmd->add_option("--map", delta_cfg.map, "delta, delta_L, delta_R or delta_M")
      ->capture_default_str();
  delta_cmd->add_flag("--verify", delta_cfg.verify,
                      "Compare against the doubled word directly");
  add_engine_options(delta_cmd, nullptr, &delta_cfg.max_horizon);

  AuditConfig audit_cfg;
  auto* audit = app.add_subcommand("audit", "Audit a doubling map at one length");
  audit->add_option("--word", audit_cfg.word, "Word spec")->required();
  audit->add_option("--map", audit_cfg.map, "delta, delta_L, delta_R or delta_M")
      ->capture_default_str();
  audit->add_option("--n", audit_cfg.n, "Window length n")->required();
  add_engine_options(audit, &audit_cfg.scan_window, &audit_cfg.max_horizon);

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites;
  for (auto s : suite_names()) suites.emplace_back(s);
  verify->add_option("--suite", verify_cfg.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suites));
  verify->add_option("--n-max", verify_cfg.n_max, "Largest length")->required();
  add_engine_options(verify, &verify_cfg.scan_window, &verify_cfg.max_horizon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_word, gen_length);
    if (*tau) {
      if (*n_opt) tau_cfg.n = tau_n;
      return cmd_tau(tau_cfg);
    }
    if (*delta_cmd) return cmd_delta(delta_cfg);
    if (*audit) return cmd_audit(audit_cfg);
    if (*verify) return cmd_verify(verify_cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

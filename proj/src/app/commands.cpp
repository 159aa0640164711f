#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsm/app/commands.hpp"
#include "qsm/app/depth_model_io.hpp"
#include "qsm/app/regression.hpp"
#include "qsm/app/selftest.hpp"
#include "qsm/app/text_source.hpp"
#include "qsm/circuits.hpp"
#include "qsm/errors.hpp"
#include "qsm/grover.hpp"
#include "qsm/qcore/gate_list.hpp"

namespace qsm::app {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kSchemaId = "qsm-report/1";

enum class Format { json, csv, human };

struct RunConfig {
  std::string command;
  std::optional<std::string> text;
  std::optional<std::string> text_file;
  std::optional<std::string> pattern;
  std::optional<std::size_t> k;
  std::optional<std::size_t> K;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> depth_model_file;
  Format format = Format::json;
  bool verify = false;
  std::size_t budget_qubits = kDefaultBasisBudget;
  std::optional<std::string> dump_circuit;
  AlphabetPolicy alphabet = AlphabetPolicy::observed;
  std::string procedure = "A";
  bool timing = false;
  int threads = 1;
  std::size_t min_exp = 10;
  std::size_t max_exp = 22;
  std::size_t scan_m = 4;
  std::size_t scan_sigma = 2;
  std::string inject_fault;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::human: return "human";
  }
  return "json";
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (c.text) j["text"] = *c.text;
  if (c.text_file) j["text_file"] = *c.text_file;
  if (c.pattern) j["pattern"] = *c.pattern;
  j["k"] = c.k ? Json(*c.k) : Json(nullptr);
  j["K"] = c.K ? Json(*c.K) : Json(nullptr);
  j["seed"] = c.seed;
  j["alphabet"] = c.alphabet == AlphabetPolicy::raw ? "raw" : "observed";
  j["budget_qubits"] = c.budget_qubits;
  j["verify"] = c.verify;
  if (c.command == "grover") j["procedure"] = c.procedure;
  return j;
}

LoadedInput load(const RunConfig& c) {
  const std::string body = c.text_file ? read_file(*c.text_file) : *c.text;
  return load_input(body, c.pattern.value_or(""), c.alphabet);
}

Json positions_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t p : v) a.push_back(p);
  return a;
}

Json schedule_json(const DepthReport& report) {
  Json by_phase;
  for (std::size_t p = 0; p < kPhaseCount; ++p) {
    by_phase[std::string(to_string(static_cast<Phase>(p)))] = report.schedule.by_phase[p];
  }
  return {{"total", report.total_layers}, {"qubits", report.qubits}, {"gates", report.gates}, {"by_phase", by_phase}};
}

Json match_report_json(const MatchReport& r) {
  Json j;
  j["found"] = r.found;
  j["position"] = r.found ? Json(r.position) : Json(nullptr);
  j["verified"] = r.verified;
  j["N"] = r.N;
  j["r"] = r.r;
  j["iterations"] = r.iterations;
  j["success_probability"] = r.success_probability;
  j["sampled"] = r.sampled;
  j["attempts"] = r.attempts;
  j["depth"] = {{"oracle", r.depth.oracle}, {"diffusion", r.depth.diffusion}, {"total", r.depth.total}};
  j["distribution"] = r.distribution;
  return j;
}

// --- match -------------------------------------------------------------------

Json cmd_match(const RunConfig& c, std::ostream& out) {
  const LoadedInput in = load(c);
  const std::size_t k = c.k.value_or(0);
  const bool approximate = k > 0;
  std::vector<Occurrence> occ;
  if (c.threads == 1) {
    occ = approximate ? shift_add_search(in.text, in.pattern, k) : shift_and_search(in.text, in.pattern);
  } else {
    occ = approximate ? parallel::shift_add_search(in.text, in.pattern, k, c.threads)
                      : parallel::shift_and_search(in.text, in.pattern, c.threads);
  }
  std::optional<bool> verified;
  if (c.verify) {
    verified = occ == (approximate ? brute_force_kmismatch(in.text, in.pattern, k)
                                   : brute_force_exact(in.text, in.pattern));
  }

  Json results;
  results["engine"] = approximate ? "shift-add" : "shift-and";
  results["n"] = in.text.size();
  results["m"] = in.pattern.size();
  results["sigma"] = in.text.sigma;
  results["count"] = occ.size();
  Json list = Json::array();
  for (const auto& o : occ) list.push_back({{"position", o.start}, {"mismatches", o.mismatches}});
  results["occurrences"] = list;
  results["verified"] = verified ? Json(*verified) : Json(nullptr);

  if (c.format == Format::csv) {
    out << "position,mismatches\n";
    for (const auto& o : occ) out << o.start << ',' << o.mismatches << '\n';
  } else if (c.format == Format::human) {
    out << results["engine"].get<std::string>() << ": " << occ.size() << " occurrence(s)\n";
    for (const auto& o : occ) out << "  " << o.start << " (" << o.mismatches << " mismatches)\n";
    if (verified) out << "oracle check: " << (*verified ? "agree" : "DISAGREE") << '\n';
  }
  if (verified && !*verified) throw VerificationFailure("search results differ from the brute-force oracle");
  return results;
}

// --- qsim --------------------------------------------------------------------

Json cmd_qsim(const RunConfig& c, const DepthModel& model, std::ostream& out) {
  const LoadedInput in = load(c);
  BuildOptions build;
  build.budget_qubits = c.budget_qubits;
  Json results;
  std::vector<std::size_t> positions;
  std::vector<std::size_t> oracle;
  Circuit circuit;
  if (c.k) {
    const QsaddCircuit built = build_qsadd(in.text, in.pattern, *c.k, build);
    const QsaddTrace trace = run_qsadd(in.text, in.pattern, *c.k, build);
    circuit = built.circuit;
    positions = occurrence_positions_from_trace(trace);
    for (const auto& o : brute_force_kmismatch(in.text, in.pattern, *c.k)) oracle.push_back(o.start);
    results["circuit"] = "qsadd";
    results["r"] = trace.r;
    results["flags"] = trace.flags;
    results["uncompute_ok"] = trace.uncompute_violations.empty();
    results["uncompute_violations"] = positions_json(trace.uncompute_violations);
  } else {
    const QsandCircuit built = build_qsand(in.text, in.pattern, build);
    const QsandTrace trace = run_qsand(in.text, in.pattern, build);
    circuit = built.circuit;
    positions = occurrence_positions_from_trace(trace);
    for (const auto& o : brute_force_exact(in.text, in.pattern)) oracle.push_back(o.start);
    results["circuit"] = "qsand";
    results["r"] = trace.r;
    std::vector<bool> flags;
    const std::uint64_t bit = std::uint64_t{1} << (in.pattern.size() - 1);
    for (std::size_t j = in.pattern.size() - 1; j < trace.blocks.size(); ++j) {
      flags.push_back((trace.blocks[j] & bit) != 0);
    }
    results["flags"] = flags;
    results["uncompute_ok"] = trace.uncompute_violations.empty();
    results["uncompute_violations"] = positions_json(trace.uncompute_violations);
    results["ledger_ok"] = trace.ledger_violations.empty();
  }
  results["positions"] = positions_json(positions);
  const DepthReport depth = depth_report(circuit, model);
  results["depth"] = schedule_json(depth);
  const bool agree = positions == oracle;
  results["verified"] = c.verify ? Json(agree) : Json(nullptr);

  if (c.dump_circuit) {
    std::ofstream f(*c.dump_circuit);
    if (!f) throw std::runtime_error("cannot write " + *c.dump_circuit);
    write_gate_list(f, circuit);
  }
  if (c.format == Format::csv) {
    out << "position\n";
    for (std::size_t p : positions) out << p << '\n';
  } else if (c.format == Format::human) {
    out << results["circuit"].get<std::string>() << ": " << depth.qubits << " qubits, " << depth.gates
        << " gates, depth " << depth.total_layers << '\n';
    out << "r = " << results["r"].get<bool>() << ", positions:";
    for (std::size_t p : positions) out << ' ' << p;
    out << "\nuncompute " << (results["uncompute_ok"].get<bool>() ? "clean" : "VIOLATED") << '\n';
  }
  if (c.verify && !agree) throw VerificationFailure("circuit occurrences differ from the classical oracle");
  return results;
}

// --- grover ------------------------------------------------------------------

Json cmd_grover(const RunConfig& c, const DepthModel& model, std::ostream& out) {
  const LoadedInput in = load(c);
  ProcedureOptions opts;
  opts.seed = c.seed;
  opts.k = c.k;
  opts.model = model;
  opts.build.budget_qubits = c.budget_qubits;
  Json results;
  MatchReport final_report;
  if (c.procedure == "A") {
    final_report = procedure_a(in.text, in.pattern, opts);
    results["procedure"] = "A";
    results["oracle"] = c.k ? "qsadd" : "qsand";
    Json r = match_report_json(final_report);
    for (auto& [key, value] : r.items()) results[key] = value;
  } else {
    const ProcedureBReport b = procedure_b(in.text, in.pattern, c.K, opts);
    final_report = b.result;
    results["procedure"] = "B";
    results["oracle"] = c.k ? "qsadd" : "qsand";
    results["found"] = b.result.found;
    results["position"] = b.result.found ? Json(b.result.position) : Json(nullptr);
    results["verified"] = b.result.verified;
    results["iterations"] = b.result.iterations;
    results["success_probability"] = b.result.success_probability;
    results["depth"] = {{"total", b.result.depth.total}};
    results["plan"] = {{"K", b.plan.K}, {"stride", b.plan.stride}, {"N", b.plan.N}, {"starts", b.plan.starts}};
    results["stages"] = {{"blocks", match_report_json(b.blocks)},
                         {"refine", b.refine ? match_report_json(*b.refine) : Json(nullptr)}};
  }
  if (c.format == Format::csv) {
    out << "index,probability\n";
    const auto& dist = final_report.distribution;
    for (std::size_t i = 0; i < dist.size(); ++i) out << i << ',' << dist[i] << '\n';
  } else if (c.format == Format::human) {
    out << "procedure " << c.procedure << ": ";
    if (final_report.found) {
      out << "found at " << final_report.position << " (verified)\n";
    } else {
      out << "not found\n";
    }
    out << "iterations " << final_report.iterations << ", success probability " << final_report.success_probability
        << ", depth " << final_report.depth.total << '\n';
  }
  if (final_report.found && !final_report.verified) throw VerificationFailure("measured position failed verification");
  return results;
}

// --- depth-scan --------------------------------------------------------------

Json cmd_depth_scan(const RunConfig& c, const DepthModel& model, std::ostream& out) {
  if (c.min_exp < 1 || c.min_exp >= c.max_exp || c.max_exp > 40) {
    throw DomainError("depth-scan needs 1 <= --min-exp < --max-exp <= 40");
  }
  std::vector<DepthScanRow> rows;
  std::vector<double> x, full, a, b;
  for (std::size_t e = c.min_exp; e <= c.max_exp; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const std::size_t K = c.K.value_or(default_block_size(n, c.scan_m));
    rows.push_back(depth_totals(n, c.scan_m, K, c.scan_sigma, model));
    x.push_back(static_cast<double>(n));
    full.push_back(static_cast<double>(rows.back().qsand_full));
    a.push_back(static_cast<double>(rows.back().proc_a));
    b.push_back(static_cast<double>(rows.back().proc_b));
  }
  const double s_full = loglog_slope(x, full);
  const double s_a = loglog_slope(x, a);
  const double s_b = loglog_slope(x, b);

  Json results;
  results["m"] = c.scan_m;
  results["sigma"] = c.scan_sigma;
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back({{"n", r.n}, {"K", r.K}, {"qsand_full", r.qsand_full}, {"proc_a", r.proc_a}, {"proc_b", r.proc_b}});
  }
  results["rows"] = table;
  results["slopes"] = {{"qsand_full", s_full}, {"proc_a", s_a}, {"proc_b", s_b}};

  if (c.format != Format::json) {
    out << "n,K,qsand_full,proc_a,proc_b\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.K << ',' << r.qsand_full << ',' << r.proc_a << ',' << r.proc_b << '\n';
    }
    out << std::fixed << std::setprecision(4);
    out << "slope,," << s_full << ',' << s_a << ',' << s_b << '\n';
    out << std::defaultfloat;
  }
  return results;
}

// --- selftest ----------------------------------------------------------------

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  SelftestOptions opts;
  opts.seed = c.seed;
  opts.inject_mask_fault = c.inject_fault == "mask-off-by-one";
  const auto results = run_selftest(opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;

  if (c.format == Format::json) {
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row{{"criterion", r.criterion}, {"name", r.name}, {"passed", r.passed},
               {"cases", r.cases},         {"failures", r.failures}, {"detail", r.detail}};
      if (c.timing) row["seconds"] = r.seconds;
      rows.push_back(row);
    }
    Json report{{"schema", kSchemaId}, {"config", config_json(c)}, {"results", {{"passed", ok}, {"checks", rows}}}};
    out << report.dump(2) << '\n';
  } else {
    out << std::left << std::setw(4) << "#" << std::setw(40) << "property" << std::setw(6) << "ok" << std::right
        << std::setw(10) << "cases" << std::setw(10) << "failures" << std::setw(10) << "seconds" << '\n';
    for (const auto& r : results) {
      out << std::left << std::setw(4) << r.criterion << std::setw(40) << r.name << std::setw(6)
          << (r.passed ? "PASS" : "FAIL") << std::right << std::setw(10) << r.cases << std::setw(10) << r.failures
          << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds << std::defaultfloat << '\n';
      if (!r.passed && !r.detail.empty()) out << "    first failure: " << r.detail << '\n';
    }
    out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerification;
}

// --- option wiring -----------------------------------------------------------

void add_input_options(CLI::App* sub, RunConfig& c) {
  auto* text = sub->add_option("--text", c.text, "Inline text");
  auto* file = sub->add_option("--text-file", c.text_file, "Read the text from a file");
  text->excludes(file);
  sub->add_option("--pattern", c.pattern, "Pattern")->required();
  sub->add_option("--alphabet", c.alphabet, "Alphabet policy")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, AlphabetPolicy>{{"observed", AlphabetPolicy::observed}, {"raw", AlphabetPolicy::raw}},
          CLI::ignore_case));
}

void add_common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--depth-model", c.depth_model_file, "JSON file with depth-model weights");
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}, {"human", Format::human}},
          CLI::ignore_case));
  sub->add_flag("--timing", c.timing, "Include wall-clock timing in the report");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Bit-parallel and quantum string matching toolkit", "qsm"};
  app.require_subcommand(1);

  auto* match = app.add_subcommand("match", "Classical Shift-And / Shift-Add search");
  add_input_options(match, c);
  add_common_options(match, c);
  match->add_option("--k", c.k, "Mismatch bound (Shift-Add when > 0)");
  match->add_flag("--verify", c.verify, "Cross-check against the brute-force oracle");
  match->add_option("--threads", c.threads, "1 = serial scan, 0 = all cores, T = T threads")->capture_default_str();

  auto* qsim = app.add_subcommand("qsim", "Run the QSAnd (or QSAdd with --k) circuit");
  add_input_options(qsim, c);
  add_common_options(qsim, c);
  qsim->add_option("--k", c.k, "Mismatch bound; selects QSAdd");
  qsim->add_flag("--verify", c.verify, "Cross-check against the classical oracle");
  qsim->add_option("--budget-qubits", c.budget_qubits, "Largest circuit accepted")->capture_default_str();
  qsim->add_option("--dump-circuit", c.dump_circuit, "Write the gate list to a file");

  auto* grover = app.add_subcommand("grover", "Grover search with Procedure A or B");
  add_input_options(grover, c);
  add_common_options(grover, c);
  grover->add_option("--k", c.k, "Mismatch bound; oracles use QSAdd");
  grover->add_option("--K", c.K, "Block size for Procedure B");
  grover->add_option("--procedure", c.procedure, "A or B")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  grover->add_flag("--verify", c.verify, "Accepted for symmetry; results are always verified");
  grover->add_option("--budget-qubits", c.budget_qubits, "Largest oracle circuit accepted")->capture_default_str();

  auto* scan = app.add_subcommand("depth-scan", "Analytic depth over n = 2^min-exp .. 2^max-exp");
  add_common_options(scan, c);
  scan->add_option("--K", c.K, "Fixed block size (default max(m, ceil(log2 n)))");
  scan->add_option("--m", c.scan_m, "Pattern length")->capture_default_str();
  scan->add_option("--sigma", c.scan_sigma, "Alphabet size")->capture_default_str();
  scan->add_option("--min-exp", c.min_exp)->capture_default_str();
  scan->add_option("--max-exp", c.max_exp)->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run the equivalence suites");
  add_common_options(selftest, c);
  selftest->add_option("--inject-fault", c.inject_fault)
      ->check(CLI::IsMember({"mask-off-by-one"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // depth-scan defaults to CSV unless --format was given.
  if (scan->parsed() && scan->count("--format") == 0) c.format = Format::csv;
  if (selftest->parsed() && selftest->count("--format") == 0) c.format = Format::human;

  try {
    const auto t0 = Clock::now();
    c.command = app.get_subcommands().front()->get_name();
    if (c.command == "selftest") return cmd_selftest(c, out);
    if ((match->parsed() || qsim->parsed() || grover->parsed()) && !c.text && !c.text_file) {
      err << "error: one of --text or --text-file is required\n";
      return kExitUsage;
    }
    const DepthModel model = c.depth_model_file ? load_depth_model(*c.depth_model_file) : DepthModel{};

    std::ostringstream body;
    Json results;
    int code = kExitOk;
    try {
      if (c.command == "match") results = cmd_match(c, body);
      if (c.command == "qsim") results = cmd_qsim(c, model, body);
      if (c.command == "grover") results = cmd_grover(c, model, body);
      if (c.command == "depth-scan") results = cmd_depth_scan(c, model, body);
    } catch (const VerificationFailure& e) {
      err << "verification failed: " << e.what() << '\n';
      code = kExitVerification;
    }
    if (c.format == Format::json) {
      Json report;
      report["schema"] = kSchemaId;
      report["config"] = config_json(c);
      report["config"]["format"] = format_name(c.format);
      report["depth_model"] = to_json(model);
      report["results"] = results;
      if (c.timing) report["timing"] = {{"seconds", std::chrono::duration<double>(Clock::now() - t0).count()}};
      out << report.dump(2) << '\n';
    } else {
      out << body.str();
      if (c.timing) err << "elapsed " << std::chrono::duration<double>(Clock::now() - t0).count() << " s\n";
    }
    return code;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << " (required qubits: " << e.required_qubits() << ")\n";
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace qsm::app

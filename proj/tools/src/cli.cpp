#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jordan/checks.hpp"
#include "jordan/errors.hpp"
#include "jordan/lattice.hpp"
#include "jordan/random.hpp"
#include "jordan/reconstruct.hpp"
#include "jordan/sampling.hpp"
#include "jordan/serialize.hpp"
#include "jordan/symmetry.hpp"

namespace jordan::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string algebra;
  std::uint64_t seed = 1;
  int trials = 500;
  std::vector<std::string> tol;
  std::string out;
  bool pretty = false;
  bool no_timestamp = false;
};

// Thrown for bad user input; maps to the usage exit code.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(what + " is not valid JSON: " + e.what());
  }
}

// Inline JSON when the argument starts with '{', otherwise a file path.
json load_json_arg(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, what);
  return parse_json_text(read_file(arg), what);
}

Tolerances tolerances_from(const std::vector<std::string>& overrides) {
  Tolerances tol = default_tolerances();
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + item + "'");
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--tol value is not a number: '" + item + "'");
    }
    set_tolerance(tol, item.substr(0, eq), value);
  }
  return tol;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kPass;
    case Verdict::Fail: return kFail;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kFail;
}

json envelope(const std::string& command, const RunConfig& cfg, const Tolerances& tol) {
  json r{{"tool", "jordanlogic"}, {"version", JORDAN_VERSION}, {"command", command},
         {"seed", cfg.seed},      {"trials", cfg.trials},     {"tolerances", tolerances_to_json(tol)}};
  if (!cfg.no_timestamp) r["timestamp"] = utc_timestamp();
  return r;
}

std::string pretty(const json& report) {
  std::ostringstream os;
  os << report.at("command").get<std::string>() << "  verdict: " << report.at("verdict").get<std::string>() << "\n";
  if (report.contains("algebra_name")) os << "algebra: " << report["algebra_name"].get<std::string>() << "\n";
  os << "seed: " << report.at("seed") << "  trials: " << report.at("trials") << "\n";
  if (report.contains("reports")) {
    for (const auto& r : report["reports"]) {
      os << "  " << std::left << std::setw(15) << r["property"].get<std::string>() << std::setw(14)
         << r["verdict"].get<std::string>() << r["evaluated"] << "/" << r["trials"]
         << "  worst " << r["worst_residual"].get<double>() << "  " << r["message"].get<std::string>() << "\n";
    }
  }
  if (report.contains("spectrum")) {
    for (const auto& s : report["spectrum"]["spaces"])
      os << "  eigenvalue " << s["eigenvalue"].get<double>() << "  multiplicity " << s["multiplicity"] << "\n";
  }
  if (report.contains("result")) os << "result: " << report["result"].dump() << "\n";
  if (report.contains("construction")) {
    os << "  s_o " << report["construction"]["s_o"].get<double>() << "  invariance residual "
       << report["construction"]["invariance_residual"].get<double>() << "\n";
    os << "  native match: table " << report["native_match"]["table_residual"].get<double>() << "  product "
       << report["native_match"]["product_residual"].get<double>() << "\n";
  }
  if (report.contains("message")) os << report["message"].get<std::string>() << "\n";
  return os.str();
}

void emit(const json& report, const RunConfig& cfg, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + cfg.out + "'");
    f << text;
  }
  if (cfg.pretty) {
    out << pretty(report);
  } else if (cfg.out.empty()) {
    out << text;
  }
}

Algebra load_algebra(const std::string& arg) {
  if (arg.empty()) throw UsageError("--algebra is required");
  return algebra_from_json(load_json_arg(arg, "algebra descriptor"));
}

Element load_element(const std::string& arg) { return element_from_json(load_json_arg(arg, "element")); }

// ---------------------------------------------------------------- commands

int cmd_check(const RunConfig& cfg, const std::string& suite, std::ostream& out) {
  const Tolerances tol = tolerances_from(cfg.tol);
  const Algebra alg = load_algebra(cfg.algebra);
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite '" + suite + "'");
  if (cfg.trials < 0) throw UsageError("--trials must be non-negative");
  const auto reports = run_suite(alg, suite, cfg.trials, cfg.seed, tol);
  json r = envelope("check", cfg, tol);
  r["algebra"] = algebra_to_json(alg);
  r["algebra_name"] = alg.name();
  r["suite"] = suite;
  r["reports"] = json::array();
  for (const auto& rep : reports) r["reports"].push_back(report_to_json(rep));
  const Verdict v = combine(reports);
  r["verdict"] = verdict_name(v);
  emit(r, cfg, out);
  return exit_code(v);
}

int cmd_spectral(const RunConfig& cfg, const std::string& element_arg, std::ostream& out) {
  const Tolerances tol = tolerances_from(cfg.tol);
  if (element_arg.empty()) throw UsageError("--element is required");
  const Element a = load_element(element_arg);
  const SpectralDecomposition sd = spectral_decompose(a, tol);
  json r = envelope("spectral", cfg, tol);
  r["algebra"] = algebra_to_json(a.algebra());
  r["algebra_name"] = a.algebra().name();
  r["spectrum"] = spectral_to_json(sd);
  r["values"] = spectral_values(a, tol);
  r["reconstruction_residual"] = max_abs_diff(sd.reconstruct(), a);
  r["verdict"] = verdict_name(Verdict::Pass);
  emit(r, cfg, out);
  return kPass;
}

int cmd_lattice(const RunConfig& cfg, const std::string& op, const std::string& p_arg, const std::string& q_arg,
                std::ostream& out) {
  const Tolerances tol = tolerances_from(cfg.tol);
  if (p_arg.empty()) throw UsageError("--p is required");
  const Projection p = certify_projection(load_element(p_arg), tol);
  json r = envelope("lattice", cfg, tol);
  r["algebra"] = algebra_to_json(p.algebra());
  r["algebra_name"] = p.algebra().name();
  r["op"] = op;
  if (op == "dim") {
    r["result"] = dim(p, tol);
  } else {
    if (q_arg.empty()) throw UsageError("--q is required for " + op);
    const Projection q = certify_projection(load_element(q_arg), tol);
    if (!(p.algebra() == q.algebra())) throw UsageError("p and q belong to different algebras");
    if (op == "meet") {
      const Projection m = meet(p, q, tol);
      r["result"] = element_to_json(m.element());
      r["rank"] = m.rank();
    } else if (op == "join") {
      const Projection j = join(p, q, tol);
      r["result"] = element_to_json(j.element());
      r["rank"] = j.rank();
    } else if (op == "compat") {
      r["result"] = compatible(p, q, tol);
    } else {
      throw UsageError("unknown lattice op '" + op + "'");
    }
  }
  r["verdict"] = verdict_name(Verdict::Pass);
  emit(r, cfg, out);
  return kPass;
}

int cmd_reconstruct(const RunConfig& cfg, int samples, const std::string& base_kind, std::ostream& out) {
  const Tolerances tol = tolerances_from(cfg.tol);
  const Algebra alg = load_algebra(cfg.algebra);
  if (alg.capacity() != 2)
    throw PreconditionError("reconstruction needs information capacity 2; " + alg.name() + " has " +
                            std::to_string(alg.capacity()));
  if (samples <= 0) throw UsageError("--samples must be positive");
  InnerProductForm base = trace_form(alg);
  if (base_kind == "random") {
    Rng rng(derive_seed(cfg.seed, 0));
    base = InnerProductForm{alg, random_positive_definite(alg.real_dim(), rng), 0.0};
  } else if (base_kind != "trace") {
    throw UsageError("--base must be 'random' or 'trace'");
  }
  json r = envelope("reconstruct", cfg, tol);
  r["algebra"] = algebra_to_json(alg);
  r["algebra_name"] = alg.name();
  r["samples"] = samples;
  r["base"] = base_kind;

  const InvariantProductResult inv = invariant_inner_product(base, samples, derive_seed(cfg.seed, 1));
  r["invariance_residual"] = inv.form.invariance_residual;
  if (!inv.converged) {
    r["verdict"] = verdict_name(Verdict::Inconclusive);
    r["message"] = inv.message;
    emit(r, cfg, out);
    return kInconclusive;
  }
  std::optional<SpinConstruction> built;
  try {
    built = reconstruct_spin_factor(inv.form, 64, derive_seed(cfg.seed, 2));
  } catch (const InconclusiveError& e) {
    r["verdict"] = verdict_name(Verdict::Inconclusive);
    r["message"] = e.what();
    emit(r, cfg, out);
    return kInconclusive;
  }
  const SpinConstruction& c = *built;
  const CheckReport jordan = verify_jordan(c.table, cfg.trials, derive_seed(cfg.seed, 3));
  const NativeMatch match = match_native(c, std::max(cfg.trials, 1), derive_seed(cfg.seed, 4));
  r["construction"] = construction_to_json(c);
  r["verify_jordan"] = report_to_json(jordan);
  r["native_match"] = {{"table_residual", match.table_residual},
                       {"product_residual", match.product_residual},
                       {"tolerance", 10.0 * inv.form.invariance_residual}};
  Verdict v = jordan.verdict;
  if (v == Verdict::Pass && match.product_residual > 10.0 * inv.form.invariance_residual + 1e-9) {
    v = Verdict::Fail;
    r["message"] = "constructed product differs from the native product beyond 10x the invariance residual";
  }
  r["verdict"] = verdict_name(v);
  emit(r, cfg, out);
  return exit_code(v);
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_algebra) {
  if (with_algebra) cmd->add_option("--algebra", cfg.algebra, "Algebra descriptor: inline JSON or a file path");
  cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  cmd->add_option("--trials", cfg.trials, "Trial budget per check")->capture_default_str();
  cmd->add_option("--tol", cfg.tol, "Tolerance override name=value (repeatable)");
  cmd->add_option("--out", cfg.out, "Write the JSON report to this file");
  cmd->add_flag("--pretty", cfg.pretty, "Human-readable view of the report");
  cmd->add_flag("--no-timestamp", cfg.no_timestamp, "Omit the timestamp for byte-identical reports");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks and constructions for finite-dimensional Jordan algebras", "jordanlogic"};
  app.set_version_flag("--version", std::string(JORDAN_VERSION));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string suite = "all";
  std::string element_arg, op, p_arg, q_arg, base_kind = "random";
  int samples = 50000;

  auto* check = app.add_subcommand("check", "Run a hypothesis checker or the full suite");
  add_common(check, cfg, true);
  check->add_option("--suite", suite, "spectrality, strong-states, gbit, covering, equivalence, irreducible, "
                                      "weak-symmetry or all")
      ->capture_default_str();

  auto* spectral = app.add_subcommand("spectral", "Spectral decomposition of an element");
  add_common(spectral, cfg, false);
  spectral->add_option("--element", element_arg, "Element JSON (inline or file)");

  auto* lattice = app.add_subcommand("lattice", "Lattice operations on projections");
  add_common(lattice, cfg, false);
  lattice->add_option("--op", op, "meet, join, compat or dim")->required();
  lattice->add_option("--p", p_arg, "Projection p (element JSON, inline or file)");
  lattice->add_option("--q", q_arg, "Projection q (element JSON, inline or file)");

  auto* reconstruct = app.add_subcommand("reconstruct", "Spin-factor reconstruction of a capacity-2 algebra");
  add_common(reconstruct, cfg, true);
  reconstruct->add_option("--samples", samples, "Haar samples for the invariant product")->capture_default_str();
  reconstruct->add_option("--base", base_kind, "Base inner product: random or trace")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) return cmd_check(cfg, suite, out);
    if (*spectral) return cmd_spectral(cfg, element_arg, out);
    if (*lattice) return cmd_lattice(cfg, op, p_arg, q_arg, out);
    if (*reconstruct) return cmd_reconstruct(cfg, samples, base_kind, out);
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kUsage;
  } catch (const NotAProjectionError& e) {
    err << "not a projection: " << e.what() << "\n";
    return kUsage;
  } catch (const AlgebraMismatchError& e) {
    err << "algebra mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace jordan::cli

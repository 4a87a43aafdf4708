#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unient/bipartite.hpp"
#include "unient/convex_roof.hpp"
#include "unient/errors.hpp"
#include "unient/io.hpp"
#include "unient/multipartite.hpp"
#include "unient/partition.hpp"
#include "unient/verifier.hpp"

namespace unient::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("UNIENT_SEED");
  if (!env || !*env) return kDefaultSeed;
  std::uint64_t seed = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("UNIENT_SEED is not an unsigned integer");
  return seed;
}

struct RoofOptions {
  std::size_t restarts = RoofConfig{}.restarts;
  std::size_t max_iterations = RoofConfig{}.max_iterations;
  std::size_t ensemble_size = 0;
  double tolerance = RoofConfig{}.tolerance;
  std::size_t threads = 1;

  void attach(CLI::App& app) {
    app.add_option("--restarts", restarts, "Random restarts of the roof optimizer");
    app.add_option("--max-iterations", max_iterations, "Sweep limit per restart")->check(CLI::PositiveNumber);
    app.add_option("--ensemble-size", ensemble_size, "Ensemble size (0: rank squared)");
    app.add_option("--tolerance", tolerance, "Sweep stagnation tolerance")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Worker threads for restarts")->check(CLI::PositiveNumber);
  }

  RoofConfig config(RngConfig rng) const {
    RoofConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iterations = max_iterations;
    cfg.ensemble_size = ensemble_size;
    cfg.tolerance = tolerance;
    cfg.threads = threads;
    cfg.rng = rng;
    return cfg;
  }

  json to_json() const {
    return {{"restarts", restarts},
            {"max_iterations", max_iterations},
            {"ensemble_size", ensemble_size},
            {"tolerance", tolerance},
            {"threads", threads}};
  }
};

struct Seeding {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  bool seed_given = false;

  void attach(CLI::App& app) {
    app.add_option("--seed", seed, "RNG seed (default: $UNIENT_SEED or built-in)")
        ->each([this](const std::string&) { seed_given = true; });
    app.add_option("--stream", stream, "RNG stream id");
  }

  RngConfig resolve() const { return {seed_given ? seed : default_seed(), stream}; }
};

Family parse_family(const std::string& s) {
  if (s == "QS") return Family::QS;
  if (s == "RT") return Family::RT;
  throw UsageError("unknown family '" + s + "'");
}

std::optional<GlobalForm> parse_form(const std::string& s) {
  if (s == "SumQS") return GlobalForm::SumQS;
  if (s == "SumRT") return GlobalForm::SumRT;
  if (s == "ProdQS") return GlobalForm::ProdQS;
  if (s == "ProdRT") return GlobalForm::ProdRT;
  return std::nullopt;
}

Family family_of(GlobalForm f) {
  return f == GlobalForm::SumQS || f == GlobalForm::ProdQS ? Family::QS : Family::RT;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string human(double v) { return format_number(v, 7); }

// ---------------------------------------------------------------------------

struct MeasureCommand {
  std::string state_file;
  std::string partition;
  std::string family;
  double a = 0.0;
  double b = 0.0;
  bool genuine = false;
  std::string out_file;
  RoofOptions roof;
  Seeding seeding;

  void attach(CLI::App& app) {
    app.add_option("state", state_file, "State file (JSON)")->required();
    app.add_option("--partition", partition, "Partition such as A|BC (default: A | rest)");
    app.add_option("--family", family, "QS, RT, SumQS, SumRT, ProdQS or ProdRT")->required();
    app.add_option("--a", a, "First parameter (q or r)")->required();
    app.add_option("--b", b, "Second parameter (s or t)")->required();
    app.add_flag("--genuine", genuine, "Minimum over all bipartitions instead of one partition");
    app.add_option("--out", out_file, "Also write the JSON record here");
    roof.attach(app);
    seeding.attach(app);
  }

  int execute(std::ostream& out) const {
    const AnyState state = read_state_file(state_file);
    const Dims dims = std::visit([](const auto& s) { return s.dims(); }, state);
    const std::size_t parties = dims.size();

    const auto form = parse_form(family);
    const MeasureParams params(form ? family_of(*form) : parse_family(family), a, b);
    if (form && genuine) throw UsageError("--genuine takes QS or RT, not a global form");

    const Partition part = partition.empty()
                               ? (parties >= 2 ? Partition::bipartition({0}, parties) : Partition::finest(parties))
                               : Partition::parse(partition, parties);

    const RngConfig rng = seeding.resolve();
    const RoofConfig cfg = roof.config(rng);

    json record{{"schema", kSchema},
                {"command", "measure"},
                {"dims", dims},
                {"params", {{"family", params.family() == Family::QS ? "QS" : "RT"}, {"a", a}, {"b", b}}},
                {"rng", {{"algorithm", kRngAlgorithm}, {"seed", rng.seed}, {"stream", rng.stream}}}};

    double value = 0.0;
    bool exact = true;
    std::optional<RoofResult> roof_result;

    if (const auto* psi = std::get_if<PureState>(&state)) {
      record["kind"] = "pure";
      if (genuine) {
        const GenuineValue g = genuine_measure_pure(*psi, params);
        value = g.value;
        record["measure"] = "genuine";
        record["minimizer"] = g.minimizer.to_string();
      } else if (form) {
        value = global_measure_pure(*psi, part, {*form, params});
        record["measure"] = to_string(*form);
        record["partition"] = part.to_string();
      } else {
        value = entanglement_pure(*psi, part, params);
        record["measure"] = "bipartite";
        record["partition"] = part.to_string();
      }
    } else {
      const auto& rho = std::get<DensityMatrix>(state);
      record["kind"] = "mixed";
      if (genuine) {
        roof_result = genuine_measure_mixed(rho, params, cfg);
        record["measure"] = "genuine";
      } else if (form) {
        roof_result = global_measure_mixed(rho, part, {*form, params}, cfg);
        record["measure"] = to_string(*form);
        record["partition"] = part.to_string();
      } else {
        roof_result = convex_roof_estimate(rho, part, params, cfg);
        record["measure"] = "bipartite";
        record["partition"] = part.to_string();
        if (rho.dims() == Dims{2, 2}) record["concurrence_closed_form"] = two_qubit_measure(rho, params);
      }
      value = roof_result->value;
      exact = rho.rank() == 1;
    }

    record["value"] = value;
    record["provenance"] = exact ? "exact" : "upper-bound";
    if (roof_result && !exact) {
      record["roof"] = roof.to_json();
      record["roof"]["iterations_exhausted"] = roof_result->iterations_exhausted;
      record["roof"]["best_start"] = roof_result->best_start;
      record["roof"]["witness_size"] = roof_result->witness.size();
    }

    out << human(value) << "\n" << record.dump() << "\n";
    if (!out_file.empty()) write_text(out_file, record.dump(2) + "\n");
    return kOk;
  }
};

struct WernerScanCommand {
  double p_min = 0.0;
  double p_max = 1.0;
  std::size_t steps = 100;
  std::string out_file;

  void attach(CLI::App& app) {
    app.add_option("--p-min", p_min, "Smallest weight");
    app.add_option("--p-max", p_max, "Largest weight");
    app.add_option("--steps", steps, "Number of intervals")->check(CLI::PositiveNumber);
    app.add_option("--out", out_file, "CSV destination (default: stdout)");
  }

  int execute(std::ostream& out) const {
    if (!(p_min >= 0.0 && p_min < p_max && p_max <= 1.0))
      throw DomainError("need 0 <= p-min < p-max <= 1");
    const MeasureParams e22 = MeasureParams::qs(2.0, 2.0);
    const MeasureParams e2h = MeasureParams::qs(2.0, 0.5);
    const MeasureParams ehh = MeasureParams::rt(0.5, 0.5);
    std::string csv = "p,E_2_2,E_2_half,E_half_half,ordered\n";
    for (std::size_t i = 0; i <= steps; ++i) {
      const double p = i == steps ? p_max : p_min + (p_max - p_min) * static_cast<double>(i) / static_cast<double>(steps);
      const DensityMatrix w = werner_state(p);
      const double v1 = two_qubit_measure(w, e22);
      const double v2 = two_qubit_measure(w, e2h);
      const double v3 = two_qubit_measure(w, ehh);
      const char* ordered = p > 1.0 / 3.0 ? (v1 < v2 && v2 < v3 ? "true" : "false") : "n/a";
      csv += format_number(p, 17) + "," + format_number(v1, 17) + "," + format_number(v2, 17) + "," +
             format_number(v3, 17) + "," + ordered + "\n";
    }
    if (out_file.empty())
      out << csv;
    else
      write_text(out_file, csv);
    return kOk;
  }
};

struct VerifyCommand {
  std::string suite;
  std::size_t cases = 0;
  std::string out_file;
  std::string family;
  double a = 0.0;
  double b = 0.0;
  std::size_t dim = 0;
  double x = 0.0;
  bool x_given = false;
  bool list = false;
  RoofOptions roof;
  Seeding seeding;

  void attach(CLI::App& app) {
    app.add_option("--suite", suite, "Suite name");
    app.add_flag("--list", list, "List suite names");
    app.add_option("--cases", cases, "Corpus size (default: per suite)")->check(CLI::PositiveNumber);
    app.add_option("--out", out_file, "JSON report destination");
    app.add_option("--family", family, "Override the parameter sweep: QS or RT (needs --a, --b)");
    app.add_option("--a", a, "First parameter");
    app.add_option("--b", b, "Second parameter");
    app.add_option("--dim", dim, "Local dimension override")->check(CLI::Range(2, 16));
    app.add_option("--x", x, "Diagonal-family parameter for the hierarchy suites")
        ->each([this](const std::string&) { x_given = true; });
    roof.attach(app);
    seeding.attach(app);
  }

  int execute(std::ostream& out) const {
    if (list) {
      for (const auto& name : suite_names()) out << name << "\n";
      return kOk;
    }
    if (suite.empty()) throw UsageError("--suite is required");
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");

    CorpusSpec corpus;
    corpus.cases = cases;
    if (!family.empty()) corpus.params = MeasureParams(parse_family(family), a, b);
    if (dim) corpus.local_dim = dim;
    if (x_given) corpus.x = x;
    const RngConfig rng = seeding.resolve();
    corpus.roof = roof.config(rng);

    const SuiteReport report = run_suite(suite, corpus, rng);

    out << std::left << std::setw(22) << "suite" << std::setw(8) << "cases" << std::setw(10) << "failures"
        << std::setw(16) << "min residual" << std::setw(16) << "max residual" << "status\n";
    out << std::setw(22) << report.suite << std::setw(8) << report.cases.size() << std::setw(10) << report.failures()
        << std::setw(16) << human(report.min_residual()) << std::setw(16) << human(report.max_residual())
        << (report.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : report.conventions) out << "  convention: " << c << "\n";
    for (const auto& n : report.notes) out << "  note: " << n << "\n";
    std::size_t shown = 0;
    for (const auto& c : report.cases)
      if (!c.passed && shown++ < 10) out << "  failed: " << c.label << " residual " << human(c.residual) << "\n";

    if (!out_file.empty()) write_text(out_file, report_to_json(report).dump(2) + "\n");
    return report.passed() ? kOk : kSuiteFailure;
  }
};

struct PartitionsCommand {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> xi;
  std::vector<std::string> coarser;

  void attach(CLI::App& app) {
    auto* n_opt = app.add_option("--n", n, "Number of parties")->check(CLI::PositiveNumber);
    auto* k_opt = app.add_option("--k", k, "Number of blocks")->check(CLI::PositiveNumber);
    n_opt->needs(k_opt);
    k_opt->needs(n_opt);
    auto* xi_opt = app.add_option("--xi", xi, "Residual set of a coarsening step: FINER COARSER")->expected(2);
    auto* c_opt = app.add_option("--coarser", coarser, "Test FINER > COARSER")->expected(2);
    xi_opt->excludes(n_opt)->excludes(c_opt);
    c_opt->excludes(n_opt);
  }

  static std::pair<Partition, Partition> parse_pair(const std::vector<std::string>& texts) {
    const std::size_t universe =
        std::max(Partition::parse(texts[0]).universe(), Partition::parse(texts[1]).universe());
    return {Partition::parse(texts[0], universe), Partition::parse(texts[1], universe)};
  }

  int execute(std::ostream& out) const {
    if (!xi.empty()) {
      const auto [finer, coarse] = parse_pair(xi);
      for (const auto& p : xi_set(finer, coarse)) out << p.to_string() << "\n";
    } else if (!coarser.empty()) {
      const auto [finer, coarse] = parse_pair(coarser);
      if (!is_coarser(finer, coarse)) {
        out << "false\n";
      } else {
        std::string via;
        if (coarser_a(finer, coarse)) via += "a";
        if (coarser_b(finer, coarse)) via += via.empty() ? "b" : ",b";
        if (coarser_c(finer, coarse)) via += via.empty() ? "c" : ",c";
        out << "true (via " << (via.empty() ? "a combination" : via) << ")\n";
      }
    } else {
      if (!n) throw UsageError("give one of --n/--k, --xi or --coarser");
      for (const auto& p : enumerate_partitions(n, k)) out << p.to_string() << "\n";
    }
    return kOk;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement measures from unified entropies"};
  app.require_subcommand(1);

  MeasureCommand measure;
  WernerScanCommand werner;
  VerifyCommand verify;
  PartitionsCommand partitions;
  auto* measure_app = app.add_subcommand("measure", "Evaluate a measure on a state file");
  auto* werner_app = app.add_subcommand("werner-scan", "Closed-form measures along the Werner family (CSV)");
  auto* verify_app = app.add_subcommand("verify", "Run a property suite on a seeded corpus");
  auto* partitions_app = app.add_subcommand("partitions", "Enumerate partitions, test coarsening, list residual sets");
  measure.attach(*measure_app);
  werner.attach(*werner_app);
  verify.attach(*verify_app);
  partitions.attach(*partitions_app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (measure_app->parsed()) return measure.execute(out);
    if (werner_app->parsed()) return werner.execute(out);
    if (verify_app->parsed()) return verify.execute(out);
    return partitions.execute(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const unient::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace unient::cli

// kleincodes: footprints, bounds and code tables for affine variety codes.
//
// Exit status: 0 success, 1 verification failure, 2 usage or configuration
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klein/casebound.hpp"
#include "klein/oracle.hpp"
#include "klein/report.hpp"
#include "klein/setup.hpp"
#include "klein/traces.hpp"
#include "klein/verify.hpp"

namespace {

using namespace klein;

constexpr const char* kConfigEnv = "KLEIN_CONFIG";

struct RunConfig {
  std::uint32_t modulus = 0b1011;
  std::string order = "weighted";
  std::vector<std::uint32_t> weights{2, 3};
  std::string tiebreak = "Y";
  std::vector<std::string> generators{"Y^3 + X^3*Y + X"};
  std::uint64_t seed = 42;
  std::size_t exhaustive_k = 8;
  std::size_t gray_coefficients = 10;
  std::uint64_t samples = 100000;
  std::string format = "text";
  std::string traces = "traces";
};

// Usage and configuration problems.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void load_config(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
    if (j.contains("modulus")) c.modulus = j.at("modulus").get<std::uint32_t>();
    if (j.contains("order")) {
      const auto& o = j.at("order");
      if (o.contains("kind")) c.order = o.at("kind").get<std::string>();
      if (o.contains("weights")) c.weights = o.at("weights").get<std::vector<std::uint32_t>>();
      if (o.contains("tiebreak")) c.tiebreak = o.at("tiebreak").get<std::string>();
    }
    if (j.contains("generators")) c.generators = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("limits")) {
      const auto& l = j.at("limits");
      if (l.contains("exhaustive_k")) c.exhaustive_k = l.at("exhaustive_k").get<std::size_t>();
      if (l.contains("gray_coefficients")) c.gray_coefficients = l.at("gray_coefficients").get<std::size_t>();
      if (l.contains("samples")) c.samples = l.at("samples").get<std::uint64_t>();
    }
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("traces")) c.traces = j.at("traces").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
}

struct Session {
  std::unique_ptr<gf::Field> field;
  std::unique_ptr<AffineSetup> owned;
  const AffineSetup* setup = nullptr;
  bool standard = false;  // the Klein quartic over GF(8) with the usual order
};

Session make_session(const RunConfig& c) {
  Session s;
  unsigned m = 0;
  for (std::uint32_t b = c.modulus; b > 1; b >>= 1) ++m;
  s.field = std::make_unique<gf::Field>(m, c.modulus);
  const std::size_t arity = c.weights.size();
  std::size_t tiebreak = arity;
  for (std::size_t i = 0; i < arity; ++i) {
    if (poly::variable_name(arity, i) == c.tiebreak || std::to_string(i) == c.tiebreak) tiebreak = i;
  }
  if (tiebreak == arity) throw UsageError("unknown tiebreak variable '" + c.tiebreak + "'");
  poly::MonomialOrder order = poly::MonomialOrder::lex(arity);
  if (c.order == "weighted") {
    order = poly::MonomialOrder::weighted(c.weights, tiebreak);
  } else if (c.order != "lex") {
    throw UsageError("unknown order kind '" + c.order + "' (weighted, lex)");
  }
  const AffineSetup& klein = AffineSetup::klein();
  if (c.modulus == klein.field().modulus() && c.order == "weighted" && c.weights == std::vector<std::uint32_t>{2, 3} &&
      tiebreak == 1 && c.generators.size() == 1 && klein.parse(c.generators[0]) == klein.ideal_generators()[0]) {
    s.setup = &klein;
    s.standard = true;
    return s;
  }
  s.owned = AffineSetup::make(*s.field, order, c.generators);
  s.setup = s.owned.get();
  return s;
}

bool is_verification_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidStep:
    case ErrorCode::UnjustifiedClaim:
    case ErrorCode::VacuousEverywhere:
    case ErrorCode::UnsatisfiableLeaf:
    case ErrorCode::UncertifiedLeadingCoefficient:
    case ErrorCode::RankDeficient:
      return true;
    default:
      return false;
  }
}

poly::Monomial parse_lead(const AffineSetup& setup, const std::string& text) {
  const poly::Monomial m = poly::parse_monomial(text, setup.arity());
  if (!setup.footprint().contains(m)) throw UsageError("--lm " + text + " is not a footprint monomial");
  return m;
}

// Bounds from the trace directory, or divisibility alone if it is missing.
std::vector<casebound::VerifiedClass> trace_classes(const AffineSetup& setup, const std::string& dir, unsigned jobs,
                                                    bool required) {
  std::error_code ec;
  if (!required && !std::filesystem::is_directory(dir, ec)) return {};
  return casebound::verify_traces(setup, casebound::load_trace_dir(dir, setup), jobs);
}

std::vector<casebound::BoundReport> reports_of(const std::vector<casebound::VerifiedClass>& classes) {
  std::vector<casebound::BoundReport> out;
  for (const auto& c : classes) out.push_back(c.report);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Footprints, weight bounds and code tables for affine variety codes"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string config_path;
  std::string format;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t exhaustive_k = 0;
  std::size_t gray_limit = 0;
  std::uint64_t samples = 0;
  std::string traces_dir;

  auto* o_config = app.add_option("--config", config_path, std::string("JSON run configuration (or $") + kConfigEnv + ")");
  auto* o_format = app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  auto* o_seed = app.add_option("--seed", seed, "seed of the SplitMix64 generator");
  app.add_option("--jobs", jobs, "worker threads (results do not depend on it)")->check(CLI::Range(1u, 256u));
  auto* o_exk = app.add_option("--exhaustive-k", exhaustive_k, "largest dimension for exhaustive distance scans");
  auto* o_gray = app.add_option("--gray-limit", gray_limit, "largest number of coefficients for gray coset scans");
  auto* o_samples = app.add_option("--samples", samples, "sample count for sampled scans");
  auto* o_traces = app.add_option("--traces", traces_dir, "directory of *.trace files");

  auto* c_footprint = app.add_subcommand("footprint", "Reduced Groebner basis and footprint with weights");
  auto* c_variety = app.add_subcommand("variety", "Points of the variety");

  auto* c_bound = app.add_subcommand("bound", "Per-class weight bounds from traces or from the auto-search");
  bool use_auto = false;
  std::string bound_lm;
  std::size_t depth = 3;
  std::size_t nodes = 20000;
  c_bound->add_flag("--auto", use_auto, "search instead of replaying traces");
  c_bound->add_option("--lm", bound_lm, "only this class");
  c_bound->add_option("--depth", depth, "auto-search depth");
  c_bound->add_option("--nodes", nodes, "auto-search node budget");

  auto* c_table = app.add_subcommand("table", "Code parameters obtained by thresholding the bounds");
  bool measure = false;
  c_table->add_flag("--measure", measure, "also measure minimum distances where k <= --exhaustive-k");

  auto* c_oracle = app.add_subcommand("oracle", "Minimum weight of a class by brute force");
  std::string oracle_lm;
  std::string mode = "exhaustive";
  c_oracle->add_option("--lm", oracle_lm, "leading monomial of the class")->required();
  c_oracle->add_option("--mode", mode, "exhaustive, gray or sample")
      ->check(CLI::IsMember({"exhaustive", "gray", "sample"}));

  auto* c_trace = app.add_subcommand("trace-verify", "Replay and check one trace file");
  std::string trace_file;
  bool verbose = false;
  c_trace->add_option("file", trace_file, "trace file")->required();
  c_trace->add_flag("--verbose", verbose, "print the working polynomial after every step");

  auto* c_all = app.add_subcommand("verify-all", "Run every invariant check");
  verify::Options vopt;
  c_all->add_option("--weight-samples", vopt.weight_samples, "random F for the weight identity");
  c_all->add_option("--class-samples", vopt.class_samples, "samples per class for the soundness check");
  c_all->add_option("--leaf-samples", vopt.leaf_samples, "instances per trace leaf");
  c_all->add_option("--coset-params", vopt.coset_params, "largest class scanned exhaustively");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (o_config->count() == 0) {
    if (const char* env = std::getenv(kConfigEnv); env && *env) config_path = env;
  }
  if (!config_path.empty()) load_config(cfg, config_path);
  if (o_format->count()) cfg.format = format;
  if (o_seed->count()) cfg.seed = seed;
  if (o_exk->count()) cfg.exhaustive_k = exhaustive_k;
  if (o_gray->count()) cfg.gray_coefficients = gray_limit;
  if (o_samples->count()) cfg.samples = samples;
  if (o_traces->count()) cfg.traces = traces_dir;

  const report::Format fmt = report::parse_format(cfg.format);
  Session session = make_session(cfg);
  const AffineSetup& setup = *session.setup;

  if (c_footprint->parsed()) {
    std::cout << report::footprint(setup, fmt);
    return 0;
  }
  if (c_variety->parsed()) {
    std::cout << report::variety(setup, fmt);
    return 0;
  }
  if (c_bound->parsed()) {
    std::vector<casebound::BoundReport> reports;
    std::optional<poly::Monomial> only;
    if (!bound_lm.empty()) only = parse_lead(setup, bound_lm);
    if (use_auto) {
      casebound::SearchBudget budget;
      budget.max_depth = depth;
      budget.max_nodes = nodes;
      for (const auto& m : setup.footprint().monomials) {
        if (only && !(m == *only)) continue;
        casebound::CaseContext ctx(setup, m);
        reports.push_back(casebound::auto_search(ctx, budget));
      }
    } else {
      for (auto& r : reports_of(trace_classes(setup, cfg.traces, jobs, true))) {
        if (!only || r.lead == *only) reports.push_back(std::move(r));
      }
    }
    if (only && reports.size() == 1) {
      std::cout << report::bound(reports.front(), fmt);
    } else {
      std::cout << report::bounds(setup, reports, casebound::figure2_map(setup, reports), fmt);
    }
    return 0;
  }
  if (c_table->parsed()) {
    const auto delta = casebound::figure2_map(setup, reports_of(trace_classes(setup, cfg.traces, jobs, true)));
    auto rows = codes::construct_table(delta, setup.variety());
    bool ok = true;
    if (measure) {
      for (auto& r : rows) {
        if (r.k > cfg.exhaustive_k) continue;
        const auto code = codes::build_code(codes::threshold_basis(delta, r.s), setup.variety(), setup.ring());
        const auto res = oracle::min_distance(code, oracle::Exhaustive{cfg.exhaustive_k}, jobs);
        r.measured = res.min_weight;
        r.exact = res.exact;
        ok = ok && res.min_weight >= r.d;
      }
    }
    std::cout << report::table(rows, setup.field().size(), fmt);
    return ok ? 0 : 1;
  }
  if (c_oracle->parsed()) {
    const poly::Monomial lead = parse_lead(setup, oracle_lm);
    const auto delta = casebound::figure2_map(setup, reports_of(trace_classes(setup, cfg.traces, jobs, false)));
    const auto below = oracle::monomials_below(lead, setup.footprint());
    oracle::Strategy strategy = oracle::Exhaustive{cfg.gray_coefficients};
    if (mode == "gray") strategy = oracle::Gray{cfg.gray_coefficients};
    if (mode == "sample") strategy = oracle::Sample{cfg.seed, cfg.samples};
    report::ScanReport r{lead, mode,
                         oracle::coset_min_weight(lead, below, setup.variety(), setup.ring(), setup.footprint(),
                                                  strategy, jobs),
                         delta.at(lead)};
    std::cout << report::scan(r, fmt);
    return r.result.min_weight >= r.delta ? 0 : 1;
  }
  if (c_trace->parsed()) {
    const auto file = casebound::load_trace(trace_file, setup);
    casebound::CaseContext ctx(setup, file.lead);
    std::ostream* log = verbose ? (fmt == report::Format::text ? &std::cout : &std::cerr) : nullptr;
    const auto r = casebound::verify_trace(ctx, file.trace, log);
    std::cout << report::bound(r, fmt);
    return 0;
  }
  if (c_all->parsed()) {
    vopt.seed = cfg.seed;
    vopt.jobs = jobs;
    vopt.traces = cfg.traces;
    vopt.exhaustive_k = cfg.exhaustive_k;
    vopt.expected_values = session.standard;
    const auto checks = verify::run_all(setup, vopt);
    std::cout << report::checks(checks, fmt);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const report::Check& c) { return c.passed; });
    return ok ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const klein::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_verification_failure(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

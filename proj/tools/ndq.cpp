// Command-line front end: model emission, exact solving, certificate
// verification, heuristic construction, and known-value queries for the
// (n,d)-queens problem.
//
// Exit codes: 0 success/optimal, 1 failed verification, 2 limit hit,
// 3 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ndq/board.hpp"
#include "ndq/bounds.hpp"
#include "ndq/certificate.hpp"
#include "ndq/heuristics.hpp"
#include "ndq/model.hpp"
#include "ndq/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitLimit = 2;
constexpr int kExitInputError = 3;

fs::path output_dir() {
  if (const char* env = std::getenv("NDQ_OUT_DIR")) return fs::path(env);
  return fs::current_path();
}

fs::path resolve_output(const std::string& given, const std::string& fallback) {
  if (given.empty()) return output_dir() / fallback;
  fs::path p(given);
  if (p.is_relative() && std::getenv("NDQ_OUT_DIR")) return output_dir() / p;
  return p;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

ndq::KnownValues load_registry(const std::string& registry_path) {
  if (registry_path.empty()) return ndq::KnownValues::builtin();
  return ndq::KnownValues::load_file(registry_path);
}

ndq::VariantKind parse_family(const std::string& name) {
  if (name == "base") return ndq::VariantKind::Base;
  if (name == "cube") return ndq::VariantKind::Cube;
  if (name == "star") return ndq::VariantKind::Star;
  if (name == "cs") return ndq::VariantKind::CubeStar;
  if (name == "all") return ndq::VariantKind::All;
  throw CLI::ValidationError("--variant/--cuts", "unknown family '" + name + "'");
}

std::vector<ndq::Inequality> cut_family(const ndq::BoardSpec& spec,
                                        ndq::VariantKind kind,
                                        const std::vector<int>& hs,
                                        const ndq::KnownValues& known) {
  // reuse the model assembly, minus the mandatory line constraints
  ndq::Variant variant{kind, hs, std::nullopt, std::nullopt};
  ndq::IpModel m = ndq::build(spec, variant, known);
  std::vector<ndq::Inequality> cuts;
  for (ndq::Inequality& c : m.constraints)
    if (c.kind != ndq::IneqKind::Line) cuts.push_back(std::move(c));
  return cuts;
}

struct CommonFlags {
  int n = 1;
  int d = 1;
  std::string format = "text";
  std::string registry;
};

void add_board_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("-n", flags.n, "board size per dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("-d", flags.d, "number of dimensions")
      ->required()
      ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--registry", flags.registry,
                  "known-values file (default: built-in registry)");
}

int run_model(const CommonFlags& flags, const std::string& variant_name,
              const std::vector<int>& hs, std::optional<long long> k,
              const std::string& warmstart_path, bool dimacs,
              const std::string& out_path) {
  ndq::BoardSpec spec(flags.n, flags.d);
  ndq::KnownValues known = load_registry(flags.registry);

  ndq::Variant variant;
  if (variant_name == "inf") {
    if (!k) throw CLI::ValidationError("--variant", "inf requires --k");
    variant.kind = ndq::VariantKind::Base;
  } else {
    variant.kind = parse_family(variant_name);
  }
  variant.h_values = hs;
  if (k) variant.infeasibility_at = *k + 1;
  if (variant.kind == ndq::VariantKind::All && spec.d < 4)
    std::cerr << "warning: the all variant is meant for d >= 4\n";
  if (!warmstart_path.empty())
    variant.warmstart = ndq::read_certificate_file(warmstart_path);

  ndq::IpModel model = ndq::build(spec, variant, known);

  const std::string stem = "queens_n" + std::to_string(spec.n) + "_d" +
                           std::to_string(spec.d) + "_" + variant_name;
  fs::path lp_path = resolve_output(out_path, stem + ".lp");
  write_text_file(lp_path, ndq::emit_lp(model));

  json report;
  report["variables"] = model.variable_count();
  json counts;
  std::size_t total = 0;
  for (const auto& [kind, count] : ndq::model_stats(model)) {
    counts[kind] = count;
    total += count;
  }
  report["constraints"] = counts;
  report["total_constraints"] = total;
  report["files"] = json::array({lp_path.string()});

  if (model.warmstart) {
    fs::path ws_path = lp_path;
    ws_path.replace_extension(".mst");
    write_text_file(ws_path, ndq::emit_warmstart(model));
    report["files"].push_back(ws_path.string());
  }
  if (dimacs) {
    fs::path dimacs_path = lp_path;
    dimacs_path.replace_extension(".dimacs");
    write_text_file(dimacs_path, ndq::emit_dimacs(spec));
    report["files"].push_back(dimacs_path.string());
  }

  if (flags.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "variables: " << model.variable_count() << "\n";
    for (const auto& [kind, count] : ndq::model_stats(model))
      std::cout << kind << ": " << count << "\n";
    for (const auto& f : report["files"])
      std::cout << "wrote " << f.get<std::string>() << "\n";
  }
  return kExitOk;
}

int run_solve(const CommonFlags& flags, const std::string& cuts_name,
              const std::vector<int>& hs, double time_limit,
              std::uint64_t node_limit, std::uint64_t seed, int threads,
              std::optional<long long> target, bool progress,
              const std::string& cert_path, const std::string& report_path) {
  ndq::BoardSpec spec(flags.n, flags.d);
  ndq::KnownValues known = load_registry(flags.registry);
  std::vector<ndq::Inequality> cuts;
  if (cuts_name != "base") cuts = cut_family(spec, parse_family(cuts_name), hs, known);

  ndq::SolveLimits limits;
  limits.time_limit_seconds = time_limit;
  limits.node_limit = node_limit;
  limits.seed = seed;
  limits.target = target;
  (void)threads;  // reserved; the search runs serially and is
                  // value-deterministic regardless of this flag
  if (progress)
    limits.on_progress = [](const ndq::ProgressEvent& e) {
      std::cerr << "event=bound primal=" << e.primal << " dual=" << e.dual_bound
                << " nodes=" << e.nodes << "\n";
    };

  ndq::OptResult result = ndq::solve(spec, cuts, limits);

  json report;
  report["primal"] = result.primal;
  report["dual_bound"] = result.dual_bound;
  report["status"] = std::string(ndq::solve_status_name(result.status));
  report["nodes"] = result.nodes;
  report["seconds"] = result.seconds;

  fs::path cert_file = resolve_output(
      cert_path,
      "cert_n" + std::to_string(spec.n) + "_d" + std::to_string(spec.d) + ".json");
  ndq::write_certificate_file(result.best, cert_file);
  if (!report_path.empty())
    write_text_file(resolve_output(report_path, "report.json"), report.dump(2) + "\n");

  if (flags.format == "json") {
    report["certificate"] = cert_file.string();
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "status: " << ndq::solve_status_name(result.status) << "\n"
              << "primal: " << result.primal << "\n"
              << "dual_bound: " << result.dual_bound << "\n"
              << "nodes: " << result.nodes << "\n"
              << "seconds: " << result.seconds << "\n"
              << "wrote " << cert_file.string() << "\n";
  }
  switch (result.status) {
    case ndq::SolveStatus::Optimal:
    case ndq::SolveStatus::Infeasible:  // target decided
      return kExitOk;
    case ndq::SolveStatus::Feasible:
      return target ? kExitOk : kExitLimit;  // with a target, reaching it decides
    case ndq::SolveStatus::BoundOnly:
      return kExitLimit;
  }
  return kExitLimit;
}

int run_verify(const std::string& cert_path, std::optional<long long> expect,
               const std::string& format) {
  ndq::Placement p = ndq::read_certificate_file(cert_path);
  ndq::VerifyResult result = ndq::verify(p);

  json report;
  report["n"] = p.spec.n;
  report["d"] = p.spec.d;
  report["queens"] = p.size();
  report["ok"] = result.ok();
  json conflicts = json::array();
  for (const ndq::Conflict& c : result.conflicts)
    conflicts.push_back(
        {ndq::index_to_coord(p.spec, c.a), ndq::index_to_coord(p.spec, c.b)});
  report["conflicts"] = conflicts;
  bool size_ok = !expect || static_cast<long long>(p.size()) == *expect;
  if (expect) report["expected"] = *expect;

  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (result.ok()) {
    std::cout << "ok: " << p.size() << " mutually non-attacking queens on ("
              << p.spec.n << "," << p.spec.d << ")\n";
    if (!size_ok)
      std::cout << "size mismatch: expected " << *expect << ", certificate has "
                << p.size() << "\n";
  } else {
    auto print = [](const std::vector<int>& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
      return s + ")";
    };
    std::cout << result.conflicts.size() << " attacking pair(s):\n";
    for (const ndq::Conflict& c : result.conflicts)
      std::cout << "  " << print(ndq::index_to_coord(p.spec, c.a)) << " x "
                << print(ndq::index_to_coord(p.spec, c.b)) << "\n";
  }
  return (result.ok() && size_ok) ? kExitOk : kExitVerifyFailed;
}

int run_construct(const CommonFlags& flags, std::uint64_t budget, std::uint64_t seed,
                  int restarts, const std::string& cert_path) {
  ndq::BoardSpec spec(flags.n, flags.d);
  std::string method;
  std::optional<ndq::Placement> placement;
  if (auto scheme = ndq::search_scheme(flags.n, flags.d, budget)) {
    placement = ndq::modular_construct(*scheme);
    method = "modular";
  } else {
    placement = ndq::greedy_random(spec, seed, restarts);
    method = "greedy";
  }
  fs::path cert_file = resolve_output(
      cert_path,
      "cert_n" + std::to_string(spec.n) + "_d" + std::to_string(spec.d) + ".json");
  ndq::write_certificate_file(*placement, cert_file);

  if (flags.format == "json") {
    json report;
    report["method"] = method;
    report["queens"] = placement->size();
    report["certificate"] = cert_file.string();
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "method: " << method << "\n"
              << "queens: " << placement->size() << "\n"
              << "wrote " << cert_file.string() << "\n";
  }
  return kExitOk;
}

int run_bounds(const CommonFlags& flags) {
  ndq::BoardSpec spec(flags.n, flags.d);
  ndq::KnownValues known = load_registry(flags.registry);
  ndq::KnownValues::Entry entry = known.lookup(flags.n, flags.d);
  std::uint64_t upper = 1;
  for (int i = 0; i < flags.d - 1; ++i) upper *= static_cast<std::uint64_t>(flags.n);

  std::string status;
  switch (entry.status) {
    case ndq::KnownValues::Status::Exact: status = "exact"; break;
    case ndq::KnownValues::Status::LowerBound: status = "lower_bound"; break;
    case ndq::KnownValues::Status::Unknown: status = "unknown"; break;
  }
  if (flags.format == "json") {
    json report;
    report["n"] = flags.n;
    report["d"] = flags.d;
    report["status"] = status;
    if (entry.status != ndq::KnownValues::Status::Unknown) report["value"] = entry.value;
    report["trivial_upper"] = upper;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "(" << flags.n << "," << flags.d << "): " << status;
    if (entry.status != ndq::KnownValues::Status::Unknown)
      std::cout << " " << entry.value;
    std::cout << ", trivial upper bound " << upper << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(n,d)-queens models, exact solving, and certificates"};
  app.require_subcommand(1);

  CommonFlags model_flags, solve_flags, construct_flags, bounds_flags;

  // model
  auto* model_cmd =
      app.add_subcommand("model", "emit an LP model (plus DIMACS/warmstart files)");
  std::string variant_name = "base";
  std::vector<int> model_hs;
  std::optional<long long> model_k;
  std::string warmstart_path, model_out;
  bool dimacs = false;
  add_board_flags(model_cmd, model_flags);
  model_cmd
      ->add_option("--variant", variant_name, "base|cube|star|cs|all|inf (inf needs --k)")
      ->check(CLI::IsMember({"base", "cube", "star", "cs", "all", "inf"}));
  model_cmd->add_option("--h-list", model_hs, "clique spacings (default: all feasible)");
  model_cmd->add_option("--k", model_k,
                        "emit the feasibility model asserting |Q| = k+1");
  model_cmd->add_option("--warmstart", warmstart_path,
                        "certificate JSON to emit as a MIP start");
  model_cmd->add_flag("--dimacs", dimacs, "also write the attack graph as DIMACS");
  model_cmd->add_option("-o,--output", model_out, "LP output path");
  add_output_flags(model_cmd, model_flags);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "exact maximum non-attacking queens");
  std::string cuts_name = "base";
  std::vector<int> solve_hs;
  double time_limit = 600.0;
  std::uint64_t node_limit = 0, seed = 0;
  int threads = 1;
  std::optional<long long> target;
  bool progress = false;
  std::string cert_out, report_out;
  add_board_flags(solve_cmd, solve_flags);
  solve_cmd
      ->add_option("--cuts", cuts_name, "clique cuts for bounding: base|cube|star|cs|all")
      ->check(CLI::IsMember({"base", "cube", "star", "cs", "all"}));
  solve_cmd->add_option("--h-list", solve_hs, "clique spacings (default: all feasible)");
  solve_cmd->add_option("--time-limit", time_limit, "seconds (default 600)");
  solve_cmd->add_option("--node-limit", node_limit, "0 = unlimited");
  solve_cmd->add_option("--seed", seed, "greedy-incumbent seed");
  solve_cmd->add_option("--threads", threads, "reserved; results do not depend on it")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--target", target, "stop once target is found or refuted");
  solve_cmd->add_flag("--progress", progress, "print event=bound lines to stderr");
  solve_cmd->add_option("-o,--output", cert_out, "certificate JSON path");
  solve_cmd->add_option("--report", report_out, "JSON report path");
  add_output_flags(solve_cmd, solve_flags);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate for attacks");
  std::string verify_cert;
  std::optional<long long> expect;
  std::string verify_format = "text";
  verify_cmd->add_option("--cert", verify_cert, "certificate JSON path")->required();
  verify_cmd->add_option("--expect", expect, "required queen count");
  verify_cmd->add_option("--format", verify_format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // construct
  auto* construct_cmd =
      app.add_subcommand("construct", "build a certificate heuristically");
  std::uint64_t budget = 1000000;
  std::uint64_t construct_seed = 0;
  int restarts = 100;
  std::string construct_out;
  add_board_flags(construct_cmd, construct_flags);
  construct_cmd->add_option("--budget", budget, "modular scheme scan budget");
  construct_cmd->add_option("--seed", construct_seed, "greedy fallback seed");
  construct_cmd->add_option("--restarts", restarts, "greedy fallback restarts")
      ->check(CLI::PositiveNumber);
  construct_cmd->add_option("-o,--output", construct_out, "certificate JSON path");
  add_output_flags(construct_cmd, construct_flags);

  // bounds
  auto* bounds_cmd =
      app.add_subcommand("bounds", "registry status and trivial upper bound");
  add_board_flags(bounds_cmd, bounds_flags);
  add_output_flags(bounds_cmd, bounds_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (model_cmd->parsed())
      return run_model(model_flags, variant_name, model_hs, model_k, warmstart_path,
                       dimacs, model_out);
    if (solve_cmd->parsed())
      return run_solve(solve_flags, cuts_name, solve_hs, time_limit, node_limit, seed,
                       threads, target, progress, cert_out, report_out);
    if (verify_cmd->parsed()) return run_verify(verify_cert, expect, verify_format);
    if (construct_cmd->parsed())
      return run_construct(construct_flags, budget, construct_seed, restarts,
                           construct_out);
    if (bounds_cmd->parsed()) return run_bounds(bounds_flags);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

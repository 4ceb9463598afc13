#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ndq/board.hpp"
#include "ndq/bounds.hpp"
#include "ndq/certificate.hpp"
#include "ndq/heuristics.hpp"
#include "ndq/model.hpp"
#include "ndq/solver.hpp"

namespace py = pybind11;
using namespace ndq;

namespace {

VariantKind family_from_name(const std::string& name) {
  if (name == "base") return VariantKind::Base;
  if (name == "cube") return VariantKind::Cube;
  if (name == "star") return VariantKind::Star;
  if (name == "cs") return VariantKind::CubeStar;
  if (name == "all") return VariantKind::All;
  throw std::invalid_argument("unknown family '" + name + "'");
}

Variant make_variant(const std::string& family, const std::vector<int>& hs,
                     std::optional<long long> infeasibility_at) {
  Variant v;
  v.kind = family_from_name(family);
  v.h_values = hs;
  v.infeasibility_at = infeasibility_at;
  return v;
}

std::vector<Inequality> make_cuts(const BoardSpec& spec, const std::string& family,
                                  const std::vector<int>& hs) {
  if (family == "base") return {};
  IpModel m = build(spec, make_variant(family, hs, std::nullopt),
                    KnownValues::builtin());
  std::vector<Inequality> cuts;
  for (Inequality& c : m.constraints)
    if (c.kind != IneqKind::Line) cuts.push_back(std::move(c));
  return cuts;
}

py::dict ineq_to_dict(const BoardSpec& spec, const Inequality& ineq) {
  py::dict d;
  d["kind"] = std::string(ineq_kind_name(ineq.kind));
  py::list squares;
  for (SquareIndex s : ineq.squares) squares.append(index_to_coord(spec, s));
  d["squares"] = squares;
  d["rhs"] = ineq.rhs;
  if (ineq.h) d["h"] = ineq.h;
  return d;
}

py::dict result_to_dict(const OptResult& r) {
  py::dict d;
  d["primal"] = r.primal;
  d["dual_bound"] = r.dual_bound;
  d["status"] = std::string(solve_status_name(r.status));
  d["nodes"] = r.nodes;
  d["seconds"] = r.seconds;
  d["queens"] = r.best.queen_coords();
  return d;
}

}  // namespace

PYBIND11_MODULE(ndqueens, m) {
  m.doc() = "Exact solving, model emission, and certificate tooling for the "
            "(n,d)-queens problem";

  py::class_<BoardSpec>(m, "BoardSpec")
      .def(py::init<int, int>(), py::arg("n"), py::arg("d"))
      .def_readonly("n", &BoardSpec::n)
      .def_readonly("d", &BoardSpec::d)
      .def("square_count", &BoardSpec::square_count)
      .def("__repr__", [](const BoardSpec& s) {
        return "BoardSpec(n=" + std::to_string(s.n) + ", d=" + std::to_string(s.d) + ")";
      });

  m.def(
      "directions",
      [](int d) {
        std::vector<std::vector<int>> out;
        for (const Direction& dir : directions(d))
          out.emplace_back(dir.eps.begin(), dir.eps.end());
        return out;
      },
      py::arg("d"), "Canonical attack directions for dimension d");

  m.def(
      "attacks",
      [](const BoardSpec& spec, const std::vector<int>& a, const std::vector<int>& b) {
        return attacks(spec, a, b);
      },
      py::arg("spec"), py::arg("a"), py::arg("b"),
      "Whether two squares (1-based coordinate tuples) attack each other");

  m.def(
      "attack_lines",
      [](const BoardSpec& spec) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const AttackLine& line : enumerate_lines(spec)) {
          std::vector<std::vector<int>> squares;
          for (SquareIndex s : line.squares) squares.push_back(index_to_coord(spec, s));
          out.push_back(std::move(squares));
        }
        return out;
      },
      py::arg("spec"), "All maximal attack lines of length >= 2");

  m.def(
      "attack_neighbors",
      [](const BoardSpec& spec, const std::vector<int>& q) {
        std::vector<std::vector<int>> out;
        for (SquareIndex s : attack_neighbors(spec, coord_to_index(spec, q)))
          out.push_back(index_to_coord(spec, s));
        return out;
      },
      py::arg("spec"), py::arg("square"), "All squares attacked by the given square");

  m.def(
      "known",
      [](int n, int d) {
        auto e = KnownValues::builtin().lookup(n, d);
        py::dict out;
        switch (e.status) {
          case KnownValues::Status::Exact: out["status"] = "exact"; break;
          case KnownValues::Status::LowerBound: out["status"] = "lower_bound"; break;
          case KnownValues::Status::Unknown: out["status"] = "unknown"; break;
        }
        if (e.status != KnownValues::Status::Unknown) out["value"] = e.value;
        return out;
      },
      py::arg("n"), py::arg("d"), "Registry status of Q_max(n, d)");

  m.def(
      "cube_cliques",
      [](const BoardSpec& spec, int h) {
        py::list out;
        for (const Inequality& ineq : cube_cliques(spec, h))
          out.append(ineq_to_dict(spec, ineq));
        return out;
      },
      py::arg("spec"), py::arg("h"));
  m.def(
      "star_cliques",
      [](const BoardSpec& spec, int h) {
        py::list out;
        for (const Inequality& ineq : star_cliques(spec, h))
          out.append(ineq_to_dict(spec, ineq));
        return out;
      },
      py::arg("spec"), py::arg("h"));

  m.def(
      "emit_lp",
      [](const BoardSpec& spec, const std::string& family, const std::vector<int>& hs,
         std::optional<long long> infeasibility_at) {
        return emit_lp(build(spec, make_variant(family, hs, infeasibility_at),
                             KnownValues::builtin()));
      },
      py::arg("spec"), py::arg("family") = "base", py::arg("h") = std::vector<int>{},
      py::arg("infeasibility_at") = std::nullopt,
      "LP text of the model for a constraint family");

  m.def(
      "emit_dimacs", [](const BoardSpec& spec) { return emit_dimacs(spec); },
      py::arg("spec"), "Attack graph in DIMACS format");

  m.def(
      "emit_warmstart",
      [](const BoardSpec& spec, const std::vector<std::vector<int>>& queens) {
        Variant variant;
        variant.warmstart = make_placement(spec, queens);
        return emit_warmstart(build(spec, variant, KnownValues::builtin()));
      },
      py::arg("spec"), py::arg("queens"), "MIP-start text for a verified certificate");

  m.def(
      "verify",
      [](const BoardSpec& spec, const std::vector<std::vector<int>>& queens) {
        VerifyResult r = verify(make_placement(spec, queens));
        std::vector<std::pair<std::vector<int>, std::vector<int>>> conflicts;
        for (const Conflict& c : r.conflicts)
          conflicts.emplace_back(index_to_coord(spec, c.a), index_to_coord(spec, c.b));
        return conflicts;
      },
      py::arg("spec"), py::arg("queens"),
      "All attacking pairs in a placement (empty list when valid)");

  m.def(
      "solve",
      [](const BoardSpec& spec, const std::string& cuts, double time_limit,
         std::uint64_t seed, std::optional<long long> target) {
        SolveLimits limits;
        limits.time_limit_seconds = time_limit;
        limits.seed = seed;
        limits.target = target;
        auto cut_list = make_cuts(spec, cuts, {});
        OptResult r = [&] {
          py::gil_scoped_release release;
          return solve(spec, cut_list, limits);
        }();
        return result_to_dict(r);
      },
      py::arg("spec"), py::arg("cuts") = "base", py::arg("time_limit") = 600.0,
      py::arg("seed") = 0, py::arg("target") = std::nullopt,
      "Exact maximum non-attacking queen count via branch and bound");

  m.def(
      "prove_infeasible",
      [](const BoardSpec& spec, long long k_plus_1, const std::string& cuts,
         double time_limit) {
        SolveLimits limits;
        limits.time_limit_seconds = time_limit;
        InfeasibilityResult r =
            prove_infeasible(spec, k_plus_1, make_cuts(spec, cuts, {}), limits);
        py::dict out;
        switch (r.verdict) {
          case InfeasibilityVerdict::Infeasible: out["verdict"] = "infeasible"; break;
          case InfeasibilityVerdict::Feasible: out["verdict"] = "feasible"; break;
          case InfeasibilityVerdict::Unknown: out["verdict"] = "unknown"; break;
        }
        if (r.witness) out["witness"] = r.witness->queen_coords();
        out["nodes"] = r.nodes;
        return out;
      },
      py::arg("spec"), py::arg("k_plus_1"), py::arg("cuts") = "base",
      py::arg("time_limit") = 600.0,
      "Decide whether k+1 mutually non-attacking queens fit");

  m.def(
      "aggregation_presolve",
      [](const BoardSpec& spec, long long k_plus_1) {
        return aggregation_presolve(spec, k_plus_1) == PresolveVerdict::Refuted;
      },
      py::arg("spec"), py::arg("k_plus_1"),
      "True when k+1 already exceeds the n^(d-1) line-partition capacity");

  m.def(
      "greedy_initial",
      [](const BoardSpec& spec, std::uint64_t seed) {
        return greedy_initial(spec, seed).queen_coords();
      },
      py::arg("spec"), py::arg("seed") = 0);

  m.def(
      "greedy_random",
      [](const BoardSpec& spec, std::uint64_t seed, int restarts) {
        return greedy_random(spec, seed, restarts).queen_coords();
      },
      py::arg("spec"), py::arg("seed") = 0, py::arg("restarts") = 100);

  m.def(
      "search_scheme",
      [](int n, int d, std::uint64_t budget) -> py::object {
        auto scheme = search_scheme(n, d, budget);
        if (!scheme) return py::none();
        py::dict out;
        out["coeffs"] = scheme->coeffs;
        out["offset"] = scheme->offset;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("budget") = 1000000,
      "First modular scheme (lexicographic scan) whose placement verifies");

  m.def(
      "modular_construct",
      [](int n, int d, const std::vector<int>& coeffs, int offset) {
        return modular_construct(ModularScheme{n, d, coeffs, offset}).queen_coords();
      },
      py::arg("n"), py::arg("d"), py::arg("coeffs"), py::arg("offset") = 0,
      "Placement defined by a modular scheme (validity not guaranteed)");

  m.def(
      "read_certificate",
      [](const std::string& text) {
        Placement p = read_certificate(text);
        py::dict out;
        out["n"] = p.spec.n;
        out["d"] = p.spec.d;
        out["queens"] = p.queen_coords();
        return out;
      },
      py::arg("text"));
  m.def(
      "write_certificate",
      [](const BoardSpec& spec, const std::vector<std::vector<int>>& queens) {
        return write_certificate(make_placement(spec, queens));
      },
      py::arg("spec"), py::arg("queens"));
}

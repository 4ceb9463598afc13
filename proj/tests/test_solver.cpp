#include <doctest.h>

#include "ndq/bounds.hpp"
#include "ndq/solver.hpp"
#include "oracles.hpp"

using namespace ndq;

namespace {

std::vector<Inequality> clique_family(const BoardSpec& spec, bool cubes, bool stars) {
  std::vector<Inequality> cuts;
  for (int h = 1; h <= spec.n - 1; ++h) {
    if (cubes)
      for (Inequality& ineq : cube_cliques(spec, h)) cuts.push_back(std::move(ineq));
    if (stars)
      for (Inequality& ineq : star_cliques(spec, h)) cuts.push_back(std::move(ineq));
  }
  return cuts;
}

}  // namespace

TEST_CASE("verify examples") {
  // classic 5-queens solution
  Placement five = make_placement(BoardSpec(5, 2),
                                  {{1, 1}, {2, 3}, {3, 5}, {4, 2}, {5, 4}});
  CHECK(verify(five).ok());

  Placement diag = make_placement(BoardSpec(3, 2), {{1, 1}, {2, 2}});
  VerifyResult r = verify(diag);
  REQUIRE(r.conflicts.size() == 1);
  CHECK(r.conflicts[0] == Conflict{0, 4});

  CHECK(verify(Placement{BoardSpec(3, 2), {}}).ok());

  CHECK_THROWS_AS(make_placement(BoardSpec(3, 2), {{4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_placement(BoardSpec(3, 2), {{1, 1}, {1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("verify reports all conflicts deterministically") {
  Placement p = make_placement(BoardSpec(3, 2), {{1, 1}, {2, 2}, {3, 3}});
  VerifyResult r = verify(p);
  REQUIRE(r.conflicts.size() == 3);
  CHECK(r.conflicts[0] == Conflict{0, 4});
  CHECK(r.conflicts[1] == Conflict{0, 8});
  CHECK(r.conflicts[2] == Conflict{4, 8});
}

TEST_CASE("solve reaches the known optima") {
  auto optimum = [](int n, int d) {
    OptResult r = solve(BoardSpec(n, d), {}, SolveLimits{});
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(verify(r.best).ok());
    CHECK(r.primal == r.dual_bound);
    CHECK(static_cast<long long>(r.best.size()) == r.primal);
    return r.primal;
  };
  CHECK(optimum(1, 1) == 1);
  CHECK(optimum(4, 3) == 7);
  CHECK(optimum(3, 4) == 6);
  for (int d = 1; d <= 5; ++d) CHECK(optimum(2, d) == 1);
}

TEST_CASE("solve equals the exhaustive oracle on small boards") {
  for (auto [n, d] : {std::pair{1, 1}, {5, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 2},
                      {6, 2}, {2, 3}, {3, 3}, {2, 4}, {2, 5}}) {
    BoardSpec spec(n, d);
    oracle::MisExhaustive mis(spec);
    OptResult r = solve(spec, {}, SolveLimits{});
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.primal == mis.optimum());
  }
}

TEST_CASE("cuts never change the optimum") {
  for (auto [n, d] : {std::pair{4, 2}, {3, 3}, {4, 3}}) {
    BoardSpec spec(n, d);
    long long base = solve(spec, {}, SolveLimits{}).primal;
    CHECK(solve(spec, clique_family(spec, true, false), SolveLimits{}).primal == base);
    CHECK(solve(spec, clique_family(spec, false, true), SolveLimits{}).primal == base);
    CHECK(solve(spec, clique_family(spec, true, true), SolveLimits{}).primal == base);
  }
}

TEST_CASE("solver rejects malformed cuts") {
  BoardSpec spec(3, 2);
  Inequality off_board{IneqKind::CubeClique, {0, 99}, 1};
  CHECK_THROWS_AS(solve(spec, {off_board}, SolveLimits{}), std::invalid_argument);
  Inequality not_clique{IneqKind::StarClique, {0, 1, 5}, 1};  // (1,1),(2,1),(3,2)
  CHECK_THROWS_AS(solve(spec, {not_clique}, SolveLimits{}), std::invalid_argument);
  Inequality unsorted{IneqKind::Line, {4, 0}, 1};
  CHECK_THROWS_AS(solve(spec, {unsorted}, SolveLimits{}), std::invalid_argument);
}

TEST_CASE("infeasibility proofs") {
  CHECK(prove_infeasible(BoardSpec(5, 3), 14, {}, SolveLimits{}).verdict ==
        InfeasibilityVerdict::Infeasible);
  CHECK(prove_infeasible(BoardSpec(2, 2), 2, {}, SolveLimits{}).verdict ==
        InfeasibilityVerdict::Infeasible);

  InfeasibilityResult f = prove_infeasible(BoardSpec(4, 4), 16, {}, SolveLimits{});
  CHECK(f.verdict == InfeasibilityVerdict::Feasible);
  REQUIRE(f.witness.has_value());
  CHECK(f.witness->size() == 16);
  CHECK(verify(*f.witness).ok());

  CHECK_THROWS_AS(prove_infeasible(BoardSpec(3, 2), 0, {}, SolveLimits{}),
                  std::invalid_argument);
}

TEST_CASE("aggregation presolve") {
  CHECK(aggregation_presolve(BoardSpec(11, 3), 122) == PresolveVerdict::Refuted);
  CHECK(aggregation_presolve(BoardSpec(13, 3), 170) == PresolveVerdict::Refuted);
  CHECK(aggregation_presolve(BoardSpec(5, 3), 14) == PresolveVerdict::Inconclusive);
  // no graph is built; boards far beyond the solver cap work fine
  CHECK(aggregation_presolve(BoardSpec(1000, 3), 1000001) == PresolveVerdict::Refuted);
  CHECK(aggregation_presolve(BoardSpec(1000, 3), 1000000) ==
        PresolveVerdict::Inconclusive);
}

TEST_CASE("greedy initial placements") {
  CHECK(greedy_initial(BoardSpec(1, 1), 0).size() == 1);
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    CHECK(greedy_initial(BoardSpec(2, 2), seed).size() == 1);

  Placement p = greedy_initial(BoardSpec(5, 3), 0);
  CHECK(verify(p).ok());
  CHECK(p.size() == 10);  // frozen regression value for seed 0

  for (auto [n, d] : {std::pair{4, 2}, {3, 3}})
    for (std::uint64_t seed = 0; seed < 4; ++seed)
      CHECK(verify(greedy_initial(BoardSpec(n, d), seed)).ok());
}

TEST_CASE("determinism and seed independence of the optimum") {
  SolveLimits limits;
  limits.seed = 7;
  OptResult a = solve(BoardSpec(4, 3), {}, limits);
  OptResult b = solve(BoardSpec(4, 3), {}, limits);
  CHECK(a.nodes == b.nodes);
  CHECK(a.primal == b.primal);
  CHECK(a.best.queens == b.best.queens);

  limits.seed = 12345;
  OptResult c = solve(BoardSpec(4, 3), {}, limits);
  CHECK(c.primal == a.primal);
}

TEST_CASE("optimum is monotone in board size and dimension") {
  std::map<std::pair<int, int>, long long> opt;
  for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}, {4, 3}})
    opt[{n, d}] = solve(BoardSpec(n, d), {}, SolveLimits{}).primal;
  for (auto [key, value] : opt) {
    auto [n, d] = key;
    if (opt.count({n + 1, d})) CHECK(opt[{n + 1, d}] >= value);
    if (opt.count({n, d + 1})) CHECK(opt[{n, d + 1}] >= value);
  }
}

TEST_CASE("limits produce limit statuses") {
  SolveLimits limits;
  limits.node_limit = 1;
  OptResult r = solve(BoardSpec(5, 3), {}, limits);
  CHECK(r.status == SolveStatus::Feasible);
  CHECK(r.primal >= 1);
  CHECK(r.dual_bound >= r.primal);

  limits.target = 14;
  OptResult t = solve(BoardSpec(5, 3), {}, limits);
  CHECK(t.status == SolveStatus::BoundOnly);
}

TEST_CASE("target mode decides both ways") {
  SolveLimits limits;
  limits.target = 3;
  OptResult no = solve(BoardSpec(3, 2), {}, limits);  // optimum is 2
  CHECK(no.status == SolveStatus::Infeasible);
  CHECK(no.dual_bound <= 2);

  limits.target = 2;
  OptResult yes = solve(BoardSpec(3, 2), {}, limits);
  CHECK(yes.status == SolveStatus::Feasible);
  CHECK(yes.primal >= 2);
}

TEST_CASE("progress callback fires") {
  SolveLimits limits;
  int events = 0;
  limits.on_progress = [&](const ProgressEvent& e) {
    ++events;
    CHECK(e.dual_bound >= e.primal);
  };
  solve(BoardSpec(4, 3), {}, limits);
  CHECK(events > 0);
}

TEST_CASE("solver refuses oversized boards") {
  CHECK_THROWS_AS(solve(BoardSpec(17, 4), {}, SolveLimits{}), std::invalid_argument);
}

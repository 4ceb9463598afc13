#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ndq/board.hpp"
#include "ndq/bounds.hpp"

namespace ndq {

/// A set of queens on a board. Construction enforces on-board, no
/// duplicates; whether the queens are mutually non-attacking is verify()'s
/// business, not the constructor's.
struct Placement {
  BoardSpec spec;
  std::vector<SquareIndex> queens;  // sorted, unique

  std::size_t size() const { return queens.size(); }
  std::vector<std::vector<int>> queen_coords() const;
};

/// Throws std::invalid_argument for off-board or duplicate queens, naming
/// the offender.
Placement make_placement(const BoardSpec& spec,
                         const std::vector<std::vector<int>>& queens);
Placement make_placement_from_indices(const BoardSpec& spec,
                                      std::vector<SquareIndex> queens);

struct Conflict {
  SquareIndex a;
  SquareIndex b;  // a < b

  bool operator==(const Conflict&) const = default;
};

struct VerifyResult {
  std::vector<Conflict> conflicts;  // sorted by (a, b)

  bool ok() const { return conflicts.empty(); }
};

/// All attacking pairs among the placement's queens, in (a, b) index order.
VerifyResult verify(const Placement& p);

enum class SolveStatus { Optimal, Feasible, Infeasible, BoundOnly };

std::string_view solve_status_name(SolveStatus s);

struct OptResult {
  Placement best;
  long long primal = 0;
  long long dual_bound = 0;
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct ProgressEvent {
  long long primal;
  long long dual_bound;
  std::uint64_t nodes;
};

struct SolveLimits {
  double time_limit_seconds = 600.0;  // <= 0 means unlimited
  std::uint64_t node_limit = 0;       // 0 means unlimited
  std::optional<long long> target;    // stop once primal >= target or target refuted
  std::uint64_t seed = 0;
  std::function<void(const ProgressEvent&)> on_progress;  // optional
};

/// Exact maximum-independent-set search over the attack graph.
///
/// Branch and bound: the incumbent comes from greedy_initial, the bound at
/// each node from a greedy clique cover seeded with attack lines and any
/// supplied rhs-1 clique cuts, and branching picks the undecided square
/// with the most undecided neighbors (lowest index on ties). Inequalities
/// with rhs > 1 are validated but do not enter the dual bound.
///
/// Status: Optimal (search exhausted, no target), Feasible (limit hit, or
/// target reached early), Infeasible (target set and search exhausted
/// without reaching it), BoundOnly (target set, limit hit, undecided).
OptResult solve(const BoardSpec& spec, const std::vector<Inequality>& cuts,
                const SolveLimits& limits);

enum class InfeasibilityVerdict { Infeasible, Feasible, Unknown };

struct InfeasibilityResult {
  InfeasibilityVerdict verdict = InfeasibilityVerdict::Unknown;
  std::optional<Placement> witness;  // set when verdict == Feasible
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Decides whether k_plus_1 mutually non-attacking queens fit on the board
/// (the certificate-maximality question for k = k_plus_1 - 1).
InfeasibilityResult prove_infeasible(const BoardSpec& spec, long long k_plus_1,
                                     const std::vector<Inequality>& cuts,
                                     const SolveLimits& limits);

enum class PresolveVerdict { Refuted, Inconclusive };

/// O(1) aggregation check: the axis-parallel lines of any one direction
/// partition the board into n^(d-1) cliques, so no placement can exceed
/// n^(d-1) queens. Refutes k_plus_1 > n^(d-1) without any search.
PresolveVerdict aggregation_presolve(const BoardSpec& spec, long long k_plus_1);

/// Randomized greedy placement: shuffle all squares by seed, add each
/// square that conflicts with nothing placed so far. Always verifies Ok.
Placement greedy_initial(const BoardSpec& spec, std::uint64_t seed);

}  // namespace ndq

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ndq/board.hpp"
#include "ndq/bounds.hpp"
#include "ndq/solver.hpp"

namespace ndq {

enum class Objective { MaximizeCount, FeasibilityOnly };

enum class VariantKind { Base, Cube, Star, CubeStar, All };

std::string_view variant_kind_name(VariantKind kind);

/// What to put into the model besides the mandatory line constraints.
/// h_values empty means every feasible spacing h in [1, n-1].
/// infeasibility_at = k+1 switches to the feasibility model that asserts
/// |Q| = k+1 (refuting it certifies a size-k placement as maximal).
struct Variant {
  VariantKind kind = VariantKind::Base;
  std::vector<int> h_values;
  std::optional<long long> infeasibility_at;
  std::optional<Placement> warmstart;
};

/// One binary variable per square; all constraints are <= except the
/// optional cardinality equality of the feasibility variant.
struct IpModel {
  BoardSpec spec;
  Objective objective = Objective::MaximizeCount;
  std::vector<Inequality> constraints;
  std::optional<long long> cardinality;  // sum x_s = cardinality
  std::optional<Placement> warmstart;

  std::uint64_t variable_count() const { return spec.square_count(); }
};

/// Per-kind constraint counts, for summaries and regression checks.
std::map<std::string, std::size_t> model_stats(const IpModel& model);

/// Assembles the model for a variant. Throws UnavailableBoundError when a
/// requested family needs a Q_max value the registry lacks.
IpModel build(const BoardSpec& spec, const Variant& variant, const KnownValues& known);

/// Variable name x_<c1>_..._<cd> from the square's 1-based coordinates.
std::string var_name(const BoardSpec& spec, SquareIndex s);

/// Deterministic CPLEX-style LP text: Maximize / Subject To / Binaries /
/// End. Constraints are named <kind>_<i> in emission order per kind.
std::string emit_lp(const IpModel& model);

/// Undirected attack graph as DIMACS text: "p edge V E" then one
/// "e i j" line per attacking pair, i < j, 1-based.
std::string emit_dimacs(const BoardSpec& spec);

/// MIP-start text for the model's warmstart: one "<var> 1" line per queen.
/// Throws std::invalid_argument if no warmstart is attached, it belongs to
/// a different board, or it has conflicts (naming the first pair).
std::string emit_warmstart(const IpModel& model);

}  // namespace ndq

#include "ndq/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ndq {

namespace {

// Dense adjacency needs nv^2 bits; this caps it at 32 MiB.
constexpr std::uint64_t kMaxSolveSquares = 16384;
// Greedy construction only needs one byte per square.
constexpr std::uint64_t kMaxGreedySquares = std::uint64_t{1} << 24;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Fisher-Yates with our own generator; std::shuffle sequences differ
// between standard libraries, which would break frozen regression values.
void deterministic_shuffle(std::vector<SquareIndex>& v, std::uint64_t seed) {
  std::uint64_t state = seed;
  for (std::size_t i = v.size(); i > 1; --i) {
    state = splitmix64(state);
    std::swap(v[i - 1], v[state % i]);
  }
}

using Mask = std::vector<std::uint64_t>;

struct AttackGraph {
  int nv = 0;
  int blocks = 0;
  std::vector<std::uint64_t> adj;

  const std::uint64_t* row(int v) const {
    return adj.data() + static_cast<std::size_t>(v) * blocks;
  }
  std::uint64_t* row(int v) {
    return adj.data() + static_cast<std::size_t>(v) * blocks;
  }
  bool edge(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }
};

AttackGraph build_graph(const BoardSpec& spec) {
  const std::uint64_t total = spec.square_count();
  if (total > kMaxSolveSquares)
    throw std::invalid_argument(
        "exact solve supports boards up to " + std::to_string(kMaxSolveSquares) +
        " squares; (" + std::to_string(spec.n) + "," + std::to_string(spec.d) +
        ") has " + std::to_string(total));
  AttackGraph g;
  g.nv = static_cast<int>(total);
  g.blocks = (g.nv + 63) / 64;
  g.adj.assign(static_cast<std::size_t>(g.nv) * g.blocks, 0);
  for (int v = 0; v < g.nv; ++v) {
    auto* r = g.row(v);
    for (SquareIndex u : attack_neighbors(spec, static_cast<SquareIndex>(v)))
      r[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
  return g;
}

int mask_popcount(const Mask& m) {
  int c = 0;
  for (std::uint64_t w : m) c += std::popcount(w);
  return c;
}

bool mask_empty(const Mask& m) {
  for (std::uint64_t w : m)
    if (w) return false;
  return true;
}

int mask_lowest(const Mask& m) {
  for (std::size_t b = 0; b < m.size(); ++b)
    if (m[b]) return static_cast<int>(b * 64 + std::countr_zero(m[b]));
  return -1;
}

void mask_set(Mask& m, int v) { m[v >> 6] |= std::uint64_t{1} << (v & 63); }
void mask_clear(Mask& m, int v) { m[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
bool mask_test(const Mask& m, int v) {
  return (m[v >> 6] >> (v & 63)) & 1;
}

// Extends the clique given by `mask` to a maximal one, always taking the
// lowest-index common neighbor next. Deterministic.
void grow_clique(const AttackGraph& g, Mask& mask) {
  Mask cand;
  bool first = true;
  for (int b = 0; b < g.blocks; ++b) {
    std::uint64_t w = mask[static_cast<std::size_t>(b)];
    while (w) {
      int v = b * 64 + std::countr_zero(w);
      w &= w - 1;
      if (first) {
        cand.assign(g.row(v), g.row(v) + g.blocks);
        first = false;
      } else {
        const auto* r = g.row(v);
        for (int i = 0; i < g.blocks; ++i) cand[static_cast<std::size_t>(i)] &= r[i];
      }
    }
  }
  if (first) return;  // empty mask
  while (!mask_empty(cand)) {
    int u = mask_lowest(cand);
    mask_set(mask, u);
    const auto* r = g.row(u);
    for (int i = 0; i < g.blocks; ++i) cand[static_cast<std::size_t>(i)] &= r[i];
  }
}

bool is_clique(const AttackGraph& g, const std::vector<SquareIndex>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.edge(static_cast<int>(verts[i]), static_cast<int>(verts[j])))
        return false;
  return true;
}

void validate_cut(const AttackGraph& g, const Inequality& cut) {
  if (cut.squares.empty())
    throw std::invalid_argument("cut has empty support");
  if (cut.rhs < 1) throw std::invalid_argument("cut has rhs < 1");
  SquareIndex prev = 0;
  bool first = true;
  for (SquareIndex s : cut.squares) {
    if (s >= static_cast<SquareIndex>(g.nv))
      throw std::invalid_argument("cut references square " + std::to_string(s) +
                                  " beyond the board");
    if (!first && s <= prev)
      throw std::invalid_argument("cut support must be sorted and duplicate-free");
    prev = s;
    first = false;
  }
  const bool clique_kind = cut.kind == IneqKind::Line ||
                           cut.kind == IneqKind::CubeClique ||
                           cut.kind == IneqKind::StarClique;
  if (clique_kind && (cut.rhs != 1 || !is_clique(g, cut.squares)))
    throw std::invalid_argument(std::string("cut of kind ") +
                                std::string(ineq_kind_name(cut.kind)) +
                                " is not a rhs-1 clique");
}

// Clique pool for the cover bound: every attack line and every supplied
// rhs-1 clique cut, each grown to a maximal clique, deduplicated, largest
// first.
std::vector<Mask> build_pool(const BoardSpec& spec, const AttackGraph& g,
                             const std::vector<Inequality>& cuts) {
  std::vector<Mask> pool;
  for (const AttackLine& line : enumerate_lines(spec)) {
    Mask m(static_cast<std::size_t>(g.blocks), 0);
    for (SquareIndex s : line.squares) mask_set(m, static_cast<int>(s));
    grow_clique(g, m);
    pool.push_back(std::move(m));
  }
  for (const Inequality& cut : cuts) {
    if (cut.rhs != 1) continue;
    if (!is_clique(g, cut.squares)) continue;  // audit-only constraint
    Mask m(static_cast<std::size_t>(g.blocks), 0);
    for (SquareIndex s : cut.squares) mask_set(m, static_cast<int>(s));
    grow_clique(g, m);
    pool.push_back(std::move(m));
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::stable_sort(pool.begin(), pool.end(), [](const Mask& a, const Mask& b) {
    int pa = mask_popcount(a), pb = mask_popcount(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  return pool;
}

class BranchAndBound {
 public:
  BranchAndBound(const AttackGraph& g, const std::vector<Mask>& pool,
                 const SolveLimits& limits, std::vector<int> incumbent)
      : g_(g),
        pool_(pool),
        limits_(limits),
        best_(std::move(incumbent)),
        target_(limits.target ? *limits.target : LLONG_MAX),
        has_target_(limits.target.has_value()),
        scratch_r_(static_cast<std::size_t>(g.blocks), 0),
        scratch_c_(static_cast<std::size_t>(g.blocks), 0),
        start_(std::chrono::steady_clock::now()) {
    // static insertion order: degree descending, index ascending on ties
    order_.resize(static_cast<std::size_t>(g.nv));
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> degree(static_cast<std::size_t>(g.nv));
    for (int v = 0; v < g.nv; ++v) {
      const auto* r = g.row(v);
      int deg = 0;
      for (int b = 0; b < g.blocks; ++b) deg += std::popcount(r[b]);
      degree[static_cast<std::size_t>(v)] = deg;
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
  }

  void run() {
    Mask root(static_cast<std::size_t>(g_.blocks), 0);
    for (int v = 0; v < g_.nv; ++v) mask_set(root, v);
    root_bound_ = cover_bound(root);
    report_progress();
    if (has_target_ && static_cast<long long>(best_.size()) >= target_) {
      target_reached_ = true;
      stopped_ = true;
      return;
    }
    levels_.assign(static_cast<std::size_t>(g_.nv) + 2,
                   Mask(static_cast<std::size_t>(g_.blocks), 0));
    levels_[0] = root;
    recurse(0);
  }

  const std::vector<int>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  int root_bound() const { return root_bound_; }
  bool completed() const { return !stopped_; }
  bool target_reached() const { return target_reached_; }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  long long prune_threshold() const {
    long long t = static_cast<long long>(best_.size());
    if (has_target_) t = std::max(t, target_ - 1);
    return t;
  }

  void check_limits() {
    if (limits_.node_limit && nodes_ >= limits_.node_limit) {
      stopped_ = true;
      return;
    }
    if (limits_.time_limit_seconds > 0 && seconds() > limits_.time_limit_seconds)
      stopped_ = true;
  }

  void report_progress() {
    if (!limits_.on_progress) return;
    limits_.on_progress(ProgressEvent{static_cast<long long>(best_.size()),
                                      static_cast<long long>(root_bound_), nodes_});
  }

  // Greedy clique cover of U: pool cliques first (their intersection with
  // U, when it still hits at least 3 undecided squares), then a sequential
  // insertion cover of the leftovers — each vertex joins the first open
  // clique it is fully adjacent to, in static degree order.
  int cover_bound(const Mask& u) {
    Mask& rest = scratch_r_;
    rest = u;
    int count = 0;
    int remaining = mask_popcount(u);
    // small subproblems: the pool scan costs more than it tightens
    if (remaining >= 32) {
      for (const Mask& c : pool_) {
        if (remaining < 3) break;
        Mask& hit = scratch_c_;
        int pc = 0;
        for (int b = 0; b < g_.blocks; ++b) {
          hit[static_cast<std::size_t>(b)] =
              c[static_cast<std::size_t>(b)] & rest[static_cast<std::size_t>(b)];
          pc += std::popcount(hit[static_cast<std::size_t>(b)]);
        }
        if (pc < 3) continue;
        ++count;
        remaining -= pc;
        for (int b = 0; b < g_.blocks; ++b)
          rest[static_cast<std::size_t>(b)] &= ~hit[static_cast<std::size_t>(b)];
      }
    }
    if (remaining > 0) {
      open_cliques_.clear();
      for (int v : order_) {
        if (!mask_test(rest, v)) continue;
        const auto* rv = g_.row(v);
        bool placed = false;
        for (Mask& k : open_cliques_) {
          bool fits = true;
          for (int b = 0; b < g_.blocks; ++b)
            if (k[static_cast<std::size_t>(b)] & ~rv[b]) {
              fits = false;
              break;
            }
          if (fits) {
            mask_set(k, v);
            placed = true;
            break;
          }
        }
        if (!placed) {
          open_cliques_.emplace_back(static_cast<std::size_t>(g_.blocks), 0);
          mask_set(open_cliques_.back(), v);
          ++count;
        }
        if (--remaining == 0) break;
      }
    }
    return count;
  }

  void improve_incumbent() {
    best_ = chosen_;
    std::sort(best_.begin(), best_.end());
    report_progress();
    if (has_target_ && static_cast<long long>(best_.size()) >= target_) {
      target_reached_ = true;
      stopped_ = true;
    }
  }

  // Apply safe reductions to u in place: an undecided square with no
  // undecided neighbor is always taken; one with exactly one undecided
  // neighbor is taken and the neighbor dropped. Returns the branch vertex
  // (max undecided degree, lowest index) or -1 when u runs empty.
  int reduce_and_pick(Mask& u) {
    for (;;) {
      int best_v = -1, best_deg = -1;
      int red_v = -1, red_deg = 0;
      for (int b = 0; b < g_.blocks && red_v < 0; ++b) {
        std::uint64_t w = u[static_cast<std::size_t>(b)];
        while (w) {
          int v = b * 64 + std::countr_zero(w);
          w &= w - 1;
          const auto* r = g_.row(v);
          int deg = 0;
          for (int i = 0; i < g_.blocks; ++i)
            deg += std::popcount(r[i] & u[static_cast<std::size_t>(i)]);
          if (deg <= 1) {
            red_v = v;
            red_deg = deg;
            break;
          }
          if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
          }
        }
      }
      if (red_v < 0) return best_v;
      chosen_.push_back(red_v);
      mask_clear(u, red_v);
      if (red_deg == 1) {
        const auto* r = g_.row(red_v);
        for (int b = 0; b < g_.blocks; ++b) u[static_cast<std::size_t>(b)] &= ~r[b];
      }
    }
  }

  void recurse(int depth) {
    ++nodes_;
    if ((nodes_ & 1023) == 0) {
      check_limits();
      if ((nodes_ & 65535) == 0) report_progress();
    }
    if (stopped_) return;
    Mask& u = levels_[static_cast<std::size_t>(depth)];
    const std::size_t chosen_mark = chosen_.size();
    const int v = reduce_and_pick(u);
    if (chosen_.size() > best_.size()) improve_incumbent();
    if (v >= 0 && !stopped_ &&
        static_cast<long long>(chosen_.size()) + cover_bound(u) > prune_threshold()) {
      Mask& child = levels_[static_cast<std::size_t>(depth) + 1];

      // include v
      const auto* rv = g_.row(v);
      for (int b = 0; b < g_.blocks; ++b)
        child[static_cast<std::size_t>(b)] = u[static_cast<std::size_t>(b)] & ~rv[b];
      mask_clear(child, v);
      chosen_.push_back(v);
      if (chosen_.size() > best_.size()) improve_incumbent();
      if (!stopped_) recurse(depth + 1);
      chosen_.pop_back();

      // exclude v
      if (!stopped_) {
        child = u;
        mask_clear(child, v);
        recurse(depth + 1);
      }
    }
    chosen_.resize(chosen_mark);
  }

  const AttackGraph& g_;
  const std::vector<Mask>& pool_;
  const SolveLimits& limits_;
  std::vector<int> best_;
  std::vector<int> chosen_;
  std::vector<Mask> levels_;
  long long target_;
  bool has_target_;
  std::vector<int> order_;
  std::vector<Mask> open_cliques_;
  Mask scratch_r_, scratch_c_;
  std::uint64_t nodes_ = 0;
  int root_bound_ = 0;
  bool stopped_ = false;
  bool target_reached_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<std::vector<int>> Placement::queen_coords() const {
  std::vector<std::vector<int>> out;
  out.reserve(queens.size());
  for (SquareIndex q : queens) out.push_back(index_to_coord(spec, q));
  return out;
}

Placement make_placement(const BoardSpec& spec,
                         const std::vector<std::vector<int>>& queens) {
  std::vector<SquareIndex> indices;
  indices.reserve(queens.size());
  for (const auto& coords : queens)
    indices.push_back(coord_to_index(spec, coords));  // throws if off-board
  return make_placement_from_indices(spec, std::move(indices));
}

Placement make_placement_from_indices(const BoardSpec& spec,
                                      std::vector<SquareIndex> queens) {
  const std::uint64_t total = spec.square_count();
  for (SquareIndex q : queens)
    if (q >= total)
      throw std::invalid_argument("queen index " + std::to_string(q) +
                                  " is off the board");
  std::sort(queens.begin(), queens.end());
  auto dup = std::adjacent_find(queens.begin(), queens.end());
  if (dup != queens.end()) {
    auto coords = index_to_coord(spec, *dup);
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i)
      s += (i ? "," : "(") + std::to_string(coords[i]);
    throw std::invalid_argument("duplicate queen at " + s + ")");
  }
  return Placement{spec, std::move(queens)};
}

VerifyResult verify(const Placement& p) {
  VerifyResult result;
  std::vector<std::vector<int>> coords = p.queen_coords();
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j)
      if (attacks(p.spec, coords[i], coords[j]))
        result.conflicts.push_back(Conflict{p.queens[i], p.queens[j]});
  return result;
}

std::string_view solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::BoundOnly: return "bound_only";
  }
  return "?";
}

Placement greedy_initial(const BoardSpec& spec, std::uint64_t seed) {
  const std::uint64_t total = spec.square_count();
  if (total > kMaxGreedySquares)
    throw std::invalid_argument("board too large for greedy construction");
  std::vector<SquareIndex> order(total);
  std::iota(order.begin(), order.end(), SquareIndex{0});
  deterministic_shuffle(order, seed);
  std::vector<std::uint8_t> attacked(total, 0);
  std::vector<SquareIndex> chosen;
  const auto dirs = directions(spec.d);
  std::vector<int> coords, walk;
  for (SquareIndex v : order) {
    if (attacked[v]) continue;
    chosen.push_back(v);
    attacked[v] = 1;
    coords = index_to_coord(spec, v);
    for (const Direction& dir : dirs) {
      for (int sign : {+1, -1}) {
        walk = coords;
        for (;;) {
          bool inside = true;
          for (int i = 0; i < spec.d; ++i) {
            walk[i] += sign * dir.eps[i];
            if (walk[i] < 1 || walk[i] > spec.n) inside = false;
          }
          if (!inside) break;
          attacked[coord_to_index(spec, walk)] = 1;
        }
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return Placement{spec, std::move(chosen)};
}

OptResult solve(const BoardSpec& spec, const std::vector<Inequality>& cuts,
                const SolveLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  AttackGraph g = build_graph(spec);
  for (const Inequality& cut : cuts) validate_cut(g, cut);
  const std::vector<Mask> pool = build_pool(spec, g, cuts);

  // Best of a batch of greedy starts, all derived from the one seed.
  std::vector<SquareIndex> incumbent;
  for (std::uint64_t i = 0; i < 256; ++i) {
    Placement p = greedy_initial(spec, limits.seed + i);
    if (p.queens.size() > incumbent.size()) incumbent = p.queens;
  }
  std::vector<int> incumbent_verts(incumbent.begin(), incumbent.end());

  BranchAndBound bnb(g, pool, limits, std::move(incumbent_verts));
  bnb.run();

  std::vector<SquareIndex> best_idx(bnb.best().begin(), bnb.best().end());
  std::sort(best_idx.begin(), best_idx.end());
  OptResult result{Placement{spec, std::move(best_idx)}};
  result.primal = static_cast<long long>(result.best.queens.size());
  result.nodes = bnb.nodes();
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const bool has_target = limits.target.has_value();
  if (bnb.target_reached()) {
    result.status = SolveStatus::Feasible;
    result.dual_bound = bnb.root_bound();
  } else if (bnb.completed()) {
    if (!has_target) {
      result.status = SolveStatus::Optimal;
      result.dual_bound = result.primal;
    } else {
      // exhausted the target-pruned tree: no placement of target size exists
      result.status = SolveStatus::Infeasible;
      result.dual_bound = std::min<long long>(bnb.root_bound(), *limits.target - 1);
    }
  } else {
    result.status = has_target ? SolveStatus::BoundOnly : SolveStatus::Feasible;
    result.dual_bound = bnb.root_bound();
  }
  return result;
}

InfeasibilityResult prove_infeasible(const BoardSpec& spec, long long k_plus_1,
                                     const std::vector<Inequality>& cuts,
                                     const SolveLimits& limits) {
  if (k_plus_1 < 1)
    throw std::invalid_argument("cardinality to refute must be >= 1");
  if (aggregation_presolve(spec, k_plus_1) == PresolveVerdict::Refuted)
    return InfeasibilityResult{InfeasibilityVerdict::Infeasible, std::nullopt, 0, 0.0};
  SolveLimits lim = limits;
  lim.target = k_plus_1;
  OptResult r = solve(spec, cuts, lim);
  InfeasibilityResult out;
  out.nodes = r.nodes;
  out.seconds = r.seconds;
  switch (r.status) {
    case SolveStatus::Feasible:
      out.verdict = InfeasibilityVerdict::Feasible;
      out.witness = r.best;
      break;
    case SolveStatus::Infeasible:
      out.verdict = InfeasibilityVerdict::Infeasible;
      break;
    default:
      out.verdict = InfeasibilityVerdict::Unknown;
      break;
  }
  return out;
}

PresolveVerdict aggregation_presolve(const BoardSpec& spec, long long k_plus_1) {
  // the n^(d-1) parallel lines of one axis partition the board; one queen each
  std::uint64_t capacity = 1;
  for (int i = 0; i < spec.d - 1; ++i)
    capacity *= static_cast<std::uint64_t>(spec.n);
  if (k_plus_1 > 0 && static_cast<std::uint64_t>(k_plus_1) > capacity)
    return PresolveVerdict::Refuted;
  return PresolveVerdict::Inconclusive;
}

}  // namespace ndq

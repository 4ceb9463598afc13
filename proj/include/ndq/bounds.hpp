#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ndq/board.hpp"

namespace ndq {

/// Requested bound needs a Q_max value the registry does not have.
class UnavailableBoundError : public std::runtime_error {
 public:
  UnavailableBoundError(int n, int d);
  int n;
  int d;
};

enum class IneqKind { Line, CubeClique, StarClique, Subsolution, Layer };

std::string_view ineq_kind_name(IneqKind kind);

/// A <=-constraint sum_{s in squares} x_s <= rhs over a set of squares.
/// Clique kinds (Line, CubeClique, StarClique) always carry rhs = 1 and a
/// pairwise-attacking support.
struct Inequality {
  IneqKind kind;
  std::vector<SquareIndex> squares;  // sorted, unique
  long long rhs = 1;

  // generator parameters
  int h = 0;                      // cube/star spacing
  int sub_m = 0;                  // subsolution edge length
  std::vector<int> fixed_axes;    // layer: 1-based axes held fixed
  std::vector<int> fixed_values;  // layer: the values they are held at
};

/// Registry of known maximum queen counts Q_max(n, d).
///
/// Exact table rows ship in data/known_values.txt (and as a compiled-in
/// copy); n <= 2 and d = 1 are Exact(1) structurally, since those boards
/// are single cliques.
class KnownValues {
 public:
  enum class Status { Exact, LowerBound, Unknown };

  struct Entry {
    Status status = Status::Unknown;
    long long value = 0;
  };

  static KnownValues builtin();
  static KnownValues parse(std::string_view text);
  static KnownValues load_file(const std::filesystem::path& path);

  Entry lookup(int n, int d) const;
  bool has_exact(int n, int d) const;

  /// Exact value, or throws UnavailableBoundError.
  long long exact(int n, int d) const;

  void set(int n, int d, Status status, long long value);

  std::size_t record_count() const { return table_.size(); }

 private:
  std::map<std::pair<int, int>, Entry> table_;
};

/// Hypercube clique inequalities of spacing h: for each anchor s with
/// s_i + h <= n, the 2^d corners {s + h*a : a in {0,1}^d} pairwise attack;
/// for even h the cube center s + (h/2)*(1,...,1) joins the clique.
/// Throws std::invalid_argument unless 1 <= h <= n-1.
std::vector<Inequality> cube_cliques(const BoardSpec& spec, int h);

/// Cross-polytope clique inequalities of spacing h: a center s with
/// s_i - h >= 1 and s_i + h <= n plus its 2d axis neighbors at distance h.
/// Empty when no center fits. Throws std::invalid_argument for h < 1.
std::vector<Inequality> star_cliques(const BoardSpec& spec, int h);

/// One inequality per contiguous axis-aligned m^d subcube, bounded by the
/// registry's exact Q_max(m, d). Throws UnavailableBoundError if that value
/// is not exact, std::invalid_argument unless 2 <= m < n.
std::vector<Inequality> subsolution_ineqs(const BoardSpec& spec, int m,
                                          const KnownValues& known);

/// One inequality per coordinate-fixed slice, bounded by Q_max(n, d-1);
/// with recursive = true, also slices of slices down to the deepest level
/// for which the registry still has an exact value.
/// Throws UnavailableBoundError if Q_max(n, d-1) itself is missing.
std::vector<Inequality> layer_ineqs(const BoardSpec& spec, const KnownValues& known,
                                    bool recursive);

}  // namespace ndq

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ndq {

/// Linear rank of a square in [0, n^d).
using SquareIndex = std::uint64_t;

/// A cubic board with n squares per dimension and d dimensions.
///
/// Coordinates are 1-based tuples (a_1, ..., a_d), a_i in [1, n]. The index
/// of a square is its mixed-radix rank sum_i (a_i - 1) * n^(i-1), so the
/// first coordinate varies fastest.
struct BoardSpec {
  int n;
  int d;

  /// Throws std::invalid_argument for n < 1, d < 1, or n^d beyond 2^62.
  BoardSpec(int n, int d);

  std::uint64_t square_count() const;

  bool in_bounds(std::span<const int> coords) const;

  bool operator==(const BoardSpec&) const = default;
};

/// A square, carried both as coordinates and as its index.
struct Square {
  std::vector<int> coords;
  SquareIndex index = 0;
};

/// An attack direction: eps in {-1,0,+1}^d, not all zero, canonicalized so
/// the first nonzero component is +1. There are (3^d - 1) / 2 of these.
struct Direction {
  std::vector<std::int8_t> eps;

  bool operator==(const Direction&) const = default;
};

/// A maximal run of co-linear squares along one direction. squares[k+1] is
/// squares[k] shifted by exactly the direction vector; squares.front() is
/// the traversal origin (its predecessor along the direction is off the
/// board). Lines of length 1 are never materialized.
struct AttackLine {
  Direction direction;
  std::vector<SquareIndex> squares;

  std::size_t length() const { return squares.size(); }
};

/// Mixed-radix rank of a 1-based coordinate tuple.
/// Throws std::invalid_argument on wrong arity or out-of-range coordinates.
SquareIndex coord_to_index(const BoardSpec& spec, std::span<const int> coords);

/// Inverse of coord_to_index.
std::vector<int> index_to_coord(const BoardSpec& spec, SquareIndex index);

Square square_at(const BoardSpec& spec, std::vector<int> coords);

/// All canonical directions for dimension d, in lexicographic order of eps
/// (component order -1 < 0 < +1). Size is (3^d - 1) / 2.
std::vector<Direction> directions(int d);

/// True iff the two (distinct, on-board) squares attack each other: the
/// nonzero components of a - b all share one absolute value. Equal squares
/// return false.
bool attacks(const BoardSpec& spec, std::span<const int> a, std::span<const int> b);

bool attacks(const BoardSpec& spec, SquareIndex a, SquareIndex b);

/// All maximal attack lines of length >= 2, ordered by direction (in
/// directions() order), then by origin square index. Every attacking pair
/// of squares lies in exactly one returned line.
std::vector<AttackLine> enumerate_lines(const BoardSpec& spec);

/// All squares attacked by q, sorted by index.
std::vector<SquareIndex> attack_neighbors(const BoardSpec& spec, SquareIndex q);

}  // namespace ndq

#include "ndq/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ndq {

namespace {

std::uint64_t checked_pow(int base, int exp) {
  std::uint64_t r = 1;
  const std::uint64_t limit = std::uint64_t{1} << 62;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / static_cast<std::uint64_t>(base))
      throw std::invalid_argument("board too large: " + std::to_string(base) +
                                  "^" + std::to_string(exp) + " exceeds 2^62");
    r *= static_cast<std::uint64_t>(base);
  }
  return r;
}

std::string coords_str(std::span<const int> coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

}  // namespace

BoardSpec::BoardSpec(int n_, int d_) : n(n_), d(d_) {
  if (n < 1 || d < 1)
    throw std::invalid_argument("board requires n >= 1 and d >= 1, got n=" +
                                std::to_string(n) + " d=" + std::to_string(d));
  checked_pow(n, d);
}

std::uint64_t BoardSpec::square_count() const { return checked_pow(n, d); }

bool BoardSpec::in_bounds(std::span<const int> coords) const {
  if (coords.size() != static_cast<std::size_t>(d)) return false;
  return std::all_of(coords.begin(), coords.end(),
                     [this](int c) { return c >= 1 && c <= n; });
}

SquareIndex coord_to_index(const BoardSpec& spec, std::span<const int> coords) {
  if (coords.size() != static_cast<std::size_t>(spec.d))
    throw std::invalid_argument("coordinate tuple has arity " +
                                std::to_string(coords.size()) + ", expected " +
                                std::to_string(spec.d));
  SquareIndex index = 0;
  SquareIndex weight = 1;
  for (int i = 0; i < spec.d; ++i) {
    if (coords[i] < 1 || coords[i] > spec.n)
      throw std::invalid_argument("coordinate " + coords_str(coords) +
                                  " is off the (" + std::to_string(spec.n) +
                                  "," + std::to_string(spec.d) + ")-board");
    index += static_cast<SquareIndex>(coords[i] - 1) * weight;
    weight *= static_cast<SquareIndex>(spec.n);
  }
  return index;
}

std::vector<int> index_to_coord(const BoardSpec& spec, SquareIndex index) {
  if (index >= spec.square_count())
    throw std::invalid_argument("square index " + std::to_string(index) +
                                " out of range");
  std::vector<int> coords(static_cast<std::size_t>(spec.d));
  for (int i = 0; i < spec.d; ++i) {
    coords[i] = static_cast<int>(index % spec.n) + 1;
    index /= spec.n;
  }
  return coords;
}

Square square_at(const BoardSpec& spec, std::vector<int> coords) {
  SquareIndex index = coord_to_index(spec, coords);
  return Square{std::move(coords), index};
}

std::vector<Direction> directions(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (d > 20) throw std::invalid_argument("direction enumeration not supported beyond d=20");
  std::vector<Direction> out;
  std::vector<std::int8_t> eps(static_cast<std::size_t>(d), -1);
  for (;;) {
    // keep vectors whose first nonzero component is +1
    for (std::int8_t e : eps) {
      if (e == 0) continue;
      if (e == 1) out.push_back(Direction{eps});
      break;
    }
    // odometer: last component fastest, so output is lexicographic
    int i = d - 1;
    while (i >= 0 && eps[i] == 1) eps[i--] = -1;
    if (i < 0) break;
    ++eps[i];
  }
  return out;
}

bool attacks(const BoardSpec& spec, std::span<const int> a, std::span<const int> b) {
  if (a.size() != static_cast<std::size_t>(spec.d) ||
      b.size() != static_cast<std::size_t>(spec.d))
    throw std::invalid_argument("coordinate arity mismatch");
  int m = 0;
  for (int i = 0; i < spec.d; ++i) {
    int diff = std::abs(a[i] - b[i]);
    if (diff == 0) continue;
    if (m == 0)
      m = diff;
    else if (diff != m)
      return false;
  }
  return m != 0;
}

bool attacks(const BoardSpec& spec, SquareIndex a, SquareIndex b) {
  return attacks(spec, index_to_coord(spec, a), index_to_coord(spec, b));
}

std::vector<AttackLine> enumerate_lines(const BoardSpec& spec) {
  std::vector<AttackLine> lines;
  const std::uint64_t total = spec.square_count();
  std::vector<int> coords, walk;
  for (const Direction& dir : directions(spec.d)) {
    for (SquareIndex s = 0; s < total; ++s) {
      coords = index_to_coord(spec, s);
      // origin: predecessor along the direction is off the board
      bool origin = false;
      for (int i = 0; i < spec.d; ++i) {
        int prev = coords[i] - dir.eps[i];
        if (prev < 1 || prev > spec.n) {
          origin = true;
          break;
        }
      }
      if (!origin) continue;
      AttackLine line{dir, {s}};
      walk = coords;
      for (;;) {
        bool inside = true;
        for (int i = 0; i < spec.d; ++i) {
          walk[i] += dir.eps[i];
          if (walk[i] < 1 || walk[i] > spec.n) inside = false;
        }
        if (!inside) break;
        line.squares.push_back(coord_to_index(spec, walk));
      }
      if (line.length() >= 2) lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::vector<SquareIndex> attack_neighbors(const BoardSpec& spec, SquareIndex q) {
  std::vector<int> base = index_to_coord(spec, q);
  std::vector<SquareIndex> out;
  std::vector<int> walk;
  for (const Direction& dir : directions(spec.d)) {
    for (int sign : {+1, -1}) {
      walk = base;
      for (;;) {
        bool inside = true;
        for (int i = 0; i < spec.d; ++i) {
          walk[i] += sign * dir.eps[i];
          if (walk[i] < 1 || walk[i] > spec.n) inside = false;
        }
        if (!inside) break;
        out.push_back(coord_to_index(spec, walk));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ndq

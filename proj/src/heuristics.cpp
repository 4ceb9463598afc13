#include "ndq/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ndq {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Necessary condition, checked before the full board walk: if some signed
// coefficient sum g = sum_j eps_j * coeffs[j] has gcd(n, g mod n) > 1, two
// queens m * eps apart land on the same last coordinate for m = n / gcd,
// which fits on the board and is an attack.
bool passes_residue_filter(int n, const std::vector<int>& coeffs) {
  const int dm1 = static_cast<int>(coeffs.size());
  std::vector<int> eps(coeffs.size(), -1);
  for (;;) {
    bool nonzero = false;
    long long sum = 0;
    for (int j = 0; j < dm1; ++j) {
      sum += static_cast<long long>(eps[j]) * coeffs[j];
      if (eps[j] != 0) nonzero = true;
    }
    if (nonzero) {
      long long r = ((sum % n) + n) % n;
      if (gcd_ll(n, r == 0 ? n : r) != 1) return false;
    }
    int i = dm1 - 1;
    while (i >= 0 && eps[i] == 1) eps[i--] = -1;
    if (i < 0) break;
    ++eps[i];
  }
  return true;
}

// Incremental validity check: insert queens one by one into an
// attacked-squares bitmap; a queen landing on an attacked square means the
// placement has a conflict. Much cheaper than all-pairs when scanning many
// failing candidates.
bool placement_is_valid(const BoardSpec& spec, const std::vector<SquareIndex>& queens) {
  const std::uint64_t total = spec.square_count();
  std::vector<std::uint8_t> attacked(total, 0);
  const auto dirs = directions(spec.d);
  std::vector<int> coords, walk;
  for (SquareIndex q : queens) {
    if (attacked[q]) return false;
    attacked[q] = 1;
    coords = index_to_coord(spec, q);
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
  return true;
}

}  // namespace

Placement modular_construct(const ModularScheme& scheme) {
  const BoardSpec spec(scheme.n, scheme.d);
  if (scheme.coeffs.size() != static_cast<std::size_t>(scheme.d - 1))
    throw std::invalid_argument("scheme needs d-1 coefficients, got " +
                                std::to_string(scheme.coeffs.size()));
  for (int c : scheme.coeffs)
    if (scheme.n > 1 && (c < 1 || c > scheme.n - 1))
      throw std::invalid_argument("scheme coefficient " + std::to_string(c) +
                                  " outside [1, n-1]");
  if (scheme.offset < 0 || scheme.offset > scheme.n - 1)
    throw std::invalid_argument("scheme offset outside [0, n-1]");

  std::vector<SquareIndex> queens;
  std::vector<int> coords(static_cast<std::size_t>(scheme.d), 1);
  for (;;) {
    long long sum = scheme.offset;
    for (int j = 0; j < scheme.d - 1; ++j)
      sum += static_cast<long long>(scheme.coeffs[j]) * (coords[j] - 1);
    coords[static_cast<std::size_t>(scheme.d - 1)] =
        1 + static_cast<int>(sum % scheme.n);
    queens.push_back(coord_to_index(spec, coords));
    int i = 0;
    while (i < scheme.d - 1 && coords[i] == scheme.n) coords[i++] = 1;
    if (i >= scheme.d - 1) break;
    ++coords[i];
  }
  return make_placement_from_indices(spec, std::move(queens));
}

std::optional<ModularScheme> search_scheme(int n, int d, std::uint64_t budget) {
  if (budget < 1) throw std::invalid_argument("search budget must be >= 1");
  BoardSpec spec(n, d);  // validates n, d
  if (n == 1 || d == 1) {
    // one queen (n = 1) or one axis (d = 1): the scheme is trivially valid
    ModularScheme trivial{n, d, std::vector<int>(static_cast<std::size_t>(d - 1), 1), 0};
    if (n == 1) trivial.coeffs.assign(static_cast<std::size_t>(d - 1), 0);
    Placement p = modular_construct(trivial);
    if (placement_is_valid(spec, p.queens)) return trivial;
    return std::nullopt;
  }

  std::uint64_t tried = 0;
  std::vector<int> coeffs(static_cast<std::size_t>(d - 1), 1);
  for (;;) {
    ++tried;
    if (passes_residue_filter(n, coeffs)) {
      ModularScheme scheme{n, d, coeffs, 0};
      Placement p = modular_construct(scheme);
      if (placement_is_valid(spec, p.queens)) return scheme;
    }
    if (tried >= budget) return std::nullopt;
    // lexicographic: last coefficient fastest
    int i = d - 2;
    while (i >= 0 && coeffs[static_cast<std::size_t>(i)] == n - 1)
      coeffs[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return std::nullopt;
    ++coeffs[static_cast<std::size_t>(i)];
  }
}

Placement greedy_random(const BoardSpec& spec, std::uint64_t seed, int restarts) {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  Placement best{spec, {}};
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    Placement p = greedy_initial(spec, splitmix64(seed ^ (0x9E3779B97F4A7C15ULL *
                                                          static_cast<std::uint64_t>(r + 1))));
    if (!have || p.queens.size() > best.queens.size() ||
        (p.queens.size() == best.queens.size() && p.queens < best.queens)) {
      best = std::move(p);
      have = true;
    }
  }
  return best;
}

}  // namespace ndq

#include <doctest.h>

#include <numeric>

#include "ndq/bounds.hpp"
#include "ndq/heuristics.hpp"
#include "oracles.hpp"

using namespace ndq;

TEST_CASE("modular construction examples") {
  // n=5, coeffs (2): the classic 5-queens staircase
  Placement p5 = modular_construct(ModularScheme{5, 2, {2}, 0});
  CHECK(p5.size() == 5);
  CHECK(verify(p5).ok());
  CHECK(p5.queens == make_placement(BoardSpec(5, 2),
                                    {{1, 1}, {2, 3}, {3, 5}, {4, 2}, {5, 4}})
                         .queens);

  // n=4, coeffs (1): the main diagonal, invalid
  Placement p4 = modular_construct(ModularScheme{4, 2, {1}, 0});
  CHECK(p4.size() == 4);
  VerifyResult r = verify(p4);
  CHECK_FALSE(r.ok());
  Conflict diag{coord_to_index(BoardSpec(4, 2), std::vector<int>{1, 1}),
                coord_to_index(BoardSpec(4, 2), std::vector<int>{2, 2})};
  CHECK(std::find(r.conflicts.begin(), r.conflicts.end(), diag) != r.conflicts.end());

  CHECK_THROWS_AS(modular_construct(ModularScheme{5, 2, {0}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(modular_construct(ModularScheme{5, 2, {5}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(modular_construct(ModularScheme{5, 3, {2}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(modular_construct(ModularScheme{5, 2, {2}, 5}), std::invalid_argument);
}

TEST_CASE("scheme output is one queen per axis-d line") {
  Placement p = modular_construct(ModularScheme{7, 3, {2, 4}, 3});
  CHECK(p.size() == 49);
  std::map<std::pair<int, int>, int> per_line;
  for (const auto& coords : p.queen_coords()) ++per_line[{coords[0], coords[1]}];
  CHECK(per_line.size() == 49);
  for (auto [line, count] : per_line) CHECK(count == 1);
}

TEST_CASE("scheme search finds the first valid coefficients") {
  auto s52 = search_scheme(5, 2, 1000);
  REQUIRE(s52.has_value());
  CHECK(s52->coeffs == std::vector<int>{2});  // frozen: first hit in scan order
  CHECK(s52->offset == 0);

  auto s113 = search_scheme(11, 3, 1000000);
  REQUIRE(s113.has_value());
  CHECK(s113->coeffs == std::vector<int>{2, 4});
  Placement p113 = modular_construct(*s113);
  CHECK(p113.size() == 121);
  CHECK(verify(p113).ok());

  auto s133 = search_scheme(13, 3, 1000000);
  REQUIRE(s133.has_value());
  Placement p133 = modular_construct(*s133);
  CHECK(p133.size() == 169);
  CHECK(verify(p133).ok());

  // gcd(4, 3!) = 2, and indeed the full scan finds nothing
  CHECK_FALSE(search_scheme(4, 2, 1000000).has_value());

  // budget cap: (5,2) needs two candidates, so one is not enough
  CHECK_FALSE(search_scheme(5, 2, 1).has_value());

  CHECK_THROWS_AS(search_scheme(5, 2, 0), std::invalid_argument);
}

TEST_CASE("scheme search succeeds whenever gcd(n, (2^d - 1)!) = 1") {
  for (auto [n, d] : {std::pair{5, 2}, {7, 2}, {11, 2}, {11, 3}, {13, 3}}) {
    long long fact_arg = (1LL << d) - 1;
    long long g = std::gcd(static_cast<long long>(n), [&] {
      long long f = 1;
      for (long long i = 2; i <= fact_arg; ++i) f = std::lcm(f, i) % 1000000;  // n small
      return f;
    }());
    (void)g;  // the boards above all satisfy the condition; assert the outcome
    auto scheme = search_scheme(n, d, 1000000);
    REQUIRE(scheme.has_value());
    Placement p = modular_construct(*scheme);
    std::uint64_t full = 1;
    for (int i = 0; i < d - 1; ++i) full *= static_cast<std::uint64_t>(n);
    CHECK(p.size() == full);
    CHECK(verify(p).ok());
  }
}

TEST_CASE("greedy random placements") {
  CHECK(greedy_random(BoardSpec(1, 1), 0, 1).size() == 1);

  Placement p33 = greedy_random(BoardSpec(3, 3), 0, 100);
  CHECK(verify(p33).ok());
  CHECK(p33.size() <= 4);  // Q_max(3,3)

  // the 3x3 optimum is 2 (every 3-permutation hits a diagonal); best-of-100
  // greedy finds it
  oracle::MisExhaustive mis(BoardSpec(3, 2));
  CHECK(mis.optimum() == 2);
  Placement p32 = greedy_random(BoardSpec(3, 2), 0, 100);
  CHECK(verify(p32).ok());
  CHECK(p32.size() == 2);

  CHECK_THROWS_AS(greedy_random(BoardSpec(3, 2), 0, 0), std::invalid_argument);
}

TEST_CASE("heuristic sizes never exceed registry exact values") {
  KnownValues kv = KnownValues::builtin();
  for (auto [n, d] : {std::pair{3, 3}, {4, 3}, {3, 4}}) {
    Placement p = greedy_random(BoardSpec(n, d), 1, 50);
    CHECK(verify(p).ok());
    CHECK(static_cast<long long>(p.size()) <= kv.exact(n, d));
  }
}

TEST_CASE("greedy random reduction is deterministic") {
  Placement a = greedy_random(BoardSpec(4, 2), 9, 25);
  Placement b = greedy_random(BoardSpec(4, 2), 9, 25);
  CHECK(a.queens == b.queens);
}

#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace treelasso;

TEST_CASE("path incidence matrix") {
  XTree q = fixtures::quartet_tree();
  auto m = path_incidence_matrix(q, fixtures::cords({{"a", "b"}, {"a", "c"}}));
  REQUIRE(m.size() == 2);
  int ab = 0, ac = 0;
  for (auto v : m[0]) ab += v;
  for (auto v : m[1]) ac += v;
  CHECK(ab == 2);
  CHECK(ac == 3);
}

TEST_CASE("six-taxon primed cords certify the edge weights") {
  XTree t = fixtures::primed_tree();
  const auto l = fixtures::primed_cords();
  CHECK(exact_rank(path_incidence_matrix(t, l)) == 9);
  CHECK(edge_weight_lasso_certificate(t, l));
  for (const auto& c : l) {
    CordSet smaller = l;
    smaller.erase(c);
    CHECK_FALSE(edge_weight_lasso_certificate(t, smaller));
  }
}

TEST_CASE("the complete cord set certifies") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    XTree t = random_tree(3 + seed, seed, 1, 2);
    CHECK(edge_weight_lasso_certificate(t, all_cords(t.taxon_set())));
  }
}

TEST_CASE("exact_rank agrees with rational elimination") {
  std::mt19937_64 rng(41);
  std::bernoulli_distribution bit(0.4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial) % 9;
    const std::size_t cols = 1 + static_cast<std::size_t>(trial / 9) % 9;
    std::vector<std::vector<std::uint8_t>> m(rows, std::vector<std::uint8_t>(cols));
    for (auto& row : m)
      for (auto& v : row) v = bit(rng) ? 1 : 0;
    CHECK(exact_rank(m) == fixtures::rational_rank(m));
  }
  for (int trial = 0; trial < 50; ++trial) {
    XTree t = random_tree(4 + trial % 8, 7000 + trial, 1, 2);
    CordSet l;
    for (const auto& c : all_cords(t.taxon_set())) {
      if (bit(rng)) l.insert(c);
    }
    auto m = path_incidence_matrix(t, l);
    CHECK(exact_rank(m) == fixtures::rational_rank(m));
  }
}

TEST_CASE("rank edge cases") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(exact_rank({{1, 1}, {1, 1}}) == 1);
  CHECK(exact_rank({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == 3);
}

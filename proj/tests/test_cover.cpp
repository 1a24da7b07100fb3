#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace treelasso;
using fixtures::cords;
using fixtures::set_of;

namespace {

std::vector<Taxon> alphabetical(const XTree& t) { return t.taxa(); }

}  // namespace

TEST_CASE("six-taxon primed transversal is stable") {
  XTree t = fixtures::primed_tree();
  auto report = is_stable(fixtures::primed_transversal(), t);
  CHECK(report.stable);
  CHECK(report.reason.empty());
}

TEST_CASE("instability is reported with a witness") {
  XTree t = fixtures::primed_tree();
  auto f = fixtures::primed_transversal();
  f[set_of({"b", "b'"})] = "b'";
  auto report = is_stable(f, t);
  CHECK_FALSE(report.stable);
  REQUIRE(report.outer);
  REQUIRE(report.inner);
  CHECK(*report.outer == set_of({"b", "b'", "c", "c'"}));
  CHECK(*report.inner == set_of({"b", "b'"}));
}

TEST_CASE("min rule on co-singletons is unstable for the six-taxon primed cherry choices") {
  XTree t = fixtures::primed_tree();
  auto f = fixtures::primed_transversal();
  const auto minus_b = set_of({"a", "a'", "b'", "c", "c'"});
  f[minus_b] = "a";  // alphabetical minimum
  auto report = is_stable(f, t);
  CHECK_FALSE(report.stable);
  CHECK(*report.outer == minus_b);
}

TEST_CASE("is_stable checks transversality and totality") {
  XTree t = fixtures::primed_tree();
  auto f = fixtures::primed_transversal();
  f[set_of({"a", "a'"})] = "b";
  auto report = is_stable(f, t);
  CHECK_FALSE(report.stable);
  CHECK(report.outer == report.inner);

  auto partial = fixtures::primed_transversal();
  partial.erase(set_of({"a", "a'"}));
  CHECK_THROWS_AS(is_stable(partial, t), InputError);

  auto extra = fixtures::primed_transversal();
  extra[set_of({"a", "b"})] = "a";
  CHECK_THROWS_AS(is_stable(extra, t), InputError);
}

TEST_CASE("min_order_transversal") {
  XTree t = fixtures::primed_tree();
  auto f = min_order_transversal(t, alphabetical(t));
  CHECK(f.at(set_of({"b", "b'"})) == "b");
  CHECK(f.at(set_of({"b", "b'", "c", "c'"})) == "b");
  for (const auto& x : t.taxa()) CHECK(f.at({x}) == x);
  CHECK(is_stable(f, t).stable);

  XTree star = parse_newick("(x,y,z);");
  auto g1 = min_order_transversal(star, {"x", "y", "z"});
  auto g2 = min_order_transversal(star, {"z", "y", "x"});
  CHECK(g1 != g2);
  CHECK(is_stable(g1, star).stable);
  CHECK(is_stable(g2, star).stable);

  CHECK_THROWS_AS(min_order_transversal(star, {"x", "y"}), InputError);
  CHECK_THROWS_AS(min_order_transversal(star, {"x", "y", "y"}), InputError);
}

TEST_CASE("closest_leaf_transversal") {
  XTree t = fixtures::primed_tree();
  auto f = closest_leaf_transversal(t, LeafPreference::closest, alphabetical(t));
  CHECK(f.at(set_of({"a", "a'"})) == "a");
  CHECK(is_stable(f, t).stable);

  XTree skew = parse_newick("((x:1,y:5):1,z:1,w:1);");
  const auto order = alphabetical(skew);
  CHECK(closest_leaf_transversal(skew, LeafPreference::closest, order).at(set_of({"x", "y"})) == "x");
  CHECK(closest_leaf_transversal(skew, LeafPreference::furthest, order).at(set_of({"x", "y"})) == "y");
  for (const auto& x : skew.taxa()) {
    CHECK(closest_leaf_transversal(skew, LeafPreference::furthest, order).at({x}) == x);
  }

  XTree improper = parse_newick("((a:1,b:1):0,c:1,d:1);");
  CHECK_THROWS_AS(closest_leaf_transversal(improper, LeafPreference::closest, alphabetical(improper)),
                  InputError);
}

TEST_CASE("triplet_cover of six-taxon primed") {
  XTree t = fixtures::primed_tree();
  auto l = triplet_cover(t, fixtures::primed_transversal());
  CHECK(l == fixtures::primed_cords());
  CHECK(l.size() == 9);
}

TEST_CASE("triplet_cover small cases and errors") {
  XTree star = parse_newick("(x,y,z);");
  auto l = triplet_cover(star, min_order_transversal(star, {"x", "y", "z"}));
  CHECK(l == cords({{"x", "y"}, {"y", "z"}, {"x", "z"}}));

  XTree t10 = random_tree(10, 3, 1, 2);
  CHECK(triplet_cover(t10, min_order_transversal(t10, alphabetical(t10))).size() == 17);

  XTree t = fixtures::primed_tree();
  auto unstable = fixtures::primed_transversal();
  unstable[set_of({"b", "b'"})] = "b'";
  CHECK_THROWS_AS(triplet_cover(t, unstable), InputError);
  auto forced = triplet_cover(t, unstable, true);
  CHECK(is_triplet_cover(t, forced));

  CHECK_THROWS_AS(triplet_cover(parse_newick("(a,b,c,d);"), {}), InputError);
}

TEST_CASE("is_cover and is_triplet_cover") {
  XTree primed = fixtures::primed_tree();
  CHECK(is_cover(primed, fixtures::primed_cords()));
  CHECK(is_triplet_cover(primed, fixtures::primed_cords()));
  CHECK_FALSE(is_cover(primed, cords({{"a", "a'"}, {"b", "b'"}, {"c", "c'"}})));
  CHECK_FALSE(is_cover(primed, {}));

  XTree q = fixtures::quartet_tree();
  CHECK_FALSE(is_triplet_cover(q, cords({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})));
  CHECK_THROWS_AS(is_cover(parse_newick("(a,b,c,d);"), {}), InputError);
  CHECK_THROWS_AS(is_cover(q, cords({{"a", "z"}})), InputError);
}

TEST_CASE("the eleven seven-taxon caterpillar cords cover but do not triplet-cover the figure tree") {
  // c's only cord partners are b and g, which are not joined, so the vertex
  // next to c has no triangle.
  XTree caterpillar = fixtures::caterpillar_tree();
  const auto l = fixtures::caterpillar_cords();
  CHECK(is_cover(caterpillar, l));
  CHECK_FALSE(is_triplet_cover(caterpillar, l));
  CHECK_FALSE(fixtures::brute_triplet_cover(caterpillar, l));
}

TEST_CASE("cover predicates agree with brute force on random cord sets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    XTree t = random_tree(4 + trial % 6, trial, 1, 2);
    const auto all = all_cords(t.taxon_set());
    CordSet l;
    std::bernoulli_distribution keep(0.3 + 0.1 * (trial % 5));
    for (const auto& c : all) {
      if (keep(rng)) l.insert(c);
    }
    const bool triplet = is_triplet_cover(t, l);
    CHECK(triplet == fixtures::brute_triplet_cover(t, l));
    if (triplet) CHECK(is_cover(t, l));
  }
}

TEST_CASE("transversal constructors are stable and generate 2n-3 cords") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial) % 28;
    XTree t = random_tree(n, 1000 + trial, 0.1, 3.0);
    auto order = t.taxa();
    std::shuffle(order.begin(), order.end(), rng);
    Transversal f;
    switch (trial % 3) {
      case 0: f = min_order_transversal(t, order); break;
      case 1: f = closest_leaf_transversal(t, LeafPreference::closest, order); break;
      default: f = closest_leaf_transversal(t, LeafPreference::furthest, order); break;
    }
    REQUIRE(is_stable(f, t).stable);
    auto l = triplet_cover(t, f);
    CHECK(l.size() == 2 * n - 3);
    if (n <= 14) CHECK(fixtures::brute_triplet_cover(t, l));
    CHECK(is_triplet_cover(t, l));
    CHECK(is_cover(t, l));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "cgk/action.hpp"
#include "cgk/matrix.hpp"
#include "test_util.hpp"

using namespace cgk;

TEST_CASE("validate_action accepts the loop permutation action") {
  GroupAction act = testutil::s3_on_three_loops();
  CHECK(act.group.order() == 6);
  // homomorphism: images of products are products of images
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int k = act.group.mult(i, j);
      CHECK(act.vmaps[k] == act.vmaps[i].compose(act.vmaps[j]));
      CHECK(act.emaps[k] == act.emaps[i].compose(act.emaps[j]));
    }
}

TEST_CASE("validate_action rejects incidence violations") {
  // swap v1,v2 but send e1 (v->v1) to f1 (v1->v2)
  Graph g = testutil::toeplitz_graph();
  GeneratorImages bad{"b", Perm({0, 2, 1}), Perm({2, 3, 0, 1})};
  try {
    validate_action(g, {bad}, std::nullopt);
    FAIL("expected NotCompatible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCompatible);
  }
}

TEST_CASE("abstract actions are checked for well-definedness") {
  Graph g = testutil::loops_graph(2);
  // abstract Z_4 with generators a and a^2; a acts trivially but a^2 swaps
  PermGroup z4 = PermGroup::close({Perm({1, 2, 3, 0}), Perm({2, 3, 0, 1})});
  GeneratorImages ga{"a", Perm({0}), Perm({0, 1})};
  GeneratorImages gaa{"a2", Perm({0}), Perm({1, 0})};
  try {
    validate_action(g, {ga, gaa}, z4);
    FAIL("expected NotWellDefined");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotWellDefined);
  }
  // consistent images pass
  GeneratorImages ok_a{"a", Perm({0}), Perm({1, 0})};
  GeneratorImages ok_aa{"a2", Perm({0}), Perm({0, 1})};
  GroupAction act = validate_action(g, {ok_a, ok_aa}, z4);
  CHECK(act.group.order() == 4);
  CHECK_FALSE(is_free(act));
}

TEST_CASE("bound is enforced") {
  Graph g = testutil::loops_graph(3);
  GeneratorImages c{"c", Perm({0}), Perm({1, 2, 0})};
  CHECK_THROWS_AS(validate_action(g, {c}, std::nullopt, 2), Error);
}

TEST_CASE("quotient graphs") {
  {
    Graph q = quotient_graph(testutil::s3_on_triangle());
    CHECK(q.vertex_count() == 1);
    CHECK(q.edge_count() == 1);
    CHECK(q.edges[0].src == 0);
    CHECK(q.edges[0].rng == 0);
  }
  {
    Graph q = quotient_graph(testutil::trivial_action(testutil::toeplitz_graph()));
    CHECK(same_shape(q, testutil::toeplitz_graph()));
  }
}

TEST_CASE("freeness") {
  for (int n = 2; n <= 6; ++n) CHECK(is_free(testutil::zn_on_cayley(n)));
  CHECK_FALSE(is_free(testutil::s3_on_triangle()));
  CHECK(is_free(testutil::trivial_action(testutil::loops_graph(2))));
}

TEST_CASE("free actions have orbit counts |E|/|G|") {
  for (int n = 2; n <= 6; ++n) {
    GroupAction act = testutil::zn_on_cayley(n);
    OrbitPartition vo = act.vertex_orbits(), eo = act.edge_orbits();
    CHECK(vo.orbits.size() * act.group.order() == static_cast<std::size_t>(n));
    CHECK(eo.orbits.size() * act.group.order() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("group elements act as multigraph automorphisms") {
  std::vector<GroupAction> acts;
  acts.push_back(testutil::s3_on_three_loops());
  acts.push_back(testutil::z2_on_toeplitz());
  acts.push_back(testutil::s3_on_triangle());
  acts.push_back(testutil::d4_on_cross());
  for (const auto& act : acts) {
    for (std::size_t g = 0; g < act.group.order(); ++g) {
      std::vector<std::pair<int, int>> before, after;
      for (const auto& e : act.graph.edges) before.emplace_back(e.src, e.rng);
      for (int e = 0; e < act.graph.edge_count(); ++e) {
        const Edge& img = act.graph.edges[act.eact(static_cast<int>(g), e)];
        after.emplace_back(img.src, img.rng);
        CHECK(img.src == act.vact(static_cast<int>(g), act.graph.edges[e].src));
        CHECK(img.rng == act.vact(static_cast<int>(g), act.graph.edges[e].rng));
      }
      std::sort(before.begin(), before.end());
      std::sort(after.begin(), after.end());
      CHECK(before == after);
    }
  }
}

TEST_CASE("skew product of the three-loop graph by Z_3") {
  Cocycle c;
  c.abelian = {3};
  c.assignment = {{"e1", {0}}, {"e2", {1}}, {"e3", {2}}};
  Graph sk = skew_product(testutil::loops_graph(3), c);
  REQUIRE(sk.vertex_count() == 3);
  REQUIRE(sk.edge_count() == 9);
  // each ordered vertex pair (including equal) joined exactly once
  IntMatrix counts(3, 3);
  for (const auto& e : sk.edges) counts.at(e.src, e.rng) += 1;
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) CHECK(counts.at(i, j) == 1);
}

TEST_CASE("trivial cocycle gives disjoint fiber copies") {
  Cocycle c;
  c.abelian = {4};
  c.assignment = {{"e1", {0}}, {"e2", {0}}, {"f1", {0}}, {"f2", {0}}};
  Graph base = testutil::toeplitz_graph();
  Graph sk = skew_product(base, c);
  CHECK(sk.vertex_count() == 4 * base.vertex_count());
  CHECK(sk.edge_count() == 4 * base.edge_count());
  int nv = base.vertex_count();
  for (const auto& e : sk.edges) CHECK(e.src / nv == e.rng / nv);  // never leaves a fiber
}

TEST_CASE("skew product crossing fibers") {
  Graph g;
  g.vertices = {"u", "w"};
  g.edges = {{"e", 0, 1}};
  Cocycle c;
  c.abelian = {2};
  c.assignment = {{"e", {1}}};
  Graph sk = skew_product(g, c);
  REQUIRE(sk.vertex_count() == 4);
  REQUIRE(sk.edge_count() == 2);
  for (const auto& e : sk.edges) CHECK(e.src / 2 != e.rng / 2);
}

TEST_CASE("skew product size invariant") {
  Cocycle c;
  c.abelian = {2, 2};
  c.assignment = {{"e1", {0, 1}}, {"e2", {1, 0}}, {"f1", {1, 1}}, {"f2", {0, 0}}};
  Graph base = testutil::toeplitz_graph();
  Graph sk = skew_product(base, c);
  CHECK(sk.vertex_count() == 4 * base.vertex_count());
  CHECK(sk.edge_count() == 4 * base.edge_count());
}

TEST_CASE("quotient of the skew product by the dual action recovers sizes") {
  // E(c) for the three-loop graph; the induced Z_2 on E(c) fixes the zero
  // fiber and swaps the others, giving the 2-vertex, 5-edge quotient
  Cocycle c;
  c.abelian = {3};
  c.assignment = {{"e1", {0}}, {"e2", {1}}, {"e3", {2}}};
  Graph ec = skew_product(testutil::loops_graph(3), c);
  auto vid = [&ec](const std::string& n) { return ec.find_vertex(n); };
  auto eid = [&ec](const std::string& n) { return ec.find_edge(n); };
  std::vector<int> vim(3), eim(9);
  vim[vid("v@0")] = vid("v@0");
  vim[vid("v@1")] = vid("v@2");
  vim[vid("v@2")] = vid("v@1");
  auto emap = [&](const std::string& from, const std::string& to) { eim[eid(from)] = eid(to); };
  emap("e1@0", "e1@0");
  emap("e2@0", "e3@0");
  emap("e3@0", "e2@0");
  emap("e1@1", "e1@2");
  emap("e1@2", "e1@1");
  emap("e2@1", "e3@2");
  emap("e3@2", "e2@1");
  emap("e2@2", "e3@1");
  emap("e3@1", "e2@2");
  GroupAction act = validate_action(ec, {{"t", Perm(vim), Perm(eim)}}, std::nullopt);
  CHECK(act.group.order() == 2);
  Graph q = quotient_graph(act);
  CHECK(q.vertex_count() == 2);
  CHECK(q.edge_count() == 5);
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "cgk/group.hpp"

using namespace cgk;

namespace {

PermGroup s3() { return PermGroup::close({Perm({1, 0, 2}), Perm({1, 2, 0})}); }
PermGroup z3() { return PermGroup::close({Perm({1, 2, 0})}); }
PermGroup d4() { return PermGroup::close({Perm({1, 2, 3, 0}), Perm({0, 3, 2, 1})}); }
PermGroup klein() { return PermGroup::close({Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})}); }

PointAction natural(const PermGroup& G) {
  return [&G](int g, int p) { return G.element(g)(p); };
}

unsigned test_seed() {
  if (const char* s = std::getenv("CGK_SEED")) return static_cast<unsigned>(std::atoi(s));
  return 20250811u;
}

}  // namespace

TEST_CASE("closure enumerates the group") {
  CHECK(z3().order() == 3);
  CHECK(s3().order() == 6);
  CHECK(d4().order() == 8);
  CHECK(s3().element(0).is_identity());
  CHECK_THROWS_AS(PermGroup::close({Perm({1, 2, 0})}, 2), Error);
}

TEST_CASE("closure element set is generation-order independent") {
  PermGroup a = PermGroup::close({Perm({1, 0, 2}), Perm({1, 2, 0})});
  PermGroup b = PermGroup::close({Perm({1, 2, 0}), Perm({1, 0, 2})});
  REQUIRE(a.order() == b.order());
  std::set<std::vector<int>> ea, eb;
  for (const auto& p : a.elements()) ea.insert(p.images());
  for (const auto& p : b.elements()) eb.insert(p.images());
  CHECK(ea == eb);
}

TEST_CASE("multiplication and inverses are consistent") {
  PermGroup G = d4();
  for (int i = 0; i < static_cast<int>(G.order()); ++i) {
    CHECK(G.mult(i, G.inverse(i)) == 0);
    CHECK(G.mult(G.inverse(i), i) == 0);
    for (int j = 0; j < static_cast<int>(G.order()); ++j) {
      Perm p = G.element(i).compose(G.element(j));
      CHECK(G.element(G.mult(i, j)) == p);
    }
  }
}

TEST_CASE("orbits") {
  {
    // S_3 permuting three loops: a single orbit
    PermGroup G = s3();
    OrbitPartition p = orbits(G, 3, natural(G));
    REQUIRE(p.orbits.size() == 1);
    CHECK(p.reps[0] == 0);
  }
  {
    // Z_2 fixing point 0 and swapping 1, 2
    PermGroup G = PermGroup::close({Perm({0, 2, 1})});
    OrbitPartition p = orbits(G, 3, natural(G));
    REQUIRE(p.orbits.size() == 2);
    CHECK(p.orbits[0] == std::vector<int>{0});
    CHECK(p.orbits[1] == std::vector<int>{1, 2});
  }
  {
    PermGroup G = PermGroup::trivial(4);
    OrbitPartition p = orbits(G, 4, natural(G));
    CHECK(p.orbits.size() == 4);
  }
}

TEST_CASE("stabilizers") {
  {
    PermGroup G = s3();
    Subgroup st = stabilizer(G, natural(G), 0);
    CHECK(st.order() == 2);
  }
  {
    // free cyclic translation action
    PermGroup G = PermGroup::close({Perm({1, 2, 3, 4, 0})});
    for (int v = 0; v < 5; ++v) CHECK(stabilizer(G, natural(G), v).order() == 1);
  }
  {
    // D_4 with an added fixed central point
    PermGroup G = PermGroup::close({Perm({1, 2, 3, 0, 4}), Perm({0, 3, 2, 1, 4})});
    CHECK(stabilizer(G, natural(G), 4).order() == G.order());
  }
}

TEST_CASE("conjugacy classes") {
  {
    ConjClasses cc = conjugacy_classes(s3());
    REQUIRE(cc.count() == 3);
    CHECK(cc.sizes == std::vector<long>{1, 3, 2});
    CHECK(cc.reps[0] == 0);
  }
  {
    ConjClasses cc = conjugacy_classes(z3());
    REQUIRE(cc.count() == 3);
    CHECK(cc.sizes == std::vector<long>{1, 1, 1});
  }
  {
    ConjClasses cc = conjugacy_classes(d4());
    CHECK(cc.count() == 5);
  }
}

TEST_CASE("group metadata") {
  GroupMeta m = group_meta(s3());
  CHECK(m.order == 6);
  CHECK(m.exponent == 6);
  CHECK_FALSE(m.abelian);

  GroupMeta k = group_meta(klein());
  CHECK(k.order == 4);
  CHECK(k.exponent == 2);
  CHECK(k.abelian);

  GroupMeta d = group_meta(d4());
  CHECK(d.order == 8);
  CHECK(d.exponent == 4);
  CHECK_FALSE(d.abelian);
}

TEST_CASE("orbit-stabilizer and conjugate stabilizers") {
  std::vector<PermGroup> groups;
  groups.push_back(s3());
  groups.push_back(d4());
  groups.push_back(klein());
  groups.push_back(PermGroup::close({Perm({1, 2, 3, 4, 5, 0})}));
  for (const auto& G : groups) {
    OrbitPartition part = orbits(G, G.degree(), natural(G));
    for (int p = 0; p < G.degree(); ++p) {
      Subgroup st = stabilizer(G, natural(G), p);
      CHECK(part.orbits[part.orbit_of[p]].size() * st.order() == G.order());
    }
    // stabilizers inside one orbit are conjugate, witnessed by a carrier
    for (const auto& orb : part.orbits) {
      int p = orb.front();
      Subgroup sp = stabilizer(G, natural(G), p);
      for (int q : orb) {
        int carrier = -1;
        for (int g = 0; g < static_cast<int>(G.order()); ++g)
          if (G.element(g)(p) == q) {
            carrier = g;
            break;
          }
        REQUIRE(carrier >= 0);
        Subgroup sq = stabilizer(G, natural(G), q);
        std::vector<int> conj;
        for (int h : sp.members) conj.push_back(G.mult(G.mult(carrier, h), G.inverse(carrier)));
        std::sort(conj.begin(), conj.end());
        CHECK(conj == sq.members);
      }
    }
  }
}

TEST_CASE("class sizes divide the order and sum to it") {
  std::mt19937 rng(test_seed());
  std::vector<PermGroup> groups;
  groups.push_back(s3());
  groups.push_back(d4());
  groups.push_back(z3());
  groups.push_back(PermGroup::close({Perm({1, 2, 0, 4, 3})}));  // Z_6 as product of cycles
  for (const auto& G : groups) {
    ConjClasses cc = conjugacy_classes(G);
    long sum = 0;
    for (long s : cc.sizes) {
      CHECK(G.order() % s == 0);
      sum += s;
    }
    CHECK(sum == static_cast<long>(G.order()));
    // conjugation preserves class labels
    for (int t = 0; t < 30; ++t) {
      int x = static_cast<int>(rng() % G.order());
      int g = static_cast<int>(rng() % G.order());
      int c = G.mult(G.mult(g, x), G.inverse(g));
      Subgroup whole = Subgroup::whole(G);
      CHECK(cc.class_of_element(x) == cc.class_of_element(c));
    }
  }
}

TEST_CASE("subgroup conjugacy classes use parent identity") {
  PermGroup G = s3();
  Subgroup st = stabilizer(G, natural(G), 0);  // order 2
  ConjClasses cc = conjugacy_classes(st);
  REQUIRE(cc.count() == 2);
  CHECK(cc.reps[0] == 0);
  CHECK(cc.sizes == std::vector<long>{1, 1});
}

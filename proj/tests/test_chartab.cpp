#include <catch2/catch_amalgamated.hpp>

#include "cgk/chartab.hpp"
#include "test_util.hpp"

using namespace cgk;

namespace {

Cyc cy(long n) { return Cyc(BigInt(n)); }

std::vector<Cyc> values_of(const ClassFunction& f) { return f.values; }

}  // namespace

TEST_CASE("character table of Z_2") {
  PermGroup G = PermGroup::close({Perm({1, 0})});
  CharTable t = character_table(G);
  REQUIRE(t.degrees == std::vector<long>{1, 1});
  CHECK(values_of(t.irreducibles[0]) == std::vector<Cyc>{cy(1), cy(1)});
  CHECK(values_of(t.irreducibles[1]) == std::vector<Cyc>{cy(1), cy(-1)});
}

TEST_CASE("character table of S_3") {
  PermGroup G = PermGroup::close({Perm({1, 0, 2}), Perm({1, 2, 0})});
  CharTable t = character_table(G);
  REQUIRE(t.degrees == std::vector<long>{1, 1, 2});
  // classes: identity, transpositions, 3-cycles
  CHECK(t.classes.sizes == std::vector<long>{1, 3, 2});
  CHECK(values_of(t.irreducibles[0]) == std::vector<Cyc>{cy(1), cy(1), cy(1)});
  CHECK(values_of(t.irreducibles[1]) == std::vector<Cyc>{cy(1), cy(-1), cy(1)});
  CHECK(values_of(t.irreducibles[2]) == std::vector<Cyc>{cy(2), cy(0), cy(-1)});
}

TEST_CASE("character table of Z_3 has cyclotomic values") {
  PermGroup G = PermGroup::close({Perm({1, 2, 0})});
  CharTable t = character_table(G);
  REQUIRE(t.degrees == std::vector<long>{1, 1, 1});
  Cyc w = Cyc::zeta(3), w2 = Cyc::zeta(3, 2);
  // the two nontrivial characters take the primitive cube roots, in canonical order
  std::vector<std::vector<Cyc>> expect = {{cy(1), w, w2}, {cy(1), w2, w}};
  bool found0 = values_of(t.irreducibles[1]) == expect[0] || values_of(t.irreducibles[1]) == expect[1];
  bool found1 = values_of(t.irreducibles[2]) == expect[0] || values_of(t.irreducibles[2]) == expect[1];
  CHECK(found0);
  CHECK(found1);
  CHECK(values_of(t.irreducibles[1]) != values_of(t.irreducibles[2]));
}

TEST_CASE("orthogonality and degree identities for the group catalog") {
  for (const auto& ng : testutil::group_catalog()) {
    INFO("group " << ng.name);
    PermGroup G = PermGroup::close(ng.gens);
    REQUIRE(G.order() <= 24);
    CharTable t = character_table(G);
    REQUIRE(t.irreducibles.size() == t.classes.count());
    BigInt degsq(0);
    for (long d : t.degrees) {
      CHECK(G.order() % static_cast<std::size_t>(d) == 0);
      degsq += BigInt(d) * BigInt(d);
    }
    CHECK(degsq == BigInt(static_cast<long>(G.order())));
    // rows
    for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
      for (std::size_t j = i; j < t.irreducibles.size(); ++j)
        CHECK(inner_product(t.irreducibles[i], t.irreducibles[j]) == (i == j ? 1 : 0));
    // columns: sum over irreducibles of chi(g_i) conj(chi(g_j)) = delta |G|/|C_i|
    for (std::size_t a = 0; a < t.classes.count(); ++a)
      for (std::size_t b = a; b < t.classes.count(); ++b) {
        Cyc sum;
        for (const auto& chi : t.irreducibles)
          sum = sum + chi.values[a] * chi.values[b].conj();
        if (a == b)
          CHECK(sum == cy(static_cast<long>(G.order()) / t.classes.sizes[a]));
        else
          CHECK(sum.is_zero());
      }
  }
}

TEST_CASE("inner products with the regular character give degrees") {
  PermGroup G = PermGroup::close({Perm({1, 2, 3, 0}), Perm({0, 3, 2, 1})});  // D_4
  CharTable t = character_table(G);
  ClassFunction reg;
  reg.domain = Subgroup::whole(G);
  reg.classes = t.classes;
  for (std::size_t k = 0; k < t.classes.count(); ++k)
    reg.values.push_back(k == 0 ? cy(static_cast<long>(G.order())) : cy(0));
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    CHECK(inner_product(reg, t.irreducibles[i]) == t.degrees[i]);
}

TEST_CASE("restriction") {
  PermGroup G = PermGroup::close({Perm({1, 0, 2}), Perm({1, 2, 0})});
  CharTable t = character_table(G);
  Subgroup H = stabilizer(G, [&G](int g, int p) { return G.element(g)(p); }, 2);
  REQUIRE(H.order() == 2);

  ClassFunction triv = restrict_to(t.irreducibles[0], H);
  for (const auto& v : triv.values) CHECK(v == cy(1));

  ClassFunction two = restrict_to(t.irreducibles[2], H);
  REQUIRE(two.values.size() == 2);
  CHECK(two.values[0] == cy(2));
  CHECK(two.values[1] == cy(0));
  // (2, 0) on Z_2 is trivial + sign
  CharTable th = character_table(H);
  CHECK(inner_product(two, th.irreducibles[0]) == 1);
  CHECK(inner_product(two, th.irreducibles[1]) == 1);

  ClassFunction same = restrict_to(t.irreducibles[2], Subgroup::whole(G));
  CHECK(same.values == t.irreducibles[2].values);
}

TEST_CASE("transport") {
  PermGroup G = PermGroup::close({Perm({1, 0, 2}), Perm({1, 2, 0})});
  auto vact = [&G](int g, int p) { return G.element(g)(p); };
  Subgroup H = stabilizer(G, vact, 2);  // {id, (01)}
  CharTable th = character_table(H);
  const ClassFunction& sign = th.irreducibles[1];

  ClassFunction same = transport(sign, 0);
  CHECK(same.domain.members == H.members);
  CHECK(same.values == sign.values);

  int a = G.index_of(Perm({0, 2, 1}));  // swaps points 1,2
  REQUIRE(a >= 0);
  ClassFunction moved = transport(sign, a);
  Subgroup H2 = stabilizer(G, vact, 1);  // {id, (02)}
  CHECK(moved.domain.members == H2.members);
  int swap02 = G.index_of(Perm({2, 1, 0}));
  CHECK(moved.at_element(swap02) == cy(-1));
  CHECK(moved.at_element(0) == cy(1));

  ClassFunction back = transport(moved, G.inverse(a));
  CHECK(back.domain.members == H.members);
  CHECK(back.values == sign.values);
}

TEST_CASE("permutation characters") {
  {
    GroupAction act = testutil::s3_on_three_loops();
    ClassFunction chi =
        perm_character(act.group, 3, [&act](int g, int e) { return act.eact(g, e); });
    REQUIRE(chi.values.size() == 3);
    CHECK(chi.values[0] == cy(3));
    CHECK(chi.values[1] == cy(1));
    CHECK(chi.values[2] == cy(0));
  }
  {
    PermGroup G = PermGroup::close({Perm({1, 0})});
    ClassFunction chi = perm_character(G, 5, [](int, int p) { return p; });
    for (const auto& v : chi.values) CHECK(v == cy(5));
  }
  {
    // free translation action: no fixed points away from the identity
    GroupAction act = testutil::zn_on_cayley(5);
    ClassFunction chi = perm_character(act.group, act.graph.vertex_count(),
                                       [&act](int g, int v) { return act.vact(g, v); });
    CHECK(chi.values[0] == cy(5));
    for (std::size_t k = 1; k < chi.values.size(); ++k) CHECK(chi.values[k].is_zero());
  }
}

TEST_CASE("Doplicher-Roberts matrices for S_3") {
  GroupAction act = testutil::s3_on_three_loops();
  const PermGroup& G = act.group;
  CharTable t = character_table(G);

  ClassFunction perm = perm_character(G, 3, [&act](int g, int e) { return act.eact(g, e); });
  IntMatrix B = dr_matrix(G, perm);
  CHECK(B == IntMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}});

  IntMatrix B2 = dr_matrix(G, t.irreducibles[2]);
  CHECK(B2 == IntMatrix{{0, 0, 1}, {0, 0, 1}, {1, 1, 1}});

  IntMatrix B3 = dr_matrix(G, t.irreducibles[0]);
  CHECK(B3 == IntMatrix::identity(3));
}

TEST_CASE("DR weighted row sums") {
  for (const auto& name : {"S3", "D4", "A4"}) {
    for (const auto& ng : testutil::group_catalog()) {
      if (ng.name != name) continue;
      PermGroup G = PermGroup::close(ng.gens);
      CharTable t = character_table(G);
      ClassFunction rho = perm_character(G, G.degree(),
                                         [&G](int g, int p) { return G.element(g)(p); });
      IntMatrix B = dr_matrix(t, rho);
      BigInt rho1 = rho.values[0].to_integer();
      for (std::size_t v = 0; v < t.irreducibles.size(); ++v) {
        BigInt sum(0);
        for (std::size_t w = 0; w < t.irreducibles.size(); ++w)
          sum += B.at(static_cast<long>(v), static_cast<long>(w)) * BigInt(t.degrees[w]);
        CHECK(sum == BigInt(t.degrees[v]) * rho1);
      }
    }
  }
}

TEST_CASE("multiplicity symmetry of restricted characters") {
  GroupAction act = testutil::s3_on_three_loops();
  Subgroup Ge = act.edge_stabilizer(0);
  CharTable tg = character_table(act.group);
  for (const auto& a : tg.irreducibles)
    for (const auto& b : tg.irreducibles) {
      ClassFunction ra = restrict_to(a, Ge), rb = restrict_to(b, Ge);
      CHECK(inner_product(ra, rb) == inner_product(rb, ra));
    }
}

TEST_CASE("exhausted prime retries surface as InternalSplitFailure") {
  PermGroup G = PermGroup::close({Perm({1, 0, 2}), Perm({1, 2, 0})});
  try {
    character_table(Subgroup::whole(G), 0);
    FAIL("expected InternalSplitFailure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InternalSplitFailure);
  }
}

TEST_CASE("inner product rejects non-integral results") {
  PermGroup G = PermGroup::close({Perm({1, 0})});
  ClassFunction odd;
  odd.domain = Subgroup::whole(G);
  odd.classes = conjugacy_classes(G);
  odd.values = {cy(1), cy(0)};  // <odd, odd> = 1/2
  CHECK_THROWS_AS(inner_product(odd, odd), Error);
}

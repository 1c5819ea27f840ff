#include <doctest.h>

#include <vector>

#include "hypercount/counting.hpp"
#include "hypercount/degeneracy.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/oracle.hpp"
#include "hypercount/patterns.hpp"

using namespace hypercount;

TEST_SUITE_BEGIN("counting");

TEST_CASE("skeleton enumeration walks out-neighbourhoods") {
  Digraph arc(2, {{0, 1}});
  CHECK(enumerate_skeleton_homs(arc, {0}, arc).size() == 1);

  Digraph path(3, {{0, 1}, {1, 2}});
  CHECK(enumerate_skeleton_homs(arc, {0}, path).size() == 2);

  Digraph star(3, {{0, 1}, {0, 2}});
  std::vector<PartialHom> maps = enumerate_skeleton_homs(star, {0}, star);
  CHECK(maps.size() == 4);
  for (const PartialHom& m : maps) {
    REQUIRE(m.size() == 3);
    CHECK(m[0] == std::pair<int, int>{0, 0});
  }

  // The domain is the forward reach of the seeds, not the whole pattern.
  std::vector<PartialHom> tail = enumerate_skeleton_homs(path, {1}, path);
  CHECK(tail.size() == 2);
  for (const PartialHom& m : tail) CHECK(m.size() == 2);
}

TEST_CASE("filtered maps respect ordered hyperedges") {
  Hypergraph triple(3, {{0, 1, 2}});
  Dah hd(triple, {0, 1, 2});
  SUBCASE("single target tuple") {
    Dah gd(triple, {0, 1, 2});
    std::vector<PartialHom> maps = filtered_homs(hd, {0}, gd, kLInf);
    REQUIRE(maps.size() == 1);
    CHECK(maps[0] == PartialHom{{0, 0}, {1, 1}, {2, 2}});
  }
  SUBCASE("two target tuples sharing a prefix") {
    Hypergraph g(4, {{0, 1, 2}, {0, 1, 3}});
    Dah gd(g, {0, 1, 2, 3});
    CHECK(filtered_homs(hd, {0}, gd, kLInf).size() == 2);
  }
  SUBCASE("skeleton maps failing the tuple filter are dropped") {
    Hypergraph g(4, {{0, 1, 2}, {1, 2, 3}, {0, 1, 3}});
    Dah gd(g, {0, 1, 2, 3});
    CHECK(filtered_homs(hd, {0}, gd, kLInf).size() == 3);
    Digraph hsk = l_skeleton(hd, kLInf);
    Digraph gsk = l_skeleton(gd, kLInf);
    CHECK(enumerate_skeleton_homs(hsk, {0}, gsk).size() == 4);
  }
}

TEST_CASE("single-bag tables count each full map once") {
  Hypergraph p3(3, {{0, 1}, {1, 2}});
  Dah hd(p3, {0, 1, 2});
  Digraph hsk = l_skeleton(hd, kLInf);
  std::optional<DagTreeDecomposition> tree = dag_tree_decomposition(hsk, 1);
  REQUIRE(tree.has_value());
  REQUIRE(tree->bags.size() == 1);

  Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Dah gd = orient(k4, compute_ordering(k4, kLInf).ordering);
  CountTable table = homcount_l(hd, gd, 0, *tree, kLInf);
  long long total = 0;
  for (const auto& [key, value] : table) {
    CHECK(value == 1);
    total += value;
  }
  CHECK(total == count_dah_homs(hd, gd, kLInf));
  CHECK(total == brute_dah_hom_count(gd, hd));
}

TEST_CASE("ordered counting anchors") {
  Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  Dah tt(triangle, {0, 1, 2});
  CHECK(count_dah_homs(tt, tt, kLInf) == 1);

  Hypergraph edge(2, {{0, 1}});
  Dah he(edge, {0, 1});
  Hypergraph g = random_hypergraph(7, 9, 2, 11);
  Dah gd = orient(g, compute_ordering(g, kLInf).ordering);
  CHECK(count_dah_homs(he, gd, kLInf) == g.edge_count());
}

TEST_CASE("orientation classes tile the arity-preserving count") {
  for (int t = 0; t < 25; ++t) {
    Hypergraph g = random_hypergraph(4 + t % 4, 3 + t % 5, 3, 40 + t);
    Hypergraph h = random_hypergraph(2 + t % 3, 1 + t % 3, 3, 70 + t);
    Dah gd = orient(g, compute_ordering(g, kLInf).ordering);
    long long sum = 0;
    for (const OrientationClass& cls : orientation_classes(h))
      sum += cls.size * brute_dah_hom_count(gd, cls.rep);
    CAPTURE(t);
    CHECK(sum == brute_arity_hom_count(g, h));
    CHECK(sum == [&] {
      long long engine = 0;
      for (const OrientationClass& cls : orientation_classes(h))
        engine += cls.size * count_dah_homs(cls.rep, gd, kLInf);
      return engine;
    }());
  }
}

TEST_CASE("homomorphism counting anchors") {
  Hypergraph edge(2, {{0, 1}});
  Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Hypergraph e3(3, {{0, 1, 2}});
  CHECK(count_homs(k4, edge, 0) == 12);
  CHECK(count_homs(triangle, triangle, 0) == 6);
  CHECK(count_homs(k4, triangle, kLInf) == 24);
  CHECK(count_homs(k4, e3, 1) == 36);
  CHECK(count_subs(k4, triangle, 0) == 4);
  CHECK(count_subs(k4, edge, 0) == 6);
  CHECK(count_subs(k4, k4, kLInf) == 1);
}

TEST_CASE("arity-3 copies are counted directly") {
  for (int t = 0; t < 10; ++t) {
    Hypergraph g = random_uniform_hypergraph(6, 5 + t, 3, 500 + t);
    Hypergraph e3(3, {{0, 1, 2}});
    CHECK(count_subs(g, e3, kLInf) == g.edge_count());
  }
}

TEST_CASE("engine matches the oracle on random instances") {
  for (int t = 0; t < 40; ++t) {
    Hypergraph g = random_hypergraph(4 + t % 5, 3 + t % 7, 3, 100 + t);
    Hypergraph h = random_hypergraph(2 + t % 4, 1 + t % 4, 3, 200 + t);
    long long want_hom = brute_hom_count(g, h);
    long long want_sub = brute_sub_count(g, h);
    for (long long l : {0LL, 1LL, kLInf}) {
      CAPTURE(t);
      CAPTURE(l);
      CHECK(count_homs(g, h, l) == want_hom);
      CHECK(count_subs(g, h, l) == want_sub);
    }
  }
}

TEST_CASE("disconnected patterns and isolated vertices multiply out") {
  Hypergraph two_edges(4, {{0, 1}, {2, 3}});
  Hypergraph dangling(3, {{0, 1}});
  for (int t = 0; t < 8; ++t) {
    Hypergraph g = random_hypergraph(5 + t % 3, 4 + t, 2, 333 + t);
    long long m2 = 2LL * g.edge_count();
    CHECK(count_homs(g, two_edges, kLInf) == m2 * m2);
    CHECK(count_homs(g, dangling, 0) == m2 * g.vertex_count());
  }
}

TEST_CASE("fan-out does not change results") {
  Hypergraph g = random_bounded_degeneracy(600, 1500, 2, 4, 77);
  Hypergraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  long long solo = count_homs(g, c5, 0, 1);
  CHECK(count_homs(g, c5, 0, 4) == solo);
  CHECK(count_subs(g, c5, 0, 4) == count_subs(g, c5, 0, 1));
}

TEST_CASE("levels agree pairwise on bounded-degeneracy inputs") {
  Hypergraph g = random_bounded_degeneracy(300, 700, 3, 3, 123);
  Hypergraph tricore(6, {{0, 1, 5}, {1, 2, 3}, {0, 2, 4}});
  long long at0 = count_homs(g, tricore, 0);
  CHECK(count_homs(g, tricore, 1) == at0);
  CHECK(count_homs(g, tricore, kLInf) == at0);
}

TEST_SUITE_END();

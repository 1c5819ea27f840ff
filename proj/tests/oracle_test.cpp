#include <doctest.h>

#include "hypercount/errors.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/oracle.hpp"

using namespace hypercount;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("edge homomorphisms count directed edge slots") {
  Hypergraph edge(2, {{0, 1}});
  Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(brute_hom_count(k4, edge) == 12);
  Hypergraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(brute_hom_count(path, edge) == 6);
}

TEST_CASE("arity collapse versus preservation") {
  Hypergraph e3(3, {{0, 1, 2}});
  Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  // Plain maps may merge the triple onto a pair edge: six surjections onto
  // each of the six edges. Arity-preserving and injective maps cannot.
  CHECK(brute_hom_count(k4, e3) == 36);
  CHECK(brute_arity_hom_count(k4, e3) == 0);
  CHECK(brute_sub_count(k4, e3) == 0);
}

TEST_CASE("triangle anchors") {
  Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(brute_hom_count(triangle, triangle) == 6);
  CHECK(brute_sub_count(triangle, triangle) == 1);
  Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(brute_hom_count(k4, triangle) == 24);
  CHECK(brute_sub_count(k4, triangle) == 4);
}

TEST_CASE("arity-preserving maps split hyperedge symmetry") {
  Hypergraph e3(3, {{0, 1, 2}});
  Hypergraph two(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(brute_arity_hom_count(two, e3) == 12);
  CHECK(brute_hom_count(two, e3) == 12);
  Hypergraph merged(2, {{0, 1}});
  CHECK(brute_hom_count(merged, e3) == 6);
  CHECK(brute_arity_hom_count(merged, e3) == 0);
}

TEST_CASE("ordered maps respect tuple positions") {
  Hypergraph edge(2, {{0, 1}});
  Dah he(edge, {0, 1});
  Dah reversed(edge, {1, 0});
  CHECK(brute_dah_hom_count(he, he) == 1);
  CHECK(brute_dah_hom_count(reversed, he) == 1);
  Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  Dah tt(triangle, {0, 1, 2});
  CHECK(brute_dah_hom_count(tt, tt) == 1);
  Hypergraph p3(3, {{0, 1}, {1, 2}});
  Dah hp(p3, {0, 1, 2});
  CHECK(brute_dah_hom_count(hp, tt) == 0);
  CHECK(brute_dah_hom_count(tt, hp) == 1);
}

TEST_CASE("colorful oracle anchors") {
  Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  OracleGuard guard{8, 2000, 200000000LL};
  ColoredHypergraph rainbow{triangle, {0, 1, 2}};
  CHECK(brute_colorful_hom_count(rainbow, triangle, guard) == 6);
  ColoredHypergraph clash{triangle, {0, 0, 1}};
  CHECK(brute_colorful_hom_count(clash, triangle, guard) == 0);
  CHECK(brute_colorful_simplex_exists(rainbow, 3));
  CHECK_FALSE(brute_colorful_simplex_exists(clash, 3));
}

TEST_CASE("simplex counting") {
  Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(brute_simplex_count(k4, 2) == 4);
  // A 3-simplex needs arity-3 faces, which a graph never has.
  CHECK(brute_simplex_count(k4, 3) == 0);
  Hypergraph s3(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(brute_simplex_count(s3, 3) == 1);
  Hypergraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(brute_simplex_count(c5, 2) == 0);
}

TEST_CASE("guard limits reject oversized inputs") {
  OracleGuard tight{3, 4, 1000};
  Hypergraph big = random_hypergraph(8, 6, 2, 4242);
  Hypergraph pat(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(brute_hom_count(big, pat, tight), guard_error);
}

TEST_SUITE_END();

#include <doctest.h>

#include "hypercount/degeneracy.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/hypergraph.hpp"

using namespace hypercount;

TEST_SUITE_BEGIN("degeneracy");

TEST_CASE("peeling anchors") {
  Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  DegeneracyResult r = compute_ordering(k4, kLInf);
  CHECK(r.kappa_l == 3);
  CHECK(r.ordering.size() == 4);
  CHECK(r.max_l_outdegree == 3);

  // Unlimited trimming keeps arity-one projections, so the inner pair of the
  // 4-path sees degree 2 from both sides; plain peeling stays at 1.
  Hypergraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(compute_ordering(path, kLInf).kappa_l == 2);
  CHECK(compute_ordering(path, 0).kappa_l == 1);
  Hypergraph p3(3, {{0, 1}, {1, 2}});
  CHECK(compute_ordering(p3, kLInf).kappa_l == 1);

  Hypergraph triple(3, {{0, 1, 2}});
  CHECK(compute_ordering(triple, 0).kappa_l == 1);
  CHECK(compute_ordering(triple, kLInf).kappa_l == 1);
}

TEST_CASE("levels change the peeling value") {
  // Two triples overlapping in a pair: at level zero the trimmed copies
  // collapse early; with unlimited trimming both survive to the end.
  Hypergraph g(4, {{0, 1, 2}, {0, 1, 3}, {2, 3}});
  CHECK(compute_ordering(g, 0).kappa_l == brute_degeneracy(g, 0));
  CHECK(compute_ordering(g, 1).kappa_l == brute_degeneracy(g, 1));
  CHECK(compute_ordering(g, kLInf).kappa_l == brute_degeneracy(g, kLInf));
}

TEST_CASE("greedy peeling matches the exact value on random instances") {
  for (int t = 0; t < 60; ++t) {
    Hypergraph g = random_hypergraph(3 + t % 8, 2 + t % 9, 3, 300 + t);
    for (long long l : {0LL, 1LL, 2LL, kLInf}) {
      DegeneracyResult r = compute_ordering(g, l);
      CAPTURE(t);
      CAPTURE(l);
      CHECK(r.kappa_l == brute_degeneracy(g, l));
      if (g.edge_count() > 0) CHECK(r.max_l_outdegree <= r.kappa_l * g.rank());
    }
  }
}

TEST_CASE("orientation out-degree is reported consistently") {
  for (int t = 0; t < 20; ++t) {
    Hypergraph g = random_hypergraph(4 + t % 6, 3 + t % 7, 3, 900 + t);
    for (long long l : {0LL, 1LL, kLInf}) {
      DegeneracyResult r = compute_ordering(g, l);
      Dah d = orient(g, r.ordering);
      CHECK(max_l_outdegree(d, l) == r.max_l_outdegree);
    }
  }
}

TEST_CASE("generated instances respect the requested bound") {
  for (int t = 0; t < 10; ++t) {
    Hypergraph g = random_bounded_degeneracy(40 + 5 * t, 90 + 9 * t, 2 + t % 2, 3, 50 + t);
    CHECK(compute_ordering(g, 0).kappa_l <= 3);
  }
  CHECK_THROWS_AS(random_bounded_degeneracy(10, 100, 2, 2, 1), input_error);
}

TEST_SUITE_END();

#include <doctest.h>

#include <vector>

#include "hypercount/counting.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/oracle.hpp"
#include "hypercount/patterns.hpp"
#include "hypercount/reductions.hpp"

using namespace hypercount;

namespace {

const OracleGuard kWideGuard{8, 2000, 200000000LL};
const OracleGuard kTensorGuard{6, 40, 500000000LL};

long long engine_hom(const Hypergraph& g, const Hypergraph& h, long long l) {
  return count_homs(g, h, l);
}

}  // namespace

TEST_SUITE_BEGIN("reductions");

TEST_CASE("colorful counting anchors") {
  Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  SUBCASE("rainbow triangle") {
    ColoredHypergraph g{triangle, {0, 1, 2}};
    CHECK(colorful_hom_count(g, triangle, kLInf, engine_hom) == 6);
    CHECK(colorful_hom_count(g, triangle, kLInf, engine_hom) ==
          brute_colorful_hom_count(g, triangle, kWideGuard));
  }
  SUBCASE("third color only on an isolated vertex") {
    Hypergraph g(4, {{0, 1}, {1, 2}, {0, 2}});
    ColoredHypergraph gc{g, {0, 1, 1, 2}};
    CHECK(colorful_hom_count(gc, triangle, kLInf, engine_hom) == 0);
  }
  SUBCASE("palette size must match the pattern") {
    ColoredHypergraph g{triangle, {0, 1, 1}};
    CHECK_THROWS_AS(colorful_hom_count(g, triangle, kLInf, engine_hom), input_error);
  }
}

TEST_CASE("colorful counting matches the oracle") {
  Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  for (int t = 0; t < 15; ++t) {
    Hypergraph g = random_hypergraph(5 + t % 3, 4 + t % 5, 2, 900 + t);
    std::vector<int> colors(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) colors[v] = v % 3;
    ColoredHypergraph gc{g, colors};
    CAPTURE(t);
    CHECK(colorful_hom_count(gc, triangle, kLInf, engine_hom) ==
          brute_colorful_hom_count(gc, triangle, kWideGuard));
  }
}

TEST_CASE("simplex construction") {
  Hypergraph s2 = build_simplex(2);
  CHECK(s2.vertex_count() == 3);
  CHECK(s2.edge_count() == 3);
  Hypergraph s3 = build_simplex(3);
  CHECK(s3.vertex_count() == 4);
  CHECK(s3.edge_count() == 4);
  for (const auto& e : s3.edges()) CHECK(e.size() == 3);
}

TEST_CASE("gadget layout for the three-triple pattern") {
  Hypergraph tricore(6, {{0, 1, 5}, {1, 2, 3}, {0, 2, 4}});
  GadgetSpec spec = make_gadget_spec(tricore, 0);
  CHECK(spec.core.size() == 3);
  CHECK(spec.groups.size() == 3);
  CHECK(spec.external_vertices.empty());
  CHECK(spec.external_edges.empty());

  Hypergraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  ColoredHypergraph gc{g, {0, 1, 2, 0}};
  ColoredHypergraph gadget = build_gadget(gc, spec, 0);
  CHECK(gadget.hg.vertex_count() == g.vertex_count() + 3);
  CHECK(gadget.hg.edge_count() == g.edge_count());
}

TEST_CASE("gadget positivity marks exactly the colorful-simplex instances") {
  Hypergraph tricore(6, {{0, 1, 5}, {1, 2, 3}, {0, 2, 4}});
  GadgetSpec spec = make_gadget_spec(tricore, 0);
  std::vector<ColoredHypergraph> cases;
  for (int t = 0; t < 12; ++t) {
    Hypergraph g = random_uniform_hypergraph(6, 4 + t % 5, 2, 1300 + t);
    cases.push_back({g, random_coloring(g.vertex_count(), 3, 50 + t)});
  }
  // Planted rainbow triangle and a color-clashed copy of the same graph.
  Hypergraph planted(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  cases.push_back({planted, {0, 1, 2, 0, 1}});
  cases.push_back({planted, {0, 1, 1, 0, 2}});

  int positive = 0;
  for (std::size_t t = 0; t < cases.size(); ++t) {
    bool want = brute_colorful_simplex_exists(cases[t], 3);
    positive += want ? 1 : 0;
    ColoredHypergraph gadget = build_gadget(cases[t], spec, 0);
    CAPTURE(t);
    CHECK((brute_colorful_hom_count(gadget, tricore, kWideGuard) > 0) == want);
  }
  CHECK(positive > 0);
  CHECK(positive < static_cast<int>(cases.size()));
}

TEST_CASE("gadget degeneracy stays flat as the input grows") {
  Hypergraph tricore(6, {{0, 1, 5}, {1, 2, 3}, {0, 2, 4}});
  GadgetSpec spec = make_gadget_spec(tricore, 0);
  std::vector<long long> checks;
  for (int m : {10, 100, 1000}) {
    int n = m + 1;
    Hypergraph g = random_bounded_degeneracy(n, m, 2, 2, 31);
    ColoredHypergraph gc{g, random_coloring(n, 3, 32)};
    checks.push_back(gadget_degeneracy_check(build_gadget(gc, spec, 0), 0));
  }
  CHECK(checks[0] == checks[1]);
  CHECK(checks[1] == checks[2]);
}

TEST_CASE("tensor products multiply homomorphism counts") {
  for (int t = 0; t < 10; ++t) {
    Hypergraph a = random_hypergraph(4, 3 + t % 3, 2, 1700 + t);
    Hypergraph b = random_hypergraph(4, 2 + t % 4, 2, 1800 + t);
    Hypergraph h = random_hypergraph(3, 2 + t % 2, 2, 1900 + t);
    Hypergraph prod = tensor_product(a, b);
    CAPTURE(t);
    CHECK(brute_hom_count(prod, h, kTensorGuard) ==
          brute_hom_count(a, h, kTensorGuard) * brute_hom_count(b, h, kTensorGuard));
  }
}

TEST_CASE("linear solving") {
  SUBCASE("well-posed system") {
    std::vector<std::vector<Rational>> m = {
        {Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    std::vector<Rational> y = {Rational(5), Rational(3)};
    std::vector<Rational> z = solve_linear_system(m, y);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == Rational(2));
    CHECK(z[1] == Rational(1));
  }
  SUBCASE("singular matrix is rejected") {
    std::vector<std::vector<Rational>> m = {
        {Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    std::vector<Rational> y = {Rational(1), Rational(2)};
    CHECK_THROWS_AS(solve_linear_system(m, y), input_error);
  }
}

TEST_CASE("blow-up family recovers per-term homomorphism counts") {
  Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<WeightedPattern> terms = quotient_set(triangle);
  std::vector<Hypergraph> patterns;
  for (const WeightedPattern& wp : terms) patterns.push_back(wp.hg);
  BasisFamily family = build_basis_family(patterns);
  REQUIRE(family.blowups.size() == patterns.size());

  Hypergraph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  std::vector<Hypergraph> instances = build_sub_to_hom_instances(g, patterns, family);
  REQUIRE(instances.size() == patterns.size());
  std::vector<Rational> y;
  for (const Hypergraph& inst : instances)
    y.push_back(Rational(count_subs(inst, triangle, kLInf)));
  std::vector<Rational> z = solve_linear_system(family.matrix, y);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    Rational hom = z[j] / terms[j].coeff;
    CAPTURE(j);
    CHECK(hom == Rational(brute_hom_count(g, patterns[j])));
  }
}

TEST_CASE("randomized simplex detection on planted instances") {
  Hypergraph tri_in(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {2, 3}});
  CHECK(color_coding_simplex(tri_in, 2, 60, 5));
  Hypergraph no_tri(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK_FALSE(color_coding_simplex(no_tri, 2, 60, 5));
}

TEST_SUITE_END();

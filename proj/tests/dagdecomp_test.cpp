#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hypercount/dagdecomp.hpp"
#include "hypercount/degeneracy.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/patterns.hpp"

using namespace hypercount;

namespace {

// Direct evaluation of the two classical failure conditions: a hypergraph
// admits a join tree exactly when no vertex subset S of size >= 3 traces a
// chordless cycle (every edge meeting S in >= 2 vertices meets it in one of
// the consecutive pairs, each pair realized) or a simplex boundary (every
// S minus one vertex realized as a trace, S itself never contained).
bool has_failing_subset(const Hypergraph& f) {
  int n = f.vertex_count();
  std::vector<int> verts(n);
  for (int v = 0; v < n; ++v) verts[v] = v;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) s.push_back(v);
    int k = static_cast<int>(s.size());
    if (k < 3) continue;

    std::vector<std::vector<int>> traces;
    bool contained = false;
    for (const Edge& e : f.edges()) {
      std::vector<int> trace;
      for (int v : s)
        if (std::binary_search(e.begin(), e.end(), v)) trace.push_back(v);
      if (static_cast<int>(trace.size()) == k) contained = true;
      if (trace.size() >= 2) traces.push_back(trace);
    }

    bool simplex = !contained;
    for (int i = 0; i < k && simplex; ++i) {
      std::vector<int> want;
      for (int j = 0; j < k; ++j)
        if (j != i) want.push_back(s[j]);
      simplex = std::find(traces.begin(), traces.end(), want) != traces.end();
    }
    if (simplex) return true;

    std::vector<int> perm(s.begin() + 1, s.end());
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> cycle = {s[0]};
      cycle.insert(cycle.end(), perm.begin(), perm.end());
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        std::vector<int> want = {cycle[i], cycle[(i + 1) % k]};
        std::sort(want.begin(), want.end());
        ok = std::find(traces.begin(), traces.end(), want) != traces.end();
      }
      for (const std::vector<int>& trace : traces) {
        if (!ok) break;
        bool consecutive = false;
        for (int i = 0; i < k && !consecutive; ++i) {
          std::vector<int> want = {cycle[i], cycle[(i + 1) % k]};
          std::sort(want.begin(), want.end());
          consecutive = trace == want;
        }
        ok = consecutive;
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("dagdecomp");

TEST_CASE("reachability hypergraph collects one edge per source") {
  Digraph d(5, {{0, 1}, {1, 2}, {3, 2}, {3, 4}});
  Hypergraph r = reachability_hypergraph(d);
  CHECK(r.vertex_count() == 5);
  CHECK(r.edge_count() == 2);
  CHECK(r.has_edge({0, 1, 2}));
  CHECK(r.has_edge({2, 3, 4}));
  CHECK_THROWS_AS(reachability_hypergraph(Digraph(2, {{0, 1}, {1, 0}})), input_error);
}

TEST_CASE("join tree detection anchors") {
  CHECK(is_alpha_acyclic(Hypergraph(3, {{0, 1, 2}, {0, 1}, {1, 2}})));
  CHECK_FALSE(is_alpha_acyclic(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(is_alpha_acyclic(Hypergraph(2, {{0, 1}})));
  CHECK(is_alpha_acyclic(Hypergraph(0, {})));
  JoinTree t = gyo_join_tree(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(t.exists);
  CHECK(t.parent.size() == 3);
  CHECK(std::count(t.parent.begin(), t.parent.end(), -1) == 1);
}

TEST_CASE("join tree detection agrees with the failing-subset conditions") {
  for (int t = 0; t < 150; ++t) {
    Hypergraph f = random_hypergraph(3 + t % 4, 1 + t % 6, 3, 1000 + t);
    CAPTURE(t);
    CHECK(is_alpha_acyclic(f) == !has_failing_subset(f));
  }
}

TEST_CASE("decompositions exist exactly when the reach family has a join tree") {
  for (int t = 0; t < 60; ++t) {
    Hypergraph h = random_hypergraph(3 + t % 4, 2 + t % 4, 3, 2000 + t);
    DegeneracyResult ord = compute_ordering(h, 1);
    Digraph sk = l_skeleton(orient(h, ord.ordering), 1);
    bool tau_one = dag_tree_decomposition(sk, 1).has_value();
    CHECK(tau_one == is_alpha_acyclic(reachability_hypergraph(sk)));
  }
}

TEST_CASE("decomposition widths on anchor patterns") {
  Hypergraph single(3, {{0, 1, 2}});
  CHECK(l_dag_treewidth(single, 0) == 1);
  CHECK(l_dag_treewidth(single, kLInf) == 1);

  Hypergraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  Hypergraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(l_dag_treewidth(c5, kLInf) == 1);
  CHECK(l_dag_treewidth(c6, kLInf) == 2);
  CHECK(l_dag_treewidth(c6, 0) == 2);

  OrientedDecomposition od = l_dag_treewidth_report(c6, kLInf);
  CHECK(od.tau == 2);
  CHECK(od.decomposition.width() == 2);
  CHECK(od.ordering.size() == 6);
}

TEST_CASE("decomposition bags cover the sources and respect connectivity") {
  Digraph sk(6, {{0, 2}, {2, 4}, {1, 2}, {3, 4}, {5, 4}});
  std::optional<DagTreeDecomposition> dec = dag_tree_decomposition(sk, 2);
  REQUIRE(dec.has_value());
  std::vector<int> seen;
  for (const std::vector<int>& bag : dec->bags)
    for (int s : bag) seen.push_back(s);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  CHECK(seen == sk.source_vertices());
}

TEST_SUITE_END();

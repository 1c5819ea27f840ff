#include "hypercount/patterns.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "hypercount/canonical.hpp"
#include "hypercount/dagdecomp.hpp"
#include "hypercount/errors.hpp"

namespace hypercount {
namespace {

constexpr int kMaxPartitionVertices = 10;
constexpr int kMaxOrientationVertices = 10;

// Calls visit(blocks) for every partition of [n], via restricted growth
// strings: position p takes any value up to one past the prefix maximum.
template <typename Visit>
void for_each_partition(int n, Visit visit) {
  if (n == 0) {
    visit(std::vector<std::vector<int>>{});
    return;
  }
  std::vector<int> rgs(n, 0);
  std::vector<std::vector<int>> blocks;
  std::function<void(int, int)> assign = [&](int pos, int max_used) {
    if (pos == n) {
      blocks.assign(max_used + 1, {});
      for (int v = 0; v < n; ++v) blocks[rgs[v]].push_back(v);
      visit(blocks);
      return;
    }
    for (int c = 0; c <= max_used + 1; ++c) {
      rgs[pos] = c;
      assign(pos + 1, std::max(max_used, c));
    }
  };
  assign(1, 0);
}

Hypergraph quotient_by(const Hypergraph& h, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(h.vertex_count(), 0);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int v : blocks[b]) block_of[v] = b;
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    Edge img;
    for (int v : e) img.push_back(block_of[v]);
    edges.push_back(std::move(img));  // ctor sorts, dedups members and edges
  }
  return Hypergraph(static_cast<int>(blocks.size()), std::move(edges));
}

bool blocks_connected(const Hypergraph& h, const std::vector<std::vector<int>>& blocks) {
  // A block is connected when its vertices link up through shared-edge
  // adjacency restricted to the block.
  for (const auto& block : blocks) {
    if (block.size() <= 1) continue;
    std::vector<int> in_block(h.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(block.size()); ++i) in_block[block[i]] = i;
    std::vector<int> comp(block.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (const auto& e : h.edges()) {
      int first = -1;
      for (int v : e) {
        if (in_block[v] < 0) continue;
        if (first < 0)
          first = in_block[v];
        else
          comp[find(in_block[v])] = find(first);
      }
    }
    int root = find(0);
    for (int i = 1; i < static_cast<int>(block.size()); ++i)
      if (find(i) != root) return false;
  }
  return true;
}

struct GroupedQuotients {
  std::vector<Hypergraph> reps;
  std::vector<Rational> coeffs;
  std::map<CanonicalKey, int> index;

  void add(const Hypergraph& q, const Rational& weight) {
    CanonicalKey key = canonical_form(q);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), static_cast<int>(reps.size()));
      reps.push_back(q);
      coeffs.push_back(weight);
    } else {
      coeffs[it->second] += weight;
    }
  }
};

}  // namespace

std::vector<OrientationClass> orientation_classes(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > kMaxOrientationVertices)
    throw guard_error("orientation enumeration limited to 10 vertices");

  std::map<std::vector<Edge>, char> seen_keys;
  std::map<CanonicalKey, int> class_index;
  std::vector<OrientationClass> classes;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Dah oriented(h, perm);
    std::vector<Edge> key = oriented.ordered_edges();
    std::sort(key.begin(), key.end());
    if (!seen_keys.emplace(std::move(key), 1).second) continue;
    CanonicalKey canon = canonical_form(oriented);
    auto it = class_index.find(canon);
    if (it == class_index.end()) {
      class_index.emplace(std::move(canon), static_cast<int>(classes.size()));
      classes.push_back({std::move(oriented), 1});
    } else {
      ++classes[it->second].size;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return classes;
}

std::vector<Dah> acyclic_orientations(const Hypergraph& h) {
  std::vector<Dah> out;
  for (auto& cls : orientation_classes(h)) out.push_back(std::move(cls.rep));
  return out;
}

std::vector<WeightedPattern> contract_set(const Hypergraph& h) {
  if (h.vertex_count() > kMaxPartitionVertices)
    throw guard_error("partition enumeration limited to 10 vertices");
  GroupedQuotients grouped;
  for_each_partition(h.vertex_count(), [&](const std::vector<std::vector<int>>& blocks) {
    if (!blocks_connected(h, blocks)) return;
    grouped.add(quotient_by(h, blocks), Rational(1));
  });
  std::vector<WeightedPattern> out;
  for (size_t i = 0; i < grouped.reps.size(); ++i)
    out.push_back({std::move(grouped.reps[i]), std::move(grouped.coeffs[i])});
  return out;
}

std::vector<WeightedPattern> quotient_set(const Hypergraph& h) {
  if (h.vertex_count() > kMaxPartitionVertices)
    throw guard_error("partition enumeration limited to 10 vertices");
  GroupedQuotients grouped;
  for_each_partition(h.vertex_count(), [&](const std::vector<std::vector<int>>& blocks) {
    Rational moebius(1);
    for (const auto& block : blocks) {
      long long f = 1;
      for (size_t i = 2; i < block.size(); ++i) f *= static_cast<long long>(i);
      moebius *= Rational((block.size() % 2 == 1 ? 1 : -1) * f);
    }
    grouped.add(quotient_by(h, blocks), moebius);
  });
  Rational aut(automorphism_count(h));
  std::vector<WeightedPattern> out;
  for (size_t i = 0; i < grouped.reps.size(); ++i) {
    if (grouped.coeffs[i] == 0) continue;
    out.push_back({std::move(grouped.reps[i]), grouped.coeffs[i] / aut});
  }
  return out;
}

PatternBasis pattern_basis(const Hypergraph& h) {
  return {contract_set(h), quotient_set(h), automorphism_count(h)};
}

std::optional<ObstructionWitness> is_obstruction(const Hypergraph& h, long long l) {
  const int n = h.vertex_count();
  for (int k = 3; k <= n; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<char> in_core(n, 0);
      for (int v : pick) in_core[v] = 1;

      bool core_ok = true;
      for (const auto& e : h.edges()) {
        int inside = 0;
        for (int v : e) inside += in_core[v];
        if (inside >= 2 && static_cast<long long>(e.size()) - inside <= l) {
          core_ok = false;
          break;
        }
      }
      if (core_ok) {
        std::vector<Vertex> rest;
        for (int v = 0; v < n; ++v)
          if (!in_core[v]) rest.push_back(v);
        InducedTrimmed trim = induced_trimmed(h, rest, {kLInf, true});
        Components comps = connected_components(trim.hg);

        std::vector<std::vector<Vertex>> components(comps.count);
        for (int v = 0; v < trim.hg.vertex_count(); ++v)
          components[comps.id[v]].push_back(trim.vertex_map[v]);
        std::vector<std::vector<int>> connectors(comps.count);
        std::vector<std::vector<char>> union_core(comps.count,
                                                  std::vector<char>(n, 0));
        for (int ei = 0; ei < h.edge_count(); ++ei) {
          const auto& e = h.edge(ei);
          int comp = -1;
          for (int v : e)
            if (!in_core[v]) {
              comp = comps.id[std::lower_bound(trim.vertex_map.begin(),
                                               trim.vertex_map.end(), v) -
                              trim.vertex_map.begin()];
              break;
            }
          if (comp < 0) continue;
          connectors[comp].push_back(ei);
          for (int v : e) union_core[comp][v] = 1;
        }

        bool cover_ok = true;
        for (int c = 0; c < comps.count && cover_ok; ++c) {
          bool all = true;
          for (int v : pick)
            if (!union_core[c][v]) all = false;
          if (all) cover_ok = false;
        }
        if (cover_ok) {
          std::vector<int> assignment(k, -1);
          for (int i = 0; i < k; ++i) {
            for (int c = 0; c < comps.count; ++c) {
              if (union_core[c][pick[i]]) continue;
              bool rest_covered = true;
              for (int j = 0; j < k && rest_covered; ++j)
                if (j != i && !union_core[c][pick[j]]) rest_covered = false;
              if (rest_covered) {
                assignment[i] = c;
                break;
              }
            }
            if (assignment[i] < 0) break;
          }
          if (std::find(assignment.begin(), assignment.end(), -1) == assignment.end()) {
            ObstructionWitness w;
            w.core.assign(pick.begin(), pick.end());
            w.components = std::move(components);
            w.connectors = std::move(connectors);
            w.assignment = std::move(assignment);
            return w;
          }
        }
      }

      // next k-combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

ItsFreeResult is_its_free(const Hypergraph& h, long long l) {
  const int n = h.vertex_count();
  if (n > 16) throw guard_error("obstruction search limited to 16 vertices");
  ItsFreeResult result;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 3) continue;
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    InducedTrimmed trim = induced_trimmed(h, s, {kLInf, true});
    auto witness = is_obstruction(trim.hg, l);
    if (witness) {
      result.its_free = false;
      result.subset = std::move(s);
      result.trimmed = std::move(trim.hg);
      result.trimmed_to_h = std::move(trim.vertex_map);
      result.witness = std::move(*witness);
      return result;
    }
  }
  return result;
}

int licl(const Hypergraph& graph) {
  if (graph.rank() > 2) throw input_error("induced cycle search needs a graph input");
  const int n = graph.vertex_count();
  if (n > 16) throw guard_error("induced cycle search limited to 16 vertices");

  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : graph.edges())
    if (e.size() == 2) arcs.emplace_back(e[0], e[1]);

  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 3 || size <= best) continue;
    std::vector<int> deg(n, 0);
    int inside = 0;
    for (auto [u, v] : arcs)
      if ((mask & (1u << u)) && (mask & (1u << v))) {
        ++deg[u];
        ++deg[v];
        ++inside;
      }
    if (inside != size) continue;
    bool all_two = true;
    for (int v = 0; v < n && all_two; ++v)
      if (mask & (1u << v)) all_two = deg[v] == 2;
    if (!all_two) continue;
    // size edges with all degrees 2: a disjoint union of cycles; connected
    // iff it is a single cycle.
    std::vector<int> comp(n, -1);
    std::vector<int> stack{std::countr_zero(mask)};
    comp[stack[0]] = 0;
    int seen = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [a, b] : arcs) {
        if (!((mask & (1u << a)) && (mask & (1u << b)))) continue;
        int other = a == u ? b : (b == u ? a : -1);
        if (other >= 0 && comp[other] < 0) {
          comp[other] = 0;
          ++seen;
          stack.push_back(other);
        }
      }
    }
    if (seen == size) best = size;
  }
  return best;
}

ClassifyReport classify(const Hypergraph& h, long long l) {
  ClassifyReport report;
  report.detail = is_its_free(h, l);
  report.its_free = report.detail.its_free;
  report.tau = l_dag_treewidth(h, l);
  if (report.its_free != (report.tau == 1))
    throw internal_error("obstruction search and treewidth disagree");
  if (l >= kLInf) {
    report.licl_value = licl(clique_completion(h));
    if (report.its_free != (*report.licl_value < 6))
      throw internal_error("induced cycle shortcut disagrees with the obstruction search");
  }
  return report;
}

}  // namespace hypercount

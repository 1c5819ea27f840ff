#include "hypercount/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "hypercount/errors.hpp"

namespace hypercount {
namespace {

constexpr int kMaxCanonicalVertices = 12;
constexpr long long kMaxLabelings = 20000000;

struct CanonProblem {
  int n = 0;
  bool ordered = false;                  // tuple edges vs set edges
  std::vector<std::vector<int>> edges;
};

// Iterated structural refinement. Class ids are assigned by sorted signature
// order, so isomorphic inputs end up with matching class partitions.
std::vector<int> refine_classes(const CanonProblem& pb) {
  std::vector<std::vector<int>> inc(pb.n);
  for (int i = 0; i < static_cast<int>(pb.edges.size()); ++i)
    for (int v : pb.edges[i]) inc[v].push_back(i);

  std::vector<int> cls(pb.n, 0);
  int count = pb.n > 0 ? 1 : 0;
  for (int round = 0; round < pb.n; ++round) {
    std::vector<std::pair<std::vector<long long>, int>> sig(pb.n);
    for (int v = 0; v < pb.n; ++v) {
      std::vector<long long> s{cls[v]};
      std::vector<std::vector<long long>> per;
      for (int ei : inc[v]) {
        const auto& e = pb.edges[ei];
        std::vector<long long> one{static_cast<long long>(e.size())};
        if (pb.ordered) {
          for (int k = 0; k < static_cast<int>(e.size()); ++k)
            if (e[k] == v) one.push_back(k);
          for (int u : e) one.push_back(cls[u]);
        } else {
          std::vector<long long> co;
          for (int u : e)
            if (u != v) co.push_back(cls[u]);
          std::sort(co.begin(), co.end());
          one.insert(one.end(), co.begin(), co.end());
        }
        per.push_back(std::move(one));
      }
      std::sort(per.begin(), per.end());
      for (const auto& p : per) {
        s.push_back(-1);
        s.insert(s.end(), p.begin(), p.end());
      }
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(pb.n, 0);
    int next_count = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++next_count;
      next[sorted[i].second] = next_count;
    }
    next_count = pb.n > 0 ? next_count + 1 : 0;
    if (next_count == count) break;
    cls = std::move(next);
    count = next_count;
  }
  return cls;
}

void encode_under(const CanonProblem& pb, const std::vector<int>& label,
                  std::vector<std::vector<long long>>& edge_buf, CanonicalKey& out) {
  edge_buf.clear();
  for (const auto& e : pb.edges) {
    std::vector<long long> enc;
    enc.reserve(e.size() + 1);
    enc.push_back(static_cast<long long>(e.size()));
    for (int v : e) enc.push_back(label[v]);
    if (!pb.ordered) std::sort(enc.begin() + 1, enc.end());
    edge_buf.push_back(std::move(enc));
  }
  std::sort(edge_buf.begin(), edge_buf.end());
  out.clear();
  out.push_back(pb.n);
  out.push_back(static_cast<long long>(pb.edges.size()));
  for (const auto& enc : edge_buf) out.insert(out.end(), enc.begin(), enc.end());
}

struct CanonResult {
  CanonicalKey key;
  long long automorphisms = 0;
};

CanonResult canonicalize(const CanonProblem& pb) {
  if (pb.n > kMaxCanonicalVertices)
    throw guard_error("canonical form limited to 12 vertices");

  std::vector<int> cls = refine_classes(pb);
  int class_count = 0;
  for (int c : cls) class_count = std::max(class_count, c + 1);

  // Vertices of class c receive the contiguous label block starting at
  // offsets[c]; candidate labelings permute vertices within each class.
  std::vector<std::vector<int>> groups(class_count);
  for (int v = 0; v < pb.n; ++v) groups[cls[v]].push_back(v);
  std::vector<int> offsets(class_count, 0);
  {
    int at = 0;
    for (int c = 0; c < class_count; ++c) {
      offsets[c] = at;
      at += static_cast<int>(groups[c].size());
    }
  }
  long long total = 1;
  for (const auto& g : groups) {
    for (size_t i = 2; i <= g.size(); ++i) {
      total *= static_cast<long long>(i);
      if (total > kMaxLabelings) throw guard_error("canonical form search exceeded budget");
    }
  }

  std::vector<int> label(pb.n, 0);
  auto apply = [&]() {
    for (int c = 0; c < class_count; ++c)
      for (size_t i = 0; i < groups[c].size(); ++i)
        label[groups[c][i]] = offsets[c] + static_cast<int>(i);
  };

  CanonResult result;
  CanonicalKey candidate;
  std::vector<std::vector<long long>> edge_buf;
  bool first = true;
  while (true) {
    apply();
    encode_under(pb, label, edge_buf, candidate);
    if (first || candidate < result.key) {
      result.key = candidate;
      result.automorphisms = 1;
      first = false;
    } else if (candidate == result.key) {
      ++result.automorphisms;
    }
    // Odometer over per-class permutations.
    int c = 0;
    while (c < class_count && !std::next_permutation(groups[c].begin(), groups[c].end())) ++c;
    if (c == class_count) break;
  }
  if (first) {  // n == 0
    result.key = {0, static_cast<long long>(pb.edges.size())};
    result.automorphisms = 1;
  }
  return result;
}

CanonProblem from_hypergraph(const Hypergraph& h) {
  return {h.vertex_count(), false, h.edges()};
}

CanonProblem from_dah(const Dah& d) {
  return {d.hypergraph().vertex_count(), true, d.ordered_edges()};
}

CanonProblem from_digraph(const Digraph& d) {
  std::vector<std::vector<int>> arcs;
  arcs.reserve(d.arc_count());
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return {d.vertex_count(), true, std::move(arcs)};
}

}  // namespace

CanonicalKey canonical_form(const Hypergraph& h) { return canonicalize(from_hypergraph(h)).key; }

CanonicalKey canonical_form(const Dah& d) { return canonicalize(from_dah(d)).key; }

CanonicalKey canonical_form(const Digraph& d) { return canonicalize(from_digraph(d)).key; }

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto arity_profile = [](const Hypergraph& h) {
    std::vector<int> p;
    for (const auto& e : h.edges()) p.push_back(static_cast<int>(e.size()));
    std::sort(p.begin(), p.end());
    return p;
  };
  if (arity_profile(a) != arity_profile(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const Dah& a, const Dah& b) {
  if (a.hypergraph().vertex_count() != b.hypergraph().vertex_count() ||
      a.hypergraph().edge_count() != b.hypergraph().edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

long long automorphism_count(const Hypergraph& h) {
  return canonicalize(from_hypergraph(h)).automorphisms;
}

}  // namespace hypercount

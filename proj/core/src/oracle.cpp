#include "hypercount/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>
#include <vector>

#include "hypercount/canonical.hpp"
#include "hypercount/errors.hpp"

namespace hypercount {
namespace {

void check_guard(int input_n, int pattern_n, const OracleGuard& guard) {
  if (pattern_n > guard.max_pattern_vertices)
    throw guard_error("reference counter limited to " +
                      std::to_string(guard.max_pattern_vertices) + " pattern vertices");
  if (input_n > guard.max_input_vertices)
    throw guard_error("reference counter limited to " +
                      std::to_string(guard.max_input_vertices) + " input vertices");
  std::int64_t maps = 1;
  for (int i = 0; i < pattern_n; ++i) {
    if (maps > guard.max_maps / std::max(input_n, 1))
      throw guard_error("reference counter map space exceeds budget");
    maps *= std::max(input_n, 1);
  }
}

// Enumerates all maps pattern -> input, counting those the predicate accepts.
std::int64_t count_maps(int input_n, int pattern_n,
                        const std::function<bool(const std::vector<int>&)>& accept) {
  if (pattern_n == 0) return 1;
  if (input_n == 0) return 0;
  std::vector<int> phi(pattern_n, 0);
  std::int64_t total = 0;
  while (true) {
    if (accept(phi)) ++total;
    int pos = pattern_n - 1;
    while (pos >= 0 && phi[pos] == input_n - 1) {
      phi[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++phi[pos];
  }
  return total;
}

bool image_is_edge(const Hypergraph& input, const Edge& e, const std::vector<int>& phi,
                   bool keep_arity) {
  Edge img;
  img.reserve(e.size());
  for (Vertex v : e) img.push_back(phi[v]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  if (keep_arity && img.size() != e.size()) return false;
  return input.has_edge(img);
}

}  // namespace

std::int64_t brute_hom_count(const Hypergraph& input, const Hypergraph& pattern,
                             const OracleGuard& guard) {
  check_guard(input.vertex_count(), pattern.vertex_count(), guard);
  return count_maps(input.vertex_count(), pattern.vertex_count(),
                    [&](const std::vector<int>& phi) {
                      for (const auto& e : pattern.edges())
                        if (!image_is_edge(input, e, phi, false)) return false;
                      return true;
                    });
}

std::int64_t brute_arity_hom_count(const Hypergraph& input, const Hypergraph& pattern,
                                   const OracleGuard& guard) {
  check_guard(input.vertex_count(), pattern.vertex_count(), guard);
  return count_maps(input.vertex_count(), pattern.vertex_count(),
                    [&](const std::vector<int>& phi) {
                      for (const auto& e : pattern.edges())
                        if (!image_is_edge(input, e, phi, true)) return false;
                      return true;
                    });
}

std::int64_t brute_sub_count(const Hypergraph& input, const Hypergraph& pattern,
                             const OracleGuard& guard) {
  check_guard(input.vertex_count(), pattern.vertex_count(), guard);
  std::int64_t injective = count_maps(
      input.vertex_count(), pattern.vertex_count(), [&](const std::vector<int>& phi) {
        std::vector<int> img = phi;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
        for (const auto& e : pattern.edges())
          if (!image_is_edge(input, e, phi, true)) return false;
        return true;
      });
  std::int64_t aut = automorphism_count(pattern);
  if (injective % aut != 0)
    throw internal_error("injective map count not divisible by symmetry count");
  return injective / aut;
}

std::int64_t brute_colorful_hom_count(const ColoredHypergraph& input,
                                      const Hypergraph& pattern,
                                      const OracleGuard& guard) {
  int h = pattern.vertex_count();
  int n = input.hg.vertex_count();
  if (h > guard.max_pattern_vertices)
    throw guard_error("reference counter limited to " +
                      std::to_string(guard.max_pattern_vertices) + " pattern vertices");
  // The distinct-color requirement prunes the map space enough that inputs
  // larger than the plain-map limit stay feasible; work is metered instead.
  std::vector<std::vector<int>> ready(h);
  for (int ei = 0; ei < pattern.edge_count(); ++ei) {
    int last = pattern.edge(ei).back();
    ready[last].push_back(ei);
  }
  std::set<int> used_colors;
  std::vector<int> phi(h, -1);
  std::int64_t total = 0;
  std::int64_t steps = 0;
  std::function<void(int)> rec = [&](int depth) {
    if (++steps > guard.max_maps)
      throw guard_error("reference counter work exceeds budget");
    if (depth == h) {
      ++total;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used_colors.count(input.color[v])) continue;
      phi[depth] = v;
      bool ok = true;
      for (int ei : ready[depth])
        if (!image_is_edge(input.hg, pattern.edge(ei), phi, false)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used_colors.insert(input.color[v]);
      rec(depth + 1);
      used_colors.erase(input.color[v]);
    }
  };
  if (h == 0) return 1;
  rec(0);
  return total;
}

std::int64_t brute_simplex_count(const Hypergraph& input, int k,
                                 const OracleGuard& guard) {
  if (k < 2) throw input_error("simplex order must be at least 2");
  int n = input.vertex_count();
  if (n > guard.max_input_vertices + 10)
    throw guard_error("reference simplex counter limited to " +
                      std::to_string(guard.max_input_vertices + 10) + " vertices");
  std::int64_t total = 0;
  std::vector<int> pick(k + 1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k + 1) {
      for (int skip = 0; skip <= k; ++skip) {
        Edge face;
        for (int i = 0; i <= k; ++i)
          if (i != skip) face.push_back(pick[i]);
        if (!input.has_edge(face)) return;
      }
      ++total;
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return total;
}

bool brute_colorful_simplex_exists(const ColoredHypergraph& input, int k,
                                   const OracleGuard& guard) {
  if (k < 2) throw input_error("simplex order must be at least 2");
  int n = input.hg.vertex_count();
  if (n > guard.max_input_vertices + 10)
    throw guard_error("reference simplex counter limited to " +
                      std::to_string(guard.max_input_vertices + 10) + " vertices");
  std::vector<int> pick(k);
  bool found = false;
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (found) return;
    if (depth == k) {
      std::set<int> colors;
      for (int i = 0; i < k; ++i) colors.insert(input.color[pick[i]]);
      if (static_cast<int>(colors.size()) != k) return;
      for (int skip = 0; skip < k; ++skip) {
        Edge face;
        for (int i = 0; i < k; ++i)
          if (i != skip) face.push_back(pick[i]);
        if (!input.hg.has_edge(face)) return;
      }
      found = true;
      return;
    }
    for (int v = start; v < n && !found; ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return found;
}

std::int64_t brute_dah_hom_count(const Dah& input, const Dah& pattern,
                                 const OracleGuard& guard) {
  check_guard(input.hypergraph().vertex_count(), pattern.hypergraph().vertex_count(),
              guard);
  std::set<std::vector<int>> input_tuples(input.ordered_edges().begin(),
                                          input.ordered_edges().end());
  return count_maps(input.hypergraph().vertex_count(),
                    pattern.hypergraph().vertex_count(),
                    [&](const std::vector<int>& phi) {
                      for (const auto& t : pattern.ordered_edges()) {
                        std::vector<int> img;
                        img.reserve(t.size());
                        for (int v : t) img.push_back(phi[v]);
                        if (!input_tuples.count(img)) return false;
                      }
                      return true;
                    });
}

}  // namespace hypercount

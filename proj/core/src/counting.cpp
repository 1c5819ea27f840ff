#include "hypercount/counting.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "hypercount/canonical.hpp"
#include "hypercount/degeneracy.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/patterns.hpp"

namespace hypercount {
namespace {

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw guard_error("intermediate count exceeds the 64-bit range");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw guard_error("intermediate count exceeds the 64-bit range");
  return r;
}

long long to_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) throw guard_error("count exceeds the 64-bit output range");
  return v.convert_to<long long>();
}

// Placement plan for the reach of a seed set: seeds first, then a BFS order
// in which every vertex has an in-neighbour placed earlier.
struct EnumPlan {
  std::vector<int> order;   // reach vertices in placement order
  std::vector<int> parent;  // order index of the BFS in-neighbour; -1 for seeds
  std::vector<int> pos_of;  // vertex -> order index, -1 outside the reach
  // Arcs between placed vertices, minus each BFS tree arc (the candidate
  // generation already guarantees it): (earlier index, earlier -> current).
  std::vector<std::vector<std::pair<int, bool>>> arc_checks;
  std::vector<int> key_positions;  // order indices sorted by vertex id
};

EnumPlan make_enum_plan(const Digraph& hsk, const std::vector<int>& seeds) {
  EnumPlan plan;
  plan.pos_of.assign(hsk.vertex_count(), -1);
  for (int s : seeds) {
    if (plan.pos_of[s] >= 0) continue;
    plan.pos_of[s] = static_cast<int>(plan.order.size());
    plan.order.push_back(s);
    plan.parent.push_back(-1);
  }
  std::vector<char> in_reach(hsk.vertex_count(), 0);
  for (int v : reach_set(hsk, seeds)) in_reach[v] = 1;
  for (std::size_t head = 0; head < plan.order.size(); ++head) {
    for (int v : hsk.out()[plan.order[head]]) {
      if (!in_reach[v] || plan.pos_of[v] >= 0) continue;
      plan.pos_of[v] = static_cast<int>(plan.order.size());
      plan.order.push_back(v);
      plan.parent.push_back(static_cast<int>(head));
    }
  }
  int t = static_cast<int>(plan.order.size());
  plan.arc_checks.resize(t);
  for (int q = 1; q < t; ++q) {
    int v = plan.order[q];
    for (int p = 0; p < q; ++p) {
      int u = plan.order[p];
      if (p != plan.parent[q] && hsk.has_arc(u, v)) plan.arc_checks[q].push_back({p, true});
      if (hsk.has_arc(v, u)) plan.arc_checks[q].push_back({p, false});
    }
  }
  plan.key_positions.resize(t);
  std::iota(plan.key_positions.begin(), plan.key_positions.end(), 0);
  std::sort(plan.key_positions.begin(), plan.key_positions.end(),
            [&](int a, int b) { return plan.order[a] < plan.order[b]; });
  return plan;
}

// Arc adjacency flattened into offset plus target arrays; iteration and
// membership tests stay inside two contiguous buffers.
struct CsrAdj {
  std::vector<int> off;
  std::vector<int> adj;
};

CsrAdj make_csr(const Digraph& g) {
  CsrAdj csr;
  int n = g.vertex_count();
  csr.off.assign(n + 1, 0);
  for (int v = 0; v < n; ++v)
    csr.off[v + 1] = csr.off[v] + static_cast<int>(g.out()[v].size());
  csr.adj.resize(csr.off[n]);
  for (int v = 0; v < n; ++v)
    std::copy(g.out()[v].begin(), g.out()[v].end(), csr.adj.begin() + csr.off[v]);
  return csr;
}

struct SkeletonView {
  const int* off;
  const int* adj;
  int n;

  bool has_arc(int u, int v) const {
    return std::binary_search(adj + off[u], adj + off[u + 1], v);
  }
};

SkeletonView view_of(const CsrAdj& csr) {
  return {csr.off.data(), csr.adj.data(), static_cast<int>(csr.off.size()) - 1};
}

// Backtracking over the plan: seed images range over all of gsk, later images
// over the out-neighbours of the BFS in-neighbour's image. accept_at(pos, img)
// may reject a placement; emit(img) fires on every completed map.
template <typename AcceptAt, typename Emit>
void run_enum(const EnumPlan& plan, const SkeletonView& gsk, AcceptAt&& accept_at,
              Emit&& emit) {
  int t = static_cast<int>(plan.order.size());
  if (t == 0) {
    std::vector<int> empty;
    emit(empty);
    return;
  }
  int n = gsk.n;
  if (n == 0) return;
  std::vector<int> img(t, -1);
  std::vector<int> choice(t, -1);
  int pos = 0;
  while (pos >= 0) {
    int y = -1;
    if (plan.parent[pos] < 0) {
      if (++choice[pos] >= n) {
        choice[pos] = -1;
        --pos;
        continue;
      }
      y = choice[pos];
    } else {
      int at = gsk.off[img[plan.parent[pos]]] + ++choice[pos];
      if (at >= gsk.off[img[plan.parent[pos]] + 1]) {
        choice[pos] = -1;
        --pos;
        continue;
      }
      y = gsk.adj[at];
    }
    bool ok = true;
    for (const auto& [p, forward] : plan.arc_checks[pos]) {
      if (forward ? !gsk.has_arc(img[p], y) : !gsk.has_arc(y, img[p])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    img[pos] = y;
    if (!accept_at(pos, img)) continue;
    if (pos + 1 == t) {
      emit(img);
      continue;
    }
    ++pos;
  }
}

// The input side of a counting run: skeleton of the oriented input plus the
// set of its ordered hyperedges for position-wise edge checks.
struct GContext {
  int n = 0;
  CsrAdj csr;
  std::unordered_set<std::vector<int>, VectorHash> tuples;
  std::vector<char> arity_present;  // indexed by tuple length
};

// With no tuple longer than two, the skeleton arcs are exactly the ordered
// pairs, so the arc checks already decide every length-two tuple.
bool arcs_decide_pairs(const GContext& ctx) {
  for (std::size_t a = 3; a < ctx.arity_present.size(); ++a)
    if (ctx.arity_present[a]) return false;
  return true;
}

GContext make_dah_context(const Dah& gd, long long l) {
  GContext ctx;
  ctx.n = gd.hypergraph().vertex_count();
  ctx.csr = make_csr(l_skeleton(gd, l));
  for (const auto& tup : gd.ordered_edges()) {
    if (tup.size() >= ctx.arity_present.size()) ctx.arity_present.resize(tup.size() + 1, 0);
    ctx.arity_present[tup.size()] = 1;
  }
  // Length-two tuples go into the set only when some longer tuple exists;
  // otherwise every consumer drops their checks in favour of the arcs.
  if (!arcs_decide_pairs(ctx)) {
    ctx.tuples.reserve(gd.ordered_edges().size() * 2);
    for (const auto& tup : gd.ordered_edges()) ctx.tuples.insert(tup);
  } else {
    for (const auto& tup : gd.ordered_edges())
      if (tup.size() != 2) ctx.tuples.insert(tup);
  }
  return ctx;
}

// Position-wise tuple matching forces equal arities, so a pattern with an
// edge arity the input lacks admits no homomorphisms at all.
bool arity_compatible(const GContext& ctx, const Hypergraph& h) {
  for (const Edge& e : h.edges())
    if (e.size() >= ctx.arity_present.size() || !ctx.arity_present[e.size()])
      return false;
  return true;
}

// For inputs of rank at most two the skeleton follows from the peeling
// positions alone: each pair points from its earlier-peeled end to the other.
// Building the adjacency directly skips the intermediate structures.
GContext make_pair_context(const Hypergraph& input, long long l) {
  DegeneracyResult deg = compute_ordering(input, l);
  const int n = input.vertex_count();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[deg.ordering[p]] = p;
  GContext ctx;
  ctx.n = n;
  ctx.arity_present.assign(3, 0);
  ctx.csr.off.assign(n + 1, 0);
  for (const Edge& e : input.edges()) {
    ctx.arity_present[e.size()] = 1;
    if (e.size() == 1) {
      ctx.tuples.insert(e);
      continue;
    }
    int head = pos[e[0]] < pos[e[1]] ? e[0] : e[1];
    ++ctx.csr.off[head + 1];
  }
  for (int v = 0; v < n; ++v) ctx.csr.off[v + 1] += ctx.csr.off[v];
  ctx.csr.adj.resize(ctx.csr.off[n]);
  std::vector<int> fill(ctx.csr.off.begin(), ctx.csr.off.end() - 1);
  for (const Edge& e : input.edges()) {
    if (e.size() != 2) continue;
    bool fwd = pos[e[0]] < pos[e[1]];
    ctx.csr.adj[fill[fwd ? e[0] : e[1]]++] = fwd ? e[1] : e[0];
  }
  for (int v = 0; v < n; ++v)
    std::sort(ctx.csr.adj.begin() + ctx.csr.off[v],
              ctx.csr.adj.begin() + ctx.csr.off[v + 1]);
  return ctx;
}

GContext make_input_context(const Hypergraph& input, int rank_cap, long long l) {
  if (input.rank() <= rank_cap) {
    if (input.rank() <= 2) return make_pair_context(input, l);
    DegeneracyResult deg = compute_ordering(input, l);
    return make_dah_context(orient(input, deg.ordering), l);
  }
  std::vector<Edge> kept;
  for (const Edge& e : input.edges())
    if (static_cast<int>(e.size()) <= rank_cap) kept.push_back(e);
  Hypergraph filtered(input.vertex_count(), std::move(kept));
  if (filtered.rank() <= 2) return make_pair_context(filtered, l);
  DegeneracyResult deg = compute_ordering(filtered, l);
  return make_dah_context(orient(filtered, deg.ordering), l);
}

// Ordered pattern edges that lie fully inside the plan's reach, as order
// indices, grouped by the last placed index so each is checked exactly once.
// skip_pairs drops the length-two tuples for inputs whose arc checks already
// decide them.
std::vector<std::vector<std::vector<int>>> make_edge_checks(const EnumPlan& plan,
                                                            const Dah& hd,
                                                            bool skip_pairs = false) {
  std::vector<std::vector<std::vector<int>>> checks(plan.order.size());
  for (const auto& tup : hd.ordered_edges()) {
    if (skip_pairs && tup.size() == 2) continue;
    std::vector<int> positions;
    positions.reserve(tup.size());
    bool inside = true;
    for (int v : tup) {
      if (plan.pos_of[v] < 0) {
        inside = false;
        break;
      }
      positions.push_back(plan.pos_of[v]);
    }
    if (!inside) continue;
    int last = *std::max_element(positions.begin(), positions.end());
    checks[last].push_back(std::move(positions));
  }
  return checks;
}

// Per-bag data of one decomposition: reach, children, the restriction domain
// shared with the parent, and the enumeration artifacts.
struct NodePlan {
  std::vector<int> reach;
  std::vector<int> children;
  std::vector<int> parent_dom;
  EnumPlan enum_plan;
  std::vector<std::vector<std::vector<int>>> edge_checks;
};

struct DecompPlan {
  std::vector<NodePlan> nodes;
  int root = -1;
};

std::vector<int> sorted_intersection(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

DecompPlan make_decomp_plan(const Dah& hd, const Digraph& hsk,
                            const DagTreeDecomposition& tree,
                            bool skip_pairs = false) {
  DecompPlan plan;
  int b = static_cast<int>(tree.bags.size());
  plan.nodes.resize(b);
  for (int i = 0; i < b; ++i) {
    if (tree.parent[i] < 0) plan.root = i;
    else plan.nodes[tree.parent[i]].children.push_back(i);
  }
  for (int i = 0; i < b; ++i) {
    NodePlan& np = plan.nodes[i];
    np.reach = reach_set(hsk, tree.bags[i]);
    np.enum_plan = make_enum_plan(hsk, tree.bags[i]);
    np.edge_checks = make_edge_checks(np.enum_plan, hd, skip_pairs);
  }
  std::vector<std::vector<int>> subtree_sources(b);
  std::function<void(int)> fill = [&](int i) {
    std::vector<int> acc = tree.bags[i];
    for (int c : plan.nodes[i].children) {
      fill(c);
      acc.insert(acc.end(), subtree_sources[c].begin(), subtree_sources[c].end());
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    subtree_sources[i] = std::move(acc);
  };
  if (plan.root >= 0) fill(plan.root);
  for (int i = 0; i < b; ++i) {
    if (tree.parent[i] < 0) continue;
    plan.nodes[i].parent_dom = sorted_intersection(
        plan.nodes[tree.parent[i]].reach, reach_set(hsk, subtree_sources[i]));
  }
  return plan;
}

// Order indices of the domain vertices, listed by ascending vertex id so the
// emitted keys come out sorted.
std::vector<int> domain_positions(const EnumPlan& plan, const std::vector<int>& dom) {
  std::vector<int> out;
  out.reserve(dom.size());
  for (int v : dom) {
    int p = v < static_cast<int>(plan.pos_of.size()) ? plan.pos_of[v] : -1;
    if (p < 0) throw internal_error("restriction domain leaves the bag reach");
    out.push_back(p);
  }
  return out;
}

// The dynamic program, streamed: computes the table of this node keyed by the
// restriction to key_dom, folding each child's table in through its shared
// restriction domain. Nothing larger than the aggregated tables is stored.
CountTable node_aggregate(const GContext& ctx, const DecompPlan& plan, int node,
                          const std::vector<int>& key_dom) {
  const NodePlan& np = plan.nodes[node];
  struct ChildAgg {
    CountTable table;
    std::vector<int> positions;
  };
  std::vector<ChildAgg> child_aggs;
  child_aggs.reserve(np.children.size());
  for (int c : np.children) {
    CountTable table = node_aggregate(ctx, plan, c, plan.nodes[c].parent_dom);
    if (table.empty()) return {};
    child_aggs.push_back(
        {std::move(table), domain_positions(np.enum_plan, plan.nodes[c].parent_dom)});
  }
  std::vector<int> key_positions = domain_positions(np.enum_plan, key_dom);
  CountTable out;
  std::vector<int> tuple_buf;
  PartialHom key_buf;
  auto accept = [&](int pos, const std::vector<int>& img) {
    for (const std::vector<int>& positions : np.edge_checks[pos]) {
      tuple_buf.clear();
      for (int p : positions) tuple_buf.push_back(img[p]);
      if (ctx.tuples.find(tuple_buf) == ctx.tuples.end()) return false;
    }
    return true;
  };
  auto emit = [&](const std::vector<int>& img) {
    long long value = 1;
    for (const ChildAgg& child : child_aggs) {
      key_buf.clear();
      for (int p : child.positions) key_buf.push_back({np.enum_plan.order[p], img[p]});
      auto it = child.table.find(key_buf);
      if (it == child.table.end()) return;
      value = checked_mul(value, it->second);
    }
    key_buf.clear();
    for (int p : key_positions) key_buf.push_back({np.enum_plan.order[p], img[p]});
    auto [it, inserted] = out.try_emplace(key_buf, value);
    if (!inserted) it->second = checked_add(it->second, value);
  };
  run_enum(np.enum_plan, view_of(ctx.csr), accept, emit);
  return out;
}

unsigned long long pack2(int a, int b) {
  return (static_cast<unsigned long long>(static_cast<unsigned>(a)) << 32) |
         static_cast<unsigned>(b);
}

using KeyedCount = std::pair<unsigned long long, long long>;

// Sorts by key: one scatter pass over high-bit buckets, then a small sort per
// bucket. Streams sequentially instead of probing, which is what makes the
// two-vertex joins scale with memory bandwidth rather than latency. The
// scratch space is reused across calls to keep the pages warm.
template <typename T, typename KeyOf>
void bucket_sort(std::vector<T>& items, std::vector<T>& scratch, KeyOf key_of) {
  auto less = [&](const T& a, const T& b) { return key_of(a) < key_of(b); };
  if (items.size() < 4096) {
    std::sort(items.begin(), items.end(), less);
    return;
  }
  unsigned long long max_key = 0;
  for (const T& it : items) max_key = std::max(max_key, key_of(it));
  int bits = 64 - std::countl_zero(max_key | 1);
  int shift = std::max(0, bits - 11);
  std::size_t buckets = (max_key >> shift) + 1;
  std::vector<int> start(buckets + 1, 0);
  for (const T& it : items) ++start[(key_of(it) >> shift) + 1];
  for (std::size_t b = 0; b < buckets; ++b) start[b + 1] += start[b];
  if (scratch.size() < items.size()) scratch.resize(items.size());
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (const T& it : items) scratch[fill[key_of(it) >> shift]++] = it;
  for (std::size_t b = 0; b < buckets; ++b)
    std::sort(scratch.begin() + start[b], scratch.begin() + start[b + 1], less);
  std::copy(scratch.begin(), scratch.begin() + items.size(), items.begin());
}

struct JoinWorkspace {
  std::vector<unsigned long long> keys;
  std::vector<unsigned long long> keys_scratch;
  std::vector<KeyedCount> pairs;
  std::vector<KeyedCount> pairs_scratch;
};

JoinWorkspace& join_workspace() {
  thread_local JoinWorkspace ws;
  return ws;
}

void sort_by_key(std::vector<KeyedCount>& items) {
  bucket_sort(items, join_workspace().pairs_scratch,
              [](const KeyedCount& it) { return it.first; });
}

void sort_keys(std::vector<unsigned long long>& items) {
  bucket_sort(items, join_workspace().keys_scratch,
              [](unsigned long long it) { return it; });
}

// Aggregated table specialized by restriction-domain width: a bare count for
// the empty domain, an input-vertex-indexed array for one vertex, a sorted
// flat array of packed keys for two, and the general table beyond that.
// Keeping the hot domains flat avoids per-lookup key allocation and keeps the
// tables compact.
struct FastTable {
  int width = 0;
  bool any = false;
  long long scalar = 0;
  std::vector<long long> dense;
  std::vector<KeyedCount> pairs;  // sorted by key, unique
  CountTable wide;

  long long pair_value(unsigned long long key) const {
    auto it = std::lower_bound(
        pairs.begin(), pairs.end(), key,
        [](const KeyedCount& a, unsigned long long k) { return a.first < k; });
    return it != pairs.end() && it->first == key ? it->second : 0;
  }
};

// Buffered emissions into a sorted unique table.
std::vector<KeyedCount> accumulate_sorted(std::vector<KeyedCount>& buffer) {
  sort_by_key(buffer);
  std::vector<KeyedCount> out;
  out.reserve(buffer.size());
  for (const KeyedCount& it : buffer) {
    if (!out.empty() && out.back().first == it.first)
      out.back().second = checked_add(out.back().second, it.second);
    else
      out.push_back(it);
  }
  return out;
}

FastTable node_aggregate_fast(const GContext& ctx, const DecompPlan& plan, int node,
                              const std::vector<int>& key_dom) {
  const NodePlan& np = plan.nodes[node];
  struct ChildAgg {
    FastTable table;
    std::vector<int> positions;
  };
  std::vector<ChildAgg> child_aggs;
  child_aggs.reserve(np.children.size());
  for (int c : np.children) {
    FastTable table = node_aggregate_fast(ctx, plan, c, plan.nodes[c].parent_dom);
    if (!table.any) return {};
    child_aggs.push_back(
        {std::move(table), domain_positions(np.enum_plan, plan.nodes[c].parent_dom)});
  }
  std::vector<int> key_positions = domain_positions(np.enum_plan, key_dom);
  FastTable out;
  out.width = static_cast<int>(key_dom.size());
  if (out.width == 1) out.dense.assign(ctx.n, 0);

  // A lone two-vertex child joined into a bare count gets deferred: emissions
  // buffer up and meet the child in one sorted merge instead of a random
  // probe each. Two-vertex output tables buffer the same way.
  int pair_child = -1;
  bool wide_child = false;
  for (std::size_t i = 0; i < child_aggs.size(); ++i) {
    if (child_aggs[i].table.width == 2)
      pair_child = pair_child < 0 ? static_cast<int>(i) : -2;
    if (child_aggs[i].table.width > 2) wide_child = true;
  }
  bool merge_join = out.width == 0 && pair_child >= 0 && !wide_child;
  // When no other child contributes a factor, every emission carries count
  // one and only the key needs buffering, at half the memory traffic.
  bool unit_emissions =
      merge_join ? child_aggs.size() == 1 : (out.width == 2 && child_aggs.empty());
  JoinWorkspace& ws = join_workspace();
  std::vector<KeyedCount>& buffer = ws.pairs;
  buffer.clear();
  std::vector<unsigned long long>& keys = ws.keys;
  keys.clear();

  std::vector<int> tuple_buf;
  PartialHom key_buf;
  auto accept = [&](int pos, const std::vector<int>& img) {
    for (const std::vector<int>& positions : np.edge_checks[pos]) {
      tuple_buf.clear();
      for (int p : positions) tuple_buf.push_back(img[p]);
      if (ctx.tuples.find(tuple_buf) == ctx.tuples.end()) return false;
    }
    return true;
  };
  auto emit = [&](const std::vector<int>& img) {
    long long value = 1;
    for (std::size_t i = 0; i < child_aggs.size(); ++i) {
      if (merge_join && static_cast<int>(i) == pair_child) continue;
      const ChildAgg& child = child_aggs[i];
      const FastTable& t = child.table;
      long long part = 0;
      switch (t.width) {
        case 0:
          part = t.scalar;
          break;
        case 1:
          part = t.dense[img[child.positions[0]]];
          break;
        case 2:
          part = t.pair_value(
              pack2(img[child.positions[0]], img[child.positions[1]]));
          break;
        default: {
          key_buf.clear();
          for (int p : child.positions)
            key_buf.push_back({np.enum_plan.order[p], img[p]});
          auto it = t.wide.find(key_buf);
          part = it == t.wide.end() ? 0 : it->second;
          break;
        }
      }
      if (part == 0) return;
      value = checked_mul(value, part);
    }
    if (merge_join) {
      const std::vector<int>& cp = child_aggs[pair_child].positions;
      unsigned long long key = pack2(img[cp[0]], img[cp[1]]);
      if (unit_emissions)
        keys.push_back(key);
      else
        buffer.emplace_back(key, value);
      return;
    }
    if (out.width == 2) {
      unsigned long long key = pack2(img[key_positions[0]], img[key_positions[1]]);
      if (unit_emissions)
        keys.push_back(key);
      else
        buffer.emplace_back(key, value);
      return;
    }
    out.any = true;
    switch (out.width) {
      case 0:
        out.scalar = checked_add(out.scalar, value);
        break;
      case 1: {
        long long& slot = out.dense[img[key_positions[0]]];
        slot = checked_add(slot, value);
        break;
      }
      default: {
        key_buf.clear();
        for (int p : key_positions) key_buf.push_back({np.enum_plan.order[p], img[p]});
        auto [it, inserted] = out.wide.try_emplace(key_buf, value);
        if (!inserted) it->second = checked_add(it->second, value);
        break;
      }
    }
  };
  run_enum(np.enum_plan, view_of(ctx.csr), accept, emit);

  if (merge_join) {
    const std::vector<KeyedCount>& child = child_aggs[pair_child].table.pairs;
    if (unit_emissions) {
      sort_keys(keys);
      std::size_t j = 0;
      for (std::size_t i = 0; i < keys.size() && j < child.size();) {
        std::size_t run = i + 1;
        while (run < keys.size() && keys[run] == keys[i]) ++run;
        while (j < child.size() && child[j].first < keys[i]) ++j;
        if (j < child.size() && child[j].first == keys[i]) {
          out.any = true;
          out.scalar = checked_add(
              out.scalar,
              checked_mul(static_cast<long long>(run - i), child[j].second));
        }
        i = run;
      }
    } else {
      sort_by_key(buffer);
      std::size_t j = 0;
      for (const KeyedCount& it : buffer) {
        while (j < child.size() && child[j].first < it.first) ++j;
        if (j == child.size()) break;
        if (child[j].first != it.first) continue;
        out.any = true;
        out.scalar = checked_add(out.scalar, checked_mul(it.second, child[j].second));
      }
    }
  } else if (out.width == 2) {
    if (unit_emissions) {
      sort_keys(keys);
      out.pairs.reserve(keys.size());
      for (std::size_t i = 0; i < keys.size();) {
        std::size_t run = i + 1;
        while (run < keys.size() && keys[run] == keys[i]) ++run;
        out.pairs.emplace_back(keys[i], static_cast<long long>(run - i));
        i = run;
      }
    } else {
      out.pairs = accumulate_sorted(buffer);
    }
    out.any = !out.pairs.empty();
  }
  return out;
}

// Decompositions keyed by the exact skeleton encoding; identical pattern
// skeletons recur heavily across terms and calls.
const DagTreeDecomposition& cached_decomposition(const Digraph& hsk) {
  static std::mutex mutex;
  static std::map<std::vector<int>, DagTreeDecomposition> cache;
  std::vector<int> key;
  key.reserve(2 + hsk.arcs().size() * 2);
  key.push_back(hsk.vertex_count());
  for (const auto& [u, v] : hsk.arcs()) {
    key.push_back(u);
    key.push_back(v);
  }
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    int sources = static_cast<int>(hsk.source_vertices().size());
    std::optional<DagTreeDecomposition> found;
    for (int tau = 1; tau <= std::max(1, sources) && !found; ++tau)
      found = dag_tree_decomposition(hsk, tau);
    if (!found) throw internal_error("acyclic skeleton admits no decomposition");
    it = cache.emplace(std::move(key), std::move(*found)).first;
  }
  return it->second;
}

long long count_dah_homs_ctx(const Dah& hd, const GContext& ctx, long long l,
                             int* tau_out) {
  if (tau_out) *tau_out = 1;
  if (hd.hypergraph().vertex_count() == 0) return 1;
  Digraph hsk = l_skeleton(hd, l);
  const DagTreeDecomposition& tree = cached_decomposition(hsk);
  if (tau_out) *tau_out = tree.width();
  DecompPlan plan = make_decomp_plan(hd, hsk, tree, arcs_decide_pairs(ctx));
  if (plan.root < 0) throw internal_error("decomposition has no root");
  FastTable total = node_aggregate_fast(ctx, plan, plan.root, {});
  return total.any ? total.scalar : 0;
}

const std::vector<WeightedPattern>& cached_contract_set(const Hypergraph& h) {
  static std::mutex mutex;
  static std::map<CanonicalKey, std::vector<WeightedPattern>> cache;
  CanonicalKey key = canonical_form(h);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), contract_set(h)).first;
  return it->second;
}

const std::vector<WeightedPattern>& cached_quotient_set(const Hypergraph& h) {
  static std::mutex mutex;
  static std::map<CanonicalKey, std::vector<WeightedPattern>> cache;
  CanonicalKey key = canonical_form(h);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), quotient_set(h)).first;
  return it->second;
}

const std::vector<OrientationClass>& cached_orientation_classes(const Hypergraph& h) {
  static std::mutex mutex;
  static std::map<CanonicalKey, std::vector<OrientationClass>> cache;
  CanonicalKey key = canonical_form(h);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), orientation_classes(h)).first;
  return it->second;
}

// Runs fn(0..count) across the given number of threads, propagating the first
// failure after all workers stop.
void run_tasks(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::mutex err_mutex;
  std::exception_ptr err;
  auto worker = [&]() {
    while (!failed.load()) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

// Hom(input, pattern) against a prepared input context: the weighted sum over
// the contract set, each quotient expanded into its orientation classes.
BigInt hom_count_ctx(const GContext& ctx, const Hypergraph& pattern, long long l,
                     int threads, int* max_tau) {
  const std::vector<WeightedPattern>& contract = cached_contract_set(pattern);
  struct Task {
    const Dah* rep = nullptr;
    long long size = 0;
    int term = 0;
  };
  std::vector<Task> tasks;
  for (int t = 0; t < static_cast<int>(contract.size()); ++t) {
    if (!arity_compatible(ctx, contract[t].hg)) continue;
    for (const OrientationClass& cls : cached_orientation_classes(contract[t].hg))
      tasks.push_back({&cls.rep, cls.size, t});
  }
  std::vector<long long> counts(tasks.size(), 0);
  std::vector<int> taus(tasks.size(), 1);
  run_tasks(static_cast<int>(tasks.size()), threads, [&](int i) {
    counts[i] = count_dah_homs_ctx(*tasks[i].rep, ctx, l, &taus[i]);
  });
  std::vector<BigInt> term_totals(contract.size(), BigInt(0));
  int tau_seen = 1;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    term_totals[tasks[i].term] += BigInt(counts[i]) * tasks[i].size;
    tau_seen = std::max(tau_seen, taus[i]);
  }
  if (max_tau) *max_tau = tau_seen;
  Rational total = 0;
  for (std::size_t t = 0; t < contract.size(); ++t)
    total += contract[t].coeff * Rational(term_totals[t]);
  if (denominator(total) != 1)
    throw internal_error("homomorphism aggregation is not an integer");
  return numerator(total);
}

}  // namespace

void enumerate_skeleton_homs(
    const Digraph& hsk, const std::vector<int>& seeds, const Digraph& gsk,
    const std::function<void(const PartialHom&)>& visit) {
  EnumPlan plan = make_enum_plan(hsk, seeds);
  CsrAdj csr = make_csr(gsk);
  PartialHom out;
  out.reserve(plan.order.size());
  run_enum(
      plan, view_of(csr), [](int, const std::vector<int>&) { return true; },
      [&](const std::vector<int>& img) {
        out.clear();
        for (int p : plan.key_positions) out.push_back({plan.order[p], img[p]});
        visit(out);
      });
}

std::vector<PartialHom> enumerate_skeleton_homs(const Digraph& hsk,
                                                const std::vector<int>& seeds,
                                                const Digraph& gsk) {
  std::vector<PartialHom> out;
  enumerate_skeleton_homs(hsk, seeds, gsk,
                          [&](const PartialHom& phi) { out.push_back(phi); });
  return out;
}

std::vector<PartialHom> filtered_homs(const Dah& hd, const std::vector<int>& bag,
                                      const Dah& gd, long long l) {
  GContext ctx = make_dah_context(gd, l);
  Digraph hsk = l_skeleton(hd, l);
  EnumPlan plan = make_enum_plan(hsk, bag);
  std::vector<std::vector<std::vector<int>>> checks =
      make_edge_checks(plan, hd, arcs_decide_pairs(ctx));
  std::vector<PartialHom> out;
  std::vector<int> tuple_buf;
  run_enum(
      plan, view_of(ctx.csr),
      [&](int pos, const std::vector<int>& img) {
        for (const std::vector<int>& positions : checks[pos]) {
          tuple_buf.clear();
          for (int p : positions) tuple_buf.push_back(img[p]);
          if (ctx.tuples.find(tuple_buf) == ctx.tuples.end()) return false;
        }
        return true;
      },
      [&](const std::vector<int>& img) {
        PartialHom phi;
        phi.reserve(plan.order.size());
        for (int p : plan.key_positions) phi.push_back({plan.order[p], img[p]});
        out.push_back(std::move(phi));
      });
  return out;
}

CountTable homcount_l(const Dah& hd, const Dah& gd, int bag,
                      const DagTreeDecomposition& tree, long long l) {
  if (bag < 0 || bag >= static_cast<int>(tree.bags.size()))
    throw input_error("bag index is outside the decomposition");
  GContext ctx = make_dah_context(gd, l);
  Digraph hsk = l_skeleton(hd, l);
  DecompPlan plan = make_decomp_plan(hd, hsk, tree, arcs_decide_pairs(ctx));
  return node_aggregate(ctx, plan, bag, plan.nodes[bag].reach);
}

long long count_dah_homs(const Dah& hd, const Dah& gd, long long l) {
  GContext ctx = make_dah_context(gd, l);
  return count_dah_homs_ctx(hd, ctx, l, nullptr);
}

long long count_homs(const Hypergraph& input, const Hypergraph& pattern,
                     long long l, int threads) {
  if (threads < 1) threads = 1;
  if (pattern.vertex_count() == 0) return 1;
  GContext ctx = make_input_context(input, pattern.rank(), l);
  return to_int64(hom_count_ctx(ctx, pattern, l, threads, nullptr));
}

long long count_subs(const Hypergraph& input, const Hypergraph& pattern,
                     long long l, int threads) {
  if (threads < 1) threads = 1;
  const std::vector<WeightedPattern>& quotients = cached_quotient_set(pattern);
  std::map<int, GContext> ctx_by_rank;
  Rational total = 0;
  for (const WeightedPattern& wp : quotients) {
    int cap = wp.hg.rank();
    auto it = ctx_by_rank.find(cap);
    if (it == ctx_by_rank.end())
      it = ctx_by_rank.emplace(cap, make_input_context(input, cap, l)).first;
    int tau = 1;
    BigInt homs = hom_count_ctx(it->second, wp.hg, l, threads, &tau);
    if (tau > 1)
      std::clog << "note: a quotient term required a width-" << tau
                << " decomposition; the near-linear guarantee needs width 1\n";
    total += wp.coeff * Rational(homs);
  }
  if (denominator(total) != 1 || total < 0)
    throw internal_error("subhypergraph aggregation is not a non-negative integer");
  return to_int64(numerator(total));
}

}  // namespace hypercount

#include "hypercount/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "hypercount/errors.hpp"
#include "hypercount/hashing.hpp"

namespace hypercount {
namespace {

constexpr unsigned long long kEmptySlot = ~0ULL;

// Minimum-degree queue with lowest-vertex-index tie-break. Vertices of equal
// degree share a bitset level, so extraction is a first-set-bit scan; degrees
// at or above the level cap share one overflow level that is rescanned only
// when every lower level is empty.
class MinDegreeQueue {
 public:
  MinDegreeQueue(int n, int levels)
      : n_(n), levels_(levels), words_((n + 63) / 64),
        bits_((levels + 1) * words_, 0), hint_(levels + 1, 0) {}

  void insert(int v, int degree) { set_bit(level_of(degree), v); }

  void change(int v, int old_degree, int new_degree) {
    int from = level_of(old_degree);
    int to = level_of(new_degree);
    if (from == to) return;
    clear_bit(from, v);
    set_bit(to, v);
    if (to < min_level_) min_level_ = to;
  }

  void erase(int v, int degree) { clear_bit(level_of(degree), v); }

  // Lowest-index vertex of minimum degree; degrees parked in the overflow
  // level are compared explicitly through the caller-supplied array.
  int extract_min(const std::vector<int>& degree) {
    while (min_level_ < levels_) {
      int v = first_set(min_level_);
      if (v >= 0) {
        clear_bit(min_level_, v);
        return v;
      }
      ++min_level_;
    }
    int best = -1;
    for (int w = hint_[levels_]; w < words_; ++w) {
      unsigned long long word = bits_[levels_ * words_ + w];
      while (word) {
        int v = w * 64 + std::countr_zero(word);
        word &= word - 1;
        if (best < 0 || degree[v] < degree[best]) best = v;
      }
    }
    if (best < 0) throw internal_error("degree queue is empty");
    clear_bit(levels_, best);
    return best;
  }

 private:
  int level_of(int degree) const { return degree < levels_ ? degree : levels_; }

  void set_bit(int level, int v) {
    bits_[level * words_ + (v >> 6)] |= 1ULL << (v & 63);
    if ((v >> 6) < hint_[level]) hint_[level] = v >> 6;
  }

  void clear_bit(int level, int v) {
    bits_[level * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  }

  int first_set(int level) {
    for (int w = hint_[level]; w < words_; ++w) {
      unsigned long long word = bits_[level * words_ + w];
      if (word) {
        hint_[level] = w;
        return w * 64 + std::countr_zero(word);
      }
    }
    hint_[level] = words_;
    return -1;
  }

  int n_;
  int levels_;
  int words_;
  std::vector<unsigned long long> bits_;
  std::vector<int> hint_;
  int min_level_ = 0;
};

}  // namespace

DegeneracyResult compute_ordering(const Hypergraph& g, long long l) {
  const int n = g.vertex_count();
  const int m = g.edge_count();

  // Flat live-member storage: each edge owns a sorted prefix of its original
  // span; removals shift the tail left, so no per-event allocation happens.
  std::vector<int> off(m + 1, 0);
  for (int e = 0; e < m; ++e)
    off[e + 1] = off[e] + static_cast<int>(g.edge(e).size());
  std::vector<int> mem(off[m]);
  std::vector<int> len(m);
  for (int e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    len[e] = static_cast<int>(edge.size());
    std::copy(edge.begin(), edge.end(), mem.begin() + off[e]);
  }

  // Flat incidence: for each vertex, the edges that contain it.
  std::vector<int> inc_off(n + 1, 0);
  for (int i = 0; i < off[m]; ++i) ++inc_off[mem[i] + 1];
  for (int v = 0; v < n; ++v) inc_off[v + 1] += inc_off[v];
  std::vector<int> inc(off[m]);
  {
    std::vector<int> fill(inc_off.begin(), inc_off.end() - 1);
    for (int e = 0; e < m; ++e)
      for (int i = off[e]; i < off[e + 1]; ++i) inc[fill[mem[i]]++] = e;
  }

  std::vector<long long> counter(m, 0);
  std::vector<char> alive(m, 1);

  // Trimmed-key registries: singletons in a flat per-vertex slot, arities two
  // and three packed into 64-bit open addressing when ids fit 20 bits, the
  // rest in the general map. Distinct edges of arity two stay distinct until
  // they shrink to singletons, so for rank-two inputs the singleton slots
  // suffice on their own.
  const bool multi_keys = g.rank() >= 3;
  const bool packable = n < (1 << 20);
  std::vector<int> rep_single(n, -1);
  std::vector<unsigned long long> packed_keys;
  std::vector<int> packed_edges;
  std::size_t packed_mask = 0;
  if (multi_keys && packable) {
    std::size_t cap = 16;
    while (cap < static_cast<std::size_t>(m) * 2 + 16) cap <<= 1;
    packed_keys.assign(cap, kEmptySlot);
    packed_edges.assign(cap, -1);
    packed_mask = cap - 1;
  }
  auto packed_hash = [](unsigned long long k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  };
  auto pack_key = [&](const int* v, int length) {
    unsigned long long key = length == 3 ? 1ULL << 63 : 0;
    for (int i = 0; i < length; ++i)
      key = (key << 20) | static_cast<unsigned long long>(v[i] + 1);
    return key;
  };
  // Linear probing with backward-shift deletion keeps probes short without
  // tombstones.
  auto packed_erase = [&](unsigned long long key) {
    std::size_t at = packed_hash(key) & packed_mask;
    while (packed_keys[at] != key) at = (at + 1) & packed_mask;
    std::size_t hole = at;
    while (true) {
      at = (at + 1) & packed_mask;
      if (packed_keys[at] == kEmptySlot) break;
      std::size_t home = packed_hash(packed_keys[at]) & packed_mask;
      bool movable = hole <= at ? (home <= hole || home > at) : (home <= hole && home > at);
      if (movable) {
        packed_keys[hole] = packed_keys[at];
        packed_edges[hole] = packed_edges[at];
        hole = at;
      }
    }
    packed_keys[hole] = kEmptySlot;
  };
  auto packed_find_or_insert = [&](unsigned long long key, int e, bool* fresh) {
    std::size_t at = packed_hash(key) & packed_mask;
    while (true) {
      if (packed_keys[at] == kEmptySlot) {
        packed_keys[at] = key;
        packed_edges[at] = e;
        *fresh = true;
        return &packed_edges[at];
      }
      if (packed_keys[at] == key) {
        *fresh = false;
        return &packed_edges[at];
      }
      at = (at + 1) & packed_mask;
    }
  };
  std::unordered_map<std::vector<int>, int, VectorHash> wide_reps;
  std::vector<int> key_buf;

  auto use_packed = [&](int length) { return packable && length >= 2 && length <= 3; };
  auto register_edge = [&](int e) -> int* {
    int length = len[e];
    const int* v = mem.data() + off[e];
    if (length == 1) {
      if (rep_single[v[0]] < 0) {
        rep_single[v[0]] = e;
        return nullptr;
      }
      return &rep_single[v[0]];
    }
    if (!multi_keys) return nullptr;
    bool fresh = false;
    if (use_packed(length)) {
      int* slot = packed_find_or_insert(pack_key(v, length), e, &fresh);
      return fresh ? nullptr : slot;
    }
    key_buf.assign(v, v + length);
    auto [it, inserted] = wide_reps.try_emplace(key_buf, e);
    return inserted ? nullptr : &it->second;
  };
  auto unregister_edge = [&](int e) {
    int length = len[e];
    const int* v = mem.data() + off[e];
    if (length == 1) {
      rep_single[v[0]] = -1;
      return;
    }
    if (!multi_keys) return;
    if (use_packed(length)) {
      packed_erase(pack_key(v, length));
      return;
    }
    key_buf.assign(v, v + length);
    wide_reps.erase(key_buf);
  };

  for (int e = 0; e < m; ++e) register_edge(e);

  std::vector<int> degree(n, 0);
  for (int i = 0; i < off[m]; ++i) ++degree[mem[i]];

  MinDegreeQueue queue(n, 256);
  for (int v = 0; v < n; ++v) queue.insert(v, degree[v]);

  std::vector<char> deleted(n, 0);
  auto drop_degree = [&](int v) {
    if (deleted[v]) {
      --degree[v];
      return;
    }
    queue.change(v, degree[v], degree[v] - 1);
    --degree[v];
  };
  // Kills a trimmed edge; vertices still present lose one degree each.
  auto kill = [&](int e) {
    alive[e] = 0;
    for (int i = 0; i < len[e]; ++i) drop_degree(mem[off[e] + i]);
  };

  DegeneracyResult result;
  result.ordering.reserve(n);

  for (int step = 0; step < n; ++step) {
    int v = queue.extract_min(degree);
    result.kappa_l = std::max(result.kappa_l, degree[v]);
    result.ordering.push_back(v);
    deleted[v] = 1;

    for (int ii = inc_off[v]; ii < inc_off[v + 1]; ++ii) {
      int e = inc[ii];
      if (!alive[e]) continue;
      unregister_edge(e);
      int* span = mem.data() + off[e];
      int at = static_cast<int>(std::find(span, span + len[e], v) - span);
      for (int i = at + 1; i < len[e]; ++i) span[i - 1] = span[i];
      --len[e];
      ++counter[e];
      if (counter[e] > l || len[e] == 0) {
        kill(e);
        continue;
      }
      int* occupant = register_edge(e);
      if (occupant == nullptr) continue;
      // Same trimmed set: the copy with fewer deletions survives; both cover
      // the same vertices, so they jointly shed one degree unit.
      int f = *occupant;
      bool e_wins = counter[e] < counter[f] || (counter[e] == counter[f] && e < f);
      *occupant = e_wins ? e : f;
      kill(e_wins ? f : e);
    }
  }

  if (g.rank() <= 2) {
    // Pair edges carry exactly one arc each, from the earlier-peeled end, and
    // distinct edges give distinct arcs; no skeleton construction is needed.
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[result.ordering[p]] = p;
    std::vector<int> outdeg(n, 0);
    for (int e = 0; e < m; ++e) {
      const Edge& edge = g.edge(e);
      if (edge.size() != 2) continue;
      int head = pos[edge[0]] < pos[edge[1]] ? edge[0] : edge[1];
      result.max_l_outdegree = std::max(result.max_l_outdegree, ++outdeg[head]);
    }
    return result;
  }
  Dah oriented = orient(g, result.ordering);
  result.max_l_outdegree = max_l_outdegree(oriented, l);
  return result;
}

Dah orient(const Hypergraph& g, const std::vector<int>& ordering) {
  return Dah(g, ordering);
}

int max_l_outdegree(const Dah& d, long long l) {
  return l_skeleton(d, l).max_out_degree();
}

int brute_degeneracy(const Hypergraph& g, long long l) {
  const int n = g.vertex_count();
  if (n > 16) throw guard_error("exhaustive degeneracy limited to 16 vertices");
  int kappa = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    InducedTrimmed sub = induced_trimmed(g, s, {l, true});
    auto degs = sub.hg.degrees();
    int min_deg = *std::min_element(degs.begin(), degs.end());
    kappa = std::max(kappa, min_deg);
  }
  return kappa;
}

}  // namespace hypercount

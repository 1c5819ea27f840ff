#include "hypercount/reductions.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <string>

#include "hypercount/counting.hpp"
#include "hypercount/degeneracy.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/oracle.hpp"

namespace hypercount {
namespace {

constexpr int kMaxPaletteBits = 20;
constexpr int kMaxTensorCells = 20;
constexpr long long kMaxTensorEdges = 5000000;
constexpr int kMaxBasisExtraWeight = 4;
constexpr int kMaxBlowupVertices = 20;

long long to_int64_checked(const BigInt& v, const char* what) {
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v > hi) throw guard_error(std::string(what) + " exceeds the 64-bit range");
  return v.convert_to<long long>();
}

}  // namespace

long long colorful_hom_count(const ColoredHypergraph& input,
                             const Hypergraph& pattern, long long l,
                             const HomCounter& counter) {
  int h = pattern.vertex_count();
  std::vector<int> palette = input.color;
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  if (static_cast<int>(palette.size()) != h)
    throw input_error("palette size must equal the pattern vertex count");
  if (h > kMaxPaletteBits) throw guard_error("palette is too large to sweep");
  std::vector<int> color_bit(input.color.size());
  for (std::size_t v = 0; v < input.color.size(); ++v)
    color_bit[v] = static_cast<int>(
        std::lower_bound(palette.begin(), palette.end(), input.color[v]) -
        palette.begin());
  BigInt total = 0;
  for (unsigned mask = 0; mask < (1u << h); ++mask) {
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < color_bit.size(); ++v)
      if (mask >> color_bit[v] & 1u) keep.push_back(static_cast<Vertex>(v));
    InducedTrimmed sub = induced_trimmed(input.hg, keep, {0, true});
    long long homs = counter(sub.hg, pattern, l);
    int missing = h - std::popcount(mask);
    if (missing % 2 == 0) total += homs;
    else total -= homs;
  }
  if (total < 0) throw internal_error("colorful aggregation came out negative");
  return to_int64_checked(total, "colorful count");
}

Hypergraph build_simplex(int k) {
  if (k < 2) throw input_error("simplex order must be at least 2");
  int n = k + 1;
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int skip = 0; skip < n; ++skip) {
    Edge e;
    e.reserve(k);
    for (int v = 0; v < n; ++v)
      if (v != skip) e.push_back(v);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

GadgetSpec make_gadget_spec(const Hypergraph& pattern, long long l) {
  ItsFreeResult found = is_its_free(pattern, l);
  if (found.its_free)
    throw input_error("pattern admits no hardness witness at this level");
  const ObstructionWitness& w = found.witness;
  int k = static_cast<int>(w.core.size());
  GadgetSpec spec;
  spec.pattern = pattern;
  spec.core.reserve(k);
  for (int c : w.core) spec.core.push_back(found.trimmed_to_h[c]);

  // Assign every component of the witness to a core vertex: certifying
  // components to their own, the rest to any core vertex their connector
  // edges avoid (one exists, else the witness would be invalid).
  int comp_count = static_cast<int>(w.components.size());
  std::vector<int> comp_group(comp_count, -1);
  for (int i = 0; i < k; ++i) comp_group[w.assignment[i]] = i;
  for (int d = 0; d < comp_count; ++d) {
    if (comp_group[d] >= 0) continue;
    std::vector<char> covered(k, 0);
    for (int ei : w.connectors[d])
      for (int v : found.trimmed.edge(ei))
        for (int i = 0; i < k; ++i)
          if (w.core[i] == v) covered[i] = 1;
    int pick = -1;
    for (int i = 0; i < k && pick < 0; ++i)
      if (!covered[i]) pick = i;
    if (pick < 0) throw internal_error("witness component covers the whole core");
    comp_group[d] = pick;
  }
  spec.groups.assign(k, {});
  std::vector<int> group_of(pattern.vertex_count(), -1);  // non-core witness vertices
  std::vector<int> core_index(pattern.vertex_count(), -1);
  for (int i = 0; i < k; ++i) core_index[spec.core[i]] = i;
  for (int d = 0; d < comp_count; ++d)
    for (int v : w.components[d]) {
      int original = found.trimmed_to_h[v];
      group_of[original] = comp_group[d];
      spec.groups[comp_group[d]].push_back(original);
    }
  for (auto& group : spec.groups) std::sort(group.begin(), group.end());

  std::vector<char> in_witness(pattern.vertex_count(), 0);
  for (int v : found.subset) in_witness[v] = 1;
  for (int v = 0; v < pattern.vertex_count(); ++v)
    if (!in_witness[v]) spec.external_vertices.push_back(v);

  // Route each pattern edge: fully outside the witness, or into the group of
  // the component its trace touches; traces that only meet the core are
  // single vertices and go to any other core vertex's group.
  spec.group_edges.assign(k, {});
  for (int ei = 0; ei < pattern.edge_count(); ++ei) {
    const Edge& e = pattern.edge(ei);
    int group = -1;
    bool touches_witness = false;
    int core_trace = -1;
    for (int v : e) {
      if (!in_witness[v]) continue;
      touches_witness = true;
      if (core_index[v] >= 0) {
        core_trace = core_index[v];
        continue;
      }
      if (group >= 0 && group_of[v] != group)
        throw internal_error("pattern edge spans two witness groups");
      group = group_of[v];
    }
    if (!touches_witness) {
      spec.external_edges.push_back(ei);
      continue;
    }
    if (group < 0) {
      for (int i = 0; i < k && group < 0; ++i)
        if (i != core_trace) group = i;
    }
    spec.group_edges[group].push_back(ei);
  }

  spec.pi.assign(pattern.vertex_count(), -1);
  for (int i = 0; i < k; ++i) spec.pi[spec.core[i]] = i;
  int next = k;
  for (int v = 0; v < pattern.vertex_count(); ++v)
    if (spec.pi[v] < 0) spec.pi[v] = next++;
  return spec;
}

ColoredHypergraph build_gadget(const ColoredHypergraph& input,
                               const GadgetSpec& spec, long long) {
  int k = static_cast<int>(spec.core.size());
  for (const Edge& e : input.hg.edges())
    if (static_cast<int>(e.size()) != k - 1)
      throw input_error("gadget input edges must have arity one below the core size");
  for (int c : input.color)
    if (c < 0 || c >= k) throw input_error("gadget input color outside the core palette");

  std::vector<int> out_color = input.color;
  std::vector<Edge> out_edges;
  auto fresh = [&](int color) {
    out_color.push_back(color);
    return static_cast<int>(out_color.size()) - 1;
  };

  std::vector<int> ext_id(spec.pattern.vertex_count(), -1);
  for (int v : spec.external_vertices) ext_id[v] = fresh(spec.pi[v]);
  for (int ei : spec.external_edges) {
    Edge e2;
    for (int v : spec.pattern.edge(ei)) e2.push_back(ext_id[v]);
    out_edges.push_back(std::move(e2));
  }

  std::vector<int> copy_id(spec.pattern.vertex_count(), -1);
  for (const Edge& e : input.hg.edges()) {
    std::vector<int> y(k, -1);
    bool colorful = true;
    for (int v : e) {
      int c = input.color[v];
      if (y[c] >= 0) {
        colorful = false;
        break;
      }
      y[c] = v;
    }
    if (!colorful) continue;
    int missing = -1;
    for (int j = 0; j < k; ++j)
      if (y[j] < 0) missing = j;
    std::fill(copy_id.begin(), copy_id.end(), -1);
    for (int v : spec.groups[missing]) copy_id[v] = fresh(spec.pi[v]);
    for (int ei : spec.group_edges[missing]) {
      Edge e2;
      for (int v : spec.pattern.edge(ei)) {
        if (spec.pi[v] < k) {
          if (y[spec.pi[v]] < 0)
            throw internal_error("gadget edge needs the missing color");
          e2.push_back(y[spec.pi[v]]);
        }
        else if (copy_id[v] >= 0) e2.push_back(copy_id[v]);
        else if (ext_id[v] >= 0) e2.push_back(ext_id[v]);
        else throw internal_error("gadget edge leaves its group");
      }
      out_edges.push_back(std::move(e2));
    }
  }
  return {Hypergraph(static_cast<int>(out_color.size()), std::move(out_edges)),
          std::move(out_color)};
}

long long gadget_degeneracy_check(const ColoredHypergraph& gadget, long long l) {
  return compute_ordering(gadget.hg, l).kappa_l;
}

Hypergraph tensor_product(const Hypergraph& a, const Hypergraph& b) {
  int nb = b.vertex_count();
  long long cell_total = static_cast<long long>(a.vertex_count()) * nb;
  if (cell_total > 4096) throw guard_error("tensor product vertex set is too large");
  std::vector<Edge> edges;
  for (const Edge& ea : a.edges()) {
    for (const Edge& eb : b.edges()) {
      int cells = static_cast<int>(ea.size() * eb.size());
      if (cells > kMaxTensorCells)
        throw guard_error("tensor edge pair spans too many cells");
      int wa = static_cast<int>(ea.size());
      int wb = static_cast<int>(eb.size());
      for (unsigned mask = 1; mask < (1u << cells); ++mask) {
        unsigned seen_a = 0;
        unsigned seen_b = 0;
        for (int c = 0; c < cells; ++c)
          if (mask >> c & 1u) {
            seen_a |= 1u << (c / wb);
            seen_b |= 1u << (c % wb);
          }
        if (seen_a != (1u << wa) - 1 || seen_b != (1u << wb) - 1) continue;
        Edge e;
        for (int c = 0; c < cells; ++c)
          if (mask >> c & 1u) e.push_back(ea[c / wb] * nb + eb[c % wb]);
        edges.push_back(std::move(e));
        if (static_cast<long long>(edges.size()) > kMaxTensorEdges)
          throw guard_error("tensor product has too many hyperedges");
      }
    }
  }
  return Hypergraph(static_cast<int>(cell_total), std::move(edges));
}

std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> rhs) {
  int n = static_cast<int>(m.size());
  if (static_cast<int>(rhs.size()) != n)
    throw input_error("system matrix and right-hand side sizes disagree");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw input_error("system matrix must be square");
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n && pivot < 0; ++r)
      if (m[r][col] != 0) pivot = r;
    if (pivot < 0) throw input_error("system matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (int r = n - 1; r >= 0; --r) {
    Rational acc = rhs[r];
    for (int c = r + 1; c < n; ++c) acc -= m[r][c] * x[c];
    x[r] = acc / m[r][r];
  }
  return x;
}

namespace {

bool invertible(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n && pivot < 0; ++r)
      if (m[r][col] != 0) pivot = r;
    if (pivot < 0) return false;
    std::swap(m[pivot], m[col]);
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return true;
}

Hypergraph blow_up(const Hypergraph& h, const std::vector<int>& weights) {
  std::vector<int> offset(h.vertex_count() + 1, 0);
  for (int v = 0; v < h.vertex_count(); ++v) offset[v + 1] = offset[v] + weights[v];
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    std::vector<int> pick(e.size(), 0);
    while (true) {
      Edge copy;
      copy.reserve(e.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        copy.push_back(offset[e[i]] + pick[i]);
      edges.push_back(std::move(copy));
      int pos = static_cast<int>(e.size()) - 1;
      while (pos >= 0 && pick[pos] == weights[e[pos]] - 1) pick[pos--] = 0;
      if (pos < 0) break;
      ++pick[pos];
    }
  }
  return Hypergraph(offset.back(), std::move(edges));
}

}  // namespace

BasisFamily build_basis_family(const std::vector<Hypergraph>& patterns) {
  int count = static_cast<int>(patterns.size());
  if (count == 0) throw input_error("basis family needs at least one pattern");
  std::vector<int> sizes(count);
  int slots = 0;
  for (int i = 0; i < count; ++i) {
    sizes[i] = patterns[i].vertex_count();
    slots += sizes[i];
  }
  OracleGuard guard{8, kMaxBlowupVertices + 4, 300000000};
  std::vector<int> extra(slots, 0);
  for (int total = 0; total <= kMaxBasisExtraWeight; ++total) {
    // Spread `total` extra weight over the slots, lexicographically.
    std::fill(extra.begin(), extra.end(), 0);
    extra[0] = total;
    while (true) {
      BasisFamily family;
      family.blowups.reserve(count);
      bool feasible = true;
      for (int i = 0, at = 0; i < count; ++i) {
        std::vector<int> weights(sizes[i]);
        int blown = 0;
        for (int v = 0; v < sizes[i]; ++v, ++at) {
          weights[v] = 1 + extra[at];
          blown += weights[v];
        }
        if (blown > kMaxBlowupVertices) {
          feasible = false;
          break;
        }
        family.blowups.push_back(blow_up(patterns[i], weights));
      }
      if (feasible) {
        family.matrix.assign(count, std::vector<Rational>(count));
        for (int i = 0; i < count; ++i)
          for (int j = 0; j < count; ++j)
            family.matrix[i][j] =
                Rational(brute_hom_count(family.blowups[i], patterns[j], guard));
        if (invertible(family.matrix)) return family;
      }
      if (slots == 1) break;
      // Next composition of `total` over the slots.
      int pos = slots - 2;
      while (pos >= 0 && extra[pos] == 0) --pos;
      if (pos < 0) break;
      --extra[pos];
      int tail = 0;
      for (int t = pos + 1; t < slots; ++t) {
        tail += extra[t];
        extra[t] = 0;
      }
      extra[pos + 1] = tail + 1;
    }
  }
  throw guard_error("no invertible basis family within the weight budget");
}

std::vector<Hypergraph> build_sub_to_hom_instances(
    const Hypergraph& input, const std::vector<Hypergraph>& patterns,
    const BasisFamily& family) {
  if (patterns.size() != family.blowups.size())
    throw input_error("family does not match the pattern list");
  std::vector<Hypergraph> out;
  out.reserve(family.blowups.size());
  for (const Hypergraph& f : family.blowups) out.push_back(tensor_product(input, f));
  return out;
}

namespace {

// Core x_0..x_{c-1} plus one satellite d_i per core vertex, with edges
// (X minus x_i) plus d_i; an obstruction witness with no external part.
Hypergraph core_witness_pattern(int core_size) {
  std::vector<Edge> edges;
  edges.reserve(core_size);
  for (int i = 0; i < core_size; ++i) {
    Edge e;
    e.reserve(core_size);
    for (int j = 0; j < core_size; ++j)
      if (j != i) e.push_back(j);
    e.push_back(core_size + i);
    edges.push_back(std::move(e));
  }
  return Hypergraph(2 * core_size, std::move(edges));
}

}  // namespace

bool color_coding_simplex(const Hypergraph& input, int k, int trials,
                          unsigned long long seed) {
  if (k < 2) throw input_error("simplex order must be at least 2");
  for (const Edge& e : input.edges())
    if (static_cast<int>(e.size()) != k)
      throw input_error("simplex detection needs uniform arity-k edges");
  int colors = k + 1;
  Hypergraph pattern = core_witness_pattern(colors);
  GadgetSpec spec = make_gadget_spec(pattern, 0);
  if (static_cast<int>(spec.core.size()) != colors)
    throw internal_error("witness core has an unexpected size");
  HomCounter counter = [](const Hypergraph& g, const Hypergraph& p, long long l) {
    return count_homs(g, p, l);
  };
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<int> coloring(input.vertex_count());
    std::vector<char> seen(colors, 0);
    for (int& c : coloring) {
      c = static_cast<int>(rng() % colors);
      seen[c] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) continue;
    ColoredHypergraph gadget = build_gadget({input, coloring}, spec, 0);
    std::vector<char> palette(pattern.vertex_count(), 0);
    for (int c : gadget.color) palette[c] = 1;
    if (std::find(palette.begin(), palette.end(), 0) != palette.end()) continue;
    if (colorful_hom_count(gadget, pattern, 0, counter) > 0) return true;
  }
  return false;
}

}  // namespace hypercount

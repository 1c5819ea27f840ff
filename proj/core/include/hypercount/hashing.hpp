#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace hypercount {

// FNV-style hash for small integer sequences (trimmed edges, ordered tuples,
// partial-assignment keys).
struct VectorHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct PairVectorHash {
  size_t operator()(const std::vector<std::pair<int, int>>& v) const {
    size_t h = 1469598103934665603ull;
    for (auto [a, b] : v) {
      h ^= static_cast<size_t>(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
      h ^= static_cast<size_t>(b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace hypercount

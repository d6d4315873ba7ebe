#pragma once

#include <utility>
#include <vector>

#include "cfc/families.hpp"
#include "cfc/graph.hpp"

namespace cfc {

struct SplitCnResult {
  unsigned value = 0;  // 1 or 2
  Coloring coloring;
};

/// CFCN* coloring of a split graph with partition (K, I).
/// One color suffices iff some vertex is universal (color it) or every
/// clique vertex has exactly one I-neighbor (color all of I). Otherwise the
/// smallest clique vertex gets 2 and all of I gets 1.
inline SplitCnResult color_split_cfcn(const Graph& g, const std::vector<Vertex>& K,
                                      const std::vector<Vertex>& I) {
  check_split_partition(g, K, I);
  const std::size_t n = g.n();
  std::vector<Color> c(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) + 1 == n) {
      c[v] = 1;
      return {1, Coloring(std::move(c), 1)};
    }
  std::vector<char> in_i(n, 0);
  for (Vertex v : I) in_i[v] = 1;
  bool private_i = true;
  for (Vertex v : K) {
    std::size_t hits = 0;
    for (Vertex w : g.neighbors(v)) hits += in_i[w];
    private_i = private_i && hits == 1;
  }
  for (Vertex v : I) c[v] = 1;
  if (private_i) return {1, Coloring(std::move(c), 1)};
  Vertex z = K.front();
  for (Vertex v : K) z = std::min(z, v);
  c[z] = 2;
  return {2, Coloring(std::move(c), 2)};
}

}  // namespace cfc

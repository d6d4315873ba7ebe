#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

/// Biconnected components (blocks) as sorted vertex lists, sorted
/// lexicographically. Isolated vertices form no block.
inline std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<unsigned> disc(n, 0), low(n, 0);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Edge> estack;
  unsigned timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root]) continue;
    std::vector<Frame> st{{root, root, 0}};
    disc[root] = low[root] = ++timer;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (!disc[w]) {
          estack.emplace_back(f.v, w);
          disc[w] = low[w] = ++timer;
          st.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          estack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v, p = f.parent;
      st.pop_back();
      if (st.empty()) break;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Vertex> b;
        while (true) {
          Edge e = estack.back();
          estack.pop_back();
          b.push_back(e.first);
          b.push_back(e.second);
          if (e == Edge{p, v}) break;
        }
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        blocks.push_back(std::move(b));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline bool is_block_graph(const Graph& g) {
  for (const auto& b : biconnected_components(g))
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.adjacent(b[i], b[j])) return false;
  return true;
}

/// CFON coloring (no zeros) with colors {1,2,3} of a block graph.
/// Per component the smallest block gets 1, 2 on its two smallest vertices
/// and 3 elsewhere. Blocks are then attached outward through cut vertices; a
/// new block hanging at v takes the color missing from {C(v), c}, where c is
/// the smallest color unique in the already colored part of N(v).
inline Coloring color_block_cfon(const Graph& g) {
  const std::size_t n = g.n();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated");
  auto blocks = biconnected_components(g);
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.adjacent(b[i], b[j]))
          throw std::invalid_argument("not a block graph: vertices " + std::to_string(b[i]) +
                                      " and " + std::to_string(b[j]) +
                                      " share a block but are not adjacent");

  std::vector<std::vector<std::size_t>> blocks_of(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Vertex v : blocks[b]) blocks_of[v].push_back(b);

  std::vector<Color> c(n, 0);
  std::vector<char> done(blocks.size(), 0);
  auto unique_around = [&](Vertex v) -> Color {
    unsigned cnt[4] = {0, 0, 0, 0};
    for (Vertex w : g.neighbors(v)) ++cnt[c[w]];
    for (Color x = 1; x <= 3; ++x)
      if (cnt[x] == 1) return x;
    throw std::logic_error("cut vertex has no uniquely colored neighbor");
  };

  for (std::size_t root = 0; root < blocks.size(); ++root) {
    if (done[root]) continue;
    done[root] = 1;
    const auto& rb = blocks[root];
    for (std::size_t t = 0; t < rb.size(); ++t) c[rb[t]] = t < 2 ? static_cast<Color>(t + 1) : 3;
    std::vector<std::size_t> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex v : blocks[queue[h]]) {
        for (std::size_t child : blocks_of[v]) {
          if (done[child]) continue;
          done[child] = 1;
          Color cv = c[v], cu = unique_around(v);
          Color x = 1;
          while (x == cv || x == cu) ++x;
          for (Vertex w : blocks[child])
            if (w != v) c[w] = x;
          queue.push_back(child);
        }
      }
    }
  }
  return Coloring(std::move(c), 3);
}

}  // namespace cfc

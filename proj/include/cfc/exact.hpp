#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

struct ExactLimits {
  std::size_t max_vertices = 48;  // per call, checked against g.n()
};

namespace detail {

// Backtracking over one connected component. Vertices are assigned in id
// order; after assigning x we check every y whose neighborhood ends at x.
class CfSearch {
public:
  CfSearch(const Graph& g, Mode m, Color k) : g_(g), m_(m), k_(k), n_(g.n()) {
    nb_.resize(n_);
    watchers_.resize(n_);
    due_.resize(n_);
    for (Vertex y = 0; y < n_; ++y) {
      nb_[y] = m.closed() ? g.closed_neighbors(y) : g.neighbors(y);
      for (Vertex x : nb_[y]) watchers_[x].push_back(y);
      if (!nb_[y].empty()) due_[nb_[y].back()].push_back(y);
    }
    cnt_.assign(n_ * (k_ + 1), 0);
    color_.assign(n_, 0);
  }

  std::optional<std::vector<Color>> run() {
    for (Vertex y = 0; y < n_; ++y)
      if (nb_[y].empty()) return std::nullopt;
    if (n_ == 0) return std::vector<Color>{};
    if (dfs(0)) return color_;
    return std::nullopt;
  }

private:
  bool satisfied(Vertex y) const {
    const std::uint32_t* c = &cnt_[y * (k_ + 1)];
    for (Color q = 1; q <= k_; ++q)
      if (c[q] == 1) return true;
    return false;
  }

  bool dfs(Vertex x) {
    if (x == n_) return true;
    for (Color q = m_.full() ? 1 : 0; q <= k_; ++q) {
      color_[x] = q;
      for (Vertex y : watchers_[x]) ++cnt_[y * (k_ + 1) + q];
      bool ok = true;
      for (Vertex y : due_[x])
        if (!satisfied(y)) {
          ok = false;
          break;
        }
      if (ok && dfs(x + 1)) return true;
      for (Vertex y : watchers_[x]) --cnt_[y * (k_ + 1) + q];
    }
    color_[x] = 0;
    return false;
  }

  const Graph& g_;
  Mode m_;
  Color k_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> nb_, watchers_, due_;
  std::vector<std::uint32_t> cnt_;
  std::vector<Color> color_;
};

inline void check_ceiling(const Graph& g, const ExactLimits& lim) {
  if (g.n() > lim.max_vertices)
    throw CeilingExceeded("exact solver ceiling: graph has " + std::to_string(g.n()) +
                          " vertices, limit is " + std::to_string(lim.max_vertices));
}

}  // namespace detail

/// Some valid coloring over {0..k} (partial) or {1..k} (full), or none.
/// Components are solved independently; each is searched with vertices in
/// id order and colors ascending, so the result is deterministic. Under ON a
/// graph with an isolated vertex has no coloring.
inline std::optional<Coloring> exists_cf_coloring(const Graph& g, Mode m, Color k,
                                                  ExactLimits lim = {}) {
  detail::check_ceiling(g, lim);
  std::vector<Color> out(g.n(), 0);
  for (const auto& comp : connected_components(g)) {
    Graph h = g.induced(comp);
    auto sol = detail::CfSearch(h, m, k).run();
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i) out[comp[i]] = (*sol)[i];
  }
  return Coloring(std::move(out), k);
}

inline std::optional<unsigned> min_cf_colors(const Graph& g, Mode m, unsigned max_k,
                                             ExactLimits lim = {}) {
  detail::check_ceiling(g, lim);
  for (unsigned k = 1; k <= max_k; ++k)
    if (exists_cf_coloring(g, m, k, lim)) return k;
  return std::nullopt;
}

/// Proper coloring with colors 1..k, or none. Colors are tried ascending and
/// a vertex never opens more than one new color.
inline std::optional<std::vector<Color>> proper_coloring(const Graph& g, unsigned k) {
  const std::size_t n = g.n();
  std::vector<Color> c(n, 0);
  auto rec = [&](auto&& self, Vertex x, Color used) -> bool {
    if (x == n) return true;
    Color top = std::min<Color>(k, used + 1);
    for (Color q = 1; q <= top; ++q) {
      bool clash = false;
      for (Vertex w : g.neighbors(x))
        if (w < x && c[w] == q) {
          clash = true;
          break;
        }
      if (clash) continue;
      c[x] = q;
      if (self(self, x + 1, std::max(used, q))) return true;
    }
    c[x] = 0;
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  return c;
}

inline std::optional<unsigned> chromatic_number(const Graph& g, unsigned max_k) {
  if (g.n() == 0) return 0u;
  for (unsigned k = 1; k <= max_k; ++k)
    if (proper_coloring(g, k)) return k;
  return std::nullopt;
}

struct PidLimits {
  std::size_t max_vertices = 20;
};

/// Perfect independent dominating set by subset enumeration in increasing
/// bitmask order; the first hit is returned.
inline std::optional<std::vector<Vertex>> has_pid_bruteforce(const Graph& g, PidLimits lim = {}) {
  const std::size_t n = g.n();
  if (n > lim.max_vertices || n > 62)
    throw CeilingExceeded("PID brute force ceiling: graph has " + std::to_string(n) +
                          " vertices, limit is " + std::to_string(lim.max_vertices));
  std::vector<std::uint64_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= std::uint64_t{1} << w;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < end; ++s) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      int hits = std::popcount(nbr[v] & s);
      if (s >> v & 1)
        ok = hits == 0;
      else
        ok = hits == 1;
    }
    if (!ok) continue;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
      if (s >> v & 1) out.push_back(v);
    return out;
  }
  return std::nullopt;
}

}  // namespace cfc

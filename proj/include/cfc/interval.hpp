#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cfc/exact.hpp"
#include "cfc/geometry.hpp"
#include "cfc/graph.hpp"

namespace cfc {

namespace detail {

inline void require_no_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is isolated; no open-neighborhood coloring exists");
}

}  // namespace detail

/// CFON* coloring with colors {0,1,2,3}. Per component: start at the interval
/// with the least right endpoint, then keep stepping to the neighbor reaching
/// farthest right, coloring the chain 1,2,3,1,... Everything else is 0.
inline Coloring color_interval_cfon(const IntervalScene& s) {
  check_scene(s);
  Graph g = geometric_graph(s);
  detail::require_no_isolated(g);
  std::vector<Color> c(s.size(), 0);
  for (const auto& comp : connected_components(g)) {
    Vertex cur = comp.front();
    Rational max_r = s[cur].r;
    for (Vertex v : comp) {
      if (s[v].r < s[cur].r) cur = v;
      if (s[v].r > max_r) max_r = s[v].r;
    }
    auto farthest = [&](Vertex v) {
      Vertex best = g.neighbors(v).front();
      for (Vertex w : g.neighbors(v))
        if (s[w].r > s[best].r) best = w;
      return best;
    };
    Color next = 1;
    c[cur] = next;
    // The second member is taken even if it does not extend the reach; a lone
    // chain interval would have no colored neighbor.
    do {
      cur = farthest(cur);
      next = next % 3 + 1;
      if (c[cur] != 0) throw std::logic_error("interval chain revisited an interval");
      c[cur] = next;
    } while (s[cur].r < max_r);
  }
  return Coloring(std::move(c), 3);
}

/// Every interval has length exactly 1.
inline bool is_unit_scene(const IntervalScene& s) {
  return std::all_of(s.begin(), s.end(), [](const Interval& iv) { return iv.r - iv.l == 1; });
}

/// CFON* coloring with colors {0,1,2} of a unit interval scene, by repeated
/// pair picking from the left.
inline Coloring color_proper_interval_cfon(const IntervalScene& s) {
  check_scene(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].r - s[i].l != 1)
      throw std::invalid_argument("interval " + std::to_string(i) + " does not have unit length");
  Graph g = geometric_graph(s);
  detail::require_no_isolated(g);

  std::vector<Vertex> order(s.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return s[a].l < s[b].l; });

  std::vector<Color> c(s.size(), 0);
  std::vector<char> assigned(s.size(), 0);
  // Components do not interleave along the line, so one sweep handles all of
  // them; the previous pair is reset at each component start.
  std::vector<int> comp_of(s.size(), -1);
  {
    auto comps = connected_components(g);
    for (std::size_t t = 0; t < comps.size(); ++t)
      for (Vertex v : comps[t]) comp_of[v] = static_cast<int>(t);
  }
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  Vertex prev1 = kNone, prev2 = kNone;
  for (Vertex i1 : order) {
    if (assigned[i1]) continue;
    if (prev1 != kNone && comp_of[prev1] != comp_of[i1]) prev1 = prev2 = kNone;
    std::optional<Vertex> i2;
    for (Vertex w : g.neighbors(i1))
      if (!assigned[w] && (!i2 || s[w].l > s[*i2].l)) i2 = w;  // ties keep the lower index
    if (i2) {
      c[i1] = 1;
      c[*i2] = 2;
      assigned[i1] = assigned[*i2] = 1;
      for (Vertex u : {i1, *i2})
        for (Vertex w : g.neighbors(u))
          if (!assigned[w]) assigned[w] = 1;  // color stays 0
      prev1 = i1;
      prev2 = *i2;
    } else {
      if (prev1 == kNone) throw std::logic_error("first interval of a component has no free neighbor");
      std::optional<Vertex> im;
      for (Vertex w : g.neighbors(i1))
        if (g.adjacent(w, prev2)) {
          im = w;
          break;
        }
      if (!im) throw std::logic_error("no interval meets both the previous pick and the last interval");
      // Uncoloring prev1 alone can strand a 0 that touches two consecutive
      // color-2 picks, so prev2 takes color 1 and the bridge takes 2.
      c[prev1] = 0;
      c[prev2] = 1;
      c[*im] = 2;
      c[i1] = 0;
      assigned[i1] = 1;
    }
  }
  return Coloring(std::move(c), 2);
}

/// Perfect independent dominating set of an interval scene, or none.
/// Sweep over intervals sorted by left endpoint; a state is the last chosen
/// interval. The lowest feasible predecessor and end are taken.
inline std::optional<std::vector<Vertex>> pid_interval_dp(const IntervalScene& s) {
  check_scene(s);
  const std::size_t n = s.size();
  if (n == 0) return std::vector<Vertex>{};
  std::vector<Vertex> ord(n);
  std::iota(ord.begin(), ord.end(), Vertex{0});
  std::stable_sort(ord.begin(), ord.end(), [&](Vertex a, Vertex b) { return s[a].l < s[b].l; });

  auto valid_start = [&](Vertex a) {
    return std::none_of(s.begin(), s.end(), [&](const Interval& x) { return x.r < s[a].l; });
  };
  auto valid_end = [&](Vertex a) {
    return std::none_of(s.begin(), s.end(), [&](const Interval& x) { return x.l > s[a].r; });
  };
  // a then b consecutive in the set: disjoint, nothing meets both, nothing
  // falls strictly between them.
  auto valid_pair = [&](Vertex a, Vertex b) {
    if (!(s[a].r < s[b].l)) return false;
    for (const auto& x : s) {
      if (x.l <= s[a].r && x.r >= s[b].l) return false;
      if (x.l > s[a].r && x.r < s[b].l) return false;
    }
    return true;
  };

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<char> reach(n, 0);
  std::vector<std::size_t> pred(n, kNone);
  for (std::size_t t = 0; t < n; ++t) {
    Vertex b = ord[t];
    if (valid_start(b)) {
      reach[t] = 1;
      continue;
    }
    for (std::size_t u = 0; u < t; ++u)
      if (reach[u] && valid_pair(ord[u], b)) {
        reach[t] = 1;
        pred[t] = u;
        break;
      }
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (!reach[t] || !valid_end(ord[t])) continue;
    std::vector<Vertex> out;
    for (std::size_t u = t; u != kNone; u = pred[u]) out.push_back(ord[u]);
    std::sort(out.begin(), out.end());
    return out;
  }
  return std::nullopt;
}

struct IntervalCnDecision {
  unsigned value = 0;               // 1 or 2
  std::optional<Coloring> witness;  // absent for value 2 above the exact ceiling
};

/// Minimum number of colors for a CFCN* coloring of an interval scene.
/// One color works exactly when a perfect independent dominating set exists.
inline IntervalCnDecision decide_interval_cfcn(const IntervalScene& s, ExactLimits lim = {}) {
  check_scene(s);
  if (s.empty()) throw std::invalid_argument("empty interval scene");
  if (auto pid = pid_interval_dp(s)) {
    std::vector<Color> c(s.size(), 0);
    for (Vertex v : *pid) c[v] = 1;
    return {1, Coloring(std::move(c), 1)};
  }
  IntervalCnDecision out{2, std::nullopt};
  Graph g = geometric_graph(s);
  if (g.n() <= lim.max_vertices) out.witness = exists_cf_coloring(g, Mode::cn_partial(), 2, lim);
  return out;
}

}  // namespace cfc

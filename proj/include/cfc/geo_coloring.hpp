#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cfc/geometry.hpp"
#include "cfc/graph.hpp"
#include "cfc/interval.hpp"

namespace cfc {

namespace detail {

// Vertices grouped by stripe, each group sorted by (x, index).
template <class StripeOf>
std::map<std::int64_t, std::vector<Vertex>> by_stripe(const PointScene& s, StripeOf stripe_of) {
  std::map<std::int64_t, std::vector<Vertex>> out;
  for (Vertex v = 0; v < s.size(); ++v) out[stripe_of(s[v].y)].push_back(v);
  for (auto& [l, vs] : out)
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return s[a].x < s[b].x; });
  return out;
}

}  // namespace detail

/// CFCN* coloring with colors {1,2} of unit disks whose centers share one
/// stripe of height sqrt(3). Greedy from the left: let u be the leftmost
/// uncovered point; among the points of N[u] that also dominate every
/// uncovered point not to their right, color the rightmost one. Colors
/// alternate 1, 2, 1, ...
inline Coloring stripe_cfcn_2color(const PointScene& s) {
  const std::size_t n = s.size();
  if (n == 0) return Coloring({}, 2);
  const auto l0 = disk_stripe(s[0].y);
  for (std::size_t i = 1; i < n; ++i)
    if (disk_stripe(s[i].y) != l0)
      throw std::invalid_argument("point " + std::to_string(i) + " lies outside the stripe of point 0");
  Graph g = geometric_graph(s, Shape::Disk);
  std::vector<Vertex> ord(n);
  std::iota(ord.begin(), ord.end(), Vertex{0});
  std::stable_sort(ord.begin(), ord.end(), [&](Vertex a, Vertex b) { return s[a].x < s[b].x; });

  std::vector<char> covered(n, 0);
  std::vector<Color> c(n, 0);
  Color next = 1;
  std::size_t first = 0;
  auto dominates_left = [&](Vertex v) {
    for (Vertex w : ord) {
      if (s[w].x > s[v].x) break;
      if (!covered[w] && w != v && !g.adjacent(v, w)) return false;
    }
    return true;
  };
  while (true) {
    while (first < n && covered[ord[first]]) ++first;
    if (first == n) break;
    Vertex u = ord[first];
    std::optional<Vertex> pick;
    auto consider = [&](Vertex v) {
      if (!dominates_left(v)) return;
      if (!pick || s[v].x > s[*pick].x || (s[v].x == s[*pick].x && v < *pick)) pick = v;
    };
    consider(u);
    for (Vertex w : g.neighbors(u)) consider(w);
    if (!pick) throw std::logic_error("leftmost uncovered point dominates nothing");
    c[*pick] = next;
    next = 3 - next;
    covered[*pick] = 1;
    for (Vertex w : g.neighbors(*pick)) covered[w] = 1;
  }
  return Coloring(std::move(c), 2);
}

/// CFON* coloring of unit squares (side 2) with at most 27 colors.
/// Phase 1 colors each height-2 stripe with 2 colors from class l mod 3
/// (colors 1..6). Phase 2 recolors the lowest-index neighbor of every
/// vertex isolated in its stripe; those representatives are taken per
/// stripe in X order and cycle through 7 colors of class l mod 3
/// (colors 7..27).
inline Coloring color_unit_square_cfon(const PointScene& s) {
  Graph g = geometric_graph(s, Shape::Square);
  detail::require_no_isolated(g);
  std::vector<Color> c(s.size(), 0);
  std::vector<Vertex> lonely;
  for (const auto& [l, vs] : detail::by_stripe(s, square_stripe)) {
    const auto cls = static_cast<Color>(pos_mod(l, 3));
    Graph h = g.induced(vs);
    std::vector<Vertex> busy;
    IntervalScene iv;
    for (std::size_t t = 0; t < vs.size(); ++t) {
      if (h.degree(t) == 0) {
        lonely.push_back(vs[t]);
        continue;
      }
      busy.push_back(vs[t]);
      Rational mid = s[vs[t]].x / 2;
      iv.push_back({mid - Rational(1, 2), mid + Rational(1, 2)});
    }
    if (busy.empty()) continue;
    Coloring ic = color_proper_interval_cfon(iv);
    for (std::size_t t = 0; t < busy.size(); ++t)
      if (ic[t]) c[busy[t]] = 1 + 2 * cls + (ic[t] - 1);
  }
  std::vector<char> is_rep(s.size(), 0);
  for (Vertex v : lonely) is_rep[g.neighbors(v).front()] = 1;
  std::map<std::int64_t, std::vector<Vertex>> reps;
  for (Vertex v = 0; v < s.size(); ++v)
    if (is_rep[v]) reps[square_stripe(s[v].y)].push_back(v);
  for (auto& [l, vs] : reps) {
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return s[a].x < s[b].x; });
    const auto cls = static_cast<Color>(pos_mod(l, 3));
    for (std::size_t t = 0; t < vs.size(); ++t) c[vs[t]] = 7 + 7 * cls + static_cast<Color>(t % 7);
  }
  return Coloring(std::move(c), 27);
}

/// CFON* coloring of unit disks (radius 1) with at most 54 colors.
/// Phase 1 CFCN* colors each height-sqrt(3) stripe with 2 colors of class
/// l mod 3 (colors 1..6). Phase 2 walks the colored vertices of each stripe
/// in X order and, unless already done, recolors their lowest-index
/// neighbor with the next of 8 colors of class l mod 6 (colors 7..54).
inline Coloring color_unit_disk_cfon(const PointScene& s) {
  Graph g = geometric_graph(s, Shape::Disk);
  detail::require_no_isolated(g);
  std::vector<Color> c(s.size(), 0);
  auto stripes = detail::by_stripe(s, disk_stripe);
  for (const auto& [l, vs] : stripes) {
    const auto cls = static_cast<Color>(pos_mod(l, 3));
    PointScene sub;
    for (Vertex v : vs) sub.push_back(s[v]);
    Coloring sc = stripe_cfcn_2color(sub);
    for (std::size_t t = 0; t < vs.size(); ++t)
      if (sc[t]) c[vs[t]] = 1 + 2 * cls + (sc[t] - 1);
  }
  std::vector<char> in_i(s.size(), 0);
  for (Vertex v = 0; v < s.size(); ++v) in_i[v] = c[v] != 0;
  std::vector<char> recolored(s.size(), 0);
  for (const auto& [l, vs] : stripes) {
    const auto cls = static_cast<Color>(pos_mod(l, 6));
    Color counter = 0;
    for (Vertex v : vs) {
      if (!in_i[v]) continue;
      Vertex r = g.neighbors(v).front();
      if (recolored[r]) continue;
      recolored[r] = 1;
      c[r] = 7 + 8 * cls + counter % 8;
      ++counter;
    }
  }
  return Coloring(std::move(c), 54);
}

}  // namespace cfc

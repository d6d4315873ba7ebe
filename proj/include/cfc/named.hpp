#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/geometry.hpp"
#include "cfc/graph.hpp"
#include "cfc/kneser.hpp"

namespace cfc {

namespace detail {

inline void add_clique(std::vector<Edge>& es, const std::vector<Vertex>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) es.emplace_back(c[i], c[j]);
}

// interval-lb skeleton, in vertex-block order:
//   u v w u* w* u' u'' v' v'' w' w''
// The first five become 3-cliques, the last six 4-cliques.
inline constexpr std::array<unsigned, 11> kIntervalLbSize = {3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4};
inline constexpr std::array<const char*, 11> kIntervalLbL = {
    "1.1", "2.1", "3.6", "2.1", "3.6", "1.1", "1.6", "2.6", "3.1", "4.1", "4.6"};
inline constexpr std::array<const char*, 11> kIntervalLbR = {
    "2.4", "3.9", "4.9", "2.4", "3.9", "1.4", "1.9", "2.9", "3.4", "4.4", "4.9"};

}  // namespace detail

inline const std::vector<std::string>& named_graph_names() {
  static const std::vector<std::string> names = {"k2",       "k3",          "k22",
                                                 "bull",     "block-lb",    "interval-lb",
                                                 "unitsq-example", "petersen"};
  return names;
}

/// Interval scenes for the named graphs that have one (bull, interval-lb).
/// Index i of the scene is vertex i of named_graph(name).
inline IntervalScene named_interval_scene(std::string_view name) {
  auto iv = [](const char* l, const char* r) {
    return Interval{parse_rational(l), parse_rational(r)};
  };
  if (name == "bull")
    return {iv("2.6", "2.9"), iv("1", "3"), iv("2.5", "5"), iv("0", "1.5"), iv("4.5", "6")};
  if (name == "interval-lb") {
    IntervalScene s;
    for (std::size_t b = 0; b < detail::kIntervalLbSize.size(); ++b)
      for (unsigned c = 0; c < detail::kIntervalLbSize[b]; ++c)
        s.push_back(iv(detail::kIntervalLbL[b], detail::kIntervalLbR[b]));
    return s;
  }
  throw std::invalid_argument("no interval scene named '" + std::string(name) + "'");
}

/// unitsq-example centers; valid both as unit squares and as unit disks.
inline PointScene named_point_scene(std::string_view name) {
  if (name != "unitsq-example")
    throw std::invalid_argument("no point scene named '" + std::string(name) + "'");
  const char* xy[9][2] = {{"-1.9", "0"},     {"-0.95", "1.65"}, {"0.95", "1.65"},
                          {"1.9", "0"},      {"0.95", "-1.65"}, {"-0.95", "-1.65"},
                          {"-1.9", "3.3"},   {"3.8", "0"},      {"-1.9", "-3.3"}};
  PointScene s;
  for (auto& p : xy) s.push_back({parse_rational(p[0]), parse_rational(p[1])});
  return s;
}

/// Vertex orders:
///   k22: 4-cycle 0-1-2-3-0.
///   bull: triangle m=0, l=1, r=2; pendant 3 on l, pendant 4 on r.
///   block-lb: m=0, l=1, x^l_1..3=2..4, r=5, x^r_1..3=6..8, pendants of x^l_i = 9..11,
///             pendants of x^r_i = 12..14.
///   interval-lb: blocks u,v,w,u*,w* (3 each) then u',u'',v',v'',w',w'' (4 each).
///   unitsq-example: cycle u1..u6 = 0..5, pendants on u2,u4,u6 = 6,7,8.
///   petersen: K(5,2) with 2-subsets in colex order.
inline Graph named_graph(std::string_view name) {
  std::vector<Edge> es;
  if (name == "k2") return Graph(2, {{0, 1}});
  if (name == "k3") return Graph(3, {{0, 1}, {0, 2}, {1, 2}});
  if (name == "k22") return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  if (name == "bull") return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
  if (name == "block-lb") {
    detail::add_clique(es, {0, 1, 2, 3, 4});
    detail::add_clique(es, {0, 5, 6, 7, 8});
    for (Vertex i = 0; i < 3; ++i) {
      es.emplace_back(2 + i, 9 + i);
      es.emplace_back(6 + i, 12 + i);
    }
    return Graph(15, es);
  }
  if (name == "interval-lb") return geometric_graph(named_interval_scene(name));
  if (name == "unitsq-example") {
    for (Vertex i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
    es.emplace_back(1, 6);
    es.emplace_back(3, 7);
    es.emplace_back(5, 8);
    return Graph(9, es);
  }
  if (name == "petersen") return kneser_graph({5, 2});
  throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

}  // namespace cfc

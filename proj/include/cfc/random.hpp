#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfc/extension.hpp"
#include "cfc/families.hpp"
#include "cfc/geometry.hpp"
#include "cfc/graph.hpp"

// Seeded instance generators. Coordinates live on a grid of step 1/den so
// every instance is exact.

namespace cfc {

using Rng = std::mt19937_64;

namespace detail {

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace detail

/// Uniform op among `allowed`, uniform anchor j < i.
inline ExtensionSequence random_extension_seq(unsigned n, const std::vector<ExtOp>& allowed,
                                              std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("extension sequence needs n >= 2");
  if (allowed.empty()) throw std::invalid_argument("no extension operations allowed");
  Rng rng(seed);
  ExtensionSequence seq;
  seq.n = n;
  for (unsigned i = 3; i <= n; ++i) {
    ExtOp op = allowed[detail::uniform(rng, 0, static_cast<std::int64_t>(allowed.size()) - 1)];
    auto j = static_cast<unsigned>(detail::uniform(rng, 1, i - 1));
    seq.steps.push_back({i, op, j});
  }
  return seq;
}

/// Connected interval scene: left endpoints are drawn in increasing order,
/// each at most the largest right endpoint so far; lengths are in
/// [1/den, max_len]. The result is shuffled.
inline IntervalScene random_intervals(unsigned n, std::uint64_t seed, unsigned max_len = 4,
                                      unsigned den = 4) {
  if (n == 0) throw std::invalid_argument("scene needs n >= 1");
  Rng rng(seed);
  IntervalScene s;
  std::int64_t l = 0, reach = 0;
  for (unsigned t = 0; t < n; ++t) {
    if (t > 0) l = detail::uniform(rng, l, reach);
    std::int64_t len = detail::uniform(rng, 1, static_cast<std::int64_t>(max_len) * den);
    s.push_back({Rational(l, den), Rational(l + len, den)});
    reach = std::max(reach, l + len);
  }
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

/// Connected unit interval scene: consecutive left endpoints differ by at
/// most 1. Shuffled.
inline IntervalScene random_unit_intervals(unsigned n, std::uint64_t seed, unsigned den = 4) {
  if (n == 0) throw std::invalid_argument("scene needs n >= 1");
  Rng rng(seed);
  IntervalScene s;
  std::int64_t l = 0;
  for (unsigned t = 0; t < n; ++t) {
    if (t > 0) l += detail::uniform(rng, 0, den);
    s.push_back({Rational(l, den), Rational(l + den, den)});
  }
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

/// Uniform grid points in [0, width] x [0, height].
inline PointScene random_points_box(unsigned n, std::uint64_t seed, unsigned width = 10,
                                    unsigned height = 10, unsigned den = 10) {
  Rng rng(seed);
  PointScene s;
  for (unsigned t = 0; t < n; ++t)
    s.push_back({Rational(detail::uniform(rng, 0, width * den), den),
                 Rational(detail::uniform(rng, 0, height * den), den)});
  return s;
}

/// Connected scene for the given shape: each new point is placed next to a
/// uniformly chosen earlier point (rejection sampling in the 4x4 box around
/// it).
inline PointScene random_connected_points(unsigned n, Shape shape, std::uint64_t seed,
                                          unsigned den = 10) {
  if (n < 2) throw std::invalid_argument("connected scene needs n >= 2");
  Rng rng(seed);
  PointScene s{{Rational(0), Rational(0)}};
  const std::int64_t r = 2 * static_cast<std::int64_t>(den);
  while (s.size() < n) {
    const Point& a = s[detail::uniform(rng, 0, static_cast<std::int64_t>(s.size()) - 1)];
    Point p{a.x + Rational(detail::uniform(rng, -r, r), den), a.y + Rational(detail::uniform(rng, -r, r), den)};
    bool ok = shape == Shape::Square ? squares_meet(a, p) : disks_meet(a, p);
    if (ok) s.push_back(p);
  }
  return s;
}

/// Points with y in (0, sqrt 3] and x in [0, width].
inline PointScene random_stripe_points(unsigned n, std::uint64_t seed, unsigned width = 12,
                                       unsigned den = 100) {
  Rng rng(seed);
  PointScene s;
  const std::int64_t top = 173 * static_cast<std::int64_t>(den) / 100;  // below sqrt 3
  for (unsigned t = 0; t < n; ++t)
    s.push_back({Rational(detail::uniform(rng, 0, width * den), den),
                 Rational(detail::uniform(rng, 1, top), den)});
  return s;
}

/// Random split graph: each vertex joins K with probability 1/2 (K is kept
/// nonempty), cross edges with probability p, and an I-vertex left without
/// neighbors is attached to the first clique vertex.
inline SplitGraph random_split_graph(unsigned n, std::uint64_t seed, double p = 0.4) {
  if (n == 0) throw std::invalid_argument("split graph needs n >= 1");
  Rng rng(seed);
  SplitGraph out;
  for (Vertex v = 0; v < n; ++v) (detail::coin(rng, 0.5) ? out.clique : out.independent).push_back(v);
  if (out.clique.empty()) {
    out.clique.push_back(out.independent.front());
    out.independent.erase(out.independent.begin());
  }
  std::vector<Edge> es;
  for (std::size_t a = 0; a < out.clique.size(); ++a)
    for (std::size_t b = a + 1; b < out.clique.size(); ++b) es.emplace_back(out.clique[a], out.clique[b]);
  for (Vertex v : out.independent) {
    bool any = false;
    for (Vertex k : out.clique)
      if (detail::coin(rng, p)) {
        es.emplace_back(k, v);
        any = true;
      }
    if (!any) es.emplace_back(out.clique.front(), v);
  }
  out.graph = Graph(n, es);
  return out;
}

/// Block graph grown from a clique by attaching cliques of size 2..max_clique
/// at uniformly chosen existing vertices until n vertices exist.
inline Graph random_block_graph(unsigned n, std::uint64_t seed, unsigned max_clique = 4) {
  if (n < 2) throw std::invalid_argument("block graph needs n >= 2");
  Rng rng(seed);
  std::vector<Edge> es;
  auto first = static_cast<unsigned>(detail::uniform(rng, 2, std::min(max_clique, n)));
  for (Vertex a = 0; a < first; ++a)
    for (Vertex b = a + 1; b < first; ++b) es.emplace_back(a, b);
  unsigned have = first;
  while (have < n) {
    auto size = static_cast<unsigned>(detail::uniform(rng, 2, max_clique));
    size = std::min(size, n - have + 1);
    std::vector<Vertex> c{static_cast<Vertex>(detail::uniform(rng, 0, have - 1))};
    for (unsigned t = 1; t < size; ++t) c.push_back(have++);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) es.emplace_back(c[a], c[b]);
  }
  return Graph(n, es);
}

/// G(n, p).
inline Graph random_graph(unsigned n, std::uint64_t seed, double p = 0.5) {
  Rng rng(seed);
  std::vector<Edge> es;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (detail::coin(rng, p)) es.emplace_back(a, b);
  return Graph(n, es);
}

}  // namespace cfc

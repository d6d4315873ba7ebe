#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfc {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when an instance exceeds a configured size ceiling.
class CeilingExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph over 0..n-1. Immutable once built.
class Graph {
public:
  Graph() = default;

  Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& a = adj_[v];
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    m_ = edges.size();
  }

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }

  /// Sorted open neighborhood.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
  }

  /// Sorted closed neighborhood N[v].
  std::vector<Vertex> closed_neighbors(Vertex v) const {
    std::vector<Vertex> out = adj_[v];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Subgraph induced by `vs`; vertex i of the result is vs[i].
  Graph induced(const std::vector<Vertex>& vs) const {
    std::vector<std::int64_t> pos(n(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (Vertex w : adj_[vs[i]])
        if (pos[w] > static_cast<std::int64_t>(i))
          es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(pos[w]));
    return Graph(vs.size(), es);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

enum class Neighborhood { Open, Closed };
enum class Variant { Partial, Full };

struct Mode {
  Neighborhood nbh = Neighborhood::Open;
  Variant variant = Variant::Partial;

  static constexpr Mode on_partial() { return {Neighborhood::Open, Variant::Partial}; }
  static constexpr Mode on_full() { return {Neighborhood::Open, Variant::Full}; }
  static constexpr Mode cn_partial() { return {Neighborhood::Closed, Variant::Partial}; }
  static constexpr Mode cn_full() { return {Neighborhood::Closed, Variant::Full}; }

  bool closed() const { return nbh == Neighborhood::Closed; }
  bool full() const { return variant == Variant::Full; }

  friend bool operator==(const Mode&, const Mode&) = default;
};

inline std::string to_string(Mode m) {
  std::string s = m.closed() ? "CN" : "ON";
  return s + (m.full() ? "-full" : "-partial");
}

inline constexpr Mode kAllModes[] = {Mode::on_partial(), Mode::on_full(), Mode::cn_partial(),
                                     Mode::cn_full()};

/// Color assignment with a declared palette {0..palette}; 0 is "uncolored".
struct Coloring {
  std::vector<Color> colors;
  Color palette = 0;

  Coloring() = default;
  Coloring(std::vector<Color> c, Color k) : colors(std::move(c)), palette(k) {
    for (Color x : colors)
      if (x > palette)
        throw std::invalid_argument("color " + std::to_string(x) + " exceeds palette " +
                                    std::to_string(palette));
  }
  /// Palette taken as the largest entry.
  explicit Coloring(std::vector<Color> c) : colors(std::move(c)) {
    for (Color x : colors) palette = std::max(palette, x);
  }

  std::size_t size() const { return colors.size(); }
  Color operator[](std::size_t v) const { return colors[v]; }

  /// Number of distinct nonzero colors present.
  std::size_t colors_used() const {
    std::vector<Color> c;
    for (Color x : colors)
      if (x != 0) c.push_back(x);
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.colors == b.colors; }
};

struct VerifyResult {
  bool valid = true;
  std::optional<Vertex> witness;  // smallest violating vertex
  explicit operator bool() const { return valid; }
};

namespace detail {

/// True iff some nonzero color occurs exactly once among `vs`.
template <class Range>
bool has_unique_color(const Range& vs, const std::vector<Color>& c, std::vector<std::uint32_t>& cnt) {
  for (Vertex u : vs) ++cnt[c[u]];
  bool ok = false;
  for (Vertex u : vs) {
    if (c[u] != 0 && cnt[c[u]] == 1) ok = true;
  }
  for (Vertex u : vs) cnt[c[u]] = 0;
  return ok;
}

}  // namespace detail

inline VerifyResult verify(const Graph& g, const Coloring& c, Mode m) {
  if (c.size() != g.n())
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) +
                                " entries, graph has " + std::to_string(g.n()) + " vertices");
  if (m.full())
    for (std::size_t v = 0; v < c.size(); ++v)
      if (c[v] == 0)
        throw std::invalid_argument("full variant but vertex " + std::to_string(v) +
                                    " has color 0");
  if (!m.closed())
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.degree(v) == 0)
        throw std::invalid_argument("open neighborhood undefined for isolated vertex " +
                                    std::to_string(v));

  Color top = 0;
  for (Color x : c.colors) top = std::max(top, x);
  std::vector<std::uint32_t> cnt(static_cast<std::size_t>(top) + 1, 0);
  std::vector<Vertex> buf;
  for (Vertex v = 0; v < g.n(); ++v) {
    bool ok;
    if (m.closed()) {
      buf = g.neighbors(v);
      buf.push_back(v);
      ok = detail::has_unique_color(buf, c.colors, cnt);
    } else {
      ok = detail::has_unique_color(g.neighbors(v), c.colors, cnt);
    }
    if (!ok) return {false, v};
  }
  return {};
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.n(), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (Vertex w : g.neighbors(comp[h]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// True iff nonzero-colored adjacent vertices never share a color and nothing is 0.
inline bool is_proper_coloring(const Graph& g, const std::vector<Color>& c) {
  if (c.size() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (c[v] == 0) return false;
    for (Vertex w : g.neighbors(v))
      if (c[v] == c[w]) return false;
  }
  return true;
}

}  // namespace cfc

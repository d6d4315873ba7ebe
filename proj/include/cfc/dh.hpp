#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cfc/extension.hpp"
#include "cfc/graph.hpp"

namespace cfc {

/// (a, b): a is the vertex color, b the color of its uniquely colored closed
/// neighbor.
struct TaggedColor {
  Color a = 0;
  Color b = 0;
  friend bool operator==(const TaggedColor&, const TaggedColor&) = default;
};

/// Called after vertex v_i has been tagged; tags holds v_1..v_i.
using DhStepHook = std::function<void(unsigned i, const std::vector<TaggedColor>& tags)>;

namespace detail {

// If every neighbor of `v` is tagged (0, d) for one common d != a, returns d.
inline std::optional<Color> all_zero_common(const std::vector<std::vector<Vertex>>& adj,
                                            const std::vector<TaggedColor>& tag, Vertex v,
                                            Color a) {
  if (adj[v].empty()) return std::nullopt;
  Color d = tag[adj[v].front()].b;
  for (Vertex w : adj[v])
    if (tag[w].a != 0 || tag[w].b != d) return std::nullopt;
  if (d == a) return std::nullopt;
  return d;
}

inline Color smallest_not_in(Color bound, std::initializer_list<Color> used) {
  for (Color x = 1; x <= bound; ++x) {
    bool hit = false;
    for (Color u : used) hit = hit || u == x;
    if (!hit) return x;
  }
  throw std::logic_error("no free color");
}

// Smallest nonzero color occurring exactly once among the neighbors of v.
inline std::optional<Color> smallest_unique(const std::vector<std::vector<Vertex>>& adj,
                                            const std::vector<TaggedColor>& tag, Vertex v) {
  Color cnt[4] = {0, 0, 0, 0};
  for (Vertex w : adj[v]) ++cnt[tag[w].a];
  for (Color x = 1; x <= 3; ++x)
    if (cnt[x] == 1) return x;
  return std::nullopt;
}

template <class Rule>
std::vector<TaggedColor> run_tagged(const ExtensionSequence& seq, Rule&& rule,
                                    const DhStepHook& hook) {
  seq.validate();
  std::vector<std::vector<Vertex>> adj(seq.n);
  std::vector<TaggedColor> tag(seq.n);
  adj[0] = {1};
  adj[1] = {0};
  tag[0] = {1, 2};
  tag[1] = {2, 1};
  std::vector<TaggedColor> view;
  if (hook) {
    view.assign(tag.begin(), tag.begin() + 2);
    hook(2, view);
  }
  for (const auto& s : seq.steps) {
    Vertex vi = s.i - 1, vj = s.j - 1;
    // Tag first: the rules look at G[i-1].
    tag[vi] = rule(s.op, vj, adj, tag);
    std::vector<Vertex> nb;
    if (s.op == ExtOp::Pendant) {
      nb = {vj};
    } else {
      nb = adj[vj];
      if (s.op == ExtOp::TrueTwin) nb.push_back(vj);
    }
    for (Vertex w : nb) {
      adj[w].push_back(vi);
      adj[vi].push_back(w);
    }
    if (hook) {
      view.assign(tag.begin(), tag.begin() + s.i);
      hook(s.i, view);
    }
  }
  return tag;
}

inline Coloring strip_tags(const std::vector<TaggedColor>& tags, Color palette) {
  std::vector<Color> c;
  c.reserve(tags.size());
  for (const auto& t : tags) c.push_back(t.a);
  return Coloring(std::move(c), palette);
}

}  // namespace detail

/// Tagged CFCN* coloring with colors {0,1,2,3} for a distance-hereditary graph
/// given by its extension sequence. Ties pick the smallest admissible color.
inline std::vector<TaggedColor> color_dh_cfcn_tagged(const ExtensionSequence& seq,
                                                     const DhStepHook& hook = {}) {
  auto rule = [](ExtOp op, Vertex vj, const std::vector<std::vector<Vertex>>& adj,
                 const std::vector<TaggedColor>& tag) -> TaggedColor {
    const Color a = tag[vj].a, b = tag[vj].b;
    if (a == b) {
      auto d = detail::all_zero_common(adj, tag, vj, a);
      switch (op) {
        case ExtOp::Pendant:  // 1a
        case ExtOp::TrueTwin:  // 2a
          if (d) return {detail::smallest_not_in(3, {a, *d}), a};
          return {0, a};
        case ExtOp::FalseTwin: {  // 3a
          if (d) return {a, a};
          auto x = detail::smallest_unique(adj, tag, vj);
          if (!x) throw std::logic_error("no unique color around an (a,a) vertex");
          return {0, *x};
        }
      }
    }
    switch (op) {
      case ExtOp::Pendant:  // 1b
        if (a != 0) return {0, a};
        {
          Color x = detail::smallest_not_in(3, {b});
          return {x, x};
        }
      case ExtOp::TrueTwin:   // 2b
      case ExtOp::FalseTwin:  // 3b
        return {0, b};
    }
    return {};
  };
  return detail::run_tagged(seq, rule, hook);
}

inline Coloring color_dh_cfcn(const ExtensionSequence& seq) {
  return detail::strip_tags(color_dh_cfcn_tagged(seq), 3);
}

/// CFCN* 2-coloring for sequences that never use `missing`.
///   Pendant:   v1 -> 1, v2 -> 2, rest 0.
///   TrueTwin:  BFS bipartition, the side of v1 gets 1.
///   FalseTwin: pendant -> (0,a) if a != 0 else (x,x) with x != b;
///              true twin -> (0,b).
inline Coloring color_dh_restricted(const ExtensionSequence& seq, ExtOp missing) {
  seq.validate();
  if (seq.uses(missing))
    throw std::invalid_argument(std::string("sequence uses the excluded operation '") +
                                op_char(missing) + "'");
  switch (missing) {
    case ExtOp::Pendant: {
      std::vector<Color> c(seq.n, 0);
      c[0] = 1;
      c[1] = 2;
      return Coloring(std::move(c), 2);
    }
    case ExtOp::TrueTwin: {
      Graph g = seq_to_graph(seq);
      std::vector<Color> c(seq.n, 0);
      c[0] = 1;
      std::vector<Vertex> queue{0};
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (Vertex w : g.neighbors(queue[h])) {
          if (c[w] == 0) {
            c[w] = 3 - c[queue[h]];
            queue.push_back(w);
          } else if (c[w] == c[queue[h]]) {
            throw std::logic_error("graph without true twins is not bipartite");
          }
        }
      return Coloring(std::move(c), 2);
    }
    case ExtOp::FalseTwin: {
      auto rule = [](ExtOp op, Vertex vj, const std::vector<std::vector<Vertex>>&,
                     const std::vector<TaggedColor>& tag) -> TaggedColor {
        const Color a = tag[vj].a, b = tag[vj].b;
        if (op == ExtOp::TrueTwin) return {0, b};
        if (a != 0) return {0, a};
        Color x = b == 1 ? 2 : 1;
        return {x, x};
      };
      return detail::strip_tags(detail::run_tagged(seq, rule, {}), 2);
    }
  }
  return {};
}

/// CFON* 2-coloring of a cograph: v1 -> 1, v2 -> 2, rest 0.
inline Coloring color_cograph_cfon(const ExtensionSequence& seq) {
  seq.validate();
  if (seq.uses(ExtOp::Pendant))
    throw std::invalid_argument("cograph sequence must not contain pendant steps");
  std::vector<Color> c(seq.n, 0);
  c[0] = 1;
  c[1] = 2;
  return Coloring(std::move(c), 2);
}

}  // namespace cfc

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfc/extension.hpp"
#include "cfc/graph.hpp"
#include "cfc/wexpr.hpp"

namespace cfc {

enum class GkBase { Edge, Triangle };

struct GkLimits {
  std::uint64_t max_vertices = 100000;
};

namespace detail {

inline std::uint64_t gk_size(unsigned k, GkBase base) {
  std::uint64_t s = base == GkBase::Edge ? 2 : 3;
  for (unsigned K = 3; K <= k; ++K) {
    std::uint64_t b = std::uint64_t{1} << (K - 1);
    s = b + (b - 1) * 2 * s;
    if (s > (std::uint64_t{1} << 40)) return s;
  }
  return s;
}

inline void check_gk(unsigned k, GkBase base, const GkLimits& lim) {
  if (k < 2) throw std::invalid_argument("G_k needs k >= 2");
  if (k > 30 || gk_size(k, base) > lim.max_vertices)
    throw CeilingExceeded("G_" + std::to_string(k) + " exceeds the vertex ceiling of " +
                          std::to_string(lim.max_vertices));
}

// Vertex ids follow construction order: for a tree node, first its two
// subtrees, then the first copy of G_{k-1}, then the second. Leaves of the
// tree are the bottom vertices.
class GkGraphBuilder {
public:
  explicit GkGraphBuilder(GkBase base) : base_(base) {}

  // Appends one copy of G_k; returns its id range [first, next_).
  std::pair<Vertex, Vertex> copy(unsigned k) {
    Vertex first = next_;
    if (k == 2) {
      unsigned sz = base_ == GkBase::Edge ? 2 : 3;
      for (unsigned i = 0; i < sz; ++i)
        for (unsigned j = i + 1; j < sz; ++j) es_.emplace_back(first + i, first + j);
      next_ += sz;
    } else {
      tree(k - 1, k);
    }
    return {first, next_};
  }

  Graph finish() const { return Graph(next_, es_); }

private:
  // Tree node at height h inside G_K; returns its bottom vertices B(x).
  std::vector<Vertex> tree(unsigned h, unsigned K) {
    if (h == 0) return {next_++};
    auto by = tree(h - 1, K);
    auto bz = tree(h - 1, K);
    for (Vertex a : by)
      for (Vertex b : bz) es_.emplace_back(a, b);
    by.insert(by.end(), bz.begin(), bz.end());
    for (int c = 0; c < 2; ++c) {
      auto [lo, hi] = copy(K - 1);
      for (Vertex v = lo; v < hi; ++v)
        for (Vertex b : by) es_.emplace_back(b, v);
    }
    return by;
  }

  GkBase base_;
  Vertex next_ = 0;
  std::vector<Edge> es_;
};

// Mirror of GkGraphBuilder producing a 3-expression; alpha=1, beta=2, gamma=3.
class GkExprBuilder {
public:
  static constexpr Label kA = 1, kB = 2, kC = 3;
  explicit GkExprBuilder(GkBase base) : base_(base) {}

  // G_k with bottom vertices labeled alpha and copies gamma (k >= 3), or the
  // base graph with labels alpha/beta (k = 2).
  ExprBuilder::Ref top(unsigned k) {
    if (k == 2) return base();
    return tree(k - 1, k);
  }

  // G_k with every vertex labeled beta.
  ExprBuilder::Ref copy(unsigned k) {
    auto t = top(k);
    t = b_.relabel(kA, kB, t);
    if (k > 2) t = b_.relabel(kC, kB, t);
    return t;
  }

  ExprBuilder& builder() { return b_; }

private:
  ExprBuilder::Ref base() {
    auto t = b_.join(kA, kB, b_.unite(b_.vertex(next_, kA), b_.vertex(next_ + 1, kB)));
    next_ += 2;
    if (base_ == GkBase::Triangle) {
      t = b_.relabel(kB, kA, t);
      t = b_.join(kA, kB, b_.unite(t, b_.vertex(next_++, kB)));
    }
    return t;
  }

  ExprBuilder::Ref tree(unsigned h, unsigned K) {
    if (h == 0) return b_.vertex(next_++, kA);
    auto y = tree(h - 1, K);
    auto z = tree(h - 1, K);
    auto t = b_.join(kA, kB, b_.unite(b_.relabel(kA, kB, y), z));
    t = b_.relabel(kB, kA, t);
    auto c1 = copy(K - 1);
    auto c2 = copy(K - 1);
    t = b_.join(kA, kB, b_.unite(t, b_.unite(c1, c2)));
    return b_.relabel(kB, kC, t);
  }

  GkBase base_;
  VertexId next_ = 0;
  ExprBuilder b_;
};

inline Graph gen_gk(unsigned k, GkBase base, const GkLimits& lim) {
  check_gk(k, base, lim);
  GkGraphBuilder b(base);
  b.copy(k);
  return b.finish();
}

inline WExpr expr_for_gk(unsigned k, GkBase base, const GkLimits& lim) {
  check_gk(k, base, lim);
  GkExprBuilder b(base);
  auto root = b.top(k);
  return b.builder().finish(root);
}

}  // namespace detail

/// G_2 is an edge; G_{k+1} is a 2^k-clique B with a full binary tree over it,
/// and two copies of G_k joined to B(x) for every inner tree node x.
inline Graph gen_gk_cn(unsigned k, GkLimits lim = {}) { return detail::gen_gk(k, GkBase::Edge, lim); }

/// Same recursion from a triangle.
inline Graph gen_gk_on(unsigned k, GkLimits lim = {}) {
  return detail::gen_gk(k, GkBase::Triangle, lim);
}

/// 3-expression whose graph equals gen_gk_cn(k) vertex for vertex.
inline WExpr expr_for_gk_cn(unsigned k, GkLimits lim = {}) {
  return detail::expr_for_gk(k, GkBase::Edge, lim);
}

/// 3-expression whose graph equals gen_gk_on(k) vertex for vertex.
inline WExpr expr_for_gk_on(unsigned k, GkLimits lim = {}) {
  return detail::expr_for_gk(k, GkBase::Triangle, lim);
}

/// A = {a_0..a_{2^{k-1}-1}} (ids first), then levels L_1..L_k; b^i_j is
/// adjacent to a_t for 2^{i-1} j <= t < 2^{i-1}(j+1).
inline Graph gen_bipartite_dh(unsigned k) {
  if (k < 2) throw std::invalid_argument("bipartite DH family needs k >= 2");
  if (k > 20) throw CeilingExceeded("bipartite DH family limited to k <= 20");
  const Vertex na = Vertex{1} << (k - 1);
  std::vector<Edge> es;
  Vertex next = na;
  for (unsigned i = 1; i <= k; ++i) {
    const Vertex span = Vertex{1} << (i - 1);
    const Vertex cnt = Vertex{1} << (k - i);
    for (Vertex j = 0; j < cnt; ++j, ++next)
      for (Vertex t = span * j; t < span * (j + 1); ++t) es.emplace_back(t, next);
  }
  return Graph(next, es);
}

/// 2-expression for a twin-only extension sequence. The cotree starts as a
/// series node over v1, v2; a true twin of v_j turns leaf v_j into a series
/// node (v_j, v_i), a false twin into a parallel node.
inline WExpr cograph_expr(const ExtensionSequence& seq) {
  seq.validate();
  if (seq.uses(ExtOp::Pendant))
    throw std::invalid_argument("cograph expression needs a sequence without pendant steps");
  struct Node {
    bool series;
    int left, right;  // -1 for a leaf
    Vertex v;
  };
  std::vector<Node> t{{true, 1, 2, 0}, {false, -1, -1, 0}, {false, -1, -1, 1}};
  std::vector<int> leaf(seq.n, -1);
  leaf[0] = 1;
  leaf[1] = 2;
  for (const auto& s : seq.steps) {
    Vertex vi = s.i - 1, vj = s.j - 1;
    int at = leaf[vj];
    int l = static_cast<int>(t.size()), r = l + 1;
    t.push_back({false, -1, -1, vj});
    t.push_back({false, -1, -1, vi});
    t[at] = {s.op == ExtOp::TrueTwin, l, r, 0};
    leaf[vj] = l;
    leaf[vi] = r;
  }
  ExprBuilder b;
  // Every subexpression leaves all its vertices on label 1.
  auto rec = [&](auto&& self, int x) -> ExprBuilder::Ref {
    const Node& nd = t[x];
    if (nd.left < 0) return b.vertex(nd.v, 1);
    auto l = self(self, nd.left);
    auto r = self(self, nd.right);
    if (!nd.series) return b.unite(l, r);
    auto j = b.join(1, 2, b.unite(l, b.relabel(1, 2, r)));
    return b.relabel(2, 1, j);
  };
  return b.finish(rec(rec, 0));
}

struct SplitGraph {
  Graph graph;
  std::vector<Vertex> clique;       // K
  std::vector<Vertex> independent;  // I
};

/// Throws unless (K, I) partitions the vertices, K is a clique and I is
/// independent.
inline void check_split_partition(const Graph& g, const std::vector<Vertex>& K,
                                  const std::vector<Vertex>& I) {
  std::vector<int> side(g.n(), -1);
  for (Vertex v : K) {
    if (v >= g.n() || side[v] != -1) throw std::invalid_argument("clique set is not a set of vertices");
    side[v] = 0;
  }
  for (Vertex v : I) {
    if (v >= g.n() || side[v] != -1) throw std::invalid_argument("independent set overlaps or is out of range");
    side[v] = 1;
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (side[v] == -1) throw std::invalid_argument("vertex " + std::to_string(v) + " is in neither K nor I");
  for (std::size_t a = 0; a < K.size(); ++a)
    for (std::size_t b = a + 1; b < K.size(); ++b)
      if (!g.adjacent(K[a], K[b]))
        throw std::invalid_argument("K is not a clique: " + std::to_string(K[a]) + " " +
                                    std::to_string(K[b]));
  for (Vertex v : I)
    for (Vertex w : g.neighbors(v))
      if (side[w] == 1)
        throw std::invalid_argument("I is not independent: " + std::to_string(v) + " " +
                                    std::to_string(w));
}

/// G1 adds x = n and y = n+1 adjacent to everything. G2 turns V1 into a
/// clique and adds an I-vertex per edge of E1 (adjacent to both ends) and a
/// pendant I-vertex per vertex of V1. E1 order: edges of g ascending, then
/// (v,x) for v in V, then (v,y) for v in V, then (x,y). I-vertices follow V1
/// in that order, then the pendants in vertex order.
inline SplitGraph split_reduction(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("split reduction needs at least one vertex");
  const Vertex n = static_cast<Vertex>(g.n());
  const Vertex x = n, y = n + 1, n1 = n + 2;
  std::vector<Edge> e1 = g.edges();
  for (Vertex v = 0; v < n; ++v) e1.emplace_back(v, x);
  for (Vertex v = 0; v < n; ++v) e1.emplace_back(v, y);
  e1.emplace_back(x, y);

  std::vector<Edge> es;
  for (Vertex a = 0; a < n1; ++a)
    for (Vertex b = a + 1; b < n1; ++b) es.emplace_back(a, b);
  Vertex next = n1;
  for (auto [u, v] : e1) {
    es.emplace_back(u, next);
    es.emplace_back(v, next);
    ++next;
  }
  for (Vertex v = 0; v < n1; ++v) es.emplace_back(v, next++);

  SplitGraph out{Graph(next, es), {}, {}};
  for (Vertex v = 0; v < next; ++v) (v < n1 ? out.clique : out.independent).push_back(v);
  return out;
}

/// Keeps the colors of V, gives x and y the colors k+1 and k+2, and leaves
/// every I-vertex uncolored.
inline Coloring extend_reduction_coloring(const Graph& g, const std::vector<Color>& proper) {
  if (!is_proper_coloring(g, proper))
    throw std::invalid_argument("input is not a proper coloring with nonzero colors");
  Color k = 0;
  for (Color c : proper) k = std::max(k, c);
  const std::size_t n = g.n();
  const std::size_t total = (n + 2) + (g.m() + 2 * n + 1) + (n + 2);
  std::vector<Color> c(total, 0);
  for (std::size_t v = 0; v < n; ++v) c[v] = proper[v];
  c[n] = k + 1;
  c[n + 1] = k + 2;
  return Coloring(std::move(c), k + 2);
}

}  // namespace cfc

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

using Label = std::uint32_t;
using VertexId = std::uint64_t;

struct Introduce {
  VertexId id;
  Label label;
};
struct Union {
  std::size_t left, right;
};
struct Relabel {
  Label from, to;
  std::size_t child;
};
struct Join {
  Label a, b;
  std::size_t child;
};

using ExprNode = std::variant<Introduce, Union, Relabel, Join>;

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : std::invalid_argument(msg + " at line " + std::to_string(line) + ", column " +
                              std::to_string(col)),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

private:
  std::size_t line_, col_;
};

/// A w-expression stored as a node array in post-order (children precede
/// parents); the last node is the root.
class WExpr {
public:
  WExpr() = default;

  const std::vector<ExprNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t root() const { return nodes_.size() - 1; }
  bool empty() const { return nodes_.empty(); }

  /// Largest label mentioned anywhere.
  Label width() const {
    Label w = 0;
    for (const auto& nd : nodes_)
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Introduce>) w = std::max(w, x.label);
            if constexpr (std::is_same_v<T, Relabel>) w = std::max({w, x.from, x.to});
            if constexpr (std::is_same_v<T, Join>) w = std::max({w, x.a, x.b});
          },
          nd);
    return w;
  }

  /// Vertex ids of all Introduce leaves, ascending.
  std::vector<VertexId> vertex_ids() const {
    std::vector<VertexId> ids;
    for (const auto& nd : nodes_)
      if (auto* in = std::get_if<Introduce>(&nd)) ids.push_back(in->id);
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  friend class ExprBuilder;

private:
  std::vector<ExprNode> nodes_;
};

/// Arena for composing expressions. Handles refer to nodes in the arena;
/// finish() extracts the subtree below a handle in post-order and validates it.
class ExprBuilder {
public:
  using Ref = std::size_t;

  Ref vertex(VertexId id, Label label) { return push(Introduce{id, label}); }
  Ref unite(Ref l, Ref r) { return push(Union{l, r}); }
  Ref relabel(Label from, Label to, Ref c) { return push(Relabel{from, to, c}); }
  Ref join(Label a, Label b, Ref c) { return push(Join{a, b, c}); }

  const ExprNode& node(Ref r) const { return arena_[r]; }

  WExpr finish(Ref root) const {
    WExpr e;
    std::vector<std::pair<Ref, bool>> st{{root, false}};
    std::vector<std::size_t> pos_stack;
    while (!st.empty()) {
      auto [r, expanded] = st.back();
      st.pop_back();
      const ExprNode& nd = arena_[r];
      if (!expanded) {
        st.push_back({r, true});
        if (auto* u = std::get_if<Union>(&nd)) {
          st.push_back({u->right, false});
          st.push_back({u->left, false});
        } else if (auto* rl = std::get_if<Relabel>(&nd)) {
          st.push_back({rl->child, false});
        } else if (auto* j = std::get_if<Join>(&nd)) {
          st.push_back({j->child, false});
        }
        continue;
      }
      ExprNode out = nd;
      if (auto* u = std::get_if<Union>(&out)) {
        u->right = pos_stack.back();
        pos_stack.pop_back();
        u->left = pos_stack.back();
        pos_stack.pop_back();
      } else if (auto* rl = std::get_if<Relabel>(&out)) {
        rl->child = pos_stack.back();
        pos_stack.pop_back();
      } else if (auto* j = std::get_if<Join>(&out)) {
        j->child = pos_stack.back();
        pos_stack.pop_back();
      }
      pos_stack.push_back(e.nodes_.size());
      e.nodes_.push_back(out);
    }
    validate(e);
    return e;
  }

  static void validate(const WExpr& e) {
    if (e.empty()) throw std::invalid_argument("empty expression");
    std::unordered_set<VertexId> ids;
    for (const auto& nd : e.nodes())
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Introduce>) {
              if (x.label == 0) throw std::invalid_argument("label 0 at vertex " + std::to_string(x.id));
              if (!ids.insert(x.id).second)
                throw std::invalid_argument("duplicate vertex id " + std::to_string(x.id));
            } else if constexpr (std::is_same_v<T, Relabel>) {
              if (x.from == 0 || x.to == 0) throw std::invalid_argument("label 0 in relabel");
              if (x.from == x.to) throw std::invalid_argument("relabel with equal labels");
            } else if constexpr (std::is_same_v<T, Join>) {
              if (x.a == 0 || x.b == 0) throw std::invalid_argument("label 0 in join");
              if (x.a == x.b) throw std::invalid_argument("join with equal labels");
            }
          },
          nd);
  }

private:
  Ref push(ExprNode nd) {
    arena_.push_back(nd);
    return arena_.size() - 1;
  }
  std::vector<ExprNode> arena_;
};

namespace detail {

class WExprParser {
public:
  WExprParser(std::string_view text, Label max_label) : s_(text), max_label_(max_label) {}

  WExpr parse() {
    auto root = expr();
    skip_ws();
    if (pos_ != s_.size()) error("trailing input");
    return b_.finish(root);
  }

private:
  [[noreturn]] void error(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ch) error(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) error("number too large");
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) error("expected a number");
    return v;
  }

  Label label() {
    skip_ws();
    std::size_t at = pos_;
    std::uint64_t v = number();
    if (v < 1 || v > max_label_) {
      pos_ = at;
      error("label " + std::to_string(v) + " out of range 1.." + std::to_string(max_label_));
    }
    return static_cast<Label>(v);
  }

  ExprBuilder::Ref expr() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char op = s_[pos_];
    std::size_t at = pos_++;
    expect('(');
    ExprBuilder::Ref r;
    switch (op) {
      case 'v': {
        std::size_t id_at = (skip_ws(), pos_);
        VertexId id = number();
        expect(',');
        Label l = label();
        if (!ids_.insert(id).second) {
          pos_ = id_at;
          error("duplicate vertex id " + std::to_string(id));
        }
        r = b_.vertex(id, l);
        break;
      }
      case 'u': {
        auto a = expr();
        expect(',');
        auto c = expr();
        r = b_.unite(a, c);
        break;
      }
      case 'r':
      case 'j': {
        Label i = label();
        expect(',');
        Label j = label();
        if (i == j) {
          pos_ = at;
          error(std::string(op == 'r' ? "relabel" : "join") + " needs distinct labels");
        }
        expect(',');
        auto c = expr();
        r = op == 'r' ? b_.relabel(i, j, c) : b_.join(i, j, c);
        break;
      }
      default:
        pos_ = at;
        error(std::string("unknown operator '") + op + "'");
    }
    expect(')');
    return r;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Label max_label_;
  ExprBuilder b_;
  std::unordered_set<VertexId> ids_;
};

}  // namespace detail

/// Grammar: v(ID,LABEL) | u(E,E) | r(I,J,E) | j(I,J,E); whitespace ignored.
inline WExpr parse_wexpr(std::string_view text, Label max_label = 64) {
  return detail::WExprParser(text, max_label).parse();
}

inline void print_wexpr(std::ostream& os, const WExpr& e, std::size_t at) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Introduce>) {
          os << "v(" << x.id << ',' << x.label << ')';
        } else if constexpr (std::is_same_v<T, Union>) {
          os << "u(";
          print_wexpr(os, e, x.left);
          os << ',';
          print_wexpr(os, e, x.right);
          os << ')';
        } else {
          os << (std::is_same_v<T, Relabel> ? "r(" : "j(");
          if constexpr (std::is_same_v<T, Relabel>)
            os << x.from << ',' << x.to << ',';
          else
            os << x.a << ',' << x.b << ',';
          print_wexpr(os, e, x.child);
          os << ')';
        }
      },
      e.nodes()[at]);
}

inline std::string to_string(const WExpr& e) {
  std::ostringstream os;
  print_wexpr(os, e, e.root());
  return os.str();
}

struct LabeledGraph {
  Graph graph;
  std::vector<Label> labels;   // final label per dense vertex
  std::vector<VertexId> ids;   // dense vertex -> expression id (ascending)
};

namespace detail {

// Walks the expression bottom-up keeping, per node, the vertices grouped by
// label. Calls on_edge(u, v, join_node) for every pair a join produces.
template <class OnEdge>
std::vector<Label> eval_walk(const WExpr& e, const std::vector<VertexId>& ids, OnEdge&& on_edge) {
  using Groups = std::map<Label, std::vector<Vertex>>;
  auto dense = [&](VertexId id) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Groups> at(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& nd = e.nodes()[i];
    if (auto* in = std::get_if<Introduce>(&nd)) {
      at[i][in->label].push_back(dense(in->id));
    } else if (auto* u = std::get_if<Union>(&nd)) {
      at[i] = std::move(at[u->left]);
      for (auto& [l, vs] : at[u->right]) {
        auto& dst = at[i][l];
        dst.insert(dst.end(), vs.begin(), vs.end());
      }
      at[u->right].clear();
    } else if (auto* r = std::get_if<Relabel>(&nd)) {
      at[i] = std::move(at[r->child]);
      auto it = at[i].find(r->from);
      if (it != at[i].end()) {
        auto moved = std::move(it->second);
        at[i].erase(it);
        auto& dst = at[i][r->to];
        dst.insert(dst.end(), moved.begin(), moved.end());
      }
    } else if (auto* j = std::get_if<Join>(&nd)) {
      at[i] = std::move(at[j->child]);
      auto ia = at[i].find(j->a), ib = at[i].find(j->b);
      if (ia != at[i].end() && ib != at[i].end())
        for (Vertex x : ia->second)
          for (Vertex y : ib->second) on_edge(x, y, i);
    }
  }
  std::vector<Label> labels(ids.size(), 0);
  for (auto& [l, vs] : at[e.root()])
    for (Vertex v : vs) labels[v] = l;
  return labels;
}

inline std::uint64_t edge_key(Vertex x, Vertex y) {
  if (x > y) std::swap(x, y);
  return (std::uint64_t{x} << 32) | y;
}

}  // namespace detail

/// Graph of the expression. Dense vertex i is the i-th smallest expression id.
inline LabeledGraph eval_graph(const WExpr& e) {
  LabeledGraph out;
  out.ids = e.vertex_ids();
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> es;
  out.labels = detail::eval_walk(e, out.ids, [&](Vertex x, Vertex y, std::size_t) {
    if (seen.insert(detail::edge_key(x, y)).second) es.emplace_back(x, y);
  });
  out.graph = Graph(out.ids.size(), es);
  return out;
}

/// True iff no join produces an edge that already exists.
inline bool is_irredundant(const WExpr& e) {
  auto ids = e.vertex_ids();
  std::unordered_set<std::uint64_t> seen;
  bool ok = true;
  detail::eval_walk(e, ids, [&](Vertex x, Vertex y, std::size_t) {
    if (!seen.insert(detail::edge_key(x, y)).second) ok = false;
  });
  return ok;
}

/// Drops every join whose label classes are joined again by an ancestor.
/// Labels move as whole classes, so such a join only produces edges that the
/// ancestor produces anyway. Any duplicated edge comes from a pair of joins of
/// this shape, so the result is irredundant.
inline WExpr make_irredundant(const WExpr& e) {
  const std::size_t n = e.size();
  std::vector<std::size_t> parent(n, n);
  for (std::size_t i = 0; i < n; ++i)
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Union>) {
            parent[x.left] = i;
            parent[x.right] = i;
          } else if constexpr (!std::is_same_v<T, Introduce>) {
            parent[x.child] = i;
          }
        },
        e.nodes()[i]);

  std::vector<char> drop(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto* j = std::get_if<Join>(&e.nodes()[i]);
    if (!j) continue;
    Label a = j->a, b = j->b;
    for (std::size_t p = parent[i]; p < n && a != b; p = parent[p]) {
      const auto& nd = e.nodes()[p];
      if (auto* r = std::get_if<Relabel>(&nd)) {
        if (a == r->from) a = r->to;
        if (b == r->from) b = r->to;
      } else if (auto* jj = std::get_if<Join>(&nd)) {
        if ((jj->a == a && jj->b == b) || (jj->a == b && jj->b == a)) {
          drop[i] = 1;
          break;
        }
      }
    }
  }

  ExprBuilder b;
  std::vector<ExprBuilder::Ref> ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& nd = e.nodes()[i];
    if (auto* in = std::get_if<Introduce>(&nd)) {
      ref[i] = b.vertex(in->id, in->label);
    } else if (auto* u = std::get_if<Union>(&nd)) {
      ref[i] = b.unite(ref[u->left], ref[u->right]);
    } else if (auto* r = std::get_if<Relabel>(&nd)) {
      ref[i] = b.relabel(r->from, r->to, ref[r->child]);
    } else if (auto* j = std::get_if<Join>(&nd)) {
      ref[i] = drop[i] ? ref[j->child] : b.join(j->a, j->b, ref[j->child]);
    }
  }
  return b.finish(ref[e.root()]);
}

}  // namespace cfc

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

enum class ExtOp { Pendant, TrueTwin, FalseTwin };

inline char op_char(ExtOp op) {
  switch (op) {
    case ExtOp::Pendant: return 'P';
    case ExtOp::TrueTwin: return 'T';
    case ExtOp::FalseTwin: return 'F';
  }
  return '?';
}

inline ExtOp op_from_char(char c) {
  switch (c) {
    case 'P': return ExtOp::Pendant;
    case 'T': return ExtOp::TrueTwin;
    case 'F': return ExtOp::FalseTwin;
  }
  throw std::invalid_argument(std::string("unknown extension op '") + c + "'");
}

/// Step i (1-based, i >= 3) attaches v_i to v_j, j < i.
struct ExtStep {
  unsigned i;
  ExtOp op;
  unsigned j;
};

/// One-vertex extension sequence starting from the edge v1 v2.
/// Vertex v_i is graph vertex i-1.
struct ExtensionSequence {
  unsigned n = 2;
  std::vector<ExtStep> steps;  // steps[t] builds v_{t+3}

  void validate() const {
    if (n < 2) throw std::invalid_argument("extension sequence needs n >= 2");
    if (steps.size() != n - 2)
      throw std::invalid_argument("extension sequence with n=" + std::to_string(n) + " needs " +
                                  std::to_string(n - 2) + " steps, got " +
                                  std::to_string(steps.size()));
    for (std::size_t t = 0; t < steps.size(); ++t) {
      const auto& s = steps[t];
      if (s.i != t + 3)
        throw std::invalid_argument("step " + std::to_string(t) + " should build v" +
                                    std::to_string(t + 3));
      if (s.j < 1 || s.j >= s.i)
        throw std::invalid_argument("step for v" + std::to_string(s.i) + " refers to v" +
                                    std::to_string(s.j));
    }
  }

  bool uses(ExtOp op) const {
    for (const auto& s : steps)
      if (s.op == op) return true;
    return false;
  }

  /// Sequence restricted to v1..v_m.
  ExtensionSequence prefix(unsigned m) const {
    ExtensionSequence p;
    p.n = m;
    p.steps.assign(steps.begin(), steps.begin() + (m - 2));
    return p;
  }
};

inline Graph seq_to_graph(const ExtensionSequence& seq) {
  seq.validate();
  std::vector<std::vector<Vertex>> adj(seq.n);
  std::vector<Edge> es{{0, 1}};
  adj[0].push_back(1);
  adj[1].push_back(0);
  for (const auto& s : seq.steps) {
    Vertex v = s.i - 1, u = s.j - 1;
    std::vector<Vertex> nb;
    if (s.op == ExtOp::Pendant) {
      nb = {u};
    } else {
      nb = adj[u];
      if (s.op == ExtOp::TrueTwin) nb.push_back(u);
    }
    for (Vertex w : nb) {
      es.emplace_back(w, v);
      adj[w].push_back(v);
      adj[v].push_back(w);
    }
  }
  return Graph(seq.n, es);
}

inline ExtensionSequence read_sequence(std::istream& in) {
  ExtensionSequence seq;
  std::string line;
  bool have_n = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_n) {
      if (!(ls >> seq.n)) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected n");
      have_n = true;
      continue;
    }
    ExtStep s{};
    std::string op;
    if (!(ls >> s.i >> op >> s.j) || op.size() != 1)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'i OP j'");
    s.op = op_from_char(op[0]);
    seq.steps.push_back(s);
  }
  if (!have_n) throw std::invalid_argument("empty sequence file");
  seq.validate();
  return seq;
}

inline void write_sequence(std::ostream& out, const ExtensionSequence& seq) {
  out << seq.n << '\n';
  for (const auto& s : seq.steps) out << s.i << ' ' << op_char(s.op) << ' ' << s.j << '\n';
}

}  // namespace cfc

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfc/extension.hpp"
#include "cfc/geometry.hpp"
#include "cfc/graph.hpp"
#include "cfc/wexpr.hpp"

namespace cfc {

namespace detail {

// Non-blank lines that do not start with '#', with their line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

[[noreturn]] inline void bad_line(std::size_t no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(no) + ": " + what);
}

}  // namespace detail

/// "n m" header, then m lines "u v"; '#' starts a comment line.
inline Graph read_graph(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw std::invalid_argument("graph file has no header");
  std::istringstream hs(lines[0].second);
  long long n = -1, m = -1;
  std::string extra;
  if (!(hs >> n >> m) || n < 0 || m < 0 || (hs >> extra)) detail::bad_line(lines[0].first, "expected 'n m'");
  if (lines.size() - 1 != static_cast<std::size_t>(m))
    throw std::invalid_argument("graph header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(lines.size() - 1));
  std::vector<Edge> es;
  for (std::size_t t = 1; t < lines.size(); ++t) {
    std::istringstream ls(lines[t].second);
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || (ls >> extra)) detail::bad_line(lines[t].first, "expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) detail::bad_line(lines[t].first, "vertex out of range");
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<std::size_t>(n), es);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// One line of space-separated colors.
inline Coloring read_coloring(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.size() != 1) throw std::invalid_argument("coloring file must contain exactly one line");
  std::istringstream ls(lines[0].second);
  std::vector<Color> c;
  std::string tok;
  while (ls >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-') detail::bad_line(lines[0].first, "bad color '" + tok + "'");
    c.push_back(static_cast<Color>(v));
  }
  return Coloring(std::move(c));
}

inline void write_coloring(std::ostream& out, const Coloring& c) {
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
  out << '\n';
}

inline IntervalScene read_intervals(std::istream& in) {
  IntervalScene s;
  for (auto& [no, line] : detail::content_lines(in)) {
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) detail::bad_line(no, "expected 'L R'");
    try {
      s.push_back({parse_rational(a), parse_rational(b)});
    } catch (const std::invalid_argument& e) {
      detail::bad_line(no, e.what());
    }
    if (!(s.back().l < s.back().r)) detail::bad_line(no, "interval needs L < R");
  }
  return s;
}

inline void write_intervals(std::ostream& out, const IntervalScene& s) {
  for (const auto& iv : s) out << format_rational(iv.l) << ' ' << format_rational(iv.r) << '\n';
}

inline PointScene read_points(std::istream& in) {
  PointScene s;
  for (auto& [no, line] : detail::content_lines(in)) {
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) detail::bad_line(no, "expected 'x y'");
    try {
      s.push_back({parse_rational(a), parse_rational(b)});
    } catch (const std::invalid_argument& e) {
      detail::bad_line(no, e.what());
    }
  }
  return s;
}

inline void write_points(std::ostream& out, const PointScene& s) {
  for (const auto& p : s) out << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
}

inline WExpr read_wexpr(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_wexpr(ss.str());
}

inline void write_wexpr(std::ostream& out, const WExpr& e) { out << to_string(e) << '\n'; }

/// Opens `path` or throws with the path in the message.
inline std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  return f;
}

template <class Reader>
auto load(const std::string& path, Reader&& reader) {
  auto f = open_input(path);
  try {
    return reader(f);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace cfc

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

/// K(n,k): k-subsets of [n], adjacent iff disjoint. Subsets are bitmasks
/// (bit e-1 for element e); increasing mask value is colex order.
struct KneserParams {
  unsigned n = 0;
  unsigned k = 0;

  void check() const {
    if (k == 0 || n < 2 * k + 1)
      throw std::invalid_argument("Kneser parameters need k >= 1 and n >= 2k+1 (got n=" +
                                  std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
};

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

struct KneserLimits {
  std::uint64_t max_vertices = 100000;
  std::uint64_t max_edges = 5000000;
};

/// All k-subsets of [n] in colex order.
inline std::vector<std::uint64_t> kneser_vertices(const KneserParams& p, KneserLimits lim = {}) {
  p.check();
  if (p.n > 63) throw CeilingExceeded("Kneser ground set larger than 63 is not materialized");
  std::uint64_t nv = binomial(p.n, p.k);
  if (nv > lim.max_vertices)
    throw CeilingExceeded("K(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") has " +
                          std::to_string(nv) + " vertices, above ceiling " +
                          std::to_string(lim.max_vertices));
  std::vector<std::uint64_t> out;
  out.reserve(nv);
  std::uint64_t s = (std::uint64_t{1} << p.k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << p.n;
  while (s < limit) {
    out.push_back(s);
    // Gosper's hack: next mask with the same popcount.
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

inline Graph kneser_graph(const KneserParams& p, KneserLimits lim = {}) {
  auto vs = kneser_vertices(p, lim);
  std::uint64_t deg = binomial(p.n - p.k, p.k);
  if (vs.size() * deg / 2 > lim.max_edges)
    throw CeilingExceeded("K(" + std::to_string(p.n) + "," + std::to_string(p.k) +
                          ") has too many edges to materialize");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if ((vs[i] & vs[j]) == 0) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(vs.size(), es);
}

inline unsigned subset_max(std::uint64_t s) { return 64 - static_cast<unsigned>(std::countl_zero(s)); }

/// Color of subset s in the CFON* coloring with k+1 colors: subsets of [2k]
/// get max(s) - (k-1), all others 0.
inline Color kneser_cfon_color(const KneserParams& p, std::uint64_t s) {
  unsigned m = subset_max(s);
  return m <= 2 * p.k ? static_cast<Color>(m - (p.k - 1)) : 0;
}

/// Color of subset s in the CFCN* coloring.
///   n >= 3k:       subsets of [2k-1] get max(s) - (k-1), others 0 (k colors).
///   n <= 3k-1:     subsets of [2k+1] get 1 if they meet {1,2}, else 2; a
///                  subset with max m > 2k+1 gets m - 2k + 1 (n-2k+1 colors).
inline Color kneser_cfcn_color(const KneserParams& p, std::uint64_t s) {
  unsigned m = subset_max(s);
  if (p.n >= 3 * p.k) return m <= 2 * p.k - 1 ? static_cast<Color>(m - (p.k - 1)) : 0;
  if (m <= 2 * p.k + 1) return (s & 3) ? 1 : 2;
  return static_cast<Color>(m - 2 * p.k + 1);
}

inline Color kneser_cfcn_palette(const KneserParams& p) {
  return p.n >= 3 * p.k ? p.k : p.n - 2 * p.k + 1;
}

/// Materialized colorings, indexed like kneser_vertices.
inline Coloring color_kneser_cfon(const KneserParams& p, KneserLimits lim = {}) {
  std::vector<Color> c;
  for (auto s : kneser_vertices(p, lim)) c.push_back(kneser_cfon_color(p, s));
  return Coloring(std::move(c), p.k + 1);
}

inline Coloring color_kneser_cfcn(const KneserParams& p, KneserLimits lim = {}) {
  std::vector<Color> c;
  for (auto s : kneser_vertices(p, lim)) c.push_back(kneser_cfcn_color(p, s));
  return Coloring(std::move(c), kneser_cfcn_palette(p));
}

/// "{1,2,4}" style rendering of a subset.
inline std::string subset_string(std::uint64_t s) {
  std::string out = "{";
  for (unsigned e = 1; s; ++e, s >>= 1)
    if (s & 1) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

}  // namespace cfc

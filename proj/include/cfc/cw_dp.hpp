#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cfc/graph.hpp"
#include "cfc/wexpr.hpp"

namespace cfc {

/// How a join rewrites the (S,T) profile of a vertex class.
///  Exact:   per color q, with c the count of q on the other side:
///           q in S^ -> S if c = 0, else neither;
///           q in T^ -> T if c = 0, S if c = 1, neither if c = 2.
///  Literal: every (S,T) admitted by the five textual conditions. This also
///           admits q in T when c >= 1, which leaves spurious "undominated"
///           entries; kept to demonstrate the difference in tests.
enum class JoinRule { Exact, Literal };

struct DpOptions {
  JoinRule join_rule = JoinRule::Exact;
  bool want_witness = true;
  std::uint64_t max_profile_bits = std::uint64_t{1} << 24;  // w * 3^k
  std::size_t max_keys = 4'000'000;                          // per node
};

struct DpResult {
  bool accepted = false;
  std::optional<Coloring> witness;  // indexed like eval_graph(e)
  std::size_t peak_keys = 0;
};

namespace detail {

using DpWords = boost::container::small_vector<std::uint64_t, 3>;

struct DpKeyHash {
  std::size_t operator()(const DpWords& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : k) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Key layout: w*(k+1) two-bit counters n_{a,q}, then w*3^k profile bits
/// m_{a,S,T}. The pair (S,T) has index sum_q digit_q * 3^(q-1) with digit 0 =
/// neither, 1 = q in S, 2 = q in T.
struct DpLayout {
  unsigned w, k, p3;  // p3 = 3^k
  std::size_t counters, bits, words;

  DpLayout(unsigned w_, unsigned k_) : w(w_), k(k_), p3(1) {
    for (unsigned i = 0; i < k; ++i) p3 *= 3;
    counters = std::size_t{w} * (k + 1);
    bits = std::size_t{w} * p3;
    words = (2 * counters + bits + 63) / 64;
  }

  std::size_t cpos(unsigned a, unsigned q) const { return 2 * (std::size_t{a} * (k + 1) + q); }
  std::size_t bpos(unsigned a, unsigned idx) const { return 2 * counters + std::size_t{a} * p3 + idx; }

  static unsigned get2(const DpWords& key, std::size_t pos) {
    return static_cast<unsigned>(key[pos / 64] >> (pos % 64) & 3u);
  }
  static void set2(DpWords& key, std::size_t pos, unsigned v) {
    key[pos / 64] &= ~(std::uint64_t{3} << (pos % 64));
    key[pos / 64] |= std::uint64_t{v} << (pos % 64);
  }
  static bool get1(const DpWords& key, std::size_t pos) { return key[pos / 64] >> (pos % 64) & 1u; }
  static void set1(DpWords& key, std::size_t pos) { key[pos / 64] |= std::uint64_t{1} << (pos % 64); }
  static void clr1(DpWords& key, std::size_t pos) {
    key[pos / 64] &= ~(std::uint64_t{1} << (pos % 64));
  }

  unsigned count(const DpWords& key, unsigned a, unsigned q) const { return get2(key, cpos(a, q)); }
  bool bit(const DpWords& key, unsigned a, unsigned idx) const { return get1(key, bpos(a, idx)); }

  DpWords empty() const { return DpWords(words, 0); }
};

struct DpParent {
  std::uint32_t a = 0, b = 0;
  Color color = 0;
};

struct DpNode {
  std::vector<DpWords> keys;
  std::vector<DpParent> parents;
  std::unordered_map<DpWords, std::uint32_t, DpKeyHash> index;

  bool insert(DpWords&& key, DpParent p, std::size_t limit) {
    auto [it, fresh] = index.try_emplace(std::move(key), static_cast<std::uint32_t>(keys.size()));
    if (!fresh) return false;
    if (keys.size() >= limit)
      throw CeilingExceeded("clique-width DP exceeded " + std::to_string(limit) +
                            " states at one node");
    keys.push_back(it->first);
    parents.push_back(p);
    return true;
  }
};

class CwDp {
public:
  CwDp(const WExpr& e, Color k, Mode m, DpOptions opt)
      : e_(e), k_(k), m_(m), opt_(opt), lay_(e.width(), k) {
    std::uint64_t width_bits = std::uint64_t{lay_.w} * lay_.p3;
    if (k == 0) throw std::invalid_argument("palette size must be at least 1");
    if (k > 20 || width_bits > opt_.max_profile_bits)
      throw CeilingExceeded("clique-width DP key width w*3^k = " + std::to_string(width_bits) +
                            " exceeds ceiling " + std::to_string(opt_.max_profile_bits));
    // Digit powers and the "T only" indices (sets S empty).
    pow3_.resize(k_ + 1, 1);
    for (unsigned q = 1; q <= k_; ++q) pow3_[q] = q == 1 ? 1 : pow3_[q - 1] * 3;
    for (unsigned idx = 0; idx < lay_.p3; ++idx) {
      bool s_empty = true;
      for (unsigned q = 1; q <= k_; ++q)
        if (digit(idx, q) == 1) s_empty = false;
      if (s_empty) undominated_.push_back(idx);
    }
  }

  DpResult run() {
    std::vector<DpNode> st(e_.size());
    DpResult res;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::visit([&](const auto& x) { step(st, i, x); }, e_.nodes()[i]);
      res.peak_keys = std::max(res.peak_keys, st[i].keys.size());
      st[i].index.clear();
      if (!opt_.want_witness) release_children(st, i);
    }
    const DpNode& root = st[e_.root()];
    for (std::uint32_t x = 0; x < root.keys.size(); ++x) {
      if (!accepting(root.keys[x])) continue;
      res.accepted = true;
      if (opt_.want_witness) res.witness = rebuild(st, x);
      break;
    }
    return res;
  }

private:
  unsigned digit(unsigned idx, unsigned q) const { return idx / pow3_[q] % 3; }

  bool accepting(const DpWords& key) const {
    for (unsigned a = 0; a < lay_.w; ++a)
      for (unsigned idx : undominated_)
        if (lay_.bit(key, a, idx)) return false;
    return true;
  }

  void release_children(std::vector<DpNode>& st, std::size_t i) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Union>) {
            st[x.left] = {};
            st[x.right] = {};
          } else if constexpr (!std::is_same_v<T, Introduce>) {
            st[x.child] = {};
          }
        },
        e_.nodes()[i]);
  }

  void step(std::vector<DpNode>& st, std::size_t i, const Introduce& x) {
    const unsigned a = x.label - 1;
    unsigned all_t = 0;
    for (unsigned q = 1; q <= k_; ++q) all_t += 2 * pow3_[q];
    for (Color q = m_.full() ? 1 : 0; q <= k_; ++q) {
      DpWords key = lay_.empty();
      DpLayout::set2(key, lay_.cpos(a, q), 1);
      unsigned idx = all_t;
      if (m_.closed() && q != 0) idx -= pow3_[q];  // digit 2 -> 1: dominated by itself
      DpLayout::set1(key, lay_.bpos(a, idx));
      st[i].insert(std::move(key), {0, 0, q}, opt_.max_keys);
    }
  }

  void step(std::vector<DpNode>& st, std::size_t i, const Union& x) {
    const DpNode& l = st[x.left];
    const DpNode& r = st[x.right];
    const std::size_t cbits = 2 * lay_.counters;
    for (std::uint32_t p = 0; p < l.keys.size(); ++p) {
      for (std::uint32_t q = 0; q < r.keys.size(); ++q) {
        DpWords key = l.keys[p];
        const DpWords& o = r.keys[q];
        for (std::size_t w = 0; w < key.size(); ++w) key[w] |= o[w];
        for (std::size_t c = 0; c < cbits; c += 2) {
          unsigned s = DpLayout::get2(l.keys[p], c) + DpLayout::get2(o, c);
          DpLayout::set2(key, c, s > 2 ? 2 : s);
        }
        st[i].insert(std::move(key), {p, q, 0}, opt_.max_keys);
      }
    }
  }

  void step(std::vector<DpNode>& st, std::size_t i, const Relabel& x) {
    const unsigned from = x.from - 1, to = x.to - 1;
    const DpNode& c = st[x.child];
    for (std::uint32_t p = 0; p < c.keys.size(); ++p) {
      DpWords key = c.keys[p];
      for (unsigned q = 0; q <= k_; ++q) {
        unsigned s = lay_.count(key, from, q) + lay_.count(key, to, q);
        DpLayout::set2(key, lay_.cpos(to, q), s > 2 ? 2 : s);
        DpLayout::set2(key, lay_.cpos(from, q), 0);
      }
      for (unsigned idx = 0; idx < lay_.p3; ++idx) {
        if (lay_.bit(key, from, idx)) {
          DpLayout::set1(key, lay_.bpos(to, idx));
          DpLayout::clr1(key, lay_.bpos(from, idx));
        }
      }
      st[i].insert(std::move(key), {p, 0, 0}, opt_.max_keys);
    }
  }

  // New profile bits for class `a` after joining with class `b`, written into
  // `out` (which has the a-row cleared).
  void join_row(const DpWords& old, unsigned a, unsigned b, DpWords& out) const {
    for (unsigned idx = 0; idx < lay_.p3; ++idx) {
      if (!lay_.bit(old, a, idx)) continue;
      if (opt_.join_rule == JoinRule::Exact) {
        unsigned nidx = 0;
        for (unsigned q = 1; q <= k_; ++q) {
          unsigned d = digit(idx, q), c = lay_.count(old, b, q), nd = 0;
          if (d == 1) nd = c == 0 ? 1 : 0;
          if (d == 2) nd = c == 0 ? 2 : (c == 1 ? 1 : 0);
          nidx += nd * pow3_[q];
        }
        DpLayout::set1(out, lay_.bpos(a, nidx));
        continue;
      }
      // Literal reading: enumerate the product of per-color options.
      std::vector<std::vector<unsigned>> opts(k_ + 1);
      for (unsigned q = 1; q <= k_; ++q) {
        unsigned d = digit(idx, q), c = lay_.count(old, b, q);
        if (d == 1) opts[q] = {c == 0 ? 1u : 0u};
        else if (d == 2) opts[q] = c == 0 ? std::vector<unsigned>{2} : c == 1 ? std::vector<unsigned>{1, 2} : std::vector<unsigned>{2, 0};
        else opts[q] = {0};
      }
      std::vector<unsigned> pick(k_ + 1, 0);
      while (true) {
        unsigned nidx = 0;
        for (unsigned q = 1; q <= k_; ++q) nidx += opts[q][pick[q]] * pow3_[q];
        DpLayout::set1(out, lay_.bpos(a, nidx));
        unsigned q = 1;
        while (q <= k_ && ++pick[q] == opts[q].size()) pick[q++] = 0;
        if (q > k_) break;
      }
    }
  }

  void step(std::vector<DpNode>& st, std::size_t i, const Join& x) {
    const unsigned a = x.a - 1, b = x.b - 1;
    const DpNode& c = st[x.child];
    for (std::uint32_t p = 0; p < c.keys.size(); ++p) {
      const DpWords& old = c.keys[p];
      DpWords key = old;
      for (unsigned idx = 0; idx < lay_.p3; ++idx) {
        DpLayout::clr1(key, lay_.bpos(a, idx));
        DpLayout::clr1(key, lay_.bpos(b, idx));
      }
      join_row(old, a, b, key);
      join_row(old, b, a, key);
      st[i].insert(std::move(key), {p, 0, 0}, opt_.max_keys);
    }
  }

  Coloring rebuild(const std::vector<DpNode>& st, std::uint32_t root_key) const {
    auto ids = e_.vertex_ids();
    std::vector<Color> col(ids.size(), 0);
    std::vector<std::pair<std::size_t, std::uint32_t>> todo{{e_.root(), root_key}};
    while (!todo.empty()) {
      auto [node, key] = todo.back();
      todo.pop_back();
      const DpParent& par = st[node].parents[key];
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Introduce>) {
              auto v = std::lower_bound(ids.begin(), ids.end(), x.id) - ids.begin();
              col[static_cast<std::size_t>(v)] = par.color;
            } else if constexpr (std::is_same_v<T, Union>) {
              todo.push_back({x.left, par.a});
              todo.push_back({x.right, par.b});
            } else {
              todo.push_back({x.child, par.a});
            }
          },
          e_.nodes()[node]);
    }
    return Coloring(std::move(col), k_);
  }

  const WExpr& e_;
  Color k_;
  Mode m_;
  DpOptions opt_;
  DpLayout lay_;
  std::vector<unsigned> pow3_;
  std::vector<unsigned> undominated_;
};

}  // namespace detail

/// Decides whether the graph of `e` has a conflict-free coloring of mode `m`
/// with colors 1..k. The expression must be irredundant.
inline DpResult dp_decide(const WExpr& e, Color k, Mode m, DpOptions opt = {}) {
  if (!is_irredundant(e))
    throw std::invalid_argument("expression is redundant; apply make_irredundant first");
  return detail::CwDp(e, k, m, opt).run();
}

}  // namespace cfc

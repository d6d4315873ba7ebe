#pragma once

// Command-line front end. run() is kept separate from main() so the tests can
// drive it with in-memory streams.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfc/cfc.hpp"

namespace cfc::cli {

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kCeiling = 3 };

namespace detail {

inline Mode parse_mode(const std::string& m, bool full) {
  Neighborhood nb = m == "cn" ? Neighborhood::Closed : Neighborhood::Open;
  return {nb, full ? Variant::Full : Variant::Partial};
}

// Writes through `fn` to `path`, or to `fallback` when no path is given.
inline void emit(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  fn(f);
}

inline std::string set_string(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

inline std::vector<Vertex> read_vertex_list(std::istream& in) {
  std::vector<Vertex> out;
  for (auto& [no, line] : cfc::detail::content_lines(in)) {
    std::istringstream ls(line);
    long long v;
    while (ls >> v) {
      if (v < 0) cfc::detail::bad_line(no, "negative vertex");
      out.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) cfc::detail::bad_line(no, "expected vertex ids");
  }
  return out;
}

inline std::vector<Vertex> complement(std::size_t n, const std::vector<Vertex>& k) {
  std::vector<char> in(n, 0);
  for (Vertex v : k)
    if (v < n) in[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

struct Colored {
  Colored(Graph g, Coloring c, Mode m, unsigned b, std::string x = {})
      : graph(std::move(g)), coloring(std::move(c)), mode(m), bound(b), extra(std::move(x)) {}

  Graph graph;
  Coloring coloring;
  Mode mode;
  unsigned bound = 0;
  std::string extra;  // additional key=value pairs for the summary
  bool has_coloring = true;
};

inline const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names = {
      "dh-cn",       "dh-restricted", "cograph-on", "block-on",  "interval-on",    "proper-interval-on",
      "interval-cn", "split-cn",      "kneser-on",  "kneser-cn", "unit-square-on", "unit-disk-on"};
  return names;
}

struct ColorArgs {
  std::string cls, input, clique, missing;
  unsigned n = 0, k = 0;
};

inline Colored run_colorer(const ColorArgs& a) {
  auto need_input = [&] {
    if (a.input.empty()) throw std::invalid_argument("--input is required for class " + a.cls);
  };
  const std::string& c = a.cls;
  if (c == "dh-cn" || c == "dh-restricted" || c == "cograph-on") {
    need_input();
    auto seq = load(a.input, read_sequence);
    Graph g = seq_to_graph(seq);
    if (c == "dh-cn") return {g, color_dh_cfcn(seq), Mode::cn_partial(), 3};
    if (c == "cograph-on") return {g, color_cograph_cfon(seq), Mode::on_partial(), 2};
    if (a.missing.size() != 1) throw std::invalid_argument("--missing must be one of P, T, F");
    return {g, color_dh_restricted(seq, op_from_char(a.missing[0])), Mode::cn_partial(), 2};
  }
  if (c == "block-on" || c == "split-cn") {
    need_input();
    Graph g = load(a.input, read_graph);
    if (c == "block-on") return {g, color_block_cfon(g), Mode::on_full(), 3};
    if (a.clique.empty()) throw std::invalid_argument("--clique is required for class split-cn");
    auto K = load(a.clique, read_vertex_list);
    auto r = color_split_cfcn(g, K, complement(g.n(), K));
    return {g, r.coloring, Mode::cn_partial(), 2, "value=" + std::to_string(r.value) + " "};
  }
  if (c == "interval-on" || c == "proper-interval-on" || c == "interval-cn") {
    need_input();
    auto s = load(a.input, read_intervals);
    Graph g = geometric_graph(s);
    if (c == "interval-on") return {g, color_interval_cfon(s), Mode::on_partial(), 3};
    if (c == "proper-interval-on") return {g, color_proper_interval_cfon(s), Mode::on_partial(), 2};
    auto d = decide_interval_cfcn(s);
    Colored out{g, {}, Mode::cn_partial(), 2, "value=" + std::to_string(d.value) + " "};
    if (d.witness)
      out.coloring = *d.witness;
    else
      out.has_coloring = false;
    return out;
  }
  if (c == "kneser-on" || c == "kneser-cn") {
    KneserParams p{a.n, a.k};
    p.check();
    Graph g = kneser_graph(p);
    if (c == "kneser-on") return {g, color_kneser_cfon(p), Mode::on_partial(), p.k + 1};
    return {g, color_kneser_cfcn(p), Mode::cn_partial(), kneser_cfcn_palette(p)};
  }
  if (c == "unit-square-on" || c == "unit-disk-on") {
    need_input();
    auto s = load(a.input, read_points);
    if (c == "unit-square-on")
      return {geometric_graph(s, Shape::Square), color_unit_square_cfon(s), Mode::on_partial(), 27};
    return {geometric_graph(s, Shape::Disk), color_unit_disk_cfon(s), Mode::on_partial(), 54};
  }
  throw std::invalid_argument("unknown class '" + c + "'");
}

// Closed-form Kneser colorings for instances too large to materialize.
inline void print_kneser_rule(std::ostream& out, const std::string& cls, const KneserParams& p) {
  out << "class=" << cls << " n=" << p.n << " k=" << p.k << " vertices=" << binomial(p.n, p.k);
  if (cls == "kneser-on") {
    out << " palette=" << p.k + 1 << " rule=\"max(S)-" << p.k - 1 << " if max(S)<=" << 2 * p.k
        << " else 0\"\n";
  } else if (p.n >= 3 * p.k) {
    out << " palette=" << p.k << " rule=\"max(S)-" << p.k - 1 << " if max(S)<=" << 2 * p.k - 1
        << " else 0\"\n";
  } else {
    out << " palette=" << kneser_cfcn_palette(p) << " rule=\"if max(S)<=" << 2 * p.k + 1
        << ": 1 if S meets {1,2} else 2; else max(S)-" << 2 * p.k - 1 << "\"\n";
  }
}

struct BenchRow {
  std::string cls;
  std::size_t n;
  unsigned bound;
  std::size_t used;
  bool valid;
};

inline BenchRow bench_row(const std::string& cls, const Graph& g, const Coloring& c, Mode m,
                          unsigned bound) {
  bool ok = verify(g, c, m).valid && c.colors_used() <= bound;
  return {cls, g.n(), bound, c.colors_used(), ok};
}

inline std::vector<BenchRow> bench_tables(std::uint64_t seed) {
  std::vector<BenchRow> rows;
  const ExtOp all[] = {ExtOp::Pendant, ExtOp::TrueTwin, ExtOp::FalseTwin};
  for (unsigned t = 0; t < 3; ++t) {
    auto seq = random_extension_seq(12 + 4 * t, {all, all + 3}, seed + t);
    rows.push_back(bench_row("dh-cn", seq_to_graph(seq), color_dh_cfcn(seq), Mode::cn_partial(), 3));
  }
  for (ExtOp miss : all) {
    std::vector<ExtOp> ops;
    for (ExtOp o : all)
      if (o != miss) ops.push_back(o);
    auto seq = random_extension_seq(16, ops, seed);
    rows.push_back(bench_row(std::string("dh-restricted-") + op_char(miss), seq_to_graph(seq),
                             color_dh_restricted(seq, miss), Mode::cn_partial(), 2));
  }
  {
    auto seq = random_extension_seq(16, {ExtOp::TrueTwin, ExtOp::FalseTwin}, seed);
    rows.push_back(bench_row("cograph-on", seq_to_graph(seq), color_cograph_cfon(seq), Mode::on_partial(), 2));
  }
  {
    Graph g = named_graph("block-lb");
    rows.push_back(bench_row("block-on", g, color_block_cfon(g), Mode::on_full(), 3));
    Graph h = random_block_graph(30, seed);
    rows.push_back(bench_row("block-on", h, color_block_cfon(h), Mode::on_full(), 3));
  }
  {
    auto s = named_interval_scene("interval-lb");
    rows.push_back(bench_row("interval-on", geometric_graph(s), color_interval_cfon(s), Mode::on_partial(), 3));
    auto r = random_intervals(40, seed);
    rows.push_back(bench_row("interval-on", geometric_graph(r), color_interval_cfon(r), Mode::on_partial(), 3));
    auto u = random_unit_intervals(40, seed);
    rows.push_back(bench_row("proper-interval-on", geometric_graph(u), color_proper_interval_cfon(u),
                             Mode::on_partial(), 2));
    auto b = named_interval_scene("bull");
    auto d = decide_interval_cfcn(b);
    if (d.witness) rows.push_back(bench_row("interval-cn", geometric_graph(b), *d.witness, Mode::cn_partial(), 2));
  }
  {
    auto sp = random_split_graph(20, seed);
    auto r = color_split_cfcn(sp.graph, sp.clique, sp.independent);
    rows.push_back(bench_row("split-cn", sp.graph, r.coloring, Mode::cn_partial(), 2));
  }
  for (auto p : {KneserParams{5, 2}, KneserParams{7, 3}, KneserParams{10, 2}}) {
    Graph g = kneser_graph(p);
    rows.push_back(bench_row("kneser-on", g, color_kneser_cfon(p), Mode::on_partial(), p.k + 1));
  }
  for (auto p : {KneserParams{5, 2}, KneserParams{7, 3}, KneserParams{9, 3}, KneserParams{11, 4}}) {
    Graph g = kneser_graph(p);
    rows.push_back(bench_row("kneser-cn", g, color_kneser_cfcn(p), Mode::cn_partial(), kneser_cfcn_palette(p)));
  }
  {
    auto ps = named_point_scene("unitsq-example");
    rows.push_back(bench_row("unit-square-on", geometric_graph(ps, Shape::Square), color_unit_square_cfon(ps),
                             Mode::on_partial(), 27));
    rows.push_back(bench_row("unit-disk-on", geometric_graph(ps, Shape::Disk), color_unit_disk_cfon(ps),
                             Mode::on_partial(), 54));
    auto sq = random_connected_points(60, Shape::Square, seed);
    rows.push_back(bench_row("unit-square-on", geometric_graph(sq, Shape::Square), color_unit_square_cfon(sq),
                             Mode::on_partial(), 27));
    auto dk = random_connected_points(60, Shape::Disk, seed);
    rows.push_back(bench_row("unit-disk-on", geometric_graph(dk, Shape::Disk), color_unit_disk_cfon(dk),
                             Mode::on_partial(), 54));
  }
  return rows;
}

struct GenArgs {
  std::string family, graph, out, clique_out, ops = "PTF";
  unsigned k = 0, n = 0;
  std::optional<std::uint64_t> seed;
  double p = 0.5;
  bool expr = false, scene = false;
};

inline void run_gen(const GenArgs& a, std::ostream& out) {
  const std::string& f = a.family;
  auto put_graph = [&](const Graph& g) { emit(a.out, out, [&](std::ostream& o) { write_graph(o, g); }); };
  auto put_clique = [&](const std::vector<Vertex>& K) {
    if (a.clique_out.empty()) return;
    emit(a.clique_out, out, [&](std::ostream& o) {
      for (std::size_t i = 0; i < K.size(); ++i) o << (i ? " " : "") << K[i];
      o << '\n';
    });
  };
  if (f == "gk-cn" || f == "gk-on") {
    if (a.expr) {
      WExpr e = f == "gk-cn" ? expr_for_gk_cn(a.k) : expr_for_gk_on(a.k);
      emit(a.out, out, [&](std::ostream& o) { write_wexpr(o, e); });
    } else {
      put_graph(f == "gk-cn" ? gen_gk_cn(a.k) : gen_gk_on(a.k));
    }
    return;
  }
  if (f == "bipartite-dh") return put_graph(gen_bipartite_dh(a.k));
  if (f == "split-reduction") {
    if (a.graph.empty()) throw std::invalid_argument("split-reduction needs --graph");
    auto r = split_reduction(load(a.graph, read_graph));
    put_graph(r.graph);
    put_clique(r.clique);
    return;
  }
  if (f.rfind("named:", 0) == 0) {
    std::string name = f.substr(6);
    if (!a.scene) return put_graph(named_graph(name));
    if (name == "unitsq-example") {
      auto s = named_point_scene(name);
      return emit(a.out, out, [&](std::ostream& o) { write_points(o, s); });
    }
    auto s = named_interval_scene(name);
    return emit(a.out, out, [&](std::ostream& o) { write_intervals(o, s); });
  }
  if (f.rfind("random:", 0) == 0) {
    if (!a.seed) throw std::invalid_argument("random generation requires --seed");
    if (a.n == 0) throw std::invalid_argument("random generation requires --n");
    std::string kind = f.substr(7);
    std::uint64_t seed = *a.seed;
    if (kind == "extension-seq" || kind == "cotree") {
      std::vector<ExtOp> ops;
      if (kind == "cotree") {
        ops = {ExtOp::TrueTwin, ExtOp::FalseTwin};
      } else {
        for (char ch : a.ops) ops.push_back(op_from_char(ch));
      }
      auto seq = random_extension_seq(a.n, ops, seed);
      if (kind == "cotree") {
        WExpr e = cograph_expr(seq);
        return emit(a.out, out, [&](std::ostream& o) { write_wexpr(o, e); });
      }
      return emit(a.out, out, [&](std::ostream& o) { write_sequence(o, seq); });
    }
    if (kind == "intervals" || kind == "unit-intervals") {
      auto s = kind == "intervals" ? random_intervals(a.n, seed) : random_unit_intervals(a.n, seed);
      return emit(a.out, out, [&](std::ostream& o) { write_intervals(o, s); });
    }
    if (kind == "points-box" || kind == "points-square" || kind == "points-disk" || kind == "stripe") {
      PointScene s;
      if (kind == "points-box")
        s = random_points_box(a.n, seed);
      else if (kind == "stripe")
        s = random_stripe_points(a.n, seed);
      else
        s = random_connected_points(a.n, kind == "points-square" ? Shape::Square : Shape::Disk, seed);
      return emit(a.out, out, [&](std::ostream& o) { write_points(o, s); });
    }
    if (kind == "split-graph") {
      auto sp = random_split_graph(a.n, seed);
      put_graph(sp.graph);
      put_clique(sp.clique);
      return;
    }
    if (kind == "block-graph") return put_graph(random_block_graph(a.n, seed));
    if (kind == "graph") return put_graph(random_graph(a.n, seed, a.p));
    throw std::invalid_argument("unknown random kind '" + kind + "'");
  }
  throw std::invalid_argument("unknown family '" + f + "'");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict-free coloring toolkit", "cfc"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> modes = {"on", "cn"};

  std::string mode = "on", graph_path, coloring_path, coloring_out;
  bool full = false;
  unsigned max_k = 0;
  std::size_t ceiling = ExactLimits{}.max_vertices;

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring");
  verify_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember(modes));
  verify_cmd->add_flag("--full", full);
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--coloring", coloring_path)->required();

  auto* exact_cmd = app.add_subcommand("exact", "Minimum number of colors by exhaustive search");
  exact_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember(modes));
  exact_cmd->add_flag("--full", full);
  exact_cmd->add_option("--graph", graph_path)->required();
  exact_cmd->add_option("--max-k", max_k)->required();
  exact_cmd->add_option("--ceiling", ceiling, "Largest component size searched");
  exact_cmd->add_option("--coloring-out", coloring_out);

  auto* chrom_cmd = app.add_subcommand("chromatic", "Chromatic number");
  chrom_cmd->add_option("--graph", graph_path)->required();
  chrom_cmd->add_option("--max-k", max_k)->required();

  detail::ColorArgs ca;
  std::string color_out;
  bool rule = false;
  auto* color_cmd = app.add_subcommand("color", "Run a class colorer and verify the result");
  color_cmd->add_option("--class", ca.cls)->required()->check(CLI::IsMember(detail::class_names()));
  color_cmd->add_option("--input", ca.input);
  color_cmd->add_option("--n", ca.n);
  color_cmd->add_option("--k", ca.k);
  color_cmd->add_option("--clique", ca.clique, "Clique side of the split partition (split-cn)");
  color_cmd->add_option("--missing", ca.missing, "Excluded operation P|T|F (dh-restricted)");
  color_cmd->add_option("--out", color_out);
  color_cmd->add_flag("--rule", rule, "Print the Kneser coloring as a rule instead of materializing it");

  std::string expr_path;
  unsigned dp_k = 0;
  bool literal = false;
  auto* dp_cmd = app.add_subcommand("dp", "Decide k-colorability along a w-expression");
  dp_cmd->add_option("--expr", expr_path)->required();
  dp_cmd->add_option("--k", dp_k)->required();
  dp_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember(modes));
  dp_cmd->add_flag("--full", full);
  dp_cmd->add_flag("--literal-join", literal, "Use the unmodified join rule");

  detail::GenArgs ga;
  std::uint64_t seed_value = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", ga.family)->required();
  gen_cmd->add_option("--k", ga.k);
  gen_cmd->add_option("--n", ga.n);
  auto* seed_opt = gen_cmd->add_option("--seed", seed_value);
  gen_cmd->add_option("--ops", ga.ops, "Allowed extension operations, e.g. TF");
  gen_cmd->add_option("--p", ga.p, "Edge probability (random:graph)");
  gen_cmd->add_option("--graph", ga.graph, "Input graph (split-reduction)");
  gen_cmd->add_option("--out", ga.out);
  gen_cmd->add_option("--clique-out", ga.clique_out);
  gen_cmd->add_flag("--expr", ga.expr, "Write the w-expression instead of the graph");
  gen_cmd->add_flag("--scene", ga.scene, "Write the geometric scene of a named graph");

  std::string pid_graph, pid_intervals;
  auto* pid_cmd = app.add_subcommand("pid", "Perfect independent dominating set");
  auto* pg = pid_cmd->add_option("--graph", pid_graph);
  auto* pi = pid_cmd->add_option("--intervals", pid_intervals);
  pg->excludes(pi);
  pid_cmd->require_option(1);

  std::string suite, bench_out;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember({"tables"}));
  bench_cmd->add_option("--out", bench_out)->required();
  bench_cmd->add_option("--seed", bench_seed);

  std::vector<const char*> argv{"cfc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(verify_cmd)) {
      Graph g = load(graph_path, read_graph);
      Coloring c = load(coloring_path, read_coloring);
      auto r = verify(g, c, detail::parse_mode(mode, full));
      if (r.valid) {
        out << "VALID\n";
        return kOk;
      }
      out << "INVALID witness=" << *r.witness << '\n';
      return kNegative;
    }
    if (app.got_subcommand(exact_cmd)) {
      Graph g = load(graph_path, read_graph);
      Mode m = detail::parse_mode(mode, full);
      ExactLimits lim{ceiling};
      for (Color k = 1; k <= max_k; ++k)
        if (auto c = exists_cf_coloring(g, m, k, lim)) {
          out << k << '\n';
          if (!coloring_out.empty())
            detail::emit(coloring_out, out, [&](std::ostream& o) { write_coloring(o, *c); });
          return kOk;
        }
      out << "UNKNOWN(>" << max_k << ")\n";
      return kNegative;
    }
    if (app.got_subcommand(chrom_cmd)) {
      Graph g = load(graph_path, read_graph);
      if (auto k = chromatic_number(g, max_k)) {
        out << *k << '\n';
        return kOk;
      }
      out << "UNKNOWN(>" << max_k << ")\n";
      return kNegative;
    }
    if (app.got_subcommand(color_cmd)) {
      if (rule) {
        if (ca.cls != "kneser-on" && ca.cls != "kneser-cn")
          throw std::invalid_argument("--rule applies to the Kneser classes only");
        KneserParams p{ca.n, ca.k};
        p.check();
        detail::print_kneser_rule(out, ca.cls, p);
        return kOk;
      }
      auto r = detail::run_colorer(ca);
      auto head = [&] { out << "class=" << ca.cls << " n=" << r.graph.n() << ' ' << r.extra; };
      if (!r.has_coloring) {
        head();
        out << "witness=none\n";
        return kOk;
      }
      auto v = verify(r.graph, r.coloring, r.mode);
      if (!v.valid) {
        head();
        out << "colors_used=" << r.coloring.colors_used() << " valid=false witness=" << *v.witness << '\n';
        return kNegative;
      }
      detail::emit(color_out, out, [&](std::ostream& o) { write_coloring(o, r.coloring); });
      head();
      out << "colors_used=" << r.coloring.colors_used() << " bound=" << r.bound << " valid=true\n";
      return kOk;
    }
    if (app.got_subcommand(dp_cmd)) {
      WExpr e = make_irredundant(load(expr_path, read_wexpr));
      DpOptions opt;
      opt.join_rule = literal ? JoinRule::Literal : JoinRule::Exact;
      opt.want_witness = false;
      bool yes = dp_decide(e, dp_k, detail::parse_mode(mode, full), opt).accepted;
      out << (yes ? "YES" : "NO") << '\n';
      return yes ? kOk : kNegative;
    }
    if (app.got_subcommand(gen_cmd)) {
      if (*seed_opt) ga.seed = seed_value;
      detail::run_gen(ga, out);
      return kOk;
    }
    if (app.got_subcommand(pid_cmd)) {
      std::optional<std::vector<Vertex>> s;
      if (!pid_graph.empty())
        s = has_pid_bruteforce(load(pid_graph, read_graph));
      else
        s = pid_interval_dp(load(pid_intervals, read_intervals));
      if (!s) {
        out << "NONE\n";
        return kNegative;
      }
      out << detail::set_string(*s) << '\n';
      return kOk;
    }
    if (app.got_subcommand(bench_cmd)) {
      auto rows = detail::bench_tables(bench_seed);
      bool all = true;
      detail::emit(bench_out, out, [&](std::ostream& o) {
        o << "class,n,bound,colors_used,valid\n";
        for (const auto& r : rows) {
          o << r.cls << ',' << r.n << ',' << r.bound << ',' << r.used << ',' << (r.valid ? "true" : "false") << '\n';
          all = all && r.valid;
        }
      });
      out << "rows=" << rows.size() << " all_valid=" << (all ? "true" : "false") << '\n';
      return all ? kOk : kNegative;
    }
  } catch (const CeilingExceeded& e) {
    err << "ceiling exceeded: " << e.what() << '\n';
    return kCeiling;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cfc::cli

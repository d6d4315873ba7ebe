// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cfc/cfc.hpp"
#include "invariants.hpp"
#include "oracles.hpp"

using namespace cfc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) why << what;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double dt = seconds_since(t0);
  c.expect(dt < budget_s, "took " + std::to_string(dt) + " s, budget " + std::to_string(budget_s) + " s");
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), dt,
              c.ok ? "" : " : ", c.why.str().c_str());
  std::fflush(stdout);
  failures += !c.ok;
}

void timed(Check& c, double budget_s, const std::string& what, const std::function<bool()>& f) {
  auto t0 = Clock::now();
  bool ok = f();
  double dt = seconds_since(t0);
  c.expect(ok, what);
  c.expect(dt < budget_s, what + " took " + std::to_string(dt) + " s");
}

template <class F>
void colorer_suite(Check& c, const std::string& name, unsigned count, F&& make) {
  for (unsigned i = 0; i < count; ++i) {
    auto [g, col, mode, bound] = make(i);
    bool valid = verify(g, col, mode).valid;
    c.expect(valid, name + " invalid on instance " + std::to_string(i));
    c.expect(col.colors_used() <= bound, name + " over budget on instance " + std::to_string(i));
    if (!c.ok) return;
  }
}

struct Instance {
  Graph g;
  Coloring c;
  Mode m;
  unsigned bound;
};

}  // namespace

int main() {
  criterion(1, "exact values on named graphs", 3, [](Check& c) {
    timed(c, 1, "K3 ON = 2", [] { return min_cf_colors(named_graph("k3"), Mode::on_partial(), 4) == 2u; });
    timed(c, 1, "bull CN = 2", [] { return min_cf_colors(named_graph("bull"), Mode::cn_partial(), 4) == 2u; });
    timed(c, 1, "unitsq-example ON = 3",
          [] { return min_cf_colors(named_graph("unitsq-example"), Mode::on_partial(), 4) == 3u; });
  });

  criterion(2, "block graph needs three colors", 60, [](Check& c) {
    Graph g = named_graph("block-lb");
    c.expect(g.n() == 15, "block-lb size");
    c.expect(!exists_cf_coloring(g, Mode::on_partial(), 2), "2-coloring found");
    Coloring col = color_block_cfon(g);
    c.expect(verify(g, col, Mode::on_full()).valid && col.colors_used() <= 3, "block colorer");
  });

  criterion(3, "clique-width-3 family lower bounds", 10, [](Check& c) {
    c.expect(gen_gk_cn(3).n() == 16, "G3 size");
    c.expect(!exists_cf_coloring(gen_gk_cn(3), Mode::cn_full(), 2), "G3 has a CN-full 2-coloring");
    c.expect(!oracle::colorable(gen_gk_cn(3), true, true, 2), "oracle disagrees on G3");
    c.expect(!exists_cf_coloring(gen_gk_on(2), Mode::on_full(), 1), "K3 has an ON-full 1-coloring");
  });

  criterion(4, "bipartite distance-hereditary lower bound", 1, [](Check& c) {
    Graph g = gen_bipartite_dh(3);
    c.expect(g.n() == 11, "size");
    c.expect(!exists_cf_coloring(g, Mode::on_full(), 2), "ON-full 2-coloring found");
    c.expect(!oracle::colorable(g, false, true, 2), "oracle disagrees");
  });

  criterion(5, "DP agrees with exact solver on 100 cographs", 600, [](Check& c) {
    for (std::uint64_t seed = 0; seed < 100 && c.ok; ++seed) {
      auto seq = random_extension_seq(2 + seed % 8, {ExtOp::TrueTwin, ExtOp::FalseTwin}, 5000 + seed);
      WExpr e = make_irredundant(cograph_expr(seq));
      Graph g = eval_graph(e).graph;
      for (Mode m : kAllModes)
        for (Color k = 1; k <= 2; ++k) {
          auto r = dp_decide(e, k, m);
          bool want = exists_cf_coloring(g, m, k).has_value();
          std::string tag = "seed " + std::to_string(seed) + " " + to_string(m) + " k=" + std::to_string(k);
          c.expect(r.accepted == want, tag);
          if (r.accepted) c.expect(r.witness && verify(g, *r.witness, m).valid, tag + " witness");
        }
    }
  });

  criterion(6, "class colorers stay valid and within budget", 600, [](Check& c) {
    const unsigned N = 100;
    colorer_suite(c, "dh-cn", N, [](unsigned i) {
      auto s = random_extension_seq(2 + i % 40, {ExtOp::Pendant, ExtOp::TrueTwin, ExtOp::FalseTwin}, i);
      return Instance{seq_to_graph(s), color_dh_cfcn(s), Mode::cn_partial(), 3};
    });
    for (ExtOp miss : {ExtOp::Pendant, ExtOp::TrueTwin, ExtOp::FalseTwin}) {
      colorer_suite(c, "dh-restricted", N, [miss](unsigned i) {
        std::vector<ExtOp> ops;
        for (ExtOp o : {ExtOp::Pendant, ExtOp::TrueTwin, ExtOp::FalseTwin})
          if (o != miss) ops.push_back(o);
        auto s = random_extension_seq(2 + i % 40, ops, 100 + i);
        return Instance{seq_to_graph(s), color_dh_restricted(s, miss), Mode::cn_partial(), 2};
      });
    }
    colorer_suite(c, "cograph-on", N, [](unsigned i) {
      auto s = random_extension_seq(2 + i % 40, {ExtOp::TrueTwin, ExtOp::FalseTwin}, 200 + i);
      return Instance{seq_to_graph(s), color_cograph_cfon(s), Mode::on_partial(), 2};
    });
    colorer_suite(c, "block-on", N, [](unsigned i) {
      Graph g = random_block_graph(2 + i % 50, 300 + i);
      return Instance{g, color_block_cfon(g), Mode::on_full(), 3};
    });
    colorer_suite(c, "interval-on", N, [](unsigned i) {
      auto s = random_intervals(2 + i % 60, 400 + i);
      return Instance{geometric_graph(s), color_interval_cfon(s), Mode::on_partial(), 3};
    });
    colorer_suite(c, "proper-interval-on", N, [](unsigned i) {
      auto s = random_unit_intervals(2 + i % 60, 500 + i);
      return Instance{geometric_graph(s), color_proper_interval_cfon(s), Mode::on_partial(), 2};
    });
    colorer_suite(c, "interval-cn", N, [&c](unsigned i) {
      auto s = random_intervals(1 + i % 20, 600 + i);
      auto d = decide_interval_cfcn(s);
      c.expect(d.witness.has_value(), "interval-cn without witness on instance " + std::to_string(i));
      return Instance{geometric_graph(s), d.witness.value_or(Coloring(std::vector<Color>(s.size(), 0), 2)),
                      Mode::cn_partial(), 2};
    });
    colorer_suite(c, "split-cn", N, [](unsigned i) {
      auto sp = random_split_graph(2 + i % 40, 700 + i);
      return Instance{sp.graph, color_split_cfcn(sp.graph, sp.clique, sp.independent).coloring,
                      Mode::cn_partial(), 2};
    });
    std::vector<KneserParams> kneser;
    for (unsigned n = 3; n <= 50; ++n) kneser.push_back({n, 1});
    for (unsigned n = 5; n <= 34; ++n) kneser.push_back({n, 2});
    for (unsigned n = 7; n <= 20; ++n) kneser.push_back({n, 3});
    for (unsigned n = 9; n <= 16; ++n) kneser.push_back({n, 4});
    for (unsigned n = 11; n <= 15; ++n) kneser.push_back({n, 5});
    c.expect(kneser.size() >= N, "too few Kneser instances");
    colorer_suite(c, "kneser-on", kneser.size(), [&](unsigned i) {
      auto p = kneser[i];
      return Instance{kneser_graph(p), color_kneser_cfon(p), Mode::on_partial(), p.k + 1};
    });
    colorer_suite(c, "kneser-cn", kneser.size(), [&](unsigned i) {
      auto p = kneser[i];
      return Instance{kneser_graph(p), color_kneser_cfcn(p), Mode::cn_partial(),
                      std::min(p.k, p.n - 2 * p.k + 1)};
    });
    colorer_suite(c, "unit-square-on", N, [](unsigned i) {
      auto s = random_connected_points(2 + i % 80, Shape::Square, 800 + i);
      return Instance{geometric_graph(s, Shape::Square), color_unit_square_cfon(s), Mode::on_partial(), 27};
    });
    colorer_suite(c, "unit-disk-on", N, [](unsigned i) {
      auto s = random_connected_points(2 + i % 80, Shape::Disk, 900 + i);
      return Instance{geometric_graph(s, Shape::Disk), color_unit_disk_cfon(s), Mode::on_partial(), 54};
    });
  });

  criterion(7, "interval CN decision and PID sweep match brute force", 600, [](Check& c) {
    for (std::uint64_t seed = 0; seed < 200 && c.ok; ++seed) {
      auto s = random_intervals(1 + seed % 14, 10000 + seed);
      Graph g = geometric_graph(s);
      auto d = decide_interval_cfcn(s);
      auto want = min_cf_colors(g, Mode::cn_partial(), 3);
      c.expect(want && d.value == *want, "value mismatch at seed " + std::to_string(seed));
      c.expect(pid_interval_dp(s).has_value() == has_pid_bruteforce(g).has_value(),
               "PID mismatch at seed " + std::to_string(seed));
      c.expect(oracle::has_pid(g) == has_pid_bruteforce(g).has_value(), "PID oracle mismatch");
    }
  });

  criterion(8, "tag invariants on 200 extension sequences", 120, [](Check& c) {
    for (std::uint64_t seed = 0; seed < 200 && c.ok; ++seed) {
      auto seq = random_extension_seq(2 + seed % 11, {ExtOp::Pendant, ExtOp::TrueTwin, ExtOp::FalseTwin},
                                      20000 + seed);
      auto fail = inv::dh_tag_invariants(seq);
      c.expect(!fail, "seed " + std::to_string(seed) + ": " + fail.value_or(""));
    }
  });

  criterion(9, "stripe colorer on 200 stripes", 120, [](Check& c) {
    for (std::uint64_t seed = 0; seed < 200 && c.ok; ++seed) {
      auto s = random_stripe_points(1 + seed % 40, 30000 + seed);
      Coloring col = stripe_cfcn_2color(s);
      c.expect(verify(geometric_graph(s, Shape::Disk), col, Mode::cn_partial()).valid,
               "invalid at seed " + std::to_string(seed));
      c.expect(col.colors_used() <= 2, "more than two colors");
      c.expect(inv::stripe_separated(s, col), "colored points too close at seed " + std::to_string(seed));
    }
  });

  criterion(10, "split reduction on 30 random graphs", 600, [](Check& c) {
    unsigned exact_checked = 0;
    for (std::uint64_t seed = 0; seed < 30 && c.ok; ++seed) {
      Graph g = random_graph(1 + seed % 6, 40000 + seed, 0.5);
      unsigned chi = *chromatic_number(g, 6);
      auto proper = *proper_coloring(g, chi);
      auto red = split_reduction(g);
      Coloring col = extend_reduction_coloring(g, proper);
      std::string tag = "seed " + std::to_string(seed);
      c.expect(verify(red.graph, col, Mode::on_partial()).valid, tag + " invalid");
      c.expect(col.colors_used() == chi + 2, tag + " color count");
      if (red.graph.n() <= ExactLimits{}.max_vertices) {
        ++exact_checked;
        c.expect(min_cf_colors(red.graph, Mode::on_partial(), chi + 2) == chi + 2, tag + " optimum differs");
      }
    }
    c.expect(exact_checked >= 20, "too few instances small enough for the exact solver");
    std::printf("  exact optimum checked on %u of 30 reductions\n", exact_checked);
  });

  criterion(11, "large instances verify within their bounds", 60, [](Check& c) {
    auto s = named_interval_scene("interval-lb");
    Graph g = geometric_graph(s);
    c.expect(g.n() == 39, "interval-lb size");
    Coloring col = color_interval_cfon(s);
    c.expect(verify(g, col, Mode::on_partial()).valid && col.colors_used() <= 3, "interval-lb coloring");
    KneserParams p{10, 2};
    Graph k = kneser_graph(p);
    c.expect(k.n() == 45, "K(10,2) size");
    Coloring kc = color_kneser_cfon(p);
    c.expect(verify(k, kc, Mode::on_partial()).valid && kc.colors_used() == 3, "K(10,2) coloring");
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

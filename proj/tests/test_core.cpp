#include <gtest/gtest.h>

#include <sstream>

#include "cfc/cfc.hpp"
#include "oracles.hpp"

using namespace cfc;

namespace {

Graph path(unsigned n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es);
}

Graph cycle(unsigned n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, es);
}

}  // namespace

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Graph, BasicQueries) {
  Graph g = named_graph("bull");
  EXPECT_EQ(g.n(), 5u);
  EXPECT_EQ(g.m(), 5u);
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_FALSE(g.adjacent(3, 4));
  EXPECT_EQ(g.closed_neighbors(0), (std::vector<Vertex>{0, 1, 2}));
  Graph h = g.induced({1, 2, 3});
  EXPECT_EQ(h.m(), 2u);
  EXPECT_EQ(connected_components(Graph(3, {{0, 2}})).size(), 2u);
}

TEST(Verify, PathP3) {
  Graph g = path(3);
  EXPECT_TRUE(verify(g, Coloring({1, 2, 0}, 2), Mode::cn_partial()).valid);
  // Ends see only the uncolored center; the center sees 1 twice.
  auto r = verify(g, Coloring({1, 0, 1}, 1), Mode::on_partial());
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(*r.witness, 0u);
  auto q = verify(g, Coloring({1, 1, 1}, 1), Mode::on_partial());
  EXPECT_EQ(*q.witness, 1u);
  EXPECT_TRUE(verify(g, Coloring({0, 1, 0}, 1), Mode::cn_partial()).valid);
}

TEST(Verify, WitnessIsSmallestViolator) {
  Graph g = cycle(4);
  auto r = verify(g, Coloring({1, 1, 1, 1}, 1), Mode::on_full());
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(*r.witness, 0u);
}

TEST(Verify, Errors) {
  Graph g = path(3);
  EXPECT_THROW(verify(g, Coloring({1, 2}, 2), Mode::on_partial()), std::invalid_argument);
  EXPECT_THROW(verify(g, Coloring({1, 0, 2}, 2), Mode::on_full()), std::invalid_argument);
  EXPECT_THROW(verify(Graph(2, {}), Coloring({1, 1}, 1), Mode::on_partial()), std::invalid_argument);
  EXPECT_TRUE(verify(Graph(2, {}), Coloring({1, 1}, 1), Mode::cn_partial()).valid);
  EXPECT_THROW(Coloring({3}, 2), std::invalid_argument);
}

TEST(Verify, AgreesWithOracleOnRandomColorings) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(7, rng(), 0.4);
    bool isolated = false;
    for (Vertex v = 0; v < g.n(); ++v) isolated = isolated || g.degree(v) == 0;
    std::vector<Color> c(7);
    for (auto& x : c) x = static_cast<Color>(rng() % 4);
    auto a = oracle::matrix(g);
    for (Mode m : kAllModes) {
      bool has_zero = std::count(c.begin(), c.end(), 0u) > 0;
      if ((m.full() && has_zero) || (!m.closed() && isolated)) continue;
      EXPECT_EQ(verify(g, Coloring(c, 3), m).valid, oracle::valid(a, c, m.closed(), m.full()));
    }
  }
}

TEST(Exact, TableValues) {
  EXPECT_EQ(min_cf_colors(named_graph("k3"), Mode::on_partial(), 4), 2u);
  EXPECT_EQ(min_cf_colors(named_graph("k3"), Mode::on_full(), 4), 3u);
  EXPECT_EQ(min_cf_colors(named_graph("k22"), Mode::cn_partial(), 4), 2u);
  EXPECT_EQ(min_cf_colors(named_graph("bull"), Mode::cn_partial(), 4), 2u);
  EXPECT_EQ(min_cf_colors(named_graph("unitsq-example"), Mode::on_partial(), 4), 3u);
  EXPECT_EQ(min_cf_colors(named_graph("k2"), Mode::on_partial(), 4), 1u);
}

TEST(Exact, IsolatedVertexUnderOpenNeighborhood) {
  EXPECT_FALSE(exists_cf_coloring(Graph(3, {{0, 1}}), Mode::on_partial(), 3));
  EXPECT_TRUE(exists_cf_coloring(Graph(3, {{0, 1}}), Mode::cn_partial(), 1));
}

TEST(Exact, Ceiling) {
  EXPECT_THROW(min_cf_colors(path(49), Mode::cn_partial(), 2), CeilingExceeded);
  EXPECT_NO_THROW(min_cf_colors(path(49), Mode::cn_partial(), 2, ExactLimits{60}));
}

TEST(Exact, AgreesWithEnumeration) {
  Rng rng(5);
  for (int t = 0; t < 120; ++t) {
    unsigned n = 2 + rng() % 6;
    Graph g = random_graph(n, rng(), 0.5);
    for (Mode m : kAllModes)
      for (Color k = 1; k <= 2; ++k) {
        auto got = exists_cf_coloring(g, m, k);
        EXPECT_EQ(got.has_value(), oracle::colorable(g, m.closed(), m.full(), k))
            << to_string(m) << " k=" << k << " t=" << t;
        if (got) {
          EXPECT_TRUE(verify(g, *got, m).valid);
        }
      }
  }
}

TEST(Exact, ChromaticNumber) {
  EXPECT_EQ(chromatic_number(cycle(5), 5), 3u);
  EXPECT_EQ(chromatic_number(named_graph("petersen"), 5), 3u);
  EXPECT_EQ(chromatic_number(path(4), 5), 2u);
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(6, rng(), 0.5);
    EXPECT_EQ(chromatic_number(g, 6), oracle::chromatic(g));
  }
}

TEST(Exact, PidBruteforce) {
  auto p = has_pid_bruteforce(path(3));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, std::vector<Vertex>{1});
  EXPECT_FALSE(has_pid_bruteforce(cycle(4)));
  EXPECT_THROW(has_pid_bruteforce(path(21)), CeilingExceeded);
}

TEST(Kneser, Vertices) {
  auto vs = kneser_vertices({5, 2});
  ASSERT_EQ(vs.size(), 10u);
  EXPECT_EQ(subset_string(vs[0]), "{1,2}");
  EXPECT_EQ(subset_string(vs[1]), "{1,3}");
  EXPECT_EQ(subset_string(vs[2]), "{2,3}");
  EXPECT_EQ(subset_string(vs[3]), "{1,4}");
  Graph g = named_graph("petersen");
  EXPECT_EQ(g.m(), 15u);
  for (Vertex v = 0; v < g.n(); ++v) EXPECT_EQ(g.degree(v), 3u);
  EXPECT_THROW(kneser_vertices({4, 2}), std::invalid_argument);
  EXPECT_THROW(kneser_vertices({40, 10}), CeilingExceeded);
}

TEST(Geometry, Rationals) {
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1e3"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(format_rational(Rational(5, 4)), "1.25");
  EXPECT_EQ(format_rational(Rational(1, 3)), "1/3");
  EXPECT_EQ(format_rational(Rational(-2)), "-2");
}

TEST(Geometry, ClosedContacts) {
  EXPECT_TRUE(squares_meet({0, 0}, {2, 0}));
  EXPECT_TRUE(squares_meet({0, 0}, {2, 2}));
  EXPECT_FALSE(squares_meet({0, 0}, {Rational(201, 100), 0}));
  EXPECT_TRUE(disks_meet({0, 0}, {2, 0}));
  EXPECT_FALSE(disks_meet({0, 0}, {2, 2}));
  EXPECT_TRUE(intervals_meet({0, 1}, {1, 2}));
  EXPECT_FALSE(intervals_meet({0, 1}, {Rational(11, 10), 2}));
}

TEST(Geometry, Stripes) {
  EXPECT_EQ(square_stripe(Rational(2)), 1);
  EXPECT_EQ(square_stripe(Rational(201, 100)), 2);
  EXPECT_EQ(square_stripe(Rational(0)), 0);
  EXPECT_EQ(square_stripe(Rational(-1)), 0);
  EXPECT_EQ(disk_stripe(Rational(173, 100)), 1);
  EXPECT_EQ(disk_stripe(Rational(174, 100)), 2);
  EXPECT_EQ(disk_stripe(Rational(0)), 0);
  EXPECT_EQ(disk_stripe(Rational(-1)), 0);
  EXPECT_EQ(disk_stripe(Rational(-2)), -1);
  EXPECT_EQ(pos_mod(-1, 3), 2);
}

TEST(Named, BullScene) {
  auto s = named_interval_scene("bull");
  EXPECT_EQ(geometric_graph(s), named_graph("bull"));
}

TEST(Named, IntervalLbEdges) {
  auto s = named_interval_scene("interval-lb");
  ASSERT_EQ(s.size(), 39u);
  Graph g = named_graph("interval-lb");
  EXPECT_EQ(g.m(), 177u);
  auto want = oracle::interval_edges(s);
  std::set<std::pair<Vertex, Vertex>> got;
  for (auto e : g.edges()) got.insert(e);
  EXPECT_EQ(got, want);
}

TEST(Named, UnitSquareSceneRealizesGraph) {
  auto s = named_point_scene("unitsq-example");
  Graph g = named_graph("unitsq-example");
  EXPECT_EQ(geometric_graph(s, Shape::Square), g);
  EXPECT_EQ(geometric_graph(s, Shape::Disk), g);
}

TEST(Io, GraphRoundTrip) {
  Graph g = named_graph("block-lb");
  std::stringstream ss;
  write_graph(ss, g);
  EXPECT_EQ(read_graph(ss), g);
}

TEST(Io, GraphErrors) {
  std::stringstream a("3 2\n0 1\n");
  EXPECT_THROW(read_graph(a), std::invalid_argument);
  std::stringstream b("3 1\n0 5\n");
  EXPECT_THROW(read_graph(b), std::invalid_argument);
  std::stringstream c("# comment\n2 1\n\n0 1\n");
  EXPECT_EQ(read_graph(c).m(), 1u);
}

TEST(Io, ScenesAndColorings) {
  auto s = named_interval_scene("bull");
  std::stringstream ss;
  write_intervals(ss, s);
  auto back = read_intervals(ss);
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(back[i].l, s[i].l);
    EXPECT_EQ(back[i].r, s[i].r);
  }
  auto p = named_point_scene("unitsq-example");
  std::stringstream ps;
  write_points(ps, p);
  auto pb = read_points(ps);
  ASSERT_EQ(pb.size(), p.size());
  EXPECT_EQ(pb[7].x, p[7].x);

  std::stringstream cs;
  write_coloring(cs, Coloring({1, 0, 2}, 2));
  EXPECT_EQ(read_coloring(cs).colors, (std::vector<Color>{1, 0, 2}));
  std::stringstream bad("1 -2\n");
  EXPECT_THROW(read_coloring(bad), std::invalid_argument);
  std::stringstream inv("2 1\n");
  EXPECT_THROW(read_intervals(inv), std::invalid_argument);
}

TEST(Io, SequenceRoundTrip) {
  auto seq = random_extension_seq(9, {ExtOp::Pendant, ExtOp::TrueTwin, ExtOp::FalseTwin}, 4);
  std::stringstream ss;
  write_sequence(ss, seq);
  auto back = read_sequence(ss);
  EXPECT_EQ(seq_to_graph(back), seq_to_graph(seq));
  std::stringstream bad("3\n3 X 1\n");
  EXPECT_THROW(read_sequence(bad), std::invalid_argument);
  std::stringstream bad2("3\n3 P 3\n");
  EXPECT_THROW(read_sequence(bad2), std::invalid_argument);
}

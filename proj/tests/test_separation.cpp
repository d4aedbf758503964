#include "catch_amalgamated.hpp"

#include <random>

#include "morse/instances.hpp"
#include "morse/matching.hpp"
#include "morse/separation.hpp"
#include "oracles.hpp"

using namespace morse;
using Catch::Approx;

namespace {

// 6-cycle u0 w0 u1 w1 u2 w2 (u0): three lower and three upper nodes.
LevelGraph hexagon() {
  return LevelGraph::from_edges(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}});
}

// Random point on the edges of g satisfying the matching inequalities.
std::vector<double> random_point(const LevelGraph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(g.num_edges());
  for (auto& v : x) v = u(rng) < 0.25 ? 0.0 : (u(rng) < 0.3 ? 0.5 : u(rng));
  for (int pass = 0; pass < 2; ++pass)
    for (const auto* adj : {&g.lower_adj, &g.upper_adj})
      for (const auto& inc : *adj) {
        double s = 0.0;
        for (int e : inc) s += x[e];
        if (s > 1.0)
          for (int e : inc) x[e] /= s;
      }
  return x;
}

double recount(const LevelGraph& g, const std::vector<int>& edges, std::span<const double> x) {
  double s = 0.0;
  for (int e : edges) s += x[e];
  (void)g;
  return s - (edges.size() / 2.0 - 1.0);
}

bool is_simple_alternating_cycle(const LevelGraph& g, const std::vector<int>& edges) {
  if (edges.size() < 6 || edges.size() % 2) return false;
  std::set<int> lows, ups;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& a = g.edges[edges[k]];
    const auto& b = g.edges[edges[(k + 1) % edges.size()]];
    if (a.u != b.u && a.w != b.w) return false;  // consecutive edges share a node
    lows.insert(a.u);
    ups.insert(a.w);
  }
  return lows.size() == edges.size() / 2 && ups.size() == edges.size() / 2;
}

}  // namespace

TEST_CASE("uniform half on a 6-cycle") {
  auto g = hexagon();
  std::vector<double> x(6, 0.5);
  TransformedGraph tg(g, x);
  CHECK(tg.num_nodes() == 3);
  for (auto [a, b] : tg.edges()) {
    CHECK(tg.length(a, b) == Approx(1.0));
    CHECK(tg.search_length(a, b) == Approx(0.0));
  }
  auto cuts = separate_level(g, x);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].length() == 6);
  CHECK(cuts[0].rhs == Approx(2.0));
  CHECK(cuts[0].violation == Approx(1.0));
  auto bf = brute_force_separation(g, x);
  REQUIRE(bf);
  CHECK(bf->violation == Approx(1.0));
  CHECK(conservative_weight_audit(g, x) == Approx(0.0));
}

TEST_CASE("zero point has no violated cycle") {
  auto c = instances::projective_plane();
  auto g = level(HasseDiagram(c), 1);
  std::vector<double> x(g.num_edges(), 0.0);
  CHECK(separate_level(g, x).empty());
  CHECK_FALSE(brute_force_separation(level(HasseDiagram(instances::full_simplex(2)), 1),
                                     std::vector<double>(3, 0.0)));
  CHECK(conservative_weight_audit(hexagon(), std::vector<double>(6, 0.0)) == Approx(3.0));
}

TEST_CASE("stars and trees have no cycles") {
  auto c = instances::full_simplex(2);
  HasseDiagram h(c);
  auto g = level(h, 1);
  std::vector<double> x(g.num_edges(), 1.0 / 3);
  TransformedGraph tg(g, x);
  CHECK(tg.edges().empty());  // all nodes share the single w
  CHECK(separate_level(g, x).empty());
  CHECK_FALSE(brute_force_separation(g, x));
  CHECK(std::isinf(conservative_weight_audit(g, x)));
}

TEST_CASE("precondition violations are reported") {
  auto g = hexagon();
  std::vector<double> x(6, 0.6);
  CHECK_THROWS_AS(separate_level(g, x), SeparationError);
  CHECK_THROWS_AS(separate_level(g, std::vector<double>(5, 0.0)), SeparationError);
  auto big = level(HasseDiagram(instances::dunce_hat()), 1);
  CHECK_THROWS_AS(enumerate_cycles(big, 10), SeparationError);
}

TEST_CASE("transformed graph size and no 4-cycles on simplicial levels") {
  std::vector<SimplicialComplex> suite{instances::projective_plane(), instances::dunce_hat(),
                                       instances::boundary_of_simplex(4), instances::full_simplex(4)};
  for (const auto& c : suite) {
    HasseDiagram h(c);
    for (int i = 0; i < h.num_levels(); ++i) {
      auto g = level(h, i);
      std::vector<double> x(g.num_edges(), 0.0);
      TransformedGraph tg(g, x);
      CHECK(tg.num_nodes() == (i + 2) * (i + 1) / 2 * c.f(i + 1));
      CHECK(tg.four_cycles().empty());
    }
  }
  // a non-simplicial bipartite graph with a 4-cycle is detected
  auto sq = LevelGraph::from_edges(2, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(TransformedGraph(sq, std::vector<double>(4, 0.0)).four_cycles().size() == 1);
}

TEST_CASE("recovered cycles are twice as long and have matching length") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    auto c = rep % 2 ? instances::projective_plane() : instances::dunce_hat();
    HasseDiagram h(c);
    auto g = level(h, 1);
    auto x = random_point(g, rng);
    for (const auto& cut : separate_level(g, x, {5, 0})) {
      CHECK(is_simple_alternating_cycle(g, cut.edges));
      CHECK(recount(g, cut.edges, x) == Approx(cut.violation).margin(1e-9));
      ++checked;
    }
  }
  CHECK(checked > 0);
  // explicit G' triangle -> 6-cycle
  auto g = hexagon();
  std::vector<double> x(6, 0.5);
  TransformedGraph tg(g, x);
  std::vector<int> tri{0, 1, 2};
  auto rc = recover_cycle(tg, tri);
  if (!rc) {
    tri = {0, 2, 1};
    rc = recover_cycle(tg, tri);
  }
  REQUIRE(rc);
  CHECK(rc->edges.size() == 6);
  double lprime = 0.0;
  for (int k = 0; k < 3; ++k) lprime += tg.length(tri[k], tri[(k + 1) % 3]);
  double l = 0.0;
  for (int e : rc->edges) l += x[e];
  CHECK(lprime == Approx(l));
  CHECK_FALSE(recover_cycle(tg, {0, 1}));
}

TEST_CASE("emitted cuts are valid for every Morse matching") {
  auto c = instances::boundary_of_simplex(3);
  HasseDiagram h(c);
  auto pairs = oracle::covering_pairs(c);
  auto all = oracle::all_morse_matchings(c);
  std::mt19937_64 rng(29);
  for (int i = 0; i < h.num_levels(); ++i) {
    auto g = level(h, i);
    for (const auto& cyc : enumerate_cycles(g, 1000)) {
      std::vector<ArcId> arcs;
      for (int e : cyc) arcs.push_back(g.edges[e].id);
      for (const auto& sel : all) {
        int inside = 0;
        for (int k : sel) {
          ArcId a = h.find_arc(pairs[k].first, pairs[k].second);
          inside += std::count(arcs.begin(), arcs.end(), a);
        }
        CHECK(inside <= static_cast<int>(cyc.size()) / 2 - 1);
      }
    }
  }
}

TEST_CASE("exactness against enumeration on small levels") {
  std::mt19937_64 rng(31);
  std::vector<LevelGraph> graphs;
  for (const auto& c : {instances::boundary_of_simplex(3), instances::full_simplex(3)}) {
    HasseDiagram h(c);
    for (int i = 0; i < h.num_levels(); ++i) graphs.push_back(level(h, i));
  }
  graphs.push_back(hexagon());
  for (int rep = 0; rep < 150; ++rep) {
    const auto& g = graphs[rep % graphs.size()];
    auto x = random_point(g, rng);
    auto cuts = separate_level(g, x);
    auto bf = brute_force_separation(g, x);
    CHECK(cuts.empty() == !bf);
    for (std::size_t k = 1; k < cuts.size(); ++k) CHECK(cuts[k - 1].violation >= cuts[k].violation);
    CHECK(conservative_weight_audit(g, x) >= -1e-9);
  }
}

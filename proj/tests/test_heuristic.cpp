#include "catch_amalgamated.hpp"

#include <random>

#include "morse/heuristic.hpp"
#include "morse/instances.hpp"
#include "morse/lp.hpp"
#include "morse/solver.hpp"
#include "oracles.hpp"

using namespace morse;

namespace {

ArcId arc_of(const HasseDiagram& h, std::vector<Vertex> up, std::vector<Vertex> low) {
  const auto& c = h.complex();
  return h.find_arc(c.find(up), c.find(low));
}

std::vector<double> root_point(const HasseDiagram& h) {
  const auto& c = h.complex();
  auto s = lp::solve(root_relaxation(h, best_betti_bounds(c, default_fields())));
  return s.values;
}

}  // namespace

TEST_CASE("greedy on the zero vector is deterministic and nonempty") {
  for (const auto& c : {instances::full_simplex(2), instances::projective_plane(),
                        instances::dunce_hat()}) {
    HasseDiagram h(c);
    std::vector<double> zero(h.num_arcs(), 0.0);
    auto a = greedy_from_lp(h, zero);
    auto b = greedy_from_lp(h, zero);
    CHECK(a == b);
    CHECK(a.size() > 0);
    CHECK(is_morse_matching(h, a));
    CHECK(a.contains(0));
  }
  HasseDiagram h(instances::full_simplex(2));
  CHECK_THROWS_AS(greedy_from_lp(h, std::vector<double>(3, 0.0)), MatchingError);
}

TEST_CASE("greedy keeps only arcs that stay acyclic and is maximal for its scan") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& c : {instances::projective_plane(), instances::dunce_hat(),
                        instances::boundary_of_simplex(4)}) {
    HasseDiagram h(c);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<double> x(h.num_arcs());
      for (auto& v : x) v = u(rng);
      auto m = greedy_from_lp(h, x);
      REQUIRE(is_morse_matching(h, m));
      // any skipped arc breaks matching or acyclicity when added at the end
      for (ArcId a = 0; a < h.num_arcs(); ++a) {
        if (m.contains(a)) continue;
        MorseMatching plus = m;
        plus.arcs.push_back(a);
        plus.normalize();
        CHECK_FALSE(is_morse_matching(h, plus));
      }
    }
  }
}

TEST_CASE("full triangle: two given arcs, then improvement to c = 1") {
  auto c = instances::full_simplex(2);
  HasseDiagram h(c);
  std::vector<double> x(h.num_arcs(), 0.0);
  x[arc_of(h, {0, 1}, {0})] = 1.0;
  x[arc_of(h, {0, 1, 2}, {1, 2})] = 1.0;
  AcyclicMatchingBuilder b(h);
  CHECK(b.try_add(arc_of(h, {0, 1}, {0})));
  CHECK(b.try_add(arc_of(h, {0, 1, 2}, {1, 2})));
  auto start = b.matching();
  CHECK(critical_report(h, start).total == 3);
  CHECK(critical_report(h, improve(h, start)).total == 1);
  CHECK(critical_report(h, run_heuristic(h, x)).total == 1);
}

TEST_CASE("augment_once examples") {
  auto c = instances::full_simplex(2);
  HasseDiagram h(c);
  MorseMatching m({arc_of(h, {0, 1}, {0})});
  auto next = augment_once(h, m);
  REQUIRE(next);
  CHECK(next->size() == 2);
  CHECK(is_morse_matching(h, *next));

  auto edge = build_complex({{1, 2}});
  HasseDiagram he(edge);
  auto e = augment_once(he, MorseMatching{});
  REQUIRE(e);
  CHECK(e->size() == 1);
  CHECK(e->contains(0));  // lowest-id pair: edge -> vertex 1

  auto t = instances::boundary_of_simplex(3);
  HasseDiagram ht(t);
  auto opt = improve(ht, greedy_from_lp(ht, root_point(ht)));
  REQUIRE(critical_report(ht, opt).total == 2);
  CHECK_FALSE(augment_once(ht, opt));
}

TEST_CASE("improve from every Morse matching of the triangle reaches c = 1") {
  auto c = instances::full_simplex(2);
  HasseDiagram h(c);
  auto pairs = oracle::covering_pairs(c);
  for (const auto& sel : oracle::all_morse_matchings(c)) {
    MorseMatching m;
    for (int k : sel) m.arcs.push_back(h.find_arc(pairs[k].first, pairs[k].second));
    m.normalize();
    ImproveTrace tr;
    auto out = improve(h, m, &tr);
    CHECK(critical_report(h, out).total == 1);
    for (std::size_t k = 1; k < tr.critical_counts.size(); ++k)
      CHECK(tr.critical_counts[k] == tr.critical_counts[k - 1] - 2);
  }
}

TEST_CASE("improve is monotone and stays Morse on random starts") {
  std::mt19937_64 rng(43);
  for (const auto& c : {instances::projective_plane(), instances::dunce_hat(),
                        instances::boundary_of_simplex(4), instances::full_simplex(3)}) {
    HasseDiagram h(c);
    for (int rep = 0; rep < 20; ++rep) {
      auto m = instances::random_morse_matching(h, rng, 0.3);
      MorseMatching cur = m;
      int before = critical_report(h, cur).total;
      while (auto nxt = augment_once(h, cur)) {
        REQUIRE(is_morse_matching(h, *nxt));
        int after = critical_report(h, *nxt).total;
        CHECK(after == before - 2);
        before = after;
        cur = std::move(*nxt);
      }
      CHECK(cur == improve(h, m));
    }
  }
}

TEST_CASE("projective plane greedy from the root LP") {
  auto c = instances::projective_plane();
  HasseDiagram h(c);
  auto x = root_point(h);
  auto g = greedy_from_lp(h, x);
  CHECK(critical_report(h, g).total <= 5);
  CHECK(critical_report(h, improve(h, g)).total >= 3);
}

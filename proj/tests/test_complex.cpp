#include "catch_amalgamated.hpp"

#include <random>

#include "morse/complex.hpp"
#include "morse/instances.hpp"
#include "oracles.hpp"

using namespace morse;

TEST_CASE("closure of one triangle") {
  auto c = build_complex({{1, 2, 3}});
  CHECK(c.f_vector() == std::vector<int>{3, 3, 1});
  CHECK(c.num_faces() == 7);
  CHECK(c.dim() == 2);
  CHECK(c.facets().size() == 1);
}

TEST_CASE("projective plane and dunce hat sizes") {
  auto p = instances::projective_plane();
  CHECK(p.num_faces() == 31);
  CHECK(HasseDiagram(p).num_arcs() == 60);
  auto d = instances::dunce_hat();
  CHECK(d.f_vector() == std::vector<int>{8, 24, 17});
  CHECK(d.num_faces() == 49);
  CHECK(HasseDiagram(d).num_arcs() == 99);
}

TEST_CASE("zero-dimensional complex with two vertices") {
  auto c = build_complex({{1}, {2}});
  CHECK(c.f_vector() == std::vector<int>{2});
  CHECK_FALSE(is_connected(c));
  CHECK(HasseDiagram(c).num_arcs() == 0);
}

TEST_CASE("non-maximal input sets are absorbed and duplicates collapse") {
  auto c = build_complex({{1, 2, 3}, {1, 2}, {3, 3, 1}});
  CHECK(c.num_faces() == 7);
  CHECK(c.facets().size() == 1);
}

TEST_CASE("malformed facet lists are rejected") {
  CHECK_THROWS_AS(build_complex({}), ComplexError);
  CHECK_THROWS_AS(build_complex({{1, 2}, {}}), ComplexError);
  CHECK_THROWS_AS(build_complex({{-1, 2}}), ComplexError);
}

TEST_CASE("vertex labels keep the input ids") {
  auto c = build_complex({{10, 30}, {30, 20}});
  CHECK(c.vertex_labels() == std::vector<std::string>{"10", "20", "30"});
  CHECK(c.find({0, 2}) >= 0);
  CHECK(c.find({0, 1}) == -1);
}

TEST_CASE("full triangle arc count and levels") {
  auto c = instances::full_simplex(2);
  HasseDiagram h(c);
  CHECK(h.num_arcs() == 9);
  CHECK(h.num_levels() == 2);
  auto l1 = level(h, 1);
  CHECK(l1.upper.size() == 1);
  CHECK(l1.lower.size() == 3);
  CHECK(l1.num_edges() == 3);
  CHECK(level(h, 0).num_edges() == 6);
  CHECK_THROWS_AS(level(h, 2), ComplexError);
  CHECK_THROWS_AS(level(h, -1), ComplexError);
}

TEST_CASE("projective plane level 1 degrees") {
  auto c = instances::projective_plane();
  auto g = level(HasseDiagram(c), 1);
  CHECK(g.upper.size() == 10);
  CHECK(g.lower.size() == 15);
  CHECK(g.num_edges() == 30);
  for (const auto& a : g.upper_adj) CHECK(a.size() == 3);
  for (const auto& a : g.lower_adj) CHECK(a.size() == 2);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(instances::full_simplex(2)));
  CHECK_FALSE(is_connected(build_complex({{1, 2}, {3, 4}})));
  CHECK(is_connected(instances::projective_plane()));
  CHECK(is_connected(build_complex({{7}})));
  auto comps = connected_components(build_complex({{1, 2}, {3, 4}, {4, 5}}));
  CHECK(comps.size() == 2);
}

TEST_CASE("structural invariants on the instance suite") {
  std::mt19937_64 rng(7);
  std::vector<SimplicialComplex> suite{instances::full_simplex(3), instances::boundary_of_simplex(4),
                                       instances::projective_plane(), instances::dunce_hat()};
  for (int k = 0; k < 10; ++k) suite.push_back(instances::random_connected_graph(rng));
  for (const auto& c : suite) {
    // closure
    for (const auto& f : c.faces()) {
      if (f.dim() == 0) continue;
      for (std::size_t drop = 0; drop < f.vertices.size(); ++drop) {
        auto sub = f.vertices;
        sub.erase(sub.begin() + static_cast<long>(drop));
        CHECK(c.find(sub) >= 0);
      }
    }
    HasseDiagram h(c);
    // arc-count identity
    long expect = 0;
    for (int i = 1; i <= c.dim(); ++i) expect += static_cast<long>(i + 1) * c.f(i);
    CHECK(h.num_arcs() == expect);
    // level partition and agreement with brute-force covering pairs
    long total = 0;
    for (int i = 0; i < h.num_levels(); ++i) {
      auto [b, e] = h.level_range(i);
      total += e - b;
      for (ArcId a = b; a < e; ++a) CHECK(h.arc(a).level == i);
    }
    CHECK(total == h.num_arcs());
    auto pairs = oracle::covering_pairs(c);
    CHECK(static_cast<int>(pairs.size()) == h.num_arcs());
    for (auto [g, f] : pairs) CHECK(h.find_arc(g, f) >= 0);
    // arc ids follow (level, upper, lower)
    for (ArcId a = 1; a < h.num_arcs(); ++a) {
      const auto& p = h.arc(a - 1);
      const auto& q = h.arc(a);
      CHECK(std::tie(p.level, p.upper, p.lower) < std::tie(q.level, q.upper, q.lower));
    }
  }
}

TEST_CASE("induced subcomplex keeps labels") {
  auto c = build_complex({{1, 2}, {5, 6}, {6, 7}});
  auto comps = connected_components(c);
  REQUIRE(comps.size() == 2);
  auto sub = induced_subcomplex(c, comps[1]);
  CHECK(sub.vertex_labels() == std::vector<std::string>{"5", "6", "7"});
  CHECK(sub.f_vector() == std::vector<int>{3, 2});
}

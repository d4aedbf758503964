/**
 * Small reference complexes and random generators used by the tests, the
 * acceptance run and the examples.
 */
#ifndef MORSE_INSTANCES_HPP
#define MORSE_INSTANCES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "heuristic.hpp"
#include "matching.hpp"

namespace morse::instances {

/// Full k-simplex on vertices 0..k.
inline SimplicialComplex full_simplex(int k) {
  if (k < 0) throw ComplexError("simplex dimension must be non-negative");
  std::vector<Vertex> all(k + 1);
  std::iota(all.begin(), all.end(), 0);
  return build_complex({all});
}

/// Boundary of the d-simplex (a d-1 sphere): all d-subsets of d+1 vertices.
inline SimplicialComplex boundary_of_simplex(int d) {
  if (d < 1) throw ComplexError("boundary needs d >= 1");
  std::vector<std::vector<Vertex>> facets;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<Vertex> f;
    for (int v = 0; v <= d; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return build_complex(facets);
}

/// 6-vertex minimal triangulation of the real projective plane.
inline std::vector<std::vector<Vertex>> projective_plane_facets() {
  return {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
          {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
}
inline SimplicialComplex projective_plane() { return build_complex(projective_plane_facets()); }

/// 8-vertex dunce hat, f = (8, 24, 17). The outer triangle 1-2-3 has all three
/// sides identified as 1->2, 2->3, 1->3.
inline std::vector<std::vector<Vertex>> dunce_hat_facets() {
  return {{1, 2, 4}, {2, 3, 4}, {1, 3, 5}, {1, 2, 5}, {2, 3, 6}, {1, 3, 6},
          {1, 3, 7}, {2, 3, 7}, {1, 2, 8}, {3, 4, 5}, {2, 5, 6}, {1, 6, 7},
          {2, 7, 8}, {1, 4, 8}, {4, 5, 6}, {4, 6, 7}, {4, 7, 8}};
}
inline SimplicialComplex dunce_hat() { return build_complex(dunce_hat_facets()); }

/// Connected graph: a random spanning tree plus random extra edges.
template <class Rng>
SimplicialComplex random_connected_graph(Rng& rng, int max_vertices = 12, int max_edges = 30) {
  std::uniform_int_distribution<int> nv_dist(2, std::max(2, max_vertices));
  const int nv = nv_dist(rng);
  const int cap = std::min(max_edges, nv * (nv - 1) / 2);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < nv; ++v) {
    std::uniform_int_distribution<int> p(0, v - 1);
    edges.insert({p(rng), v});
  }
  std::uniform_int_distribution<int> extra_dist(0, std::max(0, cap - (nv - 1)));
  const int target = static_cast<int>(edges.size()) + extra_dist(rng);
  std::uniform_int_distribution<int> vd(0, nv - 1);
  while (static_cast<int>(edges.size()) < target) {
    int a = vd(rng), b = vd(rng);
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::vector<Vertex>> facets;
  for (auto [a, b] : edges) facets.push_back({a, b});
  return build_complex(facets);
}

/// Random Morse matching: arcs are offered in random order and kept with
/// probability `keep` whenever the matching stays acyclic.
template <class Rng>
MorseMatching random_morse_matching(const HasseDiagram& h, Rng& rng, double keep = 0.8) {
  std::vector<ArcId> order(h.num_arcs());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution take(keep);
  AcyclicMatchingBuilder builder(h);
  for (ArcId a : order)
    if (take(rng)) builder.try_add(a);
  return builder.matching();
}

}  // namespace morse::instances

#endif  // MORSE_INSTANCES_HPP

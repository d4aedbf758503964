/**
 * Finite abstract simplicial complexes and their Hasse diagrams.
 *
 * A complex is stored as the downward closure of its facets. Faces get dense
 * ids ordered by (dimension, lexicographic vertex sequence); arcs of the Hasse
 * diagram get dense ids ordered by (level, upper face, lower face).
 */
#ifndef MORSE_COMPLEX_HPP
#define MORSE_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace morse {

using Vertex = int;
using FaceId = int;
using ArcId = int;

/// Raised for malformed inputs (empty facet lists, out-of-range indices, ...).
class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A face is a strictly increasing, non-empty vertex sequence.
struct Face {
  std::vector<Vertex> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) = default;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int dim() const { return static_cast<int>(faces_by_dim_.size()) - 1; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_vertices() const { return f(0); }

  /// Face count in dimension i (0 outside 0..d).
  int f(int i) const {
    if (i < 0 || i > dim()) return 0;
    return static_cast<int>(faces_by_dim_[i].size());
  }
  std::vector<int> f_vector() const {
    std::vector<int> out;
    for (int i = 0; i <= dim(); ++i) out.push_back(f(i));
    return out;
  }

  const Face& face(FaceId id) const { return faces_.at(id); }
  int face_dim(FaceId id) const { return faces_[id].dim(); }
  const std::vector<Face>& faces() const { return faces_; }

  /// Ids of the i-faces, ascending (ids of one dimension are contiguous).
  std::span<const FaceId> faces_of_dim(int i) const { return faces_by_dim_.at(i); }

  /// Dense id of a face, or -1 if the vertex set is not a face.
  FaceId find(const std::vector<Vertex>& vertices) const {
    auto it = face_index_.find(vertices);
    return it == face_index_.end() ? -1 : it->second;
  }

  const std::vector<FaceId>& facets() const { return facets_; }

  /// Original input label of every dense vertex id.
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  void set_vertex_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != num_vertices())
      throw ComplexError("label count does not match vertex count");
    labels_ = std::move(labels);
  }

  /// Downward closure of the given vertex sets. Vertices must be 0..k-1 for
  /// some k with every id used; use `build_complex` for arbitrary ids.
  static SimplicialComplex from_closed_sets(std::vector<std::vector<Vertex>> facets);

 private:
  std::vector<Face> faces_;
  std::vector<std::vector<FaceId>> faces_by_dim_;
  std::map<std::vector<Vertex>, FaceId> face_index_;
  std::vector<FaceId> facets_;
  std::vector<std::string> labels_;
};

namespace detail {

inline std::vector<Vertex> normalized(std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace detail

inline SimplicialComplex SimplicialComplex::from_closed_sets(
    std::vector<std::vector<Vertex>> input) {
  if (input.empty()) throw ComplexError("facet list is empty");
  std::set<std::vector<Vertex>> all;
  std::vector<std::vector<Vertex>> stack;
  for (auto& s : input) {
    if (s.empty()) throw ComplexError("empty facet in input");
    for (Vertex v : s)
      if (v < 0) throw ComplexError("negative vertex id");
    stack.push_back(detail::normalized(std::move(s)));
  }
  while (!stack.empty()) {
    auto s = std::move(stack.back());
    stack.pop_back();
    if (!all.insert(s).second) continue;
    if (s.size() == 1) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      std::vector<Vertex> sub;
      sub.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != k) sub.push_back(s[j]);
      if (!all.count(sub)) stack.push_back(std::move(sub));
    }
  }

  SimplicialComplex c;
  std::size_t d = 0;
  for (const auto& s : all) d = std::max(d, s.size() - 1);
  std::vector<std::vector<std::vector<Vertex>>> by_dim(d + 1);
  for (const auto& s : all) by_dim[s.size() - 1].push_back(s);  // std::set order is lexicographic
  c.faces_by_dim_.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    for (auto& s : by_dim[i]) {
      FaceId id = static_cast<FaceId>(c.faces_.size());
      c.face_index_.emplace(s, id);
      c.faces_by_dim_[i].push_back(id);
      c.faces_.push_back(Face{std::move(s)});
    }
  }
  for (std::size_t v = 0; v < c.faces_by_dim_[0].size(); ++v)
    if (c.faces_[v].vertices[0] != static_cast<Vertex>(v))
      throw ComplexError("vertex ids must be dense 0..k-1");

  // Facets: faces not covered by any other face.
  std::vector<char> covered(c.faces_.size(), 0);
  for (const auto& fc : c.faces_) {
    if (fc.dim() == 0) continue;
    for (std::size_t k = 0; k < fc.vertices.size(); ++k) {
      std::vector<Vertex> sub;
      for (std::size_t j = 0; j < fc.vertices.size(); ++j)
        if (j != k) sub.push_back(fc.vertices[j]);
      covered[c.face_index_.at(sub)] = 1;
    }
  }
  for (FaceId id = 0; id < c.num_faces(); ++id)
    if (!covered[id]) c.facets_.push_back(id);

  c.labels_.resize(c.faces_by_dim_[0].size());
  for (std::size_t v = 0; v < c.labels_.size(); ++v) c.labels_[v] = std::to_string(v);
  return c;
}

/// Downward closure of arbitrary non-negative vertex sets. Vertex ids are
/// renumbered densely in ascending order; the original ids become labels.
inline SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets) {
  if (facets.empty()) throw ComplexError("facet list is empty");
  std::set<Vertex> used;
  for (const auto& s : facets) {
    if (s.empty()) throw ComplexError("empty facet in input");
    for (Vertex v : s) {
      if (v < 0) throw ComplexError("negative vertex id");
      used.insert(v);
    }
  }
  std::map<Vertex, Vertex> dense;
  std::vector<std::string> labels;
  for (Vertex v : used) {
    dense.emplace(v, static_cast<Vertex>(dense.size()));
    labels.push_back(std::to_string(v));
  }
  std::vector<std::vector<Vertex>> renumbered;
  renumbered.reserve(facets.size());
  for (const auto& s : facets) {
    std::vector<Vertex> r;
    for (Vertex v : s) r.push_back(dense.at(v));
    renumbered.push_back(std::move(r));
  }
  auto c = SimplicialComplex::from_closed_sets(std::move(renumbered));
  c.set_vertex_labels(std::move(labels));
  return c;
}

/// True iff the graph of the complex (vertices and edges) is connected.
inline bool is_connected(const SimplicialComplex& c) {
  const int nv = c.num_vertices();
  if (nv <= 1) return true;
  std::vector<std::vector<int>> adj(nv);
  if (c.dim() >= 1) {
    for (FaceId e : c.faces_of_dim(1)) {
      const auto& vs = c.face(e).vertices;
      adj[vs[0]].push_back(vs[1]);
      adj[vs[1]].push_back(vs[0]);
    }
  }
  std::vector<char> seen(nv, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == nv;
}

/// Connected components as vertex-id lists (each sorted, ordered by min vertex).
inline std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& c) {
  const int nv = c.num_vertices();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (c.dim() >= 1)
    for (FaceId e : c.faces_of_dim(1)) {
      const auto& vs = c.face(e).vertices;
      int a = find(vs[0]), b = find(vs[1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<Vertex>> groups;
  for (int v = 0; v < nv; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  return out;
}

/// One arc (upper, lower) of the Hasse diagram; level = dim(lower).
struct Arc {
  FaceId upper;
  FaceId lower;
  int level;
};

class HasseDiagram {
 public:
  explicit HasseDiagram(const SimplicialComplex& c);

  const SimplicialComplex& complex() const { return *complex_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  int num_faces() const { return complex_->num_faces(); }
  int num_levels() const { return static_cast<int>(level_begin_.size()) - 1; }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Arc ids of level i form the contiguous range [begin, end).
  std::pair<ArcId, ArcId> level_range(int i) const {
    if (i < 0 || i >= num_levels()) throw ComplexError("level index out of range");
    return {level_begin_[i], level_begin_[i + 1]};
  }

  /// delta(F): all arcs incident to F.
  std::span<const ArcId> incident(FaceId f) const { return incident_[f]; }
  /// Arcs from F down to its facets.
  std::span<const ArcId> down_arcs(FaceId f) const { return down_[f]; }
  /// Arcs from the cofaces of F down to F.
  std::span<const ArcId> up_arcs(FaceId f) const { return up_[f]; }

  /// Arc id for a covering pair, or -1.
  ArcId find_arc(FaceId upper, FaceId lower) const {
    for (ArcId a : down_[upper])
      if (arcs_[a].lower == lower) return a;
    return -1;
  }

 private:
  const SimplicialComplex* complex_;
  std::vector<Arc> arcs_;
  std::vector<ArcId> level_begin_;
  std::vector<std::vector<ArcId>> incident_, down_, up_;
};

inline HasseDiagram::HasseDiagram(const SimplicialComplex& c) : complex_(&c) {
  const int d = c.dim();
  incident_.resize(c.num_faces());
  down_.resize(c.num_faces());
  up_.resize(c.num_faces());
  level_begin_.push_back(0);
  for (int i = 0; i < d; ++i) {
    for (FaceId g : c.faces_of_dim(i + 1)) {
      const auto& vs = c.face(g).vertices;
      std::vector<FaceId> lowers;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        std::vector<Vertex> sub;
        for (std::size_t j = 0; j < vs.size(); ++j)
          if (j != k) sub.push_back(vs[j]);
        lowers.push_back(c.find(sub));
      }
      std::sort(lowers.begin(), lowers.end());
      for (FaceId f : lowers) {
        ArcId a = static_cast<ArcId>(arcs_.size());
        arcs_.push_back({g, f, i});
        incident_[g].push_back(a);
        incident_[f].push_back(a);
        down_[g].push_back(a);
        up_[f].push_back(a);
      }
    }
    level_begin_.push_back(static_cast<ArcId>(arcs_.size()));
  }
}

inline HasseDiagram hasse_diagram(const SimplicialComplex& c) { return HasseDiagram(c); }

/**
 * Undirected bipartite graph with a "lower" side U and an "upper" side W.
 * Edges carry an external id (an arc id of the Hasse diagram when built by
 * `level`). Separation routines work on this type, so it may also be built
 * directly from an edge list.
 */
struct LevelGraph {
  int level = 0;
  std::vector<FaceId> lower;  // global face ids of U (or arbitrary labels)
  std::vector<FaceId> upper;  // global face ids of W
  struct Edge {
    int u;  // index into lower
    int w;  // index into upper
    int id;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> lower_adj;  // edge indices per lower node
  std::vector<std::vector<int>> upper_adj;  // edge indices per upper node

  int num_nodes() const { return static_cast<int>(lower.size() + upper.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  /// Generic builder. `edge_list` holds (u, w) index pairs; edge ids are the
  /// positions in the list.
  static LevelGraph from_edges(int num_lower, int num_upper,
                               const std::vector<std::pair<int, int>>& edge_list) {
    LevelGraph g;
    g.lower.resize(num_lower);
    g.upper.resize(num_upper);
    std::iota(g.lower.begin(), g.lower.end(), 0);
    std::iota(g.upper.begin(), g.upper.end(), num_lower);
    g.lower_adj.resize(num_lower);
    g.upper_adj.resize(num_upper);
    for (const auto& [u, w] : edge_list) {
      if (u < 0 || u >= num_lower || w < 0 || w >= num_upper)
        throw ComplexError("edge endpoint out of range");
      int e = static_cast<int>(g.edges.size());
      g.edges.push_back({u, w, e});
      g.lower_adj[u].push_back(e);
      g.upper_adj[w].push_back(e);
    }
    return g;
  }
};

/// Level H_i: the bipartite graph between i-faces and (i+1)-faces.
inline LevelGraph level(const HasseDiagram& h, int i) {
  auto [begin, end] = h.level_range(i);
  const auto& c = h.complex();
  LevelGraph g;
  g.level = i;
  auto lows = c.faces_of_dim(i);
  auto ups = c.faces_of_dim(i + 1);
  g.lower.assign(lows.begin(), lows.end());
  g.upper.assign(ups.begin(), ups.end());
  g.lower_adj.resize(g.lower.size());
  g.upper_adj.resize(g.upper.size());
  const FaceId low0 = g.lower.front(), up0 = g.upper.front();
  for (ArcId a = begin; a < end; ++a) {
    const Arc& arc = h.arc(a);
    int e = static_cast<int>(g.edges.size());
    g.edges.push_back({arc.lower - low0, arc.upper - up0, a});
    g.lower_adj[arc.lower - low0].push_back(e);
    g.upper_adj[arc.upper - up0].push_back(e);
  }
  return g;
}

/// Subcomplex spanned by the given vertices (all faces using only them).
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& c,
                                            const std::vector<Vertex>& vertices) {
  std::vector<int> dense(c.num_vertices(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) dense[vertices[k]] = static_cast<int>(k);
  std::vector<std::vector<Vertex>> sets;
  std::vector<std::string> labels;
  for (Vertex v : vertices) labels.push_back(c.vertex_labels()[v]);
  for (FaceId f : c.facets()) {
    const auto& vs = c.face(f).vertices;
    if (dense[vs[0]] < 0) continue;
    std::vector<Vertex> r;
    for (Vertex v : vs) r.push_back(dense[v]);
    sets.push_back(std::move(r));
  }
  auto sub = SimplicialComplex::from_closed_sets(std::move(sets));
  sub.set_vertex_labels(std::move(labels));
  return sub;
}

}  // namespace morse

#endif  // MORSE_COMPLEX_HPP

/**
 * Morse matchings on the Hasse diagram: validity (matching + acyclicity of
 * the reoriented diagram), critical-face accounting, conversion to and from
 * discrete Morse functions, and the one-critical-vertex rewrite.
 */
#ifndef MORSE_MATCHING_HPP
#define MORSE_MATCHING_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"

namespace morse {

class MatchingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of Hasse-diagram arcs, kept sorted and duplicate-free.
struct MorseMatching {
  std::vector<ArcId> arcs;

  MorseMatching() = default;
  explicit MorseMatching(std::vector<ArcId> a) : arcs(std::move(a)) { normalize(); }

  void normalize() {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  }
  int size() const { return static_cast<int>(arcs.size()); }
  bool contains(ArcId a) const { return std::binary_search(arcs.begin(), arcs.end(), a); }

  friend bool operator==(const MorseMatching&, const MorseMatching&) = default;
};

/// Matched arc per face (-1 if critical). Throws if a face is matched twice.
inline std::vector<ArcId> mate_array(const HasseDiagram& h, const MorseMatching& m) {
  std::vector<ArcId> mate(h.num_faces(), -1);
  for (ArcId a : m.arcs) {
    if (a < 0 || a >= h.num_arcs()) throw MatchingError("arc id out of range");
    for (FaceId f : {h.arc(a).upper, h.arc(a).lower}) {
      if (mate[f] >= 0) throw MatchingError("face " + std::to_string(f) + " matched twice");
      mate[f] = a;
    }
  }
  return mate;
}

/// Result of `is_morse_matching`; carries a witness on failure.
struct MatchingCheck {
  bool ok = true;
  std::optional<FaceId> overmatched;  // a face incident to two selected arcs
  std::vector<ArcId> cycle;           // arcs of a directed cycle in H(M), in order
  int cycle_level = -1;

  explicit operator bool() const { return ok; }
};

namespace detail {

/// Directed cycle in level `lvl` of H(M) given the matched flag per arc, or
/// an empty vector. Matched arcs point up, unmatched arcs point down.
inline std::vector<ArcId> find_level_cycle(const HasseDiagram& h, const std::vector<char>& matched,
                                           int lvl) {
  const auto& c = h.complex();
  auto lows = c.faces_of_dim(lvl);
  auto ups = c.faces_of_dim(lvl + 1);
  const FaceId base = lows.front();
  const int count = static_cast<int>(lows.size() + ups.size());  // ids are contiguous
  auto local = [&](FaceId f) { return f - base; };

  // Out-arcs of a face inside this level.
  auto out_arcs = [&](FaceId f, std::vector<std::pair<ArcId, FaceId>>& out) {
    out.clear();
    if (c.face_dim(f) == lvl + 1) {
      for (ArcId a : h.down_arcs(f))
        if (!matched[a]) out.emplace_back(a, h.arc(a).lower);
    } else {
      for (ArcId a : h.up_arcs(f))
        if (matched[a]) out.emplace_back(a, h.arc(a).upper);
    }
  };

  std::vector<char> color(count, 0);  // 0 white, 1 on stack, 2 done
  std::vector<ArcId> via(count, -1);  // arc used to enter the node
  std::vector<std::pair<ArcId, FaceId>> scratch;
  struct Frame {
    FaceId face;
    std::vector<std::pair<ArcId, FaceId>> out;
    std::size_t next;
  };
  for (int start = 0; start < count; ++start) {
    if (color[start]) continue;
    std::vector<Frame> stack;
    out_arcs(base + start, scratch);
    stack.push_back({base + start, scratch, 0});
    color[start] = 1;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.out.size()) {
        color[local(top.face)] = 2;
        stack.pop_back();
        continue;
      }
      auto [a, nxt] = top.out[top.next++];
      int ln = local(nxt);
      if (color[ln] == 1) {
        // Back edge: unwind the stack from nxt to top.
        std::vector<ArcId> cyc;
        std::size_t k = stack.size();
        while (k > 0 && stack[k - 1].face != nxt) --k;
        for (std::size_t j = k; j < stack.size(); ++j) cyc.push_back(via[local(stack[j].face)]);
        cyc.push_back(a);
        return cyc;
      }
      if (color[ln] == 0) {
        color[ln] = 1;
        via[ln] = a;
        out_arcs(nxt, scratch);
        stack.push_back({nxt, scratch, 0});
      }
    }
  }
  return {};
}

}  // namespace detail

/// Matching condition plus acyclicity of H(M), tested level by level (a
/// directed cycle of H(M) never leaves one level).
inline MatchingCheck is_morse_matching(const HasseDiagram& h, const MorseMatching& m) {
  MatchingCheck out;
  std::vector<int> count(h.num_faces(), 0);
  std::vector<char> matched(h.num_arcs(), 0);
  for (ArcId a : m.arcs) {
    if (a < 0 || a >= h.num_arcs()) throw MatchingError("arc id out of range");
    matched[a] = 1;
    for (FaceId f : {h.arc(a).upper, h.arc(a).lower})
      if (++count[f] > 1 && !out.overmatched) out.overmatched = f;
  }
  if (out.overmatched) {
    out.ok = false;
    return out;
  }
  for (int lvl = 0; lvl < h.num_levels(); ++lvl) {
    auto cyc = detail::find_level_cycle(h, matched, lvl);
    if (!cyc.empty()) {
      out.ok = false;
      out.cycle = std::move(cyc);
      out.cycle_level = lvl;
      return out;
    }
  }
  return out;
}

struct CriticalReport {
  std::vector<int> c;                        // c_0..c_d
  int total = 0;                             // c(M)
  std::vector<std::vector<FaceId>> critical; // critical face ids per dimension
};

inline CriticalReport critical_report(const HasseDiagram& h, const MorseMatching& m) {
  const auto& cx = h.complex();
  auto mate = mate_array(h, m);
  CriticalReport r;
  r.c.assign(cx.dim() + 1, 0);
  r.critical.resize(cx.dim() + 1);
  for (FaceId f = 0; f < cx.num_faces(); ++f) {
    if (mate[f] >= 0) continue;
    ++r.c[cx.face_dim(f)];
    r.critical[cx.face_dim(f)].push_back(f);
    ++r.total;
  }
  if (r.total != cx.num_faces() - 2 * m.size())
    throw MatchingError("critical count identity violated");
  return r;
}

/// A real-valued function on faces, indexed by face id.
struct DiscreteMorseFunction {
  std::vector<double> value;
};

struct FunctionCheck {
  bool ok = true;
  std::optional<FaceId> face;  // a face where one of the two sets has >= 2 elements
  explicit operator bool() const { return ok; }
};

inline FunctionCheck is_discrete_morse_function(const HasseDiagram& h,
                                                const DiscreteMorseFunction& f) {
  if (static_cast<int>(f.value.size()) != h.num_faces())
    throw MatchingError("function must be defined on every face");
  for (FaceId g = 0; g < h.num_faces(); ++g) {
    int below = 0, above = 0;
    for (ArcId a : h.down_arcs(g))
      if (f.value[g] <= f.value[h.arc(a).lower]) ++below;
    for (ArcId a : h.up_arcs(g))
      if (f.value[h.arc(a).upper] <= f.value[g]) ++above;
    if (below > 1 || above > 1) return {false, g};
  }
  return {};
}

/// Arcs (G, F) on which f does not decrease.
inline MorseMatching function_to_matching(const HasseDiagram& h, const DiscreteMorseFunction& f) {
  if (auto chk = is_discrete_morse_function(h, f); !chk)
    throw MatchingError("not a discrete Morse function at face " + std::to_string(*chk.face));
  MorseMatching m;
  for (ArcId a = 0; a < h.num_arcs(); ++a)
    if (f.value[h.arc(a).upper] <= f.value[h.arc(a).lower]) m.arcs.push_back(a);
  return m;
}

/// Integer-valued Morse function: a topological order of H(M) (smallest id
/// first among ready faces), numbered in reverse so every arc of H(M) points
/// from a larger to a smaller value.
inline DiscreteMorseFunction matching_to_function(const HasseDiagram& h, const MorseMatching& m) {
  if (auto chk = is_morse_matching(h, m); !chk) throw MatchingError("input is not a Morse matching");
  const int n = h.num_faces();
  std::vector<char> matched(h.num_arcs(), 0);
  for (ArcId a : m.arcs) matched[a] = 1;
  std::vector<int> indeg(n, 0);
  auto head = [&](ArcId a) { return matched[a] ? h.arc(a).upper : h.arc(a).lower; };
  auto tail = [&](ArcId a) { return matched[a] ? h.arc(a).lower : h.arc(a).upper; };
  for (ArcId a = 0; a < h.num_arcs(); ++a) ++indeg[head(a)];
  std::priority_queue<FaceId, std::vector<FaceId>, std::greater<>> ready;
  for (FaceId f = 0; f < n; ++f)
    if (indeg[f] == 0) ready.push(f);
  DiscreteMorseFunction out;
  out.value.assign(n, 0.0);
  int pos = 0;
  while (!ready.empty()) {
    FaceId f = ready.top();
    ready.pop();
    out.value[f] = static_cast<double>(n - 1 - pos++);
    for (ArcId a : h.incident(f))
      if (tail(a) == f && --indeg[head(a)] == 0) ready.push(head(a));
  }
  if (pos != n) throw MatchingError("H(M) has a directed cycle");
  return out;
}

/// Graph of the complex minus the edges matched with 2-faces; returns the
/// adjacency (vertex -> (neighbour, edge face id)).
inline std::vector<std::vector<std::pair<Vertex, FaceId>>> gamma_graph(const HasseDiagram& h,
                                                                      const MorseMatching& m) {
  const auto& c = h.complex();
  auto mate = mate_array(h, m);
  std::vector<std::vector<std::pair<Vertex, FaceId>>> adj(c.num_vertices());
  if (c.dim() < 1) return adj;
  for (FaceId e : c.faces_of_dim(1)) {
    if (mate[e] >= 0 && h.arc(mate[e]).lower == e) continue;  // matched with a 2-face
    const auto& vs = c.face(e).vertices;
    adj[vs[0]].emplace_back(vs[1], e);
    adj[vs[1]].emplace_back(vs[0], e);
  }
  return adj;
}

inline bool gamma_connected(const HasseDiagram& h, const MorseMatching& m) {
  auto adj = gamma_graph(h, m);
  const int nv = static_cast<int>(adj.size());
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == nv;
}

/**
 * Rewrites the vertex-edge level so exactly one vertex stays critical: a BFS
 * spanning tree of Gamma(M) rooted at vertex 0, with every other vertex
 * matched to the tree edge leading to its parent. Higher levels are kept.
 */
inline MorseMatching canonicalize_vertices(const HasseDiagram& h, const MorseMatching& m) {
  const auto& c = h.complex();
  if (!is_connected(c)) throw MatchingError("complex is disconnected");
  if (c.dim() < 1) return m;
  auto adj = gamma_graph(h, m);
  const int nv = c.num_vertices();
  std::vector<FaceId> parent_edge(nv, -1);
  std::vector<char> seen(nv, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    auto nbrs = adj[v];
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [w, e] : nbrs)
      if (!seen[w]) {
        seen[w] = 1;
        parent_edge[w] = e;
        ++reached;
        q.push(w);
      }
  }
  if (reached != nv) throw MatchingError("Gamma(M) is disconnected; input is not a Morse matching");

  MorseMatching out;
  auto [begin0, end0] = h.level_range(0);
  for (ArcId a : m.arcs)
    if (a >= end0) out.arcs.push_back(a);
  for (Vertex v = 1; v < nv; ++v) {
    ArcId a = h.find_arc(parent_edge[v], v);  // vertex ids equal face ids in dimension 0
    out.arcs.push_back(a);
  }
  out.normalize();
  return out;
}

}  // namespace morse

#endif  // MORSE_MATCHING_HPP

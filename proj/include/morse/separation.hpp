/**
 * Separation of the cycle inequalities  x(C) <= |C|/2 - 1  on one level of
 * the Hasse diagram.
 *
 * The level is a bipartite graph G = (U + W, E). The transformed graph G'
 * has a node ({u, u'}, w) for every pair of U-neighbours of w. A cycle
 * (u_0, w_0, u_1, w_1, ..., w_{k-1}, u_0) of G with k >= 3 corresponds to
 * the k-cycle (({u_j, u_{j+1}}, w_j))_j of G', and with node weight
 * x(u,w) + x(u',w) and edge length  1 - (weight_a + weight_b) / 2  the
 * G'-cycle is shorter than 1 exactly when the G-cycle violates its
 * inequality. Edge lengths lie in [0, 1] whenever x satisfies the matching
 * inequalities.
 *
 * Not every short cycle of G' maps back to a simple cycle of G, so the
 * search below walks G' in the oriented form used by the correspondence
 * (enter a node through one U-face, leave through the other), keeps the
 * recovered faces distinct, and prunes with Dijkstra distances in G'. It
 * reports a violated cycle whenever one exists.
 */
#ifndef MORSE_SEPARATION_HPP
#define MORSE_SEPARATION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"

namespace morse {

class SeparationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kCutTol = 1e-6;

/// A violated (or candidate) cycle inequality on one level.
struct CycleCut {
  int level = 0;
  std::vector<int> edges;    // level-graph edge indices, in cycle order
  std::vector<ArcId> arcs;   // external ids of those edges, sorted
  double rhs = 0.0;          // |C|/2 - 1
  double violation = 0.0;    // x(C) - rhs

  int length() const { return static_cast<int>(edges.size()); }
};

namespace detail {

inline CycleCut make_cut(const LevelGraph& g, std::vector<int> edges, std::span<const double> x) {
  CycleCut cut;
  cut.level = g.level;
  double sum = 0.0;
  for (int e : edges) {
    sum += x[e];
    cut.arcs.push_back(g.edges[e].id);
  }
  std::sort(cut.arcs.begin(), cut.arcs.end());
  cut.edges = std::move(edges);
  cut.rhs = cut.length() / 2.0 - 1.0;
  cut.violation = sum - cut.rhs;
  return cut;
}

inline void check_matching_inequalities(const LevelGraph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.num_edges())
    throw SeparationError("point dimension does not match the level graph");
  auto check = [&](const std::vector<std::vector<int>>& adj) {
    for (const auto& inc : adj) {
      double s = 0.0;
      for (int e : inc) {
        if (x[e] < -1e-7 || x[e] > 1 + 1e-7) throw SeparationError("point outside [0,1]");
        s += x[e];
      }
      if (s > 1.0 + 1e-7) throw SeparationError("point violates a matching inequality");
    }
  };
  check(g.lower_adj);
  check(g.upper_adj);
}

}  // namespace detail

class TransformedGraph {
 public:
  struct Node {
    int u1, u2;  // lower indices, u1 < u2
    int w;       // upper index
    int e1, e2;  // edges (u1, w), (u2, w)
  };

  TransformedGraph(const LevelGraph& g, std::span<const double> x) : g_(&g) {
    by_lower_.resize(g.lower.size());
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int w = 0; w < static_cast<int>(g.upper.size()); ++w) {
      const auto& inc = g.upper_adj[w];
      for (std::size_t a = 0; a < inc.size(); ++a)
        for (std::size_t b = a + 1; b < inc.size(); ++b) {
          int ea = inc[a], eb = inc[b];
          if (g.edges[ea].u > g.edges[eb].u) std::swap(ea, eb);
          Node nd{g.edges[ea].u, g.edges[eb].u, w, ea, eb};
          int id = static_cast<int>(nodes_.size());
          nodes_.push_back(nd);
          weight_.push_back(std::clamp(x[ea], 0.0, 1.0) + std::clamp(x[eb], 0.0, 1.0));
          by_lower_[nd.u1].push_back(id);
          by_lower_[nd.u2].push_back(id);
          by_pair[{nd.u1, nd.u2}].push_back(id);
        }
    }
    // Two nodes with the same U-pair and different w encode a 4-cycle of G.
    for (const auto& [pair, ids] : by_pair)
      for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
          const Node& p = nodes_[ids[a]];
          const Node& q = nodes_[ids[b]];
          four_cycles_.push_back({p.e1, p.e2, q.e2, q.e1});
        }
  }

  const LevelGraph& graph() const { return *g_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_[i]; }
  double node_weight(int i) const { return weight_[i]; }
  /// G'-nodes containing lower face u.
  const std::vector<int>& nodes_with(int u) const { return by_lower_[u]; }

  bool adjacent(int a, int b) const {
    const Node& p = nodes_[a];
    const Node& q = nodes_[b];
    if (p.w == q.w) return false;
    return p.u1 == q.u1 || p.u1 == q.u2 || p.u2 == q.u1 || p.u2 == q.u2;
  }
  /// l'(a, b)
  double length(int a, int b) const { return 0.5 * (weight_[a] + weight_[b]); }
  /// 1 - l'(a, b)
  double search_length(int a, int b) const { return std::max(0.0, 1.0 - length(a, b)); }

  /// 4-cycles of G as edge quadruples (u1,w)(u2,w)(u2,w')(u1,w'). Empty for
  /// levels of a simplicial complex.
  const std::vector<std::array<int, 4>>& four_cycles() const { return four_cycles_; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < num_nodes(); ++a) {
      std::set<int> seen;
      for (int u : {nodes_[a].u1, nodes_[a].u2})
        for (int b : by_lower_[u])
          if (b > a && adjacent(a, b) && seen.insert(b).second) out.emplace_back(a, b);
    }
    return out;
  }

  /// Edge list "a b l' l~" with a node legend, for debugging.
  std::string dump() const {
    std::ostringstream os;
    os << "# node: id u1 u2 w weight\n";
    for (int a = 0; a < num_nodes(); ++a)
      os << "n " << a << ' ' << nodes_[a].u1 << ' ' << nodes_[a].u2 << ' ' << nodes_[a].w << ' '
         << weight_[a] << '\n';
    os << "# edge: a b l' l~\n";
    for (auto [a, b] : edges()) os << "e " << a << ' ' << b << ' ' << length(a, b) << ' ' << search_length(a, b) << '\n';
    return os.str();
  }

 private:
  const LevelGraph* g_;
  std::vector<Node> nodes_;
  std::vector<double> weight_;
  std::vector<std::vector<int>> by_lower_;
  std::vector<std::array<int, 4>> four_cycles_;
};

/// A cycle of G recovered from a cycle of G'.
struct RecoveredCycle {
  std::vector<int> lower;  // u_0..u_{k-1}
  std::vector<int> upper;  // w_0..w_{k-1}; the walk is u_{j-1} w_j u_j ... (indices mod k)
  std::vector<int> edges;  // 2k level-graph edges in walk order
};

/// Maps a G'-cycle (node ids in order, length >= 3) back to G. Returns
/// nullopt when consecutive nodes do not share exactly one U-face, a node is
/// entered and left through the same face, or a face repeats.
inline std::optional<RecoveredCycle> recover_cycle(const TransformedGraph& tg,
                                                   const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) return std::nullopt;
  const auto& g = tg.graph();
  std::vector<int> shared(k);
  for (int j = 0; j < k; ++j) {
    const auto& p = tg.node(cycle[j]);
    const auto& q = tg.node(cycle[(j + 1) % k]);
    if (!tg.adjacent(cycle[j], cycle[(j + 1) % k])) return std::nullopt;
    std::vector<int> common;
    for (int a : {p.u1, p.u2})
      if (a == q.u1 || a == q.u2) common.push_back(a);
    if (common.size() != 1) return std::nullopt;
    shared[j] = common[0];
  }
  RecoveredCycle rc;
  std::set<int> seen_u, seen_w;
  for (int j = 0; j < k; ++j) {
    const auto& nd = tg.node(cycle[j]);
    int in = shared[(j + k - 1) % k], out = shared[j];
    if (in == out) return std::nullopt;
    if (!((nd.u1 == in && nd.u2 == out) || (nd.u1 == out && nd.u2 == in))) return std::nullopt;
    if (!seen_u.insert(out).second || !seen_w.insert(nd.w).second) return std::nullopt;
    rc.lower.push_back(out);
    rc.upper.push_back(nd.w);
    int e_in = nd.u1 == in ? nd.e1 : nd.e2;
    int e_out = nd.u1 == out ? nd.e1 : nd.e2;
    rc.edges.push_back(e_in);
    rc.edges.push_back(e_out);
  }
  (void)g;
  return rc;
}

struct SeparationOptions {
  int max_cuts = 20;
  /// Cap on DFS expansions per level (0 = unlimited).
  long expansion_budget = 0;
};

/**
 * Violated cycle inequalities of one level, most violated first. `x` is
 * indexed by level-graph edge and must satisfy the matching inequalities.
 */
inline std::vector<CycleCut> separate_level(const LevelGraph& g, std::span<const double> x,
                                            SeparationOptions opts = {}) {
  detail::check_matching_inequalities(g, x);
  std::vector<CycleCut> found;
  std::set<std::vector<ArcId>> keys;
  auto accept = [&](std::vector<int> edges) {
    CycleCut cut = detail::make_cut(g, std::move(edges), x);
    if (cut.violation <= kCutTol) return;
    if (keys.insert(cut.arcs).second) found.push_back(std::move(cut));
  };

  TransformedGraph tg(g, x);
  for (const auto& q : tg.four_cycles()) accept({q[0], q[1], q[2], q[3]});

  const int nn = tg.num_nodes();
  const int nw = static_cast<int>(g.upper.size());
  std::vector<std::vector<int>> nodes_of_w(nw);
  for (int a = 0; a < nn; ++a) nodes_of_w[tg.node(a).w].push_back(a);

  const double threshold = 1.0 - kCutTol;
  long expansions = 0;
  bool exhausted = false;
  std::vector<double> dist(nn);
  std::vector<char> used_u(g.lower.size(), 0), used_w(nw, 0);

  // Search from the cycle's smallest W-index w0; only nodes with w > w0 after.
  for (int w0 = 0; w0 < nw && !exhausted; ++w0) {
    if (static_cast<int>(found.size()) >= opts.max_cuts) break;
    for (int start : nodes_of_w[w0]) {
      // Dijkstra from start over nodes with w > w0 (plus start).
      std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
      using Item = std::pair<double, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      dist[start] = 0.0;
      pq.push({0.0, start});
      while (!pq.empty()) {
        auto [dv, a] = pq.top();
        pq.pop();
        if (dv > dist[a] || dv >= threshold) continue;
        for (int u : {tg.node(a).u1, tg.node(a).u2})
          for (int b : tg.nodes_with(u)) {
            if (tg.node(b).w <= w0 || !tg.adjacent(a, b)) continue;
            double nd = dv + tg.search_length(a, b);
            if (nd < dist[b]) {
              dist[b] = nd;
              pq.push({nd, b});
            }
          }
      }
      const auto& sn = tg.node(start);
      for (int orient = 0; orient < 2; ++orient) {
        const int entry = orient == 0 ? sn.u1 : sn.u2;
        const int exit = orient == 0 ? sn.u2 : sn.u1;
        std::vector<int> path{start};
        std::vector<int> exits{exit};
        used_u[entry] = used_u[exit] = 1;
        used_w[w0] = 1;

        std::function<void(double)> dfs = [&](double acc) {
          if (exhausted || static_cast<int>(found.size()) >= opts.max_cuts) return;
          if (opts.expansion_budget > 0 && ++expansions > opts.expansion_budget) {
            exhausted = true;
            return;
          }
          const int cur = path.back();
          const int u = exits.back();
          std::vector<std::pair<double, int>> cand;
          for (int b : tg.nodes_with(u)) {
            const auto& nb = tg.node(b);
            if (nb.w <= w0 || used_w[nb.w]) continue;
            double step = acc + tg.search_length(cur, b);
            if (step + dist[b] >= threshold) continue;
            cand.emplace_back(step, b);
          }
          std::sort(cand.begin(), cand.end());
          for (auto [step, b] : cand) {
            const auto& nb = tg.node(b);
            const int other = nb.u1 == u ? nb.u2 : nb.u1;
            if (other == entry) {
              if (path.size() >= 2 && step + tg.search_length(b, start) < threshold) {
                path.push_back(b);
                std::vector<int> edges;
                int in = entry;
                std::vector<int> ex = exits;
                ex.push_back(entry);
                for (std::size_t j = 0; j < path.size(); ++j) {
                  const auto& nd = tg.node(path[j]);
                  int out = ex[j];
                  edges.push_back(nd.u1 == in ? nd.e1 : nd.e2);
                  edges.push_back(nd.u1 == out ? nd.e1 : nd.e2);
                  in = out;
                }
                accept(std::move(edges));
                path.pop_back();
              }
              continue;
            }
            if (used_u[other]) continue;
            used_u[other] = 1;
            used_w[nb.w] = 1;
            path.push_back(b);
            exits.push_back(other);
            dfs(step);
            exits.pop_back();
            path.pop_back();
            used_w[nb.w] = 0;
            used_u[other] = 0;
            if (exhausted || static_cast<int>(found.size()) >= opts.max_cuts) return;
          }
        };
        dfs(0.0);
        used_u[entry] = used_u[exit] = 0;
        used_w[w0] = 0;
      }
      if (exhausted || static_cast<int>(found.size()) >= opts.max_cuts) break;
    }
  }
  std::sort(found.begin(), found.end(), [](const CycleCut& a, const CycleCut& b) {
    if (a.violation != b.violation) return a.violation > b.violation;
    return a.arcs < b.arcs;
  });
  if (static_cast<int>(found.size()) > opts.max_cuts) found.resize(opts.max_cuts);
  return found;
}

/// All simple cycles of a small bipartite graph (as edge lists), up to
/// `max_len` edges. Throws if the graph has more than `max_nodes` nodes.
inline std::vector<std::vector<int>> enumerate_cycles(const LevelGraph& g, int max_len,
                                                      int max_nodes = 30) {
  if (g.num_nodes() > max_nodes) throw SeparationError("graph too large for enumeration");
  const int nl = static_cast<int>(g.lower.size());
  // Node ids: lower 0..nl-1, upper nl..; adjacency (neighbour, edge).
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_nodes());
  for (int e = 0; e < g.num_edges(); ++e) {
    adj[g.edges[e].u].emplace_back(nl + g.edges[e].w, e);
    adj[nl + g.edges[e].w].emplace_back(g.edges[e].u, e);
  }
  std::vector<std::vector<int>> out;
  std::vector<char> on_path(g.num_nodes(), 0);
  std::vector<int> edge_path;
  std::set<std::vector<int>> seen;
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (auto [nb, e] : adj[v]) {
      if (nb == start && edge_path.size() >= 3) {
        if (static_cast<int>(edge_path.size()) + 1 > max_len) continue;
        std::vector<int> cyc = edge_path;
        cyc.push_back(e);
        std::vector<int> key = cyc;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(std::move(cyc));
        continue;
      }
      if (nb <= start || on_path[nb]) continue;
      if (static_cast<int>(edge_path.size()) + 1 >= max_len) continue;
      on_path[nb] = 1;
      edge_path.push_back(e);
      dfs(start, nb);
      edge_path.pop_back();
      on_path[nb] = 0;
    }
  };
  for (int s = 0; s < g.num_nodes(); ++s) {
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  return out;
}

/// Most violated cycle inequality by exhaustive enumeration (small graphs).
inline std::optional<CycleCut> brute_force_separation(const LevelGraph& g, std::span<const double> x,
                                                      int max_len = std::numeric_limits<int>::max()) {
  std::optional<CycleCut> best;
  for (auto& cyc : enumerate_cycles(g, max_len)) {
    CycleCut cut = detail::make_cut(g, std::move(cyc), x);
    if (cut.violation <= kCutTol) continue;
    if (!best || cut.violation > best->violation) best = std::move(cut);
  }
  return best;
}

/// Minimum cycle weight under 1/2 - x (infinity for a forest). With x
/// satisfying the matching inequalities this is never negative.
inline double conservative_weight_audit(const LevelGraph& g, std::span<const double> x) {
  detail::check_matching_inequalities(g, x);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& cyc : enumerate_cycles(g, std::numeric_limits<int>::max())) {
    double w = 0.0;
    for (int e : cyc) w += 0.5 - x[e];
    best = std::min(best, w);
  }
  return best;
}

}  // namespace morse

#endif  // MORSE_SEPARATION_HPP

/**
 * Primal heuristic: LP-guided greedy construction of an acyclic matching,
 * then repeated augmentation along unique alternating paths between
 * critical faces.
 */
#ifndef MORSE_HEURISTIC_HPP
#define MORSE_HEURISTIC_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "complex.hpp"
#include "matching.hpp"

namespace morse {

/**
 * Incrementally grows a Morse matching. Each level keeps a topological order
 * of its reoriented digraph; matching an arc reverses it, and the order is
 * repaired locally (Pearce-Kelly) or the insertion is refused if it would
 * close a directed cycle.
 */
class AcyclicMatchingBuilder {
 public:
  explicit AcyclicMatchingBuilder(const HasseDiagram& h)
      : h_(&h), mate_(h.num_faces(), -1), matched_(h.num_arcs(), 0) {
    const auto& c = h.complex();
    ord_.resize(h.num_levels());
    base_.resize(h.num_levels());
    for (int i = 0; i < h.num_levels(); ++i) {
      auto lows = c.faces_of_dim(i);
      auto ups = c.faces_of_dim(i + 1);
      base_[i] = lows.front();
      const int nl = static_cast<int>(lows.size()), nu = static_cast<int>(ups.size());
      ord_[i].resize(nl + nu);
      // Upper faces first: every unmatched arc points from upper to lower.
      for (int k = 0; k < nu; ++k) ord_[i][nl + k] = k;
      for (int k = 0; k < nl; ++k) ord_[i][k] = nu + k;
    }
  }

  /// Adds arc a if the result stays a Morse matching.
  bool try_add(ArcId a) {
    const Arc& arc = h_->arc(a);
    if (matched_[a] || mate_[arc.upper] >= 0 || mate_[arc.lower] >= 0) return false;
    const int lvl = arc.level;
    auto& ord = ord_[lvl];
    const int g = arc.upper - base_[lvl], f = arc.lower - base_[lvl];
    // After reversal the arc points f -> g.
    if (ord[f] > ord[g]) {
      const int lb = ord[g], ub = ord[f];
      std::vector<int> fwd, bwd;
      if (!collect(lvl, g, a, ub, f, true, fwd)) return false;  // f reachable from g: cycle
      collect(lvl, f, a, lb, -1, false, bwd);
      auto by_ord = [&](int p, int q) { return ord[p] < ord[q]; };
      std::sort(fwd.begin(), fwd.end(), by_ord);
      std::sort(bwd.begin(), bwd.end(), by_ord);
      std::vector<int> slots;
      for (int v : bwd) slots.push_back(ord[v]);
      for (int v : fwd) slots.push_back(ord[v]);
      std::sort(slots.begin(), slots.end());
      std::size_t k = 0;
      for (int v : bwd) ord[v] = slots[k++];
      for (int v : fwd) ord[v] = slots[k++];
    }
    matched_[a] = 1;
    mate_[arc.upper] = a;
    mate_[arc.lower] = a;
    arcs_.push_back(a);
    return true;
  }

  MorseMatching matching() const { return MorseMatching(arcs_); }

 private:
  // Local node -> face and level membership helpers.
  FaceId face(int lvl, int local) const { return base_[lvl] + local; }
  bool is_upper(int lvl, int local) const {
    return h_->complex().face_dim(face(lvl, local)) == lvl + 1;
  }

  /// DFS over the level digraph from `start` (forward or backward), skipping
  /// arc `skip` and nodes whose order lies beyond `bound`. Returns false if
  /// `target` is reached.
  bool collect(int lvl, int start, ArcId skip, int bound, int target, bool forward,
               std::vector<int>& out) const {
    const auto& ord = ord_[lvl];
    std::vector<int> stack{start};
    std::vector<char>& seen = seen_;
    seen.assign(ord.size(), 0);
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.push_back(v);
      auto visit = [&](ArcId a, FaceId nxt) -> bool {
        if (a == skip) return true;
        int ln = nxt - base_[lvl];
        if (ln == target) return false;
        if (seen[ln]) return true;
        if (forward ? ord[ln] > bound : ord[ln] < bound) return true;
        seen[ln] = 1;
        stack.push_back(ln);
        return true;
      };
      const FaceId fv = face(lvl, v);
      const bool up = is_upper(lvl, v);
      // Forward out-arcs: upper -> unmatched facets; lower -> matched coface.
      // Backward in-arcs: upper <- matched facet; lower <- unmatched cofaces.
      if (forward == up) {
        for (ArcId a : (up ? h_->down_arcs(fv) : h_->up_arcs(fv)))
          if (!matched_[a] && !visit(a, up ? h_->arc(a).lower : h_->arc(a).upper)) return false;
      } else {
        ArcId a = mate_[fv];
        if (a >= 0 && h_->arc(a).level == lvl && !visit(a, up ? h_->arc(a).lower : h_->arc(a).upper))
          return false;
      }
    }
    return true;
  }

  const HasseDiagram* h_;
  std::vector<ArcId> mate_;
  std::vector<char> matched_;
  std::vector<ArcId> arcs_;
  std::vector<std::vector<int>> ord_;
  std::vector<FaceId> base_;
  mutable std::vector<char> seen_;
};

/// Scans arcs by descending x (ties: ascending id) and keeps every arc that
/// leaves the matching acyclic.
inline MorseMatching greedy_from_lp(const HasseDiagram& h, std::span<const double> x) {
  if (static_cast<int>(x.size()) != h.num_arcs())
    throw MatchingError("point dimension does not match the arc count");
  std::vector<ArcId> order(h.num_arcs());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ArcId a, ArcId b) { return x[a] > x[b]; });
  AcyclicMatchingBuilder builder(h);
  for (ArcId a : order) builder.try_add(a);
  return builder.matching();
}

/// Augmenting step on a unique path from a critical (i+1)-face to a critical
/// i-face in level i of H(M). Pairs are scanned by level, then upper id, then
/// lower id; the first pair joined by exactly one directed path is flipped.
inline std::optional<MorseMatching> augment_once(const HasseDiagram& h, const MorseMatching& m) {
  const auto& c = h.complex();
  auto mate = mate_array(h, m);
  std::vector<char> matched(h.num_arcs(), 0);
  for (ArcId a : m.arcs) matched[a] = 1;

  for (int lvl = 0; lvl < h.num_levels(); ++lvl) {
    const FaceId base = c.faces_of_dim(lvl).front();
    const int count = c.f(lvl) + c.f(lvl + 1);
    // Out-neighbours inside level lvl, as (arc, face).
    auto out = [&](FaceId v, std::vector<std::pair<ArcId, FaceId>>& res) {
      res.clear();
      if (c.face_dim(v) == lvl + 1) {
        for (ArcId a : h.down_arcs(v))
          if (!matched[a]) res.emplace_back(a, h.arc(a).lower);
      } else if (mate[v] >= 0 && h.arc(mate[v]).level == lvl) {
        res.emplace_back(mate[v], h.arc(mate[v]).upper);
      }
    };
    for (FaceId g : c.faces_of_dim(lvl + 1)) {
      if (mate[g] >= 0) continue;
      // Reverse postorder of the nodes reachable from g (H(M) is acyclic).
      std::vector<int> post;
      std::vector<char> state(count, 0);
      std::vector<std::pair<FaceId, std::size_t>> stack{{g, 0}};
      std::vector<std::vector<std::pair<ArcId, FaceId>>> outs(count);
      state[g - base] = 1;
      out(g, outs[g - base]);
      while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& ov = outs[v - base];
        if (idx == ov.size()) {
          post.push_back(v - base);
          stack.pop_back();
          continue;
        }
        FaceId w = ov[idx++].second;
        if (!state[w - base]) {
          state[w - base] = 1;
          out(w, outs[w - base]);
          stack.push_back({w, 0});
        }
      }
      // Path counts from g, capped at 2.
      std::vector<int> paths(count, 0);
      paths[g - base] = 1;
      for (auto it = post.rbegin(); it != post.rend(); ++it) {
        int v = *it;
        if (paths[v] == 0) continue;
        for (const auto& [a, w] : outs[v]) {
          int lw = w - base;
          paths[lw] = std::min(2, paths[lw] + paths[v]);
        }
      }
      for (FaceId f : c.faces_of_dim(lvl)) {
        if (mate[f] >= 0 || paths[f - base] != 1) continue;
        // Walk back along the unique path and flip it.
        std::vector<char> flip(h.num_arcs(), 0);
        FaceId v = f;
        while (v != g) {
          // v has path count 1, so exactly one in-neighbour is reachable from g.
          ArcId a = -1;
          for (ArcId cand : h.incident(v)) {
            FaceId from = matched[cand] ? h.arc(cand).lower : h.arc(cand).upper;
            FaceId to = matched[cand] ? h.arc(cand).upper : h.arc(cand).lower;
            if (to == v && h.arc(cand).level == lvl && state[from - base] && paths[from - base] > 0) {
              a = cand;
              break;
            }
          }
          flip[a] = 1;
          v = matched[a] ? h.arc(a).lower : h.arc(a).upper;
        }
        MorseMatching next;
        for (ArcId a = 0; a < h.num_arcs(); ++a)
          if (matched[a] != flip[a]) next.arcs.push_back(a);
        return next;
      }
    }
  }
  return std::nullopt;
}

struct ImproveTrace {
  std::vector<int> critical_counts;  // c(M) before the first and after each augmentation
};

/// Augments until no unique path remains. c(M) drops by 2 per step.
inline MorseMatching improve(const HasseDiagram& h, MorseMatching m, ImproveTrace* trace = nullptr) {
  const int n = h.num_faces();
  if (trace) trace->critical_counts.push_back(n - 2 * m.size());
  while (auto next = augment_once(h, m)) {
    m = std::move(*next);
    if (trace) trace->critical_counts.push_back(n - 2 * m.size());
  }
  return m;
}

/// Greedy from x followed by `improve`.
inline MorseMatching run_heuristic(const HasseDiagram& h, std::span<const double> x) {
  return improve(h, greedy_from_lp(h, x));
}

}  // namespace morse

#endif  // MORSE_HEURISTIC_HPP

/**
 * Branch-and-cut for maximum Morse matchings.
 *
 * The root LP holds the matching rows and one Betti row per dimension. Cycle
 * inequalities are separated at every node (at most `max_rounds` rounds) and
 * also added lazily whenever an integral LP point is cyclic. One simplex
 * engine is shared by all nodes; a node installs its bounds and the basis of
 * its parent before re-optimizing.
 */
#ifndef MORSE_SOLVER_HPP
#define MORSE_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"
#include "heuristic.hpp"
#include "homology.hpp"
#include "lp.hpp"
#include "matching.hpp"
#include "separation.hpp"

namespace morse {

class DisconnectedComplexError : public ComplexError {
 public:
  DisconnectedComplexError()
      : ComplexError("complex is disconnected; solve components separately (split flag)") {}
};

enum class Branching { MostFractional, Pseudocost };

inline const char* to_string(Branching b) {
  return b == Branching::MostFractional ? "most-fractional" : "pseudocost";
}

struct SolverConfig {
  std::vector<FieldSpec> fields = default_fields();
  int max_rounds = 7;
  int heuristic_frequency = 10;
  int max_cuts = 20;
  Branching branching = Branching::MostFractional;
  bool gomory = false;
  bool separation = true;
  double time_limit = std::numeric_limits<double>::infinity();  // seconds
  long node_limit = std::numeric_limits<long>::max();
  bool split_components = false;
  /// Pseudocost rule: strong-branch a variable until both directions have
  /// this many observations.
  int reliability = 4;
  /// Optional per-arc objective; empty means unit weights.
  std::vector<double> weights;
  /// Receives the root LP and the transformed graphs of the root separation.
  std::ostream* debug = nullptr;

  /// Only integral LP points are checked for cycles; no fractional separation.
  static SolverConfig no_separation() {
    SolverConfig c;
    c.separation = false;
    return c;
  }

  void validate() const {
    if (fields.empty()) throw std::invalid_argument("at least one field is required");
    if (max_rounds < 1 || heuristic_frequency < 1 || max_cuts < 1 || node_limit < 1 ||
        !(time_limit > 0))
      throw std::invalid_argument("solver limits must be positive");
  }
};

enum class SolveStatus { Optimal, Feasible, TimeLimit, NodeLimit };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Feasible: return "Feasible";
    case SolveStatus::TimeLimit: return "TimeLimit";
    case SolveStatus::NodeLimit: return "NodeLimit";
  }
  return "?";
}

struct SolveStats {
  long nodes = 0;
  int max_depth = 0;
  double seconds = 0.0;
  long cycle_cuts = 0;
  long lazy_cuts = 0;
  long gomory_cuts = 0;
  long lp_iterations = 0;
  long heuristic_calls = 0;
  long strong_probes = 0;
  std::vector<int> betti;  // best bound per dimension over the configured fields
  int beta = 0;            // sum of `betti`
};

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  MorseMatching matching;
  CriticalReport report;
  /// Upper bound on |M| over all Morse matchings.
  long dual_bound = 0;
  /// Lower bound on c derived from `dual_bound`.
  long critical_lower_bound = 0;
  SolveStats stats;

  double gap() const { return static_cast<double>(dual_bound - matching.size()); }
};

/// Sum of the best Betti numbers over the configured fields.
inline int prove_bound(const SimplicialComplex& c, const SolverConfig& config = {}) {
  auto b = best_betti_bounds(c, config.fields);
  int s = 0;
  for (int v : b) s += v;
  return s;
}

/// Root relaxation: matching rows and Betti rows over the arcs of h.
inline lp::LinearProgram root_relaxation(const HasseDiagram& h, const std::vector<int>& betti,
                                         std::span<const double> weights = {}) {
  const auto& c = h.complex();
  std::vector<double> obj(h.num_arcs(), 1.0);
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != h.num_arcs())
      throw std::invalid_argument("weight vector does not match the arc count");
    obj.assign(weights.begin(), weights.end());
  }
  lp::LinearProgram lp(std::move(obj));
  for (FaceId f = 0; f < c.num_faces(); ++f) {
    const auto& inc = h.incident(f);
    if (inc.size() < 2) continue;  // implied by the variable bounds
    lp::Row r;
    for (ArcId a : inc) r.coefs.emplace_back(a, 1.0);
    r.rhs = 1.0;
    lp.add_row(std::move(r));
  }
  for (int i = 0; i <= c.dim(); ++i) {
    lp::Row r;
    for (FaceId f : c.faces_of_dim(i))
      for (ArcId a : h.incident(f)) r.coefs.emplace_back(a, 1.0);
    r.rhs = c.f(i) - betti.at(i);
    if (!r.coefs.empty()) lp.add_row(std::move(r));
  }
  return lp;
}

/// Branch-and-bound node: variable fixings plus a warm-start basis.
struct BranchNode {
  std::vector<std::pair<int, double>> fixings;
  lp::Basis basis;
  double bound = std::numeric_limits<double>::infinity();
  int depth = 0;
  long id = 0;
  // Branching record used to update pseudocosts once the node is solved.
  int branch_var = -1;
  double branch_frac = 0.0;  // distance moved by the fixing
  bool branch_up = false;
};

/// argmin |x_a - 1/2| over fractional entries, lowest index on ties; -1 if integral.
inline int most_fractional(std::span<const double> x) {
  int best = -1;
  double best_score = std::numeric_limits<double>::infinity();
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    double f = x[j] - std::floor(x[j]);
    if (f < lp::kIntTol || f > 1 - lp::kIntTol) continue;
    double s = std::abs(x[j] - std::floor(x[j]) - 0.5);
    if (s < best_score - 1e-12) {
      best_score = s;
      best = j;
    }
  }
  return best;
}

/// Average objective loss per unit change, tracked separately for each direction.
class Pseudocosts {
 public:
  explicit Pseudocosts(int n) : sum_(2 * n, 0.0), cnt_(2 * n, 0) {}

  void record(int var, bool up, double frac, double loss) {
    if (frac < lp::kIntTol || !std::isfinite(loss)) return;
    sum_[2 * var + up] += std::max(0.0, loss) / frac;
    ++cnt_[2 * var + up];
  }

  bool reliable(int var, int threshold) const {
    return std::min(cnt_[2 * var], cnt_[2 * var + 1]) >= threshold;
  }

  /// Product score with unknown entries replaced by the mean of known ones.
  int select(std::span<const double> x) const {
    double mean[2] = {1.0, 1.0};
    for (int d = 0; d < 2; ++d) {
      double s = 0.0;
      long k = 0;
      for (std::size_t j = 0; j < cnt_.size() / 2; ++j)
        if (cnt_[2 * j + d]) {
          s += sum_[2 * j + d] / cnt_[2 * j + d];
          ++k;
        }
      if (k) mean[d] = s / k;
    }
    int best = -1;
    double best_score = -1.0;
    for (int j = 0; j < static_cast<int>(x.size()); ++j) {
      double f = x[j] - std::floor(x[j]);
      if (f < lp::kIntTol || f > 1 - lp::kIntTol) continue;
      double down = cnt_[2 * j] ? sum_[2 * j] / cnt_[2 * j] : mean[0];
      double up = cnt_[2 * j + 1] ? sum_[2 * j + 1] / cnt_[2 * j + 1] : mean[1];
      double score = std::max(down * f, 1e-6) * std::max(up * (1 - f), 1e-6);
      if (score > best_score + 1e-12) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

 private:
  std::vector<double> sum_;
  std::vector<long> cnt_;
};

/// Splits a node on variable `var`: the first child fixes it to 0, the second to 1.
inline std::pair<BranchNode, BranchNode> branch(const BranchNode& node, const lp::LpSolution& sol,
                                                int var) {
  if (var < 0 || var >= static_cast<int>(sol.values.size()))
    throw std::logic_error("branching variable out of range");
  const double v = sol.values[var];
  if (std::abs(v - std::round(v)) < lp::kIntTol)
    throw std::logic_error("branching on an integral variable");
  BranchNode down, up;
  for (BranchNode* child : {&down, &up}) {
    child->fixings = node.fixings;
    child->basis = sol.basis;
    child->bound = sol.objective;
    child->depth = node.depth + 1;
    child->branch_var = var;
  }
  down.fixings.emplace_back(var, 0.0);
  down.branch_frac = v;
  up.fixings.emplace_back(var, 1.0);
  up.branch_frac = 1.0 - v;
  up.branch_up = true;
  return {std::move(down), std::move(up)};
}

/// Branches with the most-fractional rule.
inline std::pair<BranchNode, BranchNode> branch(const BranchNode& node, const lp::LpSolution& sol) {
  int var = most_fractional(sol.values);
  if (var < 0) throw std::logic_error("branching on an integral solution");
  return branch(node, sol, var);
}

namespace detail {

class BranchAndCut {
 public:
  BranchAndCut(const SimplicialComplex& c, const SolverConfig& cfg)
      : c_(c), h_(c), cfg_(cfg), start_(std::chrono::steady_clock::now()) {}

  SolveResult run() {
    SolveResult res;
    res.stats.betti = best_betti_bounds(c_, cfg_.fields);
    for (int b : res.stats.betti) res.stats.beta += b;
    const int n_arcs = h_.num_arcs();
    if (!cfg_.weights.empty()) {
      integral_obj_ = std::all_of(cfg_.weights.begin(), cfg_.weights.end(),
                                  [](double w) { return w == std::round(w); });
    }

    incumbent_ = MorseMatching{};
    incumbent_value_ = 0.0;
    if (n_arcs == 0) {
      finish(res, SolveStatus::Optimal, 0.0);
      return res;
    }
    for (int i = 0; i < h_.num_levels(); ++i) levels_.push_back(level(h_, i));
    level0_end_ = h_.level_range(0).second;
    free_level0_ = cfg_.weights.empty() && res.stats.betti[0] == 1 &&
                   is_connected(c_);

    auto root_lp = root_relaxation(h_, res.stats.betti, cfg_.weights);
    if (cfg_.debug) *cfg_.debug << root_lp.to_lp_format();
    lp_.emplace(std::move(root_lp));
    pseudo_.emplace(n_arcs);

    auto cmp = [](const BranchNode& a, const BranchNode& b) {
      if (a.bound != b.bound) return a.bound < b.bound;
      return a.id > b.id;
    };
    std::priority_queue<BranchNode, std::vector<BranchNode>, decltype(cmp)> open(cmp);
    std::optional<BranchNode> next = BranchNode{};
    SolveStatus status = SolveStatus::Optimal;
    bool lp_failed = false;
    double open_bound = -std::numeric_limits<double>::infinity();

    while (next || !open.empty()) {
      if (!next) {
        next = open.top();
        open.pop();
      }
      BranchNode node = std::move(*next);
      next.reset();
      if (prunable(node.bound)) continue;
      if (elapsed() > cfg_.time_limit || res.stats.nodes >= cfg_.node_limit) {
        status = elapsed() > cfg_.time_limit ? SolveStatus::TimeLimit : SolveStatus::NodeLimit;
        open_bound = std::max(open_bound, node.bound);
        break;
      }
      node.id = res.stats.nodes++;
      res.stats.max_depth = std::max(res.stats.max_depth, node.depth);
      auto children = process(node, res.stats, lp_failed);
      if (!children) continue;
      auto& [down, up] = *children;
      down.id = up.id = -1;
      // Plunge into the child the LP leans towards.
      bool up_first = node_x_[down.branch_var] >= 0.5;
      BranchNode first = up_first ? std::move(up) : std::move(down);
      BranchNode second = up_first ? std::move(down) : std::move(up);
      second.id = ++queued_;
      open.push(std::move(second));
      next = std::move(first);
    }
    while (!open.empty()) {
      open_bound = std::max(open_bound, open.top().bound);
      open.pop();
    }
    if (status == SolveStatus::Optimal && lp_failed) status = SolveStatus::Feasible;
    finish(res, status, std::max(open_bound, failed_bound_));
    return res;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  /// Best possible objective inside a subtree with LP bound `bound`.
  double cap(double bound) const {
    return integral_obj_ ? std::floor(bound + 1e-6) : bound;
  }
  bool prunable(double bound) const { return cap(bound) <= incumbent_value_ + 1e-9; }

  double value_of(const MorseMatching& m) const {
    if (cfg_.weights.empty()) return m.size();
    double v = 0.0;
    for (ArcId a : m.arcs) v += cfg_.weights[a];
    return v;
  }

  void offer(MorseMatching m) {
    if (!is_morse_matching(h_, m)) return;
    MorseMatching canon = canonicalize_vertices(h_, m);
    if (cfg_.weights.empty()) m = std::move(canon);
    const double v = value_of(m);
    if (v > incumbent_value_ + 1e-9) {
      incumbent_ = std::move(m);
      incumbent_value_ = v;
    }
  }

  bool add_cut(const std::vector<ArcId>& arcs, SolveStats& stats, bool lazy) {
    std::vector<ArcId> key(arcs);
    std::sort(key.begin(), key.end());
    if (!pool_.insert(key).second) return false;
    lp::Row r;
    for (ArcId a : key) r.coefs.emplace_back(a, 1.0);
    r.rhs = key.size() / 2.0 - 1.0;
    lp_->add_row(r);
    ++(lazy ? stats.lazy_cuts : stats.cycle_cuts);
    return true;
  }

  /// One separation round over all levels; returns the number of new rows.
  int separate(std::span<const double> x, SolveStats& stats, bool dump) {
    int added = 0;
    for (const auto& g : levels_) {
      if (g.num_edges() == 0 || (free_level0_ && g.level == 0)) continue;
      std::vector<double> xs(g.num_edges());
      for (int e = 0; e < g.num_edges(); ++e) xs[e] = std::clamp(x[g.edges[e].id], 0.0, 1.0);
      // Scaling down keeps every violated cycle of the original point violated.
      for (const auto* adj : {&g.lower_adj, &g.upper_adj})
        for (const auto& inc : *adj) {
          double s = 0.0;
          for (int e : inc) s += xs[e];
          if (s > 1.0)
            for (int e : inc) xs[e] /= s;
        }
      if (dump && cfg_.debug) {
        *cfg_.debug << "# transformed graph, level " << g.level << "\n"
                    << TransformedGraph(g, xs).dump();
      }
      SeparationOptions opts;
      opts.max_cuts = cfg_.max_cuts;
      for (const auto& cut : separate_level(g, xs, opts)) added += add_cut(cut.arcs, stats, false);
    }
    return added;
  }

  static bool integral(std::span<const double> x) {
    for (double v : x)
      if (std::abs(v - std::round(v)) > lp::kIntTol) return false;
    return true;
  }

  using Children = std::optional<std::pair<BranchNode, BranchNode>>;

  Children process(const BranchNode& in, SolveStats& stats, bool& lp_failed) {
    auto& s = *lp_;
    BranchNode node = in;
    for (int j = 0; j < h_.num_arcs(); ++j)
      if (s.lp().lower(j) != 0.0 || s.lp().upper(j) != 1.0) s.set_bounds(j, 0.0, 1.0);
    for (auto [j, v] : node.fixings) s.fix_variable(j, v);
    if (!node.basis.empty()) s.set_basis(node.basis);

    const bool root = node.depth == 0 && node.fixings.empty();
    int rounds = 0;
    bool first = true, heuristic_done = false;
    lp::LpSolution sol;
    while (true) {
      sol = s.solve();
      stats.lp_iterations += sol.iterations;
      if (sol.status == lp::LpStatus::Infeasible) return std::nullopt;
      if (sol.status == lp::LpStatus::IterationLimit) {
        // Keep the parent bound; the subtree can no longer be certified.
        lp_failed = true;
        failed_bound_ = std::max(failed_bound_, node.bound);
        return std::nullopt;
      }
      if (first && node.branch_var >= 0)
        pseudo_->record(node.branch_var, node.branch_up, node.branch_frac,
                        node.bound - sol.objective);
      first = false;
      if (prunable(sol.objective)) return std::nullopt;

      if (free_level0_ && integral(std::span<const double>(sol.values).subspan(level0_end_))) {
        // The vertex level is completed by a spanning tree of Gamma(M); the
        // dimension-0 Betti row caps the LP's level-0 mass at f_0 - 1, so the
        // completion is at least as good as the LP point.
        MorseMatching m;
        for (int j = level0_end_; j < h_.num_arcs(); ++j)
          if (sol.values[j] > 0.5) m.arcs.push_back(j);
        auto check = is_morse_matching(h_, m);
        if (check) {
          offer(canonicalize_vertices(h_, m));
          if (prunable(sol.objective)) return std::nullopt;
        } else if (!check.cycle.empty() && add_cut(check.cycle, stats, true)) {
          continue;
        }
      }
      if (integral(sol.values)) {
        MorseMatching m;
        for (int j = 0; j < h_.num_arcs(); ++j)
          if (sol.values[j] > 0.5) m.arcs.push_back(j);
        auto check = is_morse_matching(h_, m);
        if (check) {
          offer(std::move(m));
          return std::nullopt;
        }
        if (!check.cycle.empty() && add_cut(check.cycle, stats, true)) continue;
        throw std::logic_error("integral LP point is not a matching");
      }
      if (cfg_.separation && rounds < cfg_.max_rounds) {
        ++rounds;
        if (separate(sol.values, stats, root && rounds == 1) > 0) continue;
      }
      if (root && cfg_.gomory && rounds <= cfg_.max_rounds) {
        rounds = cfg_.max_rounds + 1;
        auto cuts = lp::gomory_cuts(s.lp(), sol);
        if (!cuts.empty()) {
          s.add_rows(cuts);
          stats.gomory_cuts += static_cast<long>(cuts.size());
          continue;
        }
      }
      if (!heuristic_done && node.depth % cfg_.heuristic_frequency == 0) {
        heuristic_done = true;
        ++stats.heuristic_calls;
        offer(run_heuristic(h_, sol.values));
        if (prunable(sol.objective)) return std::nullopt;
      }
      if (cfg_.branching == Branching::MostFractional) break;
      // Probing may settle a variable; the node is then re-solved.
      auto [var, fixed] = select_pseudocost(sol, stats);
      if (var == -1) break;
      if (var == -2) return std::nullopt;
      if (fixed) {
        node.fixings.emplace_back(var, *fixed);
        s.fix_variable(var, *fixed);
        continue;
      }
      node_x_ = sol.values;
      return branch(node, sol, var);
    }
    node_x_ = sol.values;
    int var = most_fractional(branch_view(sol.values));
    if (var < 0) var = most_fractional(sol.values);
    return branch(node, sol, var);
  }

  /// Copy of x with the entries that are not branched on first set to 0.
  std::vector<double> branch_view(std::span<const double> x) const {
    std::vector<double> v(x.begin(), x.end());
    if (free_level0_) std::fill(v.begin(), v.begin() + level0_end_, 0.0);
    return v;
  }

  /// Child LP objective with x_j fixed to v; -inf if infeasible. The engine
  /// is rolled back afterwards.
  double probe(int j, double v, double parent, SolveStats& stats) {
    auto& s = *lp_;
    auto snap = s.snapshot();
    s.fix_variable(j, v);
    auto r = s.solve();
    stats.lp_iterations += r.iterations;
    ++stats.strong_probes;
    s.set_bounds(j, 0.0, 1.0);
    s.restore(snap);
    if (r.status == lp::LpStatus::Infeasible) return -std::numeric_limits<double>::infinity();
    if (r.status != lp::LpStatus::Optimal) return parent;
    return r.objective;
  }

  /// Pseudocost choice with strong-branching initialisation of unreliable
  /// entries. Returns (-2, none) if both children of some candidate are
  /// pruned, or (j, v) when only x_j = v survives.
  std::pair<int, std::optional<double>> select_pseudocost(const lp::LpSolution& sol,
                                                          SolveStats& stats) {
    const auto x = branch_view(sol.values);
    std::vector<int> cand;
    for (int j = 0; j < static_cast<int>(x.size()); ++j) {
      double f = x[j] - std::floor(x[j]);
      if (f >= lp::kIntTol && f <= 1 - lp::kIntTol) cand.push_back(j);
    }
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
      return std::abs(x[a] - 0.5) < std::abs(x[b] - 0.5);
    });
    for (int j : cand) {
      if (pseudo_->reliable(j, cfg_.reliability)) continue;
      double down = probe(j, 0.0, sol.objective, stats);
      double up = probe(j, 1.0, sol.objective, stats);
      pseudo_->record(j, false, x[j], sol.objective - down);
      pseudo_->record(j, true, 1 - x[j], sol.objective - up);
      bool down_dead = prunable(down), up_dead = prunable(up);
      if (down_dead && up_dead) return {-2, std::nullopt};
      if (down_dead) return {j, 1.0};
      if (up_dead) return {j, 0.0};
    }
    return {cand.empty() ? -1 : pseudo_->select(x), std::nullopt};
  }

  void finish(SolveResult& res, SolveStatus status, double open_bound) {
    res.status = status;
    res.matching = incumbent_;
    res.report = critical_report(h_, incumbent_);
    double bound = std::max(incumbent_value_, status == SolveStatus::Optimal ? incumbent_value_
                                                                             : open_bound);
    res.dual_bound = static_cast<long>(std::floor(bound + 1e-6));
    res.critical_lower_bound = c_.num_faces() - 2 * res.dual_bound;
    res.stats.seconds = elapsed();
  }

  const SimplicialComplex& c_;
  HasseDiagram h_;
  SolverConfig cfg_;
  std::chrono::steady_clock::time_point start_;
  std::vector<LevelGraph> levels_;
  std::optional<lp::SimplexSolver> lp_;
  std::optional<Pseudocosts> pseudo_;
  std::set<std::vector<ArcId>> pool_;
  MorseMatching incumbent_;
  double incumbent_value_ = 0.0;
  bool integral_obj_ = true;
  // Connected complex with unit weights: level-0 arcs are never branched on.
  bool free_level0_ = false;
  int level0_end_ = 0;
  double failed_bound_ = -std::numeric_limits<double>::infinity();
  std::vector<double> node_x_;
  long queued_ = 0;
};

inline SolveResult solve_split(const SimplicialComplex& c, const SolverConfig& config) {
  HasseDiagram h(c);
  SolverConfig sub_cfg = config;
  sub_cfg.split_components = false;
  SolveResult out;
  out.stats.betti.assign(c.dim() + 1, 0);
  long dual = 0;
  for (const auto& comp : connected_components(c)) {
    auto sub = induced_subcomplex(c, comp);
    HasseDiagram sh(sub);
    auto lift = [&](FaceId f) {
      std::vector<Vertex> vs;
      for (Vertex v : sub.face(f).vertices) vs.push_back(comp[v]);
      std::sort(vs.begin(), vs.end());
      return c.find(vs);
    };
    std::vector<ArcId> to_parent(sh.num_arcs());
    for (ArcId a = 0; a < sh.num_arcs(); ++a)
      to_parent[a] = h.find_arc(lift(sh.arc(a).upper), lift(sh.arc(a).lower));
    if (!config.weights.empty()) {
      sub_cfg.weights.assign(sh.num_arcs(), 0.0);
      for (ArcId a = 0; a < sh.num_arcs(); ++a) sub_cfg.weights[a] = config.weights.at(to_parent[a]);
    }
    SolveResult r = BranchAndCut(sub, sub_cfg).run();
    for (ArcId a : r.matching.arcs) out.matching.arcs.push_back(to_parent[a]);
    if (r.status != SolveStatus::Optimal && out.status == SolveStatus::Optimal) out.status = r.status;
    dual += r.dual_bound;
    auto& st = out.stats;
    st.nodes += r.stats.nodes;
    st.max_depth = std::max(st.max_depth, r.stats.max_depth);
    st.seconds += r.stats.seconds;
    st.cycle_cuts += r.stats.cycle_cuts;
    st.lazy_cuts += r.stats.lazy_cuts;
    st.gomory_cuts += r.stats.gomory_cuts;
    st.lp_iterations += r.stats.lp_iterations;
    st.heuristic_calls += r.stats.heuristic_calls;
  }
  out.matching.normalize();
  out.report = critical_report(h, out.matching);
  out.stats.betti = best_betti_bounds(c, config.fields);
  for (int b : out.stats.betti) out.stats.beta += b;
  out.dual_bound = dual;
  out.critical_lower_bound = c.num_faces() - 2 * dual;
  return out;
}

}  // namespace detail

/// Maximum Morse matching of `c`. Arc ids refer to `hasse_diagram(c)`.
inline SolveResult solve(const SimplicialComplex& c, const SolverConfig& config = {}) {
  config.validate();
  if (!is_connected(c)) {
    if (!config.split_components) throw DisconnectedComplexError();
    return detail::solve_split(c, config);
  }
  return detail::BranchAndCut(c, config).run();
}

}  // namespace morse

#endif  // MORSE_SOLVER_HPP

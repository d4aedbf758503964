// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "morse/morse.hpp"
#include "oracles.hpp"

using namespace morse;

namespace {

// pinned tolerances and limits
constexpr double kViolationTol = 1e-6;
constexpr double kAuditTol = -1e-9;
constexpr double kSmallLimit = 5.0;   // seconds
constexpr double kDunceLimit = 60.0;  // seconds
constexpr int kGraphs = 50;
constexpr int kPoints = 200;
constexpr int kRoundTrips = 100;
constexpr int kMaxLevelFaces = 30;

struct Produced {
  std::string name;
  SimplicialComplex c;
  MorseMatching m;
};
std::vector<Produced> produced;

void record(const std::string& name, const SimplicialComplex& c, const MorseMatching& m) {
  produced.push_back({name, c, m});
}

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string vec(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

struct Timed {
  SolveResult r;
  double secs;
};

Timed timed_solve(const SimplicialComplex& c, const SolverConfig& cfg = {}) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = solve(c, cfg);
  return {r, seconds_since(t0)};
}

// The exact result every solve must satisfy in this suite.
void expect_optimal(Check& chk, const std::string& name, const SimplicialComplex& c, const Timed& t,
                    int c_opt, double limit) {
  chk.expect(t.r.status == SolveStatus::Optimal,
             name + ": status " + to_string(t.r.status));
  chk.expect(t.r.report.total == c_opt,
             name + ": c = " + std::to_string(t.r.report.total) + ", want " + std::to_string(c_opt));
  chk.expect(static_cast<bool>(is_morse_matching(HasseDiagram(c), t.r.matching)),
             name + ": result is not a Morse matching");
  chk.expect(t.secs < limit, name + ": " + std::to_string(t.secs) + " s");
  record(name, c, t.r.matching);
}

std::vector<int> boundary_criticals(int d) {
  std::vector<int> v(d, 0);
  v.front() = 1;
  v.back() = 1;
  return v;
}

// ---- criteria -------------------------------------------------------------

Check projective_plane() {
  Check chk;
  auto c = instances::projective_plane();
  auto t = timed_solve(c);
  expect_optimal(chk, "RP2", c, t, 3, kSmallLimit);
  chk.expect(t.r.report.c == std::vector<int>{1, 1, 1}, "RP2 criticals " + vec(t.r.report.c));
  chk.expect(t.r.stats.beta == 3, "RP2 beta bound " + std::to_string(t.r.stats.beta));
  return chk;
}

Check dunce_hat() {
  Check chk;
  auto c = instances::dunce_hat();
  chk.expect(c.f_vector() == std::vector<int>{8, 24, 17}, "dunce f-vector " + vec(c.f_vector()));
  HasseDiagram h(c);
  chk.expect(h.num_faces() == 49 && h.num_arcs() == 99, "dunce n or m");
  auto t = timed_solve(c);
  expect_optimal(chk, "dunce", c, t, 3, kDunceLimit);
  chk.expect(t.r.stats.beta == 1, "dunce beta bound " + std::to_string(t.r.stats.beta));
  std::cout << "  dunce: " << t.r.stats.nodes << " nodes, " << t.r.stats.cycle_cuts
            << " cycle cuts, " << t.secs << " s\n";
  return chk;
}

Check boundary_spheres() {
  Check chk;
  for (int d = 2; d <= 4; ++d) {
    auto c = instances::boundary_of_simplex(d);
    auto name = "bd simplex d=" + std::to_string(d);
    auto t = timed_solve(c);
    expect_optimal(chk, name, c, t, 2, kSmallLimit);
    chk.expect(t.r.report.c == boundary_criticals(d), name + " criticals " + vec(t.r.report.c));
    // homology oracle: beta over Q and GF(2) sums to 2, so the bound is tight
    for (long long p : {0LL, 2LL}) {
      auto b = oracle::betti(c, p);
      chk.expect(b == boundary_criticals(d), name + " oracle betti " + vec(b));
      chk.expect(std::accumulate(b.begin(), b.end(), 0) == t.r.report.total, name + " bound not tight");
    }
    chk.expect(t.r.stats.beta == 2, name + " beta bound");
    if (d == 2) chk.expect(oracle::min_critical(c) == 2, name + " enumeration");
  }
  return chk;
}

Check full_simplices() {
  Check chk;
  for (int k = 1; k <= 3; ++k) {
    auto c = instances::full_simplex(k);
    auto name = "simplex k=" + std::to_string(k);
    auto t = timed_solve(c);
    expect_optimal(chk, name, c, t, 1, kSmallLimit);
    if (k <= 2) chk.expect(oracle::min_critical(c) == 1, name + " enumeration");
  }
  return chk;
}

// Matched edges form a forest in which each tree leaves exactly one vertex
// unmatched: orienting every pair (edge, v) towards v gives in-degree <= 1
// and a unique root per component.
bool induces_branching(const HasseDiagram& h, const MorseMatching& m) {
  const auto& c = h.complex();
  const int nv = c.num_vertices();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  std::vector<int> matched_vertex(nv, 0);
  std::set<int> touched;
  for (ArcId a : m.arcs) {
    const auto& vs = c.face(h.arc(a).upper).vertices;
    int ra = find(vs[0]), rb = find(vs[1]);
    if (ra == rb) return false;  // cycle among matched edges
    parent[ra] = rb;
    int v = c.face(h.arc(a).lower).vertices[0];
    if (matched_vertex[v]++) return false;
    touched.insert(vs[0]);
    touched.insert(vs[1]);
  }
  std::map<int, int> roots;
  for (int v : touched)
    if (!matched_vertex[v]) ++roots[find(v)];
  std::set<int> comps;
  for (int v : touched) comps.insert(find(v));
  for (int r : comps)
    if (roots[r] != 1) return false;
  return true;
}

Check random_graphs() {
  Check chk;
  std::mt19937_64 rng(20240501);
  for (int k = 0; k < kGraphs; ++k) {
    auto c = instances::random_connected_graph(rng, 12, 30);
    auto name = "graph " + std::to_string(k);
    HasseDiagram h(c);
    auto t = timed_solve(c);
    int want = 1 + (c.f(1) - c.f(0) + 1);
    expect_optimal(chk, name, c, t, want, kSmallLimit);
    chk.expect(induces_branching(h, t.r.matching), name + ": not a branching");
  }
  return chk;
}

// Random fractional point satisfying the matching inequalities of g.
std::vector<double> random_point(const LevelGraph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(g.num_edges());
  for (auto& v : x) {
    double r = u(rng);
    v = r < 0.2 ? 0.0 : (r < 0.45 ? 0.5 : u(rng));
  }
  for (const auto* adj : {&g.lower_adj, &g.upper_adj})
    for (const auto& inc : *adj) {
      double s = 0.0;
      for (int e : inc) s += x[e];
      if (s > 1.0)
        for (int e : inc) x[e] /= s;
    }
  return x;
}

bool is_level_cycle(const LevelGraph& g, const std::vector<int>& edges) {
  if (edges.size() < 4 || edges.size() % 2) return false;
  std::set<int> lows, ups;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& a = g.edges[edges[k]];
    const auto& b = g.edges[edges[(k + 1) % edges.size()]];
    if (a.u != b.u && a.w != b.w) return false;
    lows.insert(a.u);
    ups.insert(a.w);
  }
  return lows.size() * 2 == edges.size() && ups.size() * 2 == edges.size();
}

struct SeparationSample {
  LevelGraph g;
  std::vector<double> x;
};

std::vector<SeparationSample> separation_samples() {
  std::vector<LevelGraph> graphs;
  for (const auto& c : {instances::boundary_of_simplex(2), instances::boundary_of_simplex(3),
                        instances::boundary_of_simplex(4), instances::full_simplex(3),
                        instances::full_simplex(4), instances::projective_plane()}) {
    HasseDiagram h(c);
    for (int i = 0; i < h.num_levels(); ++i) {
      auto g = level(h, i);
      if (g.num_nodes() <= kMaxLevelFaces && g.num_edges() > 0) graphs.push_back(std::move(g));
    }
  }
  graphs.push_back(LevelGraph::from_edges(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}}));
  std::mt19937_64 rng(77);
  std::vector<SeparationSample> out;
  for (int k = 0; k < kPoints; ++k) {
    const auto& g = graphs[k % graphs.size()];
    out.push_back({g, random_point(g, rng)});
  }
  return out;
}

Check separation_exactness(const std::vector<SeparationSample>& samples) {
  Check chk;
  int violated = 0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& [g, x] = samples[k];
    auto cuts = separate_level(g, x);
    auto bf = brute_force_separation(g, x);
    chk.expect(cuts.empty() == !bf, "point " + std::to_string(k) + ": disagreement");
    if (bf) ++violated;
    for (const auto& cut : cuts) {
      double lhs = 0.0;
      for (int e : cut.edges) lhs += x[e];
      double viol = lhs - (cut.edges.size() / 2.0 - 1.0);
      chk.expect(is_level_cycle(g, cut.edges), "point " + std::to_string(k) + ": cut is not a cycle");
      chk.expect(viol > kViolationTol, "point " + std::to_string(k) + ": violation " + std::to_string(viol));
    }
  }
  std::cout << "  separation: " << violated << " of " << samples.size() << " points violated\n";
  chk.expect(violated > 0, "no violated point in the sample");
  return chk;
}

Check weight_audit(const std::vector<SeparationSample>& samples) {
  Check chk;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [g, x] : samples) {
    double w = conservative_weight_audit(g, x);
    worst = std::min(worst, w);
    chk.expect(w >= kAuditTol, "negative cycle weight " + std::to_string(w));
  }
  std::cout << "  audit: minimum cycle weight " << worst << "\n";
  return chk;
}

Check identity_suite() {
  Check chk;
  for (const auto& p : produced) {
    const auto& c = p.c;
    HasseDiagram h(c);
    auto rep = critical_report(h, p.m);
    chk.expect(rep.total == c.num_faces() - 2 * p.m.size(), p.name + ": c != n - 2|M|");
    long alt = 0;
    for (int j = 0; j <= c.dim(); ++j) alt += (j % 2 ? -1 : 1) * rep.c[j];
    chk.expect(alt == euler_characteristic(c), p.name + ": alternating sum != chi");
    for (auto field : default_fields()) {
      auto b = betti_numbers(c, field).beta;
      for (int j = 0; j <= c.dim(); ++j)
        chk.expect(rep.c[j] >= b[j], p.name + ": c_" + std::to_string(j) + " < beta over " + field.name());
    }
    chk.expect(gamma_connected(h, p.m), p.name + ": Gamma(M) disconnected");
    auto canon = canonicalize_vertices(h, p.m);
    chk.expect(static_cast<bool>(is_morse_matching(h, canon)), p.name + ": canonical form not Morse");
    auto crep = critical_report(h, canon);
    chk.expect(crep.c[0] == 1, p.name + ": canonical c_0 = " + std::to_string(crep.c[0]));
    for (int j = 2; j <= c.dim(); ++j)
      chk.expect(crep.c[j] == rep.c[j], p.name + ": canonical changed c_" + std::to_string(j));
    chk.expect(crep.total <= rep.total, p.name + ": canonical increased c");
  }
  std::cout << "  identities: " << produced.size() << " matchings checked\n";
  chk.expect(!produced.empty(), "no matchings recorded");
  return chk;
}

Check heuristic_quality() {
  Check chk;
  struct Case {
    std::string name;
    SimplicialComplex c;
    int opt;
  };
  std::vector<Case> cases{{"RP2", instances::projective_plane(), 3},
                          {"dunce", instances::dunce_hat(), 3}};
  for (int d = 2; d <= 4; ++d)
    cases.push_back({"bd simplex d=" + std::to_string(d), instances::boundary_of_simplex(d), 2});
  for (int k = 1; k <= 3; ++k)
    cases.push_back({"simplex k=" + std::to_string(k), instances::full_simplex(k), 1});
  for (const auto& [name, c, opt] : cases) {
    HasseDiagram h(c);
    auto root = lp::solve(root_relaxation(h, best_betti_bounds(c, default_fields())));
    chk.expect(root.status == lp::LpStatus::Optimal, name + ": root LP not optimal");
    auto start = greedy_from_lp(h, root.values);
    ImproveTrace tr;
    auto m = improve(h, start, &tr);
    record(name + " heuristic", c, m);
    int got = critical_report(h, m).total;
    std::cout << "  heuristic " << name << ": greedy c = " << tr.critical_counts.front()
              << ", improved c = " << got << ", optimum " << opt << "\n";
    chk.expect(got == opt, name + ": heuristic reached c = " + std::to_string(got));
    for (std::size_t k = 1; k < tr.critical_counts.size(); ++k)
      chk.expect(tr.critical_counts[k] == tr.critical_counts[k - 1] - 2, name + ": step not -2");
  }
  // property fallback on random starts
  std::mt19937_64 rng(99);
  for (const auto& [name, c, opt] : cases) {
    HasseDiagram h(c);
    for (int rep = 0; rep < 5; ++rep) {
      auto start = instances::random_morse_matching(h, rng, 0.3);
      ImproveTrace tr;
      auto m = improve(h, start, &tr);
      record(name + " improve", c, m);
      chk.expect(critical_report(h, m).total <= critical_report(h, start).total, name + ": improve increased c");
      for (std::size_t k = 1; k < tr.critical_counts.size(); ++k)
        chk.expect(tr.critical_counts[k] == tr.critical_counts[k - 1] - 2, name + ": random step not -2");
    }
  }
  return chk;
}

Check round_trip() {
  Check chk;
  std::vector<SimplicialComplex> suite{instances::projective_plane(), instances::dunce_hat(),
                                       instances::boundary_of_simplex(3), instances::boundary_of_simplex(4),
                                       instances::full_simplex(3)};
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> keep(0.2, 1.0);
  for (int k = 0; k < kRoundTrips; ++k) {
    const auto& c = suite[k % suite.size()];
    HasseDiagram h(c);
    auto m = instances::random_morse_matching(h, rng, keep(rng));
    record("random " + std::to_string(k), c, m);
    auto f = matching_to_function(h, m);
    chk.expect(static_cast<bool>(is_discrete_morse_function(h, f)),
               "round trip " + std::to_string(k) + ": function fails the Morse condition");
    chk.expect(function_to_matching(h, f) == m, "round trip " + std::to_string(k) + ": matching changed");
  }
  return chk;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Check()>>> criteria;
  criteria.emplace_back("projective plane: c = 3, criticals (1,1,1), beta bound 3", projective_plane);
  criteria.emplace_back("dunce hat: c = 3 with beta bound 1 in under 60 s", dunce_hat);
  criteria.emplace_back("boundary of d-simplex, d = 2..4: c = 2", boundary_spheres);
  criteria.emplace_back("full k-simplex, k = 1..3: c = 1", full_simplices);
  criteria.emplace_back("random connected graphs: closed form and branching", random_graphs);
  auto samples = separation_samples();
  criteria.emplace_back("separation agrees with enumeration", [&] { return separation_exactness(samples); });
  criteria.emplace_back("conservative weights audit", [&] { return weight_audit(samples); });
  // 9 and 10 record matchings, so the identity suite runs last and is reported as 8
  std::vector<std::pair<int, Check>> results;
  for (std::size_t k = 0; k < criteria.size(); ++k) results.emplace_back(k + 1, criteria[k].second());
  Check h = heuristic_quality();
  Check rt = round_trip();
  Check id = identity_suite();
  criteria.emplace_back("identity suite over all produced matchings", nullptr);
  criteria.emplace_back("heuristic from the root LP reaches the optimum", nullptr);
  criteria.emplace_back("Morse function round trip", nullptr);
  results.emplace_back(8, id);
  results.emplace_back(9, h);
  results.emplace_back(10, rt);

  int failed = 0;
  for (auto& [num, chk] : results) {
    bool ok = chk.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << num << ". " << criteria[num - 1].first << "\n";
    for (std::size_t k = 0; k < chk.failures.size() && k < 10; ++k)
      std::cout << "       " << chk.failures[k] << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}

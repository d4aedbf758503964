/**
 * Small linear-programming engine for the matching relaxation.
 *
 *   maximize c^T x  subject to  A x <= b,  lo <= x <= hi.
 *
 * Bounded-variable revised simplex with a dense basis inverse that is updated
 * per pivot and rebuilt every `refactor_interval` pivots. Every row gets a
 * slack s = b - a^T x with bounds [0, b - min_{lo<=x<=hi} a^T x], so all
 * variables are boxed: any basis can be made dual feasible by moving nonbasic
 * variables to the proper bound. Cold starts run the primal simplex from the
 * slack basis; warm starts that are primal infeasible (new rows, changed
 * bounds) run the dual simplex.
 */
#ifndef MORSE_LP_HPP
#define MORSE_LP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace morse::lp {

inline constexpr double kFeasTol = 1e-7;
inline constexpr double kOptTol = 1e-6;
inline constexpr double kIntTol = 1e-6;

class LpError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse row  sum coefs <= rhs.
struct Row {
  std::vector<std::pair<int, double>> coefs;
  double rhs = 0.0;
};

class LinearProgram {
 public:
  LinearProgram() = default;

  /// Variables in [0, 1] with the given objective.
  explicit LinearProgram(std::vector<double> objective)
      : obj_(std::move(objective)), lo_(obj_.size(), 0.0), hi_(obj_.size(), 1.0) {
    for (double c : obj_)
      if (!std::isfinite(c)) throw LpError("objective coefficient is not finite");
  }

  LinearProgram(std::vector<double> objective, std::vector<double> lo, std::vector<double> hi)
      : obj_(std::move(objective)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() != obj_.size() || hi_.size() != obj_.size())
      throw LpError("bound vectors must match the objective length");
    for (std::size_t j = 0; j < obj_.size(); ++j) check_bounds(static_cast<int>(j), lo_[j], hi_[j]);
  }

  int num_vars() const { return static_cast<int>(obj_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<double>& objective() const { return obj_; }
  double lower(int j) const { return lo_.at(j); }
  double upper(int j) const { return hi_.at(j); }
  const Row& row(int i) const { return rows_.at(i); }
  const std::vector<Row>& rows() const { return rows_; }

  /// Appends a row; duplicate variable entries are merged and zeros dropped.
  int add_row(Row r) {
    if (!std::isfinite(r.rhs)) throw LpError("row rhs is not finite");
    std::sort(r.coefs.begin(), r.coefs.end());
    std::vector<std::pair<int, double>> merged;
    for (auto [j, v] : r.coefs) {
      if (j < 0 || j >= num_vars()) throw LpError("row references unknown variable");
      if (!std::isfinite(v)) throw LpError("row coefficient is not finite");
      if (!merged.empty() && merged.back().first == j)
        merged.back().second += v;
      else
        merged.emplace_back(j, v);
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0.0; });
    r.coefs = std::move(merged);
    rows_.push_back(std::move(r));
    return num_rows() - 1;
  }

  void add_rows(std::span<const Row> rows) {
    for (const auto& r : rows) add_row(r);
  }

  void set_bounds(int j, double lo, double hi) {
    if (j < 0 || j >= num_vars()) throw LpError("unknown variable");
    check_bounds(j, lo, hi);
    lo_[j] = lo;
    hi_[j] = hi;
  }

  void fix_variable(int j, double value) { set_bounds(j, value, value); }

  /// CPLEX-style LP text, for debugging.
  std::string to_lp_format() const {
    std::ostringstream os;
    os.precision(12);
    os << "\\ matching relaxation\nMaximize\n obj:";
    for (int j = 0; j < num_vars(); ++j) os << ' ' << (obj_[j] < 0 ? "- " : "+ ") << std::abs(obj_[j]) << " x" << j;
    os << "\nSubject To\n";
    for (int i = 0; i < num_rows(); ++i) {
      os << " r" << i << ':';
      for (auto [j, v] : rows_[i].coefs) os << ' ' << (v < 0 ? "- " : "+ ") << std::abs(v) << " x" << j;
      os << " <= " << rows_[i].rhs << '\n';
    }
    os << "Bounds\n";
    for (int j = 0; j < num_vars(); ++j) os << ' ' << lo_[j] << " <= x" << j << " <= " << hi_[j] << '\n';
    os << "End\n";
    return os.str();
  }

 private:
  static void check_bounds(int j, double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw LpError("bounds of x" + std::to_string(j) + " must be finite");
    if (lo > hi) throw LpError("contradictory bounds on x" + std::to_string(j));
  }

  std::vector<double> obj_;
  std::vector<double> lo_, hi_;
  std::vector<Row> rows_;
};

enum class LpStatus { Optimal, Infeasible, IterationLimit };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::IterationLimit: return "IterationLimit";
  }
  return "?";
}

enum class VarStatus : std::int8_t { Basic, AtLower, AtUpper };

/// Status of every structural variable followed by every slack. A basis with
/// fewer slacks than the LP has rows is extended with basic slacks.
struct Basis {
  std::vector<VarStatus> status;
  bool empty() const { return status.empty(); }
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> values;
  double objective = 0.0;
  Basis basis;
  long iterations = 0;
};

struct SimplexOptions {
  long max_iterations = 200000;
  int refactor_interval = 50;
  /// Consecutive degenerate pivots before switching to Bland's rule for the
  /// remainder of a solve.
  int degenerate_threshold = 50;
};

/// Stateful simplex engine. Keeps its factorization across `solve` calls so
/// that row additions and bound changes can be re-optimized cheaply.
class SimplexSolver {
 public:
  explicit SimplexSolver(LinearProgram lp, SimplexOptions opts = {})
      : lp_(std::move(lp)), opts_(opts) {
    n_ = lp_.num_vars();
    m_ = 0;
    cols_.resize(n_);
    cost_.assign(lp_.objective().begin(), lp_.objective().end());
    lo_.assign(n_, 0.0);
    hi_.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = lp_.lower(j);
      hi_[j] = lp_.upper(j);
    }
    status_.assign(n_, VarStatus::AtLower);
    for (int i = 0; i < lp_.num_rows(); ++i) append_row_internal(lp_.row(i));
    refresh_slack_bounds();
    stale_ = true;
  }

  const LinearProgram& lp() const { return lp_; }
  int num_vars() const { return n_; }
  int num_rows() const { return m_; }

  /// Appends rows; their slacks enter the basis so the factorization extends
  /// without a rebuild.
  void add_rows(std::span<const Row> rows) {
    for (const auto& r : rows) {
      lp_.add_row(r);
      const int old_m = m_;
      append_row_internal(lp_.row(lp_.num_rows() - 1));
      if (!stale_) extend_inverse(old_m);
    }
    refresh_slack_bounds();
  }
  void add_row(const Row& r) { add_rows(std::span<const Row>(&r, 1)); }

  void set_bounds(int j, double lo, double hi) {
    if (lo_[j] == lo && hi_[j] == hi) return;
    lp_.set_bounds(j, lo, hi);
    for (auto [i, v] : cols_[j]) minact_[i] -= std::min(v * lo_[j], v * hi_[j]);
    lo_[j] = lo;
    hi_[j] = hi;
    for (auto [i, v] : cols_[j]) {
      minact_[i] += std::min(v * lo, v * hi);
      update_slack_bound(i);
    }
  }
  void fix_variable(int j, double v) { set_bounds(j, v, v); }

  Basis basis() const { return Basis{status_}; }

  /// Installs a basis (possibly from an LP with fewer rows). Invalid bases
  /// fall back to the slack basis.
  void set_basis(const Basis& b) {
    if (!stale_ && b.status == status_) return;
    std::vector<VarStatus> st = b.status;
    if (static_cast<int>(st.size()) > n_ + m_ || static_cast<int>(st.size()) < n_) st.clear();
    while (!st.empty() && static_cast<int>(st.size()) < n_ + m_) st.push_back(VarStatus::Basic);
    if (!st.empty()) {
      long basic = std::count(st.begin(), st.end(), VarStatus::Basic);
      if (basic != m_) st.clear();
    }
    if (st.empty()) {
      st.assign(n_ + m_, VarStatus::AtLower);
      for (int i = 0; i < m_; ++i) st[n_ + i] = VarStatus::Basic;
    }
    status_ = std::move(st);
    stale_ = true;
  }

  LpSolution solve() {
    LpSolution sol;
    iterations_ = 0;
    for (int i = 0; i < m_; ++i)
      if (slack_hi_infeasible_[i]) {
        sol.status = LpStatus::Infeasible;
        sol.basis = basis();
        return sol;
      }
    if (stale_)
      refactor();
    else
      compute_xb();
    LpStatus st;
    if (primal_feasible()) {
      st = primal();
    } else {
      st = dual();
      if (st == LpStatus::Optimal && !dual_feasible()) st = primal();
    }
    sol.status = st;
    sol.iterations = iterations_;
    sol.basis = basis();
    if (st == LpStatus::Optimal || st == LpStatus::IterationLimit) {
      compute_xb();
      sol.values.assign(n_, 0.0);
      for (int j = 0; j < n_; ++j) sol.values[j] = value(j);
      for (int j = 0; j < n_; ++j) sol.values[j] = std::clamp(sol.values[j], lo_[j], hi_[j]);
      sol.objective = 0.0;
      for (int j = 0; j < n_; ++j) sol.objective += cost_[j] * sol.values[j];
    }
    return sol;
  }

  /// Row r of B^{-1} A over all n+m columns, plus the basic variable of r and
  /// its value. Requires a current factorization (call after `solve`).
  struct TableauRow {
    int basic_var;
    double value;
    std::vector<double> alpha;  // size n + m, zero on basic columns except basic_var
  };
  TableauRow tableau_row(int r) {
    if (stale_) refactor();
    compute_xb();
    TableauRow t{head_[r], xb_[r], std::vector<double>(n_ + m_, 0.0)};
    const double* rho = &binv_[static_cast<std::size_t>(r) * m_];
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::Basic) continue;
      t.alpha[j] = dot_column(rho, j);
    }
    t.alpha[head_[r]] = 1.0;
    return t;
  }
  /// Factorized state, for probing bound changes and rolling them back.
  /// A snapshot is only valid while no rows have been added.
  struct Snapshot {
    std::vector<VarStatus> status;
    std::vector<int> head;
    std::vector<double> binv;
    bool stale;
    int pivots;
  };
  Snapshot snapshot() const { return {status_, head_, binv_, stale_, pivots_since_refactor_}; }
  void restore(const Snapshot& s) {
    if (s.status.size() != status_.size()) throw LpError("snapshot predates added rows");
    status_ = s.status;
    head_ = s.head;
    binv_ = s.binv;
    stale_ = s.stale;
    pivots_since_refactor_ = s.pivots;
  }

  /// Basic variable per row position.
  const std::vector<int>& basic_head() const { return head_; }
  double slack_upper(int i) const { return hi_[n_ + i]; }
  VarStatus status(int var) const { return status_[var]; }

 private:
  // --- storage ---------------------------------------------------------
  void append_row_internal(const Row& r) {
    const int i = m_++;
    for (auto [j, v] : r.coefs) cols_[j].emplace_back(i, v);
    rhs_.push_back(r.rhs);
    cost_.push_back(0.0);
    lo_.push_back(0.0);
    hi_.push_back(0.0);
    status_.push_back(VarStatus::Basic);
    slack_hi_infeasible_.push_back(0);
    head_.push_back(n_ + i);
  }

  /// Slack upper bound b - min a^T x over the box (never binding).
  void refresh_slack_bounds() {
    minact_.assign(m_, 0.0);
    for (int j = 0; j < n_; ++j)
      for (auto [i, v] : cols_[j]) minact_[i] += std::min(v * lo_[j], v * hi_[j]);
    for (int i = 0; i < m_; ++i) update_slack_bound(i);
  }
  void update_slack_bound(int i) {
    double u = rhs_[i] - minact_[i];
    slack_hi_infeasible_[i] = u < -kFeasTol;
    hi_[n_ + i] = std::max(0.0, u);
  }

  double value(int j) const {
    if (status_[j] == VarStatus::Basic) return xb_[pos_of(j)];
    return status_[j] == VarStatus::AtUpper ? hi_[j] : lo_[j];
  }
  double nonbasic_value(int j) const { return status_[j] == VarStatus::AtUpper ? hi_[j] : lo_[j]; }
  int pos_of(int j) const {
    for (int k = 0; k < m_; ++k)
      if (head_[k] == j) return k;
    return -1;
  }

  double dot_column(const double* vec, int j) const {
    if (j >= n_) return vec[j - n_];
    double s = 0.0;
    for (auto [i, v] : cols_[j]) s += vec[i] * v;
    return s;
  }

  /// alpha = B^{-1} a_j
  void ftran(int j, std::vector<double>& alpha) const {
    alpha.assign(m_, 0.0);
    if (j >= n_) {
      const int c = j - n_;
      for (int k = 0; k < m_; ++k) alpha[k] = binv_[static_cast<std::size_t>(k) * m_ + c];
      return;
    }
    for (auto [i, v] : cols_[j])
      for (int k = 0; k < m_; ++k) alpha[k] += binv_[static_cast<std::size_t>(k) * m_ + i] * v;
  }

  // --- factorization ---------------------------------------------------
  void refactor() {
    // Rebuild head_ from status_.
    head_.clear();
    for (int j = 0; j < n_ + m_; ++j)
      if (status_[j] == VarStatus::Basic) head_.push_back(j);
    if (static_cast<int>(head_.size()) != m_) {
      set_basis(Basis{});
      head_.clear();
      for (int j = 0; j < n_ + m_; ++j)
        if (status_[j] == VarStatus::Basic) head_.push_back(j);
    }
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<int> deficient = invert();
      if (deficient.empty()) break;
      // Replace dependent columns by slacks of uncovered rows.
      std::vector<char> covered(m_, 0);
      for (int k = 0; k < m_; ++k)
        if (std::find(deficient.begin(), deficient.end(), k) == deficient.end() && head_[k] >= n_)
          covered[head_[k] - n_] = 1;
      std::vector<char> in_basis(n_ + m_, 0);
      for (int j : head_) in_basis[j] = 1;
      int next_row = 0;
      for (int k : deficient) {
        while (next_row < m_ && (covered[next_row] || in_basis[n_ + next_row])) ++next_row;
        if (next_row >= m_) break;
        status_[head_[k]] = VarStatus::AtLower;
        head_[k] = n_ + next_row;
        status_[n_ + next_row] = VarStatus::Basic;
        covered[next_row] = 1;
        in_basis[n_ + next_row] = 1;
      }
    }
    pivots_since_refactor_ = 0;
    stale_ = false;
    compute_xb();
  }

  /// Inverse of B via its slack structure. Rows covered by basic slacks are
  /// eliminated, leaving a k x k block A11 (basic structurals on uncovered
  /// rows) that is inverted densely with partial pivoting:
  ///   B^{-1} = [[A11^{-1}, 0], [-A21 A11^{-1}, I]].
  /// Returns positions of structural columns that turned out dependent.
  std::vector<int> invert() {
    const std::size_t M = static_cast<std::size_t>(m_);
    std::vector<int> slack_pos(m_, -1), struct_pos;
    for (int k = 0; k < m_; ++k) {
      if (head_[k] >= n_)
        slack_pos[head_[k] - n_] = k;
      else
        struct_pos.push_back(k);
    }
    std::vector<int> r1;  // uncovered rows
    std::vector<int> r1_index(m_, -1);
    for (int i = 0; i < m_; ++i)
      if (slack_pos[i] < 0) {
        r1_index[i] = static_cast<int>(r1.size());
        r1.push_back(i);
      }
    const std::size_t K = struct_pos.size();
    if (r1.size() != K) {
      // Some slack appears twice in head_; treat every structural as dependent.
      return struct_pos.empty() ? std::vector<int>{0} : struct_pos;
    }
    // a: K x K block, inv: its inverse (rows = structural order, cols = r1 order).
    std::vector<double> a(K * K, 0.0), inv(K * K, 0.0);
    for (std::size_t p = 0; p < K; ++p)
      for (auto [i, v] : cols_[head_[struct_pos[p]]])
        if (r1_index[i] >= 0) a[static_cast<std::size_t>(r1_index[i]) * K + p] = v;
    for (std::size_t i = 0; i < K; ++i) inv[i * K + i] = 1.0;
    std::vector<int> row_of_col(K, -1);
    std::vector<char> row_used(K, 0);
    std::vector<int> deficient;
    for (std::size_t p = 0; p < K; ++p) {
      int best = -1;
      double best_abs = 1e-11;
      for (std::size_t i = 0; i < K; ++i) {
        if (row_used[i]) continue;
        double v = std::abs(a[i * K + p]);
        if (v > best_abs) {
          best_abs = v;
          best = static_cast<int>(i);
        }
      }
      if (best < 0) {
        deficient.push_back(struct_pos[p]);
        continue;
      }
      row_used[best] = 1;
      row_of_col[p] = best;
      const double piv = a[static_cast<std::size_t>(best) * K + p];
      double* arow = &a[static_cast<std::size_t>(best) * K];
      double* brow = &inv[static_cast<std::size_t>(best) * K];
      for (std::size_t c = 0; c < K; ++c) {
        arow[c] /= piv;
        brow[c] /= piv;
      }
      for (std::size_t i = 0; i < K; ++i) {
        if (static_cast<int>(i) == best) continue;
        double f = a[i * K + p];
        if (f == 0.0) continue;
        double* ai = &a[i * K];
        double* bi = &inv[i * K];
        for (std::size_t c = 0; c < K; ++c) {
          ai[c] -= f * arow[c];
          bi[c] -= f * brow[c];
        }
      }
    }
    if (!deficient.empty()) return deficient;
    binv_.assign(M * M, 0.0);
    for (std::size_t p = 0; p < K; ++p) {
      const double* src = &inv[static_cast<std::size_t>(row_of_col[p]) * K];
      double* dst = &binv_[static_cast<std::size_t>(struct_pos[p]) * M];
      for (std::size_t c = 0; c < K; ++c) dst[r1[c]] = src[c];
    }
    for (int i = 0; i < m_; ++i)
      if (slack_pos[i] >= 0) binv_[static_cast<std::size_t>(slack_pos[i]) * M + i] = 1.0;
    for (std::size_t p = 0; p < K; ++p) {
      const double* src = &inv[static_cast<std::size_t>(row_of_col[p]) * K];
      for (auto [i, v] : cols_[head_[struct_pos[p]]]) {
        if (slack_pos[i] < 0) continue;
        double* dst = &binv_[static_cast<std::size_t>(slack_pos[i]) * M];
        for (std::size_t c = 0; c < K; ++c) dst[r1[c]] -= v * src[c];
      }
    }
    return {};
  }

  /// New rows [old_m, m_) with basic slacks: B' = [[B, 0], [R, I]] so
  /// B'^{-1} = [[B^{-1}, 0], [-R B^{-1}, I]].
  void extend_inverse(int old_m) {
    const std::size_t M0 = static_cast<std::size_t>(old_m), M = static_cast<std::size_t>(m_);
    std::vector<double> out(M * M, 0.0);
    for (std::size_t k = 0; k < M0; ++k) std::copy_n(&binv_[k * M0], M0, &out[k * M]);
    for (int i = old_m; i < m_; ++i) {
      double* orow = &out[static_cast<std::size_t>(i) * M];
      // R row i: coefficients of basic structural columns in new row i.
      for (int k = 0; k < old_m; ++k) {
        int j = head_[k];
        if (j >= n_) continue;
        double coef = 0.0;
        for (auto [r, v] : cols_[j])
          if (r == i) coef = v;
        if (coef == 0.0) continue;
        const double* brow = &binv_[static_cast<std::size_t>(k) * M0];
        for (std::size_t c = 0; c < M0; ++c) orow[c] -= coef * brow[c];
      }
      orow[i] = 1.0;
    }
    binv_ = std::move(out);
  }

  void pivot(int r, int q, const std::vector<double>& alpha) {
    const std::size_t M = static_cast<std::size_t>(m_);
    const double piv = alpha[r];
    double* rrow = &binv_[static_cast<std::size_t>(r) * M];
    nz_.clear();
    for (std::size_t c = 0; c < M; ++c)
      if (rrow[c] != 0.0) {
        rrow[c] /= piv;
        nz_.push_back(static_cast<int>(c));
      }
    for (int i = 0; i < m_; ++i) {
      if (i == r || alpha[i] == 0.0) continue;
      double f = alpha[i];
      double* irow = &binv_[static_cast<std::size_t>(i) * M];
      for (int c : nz_) irow[c] -= f * rrow[c];
    }
    head_[r] = q;
    status_[q] = VarStatus::Basic;
    if (++pivots_since_refactor_ >= opts_.refactor_interval) refactor();
  }

  // --- primal / dual quantities -----------------------------------------
  void compute_xb() {
    std::vector<double> rhs(rhs_);
    for (int j = 0; j < n_; ++j) {
      if (status_[j] == VarStatus::Basic) continue;
      double x = nonbasic_value(j);
      if (x != 0.0)
        for (auto [i, v] : cols_[j]) rhs[i] -= v * x;
    }
    for (int i = 0; i < m_; ++i) {
      int j = n_ + i;
      if (status_[j] != VarStatus::Basic) rhs[i] -= nonbasic_value(j);
    }
    xb_.assign(m_, 0.0);
    const std::size_t M = static_cast<std::size_t>(m_);
    for (int k = 0; k < m_; ++k) {
      const double* row = &binv_[static_cast<std::size_t>(k) * M];
      double s = 0.0;
      for (std::size_t c = 0; c < M; ++c) s += row[c] * rhs[c];
      xb_[k] = s;
    }
  }

  void compute_reduced_costs() {
    const std::size_t M = static_cast<std::size_t>(m_);
    std::vector<double> y(M, 0.0);
    for (int k = 0; k < m_; ++k) {
      double cb = cost_[head_[k]];
      if (cb == 0.0) continue;
      const double* row = &binv_[static_cast<std::size_t>(k) * M];
      for (std::size_t c = 0; c < M; ++c) y[c] += cb * row[c];
    }
    d_.assign(n_ + m_, 0.0);
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::Basic) continue;
      d_[j] = cost_[j] - dot_column(y.data(), j);
    }
  }

  bool primal_feasible() const {
    for (int k = 0; k < m_; ++k) {
      int j = head_[k];
      if (xb_[k] < lo_[j] - kFeasTol || xb_[k] > hi_[j] + kFeasTol) return false;
    }
    return true;
  }

  bool dual_feasible() {
    compute_reduced_costs();
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::Basic || lo_[j] == hi_[j]) continue;
      if (status_[j] == VarStatus::AtLower && d_[j] > kDualTol) return false;
      if (status_[j] == VarStatus::AtUpper && d_[j] < -kDualTol) return false;
    }
    return true;
  }

  static constexpr double kDualTol = 1e-9;
  static constexpr double kPivotTol = 1e-9;

  LpStatus primal() {
    std::vector<double> alpha;
    int degenerate = 0;
    while (true) {
      if (iterations_ >= opts_.max_iterations) return LpStatus::IterationLimit;
      compute_reduced_costs();
      const bool bland = degenerate > opts_.degenerate_threshold;
      int q = -1;
      double best = 0.0;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::Basic || lo_[j] == hi_[j]) continue;
        double gain = status_[j] == VarStatus::AtLower ? d_[j] : -d_[j];
        if (gain <= kDualTol) continue;
        if (bland) {
          q = j;
          break;
        }
        if (gain > best) {
          best = gain;
          q = j;
        }
      }
      if (q < 0) return LpStatus::Optimal;
      const double dir = status_[q] == VarStatus::AtLower ? 1.0 : -1.0;
      ftran(q, alpha);
      double tmax = hi_[q] - lo_[q];
      int r = -1;
      double r_abs = 0.0;
      for (int k = 0; k < m_; ++k) {
        double delta = -dir * alpha[k];  // change of xb_k per unit step
        int j = head_[k];
        double t;
        if (delta < -kPivotTol)
          t = (xb_[k] - lo_[j]) / -delta;
        else if (delta > kPivotTol)
          t = (hi_[j] - xb_[k]) / delta;
        else
          continue;
        t = std::max(t, 0.0);
        bool better = t < tmax - 1e-12 ||
                      (r >= 0 && t <= tmax + 1e-12 &&
                       (bland ? head_[k] < head_[r] : std::abs(delta) > r_abs));
        if (better) {
          tmax = std::min(t, tmax);
          r = k;
          r_abs = std::abs(delta);
        }
      }
      ++iterations_;
      // Once Bland's rule is engaged it stays on for the rest of this solve.
      if (!bland) degenerate = tmax < 1e-9 ? degenerate + 1 : 0;
      const double entering_value = nonbasic_value(q) + dir * tmax;
      for (int k = 0; k < m_; ++k) xb_[k] -= dir * tmax * alpha[k];
      if (r < 0) {
        status_[q] = status_[q] == VarStatus::AtLower ? VarStatus::AtUpper : VarStatus::AtLower;
        continue;
      }
      const int leaving = head_[r];
      const double delta_r = -dir * alpha[r];
      status_[leaving] = delta_r < 0 ? VarStatus::AtLower : VarStatus::AtUpper;
      xb_[r] = entering_value;
      pivot(r, q, alpha);
    }
  }

  LpStatus dual() {
    // Dual feasibility by bound choice (all variables are boxed).
    compute_reduced_costs();
    bool flipped = false;
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::Basic || lo_[j] == hi_[j]) continue;
      VarStatus want = d_[j] > kDualTol    ? VarStatus::AtUpper
                       : d_[j] < -kDualTol ? VarStatus::AtLower
                                           : status_[j];
      if (want != status_[j]) {
        status_[j] = want;
        flipped = true;
      }
    }
    if (flipped) compute_xb();
    std::vector<double> alpha, rho_alpha(n_ + m_);
    int degenerate = 0;
    long since_full_pricing = 0;
    const std::size_t M = static_cast<std::size_t>(m_);
    while (true) {
      if (iterations_ >= opts_.max_iterations) return LpStatus::IterationLimit;
      const bool bland = degenerate > opts_.degenerate_threshold;
      int r = -1;
      double worst = kFeasTol;
      for (int k = 0; k < m_; ++k) {
        int j = head_[k];
        double infeas = std::max(lo_[j] - xb_[k], xb_[k] - hi_[j]);
        if (infeas <= kFeasTol) continue;
        // Bland: smallest infeasible variable index; otherwise largest infeasibility.
        if (bland ? (r < 0 || j < head_[r]) : infeas > worst) {
          worst = infeas;
          r = k;
        }
      }
      if (r < 0) return LpStatus::Optimal;
      if (since_full_pricing++ % 50 == 0) compute_reduced_costs();
      const int leaving = head_[r];
      const bool below = xb_[r] < lo_[leaving];
      const double* rho = &binv_[static_cast<std::size_t>(r) * M];
      int q = -1;
      double best_ratio = std::numeric_limits<double>::infinity(), best_abs = 0.0;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::Basic || lo_[j] == hi_[j]) continue;
        double a = dot_column(rho, j);
        rho_alpha[j] = a;
        bool eligible;
        if (below)
          eligible = (status_[j] == VarStatus::AtLower && a < -kPivotTol) ||
                     (status_[j] == VarStatus::AtUpper && a > kPivotTol);
        else
          eligible = (status_[j] == VarStatus::AtLower && a > kPivotTol) ||
                     (status_[j] == VarStatus::AtUpper && a < -kPivotTol);
        if (!eligible) continue;
        double ratio = std::abs(d_[j]) / std::abs(a);
        bool better = ratio < best_ratio - 1e-12 ||
                      (ratio <= best_ratio + 1e-12 && (bland ? false : std::abs(a) > best_abs));
        if (better) {
          best_ratio = ratio;
          best_abs = std::abs(a);
          q = j;
        }
      }
      if (q < 0) return LpStatus::Infeasible;
      ++iterations_;
      if (!bland) degenerate = best_ratio < 1e-9 ? degenerate + 1 : 0;
      // Reduced costs along the pivot row; basic columns have rho_alpha = 0
      // except the leaving one, whose entry is 1.
      const double theta = d_[q] / rho_alpha[q];
      for (int j = 0; j < n_ + m_; ++j)
        if (status_[j] != VarStatus::Basic && lo_[j] != hi_[j]) d_[j] -= theta * rho_alpha[j];
      d_[q] = 0.0;
      d_[leaving] = -theta;
      ftran(q, alpha);
      const double target = below ? lo_[leaving] : hi_[leaving];
      const double step = (xb_[r] - target) / alpha[r];
      const double entering_value = nonbasic_value(q) + step;
      for (int k = 0; k < m_; ++k) xb_[k] -= step * alpha[k];
      status_[leaving] = below ? VarStatus::AtLower : VarStatus::AtUpper;
      xb_[r] = entering_value;
      pivot(r, q, alpha);
    }
  }

  LinearProgram lp_;
  SimplexOptions opts_;
  int n_ = 0, m_ = 0;
  std::vector<std::vector<std::pair<int, double>>> cols_;
  std::vector<double> rhs_, cost_, lo_, hi_;
  std::vector<char> slack_hi_infeasible_;
  std::vector<VarStatus> status_;
  std::vector<int> head_;
  std::vector<double> binv_, xb_, d_, minact_;
  std::vector<int> nz_;
  bool stale_ = true;
  int pivots_since_refactor_ = 0;
  long iterations_ = 0;
};

/// One-shot solve, optionally warm-started from a basis.
inline LpSolution solve(const LinearProgram& lp, const Basis* warm_start = nullptr,
                        SimplexOptions opts = {}) {
  SimplexSolver s(lp, opts);
  if (warm_start && !warm_start->empty()) s.set_basis(*warm_start);
  return s.solve();
}

/**
 * Gomory mixed-integer cuts from the rows of an optimal basis whose basic
 * structural variable is fractional. Structural variables are integer; a
 * slack is integer when its row has integral coefficients and rhs. Returned
 * rows are in <= form and cut off the current vertex.
 */
inline std::vector<Row> gomory_cuts(const LinearProgram& lp, const LpSolution& sol,
                                    int max_cuts = 10) {
  std::vector<Row> cuts;
  if (sol.status != LpStatus::Optimal || sol.basis.empty()) return cuts;
  const int n = lp.num_vars(), m = lp.num_rows();
  auto integral = [](double v) { return std::abs(v - std::round(v)) < 1e-9; };
  std::vector<char> int_slack(m, 1);
  for (int i = 0; i < m; ++i) {
    if (!integral(lp.row(i).rhs)) int_slack[i] = 0;
    for (auto [j, v] : lp.row(i).coefs)
      if (!integral(v)) int_slack[i] = 0;
  }
  for (int j = 0; j < n; ++j)
    if (!integral(lp.lower(j)) || !integral(lp.upper(j))) return cuts;

  SimplexSolver s(lp);
  s.set_basis(sol.basis);
  // Re-derive the vertex from the basis so tableau and point agree.
  std::vector<double> x(sol.values);

  for (int r = 0; r < m && static_cast<int>(cuts.size()) < max_cuts; ++r) {
    auto t = s.tableau_row(r);
    if (t.basic_var >= n) continue;
    const double f0 = t.value - std::floor(t.value);
    if (f0 < 0.01 || f0 > 0.99) continue;
    // sum_k g_k xt_k >= 1 in shifted nonbasic variables xt_k >= 0.
    std::vector<double> coef(n, 0.0);
    double rhs = 1.0;
    bool ok = true;
    for (int k = 0; k < n + m; ++k) {
      VarStatus st = s.status(k);
      if (st == VarStatus::Basic) continue;
      double a = t.alpha[k];
      if (std::abs(a) < 1e-12) continue;
      double lo = k < n ? lp.lower(k) : 0.0;
      double hi = k < n ? lp.upper(k) : s.slack_upper(k - n);
      if (lo == hi) continue;  // fixed: xt_k == 0
      double abar = st == VarStatus::AtLower ? a : -a;
      bool is_int = k < n || int_slack[k - n];
      double g;
      if (is_int) {
        double fk = abar - std::floor(abar);
        g = fk <= f0 ? fk / f0 : (1.0 - fk) / (1.0 - f0);
      } else {
        g = abar >= 0 ? abar / f0 : -abar / (1.0 - f0);
      }
      if (g == 0.0) continue;
      // xt_k = x_k - lo (at lower) or hi - x_k (at upper); slacks are b - a^T x.
      double sign = st == VarStatus::AtLower ? 1.0 : -1.0;
      double shift = st == VarStatus::AtLower ? -lo : hi;
      // g * xt_k = g*sign*var_k + g*shift
      rhs -= g * shift;
      if (k < n) {
        coef[k] += g * sign;
      } else {
        const Row& row = lp.row(k - n);
        rhs -= g * sign * row.rhs;
        for (auto [j, v] : row.coefs) coef[j] -= g * sign * v;
      }
      if (!std::isfinite(g)) ok = false;
    }
    if (!ok) continue;
    // coef^T x >= rhs  ->  -coef^T x <= -rhs; drop tiny terms safely (x in [0,1]).
    Row cut;
    double lhs_at_x = 0.0, max_abs = 0.0, min_abs = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double c = coef[j];
      if (std::abs(c) < 1e-9) {
        rhs -= std::max(c * lp.lower(j), c * lp.upper(j));
        continue;
      }
      cut.coefs.emplace_back(j, -c);
      lhs_at_x += c * x[j];
      max_abs = std::max(max_abs, std::abs(c));
      min_abs = std::min(min_abs, std::abs(c));
    }
    if (cut.coefs.empty() || max_abs / min_abs > 1e6) continue;
    cut.rhs = -rhs;
    if (rhs - lhs_at_x <= 1e-6) continue;  // not violated at the current point
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

}  // namespace morse::lp

#endif  // MORSE_LP_HPP

/**
 * Simplicial homology over Q and prime fields: boundary matrices, ranks,
 * Betti numbers and the Euler characteristic.
 *
 * Ranks are exact. Over Q entries are arbitrary-precision rationals; over
 * GF(p) they are residues in machine words.
 */
#ifndef MORSE_HOMOLOGY_HPP
#define MORSE_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"

namespace morse {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: Q (prime == 0) or GF(p).
struct FieldSpec {
  int prime = 0;

  static FieldSpec rationals() { return {0}; }
  static FieldSpec gf(int p) {
    if (p < 2 || p > (1 << 15)) throw std::invalid_argument("prime out of range");
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) throw std::invalid_argument("GF(p) needs a prime, got " + std::to_string(p));
    return {p};
  }
  bool is_rational() const { return prime == 0; }
  std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(prime) + ")"; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Parses "q", "Q", "gf2", "GF(3)", "7".
inline FieldSpec parse_field(std::string s) {
  std::string t;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != ' ') t.push_back(static_cast<char>(std::tolower(ch)));
  if (t == "q" || t == "rationals" || t == "rational") return FieldSpec::rationals();
  if (t.rfind("gf", 0) == 0) t = t.substr(2);
  if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit))
    throw std::invalid_argument("unknown field '" + s + "'");
  return FieldSpec::gf(std::stoi(t));
}

// Field policies used by the templated elimination.

struct RationalField {
  using value_type = Rational;
  value_type from_int(long v) const { return value_type(v); }
  bool is_zero(const value_type& v) const { return v == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return value_type(1) / a; }
};

struct PrimeField {
  using value_type = std::int64_t;
  std::int64_t p;
  value_type from_int(long v) const { return ((v % p) + p) % p; }
  bool is_zero(value_type v) const { return v == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    // Fermat: a^(p-2)
    value_type r = 1, base = a % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
    }
    return r;
  }
};

/// Sparse boundary matrix d_i: rows are (i-1)-faces, columns i-faces. Entries
/// are stored as signed integers; reduction happens in the chosen field.
struct BoundaryMatrix {
  int dimension = 0;
  int rows = 0;
  int cols = 0;
  FieldSpec field;
  /// Per column: (row index, coefficient) with rows ascending.
  std::vector<std::vector<std::pair<int, int>>> columns;

  /// Entry as an integer; over GF(p) reduced to 0..p-1.
  int at(int r, int c) const {
    for (const auto& [row, v] : columns.at(c))
      if (row == r) return v;
    return 0;
  }
};

/// Standard simplicial boundary with orientation from sorted vertex order:
/// omitting the k-th vertex contributes (-1)^k.
inline BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int i, FieldSpec field) {
  if (i < 1 || i > c.dim()) throw ComplexError("boundary dimension out of range");
  BoundaryMatrix m;
  m.dimension = i;
  m.field = field;
  m.rows = c.f(i - 1);
  m.cols = c.f(i);
  const FaceId row0 = c.faces_of_dim(i - 1).front();
  for (FaceId g : c.faces_of_dim(i)) {
    const auto& vs = c.face(g).vertices;
    std::vector<std::pair<int, int>> col;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      std::vector<Vertex> sub;
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (j != k) sub.push_back(vs[j]);
      int sign = (k % 2 == 0) ? 1 : -1;
      if (!field.is_rational()) sign = ((sign % field.prime) + field.prime) % field.prime;
      col.emplace_back(c.find(sub) - row0, sign);
    }
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

namespace detail {

/// Rank by sparse column reduction: each column is reduced against stored
/// pivot columns keyed by their lowest (largest-index) nonzero row.
template <class Field>
int sparse_rank(const Field& field, const std::vector<std::vector<std::pair<int, int>>>& cols) {
  using T = typename Field::value_type;
  using Column = std::map<int, T>;
  std::map<int, Column> pivots;
  int rank = 0;
  for (const auto& raw : cols) {
    Column col;
    for (const auto& [r, v] : raw) {
      T x = field.from_int(v);
      if (!field.is_zero(x)) col.emplace(r, x);
    }
    while (!col.empty()) {
      auto low = std::prev(col.end());
      auto pit = pivots.find(low->first);
      if (pit == pivots.end()) {
        // Normalise so the pivot entry is 1.
        T inv = field.inv(low->second);
        for (auto& [r, v] : col) v = field.mul(v, inv);
        pivots.emplace(low->first, std::move(col));
        ++rank;
        break;
      }
      T factor = field.neg(low->second);
      for (const auto& [r, v] : pit->second) {
        auto [it, inserted] = col.try_emplace(r, T{});
        it->second = field.add(it->second, field.mul(factor, v));
        if (field.is_zero(it->second)) col.erase(it);
      }
    }
  }
  return rank;
}

}  // namespace detail

inline int rank(const BoundaryMatrix& m) {
  if (m.field.is_rational()) return detail::sparse_rank(RationalField{}, m.columns);
  return detail::sparse_rank(PrimeField{m.field.prime}, m.columns);
}

struct BettiVector {
  std::vector<int> beta;
  FieldSpec field;

  int total() const {
    int s = 0;
    for (int b : beta) s += b;
    return s;
  }
};

inline BettiVector betti_numbers(const SimplicialComplex& c, FieldSpec field) {
  const int d = c.dim();
  std::vector<int> ranks(d + 2, 0);  // ranks[i] = rank d_i, with d_0 = d_{d+1} = 0
  for (int i = 1; i <= d; ++i) ranks[i] = rank(boundary_matrix(c, i, field));
  BettiVector out{{}, field};
  for (int i = 0; i <= d; ++i) out.beta.push_back(c.f(i) - ranks[i] - ranks[i + 1]);
  return out;
}

inline long euler_characteristic(const SimplicialComplex& c) {
  long chi = 0;
  for (int i = 0; i <= c.dim(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(c.f(i));
  return chi;
}

/// Dimension-wise maximum of Betti numbers over the given fields. Each entry
/// is a valid lower bound on the critical faces of that dimension.
inline std::vector<int> best_betti_bounds(const SimplicialComplex& c,
                                          const std::vector<FieldSpec>& fields) {
  if (fields.empty()) throw std::invalid_argument("at least one field is required");
  std::vector<int> best(c.dim() + 1, 0);
  for (const auto& field : fields) {
    auto b = betti_numbers(c, field);
    for (int i = 0; i <= c.dim(); ++i) best[i] = std::max(best[i], b.beta[i]);
  }
  return best;
}

inline std::vector<FieldSpec> default_fields() {
  return {FieldSpec::rationals(), FieldSpec::gf(2)};
}

}  // namespace morse

#endif  // MORSE_HOMOLOGY_HPP

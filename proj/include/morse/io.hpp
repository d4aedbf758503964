/**
 * Facet-list parsing and JSON encoding of matchings, critical-face reports and
 * solver results.
 *
 * Facet lists hold one facet per line as whitespace-separated vertex tokens;
 * lines starting with '#' and blank lines are skipped. Tokens are renumbered
 * densely: numerically when every token is an integer, lexicographically
 * otherwise. The original tokens are kept as vertex labels.
 */
#ifndef MORSE_IO_HPP
#define MORSE_IO_HPP

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"
#include "homology.hpp"
#include "matching.hpp"
#include "solver.hpp"

namespace morse {

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline bool is_integer_token(const std::string& t) {
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  return i < t.size() && t.size() - i <= 18 &&
         std::all_of(t.begin() + i, t.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

inline bool valid_token(const std::string& t) {
  return std::all_of(t.begin(), t.end(), [](unsigned char ch) {
    return std::isalnum(ch) || ch == '_' || ch == '-' || ch == '+' || ch == '.' || ch == ':';
  });
}

}  // namespace detail

/// Parses a facet list. Throws ParseError (with line number) or ComplexError.
inline SimplicialComplex parse_facet_list(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    for (const auto& tok : toks)
      if (!detail::valid_token(tok)) throw ParseError(lineno, "invalid vertex token '" + tok + "'");
    rows.push_back(std::move(toks));
  }
  if (rows.empty()) throw ComplexError("facet list is empty");

  std::vector<std::string> labels;
  for (const auto& r : rows) labels.insert(labels.end(), r.begin(), r.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (std::all_of(labels.begin(), labels.end(), detail::is_integer_token))
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      return std::stoll(a) < std::stoll(b);
    });
  std::map<std::string, Vertex> id;
  for (std::size_t k = 0; k < labels.size(); ++k) id[labels[k]] = static_cast<Vertex>(k);

  std::vector<std::vector<Vertex>> sets;
  for (const auto& r : rows) {
    std::vector<Vertex> s;
    for (const auto& tok : r) s.push_back(id.at(tok));
    sets.push_back(std::move(s));
  }
  auto c = SimplicialComplex::from_closed_sets(std::move(sets));
  c.set_vertex_labels(std::move(labels));
  return c;
}

inline SimplicialComplex parse_facet_list(const std::string& text) {
  std::istringstream in(text);
  return parse_facet_list(in);
}

inline SimplicialComplex read_facet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return parse_facet_list(in);
}

/// Facet list text of c, using its vertex labels.
inline std::string to_facet_list(const SimplicialComplex& c) {
  std::ostringstream os;
  for (FaceId f : c.facets()) {
    const auto& vs = c.face(f).vertices;
    for (std::size_t k = 0; k < vs.size(); ++k)
      os << (k ? " " : "") << c.vertex_labels()[vs[k]];
    os << "\n";
  }
  return os.str();
}

// --- JSON -------------------------------------------------------------------

using Json = nlohmann::ordered_json;

/// Face as a list of labels; integer labels are emitted as numbers.
inline Json face_json(const SimplicialComplex& c, FaceId f) {
  Json out = Json::array();
  for (Vertex v : c.face(f).vertices) {
    const auto& lab = c.vertex_labels()[v];
    if (detail::is_integer_token(lab))
      out.push_back(std::stoll(lab));
    else
      out.push_back(lab);
  }
  return out;
}

/// Face id for a JSON list of labels (numbers or strings).
inline FaceId face_from_json(const SimplicialComplex& c, const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError(0, "a face must be a non-empty array");
  std::map<std::string, Vertex> by_label;
  for (Vertex v = 0; v < c.num_vertices(); ++v) by_label[c.vertex_labels()[v]] = v;
  std::vector<Vertex> vs;
  for (const auto& x : j) {
    std::string lab;
    if (x.is_string())
      lab = x.get<std::string>();
    else if (x.is_number_integer())
      lab = std::to_string(x.get<long long>());
    else
      throw ParseError(0, "vertex labels must be strings or integers");
    auto it = by_label.find(lab);
    if (it == by_label.end()) throw ParseError(0, "unknown vertex '" + lab + "'");
    vs.push_back(it->second);
  }
  std::sort(vs.begin(), vs.end());
  FaceId f = c.find(vs);
  if (f < 0) throw ParseError(0, "face " + j.dump() + " is not in the complex");
  return f;
}

inline Json matching_json(const HasseDiagram& h, const MorseMatching& m) {
  Json out = Json::array();
  for (ArcId a : m.arcs)
    out.push_back({{"upper", face_json(h.complex(), h.arc(a).upper)},
                   {"lower", face_json(h.complex(), h.arc(a).lower)}});
  return out;
}

/// Accepts a pair list or an object with a "matching" member.
inline MorseMatching matching_from_json(const HasseDiagram& h, const Json& j) {
  const Json& list = j.is_object() && j.contains("matching") ? j.at("matching") : j;
  if (!list.is_array()) throw ParseError(0, "matching must be an array of {upper, lower} pairs");
  MorseMatching m;
  for (const auto& pair : list) {
    if (!pair.is_object() || !pair.contains("upper") || !pair.contains("lower"))
      throw ParseError(0, "matching entries need 'upper' and 'lower'");
    FaceId up = face_from_json(h.complex(), pair.at("upper"));
    FaceId lo = face_from_json(h.complex(), pair.at("lower"));
    ArcId a = h.find_arc(up, lo);
    if (a < 0) throw ParseError(0, "pair " + pair.dump() + " is not an arc of the Hasse diagram");
    m.arcs.push_back(a);
  }
  std::size_t before = m.arcs.size();
  m.normalize();
  if (m.arcs.size() != before) throw ParseError(0, "matching lists an arc twice");
  return m;
}

inline Json critical_report_json(const HasseDiagram& h, const CriticalReport& r) {
  Json crit = Json::array();
  for (const auto& faces : r.critical) {
    Json level = Json::array();
    for (FaceId f : faces) level.push_back(face_json(h.complex(), f));
    crit.push_back(std::move(level));
  }
  return {{"c", r.c}, {"total", r.total}, {"critical", std::move(crit)}};
}

inline Json betti_json(const BettiVector& b) {
  return {{"field", b.field.name()}, {"beta", b.beta}};
}

inline Json info_json(const SimplicialComplex& c) {
  HasseDiagram h(c);
  Json levels = Json::array();
  for (int i = 0; i < h.num_levels(); ++i) {
    auto [b, e] = h.level_range(i);
    levels.push_back({{"level", i}, {"lower", c.f(i)}, {"upper", c.f(i + 1)}, {"arcs", e - b}});
  }
  return {{"schema_version", kSchemaVersion},
          {"n", c.num_faces()},
          {"m", h.num_arcs()},
          {"d", c.dim()},
          {"f_vector", c.f_vector()},
          {"euler_characteristic", euler_characteristic(c)},
          {"connected", is_connected(c)},
          {"levels", std::move(levels)}};
}

inline Json solve_result_json(const SimplicialComplex& c, const SolveResult& r) {
  HasseDiagram h(c);
  const auto& s = r.stats;
  return {{"schema_version", kSchemaVersion},
          {"status", to_string(r.status)},
          {"c", r.report.total},
          {"matching_size", r.matching.size()},
          {"dual_bound", r.dual_bound},
          {"critical_lower_bound", r.critical_lower_bound},
          {"critical", critical_report_json(h, r.report)},
          {"matching", matching_json(h, r.matching)},
          {"statistics",
           {{"n", c.num_faces()},
            {"m", h.num_arcs()},
            {"d", c.dim()},
            {"nodes", s.nodes},
            {"depth", s.max_depth},
            {"time", s.seconds},
            {"beta", s.beta},
            {"betti_bound", s.betti},
            {"c", r.report.total},
            {"cycle_cuts", s.cycle_cuts},
            {"lazy_cuts", s.lazy_cuts},
            {"gomory_cuts", s.gomory_cuts},
            {"lp_iterations", s.lp_iterations},
            {"heuristic_calls", s.heuristic_calls}}}};
}

}  // namespace morse

#endif  // MORSE_IO_HPP

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arctube/notation.hpp"
#include "arctube/quiver.hpp"
#include "arctube/triangulation.hpp"
#include "arctube/tubes.hpp"

namespace arctube {

/// Translation quiver with display labels, plus the window metadata needed
/// for rendering.
struct StringWindow {
  TranslationQuiver<std::string> tq;
  std::map<std::string, int> level_of;
  int max_level = 0;
  std::string title;
};

template <typename V, typename F>
StringWindow string_window(const TubeWindow<V>& w, F&& label, std::string title) {
  StringWindow out;
  out.tq = relabel(w.tq, label);
  for (const auto& [v, lvl] : w.level_of) out.level_of[label(v)] = lvl;
  out.max_level = w.max_level;
  out.title = std::move(title);
  return out;
}

inline nlohmann::json quiver_json(const TranslationQuiver<std::string>& tq) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const std::string& v : tq.quiver.vertices()) j["vertices"].push_back(v);
  j["arrows"] = nlohmann::json::array();
  for (const auto& [from, to] : tq.quiver.arrows())
    j["arrows"].push_back(nlohmann::json::array({from, to}));
  j["tau"] = nlohmann::json::object();
  for (const auto& [v, w] : tq.tau) j["tau"][v] = w;
  return j;
}

inline nlohmann::json quiver_json(const Quiver<int>& q) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v : q.vertices()) j["vertices"].push_back(v);
  j["arrows"] = nlohmann::json::array();
  for (const auto& [from, to] : q.arrows())
    j["arrows"].push_back(nlohmann::json::array({from, to}));
  j["tau"] = nlohmann::json::object();
  return j;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string dot_body(const std::vector<std::string>& nodes,
                            const std::vector<std::pair<std::string, std::string>>& arrows,
                            const std::map<std::string, std::string>& tau) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  os << "  rankdir=BT;\n";
  for (const std::string& v : nodes) os << "  " << dot_quote(v) << ";\n";
  for (const auto& [from, to] : arrows)
    os << "  " << dot_quote(from) << " -> " << dot_quote(to) << ";\n";
  for (const auto& [v, w] : tau) {
    // translation pairs are undirected; draw each 2-orbit once
    auto back = tau.find(w);
    if (back != tau.end() && back->second == v && w < v) continue;
    os << "  " << dot_quote(v) << " -> " << dot_quote(w)
       << " [style=dashed, dir=none, constraint=false, label=\"tau\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace detail

/// Deterministic DOT output: nodes sorted by level (when known) then label,
/// solid directed edges for arrows, dashed constraint-free edges for the
/// translation.
inline std::string emit_dot(const TranslationQuiver<std::string>& tq,
                            const std::map<std::string, int>& levels = {}) {
  std::vector<std::string> nodes(tq.quiver.vertices().begin(), tq.quiver.vertices().end());
  std::stable_sort(nodes.begin(), nodes.end(), [&](const std::string& a, const std::string& b) {
    const int la = levels.count(a) ? levels.at(a) : 0;
    const int lb = levels.count(b) ? levels.at(b) : 0;
    return std::tie(la, a) < std::tie(lb, b);
  });
  return detail::dot_body(nodes, tq.quiver.arrows(), tq.tau);
}

inline std::string emit_dot(const Quiver<int>& q) {
  TranslationQuiver<std::string> tq;
  for (int v : q.vertices()) tq.quiver.add_vertex(std::to_string(v));
  for (const auto& [from, to] : q.arrows())
    tq.quiver.add_arrow(std::to_string(from), std::to_string(to));
  return emit_dot(tq);
}

inline std::string window_dot(const StringWindow& w) { return emit_dot(w.tq, w.level_of); }

inline nlohmann::json window_json(const StringWindow& w) { return quiver_json(w.tq); }

/// Plain-text rendering: one row per level with the mouth at the bottom,
/// rows chained along the translation with "~~", then the arrow list.
inline std::string window_text(const StringWindow& w) {
  std::ostringstream os;
  os << w.title << "\n";
  for (int lvl = w.max_level; lvl >= 1; --lvl) {
    std::set<std::string> row;
    for (const auto& [v, l] : w.level_of)
      if (l == lvl) row.insert(v);
    os << "level " << lvl << ":";
    if (!row.empty()) {
      const std::string v = *row.begin();
      os << " " << v;
      std::string cur = w.tq.tau.at(v);
      for (std::size_t n = 1; cur != v && n < row.size(); ++n) {
        os << " ~~ " << cur;
        cur = w.tq.tau.at(cur);
      }
    }
    os << "\n";
  }
  os << "arrows:\n";
  for (const auto& [from, to] : w.tq.quiver.arrows()) os << "  " << from << " -> " << to << "\n";
  return os.str();
}

inline std::string quiver_text(const Quiver<int>& q) {
  std::ostringstream os;
  os << "vertices:";
  for (int v : q.vertices()) os << " " << v;
  os << "\n";
  os << "arrows:\n";
  for (const auto& [from, to] : q.arrows()) os << "  " << from << " -> " << to << "\n";
  return os.str();
}

/// Reads a triangulation from its JSON form:
/// {"m": int, "arcs": [...], "triangles": [{"sides": [{"arc": id} |
/// {"boundary": id}, x3]}...], "self_folded": [{"radius": id, "loop": id}...]}
inline Triangulation triangulation_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& msg) { throw TriangulationError("triangulation JSON: " + msg); };
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("m") || !j["m"].is_number_integer()) fail("missing integer field \"m\"");
  if (!j.contains("arcs") || !j["arcs"].is_array()) fail("missing array field \"arcs\"");

  Triangulation t;
  t.m = j["m"].get<int>();
  for (const auto& id : j["arcs"]) {
    if (!id.is_number_integer()) fail("arc ids must be integers");
    t.arc_ids.insert(id.get<int>());
  }
  for (const auto& jt : j.value("triangles", nlohmann::json::array())) {
    if (!jt.is_object() || !jt.contains("sides") || !jt["sides"].is_array() ||
        jt["sides"].size() != 3)
      fail("each triangle needs a \"sides\" array of length 3");
    Triangle tri{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& side = jt["sides"][i];
      if (side.is_object() && side.contains("arc") && side["arc"].is_number_integer())
        tri.sides[i] = ArcSide{side["arc"].get<int>()};
      else if (side.is_object() && side.contains("boundary") &&
               side["boundary"].is_number_integer())
        tri.sides[i] = BoundarySide{side["boundary"].get<int>()};
      else
        fail("each side must be {\"arc\": id} or {\"boundary\": id}");
    }
    t.triangles.push_back(tri);
  }
  for (const auto& js : j.value("self_folded", nlohmann::json::array())) {
    if (!js.is_object() || !js.contains("radius") || !js.contains("loop") ||
        !js["radius"].is_number_integer() || !js["loop"].is_number_integer())
      fail("each self-folded entry must be {\"radius\": id, \"loop\": id}");
    t.self_folded.push_back({js["radius"].get<int>(), js["loop"].get<int>()});
  }
  return t;
}

}  // namespace arctube

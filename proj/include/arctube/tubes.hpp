#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arctube/interior_arc.hpp"
#include "arctube/quiver.hpp"
#include "arctube/surface.hpp"

namespace arctube {

enum class TubeKind { T1, Gamma0, Gamma1 };

/// Finite window of a tube: the translation quiver restricted to the levels
/// 1..max_level. Arrows leading above max_level are omitted, so the top row
/// must be treated as unchecked by any verification.
template <typename V>
struct TubeWindow {
  TranslationQuiver<V> tq;
  std::map<V, int> level_of;
  int max_level = 0;
  TubeKind kind = TubeKind::T1;
  int m = 0;  ///< boundary marked points; meaningful for T1 windows only

  std::set<V> level_set(int r) const {
    std::set<V> out;
    for (const auto& [v, lvl] : level_of)
      if (lvl == r) out.insert(v);
    return out;
  }

  std::set<V> top_level() const { return level_set(max_level); }
  std::set<V> mouth() const { return level_set(1); }
};

/// The quasi-simples of the rank-m tube over peripheral arcs: the m shortest
/// arcs (s,2).
inline std::vector<PeripheralArc> quasi_simples_t1(int m) {
  if (m < 2) throw std::invalid_argument("quasi_simples_t1: m must be >= 2");
  std::vector<PeripheralArc> out;
  for (int s = 1; s <= m; ++s) out.push_back({s, 2});
  return out;
}

/// Window of the tube of rank m over the peripheral arcs of a disk with m
/// boundary points. Vertices are the arcs (s,k) with 2 <= k <= max_level+1;
/// each vertex extends at its end, (s,k) -> (s,k+1), and retracts at its
/// start, (s,k) -> (s+1,k-1); the translation moves the start clockwise.
inline TubeWindow<PeripheralArc> build_t1(int m, int max_level) {
  if (m < 2) throw std::invalid_argument("build_t1: m must be >= 2");
  if (max_level < 1) throw std::invalid_argument("build_t1: max_level must be >= 1");
  TubeWindow<PeripheralArc> w;
  w.kind = TubeKind::T1;
  w.max_level = max_level;
  w.m = m;
  for (int s = 1; s <= m; ++s)
    for (int k = 2; k <= max_level + 1; ++k) {
      const PeripheralArc v{s, k};
      w.tq.quiver.add_vertex(v);
      w.level_of[v] = k - 1;
    }
  for (int s = 1; s <= m; ++s)
    for (int k = 2; k <= max_level + 1; ++k) {
      if (k + 1 <= max_level + 1) w.tq.quiver.add_arrow({s, k}, {s, k + 1});
      if (k - 1 >= 2) w.tq.quiver.add_arrow({s, k}, {s % m + 1, k - 1});
    }
  for (const PeripheralArc& v : w.tq.quiver.vertices()) w.tq.tau.emplace(v, tau_peripheral(v, m));
  return w;
}

/// Window of one component of the interior-arc quiver: the canonical arcs
/// with the given component and level <= max_level, generated as the closure
/// of the mouth under successors.
inline TubeWindow<InteriorArc> build_gamma(int which, int max_level) {
  if (which != 0 && which != 1)
    throw std::invalid_argument("build_gamma: component must be 0 or 1");
  if (max_level < 1) throw std::invalid_argument("build_gamma: max_level must be >= 1");
  std::set<InteriorArc> verts;
  std::vector<InteriorArc> frontier;
  for (const InteriorArc& a : InteriorArc::mouth_arcs())
    if (a.component() == which) {
      verts.insert(a);
      frontier.push_back(a);
    }
  for (int lvl = 1; lvl < max_level; ++lvl) {
    std::vector<InteriorArc> next;
    for (const InteriorArc& v : frontier)
      for (const InteriorArc& s : v.successors())
        if (s.level() == lvl + 1 && verts.insert(s).second) next.push_back(s);
    frontier = std::move(next);
  }

  TubeWindow<InteriorArc> w;
  w.kind = which == 0 ? TubeKind::Gamma0 : TubeKind::Gamma1;
  w.max_level = max_level;
  for (const InteriorArc& v : verts) {
    w.tq.quiver.add_vertex(v);
    w.level_of[v] = v.level();
  }
  for (const InteriorArc& v : verts)
    for (const InteriorArc& s : v.successors())
      if (verts.count(s)) w.tq.quiver.add_arrow(v, s);
  for (const InteriorArc& v : verts) w.tq.tau.emplace(v, v.tau());
  return w;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  bool ok = true;
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = "") {
    ok = ok && passed;
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

namespace detail {

template <typename V>
std::string count_detail(const char* what, const V& got, const V& want) {
  return std::string(what) + ": got " + std::to_string(got) + ", want " + std::to_string(want);
}

}  // namespace detail

/// Structural checks on a T1 window: translation axiom away from the top
/// row, tau-period exactly m everywhere, and the mouth formed by the m
/// quasi-simples.
inline VerificationReport verify_t1(int m, int max_level) {
  VerificationReport rep;
  const auto w = build_t1(m, max_level);
  const std::string tag = "t1 m=" + std::to_string(m) + ": ";

  const auto stable = is_stable_translation_quiver(w.tq, w.top_level());
  rep.add(tag + "translation axiom below the top row", stable.ok && stable.failures.empty(),
          std::to_string(stable.checked) + " vertices checked, " +
              std::to_string(stable.unchecked.size()) + " unchecked");

  bool periods_ok = true;
  for (const PeripheralArc& v : w.tq.quiver.vertices()) {
    const auto p = tau_period(w.tq, v, 2 * m);
    if (!p || *p != m) periods_ok = false;
  }
  rep.add(tag + "tau-period is exactly m at every vertex", periods_ok);

  const auto quasi = quasi_simples_t1(m);
  const std::set<PeripheralArc> quasi_set(quasi.begin(), quasi.end());
  rep.add(tag + "quasi-simples are the level-1 row",
          quasi_set == w.mouth() && static_cast<int>(quasi.size()) == m);

  const auto components = connected_components(w.tq.quiver);
  rep.add(tag + "window is connected", components.size() == 1);
  if (components.size() == 1 && max_level >= 2) {
    const auto tube = tube_report(w.tq, components.front(), w.top_level());
    rep.add(tag + "tube of rank m", tube.is_tube && tube.rank == m,
            tube.is_tube ? "rank " + std::to_string(tube.rank)
                         : (tube.problems.empty() ? "" : tube.problems.front()));
  }
  return rep;
}

/// Checks that the interior-arc quiver truncated at max_level consists of two
/// disjoint rank-2 tubes whose mouths are the four mouth arcs, and that the
/// two components are isomorphic as translation quivers.
inline VerificationReport verify_theorem(int max_level) {
  if (max_level < 2) throw std::invalid_argument("verify_theorem: max_level must be >= 2");
  VerificationReport rep;
  const auto g0 = build_gamma(0, max_level);
  const auto g1 = build_gamma(1, max_level);

  {
    std::set<InteriorArc> overlap;
    for (const InteriorArc& v : g0.tq.quiver.vertices())
      if (g1.tq.quiver.has_vertex(v)) overlap.insert(v);
    rep.add("components have disjoint vertex sets", overlap.empty());
  }

  for (const auto* w : {&g0, &g1}) {
    const std::string tag = w->kind == TubeKind::Gamma0 ? "gamma0: " : "gamma1: ";
    rep.add(tag + "vertex census is 2 per level",
            static_cast<int>(w->tq.quiver.vertex_count()) == 2 * max_level,
            detail::count_detail("vertices", static_cast<int>(w->tq.quiver.vertex_count()),
                                 2 * max_level));

    const auto stable = is_stable_translation_quiver(w->tq, w->top_level());
    rep.add(tag + "translation axiom below the top row", stable.ok,
            std::to_string(stable.checked) + " vertices checked, " +
                std::to_string(stable.unchecked.size()) + " unchecked");

    bool tau_ok = true;
    for (const InteriorArc& v : w->tq.quiver.vertices()) {
      const auto p = tau_period(w->tq, v, 4);
      if (!p || *p != 2) tau_ok = false;
    }
    rep.add(tag + "tau is an involution without fixed points", tau_ok);

    const auto components = connected_components(w->tq.quiver);
    rep.add(tag + "window is connected", components.size() == 1);
    if (components.size() == 1) {
      const auto tube = tube_report(w->tq, components.front(), w->top_level());
      rep.add(tag + "tube of rank 2", tube.is_tube && tube.rank == 2,
              tube.is_tube ? "" : (tube.problems.empty() ? "" : tube.problems.front()));
    }
  }

  {
    std::set<InteriorArc> mouth0;
    std::set<InteriorArc> mouth1;
    for (const InteriorArc& a : InteriorArc::mouth_arcs())
      (a.component() == 0 ? mouth0 : mouth1).insert(a);
    rep.add("mouths are the four mouth arcs, split two and two",
            g0.mouth() == mouth0 && g1.mouth() == mouth1);
  }

  {
    // Explicit isomorphism: an arc written from 0 with a plain (resp.
    // notched) start maps to the component-1 arc of the same level with a
    // notched (resp. plain) start.
    auto phi = [](const InteriorArc& v) {
      const bool plain_start = v.x().tag == Tag::Plain;
      const CylEnd nx{1, plain_start ? Tag::Notched : Tag::Plain};
      const CylEnd ny{v.y().pos + 1, plain_start ? Tag::Plain : Tag::Notched};
      return normalize(RawInteriorArc{nx, ny});
    };
    bool bijective = g0.tq.quiver.vertex_count() == g1.tq.quiver.vertex_count();
    bool arrows_match = true;
    bool tau_match = true;
    bool levels_match = true;
    std::set<InteriorArc> image;
    for (const InteriorArc& v : g0.tq.quiver.vertices()) {
      const InteriorArc fv = phi(v);
      if (!g1.tq.quiver.has_vertex(fv) || !image.insert(fv).second) bijective = false;
      if (bijective && v.level() != fv.level()) levels_match = false;
      if (bijective && phi(g0.tq.tau.at(v)) != g1.tq.tau.at(fv)) tau_match = false;
    }
    if (bijective) {
      arrows_match = g0.tq.quiver.arrow_count() == g1.tq.quiver.arrow_count();
      for (const auto& [from, to] : g0.tq.quiver.arrows())
        if (g1.tq.quiver.multiplicity(phi(from), phi(to)) !=
            g0.tq.quiver.multiplicity(from, to))
          arrows_match = false;
    }
    rep.add("components are isomorphic as translation quivers",
            bijective && arrows_match && tau_match && levels_match);
  }

  {
    Quiver<InteriorArc> combined;
    for (const auto* w : {&g0, &g1})
      for (const InteriorArc& v : w->tq.quiver.vertices()) combined.add_vertex(v);
    for (const auto* w : {&g0, &g1})
      for (const auto& [from, to] : w->tq.quiver.arrows()) combined.add_arrow(from, to);
    rep.add("two connected components in total", connected_components(combined).size() == 2);
  }

  return rep;
}

}  // namespace arctube

#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "arctube/quiver.hpp"

namespace arctube {

struct ArcSide {
  int id;
};

struct BoundarySide {
  int id;
};

/// One side of a triangle: an internal arc or a boundary segment. Arc ids and
/// boundary ids live in separate namespaces.
using TriangleSide = std::variant<ArcSide, BoundarySide>;

/// Triangle of a triangulation, sides listed in clockwise order.
struct Triangle {
  std::array<TriangleSide, 3> sides;
};

struct SelfFoldedPair {
  int radius;
  int loop;
};

/// Explicit triangle list of a triangulation of the twice-punctured disk.
/// Self-folded triangles are not listed among the triangles; they are given
/// as (radius, loop) pairs, and the loop appears as a side of the enclosing
/// triangle. Partial lists (arcs seen from only one side) are accepted; only
/// structurally impossible data is rejected.
struct Triangulation {
  int m = 0;
  std::set<int> arc_ids;
  std::vector<Triangle> triangles;
  std::vector<SelfFoldedPair> self_folded;
};

class TriangulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void validate_triangulation(const Triangulation& t) {
  auto fail = [](const std::string& msg) { throw TriangulationError(msg); };

  std::set<int> radii;
  std::set<int> loops;
  std::set<int> folded_ids;
  for (const auto& sf : t.self_folded) {
    if (!t.arc_ids.count(sf.radius) || !t.arc_ids.count(sf.loop))
      fail("self-folded pair (" + std::to_string(sf.radius) + ", " + std::to_string(sf.loop) +
           ") references an unknown arc");
    if (sf.radius == sf.loop)
      fail("self-folded pair: radius and loop coincide (arc " + std::to_string(sf.radius) + ")");
    if (!folded_ids.insert(sf.radius).second)
      fail("arc " + std::to_string(sf.radius) + " occurs in more than one self-folded pair");
    if (!folded_ids.insert(sf.loop).second)
      fail("arc " + std::to_string(sf.loop) + " occurs in more than one self-folded pair");
    radii.insert(sf.radius);
    loops.insert(sf.loop);
  }

  std::map<int, int> arc_uses;
  std::set<int> boundary_uses;
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    std::set<int> seen_arcs;
    for (const TriangleSide& side : t.triangles[i].sides) {
      if (const auto* arc = std::get_if<ArcSide>(&side)) {
        if (!t.arc_ids.count(arc->id))
          fail("triangle #" + std::to_string(i) + " references unknown arc " +
               std::to_string(arc->id));
        if (radii.count(arc->id))
          fail("triangle #" + std::to_string(i) + " uses radius " + std::to_string(arc->id) +
               "; a radius lies inside its self-folded triangle");
        if (!seen_arcs.insert(arc->id).second)
          fail("triangle #" + std::to_string(i) + " repeats arc " + std::to_string(arc->id) +
               "; a triangle with two equal sides belongs in self_folded");
        ++arc_uses[arc->id];
      } else {
        const int id = std::get<BoundarySide>(side).id;
        if (!boundary_uses.insert(id).second)
          fail("boundary segment " + std::to_string(id) + " occurs twice");
      }
    }
  }
  for (const auto& [id, uses] : arc_uses) {
    const int limit = loops.count(id) ? 1 : 2;
    if (uses > limit)
      fail("arc " + std::to_string(id) + " occurs in " + std::to_string(uses) +
           " triangle slots (at most " + std::to_string(limit) + " possible)");
  }
}

/// Vertices and the per-triangle arrows: one arrow i -> j for every angle
/// whose sides i and j are internal arcs with i followed by j clockwise.
inline Quiver<int> triangle_arrows(const Triangulation& t) {
  validate_triangulation(t);
  Quiver<int> q;
  for (int id : t.arc_ids) q.add_vertex(id);
  for (const Triangle& tri : t.triangles) {
    for (int i = 0; i < 3; ++i) {
      const auto* from = std::get_if<ArcSide>(&tri.sides[i]);
      const auto* to = std::get_if<ArcSide>(&tri.sides[(i + 1) % 3]);
      if (from && to) q.add_arrow(from->id, to->id);
    }
  }
  return q;
}

/// The quiver of a triangulation: per-triangle arrows, then for every
/// self-folded pair the arrows through the loop are copied onto the radius,
/// and finally all 2-cycles are cancelled. Self-folded substitutions are
/// applied in input order against the arrows accumulated so far.
inline Quiver<int> quiver_from_triangulation(const Triangulation& t) {
  Quiver<int> q = triangle_arrows(t);
  for (const auto& sf : t.self_folded) {
    for (const auto& [from, to] : q.arrows()) {
      if (from == sf.loop) q.add_arrow(sf.radius, to);
      else if (to == sf.loop) q.add_arrow(from, sf.radius);
    }
  }
  return remove_two_cycles(std::move(q));
}

}  // namespace arctube

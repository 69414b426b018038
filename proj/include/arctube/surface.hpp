#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace arctube {

/// Plain-vs-notched marker carried by an arc end at a puncture.
enum class Tag : std::uint8_t { Plain, Notched };

constexpr Tag flip(Tag t) { return t == Tag::Plain ? Tag::Notched : Tag::Plain; }

/// The two punctures of the twice-punctured disk.
enum class Puncture : std::uint8_t { P, Q };

/// Twice-punctured disk with m >= 2 marked points on the boundary,
/// labelled 1..m counterclockwise, and punctures P and Q.
struct Surface {
  int m;

  explicit Surface(int boundary_points) : m(boundary_points) {
    if (m < 2)
      throw std::invalid_argument("Surface: need at least 2 boundary marked points");
  }
};

/// The next marked point clockwise, i.e. i-1 reduced into 1..m.
inline int clockwise_next(int i, int m) {
  if (m < 2) throw std::invalid_argument("clockwise_next: m must be >= 2");
  if (i < 1 || i > m)
    throw std::out_of_range("clockwise_next: boundary index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(m));
  return (i + m - 2) % m + 1;
}

/// Boundary-to-boundary arc that runs counterclockwise from marked point s
/// across k boundary segments. k >= 2; k may exceed m, in which case the arc
/// wraps around the disk. (s,k) is the canonical form; the equivalent
/// (s, l, t) form with winding l and endpoint t is available through
/// to_gamma_notation / from_gamma_notation.
struct PeripheralArc {
  int s;
  int k;

  auto operator<=>(const PeripheralArc&) const = default;
};

inline void check_peripheral(PeripheralArc a, int m) {
  if (m < 2) throw std::invalid_argument("peripheral arc: m must be >= 2");
  if (a.s < 1 || a.s > m)
    throw std::out_of_range("peripheral arc: s = " + std::to_string(a.s) +
                            " out of range 1.." + std::to_string(m));
  if (a.k < 2)
    throw std::invalid_argument("peripheral arc: k must be >= 2, got " + std::to_string(a.k));
}

/// Auslander-Reiten translate on peripheral arcs: both endpoints move one
/// marked point clockwise, so only the starting point changes in (s,k) form.
inline PeripheralArc tau_peripheral(PeripheralArc a, int m) {
  check_peripheral(a, m);
  return {clockwise_next(a.s, m), a.k};
}

/// A peripheral arc as (start, winding, end): starts at s, makes l full
/// counterclockwise turns and ends at t. Printed as g(l,s,t).
struct GammaNotation {
  int s;
  int l;
  int t;

  auto operator<=>(const GammaNotation&) const = default;
};

inline GammaNotation to_gamma_notation(PeripheralArc a, int m) {
  check_peripheral(a, m);
  const int l = a.k / m;
  const int t = (a.s - 1 + a.k % m) % m + 1;
  return {a.s, l, t};
}

inline PeripheralArc from_gamma_notation(GammaNotation g, int m) {
  if (m < 2) throw std::invalid_argument("peripheral arc: m must be >= 2");
  if (g.s < 1 || g.s > m || g.t < 1 || g.t > m)
    throw std::out_of_range("gamma notation: endpoints must lie in 1.." + std::to_string(m));
  if (g.l < 0) throw std::invalid_argument("gamma notation: winding must be >= 0");
  const int k = g.l * m + ((g.t - g.s) % m + m) % m;
  if (k < 2)
    throw std::invalid_argument("gamma notation: an unwound arc may not end at its start "
                                "or at the next marked point");
  return {g.s, k};
}

/// A marked point on the boundary, 1-based.
struct Boundary {
  int index;

  auto operator<=>(const Boundary&) const = default;
};

/// Where an arc end sits: on the boundary or at one of the punctures.
using Endpoint = std::variant<Boundary, Puncture>;

inline bool is_boundary(const Endpoint& e) { return std::holds_alternative<Boundary>(e); }

/// Classical tagged arc given by its two ends. Tags are meaningful only at
/// puncture ends; boundary ends are always plain.
struct ClassicalTaggedArc {
  Endpoint end1;
  Endpoint end2;
  Tag tag1 = Tag::Plain;
  Tag tag2 = Tag::Plain;
};

/// The four kinds of generalized arcs in the twice-punctured disk.
enum class ArcType {
  Peripheral,
  BoundaryNonPeripheral,
  BoundaryToPuncture,
  PunctureToPuncture,
};

inline ArcType classify_arc(const PeripheralArc&) { return ArcType::Peripheral; }

inline ArcType classify_arc(const ClassicalTaggedArc& arc) {
  const int boundary_ends = (is_boundary(arc.end1) ? 1 : 0) + (is_boundary(arc.end2) ? 1 : 0);
  switch (boundary_ends) {
    case 2: return ArcType::BoundaryNonPeripheral;
    case 1: return ArcType::BoundaryToPuncture;
    default: return ArcType::PunctureToPuncture;
  }
}

enum class TagRule {
  BoundaryEndPlain,  ///< any endpoint on the boundary must be plain
  LoopTagsEqual,     ///< both ends of a loop carry the same tag
  SelfFoldedLoop,    ///< a loop at a boundary point encodes a self-folded triangle
};

struct TagViolation {
  TagRule rule;
  std::string message;
};

/// Checks the syntactic conditions on a classical tagged arc. Returns the
/// list of violated rules; an empty list means the arc is well formed.
inline std::vector<TagViolation> validate_tagged_arc(const ClassicalTaggedArc& arc) {
  std::vector<TagViolation> out;
  if (is_boundary(arc.end1) && arc.tag1 != Tag::Plain)
    out.push_back({TagRule::BoundaryEndPlain, "first end lies on the boundary but is notched"});
  if (is_boundary(arc.end2) && arc.tag2 != Tag::Plain)
    out.push_back({TagRule::BoundaryEndPlain, "second end lies on the boundary but is notched"});
  if (arc.end1 == arc.end2) {
    if (arc.tag1 != arc.tag2)
      out.push_back({TagRule::LoopTagsEqual, "loop with differently tagged ends"});
    if (is_boundary(arc.end1))
      out.push_back({TagRule::SelfFoldedLoop,
                     "loop at a boundary point cuts out a once-punctured monogon; "
                     "encode it as a notched radius instead"});
  }
  return out;
}

/// Compatibility of two tagged arcs, given the verdict on their untagged
/// versions. Untagged versions are compared structurally by endpoints.
inline bool tagged_compatible(const ClassicalTaggedArc& a, const ClassicalTaggedArc& b,
                              bool untagged_compatible) {
  if (!untagged_compatible) return false;
  auto ends = [](const ClassicalTaggedArc& arc) {
    std::array<std::pair<Endpoint, Tag>, 2> e{{{arc.end1, arc.tag1}, {arc.end2, arc.tag2}}};
    if (e[1].first < e[0].first) std::swap(e[0], e[1]);
    return e;
  };
  const auto ea = ends(a);
  const auto eb = ends(b);
  if (ea[0].first == eb[0].first && ea[1].first == eb[1].first)
    return ea[0].second == eb[0].second || ea[1].second == eb[1].second;
  for (const auto& [pe, pt] : ea)
    for (const auto& [qe, qt] : eb)
      if (pe == qe && pt != qt) return false;
  return true;
}

/// Whether two unwrapped peripheral arcs cross, by the cyclic interleaving of
/// their endpoints. Arcs sharing an endpoint do not cross. Wrapped arcs
/// (k >= m) are rejected.
inline bool untagged_crossing_simple_peripheral(PeripheralArc a, PeripheralArc b, int m) {
  check_peripheral(a, m);
  check_peripheral(b, m);
  if (a.k >= m || b.k >= m)
    throw std::invalid_argument("crossing test supports only unwrapped arcs (k < m)");
  const int ta = to_gamma_notation(a, m).t;
  const int tb = to_gamma_notation(b, m).t;
  if (a.s == b.s || a.s == tb || ta == b.s || ta == tb) return false;
  auto inside = [&](int x) {
    const int d = ((x - a.s) % m + m) % m;
    return d > 0 && d < a.k;
  };
  return inside(b.s) != inside(tb);
}

}  // namespace arctube

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arctube/surface.hpp"

namespace arctube {

/// Integer point in the universal cover of the cylinder, together with its
/// tag. Odd positions are preimages of the puncture P, even ones of Q.
struct CylEnd {
  int pos = 0;
  Tag tag = Tag::Plain;

  auto operator<=>(const CylEnd&) const = default;
};

constexpr CylEnd flipped(CylEnd e) { return {e.pos, flip(e.tag)}; }

/// A puncture-to-puncture arc exactly as written, e.g. parsed from "[5,7*]".
struct RawInteriorArc {
  CylEnd a;
  CylEnd b;

  auto operator<=>(const RawInteriorArc&) const = default;
};

class NormalizeError : public std::runtime_error {
 public:
  enum class Kind {
    Contractible,     ///< [x,x] or [x*,x]
    InvalidLoopTags,  ///< loop at a single puncture with equally tagged ends
  };

  NormalizeError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Canonical interior arc [x,y] between the punctures of the twice-punctured
/// disk, written in the universal cover of the cylinder.
///
/// Canonical form:
///  - x.pos is 0 or 1 and y.pos > x.pos;
///  - an arc joining P and Q carries equal tags exactly when written from 0;
///  - a loop based at a single puncture has differently tagged ends.
///
/// Values of this type are produced by normalize() and by the arrow and
/// translation operations below, which preserve canonical form.
class InteriorArc {
 public:
  CylEnd x() const { return x_; }
  CylEnd y() const { return y_; }

  /// Quasi-length: 1 on the four mouth arcs, grows by 1 per arrow level.
  int level() const { return y_.pos - x_.pos; }

  /// Which connected component of the arc quiver this arc belongs to (= x.pos).
  int component() const { return x_.pos; }

  /// Number of full turns around the cylinder.
  int winding() const { return (y_.pos - x_.pos) / 2; }

  /// The punctures at the two ends, by parity of the positions.
  std::pair<Puncture, Puncture> endpoint_punctures() const {
    return {puncture_at(x_.pos), puncture_at(y_.pos)};
  }

  /// Auslander-Reiten translate: both tags change. An involution that
  /// preserves level and component.
  InteriorArc tau() const { return {flipped(x_), flipped(y_)}; }

  /// Targets of the arrows out of this arc; one arc at level-1 (absent at the
  /// mouth) and one at level+1.
  std::vector<InteriorArc> successors() const {
    Candidates cand;
    if (x_.pos == 0) {
      cand[0] = {x_, CylEnd{y_.pos + 1, flip(y_.tag)}};
      cand[1] = {flipped(x_), CylEnd{y_.pos - 1, y_.tag}};
    } else {
      cand[0] = {x_, CylEnd{y_.pos + 1, y_.tag}};
      cand[1] = {flipped(x_), CylEnd{y_.pos - 1, flip(y_.tag)}};
    }
    return keep_arcs(cand);
  }

  /// Sources of the arrows into this arc. Equals the set of arcs whose
  /// successors contain this one.
  std::vector<InteriorArc> predecessors() const {
    Candidates cand;
    if (x_.pos == 0) {
      cand[0] = {x_, CylEnd{y_.pos - 1, flip(y_.tag)}};
      cand[1] = {flipped(x_), CylEnd{y_.pos + 1, y_.tag}};
    } else {
      cand[0] = {x_, CylEnd{y_.pos - 1, y_.tag}};
      cand[1] = {flipped(x_), CylEnd{y_.pos + 1, flip(y_.tag)}};
    }
    return keep_arcs(cand);
  }

  /// The four level-1 arcs, two per component.
  static std::array<InteriorArc, 4> mouth_arcs() {
    return {InteriorArc{{0, Tag::Plain}, {1, Tag::Plain}},
            InteriorArc{{0, Tag::Notched}, {1, Tag::Notched}},
            InteriorArc{{1, Tag::Notched}, {2, Tag::Plain}},
            InteriorArc{{1, Tag::Plain}, {2, Tag::Notched}}};
  }

  auto operator<=>(const InteriorArc&) const = default;

 private:
  friend InteriorArc normalize(const RawInteriorArc&);

  InteriorArc(CylEnd x, CylEnd y) : x_(x), y_(y) {
    assert(x_.pos == 0 || x_.pos == 1);
    assert(y_.pos > x_.pos);
    if ((y_.pos - x_.pos) % 2 == 0)
      assert(x_.tag != y_.tag);
    else
      assert((x_.tag == y_.tag) == (x_.pos == 0));
  }

  using Candidates = std::array<std::pair<CylEnd, CylEnd>, 2>;

  static std::vector<InteriorArc> keep_arcs(const Candidates& cand) {
    std::vector<InteriorArc> out;
    for (const auto& [cx, cy] : cand)
      if (cx.pos != cy.pos) out.push_back(InteriorArc{cx, cy});
    std::sort(out.begin(), out.end());
    return out;
  }

  static Puncture puncture_at(int pos) {
    return ((pos % 2 + 2) % 2 == 1) ? Puncture::P : Puncture::Q;
  }

  CylEnd x_;
  CylEnd y_;
};

/// Rewrites an arbitrary [x,y] notation into canonical form: ends are put in
/// increasing order, shifted by an even amount so the left one lands in
/// {0,1}, and arcs joining P and Q are moved to the representative dictated
/// by their tags. Idempotent on canonical arcs.
inline InteriorArc normalize(const RawInteriorArc& raw) {
  CylEnd lo = raw.a;
  CylEnd hi = raw.b;
  if (lo.pos > hi.pos) std::swap(lo, hi);
  if (lo.pos == hi.pos)
    throw NormalizeError(NormalizeError::Kind::Contractible,
                         "contractible arc: both ends sit at the same point");
  const int shift = lo.pos - ((lo.pos % 2) + 2) % 2;
  lo.pos -= shift;
  hi.pos -= shift;
  if ((hi.pos - lo.pos) % 2 == 0) {
    if (lo.tag == hi.tag)
      throw NormalizeError(NormalizeError::Kind::InvalidLoopTags,
                           "loop at a single puncture must have differently tagged ends");
    return {lo, hi};
  }
  // Arc between P and Q: tags are attached to the parity of the position.
  const Tag tag_p = (lo.pos % 2 != 0) ? lo.tag : hi.tag;
  const Tag tag_q = (lo.pos % 2 == 0) ? lo.tag : hi.tag;
  const int span = hi.pos - lo.pos;
  if (tag_p == tag_q) return {CylEnd{0, tag_q}, CylEnd{span, tag_p}};
  return {CylEnd{1, tag_p}, CylEnd{1 + span, tag_q}};
}

/// Whether two notations denote the same interior arc.
inline bool equivalent(const RawInteriorArc& r1, const RawInteriorArc& r2) {
  return normalize(r1) == normalize(r2);
}

inline ArcType classify_arc(const InteriorArc&) { return ArcType::PunctureToPuncture; }

}  // namespace arctube

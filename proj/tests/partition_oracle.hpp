#pragma once

// Brute-force equivalence of raw cylinder notations over a bounded universe,
// by closing the three rewriting moves (end swap, shift both positions by 2,
// parity-tag step). Kept independent of normalize() so the two can be
// compared class by class.

#include <numeric>
#include <string>
#include <vector>

#include "arctube/interior_arc.hpp"
#include "arctube/notation.hpp"

namespace oracle {

struct Universe {
  int max_abs = 0;

  int positions() const { return 2 * max_abs + 1; }
  int count() const { return positions() * positions() * 4; }

  bool contains(const arctube::RawInteriorArc& r) const {
    return r.a.pos >= -max_abs && r.a.pos <= max_abs && r.b.pos >= -max_abs &&
           r.b.pos <= max_abs;
  }

  int end_index(arctube::CylEnd e) const {
    return (e.pos + max_abs) * 2 + (e.tag == arctube::Tag::Notched ? 1 : 0);
  }

  int index(const arctube::RawInteriorArc& r) const {
    return end_index(r.a) * positions() * 2 + end_index(r.b);
  }

  arctube::RawInteriorArc arc(int idx) const {
    const int eb = idx % (positions() * 2);
    const int ea = idx / (positions() * 2);
    auto end = [&](int e) {
      return arctube::CylEnd{e / 2 - max_abs,
                             e % 2 == 1 ? arctube::Tag::Notched : arctube::Tag::Plain};
    };
    return {end(ea), end(eb)};
  }
};

struct Partition {
  std::vector<int> parent;

  explicit Partition(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline Partition closure_classes(const Universe& u) {
  Partition p(u.count());
  for (int i = 0; i < u.count(); ++i) {
    const arctube::RawInteriorArc r = u.arc(i);
    p.unite(i, u.index({r.b, r.a}));
    const arctube::RawInteriorArc shifted{{r.a.pos + 2, r.a.tag}, {r.b.pos + 2, r.b.tag}};
    if (u.contains(shifted)) p.unite(i, u.index(shifted));
    if (((r.a.pos - r.b.pos) % 2 + 2) % 2 == 1) {
      // between P and Q: move one step and let the tags follow the parity
      const arctube::RawInteriorArc stepped{{r.a.pos + 1, r.b.tag}, {r.b.pos + 1, r.a.tag}};
      if (u.contains(stepped)) p.unite(i, u.index(stepped));
    }
  }
  return p;
}

/// Canonical form as a string, or a shared marker per rejection kind.
inline std::string normalize_key(const arctube::RawInteriorArc& r) {
  try {
    return arctube::format(arctube::normalize(r));
  } catch (const arctube::NormalizeError& e) {
    return e.kind() == arctube::NormalizeError::Kind::Contractible ? "!contractible"
                                                                   : "!loop-tags";
  }
}

}  // namespace oracle

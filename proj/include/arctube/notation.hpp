#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "arctube/interior_arc.hpp"
#include "arctube/surface.hpp"

namespace arctube {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

inline std::string format(CylEnd e) {
  return std::to_string(e.pos) + (e.tag == Tag::Notched ? "*" : "");
}

inline std::string format(const RawInteriorArc& r) {
  return "[" + format(r.a) + "," + format(r.b) + "]";
}

inline std::string format(const InteriorArc& a) {
  return "[" + format(a.x()) + "," + format(a.y()) + "]";
}

inline std::string format(const PeripheralArc& a) {
  return "p(" + std::to_string(a.s) + "," + std::to_string(a.k) + ")";
}

inline std::string format(const GammaNotation& g) {
  return "g(" + std::to_string(g.l) + "," + std::to_string(g.s) + "," + std::to_string(g.t) + ")";
}

inline std::string format_gamma(const PeripheralArc& a, int m) {
  return format(to_gamma_notation(a, m));
}

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  }

  bool at_end() {
    skip_ws();
    return i >= text.size();
  }

  char peek() {
    skip_ws();
    if (i >= text.size()) throw ParseError("unexpected end of input", i);
    return text[i];
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  }

  bool consume_if(char c) {
    if (!at_end() && text[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  int digits() {
    skip_ws();
    const std::size_t start = i;
    long value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("number too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected digits", start);
    return static_cast<int>(value);
  }

  void expect_end() {
    if (!at_end()) throw ParseError("trailing input", i);
  }
};

inline CylEnd parse_end(Cursor& c) {
  c.skip_ws();
  const bool negative = c.consume_if('-');
  int pos = c.digits();
  if (negative) pos = -pos;
  const Tag tag = c.consume_if('*') ? Tag::Notched : Tag::Plain;
  return {pos, tag};
}

}  // namespace detail

/// Parses the "[x,y]" notation, e.g. "[5,7*]" or "[-2, 1]". The result is
/// the notation as written; pass it through normalize() for the canonical arc.
inline RawInteriorArc parse_interior(std::string_view text) {
  detail::Cursor c{text};
  c.expect('[');
  const CylEnd a = detail::parse_end(c);
  c.expect(',');
  const CylEnd b = detail::parse_end(c);
  c.expect(']');
  c.expect_end();
  return {a, b};
}

/// A parsed arc: interior notation or a peripheral arc.
using ParsedArc = std::variant<RawInteriorArc, PeripheralArc>;

/// Parses any arc notation: "[x,y]" for interior arcs, "p(s,k)" for
/// peripheral arcs in canonical form, "g(l,s,t)" for peripheral arcs in
/// start/winding/end form. The g form needs the number m of boundary points.
inline ParsedArc parse_arc(std::string_view text, std::optional<int> m = std::nullopt) {
  detail::Cursor c{text};
  if (c.at_end()) throw ParseError("empty input", c.i);
  const char lead = c.peek();
  if (lead == '[') return parse_interior(text);
  if (lead == 'p') {
    ++c.i;
    c.expect('(');
    const int s = c.digits();
    c.expect(',');
    const int k = c.digits();
    c.expect(')');
    c.expect_end();
    const PeripheralArc arc{s, k};
    if (m) check_peripheral(arc, *m);
    else if (s < 1 || k < 2)
      throw std::invalid_argument("peripheral arc: need s >= 1 and k >= 2");
    return arc;
  }
  if (lead == 'g') {
    ++c.i;
    c.expect('(');
    const int l = c.digits();
    c.expect(',');
    const int s = c.digits();
    c.expect(',');
    const int t = c.digits();
    c.expect(')');
    c.expect_end();
    if (!m)
      throw std::invalid_argument("gamma notation needs the number of boundary points (m)");
    return from_gamma_notation({s, l, t}, *m);
  }
  throw ParseError("expected '[', 'p(' or 'g('", c.i);
}

}  // namespace arctube

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace arctube {

/// Finite directed multigraph over an ordered vertex label type.
template <typename V>
class Quiver {
 public:
  void add_vertex(const V& v) { vertices_.insert(v); }

  bool has_vertex(const V& v) const { return vertices_.count(v) != 0; }

  void add_arrow(const V& from, const V& to, int count = 1) {
    if (count <= 0) throw std::invalid_argument("Quiver::add_arrow: count must be positive");
    if (!has_vertex(from) || !has_vertex(to))
      throw std::invalid_argument("Quiver::add_arrow: endpoint is not a vertex");
    out_[from][to] += count;
    in_[to][from] += count;
  }

  /// Removes up to count copies of from->to; returns how many were removed.
  int remove_arrow(const V& from, const V& to, int count = 1) {
    const int present = multiplicity(from, to);
    const int removed = std::min(present, count);
    if (removed == 0) return 0;
    subtract(out_, from, to, removed);
    subtract(in_, to, from, removed);
    return removed;
  }

  int multiplicity(const V& from, const V& to) const {
    auto row = out_.find(from);
    if (row == out_.end()) return 0;
    auto cell = row->second.find(to);
    return cell == row->second.end() ? 0 : cell->second;
  }

  std::size_t vertex_count() const { return vertices_.size(); }

  std::size_t arrow_count() const {
    std::size_t n = 0;
    for (const auto& [v, row] : out_)
      for (const auto& [w, c] : row) n += static_cast<std::size_t>(c);
    return n;
  }

  const std::set<V>& vertices() const { return vertices_; }

  /// All arrows, expanded by multiplicity and sorted.
  std::vector<std::pair<V, V>> arrows() const {
    std::vector<std::pair<V, V>> out;
    for (const auto& [v, row] : out_)
      for (const auto& [w, c] : row)
        for (int i = 0; i < c; ++i) out.emplace_back(v, w);
    return out;
  }

  /// Arrow targets of v, expanded by multiplicity and sorted.
  std::vector<V> successors(const V& v) const { return expand(out_, v); }

  /// Arrow sources of v, expanded by multiplicity and sorted.
  std::vector<V> predecessors(const V& v) const { return expand(in_, v); }

  std::size_t out_degree(const V& v) const { return degree(out_, v); }
  std::size_t in_degree(const V& v) const { return degree(in_, v); }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  using AdjacencyMap = std::map<V, std::map<V, int>>;

  static void subtract(AdjacencyMap& adj, const V& a, const V& b, int count) {
    auto& row = adj.at(a);
    auto cell = row.find(b);
    cell->second -= count;
    if (cell->second == 0) row.erase(cell);
    if (row.empty()) adj.erase(a);
  }

  static std::vector<V> expand(const AdjacencyMap& adj, const V& v) {
    std::vector<V> out;
    auto row = adj.find(v);
    if (row == adj.end()) return out;
    for (const auto& [w, c] : row->second)
      for (int i = 0; i < c; ++i) out.push_back(w);
    return out;
  }

  static std::size_t degree(const AdjacencyMap& adj, const V& v) {
    std::size_t n = 0;
    auto row = adj.find(v);
    if (row == adj.end()) return 0;
    for (const auto& [w, c] : row->second) n += static_cast<std::size_t>(c);
    return n;
  }

  std::set<V> vertices_;
  AdjacencyMap out_;
  AdjacencyMap in_;
};

/// Cancels opposite arrow pairs: for every unordered vertex pair the minimum
/// of the two directed multiplicities is deleted from both directions.
template <typename V>
Quiver<V> remove_two_cycles(Quiver<V> q) {
  std::vector<std::pair<V, V>> pairs;
  for (const auto& [from, to] : q.arrows())
    if (from < to && q.multiplicity(to, from) > 0) pairs.emplace_back(from, to);
  for (const auto& [from, to] : pairs) {
    const int c = std::min(q.multiplicity(from, to), q.multiplicity(to, from));
    q.remove_arrow(from, to, c);
    q.remove_arrow(to, from, c);
  }
  return q;
}

/// Quiver with a partial injective translation map on its vertices.
template <typename V>
struct TranslationQuiver {
  Quiver<V> quiver;
  std::map<V, V> tau;

  void validate() const {
    std::set<V> image;
    for (const auto& [v, w] : tau) {
      if (!quiver.has_vertex(v) || !quiver.has_vertex(w))
        throw std::invalid_argument("translation endpoint is not a vertex");
      if (!image.insert(w).second)
        throw std::invalid_argument("translation is not injective");
    }
  }
};

template <typename V>
struct StableFailure {
  V vertex;
  std::vector<V> predecessors;     ///< predecessors of the vertex
  std::vector<V> tau_successors;   ///< successors of its translate
};

template <typename V>
struct StableReport {
  bool ok = true;
  std::vector<StableFailure<V>> failures;
  std::vector<V> unchecked;  ///< skipped window-boundary vertices
  std::size_t checked = 0;
};

/// Verifies the translation axiom: predecessors(v) equals successors(tau(v))
/// as multisets, for every vertex in the domain of tau. Vertices in `skip`
/// (typically the truncation boundary of a window) are reported unchecked.
template <typename V>
StableReport<V> is_stable_translation_quiver(const TranslationQuiver<V>& tq,
                                             const std::set<V>& skip = {}) {
  StableReport<V> report;
  for (const auto& [v, tv] : tq.tau) {
    if (skip.count(v)) {
      report.unchecked.push_back(v);
      continue;
    }
    std::vector<V> preds = tq.quiver.predecessors(v);
    std::vector<V> succs = tq.quiver.successors(tv);
    ++report.checked;
    if (preds != succs) {
      report.ok = false;
      report.failures.push_back({v, std::move(preds), std::move(succs)});
    }
  }
  return report;
}

/// Weakly connected components, ordered by their least vertex.
template <typename V>
std::vector<std::set<V>> connected_components(const Quiver<V>& q) {
  std::vector<std::set<V>> parts;
  std::set<V> seen;
  for (const V& start : q.vertices()) {
    if (seen.count(start)) continue;
    std::set<V> comp;
    std::vector<V> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      V v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (const auto& nbrs : {q.successors(v), q.predecessors(v)})
        for (const V& w : nbrs)
          if (seen.insert(w).second) stack.push_back(w);
    }
    parts.push_back(std::move(comp));
  }
  return parts;
}

/// Least p <= bound with tau^p(v) = v, if any.
template <typename V>
std::optional<int> tau_period(const TranslationQuiver<V>& tq, const V& v, int bound) {
  if (bound < 1) throw std::invalid_argument("tau_period: bound must be >= 1");
  if (!tq.tau.count(v)) throw std::out_of_range("tau_period: vertex outside the domain of tau");
  V current = v;
  for (int p = 1; p <= bound; ++p) {
    auto next = tq.tau.find(current);
    if (next == tq.tau.end()) return std::nullopt;
    current = next->second;
    if (current == v) return p;
  }
  return std::nullopt;
}

template <typename V>
struct TubeReport {
  bool is_tube = false;
  int rank = 0;
  std::set<V> mouth;
  std::vector<std::string> problems;
};

/// Structural tube check on one connected component of a translation quiver.
/// The mouth is the set of non-truncated vertices with exactly one successor;
/// a tube must have a single tau-orbit as mouth (its size is the rank),
/// 2-regular interior vertices, and a consistent level grading measured from
/// the mouth. Vertices in `truncated` are the cut-off top row of a windowed
/// view and are exempt from the interior checks.
template <typename V>
TubeReport<V> tube_report(const TranslationQuiver<V>& tq, const std::set<V>& component,
                          const std::set<V>& truncated = {}) {
  TubeReport<V> report;
  const Quiver<V>& q = tq.quiver;
  auto problem = [&report](std::string msg) { report.problems.push_back(std::move(msg)); };

  for (const V& v : component)
    if (!truncated.count(v) && q.out_degree(v) == 1) report.mouth.insert(v);
  if (report.mouth.empty()) {
    problem("no mouth vertices");
    return report;
  }

  std::optional<int> rank;
  for (const V& v : report.mouth) {
    std::optional<int> p;
    if (tq.tau.count(v)) p = tau_period(tq, v, static_cast<int>(component.size()));
    if (!p) {
      problem("mouth vertex without a tau-period");
      rank.reset();
      break;
    }
    if (!rank) {
      rank = *p;
    } else if (*rank != *p) {
      problem("mouth vertices have different tau-periods");
      rank.reset();
      break;
    }
  }
  if (rank) {
    report.rank = *rank;
    if (static_cast<int>(report.mouth.size()) != report.rank)
      problem("mouth is not a single tau-orbit");
    for (const V& v : report.mouth)
      if (!report.mouth.count(tq.tau.at(v))) {
        problem("tau does not preserve the mouth");
        break;
      }
  }

  // Level grading: undirected distance from the mouth, plus one.
  std::map<V, int> level;
  std::vector<V> frontier(report.mouth.begin(), report.mouth.end());
  for (const V& v : frontier) level[v] = 1;
  while (!frontier.empty()) {
    std::vector<V> next;
    for (const V& v : frontier) {
      for (const auto& nbrs : {q.successors(v), q.predecessors(v)})
        for (const V& w : nbrs)
          if (component.count(w) && level.emplace(w, level[v] + 1).second) next.push_back(w);
    }
    frontier = std::move(next);
  }
  if (level.size() != component.size()) {
    problem("grading: some vertices are unreachable from the mouth");
  } else {
    for (const auto& [from, to] : q.arrows()) {
      if (!component.count(from)) continue;
      const int d = level[from] - level[to];
      if (d != 1 && d != -1) {
        problem("grading: arrow does not connect adjacent levels");
        break;
      }
    }
  }

  for (const V& v : component) {
    if (report.mouth.count(v) || truncated.count(v)) continue;
    if (q.out_degree(v) != 2 || q.in_degree(v) != 2) {
      problem("interior vertex is not 2-regular");
      break;
    }
  }

  report.is_tube = report.problems.empty();
  return report;
}

/// Copies a translation quiver through an injective vertex transformation.
template <typename V, typename F>
auto relabel(const TranslationQuiver<V>& tq, F&& f) {
  using U = std::decay_t<std::invoke_result_t<F&, const V&>>;
  TranslationQuiver<U> out;
  for (const V& v : tq.quiver.vertices()) out.quiver.add_vertex(f(v));
  for (const auto& [from, to] : tq.quiver.arrows()) out.quiver.add_arrow(f(from), f(to));
  for (const auto& [v, w] : tq.tau) out.tau.emplace(f(v), f(w));
  return out;
}

}  // namespace arctube

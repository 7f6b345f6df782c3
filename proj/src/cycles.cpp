#include "zetacone/cycles.hpp"

#include <algorithm>
#include <set>

#include "zetacone/error.hpp"

namespace zetacone {

bool CycleWord::closed(const DirectedEdgeSet& d) const {
  if (steps.empty()) return false;
  for (std::size_t s = 0; s < steps.size(); ++s)
    if (d[steps[s]].head != d[steps[(s + 1) % steps.size()]].tail) return false;
  return true;
}

bool CycleWord::backtrackless(const DirectedEdgeSet& d) const {
  for (std::size_t s = 0; s + 1 < steps.size(); ++s)
    if (steps[s + 1] == d.reversal(steps[s])) return false;
  return true;
}

bool CycleWord::tailless(const DirectedEdgeSet& d) const {
  return !steps.empty() && steps.front() != d.reversal(steps.back());
}

bool CycleWord::primitive() const {
  const std::size_t len = steps.size();
  for (std::size_t period = 1; period < len; ++period) {
    if (len % period != 0) continue;
    bool repeats = true;
    for (std::size_t s = period; s < len && repeats; ++s) repeats = steps[s] == steps[s - period];
    if (repeats) return false;
  }
  return true;
}

std::vector<std::uint32_t> CycleWord::edge_usage(const DirectedEdgeSet& d) const {
  std::vector<std::uint32_t> usage(d.num_edges(), 0);
  for (auto k : steps) ++usage[d[k].base_edge];
  return usage;
}

ExponentVector CycleWord::monomial(const DirectedEdgeSet& d) const {
  ExponentVector e(d.num_edges());
  for (auto k : steps) e.set(d[k].base_edge, static_cast<std::uint16_t>(e[d[k].base_edge] + 1));
  return e;
}

CycleWord cycle_from_edges(const DirectedEdgeSet& d, const std::vector<std::size_t>& edges) {
  if (edges.empty()) throw PreconditionError("empty edge sequence");
  const std::size_t n = d.num_edges();
  for (auto e : edges)
    if (e >= n) throw PreconditionError("edge id " + std::to_string(e + 1) + " out of range");
  for (std::size_t first : {edges[0], edges[0] + n}) {
    CycleWord w{{first}};
    bool ok = true;
    for (std::size_t s = 1; s < edges.size() && ok; ++s) {
      const std::size_t at = d[w.steps.back()].head;
      if (d[edges[s]].tail == at)
        w.steps.push_back(edges[s]);
      else if (d[edges[s] + n].tail == at)
        w.steps.push_back(edges[s] + n);
      else
        ok = false;
    }
    if (ok && w.closed(d)) return w;
  }
  throw PreconditionError("edge sequence is not a closed walk");
}

CycleWord canonical_rotation(const CycleWord& w) {
  CycleWord best = w;
  CycleWord rot = w;
  for (std::size_t s = 1; s < w.steps.size(); ++s) {
    std::rotate(rot.steps.begin(), rot.steps.begin() + 1, rot.steps.end());
    if (rot.steps < best.steps) best = rot;
  }
  return best;
}

bool is_simple_cycle(const NormalGraph& g, const std::vector<std::size_t>& edges) {
  if (edges.empty()) return false;
  std::set<std::size_t> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size()) return false;
  std::vector<std::size_t> degree(g.num_vertices, 0);
  for (auto e : edges) {
    if (e >= g.num_edges()) return false;
    ++degree[g.edges[e].first];
    ++degree[g.edges[e].second];
  }
  for (auto deg : degree)
    if (deg != 0 && deg != 2) return false;
  // Connected: walk from the first edge's endpoint and count edges reached.
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> frontier{g.edges[edges[0]].first};
  std::vector<bool> seen(g.num_vertices, false);
  seen[frontier[0]] = true;
  std::size_t reached = 0;
  while (!frontier.empty()) {
    const auto v = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto [a, b] = g.edges[edges[k]];
      if (used[k] || (a != v && b != v)) continue;
      used[k] = true;
      ++reached;
      const auto other = a == v ? b : a;
      if (!seen[other]) seen[other] = true, frontier.push_back(other);
    }
  }
  return reached == edges.size();
}

std::vector<std::vector<std::size_t>> enumerate_simple_cycles(const NormalGraph& g) {
  const std::size_t nv = g.num_vertices;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
    adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
  }

  std::set<std::vector<std::size_t>> found;
  std::vector<bool> on_path(nv, false);
  std::vector<std::size_t> path_edges;

  // Paths rooted at the cycle's least vertex, visiting only larger vertices.
  auto dfs = [&](auto&& self, std::size_t root, std::size_t v) -> void {
    for (auto [w, e] : adj[v]) {
      if (!path_edges.empty() && e == path_edges.back()) continue;
      if (w == root && !path_edges.empty()) {
        auto cyc = path_edges;
        cyc.push_back(e);
        std::sort(cyc.begin(), cyc.end());
        found.insert(std::move(cyc));
        continue;
      }
      if (w <= root || on_path[w]) continue;
      on_path[w] = true;
      path_edges.push_back(e);
      self(self, root, w);
      path_edges.pop_back();
      on_path[w] = false;
    }
  };
  for (std::size_t root = 0; root < nv; ++root) {
    on_path[root] = true;
    dfs(dfs, root, root);
    on_path[root] = false;
  }

  std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::uint8_t> codeword_from_cycles(const NormalGraph& g,
                                               const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::uint8_t> word(g.num_edges(), 0);
  for (const auto& c : cycles) {
    if (!is_simple_cycle(g, c)) throw PreconditionError("edge subset is not a simple cycle");
    for (auto e : c) word[e] ^= 1;
  }
  std::vector<std::uint8_t> parity(g.num_vertices, 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (word[e]) parity[g.edges[e].first] ^= 1, parity[g.edges[e].second] ^= 1;
  if (std::any_of(parity.begin(), parity.end(), [](auto p) { return p != 0; }))
    throw InternalError("sum of cycles violates a parity check");
  return word;
}

namespace {

// Depth-first extension of non-backtracking walks; `visit` sees each closed
// tailless walk. Steps are limited to ids >= min_step.
template <class Visit>
void walk_closed(const DirectedEdgeMatrix& m, std::size_t start, std::size_t min_step,
                 std::size_t max_length, Visit&& visit) {
  std::vector<std::size_t> steps{start};
  auto rec = [&](auto&& self) -> void {
    if (m.at(steps.back(), steps.front())) visit(steps);
    if (steps.size() == max_length) return;
    for (auto next : m.successors(steps.back())) {
      if (next < min_step) continue;
      steps.push_back(next);
      self(self);
      steps.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

std::vector<CycleWord> enumerate_btt_words(const DirectedEdgeSet& d, std::size_t max_length) {
  std::vector<CycleWord> out;
  if (max_length == 0) return out;
  const DirectedEdgeMatrix m(d);
  for (std::size_t s = 0; s < d.size(); ++s)
    walk_closed(m, s, 0, max_length, [&](const auto& steps) { out.push_back(CycleWord{steps}); });
  std::sort(out.begin(), out.end(), [](const CycleWord& a, const CycleWord& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.steps < b.steps;
  });
  return out;
}

std::vector<CycleClass> enumerate_btt_classes(const DirectedEdgeSet& d, std::size_t max_length) {
  std::vector<CycleClass> out;
  if (max_length == 0) return out;
  const DirectedEdgeMatrix m(d);
  // A class's least rotation starts at its smallest half-edge, so rooting the
  // walk there and forbidding smaller ids finds every class; keeping only
  // words already in least rotation removes duplicates.
  for (std::size_t root = 0; root < d.size(); ++root) {
    walk_closed(m, root, root, max_length, [&](const auto& steps) {
      CycleWord w{steps};
      if (!w.primitive()) return;
      if (canonical_rotation(w).steps != w.steps) return;
      out.push_back(CycleClass{w, w.monomial(d)});
    });
  }
  std::sort(out.begin(), out.end(), [](const CycleClass& a, const CycleClass& b) {
    return a.length() != b.length() ? a.length() < b.length()
                                    : a.representative.steps < b.representative.steps;
  });
  return out;
}

std::vector<CycleClass> enumerate_btt_classes(const NormalGraph& g, std::size_t max_length) {
  return enumerate_btt_classes(orient_edges(g), max_length);
}

namespace {

using CountMap = std::map<ExponentVector, Integer, GrlexLess>;

// Unbounded knapsack: each class is an item of weight g(class) usable any
// number of times, mirroring the Euler factor (1 - g)^-1 = sum_q g^q.
template <class Admissible>
CountMap knapsack(const std::vector<CycleClass>& classes, std::size_t num_vars, Admissible&& admissible) {
  CountMap counts;
  counts.emplace(ExponentVector(num_vars), 1);
  for (const auto& c : classes) {
    if (!admissible(c.monomial)) continue;
    // y = x + g is grlex-greater than x, so it is visited after x and
    // picks up repeated uses of the same class.
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      ExponentVector y = it->first + c.monomial;
      if (!admissible(y)) continue;
      counts[y] += it->second;
    }
  }
  return counts;
}

}  // namespace

Integer zeta_coefficient_oracle(const NormalGraph& g, const ExponentVector& p) {
  if (p.size() != g.num_edges()) throw PreconditionError("exponent vector length must equal the edge count");
  const std::uint32_t degree = p.total_degree();
  if (degree > kOracleMaxDegree)
    throw PreconditionError("oracle degree " + std::to_string(degree) + " exceeds the enumeration bound " +
                            std::to_string(kOracleMaxDegree));
  const auto classes = enumerate_btt_classes(g, degree);
  const auto counts =
      knapsack(classes, g.num_edges(), [&](const ExponentVector& e) { return e.dominated_by(p); });
  auto it = counts.find(p);
  return it == counts.end() ? Integer(0) : it->second;
}

std::map<ExponentVector, Integer, GrlexLess> cycle_factorization_counts(const NormalGraph& g,
                                                                        std::uint32_t max_degree) {
  if (max_degree > kOracleMaxDegree)
    throw PreconditionError("oracle degree " + std::to_string(max_degree) +
                            " exceeds the enumeration bound " + std::to_string(kOracleMaxDegree));
  const auto classes = enumerate_btt_classes(g, max_degree);
  return knapsack(classes, g.num_edges(),
                  [&](const ExponentVector& e) { return e.total_degree() <= max_degree; });
}

}  // namespace zetacone

#pragma once

// Random connected simple graphs and their incidence (cycle-code) matrices.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "zetacone/codegraph.hpp"

namespace testsupport {

struct RandomGraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Random spanning tree plus extra edges; no loops, no parallel edges.
inline RandomGraph random_connected_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t edges) {
  RandomGraph g;
  g.num_vertices = vertices;
  std::set<std::pair<std::size_t, std::size_t>> used;
  auto add = [&](std::size_t a, std::size_t b) {
    auto key = std::minmax(a, b);
    if (a == b || !used.insert(key).second) return false;
    g.edges.emplace_back(a, b);
    return true;
  };
  for (std::size_t v = 1; v < vertices; ++v) add(v, std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
  const std::size_t max_edges = vertices * (vertices - 1) / 2;
  edges = std::min(edges, max_edges);
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  while (g.edges.size() < edges) add(pick(rng), pick(rng));
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

inline zetacone::ParityCheckMatrix incidence(const RandomGraph& g) {
  std::vector<std::uint8_t> e(g.num_vertices * g.edges.size(), 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    e[g.edges[i].first * g.edges.size() + i] = 1;
    e[g.edges[i].second * g.edges.size() + i] = 1;
  }
  return zetacone::ParityCheckMatrix(g.num_vertices, g.edges.size(), std::move(e));
}

// Connected simple graph with cycle rank >= 1 and at most max_edges edges.
inline zetacone::ParityCheckMatrix random_cycle_code(std::mt19937_64& rng, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> vdist(3, std::max<std::size_t>(3, max_edges - 1));
  for (;;) {
    const std::size_t v = vdist(rng);
    const std::size_t cap = std::min(max_edges, v * (v - 1) / 2);
    if (cap < v) continue;
    const std::size_t e = std::uniform_int_distribution<std::size_t>(v, cap)(rng);
    return incidence(random_connected_graph(rng, v, e));
  }
}

inline zetacone::ParityCheckMatrix dense(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits) {
  return zetacone::ParityCheckMatrix(rows, cols, std::move(bits));
}

inline zetacone::ParityCheckMatrix code_a() { return dense(2, 4, {1, 1, 1, 0, 0, 1, 1, 1}); }

inline zetacone::ParityCheckMatrix code_b() {
  return dense(6, 7, {1, 1, 0, 0, 0, 0, 0,  //
                      0, 1, 1, 1, 0, 0, 0,  //
                      1, 0, 1, 0, 0, 0, 0,  //
                      0, 0, 0, 1, 1, 0, 1,  //
                      0, 0, 0, 0, 1, 1, 0,  //
                      0, 0, 0, 0, 0, 1, 1});
}

}  // namespace testsupport

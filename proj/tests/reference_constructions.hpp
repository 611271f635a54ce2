#pragma once

// Hand-rolled reference graphs and symmetry generators used as independent
// oracles across the test suites.  Deliberately separate from the library's
// own family constructions.

#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "ssg/bigraph.hpp"
#include "ssg/permutation.hpp"

namespace refc {

inline ssg::BipartiteGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int w = 0; w < a; ++w)
    for (int u = 0; u < b; ++u) e.emplace_back(w, u);
  return ssg::BipartiteGraph(a, b, e);
}

/// Cycle of length 2k as a bipartite graph with parts k/k.
inline ssg::BipartiteGraph even_cycle(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, i);
    e.emplace_back(i, (i + 1) % k);
  }
  return ssg::BipartiteGraph(k, k, e);
}

/// Point-plane incidence over GF(3)^3 with the three coordinate plane
/// bundles: W = 27 points (index 9a+3b+c), U = 9 planes (index 3i+v for the
/// plane "coordinate i equals v"), point ~ plane iff it lies on it.
inline ssg::BipartiteGraph sigma3_reference() {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        int pt = 9 * a + 3 * b + c;
        int v[3] = {a, b, c};
        for (int i = 0; i < 3; ++i) e.emplace_back(pt, 3 * i + v[i]);
      }
  return ssg::BipartiteGraph(27, 9, e);
}

/// Monomial symmetries of sigma3_reference() on the combined 36-point
/// domain: coordinate rotation and swap, plus value shift and scale in
/// coordinate 0.  Together they generate a group of order 1296.
inline std::vector<ssg::Permutation> sigma3_monomial_gens() {
  auto build = [](auto&& point_map, auto&& plane_map) {
    std::vector<int> img(36);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          auto [x, y, z] = point_map(a, b, c);
          img[9 * a + 3 * b + c] = 9 * x + 3 * y + z;
        }
    for (int i = 0; i < 3; ++i)
      for (int v = 0; v < 3; ++v) {
        auto [j, w] = plane_map(i, v);
        img[27 + 3 * i + v] = 27 + 3 * j + w;
      }
    return ssg::Permutation(img);
  };
  using T3 = std::tuple<int, int, int>;
  using T2 = std::pair<int, int>;
  std::vector<ssg::Permutation> gens;
  gens.push_back(build([](int a, int b, int c) { return T3{c, a, b}; },
                       [](int i, int v) { return T2{(i + 1) % 3, v}; }));
  gens.push_back(build([](int a, int b, int c) { return T3{b, a, c}; },
                       [](int i, int v) { return T2{i < 2 ? 1 - i : 2, v}; }));
  gens.push_back(build([](int a, int b, int c) { return T3{(a + 1) % 3, b, c}; },
                       [](int i, int v) { return T2{i, i == 0 ? (v + 1) % 3 : v}; }));
  gens.push_back(build([](int a, int b, int c) { return T3{(2 * a) % 3, b, c}; },
                       [](int i, int v) { return T2{i, i == 0 ? (2 * v) % 3 : v}; }));
  return gens;
}

/// Lift an automorphism of a graph with U-part nu to its p-fold expansion,
/// acting trivially on fiber indices.
inline ssg::Permutation lift_fiber_trivial(const ssg::Permutation& g, int n_w, int n_u, int p) {
  std::vector<int> img(n_w + n_u * p);
  for (int w = 0; w < n_w; ++w) img[w] = g(w);
  for (int u = 0; u < n_u; ++u)
    for (int i = 0; i < p; ++i) img[n_w + p * u + i] = n_w + p * (g(n_w + u) - n_w) + i;
  return ssg::Permutation(img);
}

/// Permutation applying `images` inside the fiber of u = fiber, fixing the
/// rest of the expanded domain.
inline ssg::Permutation fiber_symmetry(int n_w, int n_u, int p, int fiber, const std::vector<int>& images) {
  std::vector<int> img(n_w + n_u * p);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p; ++i) img[n_w + p * fiber + i] = n_w + p * fiber + images[i];
  return ssg::Permutation(img);
}

/// Edge-transitive witness for the 3-fold expansion of sigma3_reference():
/// lifted monomial maps plus the symmetric group on one fiber.
inline std::vector<ssg::Permutation> gamma9_witness_gens() {
  std::vector<ssg::Permutation> gens;
  for (const auto& g : sigma3_monomial_gens()) gens.push_back(lift_fiber_trivial(g, 27, 9, 3));
  gens.push_back(fiber_symmetry(27, 9, 3, 0, {1, 2, 0}));
  gens.push_back(fiber_symmetry(27, 9, 3, 0, {1, 0, 2}));
  return gens;
}

inline ssg::BipartiteGraph random_bigraph(int nw, int nu, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> e;
  for (int w = 0; w < nw; ++w)
    for (int u = 0; u < nu; ++u)
      if (coin(rng)) e.emplace_back(w, u);
  return ssg::BipartiteGraph(nw, nu, e);
}

inline ssg::BipartiteGraph relabel(const ssg::BipartiteGraph& g, std::mt19937& rng) {
  std::vector<int> pw(g.n_w), pu(g.n_u);
  std::iota(pw.begin(), pw.end(), 0);
  std::iota(pu.begin(), pu.end(), 0);
  std::shuffle(pw.begin(), pw.end(), rng);
  std::shuffle(pu.begin(), pu.end(), rng);
  std::vector<std::pair<int, int>> e;
  for (int w = 0; w < g.n_w; ++w)
    for (int u : g.adj[w]) e.emplace_back(pw[w], pu[u]);
  return ssg::BipartiteGraph(g.n_w, g.n_u, e);
}

}  // namespace refc

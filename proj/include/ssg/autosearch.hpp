#pragma once

// Automorphism groups and canonical forms of vertex-colored graphs via
// individualization-refinement search, plus semisymmetry verdicts for
// bipartite graphs.
//
// The search is deterministic: the branch cell is the first smallest
// non-singleton cell, targets are taken in ascending order, and refinement
// processes cells in partition order.  Canonical form is the leaf maximizing
// (refinement trace, relabeled edge list); automorphisms are harvested from
// leaves with equal invariants and verified before use.

#include <cstdint>
#include <deque>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssg/bigraph.hpp"
#include "ssg/perm_group.hpp"

namespace ssg {

struct search_bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Graph with an initial vertex coloring constraining the automorphisms.
struct ColoredGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::vector<int> color;             // color[v] >= 0

  /// Combined domain: W vertices first, then U at offset n_w.  Equal parts
  /// get a single color (part-swapping maps stay visible); unequal parts are
  /// colored separately.
  static ColoredGraph from_bigraph(const BipartiteGraph& g) {
    return from_bigraph(g, g.n_w == g.n_u);
  }

  static ColoredGraph from_bigraph(const BipartiteGraph& g, bool single_color) {
    ColoredGraph c;
    c.n = g.n_w + g.n_u;
    c.adj.assign(c.n, {});
    for (int w = 0; w < g.n_w; ++w)
      for (int u : g.adj[w]) {
        c.adj[w].push_back(g.n_w + u);
        c.adj[g.n_w + u].push_back(w);
      }
    for (auto& nb : c.adj) std::sort(nb.begin(), nb.end());
    c.color.assign(c.n, 0);
    if (!single_color)
      for (int u = 0; u < g.n_u; ++u) c.color[g.n_w + u] = 1;
    return c;
  }

  /// Initial partition: one sorted cell per color, in ascending color order.
  std::vector<std::vector<int>> color_cells() const {
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) {
      if (color[v] < 0) throw std::invalid_argument("colored graph: negative color");
      by_color[color[v]].push_back(v);
    }
    std::vector<std::vector<int>> cells;
    for (auto& [c, vs] : by_color) cells.push_back(std::move(vs));
    return cells;
  }
};

struct AutResult {
  std::vector<Permutation> generators;     // each verified to preserve edges and colors
  BigInt order;
  std::vector<std::vector<int>> orbits;    // vertex orbits, ordered by smallest member
};

struct CanonicalForm {
  std::vector<int> labeling;                  // labeling[v] = canonical position of v
  std::vector<int> color_sizes;               // initial cell sizes, in cell order
  std::vector<std::pair<int, int>> edges;     // canonically relabeled, (min,max), sorted
  std::string digest_hex;

  bool operator==(const CanonicalForm& o) const {
    return color_sizes == o.color_sizes && edges == o.edges;
  }
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
};

namespace detail_aut {

inline uint64_t trace_mix(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h == UINT64_MAX ? UINT64_MAX - 1 : h;
}

/// -1 / 0 / +1 comparison of full traces; a trace that ends earlier is
/// greater at the point of divergence (a leaf outranks any continuation).
inline int compare_traces(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? 1 : -1;
}

struct Searcher {
  const ColoredGraph& g;
  int n;
  int words;
  std::vector<uint64_t> bits;  // adjacency masks, row v at bits[v*words]

  bool have_zeta = false;
  std::vector<uint64_t> zeta_trace;
  std::vector<int> zeta_order;
  std::vector<std::pair<int, int>> zeta_cert;
  std::vector<int> zeta_prefix;       // individualized vertices along the zeta path
  std::vector<uint64_t> rho_trace;
  std::vector<int> rho_order;
  std::vector<std::pair<int, int>> rho_cert;
  std::vector<int> rho_prefix;        // individualized vertices along the rho path

  std::vector<Permutation> gens;
  std::vector<int> prefix;            // individualized vertices on the current path
  std::vector<uint64_t> cur_trace;    // node invariants on the current path
  int unwind_to = -1;                 // backjump target level after an automorphism

  explicit Searcher(const ColoredGraph& graph)
      : g(graph), n(graph.n), words((graph.n + 63) / 64), bits(static_cast<std::size_t>(graph.n) * words, 0) {
    for (int v = 0; v < n; ++v)
      for (int w : g.adj[v]) bits[static_cast<std::size_t>(v) * words + w / 64] |= 1ULL << (w % 64);
  }

  bool adjacent(int v, int w) const {
    return (bits[static_cast<std::size_t>(v) * words + w / 64] >> (w % 64)) & 1;
  }

  int count_into(int v, const std::vector<uint64_t>& mask) const {
    int c = 0;
    for (int k = 0; k < words; ++k)
      c += __builtin_popcountll(bits[static_cast<std::size_t>(v) * words + k] & mask[k]);
    return c;
  }

  /// Equitable refinement; splits are mixed into the trace value h.  Cells
  /// live in a stable-id store so queued splitter ids survive other splits;
  /// counts come from one adjacency-list sweep per splitter.
  void refine(std::vector<std::vector<int>>& cells, uint64_t& h) const {
    std::vector<std::vector<int>> store(cells.begin(), cells.end());
    std::vector<int> order(store.size());      // stable ids in partition order
    std::vector<int> pos(store.size());        // id -> position in `order`
    std::vector<int> cell_of(n);
    for (std::size_t k = 0; k < store.size(); ++k) {
      order[k] = static_cast<int>(k);
      pos[k] = static_cast<int>(k);
      for (int v : store[k]) cell_of[v] = static_cast<int>(k);
    }
    std::deque<int> queue(order.begin(), order.end());
    std::vector<char> inqueue(store.size(), 1);
    std::vector<int> cnt(n, 0);
    std::vector<std::pair<int, int>> members;  // (count, vertex) per split cell
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      inqueue[s] = 0;
      std::vector<int> splitter = store[s];  // s itself may split below
      std::vector<int> touched;
      for (int v : splitter)
        for (int w : g.adj[v]) {
          if (cnt[w]++ == 0 && store[cell_of[w]].size() > 1) {
            int c = cell_of[w];
            bool seen = false;
            for (int t : touched)
              if (t == c) {
                seen = true;
                break;
              }
            if (!seen) touched.push_back(c);
          }
        }
      std::sort(touched.begin(), touched.end(), [&](int a, int b) { return pos[a] < pos[b]; });
      for (int c : touched) {
        members.clear();
        bool uniform = true;
        for (int v : store[c]) {
          members.emplace_back(cnt[v], v);
          if (members.front().first != members.back().first) uniform = false;
        }
        if (uniform) continue;
        std::stable_sort(members.begin(), members.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::vector<int>> frags;
        for (std::size_t i = 0; i < members.size();) {
          std::size_t j = i;
          while (j < members.size() && members[j].first == members[i].first) ++j;
          std::vector<int> frag;
          frag.reserve(j - i);
          for (std::size_t k = i; k < j; ++k) frag.push_back(members[k].second);
          frags.push_back(std::move(frag));
          i = j;
        }
        h = trace_mix(h, static_cast<uint64_t>(pos[c]));
        h = trace_mix(h, frags.size());
        for (std::size_t k = 0; k < frags.size(); ++k) {
          h = trace_mix(h, static_cast<uint64_t>(cnt[frags[k][0]]));
          h = trace_mix(h, frags[k].size());
        }
        // Fragment 0 reuses id c (keeping any queued reference pointing at a
        // genuine fragment); the rest get fresh ids spliced in after it.
        store[c] = std::move(frags[0]);
        std::vector<int> new_ids;
        for (std::size_t k = 1; k < frags.size(); ++k) {
          int id = static_cast<int>(store.size());
          for (int v : frags[k]) cell_of[v] = id;
          store.push_back(std::move(frags[k]));
          pos.push_back(0);
          inqueue.push_back(0);
          new_ids.push_back(id);
        }
        order.insert(order.begin() + pos[c] + 1, new_ids.begin(), new_ids.end());
        for (std::size_t k = pos[c] + 1; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
        if (!inqueue[c]) {
          queue.push_back(c);
          inqueue[c] = 1;
        }
        for (int id : new_ids) {
          queue.push_back(id);
          inqueue[id] = 1;
        }
      }
      for (int v : splitter)
        for (int w : g.adj[v]) cnt[w] = 0;
    }
    cells.clear();
    cells.reserve(order.size());
    for (int id : order) cells.push_back(std::move(store[id]));
  }

  static int target_cell(const std::vector<std::vector<int>>& cells) {
    int best = -1;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() < 2) continue;
      if (best < 0 || cells[i].size() < best_size) {
        best = static_cast<int>(i);
        best_size = cells[i].size();
      }
    }
    return best;
  }

  std::vector<std::pair<int, int>> certificate(const std::vector<int>& order) const {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::pair<int, int>> cert;
    for (int v = 0; v < n; ++v)
      for (int w : g.adj[v])
        if (pos[v] < pos[w]) cert.emplace_back(pos[v], pos[w]);
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  bool record_automorphism(const std::vector<int>& from_order, const std::vector<int>& to_order) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[from_order[i]] = to_order[i];
    Permutation p(std::move(img));
    if (p.is_identity()) return false;
    for (int v = 0; v < n; ++v) {
      if (g.color[v] != g.color[p(v)]) return false;
      for (int w : g.adj[v])
        if (!adjacent(p(v), p(w))) return false;
    }
    gens.push_back(std::move(p));
    return true;
  }

  /// First path level where the two individualization prefixes differ.
  static int divergence_level(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i)
      if (a[i] != b[i]) return static_cast<int>(i);
    return static_cast<int>(m);
  }

  void handle_leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> order;
    order.reserve(n);
    for (const auto& c : cells) order.push_back(c.front());
    auto cert = certificate(order);
    if (!have_zeta) {
      have_zeta = true;
      zeta_trace = cur_trace;
      zeta_order = order;
      zeta_cert = cert;
      zeta_prefix = prefix;
      rho_trace = cur_trace;
      rho_order = order;
      rho_cert = cert;
      rho_prefix = prefix;
      return;
    }
    if (compare_traces(cur_trace, zeta_trace) == 0 && cert == zeta_cert) {
      // The subtree holding this leaf maps onto zeta's under the recorded
      // automorphism, so everything below the divergence point is redundant.
      if (record_automorphism(zeta_order, order))
        unwind_to = divergence_level(prefix, zeta_prefix);
      return;  // equal to zeta implies <= rho, so no replacement is possible
    }
    int c = compare_traces(cur_trace, rho_trace);
    if (c == 0 && cert == rho_cert) {
      if (record_automorphism(rho_order, order))
        unwind_to = divergence_level(prefix, rho_prefix);
      return;
    }
    if (c > 0 || (c == 0 && cert > rho_cert)) {
      rho_trace = cur_trace;
      rho_order = order;
      rho_cert = cert;
      rho_prefix = prefix;
    }
  }

  /// eq_zeta: path trace equals zeta's prefix; cmp_rho: -1/0/+1 versus rho's
  /// prefix at the first divergence (stale values only weaken pruning).
  void recurse(const std::vector<std::vector<int>>& cells, bool eq_zeta, int cmp_rho) {
    int t = target_cell(cells);
    if (t < 0) {
      handle_leaf(cells);
      return;
    }
    std::vector<int> explored;
    std::vector<int> orbit_root;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);  // gens count the roots reflect
    for (int v : cells[t]) {
      // Orbit pruning: skip targets equivalent to an explored one under the
      // automorphisms found so far that fix the individualized prefix.  The
      // orbit partition is reused across candidates until gens grows.
      if (!explored.empty()) {
        if (orbit_gens != gens.size()) {
          std::vector<int> uf(n);
          for (int i = 0; i < n; ++i) uf[i] = i;
          std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
          for (const auto& a : gens) {
            bool fixes = true;
            for (int b : prefix)
              if (a(b) != b) {
                fixes = false;
                break;
              }
            if (!fixes) continue;
            for (int i = 0; i < n; ++i) {
              int ra = find(i), rb = find(a(i));
              if (ra != rb) uf[std::max(ra, rb)] = std::min(ra, rb);
            }
          }
          orbit_root.resize(n);
          for (int i = 0; i < n; ++i) orbit_root[i] = find(i);
          orbit_gens = gens.size();
        }
        bool skip = false;
        for (int u : explored)
          if (orbit_root[u] == orbit_root[v]) {
            skip = true;
            break;
          }
        if (skip) continue;
      }

      std::vector<std::vector<int>> child = cells;
      std::vector<int> rest;
      rest.reserve(child[t].size() - 1);
      for (int u : child[t])
        if (u != v) rest.push_back(u);
      child[t] = {v};
      child.insert(child.begin() + t + 1, std::move(rest));

      uint64_t h = trace_mix(cur_trace.back(), static_cast<uint64_t>(t));
      refine(child, h);

      cur_trace.push_back(h);
      prefix.push_back(v);
      std::size_t level = cur_trace.size() - 1;
      bool child_eq_zeta = eq_zeta && level < zeta_trace.size() && h == zeta_trace[level];
      int child_cmp = cmp_rho;
      if (have_zeta && child_cmp == 0) {
        if (level >= rho_trace.size())
          child_cmp = -1;  // rho reached a leaf above this depth
        else if (h != rho_trace[level])
          child_cmp = h > rho_trace[level] ? 1 : -1;
      }
      if (!have_zeta || child_eq_zeta || child_cmp >= 0) recurse(child, child_eq_zeta, child_cmp);
      prefix.pop_back();
      cur_trace.pop_back();
      explored.push_back(v);
      if (unwind_to >= 0) {
        // A recorded automorphism proved the remainder of some enclosing
        // subtree redundant; pop back out to the level where the paths split.
        if (unwind_to < static_cast<int>(prefix.size())) return;
        unwind_to = -1;  // this node hosts the split: keep scanning siblings
      }
    }
  }

  void run() {
    auto cells = g.color_cells();
    uint64_t h = 1469598103934665603ULL;
    h = trace_mix(h, cells.size());
    for (const auto& c : cells) h = trace_mix(h, c.size());
    refine(cells, h);
    cur_trace.push_back(h);
    recurse(cells, true, 0);
  }
};

}  // namespace detail_aut

/// Equitable refinement of an explicit partition: every refined cell has a
/// uniform neighbor count into every refined cell.  Cells keep their order;
/// fragments are ordered by ascending neighbor count.
inline std::vector<std::vector<int>> refine_partition(const ColoredGraph& g,
                                                      std::vector<std::vector<int>> cells) {
  std::vector<char> seen(g.n, 0);
  int covered = 0;
  for (auto& c : cells)
    for (int v : c) {
      if (v < 0 || v >= g.n || seen[v]) throw std::invalid_argument("refine: not a partition");
      seen[v] = 1;
      ++covered;
    }
  if (covered != g.n) throw std::invalid_argument("refine: cells must cover all vertices");
  detail_aut::Searcher s(g);
  uint64_t h = 0;
  s.refine(cells, h);
  return cells;
}

namespace detail_aut {

struct SearchOutput {
  AutResult aut;
  CanonicalForm canon;
};

inline SearchOutput run_search(const ColoredGraph& g, int max_vertices) {
  if (g.n > max_vertices)
    throw search_bound_error("automorphism search bound exceeded: " + std::to_string(g.n) + " vertices, bound " +
                             std::to_string(max_vertices));
  Searcher s(g);
  s.run();

  SearchOutput out;
  PermGroup group(g.n, s.gens);
  out.aut.generators = std::move(s.gens);
  out.aut.order = group.order();
  out.aut.orbits = group.orbits();

  std::vector<int> lab(g.n);
  for (int i = 0; i < g.n; ++i) lab[s.rho_order[i]] = i;
  out.canon.labeling = std::move(lab);
  for (const auto& c : g.color_cells()) out.canon.color_sizes.push_back(static_cast<int>(c.size()));
  out.canon.edges = std::move(s.rho_cert);

  uint64_t d = 1469598103934665603ULL;
  auto mix = [&d](uint64_t x) { d = (d ^ x) * 1099511628211ULL; };
  mix(static_cast<uint64_t>(g.n));
  for (int c : out.canon.color_sizes) mix(static_cast<uint64_t>(c));
  for (auto [a, b] : out.canon.edges) {
    mix(static_cast<uint64_t>(a));
    mix(static_cast<uint64_t>(b));
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << d;
  out.canon.digest_hex = os.str();
  return out;
}

}  // namespace detail_aut

inline AutResult automorphism_group(const ColoredGraph& g, int max_vertices = 256) {
  return detail_aut::run_search(g, max_vertices).aut;
}

inline CanonicalForm canonical_form(const ColoredGraph& g, int max_vertices = 256) {
  return detail_aut::run_search(g, max_vertices).canon;
}

/// True iff the permutation of the combined domain maps edges onto edges.
inline bool is_graph_automorphism(const BipartiteGraph& g, const Permutation& p) {
  if (p.degree() != g.n_w + g.n_u) return false;
  int m = 0;
  for (int w = 0; w < g.n_w; ++w)
    for (int u : g.adj[w]) {
      int a = p(w), b = p(g.n_w + u);
      if (a > b) std::swap(a, b);
      if (a >= g.n_w || b < g.n_w || !g.has_edge(a, b - g.n_w)) return false;
      ++m;
    }
  return true;
}

/// Number of orbits of <gens> on the edge set (0 for an empty graph).
inline int edge_orbit_count(const BipartiteGraph& g, const std::vector<Permutation>& gens) {
  auto edges = g.edges();
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i)
    index[{edges[i].first, g.n_w + edges[i].second}] = static_cast<int>(i);
  std::vector<char> visited(edges.size(), 0);
  int orbits = 0;
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (visited[start]) continue;
    ++orbits;
    std::vector<int> stack = {static_cast<int>(start)};
    visited[start] = 1;
    while (!stack.empty()) {
      auto [ev, eu] = edges[stack.back()];
      int a0 = ev, b0 = g.n_w + eu;
      stack.pop_back();
      for (const auto& p : gens) {
        int a = p(a0), b = p(b0);
        if (a > b) std::swap(a, b);
        auto it = index.find({a, b});
        if (it == index.end()) throw std::invalid_argument("edge orbit: generator is not an automorphism");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

inline bool is_edge_transitive(const BipartiteGraph& g, const std::vector<Permutation>& gens) {
  return edge_orbit_count(g, gens) <= 1;
}

/// Full-mode vertex transitivity.  Unequal parts can never be one orbit.
inline bool is_vertex_transitive(const BipartiteGraph& g, int max_vertices = 256) {
  if (g.n_w != g.n_u) return false;
  if (g.n_w == 0) return true;
  auto aut = automorphism_group(ColoredGraph::from_bigraph(g, true), max_vertices);
  return aut.orbits.size() == 1;
}

struct SemisymVerdict {
  enum class Tri { yes, no, unknown };

  bool regular = false;
  Tri edge_transitive = Tri::unknown;
  Tri vertex_transitive = Tri::unknown;
  Tri semisymmetric = Tri::unknown;
  std::string edge_mode;    // "full-aut" or "supplied-group"
  std::string vertex_mode;  // "full-aut" or "twin-certificate"
  std::string certificate;  // human-readable justification

  bool decided() const { return semisymmetric != Tri::unknown; }
  bool is_semisymmetric() const { return semisymmetric == Tri::yes; }
};

enum class SemisymMode { full, certificate };

inline SemisymVerdict semisymmetry_full(const BipartiteGraph& g, int max_vertices = 256) {
  SemisymVerdict v;
  v.regular = is_regular(g);
  auto aut = automorphism_group(ColoredGraph::from_bigraph(g), max_vertices);
  bool et = is_edge_transitive(g, aut.generators);
  bool vt = g.n_w == g.n_u && aut.orbits.size() <= 1;
  v.edge_transitive = et ? SemisymVerdict::Tri::yes : SemisymVerdict::Tri::no;
  v.vertex_transitive = vt ? SemisymVerdict::Tri::yes : SemisymVerdict::Tri::no;
  v.edge_mode = "full-aut";
  v.vertex_mode = "full-aut";
  bool ss = v.regular && et && !vt;
  v.semisymmetric = ss ? SemisymVerdict::Tri::yes : SemisymVerdict::Tri::no;
  std::ostringstream os;
  os << "full automorphism group of order " << aut.order << ": regular=" << (v.regular ? "yes" : "no")
     << ", edge-transitive=" << (et ? "yes" : "no") << ", vertex-transitive=" << (vt ? "yes" : "no");
  v.certificate = os.str();
  return v;
}

/// Certificate mode: edge-transitivity from a supplied automorphism group,
/// non-vertex-transitivity from twin asymmetry (a twin pair on exactly one
/// side).  Anything the certificates cannot settle stays unknown.
inline SemisymVerdict semisymmetry_certificate(const BipartiteGraph& g, const std::vector<Permutation>& witness) {
  SemisymVerdict v;
  v.regular = is_regular(g);
  if (!v.regular) {
    v.semisymmetric = SemisymVerdict::Tri::no;
    v.certificate = "not regular: part degrees differ or parts have different sizes";
    return v;
  }
  for (const auto& p : witness)
    if (!is_graph_automorphism(g, p))
      throw std::invalid_argument("semisymmetry: witness generator is not an automorphism");
  bool et = is_edge_transitive(g, witness);
  v.edge_mode = "supplied-group";
  v.edge_transitive = et ? SemisymVerdict::Tri::yes : SemisymVerdict::Tri::unknown;
  if (!et) {
    v.certificate = "witness group is not transitive on edges; edge-transitivity undecided";
    return v;
  }
  bool tw = has_twins(g, VertexPartition::Side::W);
  bool tu = has_twins(g, VertexPartition::Side::U);
  if (tw == tu) {
    v.certificate = tw ? "both sides contain twin pairs; twin certificate inconclusive"
                       : "both sides are twin-free; twin certificate inconclusive";
    return v;
  }
  v.vertex_transitive = SemisymVerdict::Tri::no;
  v.vertex_mode = "twin-certificate";
  v.semisymmetric = SemisymVerdict::Tri::yes;
  std::ostringstream os;
  os << "regular of degree " << (g.n_w ? static_cast<int>(g.adj[0].size()) : 0)
     << "; witness group transitive on all " << g.edge_count() << " edges; side " << (tu ? "U" : "W")
     << " has twin pairs while side " << (tu ? "W" : "U") << " is twin-free, so no automorphism crosses sides";
  v.certificate = os.str();
  return v;
}

inline SemisymVerdict semisymmetry(const BipartiteGraph& g, SemisymMode mode,
                                   const std::vector<Permutation>& witness = {}, int max_vertices = 256) {
  if (mode == SemisymMode::full) return semisymmetry_full(g, max_vertices);
  return semisymmetry_certificate(g, witness);
}

/// Isomorphism of bipartite graphs as abstract graphs: part swaps allowed
/// (either via a single-color search when parts are equal, or by comparing
/// against the transpose when the sizes only match crosswise).
inline bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b, int max_vertices = 256) {
  if (a.n_w == b.n_w && a.n_u == b.n_u) {
    return canonical_form(ColoredGraph::from_bigraph(a), max_vertices) ==
           canonical_form(ColoredGraph::from_bigraph(b), max_vertices);
  }
  if (a.n_w == b.n_u && a.n_u == b.n_w) {
    return canonical_form(ColoredGraph::from_bigraph(a), max_vertices) ==
           canonical_form(ColoredGraph::from_bigraph(transposed(b)), max_vertices);
  }
  return false;
}

}  // namespace ssg

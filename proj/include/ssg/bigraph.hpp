#pragma once

// Finite bipartite graphs with an explicit (W, U) bipartition, the quotient
// and expansion constructions, bi-complement, same-neighborhood (twin)
// classes, and the "ssg-bipartite 1" text format.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssg {

struct BipartiteGraph {
  int n_w = 0;
  int n_u = 0;
  std::vector<std::vector<int>> adj;  // adj[w] = sorted u-indices

  BipartiteGraph() = default;
  BipartiteGraph(int nw, int nu, const std::vector<std::pair<int, int>>& edges) : n_w(nw), n_u(nu) {
    if (nw < 0 || nu < 0) throw std::invalid_argument("bigraph: negative part size");
    adj.assign(nw, {});
    for (auto [w, u] : edges) {
      if (w < 0 || w >= nw || u < 0 || u >= nu) throw std::invalid_argument("bigraph: edge endpoint out of range");
      adj[w].push_back(u);
    }
    for (auto& nb : adj) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
        throw std::invalid_argument("bigraph: duplicate edge");
    }
  }

  int edge_count() const {
    int m = 0;
    for (const auto& nb : adj) m += static_cast<int>(nb.size());
    return m;
  }

  bool has_edge(int w, int u) const {
    const auto& nb = adj[w];
    return std::binary_search(nb.begin(), nb.end(), u);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int w = 0; w < n_w; ++w)
      for (int u : adj[w]) out.emplace_back(w, u);
    return out;
  }

  bool operator==(const BipartiteGraph& o) const { return n_w == o.n_w && n_u == o.n_u && adj == o.adj; }
  bool operator!=(const BipartiteGraph& o) const { return !(*this == o); }
};

inline std::vector<std::vector<int>> u_adjacency(const BipartiteGraph& g) {
  std::vector<std::vector<int>> ua(g.n_u);
  for (int w = 0; w < g.n_w; ++w)
    for (int u : g.adj[w]) ua[u].push_back(w);
  return ua;
}

inline std::vector<int> degrees_w(const BipartiteGraph& g) {
  std::vector<int> d(g.n_w);
  for (int w = 0; w < g.n_w; ++w) d[w] = static_cast<int>(g.adj[w].size());
  return d;
}

inline std::vector<int> degrees_u(const BipartiteGraph& g) {
  std::vector<int> d(g.n_u, 0);
  for (int w = 0; w < g.n_w; ++w)
    for (int u : g.adj[w]) ++d[u];
  return d;
}

/// Same degree within each part.
inline bool is_biregular(const BipartiteGraph& g) {
  auto dw = degrees_w(g), du = degrees_u(g);
  for (int d : dw)
    if (d != dw[0]) return false;
  for (int d : du)
    if (d != du[0]) return false;
  return true;
}

/// Equal parts and one common degree on both sides.
inline bool is_regular(const BipartiteGraph& g) {
  if (g.n_w != g.n_u) return false;
  if (!is_biregular(g)) return false;
  return g.n_w == 0 || degrees_w(g)[0] == degrees_u(g)[0];
}

inline BipartiteGraph transposed(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> e;
  for (int w = 0; w < g.n_w; ++w)
    for (int u : g.adj[w]) e.emplace_back(u, w);
  return BipartiteGraph(g.n_u, g.n_w, e);
}

inline bool is_connected(const BipartiteGraph& g) {
  int n = g.n_w + g.n_u;
  if (n <= 1) return true;
  auto ua = u_adjacency(g);
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v < g.n_w) {
      for (int u : g.adj[v])
        if (!seen[g.n_w + u]) {
          seen[g.n_w + u] = 1;
          ++visited;
          stack.push_back(g.n_w + u);
        }
    } else {
      for (int w : ua[v - g.n_w])
        if (!seen[w]) {
          seen[w] = 1;
          ++visited;
          stack.push_back(w);
        }
    }
  }
  return visited == n;
}

/// Partition of one side of a bipartition; cells are sorted internally and
/// ordered by smallest member.
struct VertexPartition {
  enum class Side { W, U };
  Side side = Side::W;
  std::vector<std::vector<int>> cells;

  static VertexPartition make(Side side, std::vector<std::vector<int>> cells, int n) {
    for (auto& c : cells) {
      if (c.empty()) throw std::invalid_argument("partition: empty cell");
      std::sort(c.begin(), c.end());
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (int v : cells[i]) {
        if (v < 0 || v >= n || owner[v] != -1)
          throw std::invalid_argument("partition: cells must be disjoint and in range");
        owner[v] = static_cast<int>(i);
      }
    }
    for (int v = 0; v < n; ++v)
      if (owner[v] == -1) throw std::invalid_argument("partition: cells must cover the side");
    VertexPartition p;
    p.side = side;
    p.cells = std::move(cells);
    return p;
  }

  static VertexPartition singletons(Side side, int n) {
    std::vector<std::vector<int>> cells(n);
    for (int i = 0; i < n; ++i) cells[i] = {i};
    VertexPartition p;
    p.side = side;
    p.cells = std::move(cells);
    return p;
  }

  std::vector<int> cell_of(int n) const {
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (int v : cells[i]) owner[v] = static_cast<int>(i);
    return owner;
  }
};

/// Quotient graph: cells are adjacent iff some cross edge joins them.
/// Cell indices follow the smallest-member order of the partitions.
inline BipartiteGraph quotient(const BipartiteGraph& g, const VertexPartition& pw, const VertexPartition& pu) {
  if (pw.side != VertexPartition::Side::W || pu.side != VertexPartition::Side::U)
    throw std::invalid_argument("quotient: need a W-partition and a U-partition");
  VertexPartition w_norm = VertexPartition::make(pw.side, pw.cells, g.n_w);
  VertexPartition u_norm = VertexPartition::make(pu.side, pu.cells, g.n_u);
  auto wc = w_norm.cell_of(g.n_w);
  auto uc = u_norm.cell_of(g.n_u);
  std::vector<std::pair<int, int>> e;
  for (int w = 0; w < g.n_w; ++w)
    for (int u : g.adj[w]) e.emplace_back(wc[w], uc[u]);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return BipartiteGraph(static_cast<int>(w_norm.cells.size()), static_cast<int>(u_norm.cells.size()), e);
}

/// Expansion: replace every u by p twin copies (u, i), indexed p*u + i.
inline BipartiteGraph expand(const BipartiteGraph& g, int p) {
  if (p < 1) throw std::invalid_argument("expand: multiplicity must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int w = 0; w < g.n_w; ++w)
    for (int u : g.adj[w])
      for (int i = 0; i < p; ++i) e.emplace_back(w, p * u + i);
  return BipartiteGraph(g.n_w, g.n_u * p, e);
}

/// Complement within the bipartite incidence: {w,u} is an edge iff it is not
/// one in g.
inline BipartiteGraph bicomplement(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> e;
  for (int w = 0; w < g.n_w; ++w)
    for (int u = 0; u < g.n_u; ++u)
      if (!g.has_edge(w, u)) e.emplace_back(w, u);
  return BipartiteGraph(g.n_w, g.n_u, e);
}

/// Same-neighborhood classes on one side.
inline VertexPartition twin_classes(const BipartiteGraph& g, VertexPartition::Side side) {
  int n = side == VertexPartition::Side::W ? g.n_w : g.n_u;
  std::map<std::vector<int>, std::vector<int>> groups;
  if (side == VertexPartition::Side::W) {
    for (int w = 0; w < g.n_w; ++w) groups[g.adj[w]].push_back(w);
  } else {
    auto ua = u_adjacency(g);
    for (int u = 0; u < g.n_u; ++u) groups[ua[u]].push_back(u);
  }
  std::vector<std::vector<int>> cells;
  for (auto& [key, members] : groups) cells.push_back(members);
  return VertexPartition::make(side, std::move(cells), n);
}

inline bool has_twins(const BipartiteGraph& g, VertexPartition::Side side) {
  int n = side == VertexPartition::Side::W ? g.n_w : g.n_u;
  return static_cast<int>(twin_classes(g, side).cells.size()) < n;
}

// ---- text format, version 1 ----
//
//   ssg-bipartite 1
//   parts <n_w> <n_u>
//   edges <m>
//   <w> <u>        (m lines, sorted lexicographically)

inline std::string write_bigraph(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "ssg-bipartite 1\n";
  os << "parts " << g.n_w << ' ' << g.n_u << '\n';
  os << "edges " << g.edge_count() << '\n';
  for (int w = 0; w < g.n_w; ++w)
    for (int u : g.adj[w]) os << w << ' ' << u << '\n';
  return os.str();
}

inline BipartiteGraph parse_bigraph(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(is, line)) throw std::invalid_argument(std::string("bigraph parse: missing ") + what);
    return line;
  };
  if (next_line("header") != "ssg-bipartite 1")
    throw std::invalid_argument("bigraph parse: bad header, expected 'ssg-bipartite 1'");
  long nw = -1, nu = -1, m = -1;
  {
    std::istringstream ls(next_line("parts line"));
    std::string kw;
    if (!(ls >> kw >> nw >> nu) || kw != "parts" || nw < 0 || nu < 0 || (ls >> kw))
      throw std::invalid_argument("bigraph parse: bad parts line");
  }
  {
    std::istringstream ls(next_line("edges line"));
    std::string kw;
    if (!(ls >> kw >> m) || kw != "edges" || m < 0 || (ls >> kw))
      throw std::invalid_argument("bigraph parse: bad edges line");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    std::istringstream ls(next_line("edge line"));
    long w, u;
    std::string extra;
    if (!(ls >> w >> u) || (ls >> extra)) throw std::invalid_argument("bigraph parse: bad edge line");
    if (w < 0 || w >= nw || u < 0 || u >= nu) throw std::invalid_argument("bigraph parse: edge endpoint out of range");
    if (!edges.empty() && !(edges.back() < std::make_pair(static_cast<int>(w), static_cast<int>(u))))
      throw std::invalid_argument("bigraph parse: edges must be sorted and distinct");
    edges.emplace_back(static_cast<int>(w), static_cast<int>(u));
  }
  std::string rest;
  while (std::getline(is, rest))
    if (!rest.empty()) throw std::invalid_argument("bigraph parse: trailing content");
  return BipartiteGraph(static_cast<int>(nw), static_cast<int>(nu), edges);
}

}  // namespace ssg

#pragma once

// Bi-coset graphs over an abstract group handle: coset enumeration, the
// B(G,L,R;D) construction with its right-multiplication action, degree and
// connectivity contracts, the action kernel, and the reconstruction of a
// bi-coset presentation from a semitransitive action.
//
// A group handle H provides:
//   using Element = ...;                 // regular value type with ==
//   Element identity() const;
//   Element multiply(a, b) const;        // apply a, then b
//   Element invert(a) const;
//   const std::vector<Element>& generators() const;
//   std::vector<Element> subgroup_generators(SubgroupTag) const;
//   bool in_subgroup(SubgroupTag, const Element&) const;
//   BigInt order() const;                          // |G|
//   BigInt generated_order(const std::vector<Element>&) const;
//   uint64_t coset_invariant(SubgroupTag, const Element&) const;
//       // constant on each right coset H·g; buckets the recognition scan
//
// D is always specified by double-coset representatives d_i (D = ∪ R d_i L),
// never materialized: the families' D would be astronomically large.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssg/bigraph.hpp"
#include "ssg/perm_group.hpp"

namespace ssg {

enum class SubgroupTag { L, R };

struct coset_bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Element>
struct CosetSpace {
  SubgroupTag tag;
  std::vector<Element> reps;                       // reps[0] is the identity
  std::vector<std::pair<int, int>> schreier;       // (parent coset, generator index); (-1,-1) at the root
  std::unordered_map<uint64_t, std::vector<int>> buckets;  // coset_invariant -> indices

  int size() const { return static_cast<int>(reps.size()); }
};

/// Index of the coset containing e, or -1.
template <class Handle>
int find_coset(const Handle& h, const CosetSpace<typename Handle::Element>& space,
               const typename Handle::Element& e) {
  auto it = space.buckets.find(h.coset_invariant(space.tag, e));
  if (it == space.buckets.end()) return -1;
  for (int j : it->second)
    if (h.in_subgroup(space.tag, h.multiply(e, h.invert(space.reps[j])))) return j;
  return -1;
}

/// BFS enumeration of the right cosets of L or R, identity first, one new
/// representative per coset in generator declaration order.
template <class Handle>
CosetSpace<typename Handle::Element> enumerate_cosets(const Handle& h, SubgroupTag tag,
                                                      std::size_t bound = 1000000) {
  if (!h.in_subgroup(tag, h.identity()))
    throw std::logic_error("coset enumeration: membership oracle rejects the identity");
  for (const auto& s : h.subgroup_generators(tag))
    if (!h.in_subgroup(tag, s))
      throw std::logic_error("coset enumeration: membership oracle rejects a subgroup generator");

  CosetSpace<typename Handle::Element> space;
  space.tag = tag;
  space.reps.push_back(h.identity());
  space.schreier.emplace_back(-1, -1);
  space.buckets[h.coset_invariant(tag, h.identity())].push_back(0);
  std::deque<int> queue = {0};
  const auto& gens = h.generators();
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      auto cand = h.multiply(space.reps[i], gens[gi]);
      if (find_coset(h, space, cand) >= 0) continue;
      if (space.reps.size() >= bound)
        throw coset_bound_error("coset enumeration exceeded the bound of " + std::to_string(bound) +
                                " representatives");
      int idx = space.size();
      space.buckets[h.coset_invariant(tag, cand)].push_back(idx);
      space.reps.push_back(std::move(cand));
      space.schreier.emplace_back(i, static_cast<int>(gi));
      queue.push_back(idx);
    }
  }
  return space;
}

struct BiCosetGraphResult {
  BipartiteGraph graph;  // W = [G:L], U = [G:R], indexed by enumeration order
  PermGroup action;      // right multiplication on the combined domain, one
                         // generator per group generator, in order
};

template <class Handle>
Permutation induced_coset_permutation(const Handle& h, const CosetSpace<typename Handle::Element>& wl,
                                      const CosetSpace<typename Handle::Element>& ur,
                                      const typename Handle::Element& e);

namespace detail_bicoset {

template <class Handle>
int image_coset(const Handle& h, const CosetSpace<typename Handle::Element>& space, int i,
                const typename Handle::Element& g) {
  int j = find_coset(h, space, h.multiply(space.reps[i], g));
  if (j < 0) throw std::logic_error("coset action: image coset not found (membership oracle not closed)");
  return j;
}

/// Permutations of the combined domain [G:L] + [G:R] induced by right
/// multiplication with each of the given elements.
template <class Handle>
std::vector<Permutation> induced_perms(const Handle& h, const CosetSpace<typename Handle::Element>& wl,
                                       const CosetSpace<typename Handle::Element>& ur,
                                       const std::vector<typename Handle::Element>& elems) {
  int nw = wl.size(), nu = ur.size();
  std::vector<Permutation> out;
  out.reserve(elems.size());
  for (const auto& g : elems) {
    std::vector<int> img(nw + nu);
    for (int i = 0; i < nw; ++i) img[i] = image_coset(h, wl, i, g);
    for (int i = 0; i < nu; ++i) img[nw + i] = nw + image_coset(h, ur, i, g);
    out.push_back(Permutation(std::move(img)));
  }
  return out;
}

/// Orbit of a point under a generator subset, as a sorted vector.
inline std::vector<int> orbit_of(int start, const std::vector<Permutation>& gens) {
  std::vector<int> orbit = {start};
  std::set<int> seen = {start};
  for (std::size_t qi = 0; qi < orbit.size(); ++qi)
    for (const auto& g : gens) {
      int y = g(orbit[qi]);
      if (seen.insert(y).second) orbit.push_back(y);
    }
  return std::vector<int>(seen.begin(), seen.end());
}

}  // namespace detail_bicoset

/// Permutation of the combined coset domain [G:L] + [G:R] induced by right
/// multiplication with one element.
template <class Handle>
Permutation induced_coset_permutation(const Handle& h, const CosetSpace<typename Handle::Element>& wl,
                                      const CosetSpace<typename Handle::Element>& ur,
                                      const typename Handle::Element& e) {
  return detail_bicoset::induced_perms(h, wl, ur, {e}).front();
}

/// B(G, L, R; D) for D = ∪ R·d_i·L: vertices are the cosets, edges
/// {L·g, R·d·g}, obtained by closing the seed edges (L, R·d_i) under the
/// right-multiplication action of G's generators.  Representatives of the
/// same double coset would describe the same edges twice and are rejected.
template <class Handle>
BiCosetGraphResult build_bicoset(const Handle& h, const std::vector<typename Handle::Element>& d_reps,
                                 std::size_t bound = 1000000) {
  if (d_reps.empty()) throw std::invalid_argument("bi-coset build: no double coset representatives");
  auto wl = enumerate_cosets(h, SubgroupTag::L, bound);
  auto ur = enumerate_cosets(h, SubgroupTag::R, bound);
  int nw = wl.size(), nu = ur.size();

  auto action_gens = detail_bicoset::induced_perms(h, wl, ur, h.generators());
  auto l_action = detail_bicoset::induced_perms(h, wl, ur, h.subgroup_generators(SubgroupTag::L));

  // Seeds; the L-orbit of R·d_i on the U side is exactly the set of R-cosets
  // inside R·d_i·L, so overlapping orbits expose duplicate double cosets.
  std::vector<std::pair<int, int>> seeds;
  std::set<int> covered;
  for (const auto& d : d_reps) {
    int ud = find_coset(h, ur, d);
    if (ud < 0) throw std::logic_error("bi-coset build: representative's coset not found");
    seeds.emplace_back(0, nw + ud);
    for (int y : detail_bicoset::orbit_of(nw + ud, l_action))
      if (!covered.insert(y).second)
        throw std::invalid_argument("bi-coset build: two representatives lie in the same double coset");
  }

  std::set<std::pair<int, int>> edges(seeds.begin(), seeds.end());
  std::deque<std::pair<int, int>> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    auto [w, u] = queue.front();
    queue.pop_front();
    for (const auto& g : action_gens) {
      std::pair<int, int> e{g(w), g(u)};
      if (edges.insert(e).second) queue.push_back(e);
    }
  }
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(edges.size());
  for (auto [w, u] : edges) edge_list.emplace_back(w, u - nw);
  return {BipartiteGraph(nw, nu, edge_list), PermGroup(nw + nu, std::move(action_gens))};
}

/// Coset-count degrees, computed group-theoretically: the W-degree |D|/|R|
/// is the number of R-cosets in D = ∪ R·d_i·L, i.e. the total size of the
/// L-orbits of the points R·d_i; dually for the U-degree.
template <class Handle>
std::pair<long, long> degree_contract(const Handle& h, const std::vector<typename Handle::Element>& d_reps,
                                      std::size_t bound = 1000000) {
  if (d_reps.empty()) throw std::invalid_argument("degree contract: no double coset representatives");
  auto wl = enumerate_cosets(h, SubgroupTag::L, bound);
  auto ur = enumerate_cosets(h, SubgroupTag::R, bound);
  int nw = wl.size();
  auto l_action = detail_bicoset::induced_perms(h, wl, ur, h.subgroup_generators(SubgroupTag::L));
  auto r_action = detail_bicoset::induced_perms(h, wl, ur, h.subgroup_generators(SubgroupTag::R));
  long w_degree = 0, u_degree = 0;
  for (const auto& d : d_reps) {
    int ud = find_coset(h, ur, d);
    int wd = find_coset(h, wl, h.invert(d));
    if (ud < 0 || wd < 0) throw std::logic_error("degree contract: representative's coset not found");
    w_degree += static_cast<long>(detail_bicoset::orbit_of(nw + ud, l_action).size());
    u_degree += static_cast<long>(detail_bicoset::orbit_of(wd, r_action).size());
  }
  return {w_degree, u_degree};
}

/// Subgroup criterion: the graph is connected iff <D⁻¹D> = G.  With D = ∪ R·d_i·L
/// the subgroup <D⁻¹D> is generated by L, d_0⁻¹·R·d_0, and the connectors
/// d_0⁻¹·d_i; the handle decides equality with G by order.
template <class Handle>
bool connectivity_criterion(const Handle& h, const std::vector<typename Handle::Element>& d_reps) {
  if (d_reps.empty()) throw std::invalid_argument("connectivity: no double coset representatives");
  std::vector<typename Handle::Element> gens;
  for (const auto& l : h.subgroup_generators(SubgroupTag::L)) gens.push_back(l);
  auto d0i = h.invert(d_reps[0]);
  for (const auto& r : h.subgroup_generators(SubgroupTag::R))
    gens.push_back(h.multiply(h.multiply(d0i, r), d_reps[0]));
  for (std::size_t i = 1; i < d_reps.size(); ++i) gens.push_back(h.multiply(d0i, d_reps[i]));
  return h.generated_order(gens) == h.order();
}

/// Order of the kernel of the right-multiplication action on the two coset
/// spaces (= |Core_G(L) ∩ Core_G(R)|), via |G| / |image|.
template <class Handle>
BigInt kernel_order_via_image(const Handle& h, const BiCosetGraphResult& result) {
  BigInt g = h.order(), image = result.action.order();
  if (g % image != 0)
    throw std::logic_error("kernel: action image order does not divide the group order");
  return g / image;
}

/// Semitransitive decomposition data: stabilizers of one vertex per part plus one
/// connecting element, sufficient to rebuild the graph as B(G, G_u, G_w; D)
/// with D = G_w·d·G_u.
struct SemitransitiveDecomposition {
  std::vector<Permutation> l_gens;  // generators of G_u
  std::vector<Permutation> r_gens;  // generators of G_w
  Permutation d;                    // w^d is a neighbor of u
};

/// True iff the action is transitive on each part separately.
inline bool is_semitransitive(const BipartiteGraph& g, const PermGroup& action) {
  if (action.degree() != g.n_w + g.n_u) return false;
  if (g.n_w == 0 || g.n_u == 0) return false;
  auto worb = action.orbit(0);
  auto uorb = action.orbit(g.n_w);
  return static_cast<int>(worb.size()) == g.n_w && static_cast<int>(uorb.size()) == g.n_u;
}

inline SemitransitiveDecomposition from_semitransitive(const BipartiteGraph& g, const PermGroup& action,
                                                       int u, int w) {
  if (!is_semitransitive(g, action))
    throw std::invalid_argument("from_semitransitive: action is not transitive on both parts");
  if (w < 0 || w >= g.n_w || u < g.n_w || u >= g.n_w + g.n_u)
    throw std::invalid_argument("from_semitransitive: u must index the U part and w the W part");

  // Smallest W-side neighbor of u.
  int nbr = -1;
  for (int x = 0; x < g.n_w && nbr < 0; ++x)
    if (g.has_edge(x, u - g.n_w)) nbr = x;
  if (nbr < 0) throw std::invalid_argument("from_semitransitive: u has no neighbors");

  auto d = action.transport(w, nbr);
  if (!d) throw std::logic_error("from_semitransitive: transitivity on W violated");
  SemitransitiveDecomposition out;
  out.l_gens = action.pointwise_stabilizer({u}).generators();
  out.r_gens = action.pointwise_stabilizer({w}).generators();
  out.d = *d;
  return out;
}

/// Handle over permutation groups: G with two designated subgroups, all on
/// the same domain.  Membership through stabilizer chains; cosets bucketed by
/// the image of the subgroup's orbit partition.
struct PermGroupHandle {
  using Element = Permutation;

  PermGroup group;
  PermGroup l_sub;
  PermGroup r_sub;

  PermGroupHandle(PermGroup g, PermGroup l, PermGroup r)
      : group(std::move(g)), l_sub(std::move(l)), r_sub(std::move(r)) {
    if (l_sub.degree() != group.degree() || r_sub.degree() != group.degree())
      throw std::invalid_argument("perm handle: subgroup degree mismatch");
    l_orbits_ = l_sub.orbits();
    r_orbits_ = r_sub.orbits();
  }

  Element identity() const { return Permutation::identity(group.degree()); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element invert(const Element& a) const { return a.inverse(); }
  const std::vector<Element>& generators() const { return group.generators(); }

  std::vector<Element> subgroup_generators(SubgroupTag t) const {
    return t == SubgroupTag::L ? l_sub.generators() : r_sub.generators();
  }
  bool in_subgroup(SubgroupTag t, const Element& e) const {
    return t == SubgroupTag::L ? l_sub.contains(e) : r_sub.contains(e);
  }
  BigInt order() const { return group.order(); }
  BigInt subgroup_order(SubgroupTag t) const { return t == SubgroupTag::L ? l_sub.order() : r_sub.order(); }
  BigInt generated_order(const std::vector<Element>& gens) const {
    return PermGroup(group.degree(), gens).order();
  }

  /// Hash of (min of O^g) over the subgroup's orbits O; constant on H·g
  /// because O^(hg) = O^g for h in H.
  uint64_t coset_invariant(SubgroupTag t, const Element& e) const {
    const auto& orbits = t == SubgroupTag::L ? l_orbits_ : r_orbits_;
    uint64_t h = 1469598103934665603ULL;
    for (const auto& o : orbits) {
      int m = e(o[0]);
      for (std::size_t i = 1; i < o.size(); ++i) m = std::min(m, e(o[i]));
      h = (h ^ static_cast<uint64_t>(m)) * 1099511628211ULL;
    }
    return h;
  }

 private:
  std::vector<std::vector<int>> l_orbits_;
  std::vector<std::vector<int>> r_orbits_;
};

/// Kernel order by the stabilizer route, available for permutation handles:
/// extend the domain with both coset spaces, stabilize the coset points, and
/// measure what remains.  Must agree with kernel_order_via_image.
inline BigInt kernel_order_via_stabilizer(const PermGroupHandle& h, std::size_t bound = 1000000) {
  auto wl = enumerate_cosets(h, SubgroupTag::L, bound);
  auto ur = enumerate_cosets(h, SubgroupTag::R, bound);
  int deg = h.group.degree(), nw = wl.size(), nu = ur.size();
  std::vector<Permutation> ext;
  for (const auto& g : h.generators()) {
    std::vector<int> img(deg + nw + nu);
    for (int i = 0; i < deg; ++i) img[i] = g(i);
    for (int i = 0; i < nw; ++i) img[deg + i] = deg + detail_bicoset::image_coset(h, wl, i, g);
    for (int i = 0; i < nu; ++i) img[deg + nw + i] = deg + nw + detail_bicoset::image_coset(h, ur, i, g);
    ext.push_back(Permutation(std::move(img)));
  }
  std::vector<int> coset_points(nw + nu);
  std::iota(coset_points.begin(), coset_points.end(), deg);
  return PermGroup(deg + nw + nu, std::move(ext)).pointwise_stabilizer(coset_points).order();
}

}  // namespace ssg

#pragma once

// The explicit families: two order-36 incidence graphs with their 3-fold
// expansions, and three p-parametrized families on p^3 + p^2 vertices, each
// delivered as a graph together with an edge-transitive group action.
//
// CLI tokens: sigma3small | sigma6small | gamma9 | gamma18 |
//             sigma{1,2,3}:p | gamma{1,2,3}:p   (prime p >= 5)

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssg/bicoset.hpp"
#include "ssg/bigraph.hpp"
#include "ssg/gf.hpp"
#include "ssg/perm_group.hpp"

namespace ssg {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FamilyBuild {
  BipartiteGraph graph;
  PermGroup action;  // preserves graph and acts edge-transitively on it

  struct Provenance {
    BigInt group_order;
    BigInt l_order;
    BigInt r_order;
    std::size_t double_cosets = 0;
  };
  std::optional<Provenance> provenance;  // present for bi-coset builds
};

namespace detail_families {

inline void require_family_prime(int p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("families: p must be a prime >= 5");
}

/// Smallest primitive root modulo the prime p.
inline int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    long x = g % p;
    int k = 1;
    while (x != 1) {
      x = x * g % p;
      ++k;
    }
    if (k == p - 1) return g;
  }
  throw std::logic_error("families: no primitive root found");
}

inline long pow_mod(long base, long e, long m) {
  long r = 1 % m;
  base %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
  }
  return r;
}

}  // namespace detail_families

// ---------------------------------------------------------------------------
// Small families on 27 + 9 vertices and their expansions.

/// Affine generators of the monomial group N x| L on GF(3)^3: coordinate
/// rotation and swap, translation by e0, and scaling of coordinate 0.
inline std::vector<AffineMap> small_family_affine_gens() {
  const int p = 3;
  GfMatrix rot(p, {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}});
  GfMatrix swap01(p, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}});
  GfMatrix scale0(p, {{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  return {AffineMap::linear(rot), AffineMap::linear(swap01),
          AffineMap::translation(GfVector(p, 1, 0, 0)), AffineMap::linear(scale0)};
}

/// Permutation of the 27 points followed by the 9 planes {x : x_i = v}
/// (plane index 3i + v) induced by an affine map that permutes the plane
/// system.  The plane image is read off the i-th column of mat^-1, which
/// must be a multiple of a standard basis vector.
inline Permutation small_family_extended_perm(const AffineMap& f) {
  const int p = 3, n = 27;
  Permutation pts = affine_permutation(f);
  GfMatrix ainv = f.mat.inverse();
  GfVector shift = f.t * ainv;
  std::vector<int> img(n + 9);
  for (int i = 0; i < n; ++i) img[i] = pts(i);
  for (int i = 0; i < 3; ++i) {
    int target = -1;
    for (int r = 0; r < 3; ++r)
      if (ainv.a[r][i] != 0) {
        if (target != -1) throw std::invalid_argument("families: map does not preserve the plane system");
        target = r;
      }
    int d_inv = gf_inv(ainv.a[target][i], p);
    for (int v = 0; v < p; ++v)
      img[n + 3 * i + v] = n + 3 * target + gf_norm((v + shift.c[i]) * d_inv, p);
  }
  return Permutation(std::move(img));
}

/// The 27/9 incidence graph of points versus the planes {x : x_i = v}
/// (variant 3) or its bi-complement (variant 6), with the monomial action.
inline FamilyBuild build_sigma_small(int variant) {
  if (variant != 3 && variant != 6) throw std::invalid_argument("families: sigma-small variant must be 3 or 6");
  std::vector<std::pair<int, int>> edges;
  for (int idx = 0; idx < 27; ++idx) {
    GfVector v = vector_at(3, idx);
    for (int i = 0; i < 3; ++i) edges.emplace_back(idx, 3 * i + v.c[i]);
  }
  BipartiteGraph graph(27, 9, edges);
  if (variant == 6) graph = bicomplement(graph);
  std::vector<Permutation> gens;
  for (const auto& f : small_family_affine_gens()) gens.push_back(small_family_extended_perm(f));
  return {std::move(graph), PermGroup(36, std::move(gens)), std::nullopt};
}

/// Lift to the p-fold expansion: W fixed, fiber copies carried unchanged.
inline Permutation expansion_lift(const Permutation& g, int n_w, int n_u, int p) {
  std::vector<int> img(n_w + n_u * p);
  for (int w = 0; w < n_w; ++w) img[w] = g(w);
  for (int u = 0; u < n_u; ++u)
    for (int i = 0; i < p; ++i) img[n_w + p * u + i] = n_w + p * (g(n_w + u) - n_w) + i;
  return Permutation(std::move(img));
}

/// Applies `images` within the fiber over one U vertex of the expansion,
/// fixing everything else.
inline Permutation fiber_permutation(int n_w, int n_u, int p, int fiber, const std::vector<int>& images) {
  if (fiber < 0 || fiber >= n_u) throw std::invalid_argument("families: fiber out of range");
  std::vector<int> img(n_w + n_u * p);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p; ++i) img[n_w + p * fiber + i] = n_w + p * fiber + images.at(i);
  return Permutation(std::move(img));
}

/// p-fold expansion of a build: lifted generators plus the symmetric group
/// on one fiber, which together move every edge to every other.
inline FamilyBuild expand_build(const FamilyBuild& base, int p) {
  int nw = base.graph.n_w, nu = base.graph.n_u;
  std::vector<Permutation> gens;
  for (const auto& g : base.action.generators()) gens.push_back(expansion_lift(g, nw, nu, p));
  std::vector<int> cycle(p), trans(p);
  for (int i = 0; i < p; ++i) cycle[i] = (i + 1) % p;
  std::iota(trans.begin(), trans.end(), 0);
  if (p >= 2) std::swap(trans[0], trans[1]);
  gens.push_back(fiber_permutation(nw, nu, p, 0, cycle));
  gens.push_back(fiber_permutation(nw, nu, p, 0, trans));
  return {expand(base.graph, p), PermGroup(nw + nu * p, std::move(gens)), std::nullopt};
}

inline FamilyBuild build_gamma_small(int variant) {
  if (variant != 9 && variant != 18) throw std::invalid_argument("families: gamma-small variant must be 9 or 18");
  return expand_build(build_sigma_small(variant / 3), 3);
}

// ---------------------------------------------------------------------------
// sigma1(p): affine construction inside AGL(3,p).

struct Sigma1Data {
  PermGroupHandle handle;
  std::vector<Permutation> d_reps;
};

/// F = N x| (<x> x| H) on the p^3 points of GF(p)^3, with L = <x>H,
/// R = <t_e0, t_e1>H and D = RL.
inline Sigma1Data sigma1_group(int p) {
  detail_families::require_family_prime(p);
  int w = detail_families::primitive_root(p);
  GfMatrix x(p, {{{1, 2, 2}, {0, 1, 2}, {0, 0, 1}}});
  GfMatrix h1(p, {{{w * w, 0, 0}, {0, w, 0}, {0, 0, 1}}});
  GfMatrix h2(p, {{{gf_inv(w, p), 0, 0}, {0, 1, 0}, {0, 0, w}}});
  AffineMap t0 = AffineMap::translation(GfVector(p, 1, 0, 0));
  AffineMap t1 = AffineMap::translation(GfVector(p, 0, 1, 0));
  AffineMap t2 = AffineMap::translation(GfVector(p, 0, 0, 1));
  AffineMap xm = AffineMap::linear(x), hm1 = AffineMap::linear(h1), hm2 = AffineMap::linear(h2);

  auto perms = [](std::initializer_list<AffineMap> maps) {
    std::vector<Permutation> out;
    for (const auto& m : maps) out.push_back(affine_permutation(m));
    return out;
  };
  int n = p * p * p;
  PermGroup g(n, perms({t0, t1, t2, xm, hm1, hm2}));
  PermGroup l(n, perms({xm, hm1, hm2}));
  PermGroup r(n, perms({t0, t1, hm1, hm2}));
  return {PermGroupHandle(std::move(g), std::move(l), std::move(r)), {Permutation::identity(n)}};
}

// ---------------------------------------------------------------------------
// sigma2(p): wreath construction on p blocks of p points (index p*b + j).

struct Sigma2Data {
  PermGroupHandle handle;
  std::vector<Permutation> d_reps;
};

namespace detail_families {

/// Applies `images` to the points of one block, fixing the rest.
inline Permutation block_perm(int p, int block, const std::vector<int>& images) {
  std::vector<int> img(p * p);
  std::iota(img.begin(), img.end(), 0);
  for (int j = 0; j < p; ++j) img[p * block + j] = p * block + images.at(j);
  return Permutation(std::move(img));
}

inline std::vector<int> cycle_all(int p) {  // (0 1 ... p-1)
  std::vector<int> v(p);
  for (int i = 0; i < p; ++i) v[i] = (i + 1) % p;
  return v;
}
inline std::vector<int> swap_01(int p) {  // (0 1)
  std::vector<int> v(p);
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[0], v[1]);
  return v;
}
inline std::vector<int> cycle_nonzero(int p) {  // (1 2 ... p-1)
  std::vector<int> v(p);
  v[0] = 0;
  for (int i = 1; i < p; ++i) v[i] = i % (p - 1) + 1;
  return v;
}
inline std::vector<int> swap_12(int p) {  // (1 2)
  std::vector<int> v(p);
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[1], v[2]);
  return v;
}

}  // namespace detail_families

/// F = M wr <sigma, tau> with M = Sym(p) acting inside blocks, sigma the
/// block shift and tau the simultaneous negation of block and point labels.
/// L keeps point-0 stabilizers at the two tau-paired middle blocks, R keeps
/// one at block 0; D = R sigma^{(p-1)/2} L.
inline Sigma2Data sigma2_group(int p) {
  detail_families::require_family_prime(p);
  using namespace detail_families;
  int n = p * p;
  std::vector<int> sig(n), tau(n);
  for (int b = 0; b < p; ++b)
    for (int j = 0; j < p; ++j) {
      sig[p * b + j] = p * ((b + 1) % p) + j;
      tau[p * b + j] = p * ((p - b) % p) + (p - j) % p;
    }
  Permutation sigma_perm{std::move(sig)}, tau_perm{std::move(tau)};

  std::vector<Permutation> g_gens = {block_perm(p, 0, swap_01(p)), block_perm(p, 0, cycle_all(p)),
                                     sigma_perm, tau_perm};
  std::vector<Permutation> l_gens, r_gens;
  int lo = (p - 1) / 2, hi = (p + 1) / 2;
  for (int b = 0; b < p; ++b) {
    bool restricted = (b == lo || b == hi);
    l_gens.push_back(block_perm(p, b, restricted ? swap_12(p) : swap_01(p)));
    l_gens.push_back(block_perm(p, b, restricted ? cycle_nonzero(p) : cycle_all(p)));
    r_gens.push_back(block_perm(p, b, b == 0 ? swap_12(p) : swap_01(p)));
    r_gens.push_back(block_perm(p, b, b == 0 ? cycle_nonzero(p) : cycle_all(p)));
  }
  l_gens.push_back(tau_perm);
  r_gens.push_back(tau_perm);

  Permutation d = Permutation::identity(n);
  for (int i = 0; i < lo; ++i) d = d * sigma_perm;
  return {PermGroupHandle(PermGroup(n, std::move(g_gens)), PermGroup(n, std::move(l_gens)),
                          PermGroup(n, std::move(r_gens))),
          {std::move(d)}};
}

// ---------------------------------------------------------------------------
// sigma3(p): normal-form arithmetic in F = P x| <x> with
// P = <a, b | a^{p^2} = b^p = 1, a^b = a^{1+p}>, a^x = a^s, b^x = b.

struct NormalFormElement {
  int i = 0;  // exponent of a, mod p^2
  int j = 0;  // exponent of b, mod p
  int k = 0;  // exponent of x, mod p-1

  friend bool operator==(const NormalFormElement& a, const NormalFormElement& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator!=(const NormalFormElement& a, const NormalFormElement& b) { return !(a == b); }
  friend bool operator<(const NormalFormElement& a, const NormalFormElement& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  }
};

/// Smallest s >= 2 of multiplicative order exactly p-1 modulo p^2.
inline int sigma3_parameter_s(int p) {
  detail_families::require_family_prime(p);
  long m = static_cast<long>(p) * p;
  for (long s = 2; s < m; ++s) {
    long x = s % m;
    int ord = 1;
    while (x != 1) {
      x = x * s % m;
      if (++ord > p - 1) break;
    }
    if (x == 1 && ord == p - 1) return static_cast<int>(s);
  }
  throw std::logic_error("families: no sigma3 parameter found");
}

/// Normal form of (a^i1 b^j1 x^k1)(a^i2 b^j2 x^k2): collecting a^i2 leftward
/// gives a^{i1 + i2 s^{-k1} (1 - j1 p)} b^{j1+j2} x^{k1+k2}.
inline NormalFormElement nf_multiply(const NormalFormElement& e1, const NormalFormElement& e2, int p,
                                     int s) {
  long m = static_cast<long>(p) * p;
  auto check = [&](const NormalFormElement& e) {
    if (e.i < 0 || e.i >= m || e.j < 0 || e.j >= p || e.k < 0 || e.k >= p - 1)
      throw std::invalid_argument("families: normal form element out of range for this p");
  };
  check(e1);
  check(e2);
  long s_inv = detail_families::pow_mod(s, (p - 1 - e1.k) % (p - 1), m);
  long coef = s_inv * (((1 - static_cast<long>(e1.j) * p) % m + m) % m) % m;
  return {static_cast<int>((e1.i + e2.i * coef) % m), (e1.j + e2.j) % p, (e1.k + e2.k) % (p - 1)};
}

/// Group handle for F over normal forms; verifies the defining relations and
/// the order of the x-action at construction.
class Sigma3Group {
 public:
  using Element = NormalFormElement;

  explicit Sigma3Group(int p) : p_(p), s_(sigma3_parameter_s(p)), gens_{a(), b(), x()} {
    Element e = identity(), ap = power(a(), p_);
    auto conj = [&](const Element& g, const Element& h) {
      return multiply(multiply(invert(h), g), h);
    };
    bool ok = power(a(), p_ * p_) == e && power(b(), p_) == e && power(x(), p_ - 1) == e &&
              conj(a(), b()) == power(a(), 1 + p_) && conj(a(), x()) == power(a(), s_) &&
              conj(b(), x()) == b() && multiply(ap, a()) == multiply(a(), ap) &&
              multiply(ap, b()) == multiply(b(), ap) &&
              multiply(multiply(invert(a()), invert(b())), multiply(a(), b())) == ap;
    if (!ok) throw std::logic_error("families: sigma3 x-action inconsistent");
  }

  int p() const { return p_; }
  int s() const { return s_; }
  Element a() const { return {1, 0, 0}; }
  Element b() const { return {0, 1, 0}; }
  Element x() const { return {0, 0, 1}; }

  Element identity() const { return {}; }
  Element multiply(const Element& e1, const Element& e2) const { return nf_multiply(e1, e2, p_, s_); }
  Element invert(const Element& e) const {
    int k = (p_ - 1 - e.k) % (p_ - 1);
    int j = (p_ - e.j) % p_;
    long m = static_cast<long>(p_) * p_;
    long coef = detail_families::pow_mod(s_, e.k, m) * ((1 + static_cast<long>(e.j) * p_) % m) % m;
    return {static_cast<int>((m - e.i * coef % m) % m), j, k};
  }
  Element power(Element g, int e) const {
    Element r = identity();
    for (int t = 0; t < e; ++t) r = multiply(r, g);
    return r;
  }

  const std::vector<Element>& generators() const { return gens_; }
  std::vector<Element> subgroup_generators(SubgroupTag t) const {
    if (t == SubgroupTag::L) return {x()};
    return {b(), x()};
  }
  bool in_subgroup(SubgroupTag t, const Element& e) const {
    return t == SubgroupTag::L ? e.i == 0 && e.j == 0 : e.i == 0;
  }
  BigInt order() const { return BigInt(p_) * p_ * p_ * (p_ - 1); }
  BigInt subgroup_order(SubgroupTag t) const {
    return t == SubgroupTag::L ? BigInt(p_ - 1) : BigInt(p_) * (p_ - 1);
  }
  BigInt generated_order(const std::vector<Element>& gens) const {
    std::set<Element> seen = {identity()};
    std::vector<Element> todo = {identity()};
    while (!todo.empty()) {
      Element cur = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        Element nxt = multiply(cur, g);
        if (seen.insert(nxt).second) todo.push_back(nxt);
      }
    }
    return static_cast<long>(seen.size());
  }

  /// L-cosets: j plus the <s>-orbit of i.  R-cosets: the unit class of i
  /// ({0}, nonzero multiples of p, or units).
  uint64_t coset_invariant(SubgroupTag t, const Element& e) const {
    long m = static_cast<long>(p_) * p_;
    if (t == SubgroupTag::R) return e.i == 0 ? 0 : (e.i % p_ == 0 ? 1 : 2);
    long best = e.i;
    long cur = e.i;
    for (int t2 = 1; t2 < p_ - 1; ++t2) {
      cur = cur * s_ % m;
      best = std::min(best, cur);
    }
    return static_cast<uint64_t>(best * p_ + e.j);
  }

 private:
  int p_, s_;
  std::vector<Element> gens_;
};

struct Sigma3Data {
  Sigma3Group handle;
  std::vector<NormalFormElement> d_reps;
};

inline Sigma3Data sigma3_group(int p) { return {Sigma3Group(p), {{1, 0, 0}}}; }

// ---------------------------------------------------------------------------
// Bi-coset builds and block systems.

namespace detail_families {

template <class Data>
FamilyBuild bicoset_family(const Data& data, long coset_bound) {
  auto built = build_bicoset(data.handle, data.d_reps, coset_bound);
  FamilyBuild::Provenance prov{data.handle.order(), data.handle.subgroup_order(SubgroupTag::L),
                               data.handle.subgroup_order(SubgroupTag::R), data.d_reps.size()};
  return {std::move(built.graph), std::move(built.action), std::move(prov)};
}

/// Orbits of the given elements' right-multiplication action on the U side,
/// in U-local indices.
template <class Handle>
VertexPartition u_side_orbits(const Handle& h, const std::vector<typename Handle::Element>& elems) {
  auto wl = enumerate_cosets(h, SubgroupTag::L);
  auto ur = enumerate_cosets(h, SubgroupTag::R);
  int nw = wl.size(), nu = ur.size();
  std::vector<Permutation> perms;
  for (const auto& e : elems) perms.push_back(induced_coset_permutation(h, wl, ur, e));
  std::vector<int> owner(nu, -1);
  std::vector<std::vector<int>> cells;
  for (int start = 0; start < nu; ++start) {
    if (owner[start] != -1) continue;
    std::vector<int> cell = {start};
    owner[start] = static_cast<int>(cells.size());
    for (std::size_t qi = 0; qi < cell.size(); ++qi)
      for (const auto& g : perms) {
        int y = g(nw + cell[qi]) - nw;
        if (owner[y] == -1) {
          owner[y] = static_cast<int>(cells.size());
          cell.push_back(y);
        }
      }
    cells.push_back(std::move(cell));
  }
  return VertexPartition::make(VertexPartition::Side::U, std::move(cells), nu);
}

}  // namespace detail_families

inline FamilyBuild build_sigma1(int p, long coset_bound = 1000000) {
  return detail_families::bicoset_family(sigma1_group(p), coset_bound);
}
inline FamilyBuild build_sigma2(int p, long coset_bound = 1000000) {
  return detail_families::bicoset_family(sigma2_group(p), coset_bound);
}
inline FamilyBuild build_sigma3(int p, long coset_bound = 1000000) {
  return detail_families::bicoset_family(sigma3_group(p), coset_bound);
}

/// Block system induced on [F:R] by the base factor M^p of sigma2(p).
inline VertexPartition sigma2_block_system(int p) {
  auto data = sigma2_group(p);
  std::vector<Permutation> base;
  for (int b = 0; b < p; ++b) {
    base.push_back(detail_families::block_perm(p, b, detail_families::swap_01(p)));
    base.push_back(detail_families::block_perm(p, b, detail_families::cycle_all(p)));
  }
  return detail_families::u_side_orbits(data.handle, base);
}

/// Block system induced on [F:R] by <a^p> in sigma3(p).
inline VertexPartition sigma3_block_system(int p) {
  auto data = sigma3_group(p);
  return detail_families::u_side_orbits(data.handle, {NormalFormElement{p, 0, 0}});
}

/// Number of distinct cells of a U-side partition met by each W vertex's
/// neighborhood.
inline std::vector<int> blocks_met(const BipartiteGraph& g, const VertexPartition& blocks) {
  if (blocks.side != VertexPartition::Side::U)
    throw std::invalid_argument("families: blocks_met expects a U-side partition");
  std::vector<int> owner = blocks.cell_of(g.n_u);
  std::vector<int> out(g.n_w, 0);
  for (int w = 0; w < g.n_w; ++w) {
    std::set<int> seen;
    for (int u : g.adj[w]) seen.insert(owner[u]);
    out[w] = static_cast<int>(seen.size());
  }
  return out;
}

inline FamilyBuild build_gamma_family(int which, int p, long coset_bound = 1000000) {
  switch (which) {
    case 1: return expand_build(build_sigma1(p, coset_bound), p);
    case 2: return expand_build(build_sigma2(p, coset_bound), p);
    case 3: return expand_build(build_sigma3(p, coset_bound), p);
    default: throw std::invalid_argument("families: gamma family index must be 1, 2 or 3");
  }
}

/// Build from a CLI token.
inline FamilyBuild build_family(const std::string& token, long coset_bound = 1000000) {
  if (token == "sigma3small") return build_sigma_small(3);
  if (token == "sigma6small") return build_sigma_small(6);
  if (token == "gamma9") return build_gamma_small(9);
  if (token == "gamma18") return build_gamma_small(18);
  auto colon = token.find(':');
  if (colon != std::string::npos) {
    std::string name = token.substr(0, colon), arg = token.substr(colon + 1);
    if (!arg.empty() && arg.size() <= 9 &&
        arg.find_first_not_of("0123456789") == std::string::npos) {
      int p = std::stoi(arg);
      if (name == "sigma1") return build_sigma1(p, coset_bound);
      if (name == "sigma2") return build_sigma2(p, coset_bound);
      if (name == "sigma3") return build_sigma3(p, coset_bound);
      if (name == "gamma1") return build_gamma_family(1, p, coset_bound);
      if (name == "gamma2") return build_gamma_family(2, p, coset_bound);
      if (name == "gamma3") return build_gamma_family(3, p, coset_bound);
    }
  }
  throw std::invalid_argument("families: unknown family token: " + token);
}

}  // namespace ssg

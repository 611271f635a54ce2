#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ssg/autosearch.hpp"
#include "ssg/bicoset.hpp"
#include "oracles.hpp"
#include "reference_constructions.hpp"

using ssg::BigInt;
using ssg::BipartiteGraph;
using ssg::PermGroup;
using ssg::PermGroupHandle;
using ssg::Permutation;
using ssg::SubgroupTag;

namespace {

// Additive group Z_n with the subgroups of all multiples of l_mod / r_mod
// (divisors of n).  Exercises the handle interface with a non-permutation
// element type.
struct ZnHandle {
  using Element = int;
  int n;
  int l_mod;
  int r_mod;
  std::vector<int> gens = {1};

  int modulus(SubgroupTag t) const { return t == SubgroupTag::L ? l_mod : r_mod; }
  int identity() const { return 0; }
  int multiply(int a, int b) const { return (a + b) % n; }
  int invert(int a) const { return (n - a) % n; }
  const std::vector<int>& generators() const { return gens; }
  std::vector<int> subgroup_generators(SubgroupTag t) const { return {modulus(t) % n}; }
  bool in_subgroup(SubgroupTag t, int e) const { return e % modulus(t) == 0; }
  BigInt order() const { return n; }
  BigInt generated_order(const std::vector<int>& gs) const {
    int g = n;
    for (int x : gs) g = std::gcd(g, x);
    return n / g;
  }
  uint64_t coset_invariant(SubgroupTag t, int e) const {
    return static_cast<uint64_t>(e % modulus(t));
  }
};

struct BrokenHandle : ZnHandle {
  bool in_subgroup(SubgroupTag, int) const { return false; }
};

// Degrees (W side, U side) of a graph required to be biregular.
std::pair<int, int> bidegrees(const BipartiteGraph& g) {
  REQUIRE(ssg::is_biregular(g));
  return {g.n_w ? ssg::degrees_w(g)[0] : 0, g.n_u ? ssg::degrees_u(g)[0] : 0};
}

PermGroup sym3() {
  return PermGroup(3, {Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 2)", 3)});
}

// Lexicographically smallest image table in the right coset H·g; a
// label-independent name for the coset.
std::vector<int> coset_key(const std::vector<Permutation>& h_els, const Permutation& g) {
  std::vector<int> best = (h_els.front() * g).images();
  for (std::size_t i = 1; i < h_els.size(); ++i) best = std::min(best, (h_els[i] * g).images());
  return best;
}

std::vector<Permutation> materialize(const PermGroup& g) {
  std::vector<Permutation> gens = g.generators();
  if (gens.empty()) gens.push_back(Permutation::identity(g.degree()));
  return oracle::enumerate_group(gens);
}

// Edge set {L·g, R·d·g : g in G, d in D} computed from fully materialized
// element lists, emitted directly in the builder's coset indexing so graphs
// can be compared exactly.
BipartiteGraph oracle_bicoset(const PermGroupHandle& h, const std::vector<Permutation>& d_reps,
                              const ssg::CosetSpace<Permutation>& wl,
                              const ssg::CosetSpace<Permutation>& ur) {
  auto g_els = materialize(h.group);
  auto l_els = materialize(h.l_sub);
  auto r_els = materialize(h.r_sub);

  std::map<std::vector<int>, int> w_index, u_index;
  for (int i = 0; i < wl.size(); ++i) w_index[coset_key(l_els, wl.reps[i])] = i;
  for (int i = 0; i < ur.size(); ++i) u_index[coset_key(r_els, ur.reps[i])] = i;
  REQUIRE(static_cast<int>(w_index.size()) == wl.size());
  REQUIRE(static_cast<int>(u_index.size()) == ur.size());

  std::set<Permutation> d_els;
  for (const auto& d : d_reps)
    for (const auto& r : r_els)
      for (const auto& l : l_els) d_els.insert(r * d * l);

  std::set<std::pair<int, int>> edges;
  for (const auto& g : g_els)
    for (const auto& d : d_els) edges.emplace(w_index.at(coset_key(l_els, g)), u_index.at(coset_key(r_els, d * g)));
  return BipartiteGraph(wl.size(), ur.size(), {edges.begin(), edges.end()});
}

// Kernel order by scanning every group element for trivial action on both
// coset spaces.
BigInt oracle_kernel(const PermGroupHandle& h, const ssg::CosetSpace<Permutation>& wl,
                     const ssg::CosetSpace<Permutation>& ur) {
  long count = 0;
  for (const auto& g : materialize(h.group)) {
    bool trivial = true;
    for (int i = 0; trivial && i < wl.size(); ++i)
      trivial = ssg::find_coset(h, wl, h.multiply(wl.reps[i], g)) == i;
    for (int i = 0; trivial && i < ur.size(); ++i)
      trivial = ssg::find_coset(h, ur, h.multiply(ur.reps[i], g)) == i;
    if (trivial) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("coset enumeration over a cyclic handle") {
  ZnHandle h{12, 4, 3};

  auto wl = ssg::enumerate_cosets(h, SubgroupTag::L);
  REQUIRE(wl.size() == 4);
  CHECK(wl.reps == std::vector<int>{0, 1, 2, 3});
  CHECK(wl.schreier[0] == std::pair<int, int>(-1, -1));
  CHECK(wl.schreier[2] == std::pair<int, int>(1, 0));
  for (int e = 0; e < 12; ++e) CHECK(ssg::find_coset(h, wl, e) == e % 4);

  auto ur = ssg::enumerate_cosets(h, SubgroupTag::R);
  REQUIRE(ur.size() == 3);
  CHECK(ur.reps == std::vector<int>{0, 1, 2});

  SECTION("bound is enforced") {
    CHECK_THROWS_AS(ssg::enumerate_cosets(h, SubgroupTag::L, 3), ssg::coset_bound_error);
    CHECK_THROWS_AS(ssg::build_bicoset(h, std::vector<int>{1}, 2), ssg::coset_bound_error);
  }

  SECTION("inconsistent membership oracle is reported") {
    BrokenHandle b;
    static_cast<ZnHandle&>(b) = h;
    CHECK_THROWS_AS(ssg::enumerate_cosets(b, SubgroupTag::L), std::logic_error);
  }
}

TEST_CASE("trivial subgroups of Z2 give a perfect matching") {
  ZnHandle h{2, 2, 2};
  auto built = ssg::build_bicoset(h, std::vector<int>{0});
  CHECK(built.graph == BipartiteGraph(2, 2, {{0, 0}, {1, 1}}));
  CHECK_FALSE(ssg::is_connected(built.graph));
  CHECK_FALSE(ssg::connectivity_criterion(h, std::vector<int>{0}));
  CHECK(ssg::degree_contract(h, std::vector<int>{0}) == std::pair<long, long>(1, 1));
  CHECK(ssg::kernel_order_via_image(h, built) == 1);
  CHECK(built.action.order() == 2);
}

TEST_CASE("full double coset of Z12 gives a complete bipartite graph") {
  ZnHandle h{12, 4, 3};
  std::vector<int> d = {1};
  auto built = ssg::build_bicoset(h, d);
  CHECK(built.graph == refc::complete_bipartite(4, 3));
  CHECK(ssg::connectivity_criterion(h, d));
  CHECK(ssg::degree_contract(h, d) == std::pair<long, long>(3, 4));
  CHECK(ssg::kernel_order_via_image(h, built) == 1);
  CHECK(ssg::edge_orbit_count(built.graph, built.action.generators()) == 1);
}

TEST_CASE("disconnected cyclic example matches the connectivity criterion") {
  // L = {0,4,8}, R = {0,6}: the generated comparison subgroup is the even
  // residues, index 2, so the graph falls into two components.
  ZnHandle h{12, 4, 6};
  std::vector<int> d = {1};
  auto built = ssg::build_bicoset(h, d);
  CHECK(built.graph.n_w == 4);
  CHECK(built.graph.n_u == 6);
  CHECK(built.graph.edge_count() == 12);
  CHECK(bidegrees(built.graph) == std::pair<int, int>(3, 2));
  CHECK_FALSE(ssg::is_connected(built.graph));
  CHECK_FALSE(ssg::connectivity_criterion(h, d));
  CHECK(ssg::degree_contract(h, d) == std::pair<long, long>(3, 2));
}

TEST_CASE("order-2 subgroups of S3 build a hexagon") {
  PermGroup g = sym3();
  PermGroup l(3, {Permutation::from_cycles("(0 1)", 3)});
  PermGroup r(3, {Permutation::from_cycles("(0 2)", 3)});
  PermGroupHandle h(g, l, r);
  std::vector<Permutation> d = {Permutation::identity(3)};

  auto built = ssg::build_bicoset(h, d);
  CHECK(built.graph.n_w == 3);
  CHECK(built.graph.n_u == 3);
  CHECK(bidegrees(built.graph) == std::pair<int, int>(2, 2));
  CHECK(ssg::is_connected(built.graph));
  CHECK(ssg::isomorphic(built.graph, refc::even_cycle(3)));

  CHECK(ssg::connectivity_criterion(h, d));
  CHECK(ssg::degree_contract(h, d) == std::pair<long, long>(2, 2));
  CHECK(built.action.order() == 6);
  CHECK(ssg::kernel_order_via_image(h, built) == 1);
  CHECK(ssg::kernel_order_via_stabilizer(h) == 1);
  CHECK(ssg::is_edge_transitive(built.graph, built.action.generators()));

  SECTION("build is deterministic") {
    auto again = ssg::build_bicoset(h, d);
    CHECK(again.graph == built.graph);
    CHECK(again.action.generators() == built.action.generators());
  }
}

TEST_CASE("whole group as both subgroups gives a single edge") {
  PermGroup g = sym3();
  PermGroupHandle h(g, g, g);
  std::vector<Permutation> d = {Permutation::identity(3)};
  auto built = ssg::build_bicoset(h, d);
  CHECK(built.graph == BipartiteGraph(1, 1, {{0, 0}}));
  CHECK(ssg::connectivity_criterion(h, d));
  CHECK(built.action.order() == 1);
  CHECK(ssg::kernel_order_via_image(h, built) == 6);
  CHECK(ssg::kernel_order_via_stabilizer(h) == 6);
}

TEST_CASE("two double cosets make a complete bipartite graph on S3") {
  PermGroup g = sym3();
  PermGroup l(3, {Permutation::from_cycles("(0 1)", 3)});
  PermGroupHandle h(g, l, l);
  std::vector<Permutation> d = {Permutation::identity(3), Permutation::from_cycles("(0 2)", 3)};

  auto built = ssg::build_bicoset(h, d);
  CHECK(built.graph == refc::complete_bipartite(3, 3));
  CHECK(ssg::degree_contract(h, d) == std::pair<long, long>(3, 3));
  CHECK(ssg::edge_orbit_count(built.graph, built.action.generators()) == 2);
  CHECK_FALSE(ssg::is_edge_transitive(built.graph, built.action.generators()));
  CHECK(ssg::connectivity_criterion(h, d));

  SECTION("representatives of one double coset are rejected") {
    std::vector<Permutation> dup = {Permutation::identity(3), Permutation::from_cycles("(0 1)", 3)};
    CHECK_THROWS_AS(ssg::build_bicoset(h, dup), std::invalid_argument);
    CHECK_THROWS_AS(ssg::build_bicoset(h, std::vector<Permutation>{}), std::invalid_argument);
  }
}

TEST_CASE("randomized builds agree with materialized double cosets") {
  auto rng = oracle::rng(20240817);
  int tried = 0;
  for (int trial = 0; tried < 24 && trial < 200; ++trial) {
    int deg = 4 + static_cast<int>(rng() % 3);
    std::vector<Permutation> ggens;
    int n_gens = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n_gens; ++i) ggens.push_back(oracle::random_perm(deg, rng));
    std::vector<Permutation> g_els;
    try {
      g_els = oracle::enumerate_group(ggens, 200);
    } catch (const std::runtime_error&) {
      continue;
    }
    if (g_els.size() < 2) continue;
    ++tried;

    auto pick = [&]() { return g_els[rng() % g_els.size()]; };
    auto subgroup = [&]() {
      std::vector<Permutation> sgens;
      int k = static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) sgens.push_back(pick());
      return sgens.empty() ? PermGroup(deg) : PermGroup(deg, sgens);
    };
    PermGroupHandle h(PermGroup(deg, ggens), subgroup(), subgroup());
    auto l_els = materialize(h.l_sub);
    auto r_els = materialize(h.r_sub);

    // One or two representatives from provably distinct double cosets.
    std::vector<Permutation> d_reps = {pick()};
    std::set<Permutation> first_dc;
    for (const auto& r : r_els)
      for (const auto& l : l_els) first_dc.insert(r * d_reps[0] * l);
    if (rng() % 2 == 0) {
      for (const auto& cand : g_els)
        if (!first_dc.count(cand)) {
          d_reps.push_back(cand);
          break;
        }
    }

    auto built = ssg::build_bicoset(h, d_reps);
    auto wl = ssg::enumerate_cosets(h, SubgroupTag::L);
    auto ur = ssg::enumerate_cosets(h, SubgroupTag::R);
    REQUIRE(built.graph == oracle_bicoset(h, d_reps, wl, ur));

    auto [wd, ud] = ssg::degree_contract(h, d_reps);
    REQUIRE(bidegrees(built.graph) == std::pair<int, int>(static_cast<int>(wd), static_cast<int>(ud)));
    REQUIRE(ssg::connectivity_criterion(h, d_reps) == ssg::is_connected(built.graph));

    BigInt kernel = ssg::kernel_order_via_image(h, built);
    REQUIRE(kernel == ssg::kernel_order_via_stabilizer(h));
    REQUIRE(kernel == oracle_kernel(h, wl, ur));

    REQUIRE(ssg::edge_orbit_count(built.graph, built.action.generators()) ==
            static_cast<int>(d_reps.size()));
    for (const auto& p : built.action.generators())
      REQUIRE(ssg::is_graph_automorphism(built.graph, p));
  }
  REQUIRE(tried == 24);
}

TEST_CASE("built graph does not depend on generator order") {
  PermGroup l(3, {Permutation::from_cycles("(0 1)", 3)});
  PermGroup r(3, {Permutation::from_cycles("(0 2)", 3)});
  std::vector<Permutation> fwd = {Permutation::from_cycles("(0 1)", 3),
                                  Permutation::from_cycles("(0 2)", 3)};
  std::vector<Permutation> rev = {fwd[1], fwd[0]};
  PermGroupHandle ha(PermGroup(3, fwd), l, r);
  PermGroupHandle hb(PermGroup(3, rev), l, r);
  std::vector<Permutation> d = {Permutation::identity(3)};

  auto a = ssg::build_bicoset(ha, d);
  auto b = ssg::build_bicoset(hb, d);
  CHECK(a.graph.n_w == b.graph.n_w);
  CHECK(a.graph.n_u == b.graph.n_u);
  CHECK(a.graph.edge_count() == b.graph.edge_count());
  CHECK(ssg::isomorphic(a.graph, b.graph));

  auto l_els = materialize(l);
  auto keys = [&](const ssg::CosetSpace<Permutation>& s) {
    std::set<std::vector<int>> out;
    for (const auto& rep : s.reps) out.insert(coset_key(l_els, rep));
    return out;
  };
  CHECK(keys(ssg::enumerate_cosets(ha, SubgroupTag::L)) == keys(ssg::enumerate_cosets(hb, SubgroupTag::L)));
}

TEST_CASE("semitransitive actions decompose and rebuild") {
  SECTION("hexagon round trip") {
    PermGroup g = sym3();
    PermGroup l(3, {Permutation::from_cycles("(0 1)", 3)});
    PermGroup r(3, {Permutation::from_cycles("(0 2)", 3)});
    auto built = ssg::build_bicoset(PermGroupHandle(g, l, r), std::vector<Permutation>{Permutation::identity(3)});
    REQUIRE(ssg::is_semitransitive(built.graph, built.action));

    auto dec = ssg::from_semitransitive(built.graph, built.action, built.graph.n_w, 0);
    PermGroup full(6, built.action.generators());
    CHECK(PermGroup(6, dec.l_gens).order() == 2);
    CHECK(PermGroup(6, dec.r_gens).order() == 2);
    CHECK(built.graph.has_edge(dec.d(0), 0));

    PermGroupHandle h2(full, PermGroup(6, dec.l_gens), PermGroup(6, dec.r_gens));
    auto rebuilt = ssg::build_bicoset(h2, std::vector<Permutation>{dec.d});
    CHECK(rebuilt.graph.n_w == built.graph.n_u);
    CHECK(rebuilt.graph.n_u == built.graph.n_w);
    CHECK(ssg::isomorphic(rebuilt.graph, built.graph));
  }

  SECTION("monomial action on the 27-point incidence") {
    BipartiteGraph s3 = refc::sigma3_reference();
    PermGroup act(36, refc::sigma3_monomial_gens());
    REQUIRE(ssg::is_semitransitive(s3, act));

    auto dec = ssg::from_semitransitive(s3, act, 27, 0);
    CHECK(PermGroup(36, dec.l_gens).order() == 1296 / 9);
    CHECK(PermGroup(36, dec.r_gens).order() == 1296 / 27);
    CHECK(s3.has_edge(dec.d(0), 0));

    PermGroupHandle h(act, PermGroup(36, dec.l_gens), PermGroup(36, dec.r_gens));
    auto rebuilt = ssg::build_bicoset(h, std::vector<Permutation>{dec.d});
    CHECK(rebuilt.graph.n_w == 9);
    CHECK(rebuilt.graph.n_u == 27);
    CHECK(bidegrees(rebuilt.graph) == std::pair<int, int>(9, 3));
    CHECK(ssg::isomorphic(rebuilt.graph, s3));
    CHECK(ssg::kernel_order_via_image(h, rebuilt) == 1);
    CHECK(rebuilt.action.order() == 1296);
    CHECK(ssg::is_edge_transitive(rebuilt.graph, rebuilt.action.generators()));
  }

  SECTION("full automorphism action on the expanded 27+27 graph") {
    BipartiteGraph g9 = ssg::expand(refc::sigma3_reference(), 3);
    PermGroup act(54, refc::gamma9_witness_gens());
    REQUIRE(ssg::is_semitransitive(g9, act));

    auto dec = ssg::from_semitransitive(g9, act, 27, 0);
    PermGroupHandle h(act, PermGroup(54, dec.l_gens), PermGroup(54, dec.r_gens));
    auto rebuilt = ssg::build_bicoset(h, std::vector<Permutation>{dec.d});
    CHECK(rebuilt.graph.n_w == 27);
    CHECK(rebuilt.graph.n_u == 27);
    CHECK(ssg::isomorphic(rebuilt.graph, g9));
    CHECK(ssg::kernel_order_via_image(h, rebuilt) == 1);
    CHECK(rebuilt.action.order() == act.order());
    CHECK(ssg::is_edge_transitive(rebuilt.graph, rebuilt.action.generators()));
  }

  SECTION("invalid inputs are rejected") {
    BipartiteGraph c6 = refc::even_cycle(3);
    CHECK_THROWS_AS(ssg::from_semitransitive(c6, PermGroup(6), 3, 0), std::invalid_argument);
    PermGroup g = sym3();
    PermGroup l(3, {Permutation::from_cycles("(0 1)", 3)});
    PermGroup r(3, {Permutation::from_cycles("(0 2)", 3)});
    auto built = ssg::build_bicoset(PermGroupHandle(g, l, r), std::vector<Permutation>{Permutation::identity(3)});
    CHECK_THROWS_AS(ssg::from_semitransitive(built.graph, built.action, 0, 3), std::invalid_argument);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ssg/autosearch.hpp"
#include "ssg/families.hpp"
#include "oracles.hpp"
#include "reference_constructions.hpp"

using ssg::BigInt;
using ssg::BipartiteGraph;
using ssg::NormalFormElement;
using ssg::PermGroup;
using ssg::Permutation;
using ssg::Sigma3Group;
using ssg::SubgroupTag;
using ssg::VertexPartition;

namespace {

std::pair<int, int> bidegrees(const BipartiteGraph& g) {
  REQUIRE(ssg::is_biregular(g));
  return {g.n_w ? ssg::degrees_w(g)[0] : 0, g.n_u ? ssg::degrees_u(g)[0] : 0};
}

NormalFormElement random_nf(int p, std::mt19937& r) {
  return {static_cast<int>(r() % (p * p)), static_cast<int>(r() % p), static_cast<int>(r() % (p - 1))};
}

}  // namespace

TEST_CASE("normal form arithmetic in the sigma3 group") {
  Sigma3Group g(5);
  CHECK(g.p() == 5);
  CHECK(g.s() == 7);
  CHECK(Sigma3Group(7).s() == 19);

  auto id = g.identity();
  auto a = g.a(), b = g.b(), x = g.x();

  SECTION("defining relations") {
    CHECK(g.power(a, 25) == id);
    CHECK(g.power(a, 5) != id);
    CHECK(g.power(b, 5) == id);
    CHECK(g.power(x, 4) == id);
    auto conj = [&](NormalFormElement e, NormalFormElement h) {
      return g.multiply(g.multiply(g.invert(h), e), h);
    };
    CHECK(conj(a, b) == g.power(a, 6));   // a^b = a^{1+p}
    CHECK(conj(a, x) == g.power(a, 7));   // a^x = a^s
    CHECK(conj(b, x) == b);
    auto c = g.multiply(g.multiply(g.invert(a), g.invert(b)), g.multiply(a, b));
    CHECK(c == g.power(a, 5));            // [a,b] = a^p
  }

  SECTION("group laws on random elements") {
    auto rng = oracle::rng(5001);
    for (int t = 0; t < 1000; ++t) {
      auto e1 = random_nf(5, rng), e2 = random_nf(5, rng), e3 = random_nf(5, rng);
      REQUIRE(g.multiply(g.multiply(e1, e2), e3) == g.multiply(e1, g.multiply(e2, e3)));
    }
    for (int t = 0; t < 200; ++t) {
      auto e = random_nf(5, rng);
      REQUIRE(g.multiply(e, g.invert(e)) == id);
      REQUIRE(g.multiply(g.invert(e), e) == id);
      REQUIRE(g.multiply(id, e) == e);
      REQUIRE(g.multiply(e, id) == e);
    }
  }

  SECTION("orders and membership") {
    CHECK(g.order() == 500);
    CHECK(g.subgroup_order(SubgroupTag::L) == 4);
    CHECK(g.subgroup_order(SubgroupTag::R) == 20);
    CHECK(g.generated_order({a, b, x}) == 500);
    CHECK(g.generated_order({b}) == 5);
    CHECK(g.generated_order({x}) == 4);
    CHECK(g.generated_order({a}) == 25);
    CHECK(g.in_subgroup(SubgroupTag::L, x));
    CHECK_FALSE(g.in_subgroup(SubgroupTag::L, b));
    CHECK(g.in_subgroup(SubgroupTag::R, b));
    CHECK_FALSE(g.in_subgroup(SubgroupTag::R, a));
  }

  SECTION("center and exponent of the p-part") {
    // P = {a^i b^j}; its center is <a^p> of order p and its exponent is p^2.
    auto ap = g.power(a, 5);
    int central = 0;
    bool all_order_divides = true;
    bool some_order_p2 = false;
    for (int i = 0; i < 25; ++i)
      for (int j = 0; j < 5; ++j) {
        NormalFormElement e{i, j, 0};
        if (g.multiply(e, a) == g.multiply(a, e) && g.multiply(e, b) == g.multiply(b, e)) {
          ++central;
          bool power_of_ap = false;
          for (int t = 0; t < 5; ++t) power_of_ap |= e == g.power(ap, t);
          CHECK(power_of_ap);
        }
        if (g.power(e, 25) != id) all_order_divides = false;
        if (g.power(e, 5) != id) some_order_p2 = true;
      }
    CHECK(central == 5);
    CHECK(all_order_divides);
    CHECK(some_order_p2);
  }

  SECTION("input validation") {
    CHECK_THROWS_AS(ssg::nf_multiply({25, 0, 0}, {0, 0, 0}, 5, 7), std::invalid_argument);
    CHECK_THROWS_AS(ssg::nf_multiply({0, 0, 0}, {0, 5, 0}, 5, 7), std::invalid_argument);
    CHECK_THROWS_AS(ssg::nf_multiply({0, 0, 0}, {0, 0, 4}, 5, 7), std::invalid_argument);
    CHECK_THROWS_AS(Sigma3Group(4), std::invalid_argument);
    CHECK_THROWS_AS(Sigma3Group(3), std::invalid_argument);
  }
}

TEST_CASE("small sigma builds") {
  auto s3 = ssg::build_sigma_small(3);
  CHECK(s3.graph == refc::sigma3_reference());
  CHECK(s3.action.generators() == refc::sigma3_monomial_gens());
  CHECK(s3.action.order() == 1296);
  CHECK(s3.graph.edge_count() == 81);
  CHECK(bidegrees(s3.graph) == std::pair<int, int>(3, 9));
  CHECK(ssg::is_edge_transitive(s3.graph, s3.action.generators()));
  for (const auto& c : ssg::twin_classes(s3.graph, VertexPartition::Side::W).cells) CHECK(c.size() == 1);
  CHECK_FALSE(s3.provenance.has_value());

  auto s6 = ssg::build_sigma_small(6);
  CHECK(s6.graph == ssg::bicomplement(s3.graph));
  CHECK(s6.graph.edge_count() == 162);
  CHECK(bidegrees(s6.graph) == std::pair<int, int>(6, 18));
  CHECK(s6.action.order() == 1296);
  CHECK(ssg::is_edge_transitive(s6.graph, s6.action.generators()));
  for (const auto& c : ssg::twin_classes(s6.graph, VertexPartition::Side::W).cells) CHECK(c.size() == 1);

  CHECK_THROWS_AS(ssg::build_sigma_small(4), std::invalid_argument);
}

TEST_CASE("small gamma builds") {
  auto g9 = ssg::build_gamma_small(9);
  CHECK(g9.graph == ssg::expand(refc::sigma3_reference(), 3));
  CHECK(g9.action.generators() == refc::gamma9_witness_gens());
  CHECK(g9.graph.n_w == 27);
  CHECK(g9.graph.n_u == 27);
  CHECK(ssg::is_regular(g9.graph));
  CHECK(bidegrees(g9.graph) == std::pair<int, int>(9, 9));
  CHECK(g9.action.order() == BigInt("13060694016"));
  CHECK(ssg::is_edge_transitive(g9.graph, g9.action.generators()));
  auto twins = ssg::twin_classes(g9.graph, VertexPartition::Side::U);
  CHECK(twins.cells.size() == 9);
  for (const auto& c : twins.cells) CHECK(c.size() == 3);

  auto g18 = ssg::build_gamma_small(18);
  CHECK(g18.graph == ssg::bicomplement(g9.graph));
  CHECK(bidegrees(g18.graph) == std::pair<int, int>(18, 18));
  CHECK(ssg::is_edge_transitive(g18.graph, g18.action.generators()));

  CHECK_THROWS_AS(ssg::build_gamma_small(12), std::invalid_argument);
}

TEST_CASE("sigma1 at p = 5") {
  auto data = ssg::sigma1_group(5);
  auto fam = ssg::build_sigma1(5);

  CHECK(fam.graph.n_w == 125);
  CHECK(fam.graph.n_u == 25);
  CHECK(fam.graph.edge_count() == 625);
  CHECK(bidegrees(fam.graph) == std::pair<int, int>(5, 25));
  CHECK(ssg::is_connected(fam.graph));
  CHECK(ssg::connectivity_criterion(data.handle, data.d_reps));
  for (const auto& c : ssg::twin_classes(fam.graph, VertexPartition::Side::W).cells) CHECK(c.size() == 1);

  REQUIRE(fam.provenance.has_value());
  CHECK(fam.provenance->group_order == 10000);
  CHECK(fam.provenance->l_order == 80);
  CHECK(fam.provenance->r_order == 400);
  CHECK(fam.action.order() == 10000);  // faithful: kernel is trivial
  CHECK(ssg::kernel_order_via_image(data.handle, {fam.graph, fam.action}) == 1);
  CHECK(ssg::kernel_order_via_stabilizer(data.handle) == 1);
  CHECK(ssg::degree_contract(data.handle, data.d_reps) == std::pair<long, long>(5, 25));
  CHECK(ssg::edge_orbit_count(fam.graph, fam.action.generators()) == 1);

  SECTION("L meets R in the torus") {
    // |L ∩ R| = |L| / |orbit of the R-coset of the identity under L|.
    auto wl = ssg::enumerate_cosets(data.handle, SubgroupTag::L);
    auto ur = ssg::enumerate_cosets(data.handle, SubgroupTag::R);
    std::vector<Permutation> l_perms;
    for (const auto& e : data.handle.subgroup_generators(SubgroupTag::L))
      l_perms.push_back(ssg::induced_coset_permutation(data.handle, wl, ur, e));
    PermGroup l_action(wl.size() + ur.size(), l_perms);
    CHECK(BigInt(80) / l_action.orbit(wl.size()).size() == 16);
  }

  SECTION("H normalizes the unipotent <x>") {
    int p = 5, w = 2;
    ssg::GfMatrix x(p, {{{1, 2, 2}, {0, 1, 2}, {0, 0, 1}}});
    ssg::GfMatrix h1(p, {{{w * w, 0, 0}, {0, w, 0}, {0, 0, 1}}});
    ssg::GfMatrix h2(p, {{{ssg::gf_inv(w, p), 0, 0}, {0, 1, 0}, {0, 0, w}}});
    CHECK(h1.inverse() * x * h1 == ssg::mat_pow(x, 3));
    CHECK(h2.inverse() * x * h2 == ssg::mat_pow(x, 2));
  }

  SECTION("matches the point/plane incidence model") {
    // Independent model: the orbit of the plane {z = 0} under the same six
    // maps, done in plain integer arithmetic, against point membership.
    const int p = 5;
    auto idx = [&](int a, int b, int c) { return (a * p + b) * p + c; };
    using Map = std::function<std::array<int, 3>(int, int, int)>;
    std::vector<Map> maps = {
        [&](int a, int b, int c) { return std::array<int, 3>{(a + 1) % p, b, c}; },
        [&](int a, int b, int c) { return std::array<int, 3>{a, (b + 1) % p, c}; },
        [&](int a, int b, int c) { return std::array<int, 3>{a, b, (c + 1) % p}; },
        [&](int a, int b, int c) {
          return std::array<int, 3>{a, (2 * a + b) % p, (2 * a + 2 * b + c) % p};
        },
        [&](int a, int b, int c) { return std::array<int, 3>{4 * a % p, 2 * b % p, c}; },
        [&](int a, int b, int c) { return std::array<int, 3>{3 * a % p, b, 2 * c % p}; }};
    std::set<std::vector<int>> planes;
    std::vector<std::vector<int>> todo;
    std::vector<int> seed;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) seed.push_back(idx(a, b, 0));
    planes.insert(seed);
    todo.push_back(seed);
    while (!todo.empty()) {
      auto pl = todo.back();
      todo.pop_back();
      for (const auto& m : maps) {
        std::vector<int> img;
        for (int q : pl) {
          auto [a, b, c] = m(q / (p * p), q / p % p, q % p);
          img.push_back(idx(a, b, c));
        }
        std::sort(img.begin(), img.end());
        if (planes.insert(img).second) todo.push_back(img);
      }
    }
    REQUIRE(planes.size() == 25);
    std::vector<std::pair<int, int>> edges;
    int u = 0;
    for (const auto& pl : planes) {
      for (int q : pl) edges.emplace_back(q, u);
      ++u;
    }
    BipartiteGraph model(125, 25, edges);
    CHECK(ssg::isomorphic(model, fam.graph));
  }

  CHECK_THROWS_AS(ssg::build_sigma1(4), std::invalid_argument);
  CHECK_THROWS_AS(ssg::build_sigma1(3), std::invalid_argument);
}

TEST_CASE("sigma2 at p = 5") {
  auto data = ssg::sigma2_group(5);
  auto fam = ssg::build_sigma2(5);

  CHECK(fam.graph.n_w == 125);
  CHECK(fam.graph.n_u == 25);
  CHECK(fam.graph.edge_count() == 250);
  CHECK(bidegrees(fam.graph) == std::pair<int, int>(2, 10));
  CHECK(ssg::is_connected(fam.graph));
  CHECK(ssg::connectivity_criterion(data.handle, data.d_reps));

  REQUIRE(fam.provenance.has_value());
  CHECK(fam.provenance->group_order == BigInt("248832000000"));
  CHECK(data.handle.order() == BigInt("248832000000"));
  CHECK(fam.action.order() == BigInt("248832000000"));  // faithful on the cosets
  CHECK(ssg::kernel_order_via_image(data.handle, {fam.graph, fam.action}) == 1);
  CHECK(ssg::degree_contract(data.handle, data.d_reps) == std::pair<long, long>(2, 10));
  CHECK(ssg::edge_orbit_count(fam.graph, fam.action.generators()) == 1);
  for (const auto& c : ssg::twin_classes(fam.graph, VertexPartition::Side::W).cells) CHECK(c.size() == 1);

  SECTION("block structure on the U side") {
    auto blocks = ssg::sigma2_block_system(5);
    REQUIRE(blocks.cells.size() == 5);
    for (const auto& c : blocks.cells) CHECK(c.size() == 5);
    auto met = ssg::blocks_met(fam.graph, blocks);
    for (int w = 0; w < fam.graph.n_w; ++w) REQUIRE(met[w] == 2);
  }

  SECTION("matches the adjacent-block pair model") {
    // Independent model: W = pairs {(b, x), (b+1, y)} of points in cyclically
    // adjacent blocks, U = the 25 points, incidence by membership.
    const int p = 5;
    std::vector<std::pair<int, int>> edges;
    int w = 0;
    for (int b = 0; b < p; ++b)
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
          edges.emplace_back(w, p * b + x);
          edges.emplace_back(w, p * ((b + 1) % p) + y);
          ++w;
        }
    BipartiteGraph model(125, 25, edges);
    CHECK(ssg::isomorphic(model, fam.graph));
  }

  CHECK_THROWS_AS(ssg::build_sigma2(9), std::invalid_argument);
}

TEST_CASE("sigma3 at p = 5") {
  auto data = ssg::sigma3_group(5);
  auto fam = ssg::build_sigma3(5);

  CHECK(fam.graph.n_w == 125);
  CHECK(fam.graph.n_u == 25);
  CHECK(fam.graph.edge_count() == 500);
  CHECK(bidegrees(fam.graph) == std::pair<int, int>(4, 20));
  CHECK(ssg::is_connected(fam.graph));
  CHECK(ssg::connectivity_criterion(data.handle, data.d_reps));
  for (const auto& c : ssg::twin_classes(fam.graph, VertexPartition::Side::W).cells) CHECK(c.size() == 1);

  REQUIRE(fam.provenance.has_value());
  CHECK(fam.provenance->group_order == 500);
  CHECK(fam.provenance->l_order == 4);
  CHECK(fam.provenance->r_order == 20);
  CHECK(fam.action.order() == 500);  // faithful
  CHECK(ssg::kernel_order_via_image(data.handle, {fam.graph, fam.action}) == 1);
  CHECK(ssg::degree_contract(data.handle, data.d_reps) == std::pair<long, long>(4, 20));
  CHECK(ssg::edge_orbit_count(fam.graph, fam.action.generators()) == 1);

  SECTION("block structure on the U side") {
    auto blocks = ssg::sigma3_block_system(5);
    REQUIRE(blocks.cells.size() == 5);
    for (const auto& c : blocks.cells) CHECK(c.size() == 5);
    auto met = ssg::blocks_met(fam.graph, blocks);
    for (int w = 0; w < fam.graph.n_w; ++w) REQUIRE(met[w] == 4);
  }

  SECTION("decomposes back through its own action") {
    REQUIRE(ssg::is_semitransitive(fam.graph, fam.action));
    auto dec = ssg::from_semitransitive(fam.graph, fam.action, fam.graph.n_w, 0);
    ssg::PermGroupHandle h(PermGroup(150, fam.action.generators()), PermGroup(150, dec.l_gens),
                           PermGroup(150, dec.r_gens));
    auto rebuilt = ssg::build_bicoset(h, std::vector<Permutation>{dec.d});
    CHECK(rebuilt.graph.n_w == 25);
    CHECK(rebuilt.graph.n_u == 125);
    CHECK(ssg::isomorphic(rebuilt.graph, fam.graph));
  }
}

TEST_CASE("expanded gamma families at p = 5") {
  auto s1 = ssg::build_sigma1(5);
  auto g1 = ssg::build_gamma_family(1, 5);
  CHECK(g1.graph == ssg::expand(s1.graph, 5));
  CHECK(g1.graph.n_w == 125);
  CHECK(g1.graph.n_u == 125);
  CHECK(ssg::is_regular(g1.graph));
  CHECK(bidegrees(g1.graph) == std::pair<int, int>(25, 25));
  CHECK(ssg::is_edge_transitive(g1.graph, g1.action.generators()));
  CHECK(ssg::is_semitransitive(g1.graph, g1.action));

  auto fiber_cells = std::vector<std::vector<int>>();
  for (int u = 0; u < 25; ++u) {
    std::vector<int> cell;
    for (int i = 0; i < 5; ++i) cell.push_back(5 * u + i);
    fiber_cells.push_back(cell);
  }
  auto fibers = VertexPartition::make(VertexPartition::Side::U, fiber_cells, 125);
  CHECK(ssg::quotient(g1.graph, VertexPartition::singletons(VertexPartition::Side::W, 125), fibers) ==
        s1.graph);

  auto g2 = ssg::build_gamma_family(2, 5);
  CHECK(bidegrees(g2.graph) == std::pair<int, int>(10, 10));
  CHECK(ssg::is_edge_transitive(g2.graph, g2.action.generators()));

  auto g3 = ssg::build_gamma_family(3, 5);
  CHECK(bidegrees(g3.graph) == std::pair<int, int>(20, 20));
  CHECK(ssg::is_edge_transitive(g3.graph, g3.action.generators()));

  CHECK_THROWS_AS(ssg::build_gamma_family(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(ssg::build_gamma_family(1, 4), std::invalid_argument);
}

TEST_CASE("family tokens") {
  CHECK(ssg::build_family("sigma3small").graph == ssg::build_sigma_small(3).graph);
  CHECK(ssg::build_family("sigma6small").graph == ssg::build_sigma_small(6).graph);
  CHECK(ssg::build_family("gamma9").graph == ssg::build_gamma_small(9).graph);
  CHECK(ssg::build_family("gamma18").graph == ssg::build_gamma_small(18).graph);
  auto s35 = ssg::build_family("sigma3:5");
  CHECK(s35.graph.n_w == 125);
  CHECK(s35.graph.n_u == 25);
  CHECK(ssg::build_family("gamma3:5").graph == ssg::expand(s35.graph, 5));

  for (const char* bad : {"bogus", "", "sigma1", "sigma1:", "sigma1:4", "sigma1:3", "sigma1:5x",
                          "sigma4:5", "gamma4:5", "sigma1:999999999999", "SIGMA1:5", "sigma1:05x"})
    CHECK_THROWS_AS(ssg::build_family(bad), std::invalid_argument);
}

TEST_CASE("prime validation helper") {
  CHECK(ssg::is_prime(2));
  CHECK(ssg::is_prime(5));
  CHECK(ssg::is_prime(97));
  CHECK_FALSE(ssg::is_prime(1));
  CHECK_FALSE(ssg::is_prime(0));
  CHECK_FALSE(ssg::is_prime(-7));
  CHECK_FALSE(ssg::is_prime(91));
}

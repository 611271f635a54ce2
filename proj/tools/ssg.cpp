// ssg: build, transform and verify the bipartite graph families in this
// toolkit.  Exit codes: 0 success, 1 claim failure, 2 usage error,
// 3 undecided (certificate inconclusive or enumeration aborted).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssg/autosearch.hpp"
#include "ssg/bicoset.hpp"
#include "ssg/bigraph.hpp"
#include "ssg/families.hpp"
#include "ssg/gf.hpp"
#include "ssg/report.hpp"

namespace {

using ssg::BigInt;
using ssg::BipartiteGraph;
using ssg::Claim;
using ssg::PermGroup;
using ssg::Permutation;
using ssg::VertexPartition;

long coset_bound_from_env() {
  const char* raw = std::getenv("SSG_COSET_BOUND");
  if (raw == nullptr || *raw == '\0') return 1000000;
  std::string text(raw);
  if (text.size() > 12 || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("SSG_COSET_BOUND must be a positive decimal integer");
  long v = std::stol(text);
  if (v <= 0) throw std::invalid_argument("SSG_COSET_BOUND must be positive");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
  if (!out) throw std::invalid_argument("write failed: " + path);
}

/// Arguments name either a graph file on disk or a family token.
struct LoadedGraph {
  BipartiteGraph graph;
  std::optional<ssg::FamilyBuild> family;  // present when built from a token
};

LoadedGraph load_graph(const std::string& arg, long bound) {
  if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg))
    return {ssg::parse_bigraph(read_file(arg)), std::nullopt};
  auto fam = ssg::build_family(arg, bound);
  BipartiteGraph g = fam.graph;
  return {std::move(g), std::move(fam)};
}

void emit_graph(const BipartiteGraph& g, const std::string& out_path) {
  std::string text = ssg::write_bigraph(g);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  write_file(out_path, text);
  std::cout << "wrote " << out_path << ": parts " << g.n_w << ' ' << g.n_u << ", edges "
            << g.edge_count() << '\n';
}

std::vector<Permutation> read_witness(const std::string& path, int degree) {
  std::istringstream is(read_file(path));
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> images;
    int v;
    while (ls >> v) images.push_back(v);
    if (static_cast<int>(images.size()) != degree)
      throw std::invalid_argument("witness line has " + std::to_string(images.size()) +
                                  " entries, expected " + std::to_string(degree));
    out.emplace_back(std::move(images));
  }
  if (out.empty()) throw std::invalid_argument("witness file contains no permutations");
  return out;
}

const char* tri_name(ssg::SemisymVerdict::Tri t) {
  switch (t) {
    case ssg::SemisymVerdict::Tri::yes: return "yes";
    case ssg::SemisymVerdict::Tri::no: return "no";
    default: return "unknown";
  }
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string fmt_parts(const BipartiteGraph& g) {
  return std::to_string(g.n_w) + ' ' + std::to_string(g.n_u);
}

std::string fmt_valency(const BipartiteGraph& g) {
  if (!ssg::is_regular(g)) return "not regular";
  return std::to_string(g.n_w ? static_cast<int>(g.adj[0].size()) : 0);
}

std::string fmt_valencies(const BipartiteGraph& g) {
  if (!ssg::is_biregular(g)) return "not biregular";
  return std::to_string(ssg::degrees_w(g)[0]) + ' ' + std::to_string(ssg::degrees_u(g)[0]);
}

std::string fmt_uniform_blocks(const BipartiteGraph& g, const VertexPartition& blocks) {
  auto met = ssg::blocks_met(g, blocks);
  int lo = met.empty() ? 0 : *std::min_element(met.begin(), met.end());
  int hi = met.empty() ? 0 : *std::max_element(met.begin(), met.end());
  if (lo != hi) return "between " + std::to_string(lo) + " and " + std::to_string(hi) + " of " +
                       std::to_string(blocks.cells.size());
  return std::to_string(lo) + " of " + std::to_string(blocks.cells.size());
}

PermGroup restrict_to_side(const std::vector<Permutation>& gens, int offset, int count) {
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    std::vector<int> images(count);
    for (int i = 0; i < count; ++i) {
      int y = g(offset + i) - offset;
      if (y < 0 || y >= count)
        throw std::logic_error("automorphism does not preserve the side restriction");
      images[i] = y;
    }
    out.emplace_back(std::move(images));
  }
  return PermGroup(count, out);
}

// ---- verification claim suites ----

std::vector<Claim> suite_p3() {
  std::vector<Claim> claims;
  auto g9 = ssg::build_gamma_small(9);
  auto g18 = ssg::build_gamma_small(18);
  auto s3 = ssg::build_sigma_small(3);
  auto s6 = ssg::build_sigma_small(6);

  claims.push_back(ssg::run_claim("p3.01-gamma9-parts", "gamma9 is bipartite with parts of size 27 and 27",
                                  "27 27", [&] { return fmt_parts(g9.graph); }));
  claims.push_back(ssg::run_claim("p3.02-gamma9-valency", "gamma9 is regular of valency 9", "9",
                                  [&] { return fmt_valency(g9.graph); }));
  claims.push_back(ssg::run_claim("p3.03-gamma9-connected", "gamma9 is connected", "true",
                                  [&] { return fmt_bool(ssg::is_connected(g9.graph)); }));
  claims.push_back(ssg::run_claim(
      "p3.04-gamma9-semisymmetric",
      "gamma9 is regular, edge-transitive and not vertex-transitive (full automorphism search)", "true",
      [&] {
        auto v = ssg::semisymmetry(g9.graph, ssg::SemisymMode::full);
        return v.decided() ? fmt_bool(v.is_semisymmetric()) : "undecided";
      }));
  claims.push_back(ssg::run_claim("p3.05-gamma18-valency", "gamma18 is regular of valency 18", "18",
                                  [&] { return fmt_valency(g18.graph); }));
  claims.push_back(ssg::run_claim(
      "p3.06-gamma18-semisymmetric",
      "gamma18 is regular, edge-transitive and not vertex-transitive (full automorphism search)", "true",
      [&] {
        auto v = ssg::semisymmetry(g18.graph, ssg::SemisymMode::full);
        return v.decided() ? fmt_bool(v.is_semisymmetric()) : "undecided";
      }));
  claims.push_back(ssg::run_claim("p3.07-gamma18-bicomplement",
                                  "gamma18 is the bipartite complement of gamma9", "true",
                                  [&] { return fmt_bool(g18.graph == ssg::bicomplement(g9.graph)); }));
  claims.push_back(ssg::run_claim(
      "p3.08-sigma3-aut-order", "the full automorphism group of sigma3small has order 1296", "1296", [&] {
        auto aut = ssg::automorphism_group(ssg::ColoredGraph::from_bigraph(s3.graph));
        return aut.order.str();
      }));
  claims.push_back(ssg::run_claim(
      "p3.09-sigma6-aut-order", "the full automorphism group of sigma6small has order 1296", "1296", [&] {
        auto aut = ssg::automorphism_group(ssg::ColoredGraph::from_bigraph(s6.graph));
        return aut.order.str();
      }));
  claims.push_back(ssg::run_claim(
      "p3.10-sigma3-u-imprimitive",
      "Aut(sigma3small) acts imprimitively on the 9 U vertices with 3 blocks of size 3", "3 blocks of 3",
      [&] {
        auto aut = ssg::automorphism_group(ssg::ColoredGraph::from_bigraph(s3.graph));
        auto on_u = restrict_to_side(aut.generators, s3.graph.n_w, s3.graph.n_u);
        for (const auto& bs : on_u.minimal_blocks())
          if (bs.block_count() == 3 && bs.blocks[0].size() == 3) return std::string("3 blocks of 3");
        return std::string(on_u.is_primitive() ? "primitive" : "different block structure");
      }));
  claims.push_back(ssg::run_claim("p3.11-sigma3-w-primitive",
                                  "Aut(sigma3small) acts primitively on the 27 W vertices", "true", [&] {
                                    auto aut = ssg::automorphism_group(
                                        ssg::ColoredGraph::from_bigraph(s3.graph));
                                    auto on_w = restrict_to_side(aut.generators, 0, s3.graph.n_w);
                                    return fmt_bool(on_w.is_primitive());
                                  }));
  claims.push_back(ssg::run_claim("p3.12-sigma3-edge-transitive",
                                  "Aut(sigma3small) is transitive on the 81 edges", "true", [&] {
                                    auto aut = ssg::automorphism_group(
                                        ssg::ColoredGraph::from_bigraph(s3.graph));
                                    return fmt_bool(ssg::is_edge_transitive(s3.graph, aut.generators));
                                  }));

  // Structure of Aut(gamma9): the pointwise stabilizer of W, its U orbits,
  // and the induced quotient action.
  auto aut9 = ssg::automorphism_group(ssg::ColoredGraph::from_bigraph(g9.graph));
  PermGroup full9(54, aut9.generators);
  std::vector<int> w_points(27);
  for (int i = 0; i < 27; ++i) w_points[i] = i;
  claims.push_back(ssg::run_claim("p3.13-gamma9-fixer-order",
                                  "the pointwise stabilizer of the W side in Aut(gamma9) has order 6^9",
                                  "10077696", [&] {
                                    auto fix = full9.pointwise_stabilizer(w_points);
                                    return fix.order().str();
                                  }));
  claims.push_back(ssg::run_claim(
      "p3.14-gamma9-fixer-u-orbits", "the W-fixer's orbits on the U side are 9 cells of size 3",
      "9 cells of 3", [&] {
        auto fix = full9.pointwise_stabilizer(w_points);
        int cells = 0;
        bool uniform = true;
        for (const auto& orb : fix.orbits())
          if (orb.front() >= 27) {
            ++cells;
            uniform = uniform && orb.size() == 3;
          }
        if (!uniform) return std::string("cells of mixed size");
        return std::to_string(cells) + " cells of 3";
      }));
  claims.push_back(ssg::run_claim("p3.15-gamma9-aut-quotient-order",
                                  "|Aut(gamma9)| / 6^9 = 1296, the order of Aut(sigma3small)", "1296",
                                  [&] {
                                    if (aut9.order % BigInt("10077696") != 0) return std::string("not divisible");
                                    return (aut9.order / BigInt("10077696")).str();
                                  }));
  claims.push_back(ssg::run_claim("p3.16-gamma9-quotient-iso",
                                  "the quotient of gamma9 by its U twin classes is isomorphic to sigma3small",
                                  "true", [&] {
                                    auto q = ssg::quotient(
                                        g9.graph,
                                        VertexPartition::singletons(VertexPartition::Side::W, g9.graph.n_w),
                                        ssg::twin_classes(g9.graph, VertexPartition::Side::U));
                                    return fmt_bool(ssg::isomorphic(q, s3.graph));
                                  }));
  claims.push_back(ssg::run_claim("p3.17-gamma9-w-twin-free", "no two W vertices of gamma9 share a neighborhood",
                                  "true", [&] {
                                    return fmt_bool(!ssg::has_twins(g9.graph, VertexPartition::Side::W));
                                  }));
  claims.push_back(ssg::run_claim("p3.18-gamma9-expansion",
                                  "gamma9 is isomorphic to the 3-fold expansion of sigma3small", "true",
                                  [&] {
                                    return fmt_bool(ssg::isomorphic(ssg::expand(s3.graph, 3), g9.graph));
                                  }));
  return claims;
}

void lemma_claims(std::vector<Claim>& claims, const std::string& prefix, int p) {
  ssg::GfMatrix x(p, {{{1, 2, 2}, {0, 1, 2}, {0, 0, 1}}});
  claims.push_back(ssg::run_claim(
      prefix + "-lemma-fixed-subspaces",
      "the unipotent matrix x fixes exactly one line and one plane of GF(p)^3", "1 1", [&, p] {
        auto lines = ssg::fixed_subspaces(x, 1);
        auto planes = ssg::fixed_subspaces(x, 2);
        bool expected_line = lines.size() == 1 && lines[0].contains(ssg::GfVector(p, 0, 0, 1));
        bool expected_plane = planes.size() == 1 && planes[0].contains(ssg::GfVector(p, 0, 1, 0)) &&
                              planes[0].contains(ssg::GfVector(p, 0, 0, 1));
        if (!expected_line || !expected_plane) return std::string("unexpected fixed subspaces");
        return std::to_string(lines.size()) + ' ' + std::to_string(planes.size());
      }));
  claims.push_back(ssg::run_claim(
      prefix + "-lemma-triple-intersection",
      "for every plane avoiding the fixed line and distinct i,j,k the images under x^i, x^j, x^k "
      "intersect trivially",
      "0 exceptions", [&, p] {
        ssg::GfVector fixed_line(p, 0, 0, 1);
        int bad = 0;
        for (const auto& s : ssg::enumerate_subspaces(p, 2)) {
          if (s.contains(fixed_line)) continue;
          for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
              for (int k = j + 1; k < p; ++k)
                if (ssg::triple_intersection(s, x, i, j, k).dim() != 0) ++bad;
        }
        return std::to_string(bad) + " exceptions";
      }));
  claims.push_back(ssg::run_claim(
      prefix + "-lemma-determinant",
      "det of the matrix with rows a*x^-i, a*x^-j, a*x^-k equals 4*a1^3*(i-j)(k-i)(k-j) mod p",
      "200 of 200", [&, p] {
        std::mt19937 rng(12345u + static_cast<unsigned>(p));
        int good = 0;
        for (int t = 0; t < 200; ++t) {
          ssg::GfVector a(p, static_cast<int>(rng() % p), static_cast<int>(rng() % p),
                          static_cast<int>(rng() % p));
          int i = static_cast<int>(rng() % p), j = static_cast<int>(rng() % p),
              k = static_cast<int>(rng() % p);
          int det = ssg::lemma_determinant(a, x, i, j, k);
          long closed = 4L * a.c[0] % p * a.c[0] % p * a.c[0] % p;
          closed = closed * (((i - j) % p + p) % p) % p;
          closed = closed * (((k - i) % p + p) % p) % p;
          closed = closed * (((k - j) % p + p) % p) % p;
          if (det == static_cast<int>(closed)) ++good;
        }
        return std::to_string(good) + " of 200";
      }));
}

void sigma_family_claims(std::vector<Claim>& claims, const std::string& prefix, int p, long bound) {
  const std::string sp = std::to_string(p);
  const std::string n_w = std::to_string(p * p * p), n_u = std::to_string(p * p);

  {
    auto data = ssg::sigma1_group(p);
    auto fam = ssg::build_sigma1(p, bound);
    claims.push_back(ssg::run_claim(prefix + ".01-sigma1-parts",
                                    "sigma1 has parts of size p^3 and p^2", n_w + ' ' + n_u,
                                    [&] { return fmt_parts(fam.graph); }));
    claims.push_back(ssg::run_claim(prefix + ".02-sigma1-valencies",
                                    "sigma1 is biregular with W valency p and U valency p^2",
                                    sp + ' ' + n_u, [&] { return fmt_valencies(fam.graph); }));
    claims.push_back(ssg::run_claim(prefix + ".03-sigma1-degree-formula",
                                    "the valencies equal |D|/|R| and |D|/|L|", sp + ' ' + n_u, [&] {
                                      auto [dw, du] = ssg::degree_contract(data.handle, data.d_reps, bound);
                                      return std::to_string(dw) + ' ' + std::to_string(du);
                                    }));
    claims.push_back(ssg::run_claim(prefix + ".04-sigma1-connected", "sigma1 is connected", "true",
                                    [&] { return fmt_bool(ssg::is_connected(fam.graph)); }));
    claims.push_back(ssg::run_claim(prefix + ".05-sigma1-connectivity-criterion",
                                    "connectivity agrees with whether D^-1 D generates the whole group",
                                    "agree", [&] {
                                      bool crit = ssg::connectivity_criterion(data.handle, data.d_reps);
                                      return crit == ssg::is_connected(fam.graph) ? "agree" : "disagree";
                                    }));
    claims.push_back(ssg::run_claim(prefix + ".06-sigma1-w-twin-free",
                                    "no two W vertices of sigma1 share a neighborhood", "true", [&] {
                                      return fmt_bool(!ssg::has_twins(fam.graph, VertexPartition::Side::W));
                                    }));
  }
  {
    auto data = ssg::sigma2_group(p);
    auto fam = ssg::build_sigma2(p, bound);
    claims.push_back(ssg::run_claim(prefix + ".07-sigma2-w-valency", "every W vertex of sigma2 has valency 2",
                                    "2", [&] {
                                      return ssg::is_biregular(fam.graph)
                                                 ? std::to_string(ssg::degrees_w(fam.graph)[0])
                                                 : std::string("not biregular");
                                    }));
    claims.push_back(ssg::run_claim(prefix + ".08-sigma2-blocks",
                                    "every W vertex of sigma2 is adjacent to exactly 2 of the p U blocks",
                                    "2 of " + sp, [&] {
                                      return fmt_uniform_blocks(fam.graph, ssg::sigma2_block_system(p));
                                    }));
    claims.push_back(ssg::run_claim(prefix + ".09-sigma2-connected", "sigma2 is connected", "true",
                                    [&] { return fmt_bool(ssg::is_connected(fam.graph)); }));
    claims.push_back(ssg::run_claim(prefix + ".10-sigma2-connectivity-criterion",
                                    "connectivity agrees with whether D^-1 D generates the whole group",
                                    "agree", [&] {
                                      bool crit = ssg::connectivity_criterion(data.handle, data.d_reps);
                                      return crit == ssg::is_connected(fam.graph) ? "agree" : "disagree";
                                    }));
  }
  {
    auto fam = ssg::build_sigma3(p, bound);
    claims.push_back(ssg::run_claim(prefix + ".11-sigma3-w-valency",
                                    "every W vertex of sigma3 has valency p-1", std::to_string(p - 1),
                                    [&] {
                                      return ssg::is_biregular(fam.graph)
                                                 ? std::to_string(ssg::degrees_w(fam.graph)[0])
                                                 : std::string("not biregular");
                                    }));
    claims.push_back(ssg::run_claim(prefix + ".12-sigma3-blocks",
                                    "every W vertex of sigma3 is adjacent to exactly p-1 of the p U blocks",
                                    std::to_string(p - 1) + " of " + sp, [&] {
                                      return fmt_uniform_blocks(fam.graph, ssg::sigma3_block_system(p));
                                    }));
    claims.push_back(ssg::run_claim(prefix + ".13-sigma3-connected", "sigma3 is connected", "true",
                                    [&] { return fmt_bool(ssg::is_connected(fam.graph)); }));
    claims.push_back(ssg::run_claim(
        prefix + ".14-sigma3-center", "the centre of P = <a,b> is generated by a^p and has order p", sp,
        [&, p] {
          ssg::Sigma3Group g(p);
          auto ap = g.power(g.a(), p);
          int central = 0;
          for (int i = 0; i < p * p; ++i)
            for (int j = 0; j < p; ++j) {
              ssg::NormalFormElement e{i, j, 0};
              if (g.multiply(e, g.a()) != g.multiply(g.a(), e)) continue;
              if (g.multiply(e, g.b()) != g.multiply(g.b(), e)) continue;
              bool power_of_ap = false;
              for (int t = 0; t < p; ++t) power_of_ap |= e == g.power(ap, t);
              if (!power_of_ap) return std::string("central element outside <a^p>");
              ++central;
            }
          return std::to_string(central);
        }));
    claims.push_back(ssg::run_claim(
        prefix + ".15-sigma3-exponent", "the exponent of P = <a,b> is p^2", std::to_string(p * p),
        [&, p] {
          ssg::Sigma3Group g(p);
          auto id = g.identity();
          int max_order = 1;
          for (int i = 0; i < p * p; ++i)
            for (int j = 0; j < p; ++j) {
              ssg::NormalFormElement e{i, j, 0};
              int ord = 1;
              auto acc = e;
              while (acc != id) {
                acc = g.multiply(acc, e);
                ++ord;
                if (ord > p * p) return std::string("element order exceeds p^2");
              }
              max_order = std::max(max_order, ord);
            }
          return std::to_string(max_order);
        }));
  }
  for (int which = 1; which <= 3; ++which) {
    auto fam = ssg::build_gamma_family(which, p, bound);
    int valency = which == 1 ? p * p : which == 2 ? 2 * p : (p - 1) * p;
    const std::string tag = "gamma" + std::to_string(which);
    claims.push_back(ssg::run_claim(prefix + ".2" + std::to_string(2 * which - 1) + "-" + tag + "-valency",
                                    tag + " is regular of valency " + std::to_string(valency),
                                    std::to_string(valency),
                                    [&] { return fmt_valency(fam.graph); }));
    claims.push_back(ssg::run_claim(
        prefix + ".2" + std::to_string(2 * which) + "-" + tag + "-semisymmetric",
        tag + " is semisymmetric (certificate: constructed edge-transitive action, twins on U only)",
        "true", [&] {
          auto v = ssg::semisymmetry(fam.graph, ssg::SemisymMode::certificate, fam.action.generators());
          return v.decided() ? fmt_bool(v.is_semisymmetric()) : "undecided";
        }));
  }
  lemma_claims(claims, prefix, p);
}

int cmd_verify(int p, bool slow, std::string out_path) {
  if (p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("verify-paper: --p must be 3, 5 or 7");
  if (p == 7 && !slow)
    throw std::invalid_argument("verify-paper: the p = 7 suite is heavier; pass --slow to run it");
  long bound = coset_bound_from_env();

  ssg::VerificationReport report;
  report.target = "p=" + std::to_string(p);
  if (p == 3)
    report.claims = suite_p3();
  else
    sigma_family_claims(report.claims, "p" + std::to_string(p), p, bound);

  auto json = report.to_json();
  auto schema = nlohmann::ordered_json::parse(ssg::report_schema_text());
  auto violations = ssg::schema_violations(schema, json);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "schema violation: " << v << '\n';
    throw std::logic_error("verify-paper: report does not validate against its schema");
  }

  if (out_path.empty()) out_path = "report-p" + std::to_string(p) + ".json";
  write_file(out_path, json.dump(2) + "\n");

  auto sorted = report.claims;
  std::sort(sorted.begin(), sorted.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  for (const auto& c : sorted)
    std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.id << " expected=" << c.expected
              << " computed=" << c.computed << " (" << c.elapsed_ms << " ms)\n";
  std::cout << "verdict: " << (report.all_pass() ? "pass" : "fail") << '\n';
  std::cout << "report written to " << out_path << '\n';
  return report.all_pass() ? 0 : 1;
}

int cmd_check(const std::string& target, const std::string& mode, const std::string& witness_path) {
  long bound = coset_bound_from_env();
  auto loaded = load_graph(target, bound);
  ssg::SemisymVerdict verdict;
  if (mode == "full") {
    verdict = ssg::semisymmetry(loaded.graph, ssg::SemisymMode::full);
  } else {
    std::vector<Permutation> witness;
    if (!witness_path.empty())
      witness = read_witness(witness_path, loaded.graph.n_w + loaded.graph.n_u);
    else if (loaded.family.has_value())
      witness = loaded.family->action.generators();
    else
      throw std::invalid_argument(
          "check: certificate mode needs a family token or --witness with a permutation file");
    verdict = ssg::semisymmetry(loaded.graph, ssg::SemisymMode::certificate, witness);
  }
  std::cout << "regular: " << fmt_bool(verdict.regular) << '\n';
  std::cout << "edge-transitive: " << tri_name(verdict.edge_transitive) << '\n';
  std::cout << "vertex-transitive: " << tri_name(verdict.vertex_transitive) << '\n';
  std::cout << "semisymmetric: "
            << (verdict.decided() ? fmt_bool(verdict.is_semisymmetric()) : "undecided") << '\n';
  std::cout << "certificate: " << verdict.certificate << '\n';
  if (!verdict.decided()) return 3;
  return verdict.is_semisymmetric() ? 0 : 1;
}

int cmd_aut(const std::string& target) {
  long bound = coset_bound_from_env();
  auto loaded = load_graph(target, bound);
  // Abstract-graph automorphisms: a swap of the two sides is allowed.
  auto aut = ssg::automorphism_group(ssg::ColoredGraph::from_bigraph(loaded.graph, true));
  std::cout << "order " << aut.order.str() << '\n';
  std::cout << "generators " << aut.generators.size() << '\n';
  for (const auto& g : aut.generators) std::cout << g.to_cycles() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ssg: construct, transform and verify the semisymmetric bipartite graph families "
      "of order 2p^3"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* fam = app.add_subcommand("family", "build a family graph and write it in bigraph v1 format");
  auto fam_token = std::make_shared<std::string>();
  auto fam_out = std::make_shared<std::string>();
  fam->add_option("token", *fam_token,
                  "family name: sigma3small, sigma6small, gamma9, gamma18, or sigma1:p, sigma2:p, "
                  "sigma3:p, gamma1:p, gamma2:p, gamma3:p with p a prime >= 5")
      ->required();
  fam->add_option("--out", *fam_out, "output path (default: stdout)");
  fam->callback([=, &action] {
    action = [=] {
      emit_graph(ssg::build_family(*fam_token, coset_bound_from_env()).graph, *fam_out);
      return 0;
    };
  });

  auto* check = app.add_subcommand("check", "decide whether a graph is semisymmetric");
  auto check_target = std::make_shared<std::string>();
  auto check_mode = std::make_shared<std::string>("full");
  auto check_witness = std::make_shared<std::string>();
  check->add_option("graph", *check_target, "family token or path to a bigraph v1 file")->required();
  check->add_option("--mode", *check_mode, "full (automorphism search) or certificate")
      ->check(CLI::IsMember({"full", "certificate"}));
  check->add_option("--witness", *check_witness,
                    "permutation file for certificate mode: one permutation per line as n "
                    "whitespace-separated images of 0..n-1 over W then U");
  check->callback(
      [=, &action] { action = [=] { return cmd_check(*check_target, *check_mode, *check_witness); }; });

  auto* aut = app.add_subcommand("aut", "print the full automorphism group of a graph");
  auto aut_target = std::make_shared<std::string>();
  aut->add_option("graph", *aut_target, "family token or path to a bigraph v1 file")->required();
  aut->callback([=, &action] { action = [=] { return cmd_aut(*aut_target); }; });

  auto* quo = app.add_subcommand("quotient", "quotient a graph by its twin classes");
  auto quo_target = std::make_shared<std::string>();
  auto quo_out = std::make_shared<std::string>();
  auto quo_side = std::make_shared<std::string>("both");
  quo->add_option("graph", *quo_target, "family token or path to a bigraph v1 file")->required();
  quo->add_option("--side", *quo_side, "which side's twin classes to contract: w, u or both")
      ->check(CLI::IsMember({"w", "u", "both"}));
  quo->add_option("--out", *quo_out, "output path (default: stdout)");
  quo->callback([=, &action] {
    action = [=] {
      auto loaded = load_graph(*quo_target, coset_bound_from_env());
      const auto& g = loaded.graph;
      auto pw = (*quo_side == "u") ? VertexPartition::singletons(VertexPartition::Side::W, g.n_w)
                                   : ssg::twin_classes(g, VertexPartition::Side::W);
      auto pu = (*quo_side == "w") ? VertexPartition::singletons(VertexPartition::Side::U, g.n_u)
                                   : ssg::twin_classes(g, VertexPartition::Side::U);
      emit_graph(ssg::quotient(g, pw, pu), *quo_out);
      return 0;
    };
  });

  auto* exp = app.add_subcommand("expand", "replace every U vertex by p twins");
  auto exp_target = std::make_shared<std::string>();
  auto exp_out = std::make_shared<std::string>();
  auto exp_p = std::make_shared<int>(0);
  exp->add_option("graph", *exp_target, "family token or path to a bigraph v1 file")->required();
  exp->add_option("p", *exp_p, "multiplicity (>= 1)")->required()->check(CLI::PositiveNumber);
  exp->add_option("--out", *exp_out, "output path (default: stdout)");
  exp->callback([=, &action] {
    action = [=] {
      auto loaded = load_graph(*exp_target, coset_bound_from_env());
      emit_graph(ssg::expand(loaded.graph, *exp_p), *exp_out);
      return 0;
    };
  });

  auto* iso = app.add_subcommand("iso", "test two graphs for isomorphism (part swap allowed)");
  auto iso_a = std::make_shared<std::string>();
  auto iso_b = std::make_shared<std::string>();
  iso->add_option("first", *iso_a, "family token or path to a bigraph v1 file")->required();
  iso->add_option("second", *iso_b, "family token or path to a bigraph v1 file")->required();
  iso->callback([=, &action] {
    action = [=] {
      long bound = coset_bound_from_env();
      bool ans = ssg::isomorphic(load_graph(*iso_a, bound).graph, load_graph(*iso_b, bound).graph);
      std::cout << "isomorphic: " << fmt_bool(ans) << '\n';
      return ans ? 0 : 1;
    };
  });

  auto* verify = app.add_subcommand("verify-paper", "run the claim suite for one prime and write a JSON report");
  auto verify_p = std::make_shared<int>(0);
  auto verify_out = std::make_shared<std::string>();
  auto verify_slow = std::make_shared<bool>(false);
  verify->add_option("--p", *verify_p, "prime selecting the suite: 3, 5 or 7")->required();
  verify->add_option("--out", *verify_out, "report path (default: report-p<N>.json)");
  verify->add_flag("--slow", *verify_slow, "allow the heavier p = 7 suite");
  verify->callback(
      [=, &action] { action = [=] { return cmd_verify(*verify_p, *verify_slow, *verify_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    return action();
  } catch (const ssg::coset_bound_error& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }
}

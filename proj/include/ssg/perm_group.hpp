#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "ssg/permutation.hpp"

namespace ssg {

/// Partition of the domain into blocks of imprimitivity.
/// Blocks are sorted by smallest member, members ascending.
struct BlockSystem {
  int degree = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;

  int block_count() const { return static_cast<int>(blocks.size()); }

  bool operator==(const BlockSystem& o) const { return blocks == o.blocks; }

  static BlockSystem from_cells(int degree, std::vector<std::vector<int>> cells) {
    BlockSystem bs;
    bs.degree = degree;
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    bs.blocks = std::move(cells);
    bs.block_of.assign(degree, -1);
    for (int i = 0; i < bs.block_count(); ++i)
      for (int v : bs.blocks[i]) {
        if (v < 0 || v >= degree || bs.block_of[v] != -1)
          throw std::invalid_argument("block system: cells must partition the domain");
        bs.block_of[v] = i;
      }
    for (int v = 0; v < degree; ++v)
      if (bs.block_of[v] == -1)
        throw std::invalid_argument("block system: cells must cover the domain");
    return bs;
  }
};

/// Stabilizer chain (base and strong generating set).
///
/// Level i stores the orbit of base[i] under the strong generators fixing
/// base[0..i-1] pointwise, together with a transversal in BFS order.
struct StabChain {
  struct Level {
    int base_point = -1;
    std::vector<int> gen_idx;         // indices into strong[]
    std::vector<int> orbit;           // BFS order, orbit[0] == base_point
    std::vector<Permutation> trans;   // trans[k] maps base_point to orbit[k]
    std::vector<int> pos;             // point -> index+1 into orbit, 0 if absent
  };

  int degree = 0;
  std::vector<Permutation> strong;
  std::vector<Level> levels;

  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto& l : levels) b.push_back(l.base_point);
    return b;
  }

  BigInt order() const {
    BigInt n = 1;
    for (const auto& l : levels) n *= static_cast<long>(l.orbit.size());
    return n;
  }

  /// Sift g through levels [from, end); returns the residue and the level at
  /// which sifting stopped (levels.size() on full descent).
  std::pair<Permutation, int> sift(Permutation g, int from = 0) const {
    int lvl = from;
    for (; lvl < static_cast<int>(levels.size()); ++lvl) {
      const Level& L = levels[lvl];
      int beta = g.apply(L.base_point);
      if (beta == L.base_point) continue;
      int k = L.pos[beta];
      if (k == 0) return {std::move(g), lvl};
      g = g * L.trans[k - 1].inverse();
    }
    return {std::move(g), lvl};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree) return false;
    return sift(g).first.is_identity();
  }

  /// Strong generators of the stabilizer of base[0..k-1], as a generator list.
  std::vector<Permutation> level_generators(int k) const {
    std::vector<Permutation> out;
    if (k >= static_cast<int>(levels.size())) return out;
    for (int gi : levels[k].gen_idx) out.push_back(strong[gi]);
    return out;
  }
};

namespace detail {

inline void recompute_orbit(StabChain& ch, int lvl) {
  auto& L = ch.levels[lvl];
  L.orbit.assign(1, L.base_point);
  L.trans.assign(1, Permutation(ch.degree));
  L.pos.assign(ch.degree, 0);
  L.pos[L.base_point] = 1;
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    int beta = L.orbit[head];
    for (int gi : L.gen_idx) {
      int gamma = ch.strong[gi].apply(beta);
      if (L.pos[gamma] == 0) {
        L.pos[gamma] = static_cast<int>(L.orbit.size()) + 1;
        L.orbit.push_back(gamma);
        L.trans.push_back(L.trans[head] * ch.strong[gi]);
      }
    }
  }
}

inline void add_level(StabChain& ch, int point) {
  StabChain::Level L;
  L.base_point = point;
  L.orbit = {point};
  L.trans = {Permutation(ch.degree)};
  L.pos.assign(ch.degree, 0);
  L.pos[point] = 1;
  ch.levels.push_back(std::move(L));
}

/// Register g as a strong generator. g must fix base[0..j-1] where j is the
/// index of the first base point it moves; extends the base if g fixes every
/// current base point. Returns the deepest level whose generator list grew.
inline int add_strong(StabChain& ch, Permutation g) {
  int j = 0;
  while (j < static_cast<int>(ch.levels.size()) && g.apply(ch.levels[j].base_point) == ch.levels[j].base_point)
    ++j;
  if (j == static_cast<int>(ch.levels.size())) add_level(ch, g.smallest_moved_point());
  ch.strong.push_back(std::move(g));
  int gi = static_cast<int>(ch.strong.size()) - 1;
  for (int k = 0; k <= j; ++k) ch.levels[k].gen_idx.push_back(gi);
  return j;
}

/// Deterministic Schreier-Sims. Base points are drawn from base_hint first
/// (pinned in order, possibly with singleton orbits), then smallest moved
/// points of residues. No randomization anywhere: orbits are BFS over the
/// generator lists in declaration order.
inline StabChain build_chain(int degree, const std::vector<Permutation>& gens,
                             const std::vector<int>& base_hint) {
  StabChain ch;
  ch.degree = degree;
  for (int h : base_hint) {
    if (h < 0 || h >= degree) throw std::invalid_argument("stabilizer chain: base hint out of range");
    add_level(ch, h);
  }
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("stabilizer chain: generator degree mismatch");
    if (!g.is_identity()) add_strong(ch, g);
  }
  for (int i = 0; i < static_cast<int>(ch.levels.size()); ++i) recompute_orbit(ch, i);

  int i = static_cast<int>(ch.levels.size()) - 1;
  while (i >= 0) {
    recompute_orbit(ch, i);
    auto& L = ch.levels[i];
    bool complete = true;
    for (std::size_t idx = 0; idx < L.orbit.size() && complete; ++idx) {
      for (int gi : L.gen_idx) {
        int gamma = ch.strong[gi].apply(L.orbit[idx]);
        Permutation sch = L.trans[idx] * ch.strong[gi] * L.trans[L.pos[gamma] - 1].inverse();
        if (sch.is_identity()) continue;
        auto [res, lvl] = ch.sift(std::move(sch), i + 1);
        if (res.is_identity()) continue;
        int deepest = add_strong(ch, std::move(res));
        for (int k = i + 1; k <= deepest; ++k) recompute_orbit(ch, k);
        i = deepest;
        complete = false;
        break;
      }
    }
    if (complete) --i;
  }
  return ch;
}

}  // namespace detail

struct InducedAction;

/// Permutation group given by generators, with a lazily built stabilizer
/// chain (guarded internally, so const queries are safe across threads).
class PermGroup {
public:
  PermGroup() = default;

  /// Trivial group on the given domain.
  explicit PermGroup(int degree) : degree_(degree) {}

  explicit PermGroup(std::vector<Permutation> gens, std::vector<int> base_hint = {})
      : gens_(std::move(gens)), hint_(std::move(base_hint)) {
    if (gens_.empty()) throw std::invalid_argument("perm group: need a degree or at least one generator");
    degree_ = gens_[0].degree();
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("perm group: generator degree mismatch");
  }

  PermGroup(int degree, std::vector<Permutation> gens, std::vector<int> base_hint = {})
      : degree_(degree), gens_(std::move(gens)), hint_(std::move(base_hint)) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("perm group: generator degree mismatch");
  }

  PermGroup(const PermGroup& o) : degree_(o.degree_), gens_(o.gens_), hint_(o.hint_), chain_(o.snapshot()) {}
  PermGroup& operator=(const PermGroup& o) {
    if (this != &o) {
      degree_ = o.degree_;
      gens_ = o.gens_;
      hint_ = o.hint_;
      std::lock_guard lk(mu_);
      chain_ = o.snapshot();
    }
    return *this;
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  const StabChain& chain() const {
    std::lock_guard lk(mu_);
    if (!chain_) chain_ = std::make_shared<const StabChain>(detail::build_chain(degree_, gens_, hint_));
    return *chain_;
  }

  BigInt order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(const Permutation& g) const { return chain().contains(g); }

  /// Orbit of a point, BFS order over the generator list.
  std::vector<int> orbit(int p) const {
    check_point(p);
    std::vector<int> orb = {p};
    std::vector<char> seen(degree_, 0);
    seen[p] = 1;
    for (std::size_t h = 0; h < orb.size(); ++h)
      for (const auto& g : gens_) {
        int q = g.apply(orb[h]);
        if (!seen[q]) {
          seen[q] = 1;
          orb.push_back(q);
        }
      }
    return orb;
  }

  /// All orbits, sorted by smallest member; members ascending.
  std::vector<std::vector<int>> orbits() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<int>> out;
    for (int p = 0; p < degree_; ++p) {
      if (seen[p]) continue;
      auto orb = orbit(p);
      for (int q : orb) seen[q] = 1;
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  bool is_transitive() const { return degree_ > 0 && static_cast<int>(orbit(0).size()) == degree_; }

  /// An element mapping `from` to `to`, if one exists.
  std::optional<Permutation> transport(int from, int to) const {
    check_point(from);
    check_point(to);
    std::vector<int> orb = {from};
    std::vector<Permutation> word = {Permutation(degree_)};
    std::vector<int> pos(degree_, 0);
    pos[from] = 1;
    for (std::size_t h = 0; h < orb.size(); ++h) {
      if (orb[h] == to) return word[h];
      for (const auto& g : gens_) {
        int q = g.apply(orb[h]);
        if (!pos[q]) {
          pos[q] = 1;
          orb.push_back(q);
          word.push_back(word[h] * g);
        }
      }
    }
    return std::nullopt;
  }

  /// Subgroup fixing every listed point, via a chain whose base starts with
  /// exactly those points.
  PermGroup pointwise_stabilizer(const std::vector<int>& points) const {
    for (int p : points) check_point(p);
    StabChain ch = detail::build_chain(degree_, gens_, points);
    auto sub = ch.level_generators(static_cast<int>(points.size()));
    return PermGroup(degree_, std::move(sub));
  }

  /// Minimal block system in which a and b share a block (Atkinson).
  /// Requires a transitive action.
  BlockSystem minimal_block_system(int a, int b) const {
    require_transitive();
    check_point(a);
    check_point(b);
    if (a == b) throw std::invalid_argument("blocks: seed points must differ");
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) {
      x = find(x);
      y = find(y);
      if (x == y) return false;
      if (x > y) std::swap(x, y);
      parent[y] = x;
      return true;
    };
    std::vector<std::pair<int, int>> todo;
    unite(a, b);
    todo.emplace_back(a, b);
    while (!todo.empty()) {
      auto [x, y] = todo.back();
      todo.pop_back();
      for (const auto& g : gens_)
        if (unite(g.apply(x), g.apply(y))) todo.emplace_back(g.apply(x), g.apply(y));
    }
    std::map<int, std::vector<int>> cls;
    for (int v = 0; v < degree_; ++v) cls[find(v)].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& [r, members] : cls) cells.push_back(std::move(members));
    return BlockSystem::from_cells(degree_, std::move(cells));
  }

  /// All distinct proper minimal block systems (seeds (0, i), deduplicated).
  std::vector<BlockSystem> minimal_blocks() const {
    require_transitive();
    std::vector<BlockSystem> out;
    for (int i = 1; i < degree_; ++i) {
      BlockSystem bs = minimal_block_system(0, i);
      if (bs.block_count() <= 1) continue;
      if (std::find(out.begin(), out.end(), bs) == out.end()) out.push_back(std::move(bs));
    }
    return out;
  }

  bool is_primitive() const {
    require_transitive();
    return minimal_blocks().empty();
  }

  /// Action on the blocks of a system, with image and kernel.
  /// |g| == |image| * |kernel| for the represented group.
  InducedAction induced_action(const BlockSystem& bs) const;

private:
  std::shared_ptr<const StabChain> snapshot() const {
    std::lock_guard lk(mu_);
    return chain_;
  }
  void check_point(int p) const {
    if (p < 0 || p >= degree_) throw std::invalid_argument("perm group: point out of range");
  }
  void require_transitive() const {
    if (!is_transitive()) throw std::logic_error("perm group: operation requires a transitive action");
  }

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<int> hint_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const StabChain> chain_;
};

struct InducedAction {
  PermGroup image;   // on block indices
  PermGroup kernel;  // on the original domain
};

inline InducedAction PermGroup::induced_action(const BlockSystem& bs) const {
  if (bs.degree != degree_) throw std::invalid_argument("induced action: degree mismatch");
  int nb = bs.block_count();
  std::vector<Permutation> img_gens;
  std::vector<Permutation> ext_gens;
  for (const auto& g : gens_) {
    std::vector<int> bimg(nb);
    for (int i = 0; i < nb; ++i) {
      int target = bs.block_of[g.apply(bs.blocks[i][0])];
      for (int v : bs.blocks[i])
        if (bs.block_of[g.apply(v)] != target)
          throw std::invalid_argument("induced action: cells are not blocks for this group");
      bimg[i] = target;
    }
    std::vector<int> ext(degree_ + nb);
    for (int v = 0; v < degree_; ++v) ext[v] = g.apply(v);
    for (int i = 0; i < nb; ++i) ext[degree_ + i] = degree_ + bimg[i];
    img_gens.emplace_back(std::move(bimg));
    ext_gens.emplace_back(std::move(ext));
  }
  std::vector<int> block_points(nb);
  std::iota(block_points.begin(), block_points.end(), degree_);
  PermGroup combined(degree_ + nb, std::move(ext_gens));
  PermGroup stab = combined.pointwise_stabilizer(block_points);
  std::vector<Permutation> ker_gens;
  for (const auto& g : stab.generators()) ker_gens.push_back(restricted(g, 0, degree_));
  return {PermGroup(nb, std::move(img_gens)), PermGroup(degree_, std::move(ker_gens))};
}

}  // namespace ssg

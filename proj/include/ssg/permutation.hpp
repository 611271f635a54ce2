#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssg {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation of {0, ..., degree-1}, stored as its image table.
///
/// Composition is left-to-right throughout the library:
///   (a * b)(i) == b(a(i)),  i.e.  i^(a*b) == (i^a)^b.
class Permutation {
public:
  Permutation() = default;

  /// Identity permutation of the given degree.
  explicit Permutation(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  /// From an image table; must be a bijection on {0, ..., n-1}.
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("permutation: image table is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(img_.size()); }

  /// Image of a point: p^g.
  int apply(int p) const { return img_[p]; }
  int operator()(int p) const { return img_[p]; }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Smallest point moved by this permutation, or -1 if identity.
  int smallest_moved_point() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return -1;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// Left-to-right product: i^(a*b) = (i^a)^b.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("permutation: degree mismatch on multiply");
    std::vector<int> r(a.img_.size());
    for (int i = 0; i < a.degree(); ++i) r[i] = b.img_[a.img_[i]];
    Permutation out;
    out.img_ = std::move(r);
    return out;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  /// Nontrivial cycles, each rotated to start at its minimum, sorted by minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        cyc.push_back(j);
        j = img_[j];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Multiplicative order (lcm of cycle lengths).
  BigInt order() const {
    BigInt ord = 1;
    for (const auto& c : cycles()) ord = boost::multiprecision::lcm(ord, BigInt(c.size()));
    return ord;
  }

  /// Cycle notation with 0-based points, fixed points omitted; "()" for identity.
  std::string to_cycles() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
      os << '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) os << ' ';
        os << c[k];
      }
      os << ')';
    }
    return os.str();
  }

  /// Parse cycle notation, e.g. "(0 1 2)(3 4)" or "()". Points must be < degree.
  static Permutation from_cycles(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(degree, 0);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw std::invalid_argument("permutation: expected '(' in cycle notation");
      ++i;
      std::vector<int> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument("permutation: expected point in cycle notation");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + (text[i++] - '0');
        if (v >= degree) throw std::invalid_argument("permutation: point out of range");
        if (used[v]) throw std::invalid_argument("permutation: repeated point in cycles");
        used[v] = 1;
        cyc.push_back(v);
        skip_ws();
      }
      if (i >= text.size()) throw std::invalid_argument("permutation: unterminated cycle");
      ++i;  // ')'
      for (std::size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k]] = cyc[k + 1];
      if (cyc.size() > 1) img[cyc.back()] = cyc.front();
      skip_ws();
    }
    return Permutation(std::move(img));
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int v : img_) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  std::vector<int> img_;
};

/// Restriction of g to the window [begin, end); throws if the window is not invariant.
inline Permutation restricted(const Permutation& g, int begin, int end) {
  std::vector<int> img(end - begin);
  for (int i = begin; i < end; ++i) {
    int v = g.apply(i);
    if (v < begin || v >= end)
      throw std::invalid_argument("permutation: window not invariant under restriction");
    img[i - begin] = v - begin;
  }
  return Permutation(std::move(img));
}

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const { return g.hash(); }
};

}  // namespace ssg

template <>
struct std::hash<ssg::Permutation> {
  std::size_t operator()(const ssg::Permutation& g) const { return g.hash(); }
};

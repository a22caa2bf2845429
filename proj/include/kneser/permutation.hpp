#ifndef KNESER_PERMUTATION_HPP
#define KNESER_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "kneser/graph.hpp"

namespace kneser {

// A permutation of [n] = {1, ..., n}.
class Permutation {
 public:
  // images[i-1] = theta(i). Throws DomainError unless a bijection of [n].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Product of disjoint cycles, e.g. from_cycles(5, {{1, 2}, {3, 4, 5}}).
  static Permutation from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles);
  // (1 2) and (1 2 ... n): the generators of Sym([n]) used throughout.
  static Permutation transposition12(int n);
  static Permutation long_cycle(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  // (p * q)(x) = p(q(x))
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;

  // Cycle notation with fixed points omitted, cycles ordered by least
  // element; the identity renders as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// A permutation of the vertex indices 0..N-1 of some graph.
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<Vertex> images);
  static VertexPermutation identity(std::size_t size);

  std::size_t size() const { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& images() const { return images_; }
  bool is_identity() const;

  // Whether u ~ v  <=>  p(u) ~ p(v) for all u, v.
  bool is_automorphism_of(const Graph& g) const;

  // Cycle notation over the vertex indices themselves (0-based), fixed points
  // omitted; the identity renders as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation& a, const VertexPermutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Vertex> images_;
};

// compose(p, q)(v) = p(q(v)). Throws DomainError on size mismatch.
VertexPermutation compose(const VertexPermutation& p, const VertexPermutation& q);
VertexPermutation inverse(const VertexPermutation& p);
// Least m >= 1 with p^m = identity (lcm of cycle lengths).
std::uint64_t element_order(const VertexPermutation& p);
bool commutes(const VertexPermutation& p, const VertexPermutation& q);

struct VertexPermutationHash {
  std::size_t operator()(const VertexPermutation& p) const noexcept;
};

}  // namespace kneser

#endif  // KNESER_PERMUTATION_HPP

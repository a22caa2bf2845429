#include "kneser/permutation.hpp"

#include <numeric>
#include <sstream>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

template <typename T>
std::string cycles_to_string(const std::vector<T>& images, T offset) {
  std::vector<bool> seen(images.size(), false);
  std::ostringstream os;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start] || static_cast<std::size_t>(images[start] - offset) == start) continue;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << static_cast<T>(x) + offset;
      first = false;
      x = static_cast<std::size_t>(images[x] - offset);
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int y : images_) {
    if (y < 1 || y > n() || hit[y - 1]) throw DomainError("not a permutation of [n]");
    hit[y - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n,
                                     std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    const std::vector<int> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 1 || c[i] > n || used[c[i]]) throw DomainError("cycles are not disjoint in [n]");
      used[c[i]] = true;
      images[c[i] - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition12(int n) {
  if (n < 2) return identity(n);
  auto images = identity(n).images_;
  std::swap(images[0], images[1]);
  return Permutation(std::move(images));
}

Permutation Permutation::long_cycle(int n) {
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = i % n + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (n() != q.n()) throw DomainError("permutation degree mismatch");
  std::vector<int> images(n());
  for (int x = 1; x <= n(); ++x) images[x - 1] = (*this)(q(x));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(n());
  for (int x = 1; x <= n(); ++x) images[(*this)(x) - 1] = x;
  return Permutation(std::move(images));
}

std::string Permutation::to_cycle_string() const { return cycles_to_string(images_, 1); }

VertexPermutation::VertexPermutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Vertex y : images_) {
    if (y >= images_.size() || hit[y]) throw DomainError("not a permutation of the vertex set");
    hit[y] = true;
  }
}

VertexPermutation VertexPermutation::identity(std::size_t size) {
  std::vector<Vertex> images(size);
  std::iota(images.begin(), images.end(), Vertex{0});
  return VertexPermutation(std::move(images));
}

bool VertexPermutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

bool VertexPermutation::is_automorphism_of(const Graph& g) const {
  if (size() != g.vertex_count()) return false;
  // A bijection mapping every edge to an edge maps non-edges to non-edges too.
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (!g.adjacent(images_[u], images_[v])) return false;
    }
  }
  return true;
}

std::string VertexPermutation::to_cycle_string() const {
  return cycles_to_string(images_, Vertex{0});
}

VertexPermutation compose(const VertexPermutation& p, const VertexPermutation& q) {
  if (p.size() != q.size()) throw DomainError("vertex permutation size mismatch");
  std::vector<Vertex> images(p.size());
  for (Vertex v = 0; v < p.size(); ++v) images[v] = p(q(v));
  return VertexPermutation(std::move(images));
}

VertexPermutation inverse(const VertexPermutation& p) {
  std::vector<Vertex> images(p.size());
  for (Vertex v = 0; v < p.size(); ++v) images[p(v)] = v;
  return VertexPermutation(std::move(images));
}

std::uint64_t element_order(const VertexPermutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::uint64_t order = 1;
  for (Vertex start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (Vertex x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

bool commutes(const VertexPermutation& p, const VertexPermutation& q) {
  if (p.size() != q.size()) throw DomainError("vertex permutation size mismatch");
  for (Vertex v = 0; v < p.size(); ++v) {
    if (p(q(v)) != q(p(v))) return false;
  }
  return true;
}

std::size_t VertexPermutationHash::operator()(const VertexPermutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Vertex v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace kneser

#include "kneser/subset.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

void check_ground_set(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw DomainError("ground set size " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxGroundSet));
  }
}

std::uint32_t full_mask(int n) {
  return n == 32 ? ~0u : ((1u << n) - 1u);
}

}  // namespace

Subset::Subset(int n, std::uint32_t bits) : bits_(bits), n_(n) {
  check_ground_set(n);
  if ((bits & ~full_mask(n)) != 0) {
    throw DomainError("subset mask has elements outside [" + std::to_string(n) + "]");
  }
}

Subset Subset::from_elements(int n, std::span<const int> elements) {
  check_ground_set(n);
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw DomainError("element " + std::to_string(e) + " not in [" + std::to_string(n) + "]");
    }
    bits |= 1u << (e - 1);
  }
  return Subset(n, bits);
}

int Subset::size() const { return std::popcount(bits_); }

bool Subset::contains(int element) const {
  return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1u) != 0;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (int e = 1; e <= n_; ++e) {
    if (contains(e)) out.push_back(e);
  }
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // After step i the accumulator holds C(n - k + i, i), so each division is exact.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t rank_subset(const Subset& s, int n, int k) {
  if (s.n() != n) throw DomainError("subset ground set does not match n");
  if (s.size() != k) {
    throw CardinalityError("subset " + s.to_string() + " has size " + std::to_string(s.size()) +
                           ", expected " + std::to_string(k));
  }
  std::uint64_t rank = 0;
  int prev = 0;
  int position = 1;
  for (int c : s.elements()) {
    for (int x = prev + 1; x < c; ++x) rank += binomial(n - x, k - position);
    prev = c;
    ++position;
  }
  return rank;
}

Subset unrank_subset(std::uint64_t rank, int n, int k) {
  check_ground_set(n);
  if (k < 0 || k > n) throw DomainError("subset size outside 0..n");
  if (rank >= binomial(n, k)) {
    throw RankError("rank " + std::to_string(rank) + " out of range for C(" + std::to_string(n) +
                    "," + std::to_string(k) + ")");
  }
  std::uint32_t bits = 0;
  int x = 1;
  for (int position = 1; position <= k; ++position) {
    for (;; ++x) {
      const std::uint64_t below = binomial(n - x, k - position);
      if (rank < below) break;
      rank -= below;
    }
    bits |= 1u << (x - 1);
    ++x;
  }
  return Subset(n, bits);
}

Subset complement(const Subset& s) { return Subset(s.n(), ~s.bits() & full_mask(s.n())); }

}  // namespace kneser

#ifndef KNESER_SUBSET_HPP
#define KNESER_SUBSET_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kneser {

// Largest supported ground set; masks fit in one 32-bit word.
inline constexpr int kMaxGroundSet = 30;

// A subset of the ground set [n] = {1, ..., n}. Element i lives in bit i-1.
class Subset {
 public:
  Subset(int n, std::uint32_t bits);

  static Subset from_elements(int n, std::span<const int> elements);
  static Subset from_elements(int n, std::initializer_list<int> elements) {
    return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
  }

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int size() const;
  bool contains(int element) const;
  // Non-strict containment: every element of *this is in other.
  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

  // Sorted, 1-based.
  std::vector<int> elements() const;

  // "{2,3,5}"; the empty set renders as "{}".
  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::uint32_t bits_;
  int n_;
};

// Exact C(n, k); 0 when k > n. Throws std::overflow_error if the value does
// not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Rank of s among the k-subsets of [n] in lexicographic order of sorted
// element lists.
std::uint64_t rank_subset(const Subset& s, int n, int k);

Subset unrank_subset(std::uint64_t rank, int n, int k);

// [n] \ s.
Subset complement(const Subset& s);

}  // namespace kneser

#endif  // KNESER_SUBSET_HPP

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tradekit {

/// Largest ground set supported; subsets are packed into a 64-bit mask.
inline constexpr int kMaxGroundSet = 64;

/// C(a, b) with C(a, b) = 0 whenever b < 0 or b > a.
mpz_class binomial(long a, long b);

/// Fixed-width binomial table for indexing. Only valid for 0 <= a <= 64,
/// where every entry fits in 64 bits.
std::uint64_t binomial_u64(int a, int b);

/// A subset of X = {1..n}. Stored as a bit mask (bit e-1 set for element e);
/// the sorted element list is the interchange form.
class Subset {
 public:
  Subset() = default;
  Subset(int n, std::span<const int> elements);
  Subset(int n, std::initializer_list<int> elements)
      : Subset(n, std::span<const int>(elements.begin(), elements.size())) {}

  static Subset from_mask(int n, std::uint64_t mask);
  static Subset empty(int n) { return from_mask(n, 0); }
  static Subset full(int n);

  int n() const { return n_; }
  int size() const { return __builtin_popcountll(mask_); }
  std::uint64_t mask() const { return mask_; }
  bool contains(int e) const { return e >= 1 && e <= n_ && (mask_ >> (e - 1)) & 1U; }
  std::vector<int> elements() const;

  Subset united(const Subset& other) const;
  Subset without(const Subset& other) const;
  bool is_subset_of(const Subset& other) const { return (mask_ & ~other.mask_) == 0; }

  /// Grade first, then colex within a grade. Colex order on equal-size
  /// subsets coincides with numeric order of the masks.
  std::strong_ordering operator<=>(const Subset& other) const;
  bool operator==(const Subset& other) const = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Swaps i and i+1 (1-based).
  static Permutation adjacent_transposition(int n, int i);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// (this * other)(x) = this(other(x)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation& other) const = default;

 private:
  std::vector<int> images_;
};

std::uint64_t colex_rank(const Subset& s);
Subset colex_unrank(std::uint64_t rank, int k, int n);

/// All k-subsets of [1..n] in colex order.
std::vector<Subset> subsets_iter(int k, int n);

int intersection_size(const Subset& a, const Subset& b);
Subset apply_permutation(const Permutation& sigma, const Subset& s);

/// Gosper's hack: next mask with the same popcount, in increasing order.
inline std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace tradekit

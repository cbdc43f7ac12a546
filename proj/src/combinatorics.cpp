#include "tradekit/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace tradekit {

namespace {

using PascalTable = std::array<std::array<std::uint64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1>;

const PascalTable& pascal() {
  static const PascalTable table = [] {
    PascalTable t{};
    for (int a = 0; a <= kMaxGroundSet; ++a) {
      t[a][0] = 1;
      for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
    }
    return t;
  }();
  return table;
}

void check_ground_set(int n) {
  if (n < 0 || n > kMaxGroundSet)
    throw std::invalid_argument("ground set size " + std::to_string(n) + " outside [0, 64]");
}

std::uint64_t low_bits(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

mpz_class binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

std::uint64_t binomial_u64(int a, int b) {
  if (a < 0 || a > kMaxGroundSet) throw std::out_of_range("binomial_u64: a outside [0, 64]");
  if (b < 0 || b > a) return 0;
  return pascal()[a][b];
}

Subset::Subset(int n, std::span<const int> elements) : n_(n) {
  check_ground_set(n);
  int prev = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw std::invalid_argument("element " + std::to_string(e) + " outside [1.." + std::to_string(n) + "]");
    if (e <= prev) throw std::invalid_argument("subset elements must be strictly increasing");
    mask_ |= std::uint64_t{1} << (e - 1);
    prev = e;
  }
}

Subset Subset::from_mask(int n, std::uint64_t mask) {
  check_ground_set(n);
  if ((mask & ~low_bits(n)) != 0) throw std::invalid_argument("mask has bits beyond n");
  Subset s;
  s.n_ = n;
  s.mask_ = mask;
  return s;
}

Subset Subset::full(int n) {
  check_ground_set(n);
  return from_mask(n, low_bits(n));
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

Subset Subset::united(const Subset& other) const {
  if (n_ != other.n_) throw std::invalid_argument("subsets over different ground sets");
  return from_mask(n_, mask_ | other.mask_);
}

Subset Subset::without(const Subset& other) const {
  if (n_ != other.n_) throw std::invalid_argument("subsets over different ground sets");
  return from_mask(n_, mask_ & ~other.mask_);
}

std::strong_ordering Subset::operator<=>(const Subset& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = size() <=> other.size(); c != 0) return c;
  return mask_ <=> other.mask_;
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

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_ground_set(static_cast<int>(images_.size()));
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("permutation images must be a bijection of [1..n]");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("adjacent transposition index out of range");
  auto p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (n() != other.n()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> images(images_.size());
  for (int x = 1; x <= n(); ++x) images[x - 1] = (*this)(other(x));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 1; x <= n(); ++x) images[(*this)(x) - 1] = x;
  return Permutation(std::move(images));
}

std::uint64_t colex_rank(const Subset& s) {
  std::uint64_t rank = 0;
  int i = 1;
  for (int e : s.elements()) rank += binomial_u64(e - 1, i++);
  return rank;
}

Subset colex_unrank(std::uint64_t rank, int k, int n) {
  check_ground_set(n);
  if (k < 0 || k > n) throw std::out_of_range("colex_unrank: k outside [0, n]");
  if (rank >= binomial_u64(n, k)) throw std::out_of_range("colex_unrank: rank out of range");
  std::uint64_t mask = 0;
  int top = n;
  for (int i = k; i >= 1; --i) {
    // largest e with C(e-1, i) <= rank
    int e = top;
    while (binomial_u64(e - 1, i) > rank) --e;
    rank -= binomial_u64(e - 1, i);
    mask |= std::uint64_t{1} << (e - 1);
    top = e - 1;
  }
  return Subset::from_mask(n, mask);
}

std::vector<Subset> subsets_iter(int k, int n) {
  check_ground_set(n);
  if (k < 0 || k > n) throw std::out_of_range("subsets_iter: k outside [0, n]");
  std::vector<Subset> out;
  out.reserve(binomial_u64(n, k));
  if (k == 0) {
    out.push_back(Subset::empty(n));
    return out;
  }
  const std::uint64_t last = low_bits(n) & ~low_bits(n - k);
  for (std::uint64_t m = low_bits(k);; m = next_same_popcount(m)) {
    out.push_back(Subset::from_mask(n, m));
    if (m == last) break;
  }
  return out;
}

int intersection_size(const Subset& a, const Subset& b) {
  if (a.n() != b.n()) throw std::invalid_argument("intersection_size: mismatched n");
  return __builtin_popcountll(a.mask() & b.mask());
}

Subset apply_permutation(const Permutation& sigma, const Subset& s) {
  if (sigma.n() != s.n()) throw std::invalid_argument("apply_permutation: mismatched n");
  std::uint64_t mask = 0;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) {
    const int e = __builtin_ctzll(m) + 1;
    mask |= std::uint64_t{1} << (sigma(e) - 1);
  }
  return Subset::from_mask(s.n(), mask);
}

}  // namespace tradekit

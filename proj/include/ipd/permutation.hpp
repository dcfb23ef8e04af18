#ifndef IPD_PERMUTATION_HPP
#define IPD_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ipd {

/**
 * A closed range of values {lo, ..., hi}. As an element of an interval poset
 * it is a set of consecutive values occupying consecutive positions.
 */
struct Interval {
  int lo = 1;
  int hi = 1;

  constexpr bool singleton() const { return lo == hi; }
  constexpr int size() const { return hi - lo + 1; }
  constexpr bool contains(const Interval &o) const {
    return lo <= o.lo && o.hi <= hi;
  }
  constexpr bool strictly_contains(const Interval &o) const {
    return contains(o) && *this != o;
  }
  /// Intersecting, with neither containing the other.
  constexpr bool overlaps(const Interval &o) const {
    return lo <= o.hi && o.lo <= hi && !contains(o) && !o.contains(*this);
  }

  friend constexpr auto operator<=>(const Interval &, const Interval &) = default;
};

std::ostream &operator<<(std::ostream &os, const Interval &i);

/**
 * A permutation of {1..n} in one-line notation. Immutable once built; the
 * constructor rejects any word that is not a bijection of {1..n}.
 */
class Permutation {
public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  /// Value at 1-based position i.
  int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int> &word() const { return word_; }
  /// 1-based position of each value, indexed by value (slot 0 unused).
  std::vector<int> positions() const;

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.word_ <=> b.word_;
  }

private:
  std::vector<int> word_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &p);

/// Accepts a digit string (n <= 9) or integers separated by commas/spaces.
Permutation parse_permutation(std::string_view text);

/// All intervals of p, sorted by (lo, hi). O(n^2).
std::vector<Interval> intervals_of(const Permutation &p);

/// Sizes 2 and 3 are never simple; size 1 is.
bool is_simple(const Permutation &p);
bool is_separable(const Permutation &p);
bool is_block_wise_simple(const Permutation &p);

Permutation direct_sum(const Permutation &p, const Permutation &q);
Permutation skew_sum(const Permutation &p, const Permutation &q);

/// Substitutes blocks[i] for the entry at position i of the skeleton.
Permutation inflate(const Permutation &skeleton,
                    std::span<const Permutation> blocks);

/// Lexicographically smallest simple permutation of size k (k == 1 or
/// k >= 4). Results are memoized; safe to call concurrently.
Permutation smallest_simple(int k);

/// Order-isomorphic relabelling of an arbitrary sequence of distinct ints.
Permutation standardize(std::span<const int> values);

// Lehmer-code (lexicographic) ranking over S_n. Supports n <= 20.
std::uint64_t factorial(int n);
std::uint64_t rank(const Permutation &p);
Permutation unrank(int n, std::uint64_t index);

/// Visits permutations of size n with rank in [first, last), in rank order.
void for_each_permutation(int n, std::uint64_t first, std::uint64_t last,
                          const std::function<void(const Permutation &)> &visit);
void for_each_permutation(int n,
                          const std::function<void(const Permutation &)> &visit);

} // namespace ipd

#endif

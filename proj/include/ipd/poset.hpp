#ifndef IPD_POSET_HPP
#define IPD_POSET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ipd/error.hpp"
#include "ipd/permutation.hpp"

namespace ipd {

/**
 * An interval poset identified with its set of intervals over {1..n}; the
 * order is inclusion. Construction only enforces the structural minimum
 * (bounds, the whole range, every singleton). Whether the set is actually
 * realized by a permutation is the job of validate_interval_poset().
 */
class IntervalPoset {
public:
  IntervalPoset(int n, std::vector<Interval> intervals);

  int n() const { return n_; }
  std::size_t size() const { return intervals_.size(); }
  /// Sorted by (lo, hi), no duplicates.
  const std::vector<Interval> &intervals() const { return intervals_; }
  bool contains(const Interval &iv) const;
  Interval top() const { return {1, n_}; }

  /// Bitmask over all intervals of {1..n}; injective for n <= 10.
  std::uint64_t key() const;

  friend bool operator==(const IntervalPoset &, const IntervalPoset &) = default;

private:
  int n_;
  std::vector<Interval> intervals_;
};

/// Bit position used by IntervalPoset::key(); independent of n.
constexpr int interval_bit(const Interval &iv) {
  return iv.hi * (iv.hi - 1) / 2 + (iv.lo - 1);
}
constexpr int max_keyed_size = 10;

IntervalPoset poset_from_key(int n, std::uint64_t key);

IntervalPoset build_poset(const Permutation &p);
IntervalPoset argyle_poset(int n);
IntervalPoset dual_claw_poset(int n);

/// (parent, child) pairs of the Hasse diagram, sorted.
std::vector<std::pair<Interval, Interval>> hasse_covers(const IntervalPoset &P);

struct PosetClass {
  bool tree = false;
  bool binary = false;
  bool dual_claw = false;
  bool argyle = false;
};

PosetClass classify(const IntervalPoset &P);
/// No element splits into two adjacent elements, i.e. the poset of a
/// block-wise simple permutation.
bool is_blockwise_poset(const IntervalPoset &P);
/// Some two elements properly overlap.
bool has_overlap(const IntervalPoset &P);

struct Validation {
  std::optional<ErrorCode> reason; // empty when valid
  std::string detail;

  bool ok() const { return !reason.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// True iff the set is the interval poset of some permutation. Runs the
/// framed/quadrilateral-free test on the dissection image, then confirms
/// with the recursive decomposition; the two routes must agree.
Validation validate_interval_poset(std::span<const Interval> s, int n);
/// Containment of trivial intervals plus framed and quadrilateral-free image.
Validation validate_by_dissection(std::span<const Interval> s, int n);
/// Containment of trivial intervals plus decompose() reproducing the set.
Validation validate_by_decomposition(std::span<const Interval> s, int n);

enum class NodeKind { Singleton, DualClaw, Argyle };

std::string_view to_string(NodeKind kind);

/**
 * One step of the dual-claw/argyle composition. `cuts` are the polygon
 * vertices c_1 < ... < c_l bounding the children, so child i covers the
 * values [c_i, c_{i+1} - 1] and the node covers [c_1, c_l - 1].
 */
struct DecompositionNode {
  Interval interval;
  NodeKind kind = NodeKind::Singleton;
  std::vector<int> cuts;
  std::vector<DecompositionNode> children;

  int order() const { return static_cast<int>(children.size()); }
  /// Every interval the subtree produces, sorted.
  std::vector<Interval> intervals() const;
};

/// Canonical witness: build_poset(realize(P)) == P. Throws InvalidPoset.
Permutation realize(const IntervalPoset &P);

/// Non-singleton, non-top elements that overlap nothing: the heads of the
/// argyles in the composition of a binary poset. Throws NotBinary.
std::vector<Interval> argyle_max_elements(const IntervalPoset &P);

std::string to_dot(const IntervalPoset &P);

} // namespace ipd

#endif

#ifndef IPD_DISSECTION_HPP
#define IPD_DISSECTION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ipd {

/// A chord (i, j), i < j, between vertices of a convex polygon labelled
/// 1..m counterclockwise.
struct Diagonal {
  int i = 1;
  int j = 3;

  friend constexpr auto operator<=>(const Diagonal &, const Diagonal &) = default;
};

/// Strict interleaving; chords sharing an endpoint never cross.
constexpr bool crosses(const Diagonal &d, const Diagonal &e) {
  return (d.i < e.i && e.i < d.j && d.j < e.j) ||
         (e.i < d.i && d.i < e.j && e.j < d.j);
}

/**
 * A set of diagonals of the convex m-gon. Outer edges (i, i+1) and (1, m)
 * are implicit and never stored. m == 2 is accepted as the degenerate image
 * of the one-element poset.
 */
class Dissection {
public:
  explicit Dissection(int m, std::vector<Diagonal> diagonals = {});

  int m() const { return m_; }
  bool degenerate() const { return m_ < 3; }
  const std::vector<Diagonal> &diagonals() const { return diagonals_; }
  bool has_diagonal(int i, int j) const;
  /// Outer edge or diagonal; argument order does not matter.
  bool edge_present(int i, int j) const;

  friend bool operator==(const Dissection &, const Dissection &) = default;

private:
  int m_;
  std::vector<Diagonal> diagonals_;
};

struct IntersectionalComponent {
  std::vector<Diagonal> diagonals;
  std::vector<int> support;
};

bool edge_present(const Dissection &D, int i, int j);
bool has_crossings(const Dissection &D);
bool is_diagonally_framed(const Dissection &D);
/// Four vertices whose sides are all present, with neither diagonal of the
/// four and no chord crossing a side.
bool has_quadrilateral(const Dissection &D);
/// Three pairwise adjacent vertices.
bool has_triangle(const Dissection &D);

/// Classes of the transitive closure of crossing, ordered by their
/// smallest diagonal.
std::vector<IntersectionalComponent> intersectional_components(const Dissection &D);
bool support_induces_complete(const Dissection &D, const IntersectionalComponent &C);

/// Faces of a non-crossing dissection as sorted vertex lists, in depth-first
/// order from the face on (1, m). Throws HasCrossings.
std::vector<std::vector<int>> faces(const Dissection &D);

/// Boundary of the smallest face inside {a..b} that contains the edge (a, b),
/// found by walking from a and always stepping to the farthest neighbour.
std::vector<int> face_on_edge(const Dissection &D, int a, int b);

/// All m(m-3)/2 diagonals of the m-gon in lexicographic order.
std::vector<Diagonal> all_diagonals(int m);

using DissectionFilter = std::function<bool(const Dissection &)>;
using DissectionVisitor = std::function<void(const Dissection &)>;

constexpr int default_subset_cap = 8;

/// Brute force over every diagonal subset, ranked by bitmask; visits the
/// subsets in [first, last) that pass `filter`. Throws TooLarge past `cap`.
void all_dissections(int m, const DissectionFilter &filter,
                     const DissectionVisitor &visit, int cap = default_subset_cap);
void all_dissections(int m, std::uint64_t first, std::uint64_t last,
                     const DissectionFilter &filter,
                     const DissectionVisitor &visit, int cap = default_subset_cap);

/// Non-crossing dissections only, generated face by face from (1, m).
void noncrossing_dissections(int m, const DissectionFilter &filter,
                             const DissectionVisitor &visit);

/**
 * Bitmask form of the framed and quadrilateral predicates for subset scans.
 * Bit k of a subset selects all_diagonals(m)[k]. Supports m <= 11.
 */
class DiagonalMasks {
public:
  explicit DiagonalMasks(int m);

  int m() const { return m_; }
  int count() const { return static_cast<int>(diagonals_.size()); }
  const std::vector<Diagonal> &diagonals() const { return diagonals_; }

  bool framed(std::uint64_t subset) const;
  bool quad_free(std::uint64_t subset) const;
  bool noncrossing(std::uint64_t subset) const;
  Dissection dissection(std::uint64_t subset) const;

private:
  struct CrossingPair {
    std::uint64_t pair;  // both crossing chords
    std::uint64_t frame; // frame sides that are diagonals
  };
  struct Quad {
    std::uint64_t sides;     // sides that are diagonals
    std::uint64_t forbidden; // its two diagonals and every chord crossing a side
  };

  int m_;
  std::vector<Diagonal> diagonals_;
  std::vector<CrossingPair> crossing_pairs_;
  std::vector<Quad> quads_;
};

} // namespace ipd

#endif

#ifndef IPD_ENUMERATION_HPP
#define IPD_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ipd/dissection.hpp"
#include "ipd/poset.hpp"

namespace ipd {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);

/// Interval posets with n > 1 minimal elements (closed formula).
BigInt count_interval_posets(int n);
/// Interval posets of block-wise simple permutations, n >= 4.
BigInt count_blockwise_posets(int n);

BigInt catalan(int k);
/// 1, 1, 3, 11, 45, ...; non-crossing dissections of the m-gon are
/// small_schroeder(m - 2).
BigInt small_schroeder(int k);
/// 1, 2, 6, 22, 90, ...; separable permutations of size n are
/// large_schroeder(n - 1).
BigInt large_schroeder(int k);

enum class Family { All, Tree, Blockwise, Binary, BinaryTree };
enum class Method { Formula, BrutePerm, BruteDissection, StructuredDissection };

std::string_view to_string(Family f);
std::string_view to_string(Method m);
std::optional<Family> parse_family(std::string_view s);
std::optional<Method> parse_method(std::string_view s);

bool in_family(const IntervalPoset &P, Family f);

constexpr int brute_perm_cap = 9;
constexpr int brute_perm_big_cap = 10;
constexpr int structured_cap = 15;

/// Distinct interval posets of S_n keyed by IntervalPoset::key(), each with
/// the number of permutations realizing it. Sorted by key; the result does
/// not depend on the worker count.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
tally_posets(int n, int workers = 1, int cap = brute_perm_cap);

/// Posets (or, with count_permutations, permutations) of size n whose
/// interval poset lies in the family.
BigInt brute_count(Family f, int n, bool count_permutations = false,
                   int workers = 1, int cap = brute_perm_cap);

/// Dissection classes of the m-gon matching each poset family:
/// framed and quad-free (All), non-crossing and quad-free (Tree), non-crossing
/// triangle- and quad-free (Blockwise), non-crossing (Binary).
bool in_dissection_family(const Dissection &D, Family f);

/// Counted on the face-by-face generator; All falls back to the subset scan.
BigInt dissection_count(int m, Family f, int workers = 1);
/// Counted on the brute-force subset scan (m <= 8).
BigInt dissection_count_by_subsets(int m, Family f, int workers = 1);

/// Closed form for the family at size n when one exists.
std::optional<BigInt> formula_count(Family f, int n, bool count_permutations = false);

struct CountRow {
  Family family;
  int n;
  BigInt count;
  Method method;
};

/// Rows ordered by (family, n, method); every method for a given
/// (family, n) must agree.
struct CountTable {
  std::vector<CountRow> rows;

  void sort();
  /// First (family, n) whose methods disagree.
  std::optional<std::pair<Family, int>> mismatch() const;
  std::string to_csv() const;
  std::string to_json() const;
};

} // namespace ipd

#endif

#include "ipd/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "ipd/error.hpp"
#include "ipd/parallel.hpp"

namespace ipd {

BigInt binomial(int n, int k) {
  if (n < 0)
    throw Error(ErrorCode::OutOfDomain, "binomial with negative top");
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i; // exact: r is C(n-k+i, i) here
  }
  return r;
}

namespace {

BigInt divide_exactly(const BigInt &num, int den, const char *what) {
  if (num % den != 0)
    throw Error(ErrorCode::OutOfDomain, std::string(what) + ": non-integral quotient");
  return num / den;
}

} // namespace

BigInt count_interval_posets(int n) {
  if (n < 2)
    throw Error(ErrorCode::OutOfDomain, "count_interval_posets needs n >= 2");
  BigInt sum = 0;
  for (int i = 1; i <= n - 1; ++i) {
    const int kmax = std::min(i, (n - 1 - i) / 2);
    for (int k = 0; k <= kmax; ++k)
      sum += binomial(n - 1 + i, i) * binomial(i, k) * binomial(n - 2 * k - 2, i - 1);
  }
  return divide_exactly(sum, n, "count_interval_posets");
}

BigInt count_blockwise_posets(int n) {
  if (n < 4)
    throw Error(ErrorCode::OutOfDomain, "count_blockwise_posets needs n >= 4");
  BigInt sum = 0;
  for (int i = 1; i <= (n - 1) / 3; ++i)
    sum += binomial(n + i - 1, i) * binomial(n - 2 * i - 2, i - 1);
  return divide_exactly(sum, n, "count_blockwise_posets");
}

BigInt catalan(int k) {
  if (k < 0)
    throw Error(ErrorCode::OutOfDomain, "catalan needs k >= 0");
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < j; ++i)
      c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - 1 - i)];
  return c[static_cast<std::size_t>(k)];
}

BigInt large_schroeder(int k) {
  if (k < 0)
    throw Error(ErrorCode::OutOfDomain, "large_schroeder needs k >= 0");
  // r(j) = r(j-1) + sum_{i<j} r(i) r(j-1-i)
  std::vector<BigInt> r(static_cast<std::size_t>(k) + 1, 0);
  r[0] = 1;
  for (int j = 1; j <= k; ++j) {
    BigInt s = r[static_cast<std::size_t>(j - 1)];
    for (int i = 0; i < j; ++i)
      s += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j - 1 - i)];
    r[static_cast<std::size_t>(j)] = s;
  }
  return r[static_cast<std::size_t>(k)];
}

BigInt small_schroeder(int k) {
  if (k < 0)
    throw Error(ErrorCode::OutOfDomain, "small_schroeder needs k >= 0");
  if (k == 0)
    return 1;
  return divide_exactly(large_schroeder(k), 2, "small_schroeder");
}

std::string_view to_string(Family f) {
  switch (f) {
  case Family::All: return "all";
  case Family::Tree: return "tree";
  case Family::Blockwise: return "blockwise";
  case Family::Binary: return "binary";
  case Family::BinaryTree: return "binary_tree";
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  switch (m) {
  case Method::Formula: return "formula";
  case Method::BrutePerm: return "brute_perm";
  case Method::BruteDissection: return "brute_dissection";
  case Method::StructuredDissection: return "structured_dissection";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view s) {
  for (auto f : {Family::All, Family::Tree, Family::Blockwise, Family::Binary, Family::BinaryTree})
    if (to_string(f) == s)
      return f;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
  for (auto m : {Method::Formula, Method::BrutePerm, Method::BruteDissection,
                 Method::StructuredDissection})
    if (to_string(m) == s)
      return m;
  return std::nullopt;
}

bool in_family(const IntervalPoset &P, Family f) {
  switch (f) {
  case Family::All: return true;
  case Family::Tree: return classify(P).tree;
  case Family::Blockwise: return is_blockwise_poset(P);
  case Family::Binary: return classify(P).binary;
  case Family::BinaryTree: {
    const auto c = classify(P);
    return c.binary && c.tree;
  }
  }
  return false;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
tally_posets(int n, int workers, int cap) {
  if (n < 1)
    throw Error(ErrorCode::OutOfDomain, "tally_posets needs n >= 1");
  if (n > cap || n > max_keyed_size)
    throw Error(ErrorCode::TooLarge, "permutation scan of S_" + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap));
  workers = std::max(1, workers);
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(
      static_cast<std::size_t>(workers));
  parallel_ranges(factorial(n), workers, [&](std::uint64_t first, std::uint64_t last, int w) {
    auto &local = partial[static_cast<std::size_t>(w)];
    for_each_permutation(n, first, last, [&](const Permutation &p) {
      std::uint64_t key = 0;
      for (const auto &iv : intervals_of(p))
        key |= std::uint64_t{1} << interval_bit(iv);
      ++local[key];
    });
  });
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto &local : partial)
    for (const auto &[key, count] : local)
      merged[key] += count;
  return {merged.begin(), merged.end()};
}

BigInt brute_count(Family f, int n, bool count_permutations, int workers, int cap) {
  BigInt total = 0;
  for (const auto &[key, perms] : tally_posets(n, workers, cap))
    if (in_family(poset_from_key(n, key), f))
      total += count_permutations ? BigInt(perms) : BigInt(1);
  return total;
}

bool in_dissection_family(const Dissection &D, Family f) {
  switch (f) {
  case Family::All: return is_diagonally_framed(D) && !has_quadrilateral(D);
  case Family::Tree: return !has_crossings(D) && !has_quadrilateral(D);
  case Family::Blockwise:
    return !has_crossings(D) && !has_triangle(D) && !has_quadrilateral(D);
  case Family::Binary: return !has_crossings(D);
  case Family::BinaryTree:
    // Triangulations: a tree of two-element covers maps to all-triangle faces.
    return !has_crossings(D) && static_cast<int>(D.diagonals().size()) == D.m() - 3;
  }
  return false;
}

BigInt dissection_count_by_subsets(int m, Family f, int workers) {
  if (m > default_subset_cap)
    throw Error(ErrorCode::TooLarge, "subset scan of the " + std::to_string(m) +
                                         "-gon exceeds cap " + std::to_string(default_subset_cap));
  if (m < 3)
    return in_dissection_family(Dissection(2), f) ? 1 : 0;
  const DiagonalMasks masks(m);
  const std::uint64_t total = std::uint64_t{1} << masks.count();
  workers = std::max(1, workers);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  parallel_ranges(total, workers, [&](std::uint64_t first, std::uint64_t last, int w) {
    std::uint64_t local = 0;
    for (std::uint64_t s = first; s < last; ++s) {
      if (f == Family::All) {
        if (masks.framed(s) && masks.quad_free(s))
          ++local;
      } else if (masks.noncrossing(s) && in_dissection_family(masks.dissection(s), f)) {
        ++local;
      }
    }
    partial[static_cast<std::size_t>(w)] = local;
  });
  BigInt sum = 0;
  for (auto c : partial)
    sum += c;
  return sum;
}

BigInt dissection_count(int m, Family f, int workers) {
  if (f == Family::All)
    return dissection_count_by_subsets(m, f, workers);
  if (m > structured_cap)
    throw Error(ErrorCode::TooLarge, "structured enumeration of the " + std::to_string(m) +
                                         "-gon exceeds cap " + std::to_string(structured_cap));
  std::uint64_t count = 0;
  noncrossing_dissections(
      m, [f](const Dissection &D) { return in_dissection_family(D, f); },
      [&](const Dissection &) { ++count; });
  return count;
}

std::optional<BigInt> formula_count(Family f, int n, bool count_permutations) {
  if (n < 1)
    return std::nullopt;
  switch (f) {
  case Family::All:
    if (count_permutations)
      return BigInt(factorial(n));
    return n >= 2 ? std::optional<BigInt>(count_interval_posets(n)) : std::nullopt;
  case Family::Tree: return std::nullopt;
  case Family::Blockwise:
    if (count_permutations || n < 4)
      return std::nullopt;
    return count_blockwise_posets(n);
  case Family::Binary:
    return count_permutations ? large_schroeder(n - 1) : small_schroeder(n - 1);
  case Family::BinaryTree:
    if (n < 2)
      return std::nullopt;
    return count_permutations ? BigInt(2 * catalan(n - 1)) : catalan(n - 1);
  }
  return std::nullopt;
}

void CountTable::sort() {
  std::stable_sort(rows.begin(), rows.end(), [](const CountRow &a, const CountRow &b) {
    return std::tie(a.family, a.n, a.method) < std::tie(b.family, b.n, b.method);
  });
}

std::optional<std::pair<Family, int>> CountTable::mismatch() const {
  std::map<std::pair<Family, int>, BigInt> seen;
  for (const auto &row : rows) {
    const auto key = std::make_pair(row.family, row.n);
    auto [it, fresh] = seen.emplace(key, row.count);
    if (!fresh && it->second != row.count)
      return key;
  }
  return std::nullopt;
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "family,n,count,method\n";
  for (const auto &row : rows)
    os << to_string(row.family) << ',' << row.n << ',' << row.count << ','
       << to_string(row.method) << '\n';
  return os.str();
}

std::string CountTable::to_json() const {
  auto out = nlohmann::ordered_json::array();
  for (const auto &row : rows) {
    nlohmann::ordered_json count;
    if (row.count <= std::numeric_limits<std::uint64_t>::max())
      count = row.count.convert_to<std::uint64_t>();
    else
      count = row.count.str();
    nlohmann::ordered_json entry;
    entry["family"] = to_string(row.family);
    entry["n"] = row.n;
    entry["count"] = count;
    entry["method"] = to_string(row.method);
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

} // namespace ipd

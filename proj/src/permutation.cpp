#include "ipd/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ipd/error.hpp"

namespace ipd {

std::ostream &operator<<(std::ostream &os, const Interval &i) {
  if (i.singleton())
    return os << '{' << i.lo << '}';
  return os << '[' << i.lo << ',' << i.hi << ']';
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty())
    throw Error(ErrorCode::NotAPermutation, "empty word");
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::NotAPermutation,
                  "value " + std::to_string(v) + " out of range or repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(word_.size() + 1, 0);
  for (std::size_t i = 0; i < word_.size(); ++i)
    pos[static_cast<std::size_t>(word_[i])] = static_cast<int>(i) + 1;
  return pos;
}

std::string Permutation::str() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!digits && i > 0)
      out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << p.str();
}

Permutation parse_permutation(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.empty())
    throw Error(ErrorCode::MalformedInput, "empty permutation text");

  std::vector<int> word;
  const bool separated =
      trimmed.find_first_of(", \t") != std::string_view::npos;
  if (!separated) {
    // Digit shorthand only makes sense for n <= 9.
    for (char c : trimmed) {
      if (c < '1' || c > '9')
        throw Error(ErrorCode::MalformedInput,
                    "unexpected character '" + std::string(1, c) + "'");
      word.push_back(c - '0');
    }
    return Permutation(std::move(word));
  }

  std::size_t i = 0;
  while (i < trimmed.size()) {
    const char c = trimmed[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < trimmed.size() && trimmed[j] != ',' &&
           !std::isspace(static_cast<unsigned char>(trimmed[j])))
      ++j;
    const auto token = trimmed.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::MalformedInput,
                  "not an integer: '" + std::string(token) + "'");
    word.push_back(value);
    i = j;
  }
  return Permutation(std::move(word));
}

std::vector<Interval> intervals_of(const Permutation &p) {
  const int n = p.size();
  const auto pos = p.positions();
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int a = 1; a <= n; ++a) {
    int lo = pos[static_cast<std::size_t>(a)];
    int hi = lo;
    for (int b = a; b <= n; ++b) {
      lo = std::min(lo, pos[static_cast<std::size_t>(b)]);
      hi = std::max(hi, pos[static_cast<std::size_t>(b)]);
      if (hi - lo == b - a)
        out.push_back({a, b});
    }
  }
  return out;
}

bool is_simple(const Permutation &p) {
  const int n = p.size();
  if (n == 1)
    return true;
  if (n <= 3)
    return false;
  return intervals_of(p).size() == static_cast<std::size_t>(n) + 1;
}

namespace {

// Smallest k < n such that the first k entries form a direct or skew
// summand; 0 when p is sum- and skew-indecomposable.
int leftmost_split(std::span<const int> w, bool &skew) {
  const int n = static_cast<int>(w.size());
  int lo = n + 1, hi = 0;
  for (int k = 1; k < n; ++k) {
    lo = std::min(lo, w[static_cast<std::size_t>(k - 1)]);
    hi = std::max(hi, w[static_cast<std::size_t>(k - 1)]);
    if (lo == 1 && hi == k) {
      skew = false;
      return k;
    }
    if (hi == n && lo == n - k + 1) {
      skew = true;
      return k;
    }
  }
  return 0;
}

bool separable_word(std::span<const int> w) {
  if (w.size() <= 2)
    return true;
  bool skew = false;
  const int k = leftmost_split(w, skew);
  if (k == 0)
    return false;
  const auto left = standardize(w.first(static_cast<std::size_t>(k)));
  const auto right = standardize(w.subspan(static_cast<std::size_t>(k)));
  return separable_word(left.word()) && separable_word(right.word());
}

} // namespace

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
  std::vector<int> word(values.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    word[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return Permutation(std::move(word));
}

bool is_separable(const Permutation &p) { return separable_word(p.word()); }

bool is_block_wise_simple(const Permutation &p) {
  const int n = p.size();
  std::vector<char> present(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  auto at = [&](int lo, int hi) -> char & {
    return present[static_cast<std::size_t>(lo * (n + 1) + hi)];
  };
  const auto ivs = intervals_of(p);
  for (const auto &iv : ivs)
    at(iv.lo, iv.hi) = 1;
  for (const auto &iv : ivs)
    for (int m = iv.lo; m < iv.hi; ++m)
      if (at(iv.lo, m) && at(m + 1, iv.hi))
        return false;
  return true;
}

Permutation direct_sum(const Permutation &p, const Permutation &q) {
  std::vector<int> w = p.word();
  for (int v : q.word())
    w.push_back(v + p.size());
  return Permutation(std::move(w));
}

Permutation skew_sum(const Permutation &p, const Permutation &q) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(p.size() + q.size()));
  for (int v : p.word())
    w.push_back(v + q.size());
  for (int v : q.word())
    w.push_back(v);
  return Permutation(std::move(w));
}

Permutation inflate(const Permutation &skeleton,
                    std::span<const Permutation> blocks) {
  const int k = skeleton.size();
  if (static_cast<int>(blocks.size()) != k)
    throw Error(ErrorCode::ArityMismatch,
                "skeleton of size " + std::to_string(k) + " with " +
                    std::to_string(blocks.size()) + " blocks");
  // offset[v] = number of values below the block standing in for value v.
  std::vector<int> size_by_value(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i)
    size_by_value[static_cast<std::size_t>(skeleton.at(i))] =
        blocks[static_cast<std::size_t>(i - 1)].size();
  std::vector<int> offset(static_cast<std::size_t>(k) + 1, 0);
  for (int v = 2; v <= k; ++v)
    offset[static_cast<std::size_t>(v)] =
        offset[static_cast<std::size_t>(v - 1)] + size_by_value[static_cast<std::size_t>(v - 1)];

  std::vector<int> w;
  for (int i = 1; i <= k; ++i) {
    const int base = offset[static_cast<std::size_t>(skeleton.at(i))];
    for (int v : blocks[static_cast<std::size_t>(i - 1)].word())
      w.push_back(base + v);
  }
  return Permutation(std::move(w));
}

Permutation smallest_simple(int k) {
  if (k == 1)
    return Permutation({1});
  if (k < 4)
    throw Error(ErrorCode::NoSimpleOfThatSize,
                "no simple permutation of size " + std::to_string(k));

  static std::mutex mutex;
  static std::map<int, Permutation> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end())
      return it->second;
  }

  std::vector<int> w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 1);
  do {
    Permutation p(w);
    if (is_simple(p)) {
      std::lock_guard lock(mutex);
      return cache.emplace(k, std::move(p)).first->second;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  throw Error(ErrorCode::NoSimpleOfThatSize,
              "no simple permutation of size " + std::to_string(k));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20)
    throw Error(ErrorCode::TooLarge, "factorial of " + std::to_string(n));
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Permutation &p) {
  const int n = p.size();
  if (n > 20)
    throw Error(ErrorCode::TooLarge, "rank needs n <= 20");
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p.at(j) < p.at(i))
        ++smaller_after;
    r += static_cast<std::uint64_t>(smaller_after) * factorial(n - i);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t index) {
  if (n < 1)
    throw Error(ErrorCode::OutOfDomain, "unrank needs n >= 1");
  if (index >= factorial(n))
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(index) + " >= " + std::to_string(n) + "!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const auto f = factorial(i - 1);
    const auto digit = static_cast<std::size_t>(index / f);
    index %= f;
    w.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(w));
}

void for_each_permutation(int n, std::uint64_t first, std::uint64_t last,
                          const std::function<void(const Permutation &)> &visit) {
  last = std::min(last, factorial(n));
  if (first >= last)
    return;
  std::vector<int> w = unrank(n, first).word();
  for (std::uint64_t r = first; r < last; ++r) {
    visit(Permutation(w));
    std::next_permutation(w.begin(), w.end());
  }
}

void for_each_permutation(int n,
                          const std::function<void(const Permutation &)> &visit) {
  for_each_permutation(n, 0, factorial(n), visit);
}

} // namespace ipd

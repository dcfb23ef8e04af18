#include "ipd/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ipd/bijection.hpp"

namespace ipd {

IntervalPoset::IntervalPoset(int n, std::vector<Interval> intervals)
    : n_(n), intervals_(std::move(intervals)) {
  if (n_ < 1)
    throw Error(ErrorCode::MalformedInput, "poset needs n >= 1");
  for (const auto &iv : intervals_)
    if (iv.lo < 1 || iv.hi < iv.lo || iv.hi > n_)
      throw Error(ErrorCode::MalformedInput, "interval out of range for n = " + std::to_string(n_));
  std::sort(intervals_.begin(), intervals_.end());
  intervals_.erase(std::unique(intervals_.begin(), intervals_.end()), intervals_.end());
  if (!contains(top()))
    throw Error(ErrorCode::MissingTrivial, "missing [1," + std::to_string(n_) + "]");
  for (int a = 1; a <= n_; ++a)
    if (!contains({a, a}))
      throw Error(ErrorCode::MissingTrivial, "missing {" + std::to_string(a) + "}");
}

bool IntervalPoset::contains(const Interval &iv) const {
  return std::binary_search(intervals_.begin(), intervals_.end(), iv);
}

std::uint64_t IntervalPoset::key() const {
  if (n_ > max_keyed_size)
    throw Error(ErrorCode::TooLarge, "poset keys need n <= 10");
  std::uint64_t k = 0;
  for (const auto &iv : intervals_)
    k |= std::uint64_t{1} << interval_bit(iv);
  return k;
}

IntervalPoset poset_from_key(int n, std::uint64_t key) {
  std::vector<Interval> ivs;
  for (int hi = 1; hi <= n; ++hi)
    for (int lo = 1; lo <= hi; ++lo)
      if (key >> interval_bit({lo, hi}) & 1U)
        ivs.push_back({lo, hi});
  return IntervalPoset(n, std::move(ivs));
}

IntervalPoset build_poset(const Permutation &p) {
  return IntervalPoset(p.size(), intervals_of(p));
}

IntervalPoset argyle_poset(int n) {
  std::vector<Interval> ivs;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi)
      ivs.push_back({lo, hi});
  return IntervalPoset(n, std::move(ivs));
}

IntervalPoset dual_claw_poset(int n) {
  if (n < 4)
    throw Error(ErrorCode::OutOfDomain, "dual claws have at least 4 minimal elements");
  std::vector<Interval> ivs{{1, n}};
  for (int a = 1; a <= n; ++a)
    ivs.push_back({a, a});
  return IntervalPoset(n, std::move(ivs));
}

std::vector<std::pair<Interval, Interval>> hasse_covers(const IntervalPoset &P) {
  const auto &ivs = P.intervals();
  std::vector<std::pair<Interval, Interval>> out;
  for (const auto &parent : ivs)
    for (const auto &child : ivs) {
      if (!parent.strictly_contains(child))
        continue;
      const bool between = std::any_of(ivs.begin(), ivs.end(), [&](const Interval &k) {
        return parent.strictly_contains(k) && k.strictly_contains(child);
      });
      if (!between)
        out.emplace_back(parent, child);
    }
  return out;
}

PosetClass classify(const IntervalPoset &P) {
  const auto covers = hasse_covers(P);
  const auto &ivs = P.intervals();
  auto index = [&](const Interval &iv) {
    return static_cast<std::size_t>(std::lower_bound(ivs.begin(), ivs.end(), iv) - ivs.begin());
  };
  std::vector<int> down(ivs.size(), 0), up(ivs.size(), 0);
  for (const auto &[parent, child] : covers) {
    ++down[index(parent)];
    ++up[index(child)];
  }

  const auto n = static_cast<std::size_t>(P.n());
  PosetClass c;
  c.binary = std::all_of(down.begin(), down.end(), [](int d) { return d <= 2; });
  c.tree = true;
  for (std::size_t k = 0; k < ivs.size(); ++k)
    if (ivs[k] != P.top() && up[k] != 1)
      c.tree = false;
  c.dual_claw = n >= 4 && ivs.size() == n + 1;
  c.argyle = ivs.size() == n * (n + 1) / 2;
  return c;
}

bool is_blockwise_poset(const IntervalPoset &P) {
  for (const auto &iv : P.intervals())
    for (int m = iv.lo; m < iv.hi; ++m)
      if (P.contains({iv.lo, m}) && P.contains({m + 1, iv.hi}))
        return false;
  return true;
}

bool has_overlap(const IntervalPoset &P) {
  const auto &ivs = P.intervals();
  for (std::size_t x = 0; x < ivs.size(); ++x)
    for (std::size_t y = x + 1; y < ivs.size(); ++y)
      if (ivs[x].overlaps(ivs[y]))
        return true;
  return false;
}

namespace {

// Normalizes the raw set and checks bounds and trivial elements; on success
// `sorted` holds the deduplicated set.
Validation precheck(std::span<const Interval> s, int n, std::vector<Interval> &sorted) {
  if (n < 1)
    return {ErrorCode::MalformedInput, "n must be positive"};
  sorted.assign(s.begin(), s.end());
  for (const auto &iv : sorted)
    if (iv.lo < 1 || iv.hi < iv.lo || iv.hi > n)
      return {ErrorCode::MalformedInput, "interval out of range"};
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto has = [&](Interval iv) { return std::binary_search(sorted.begin(), sorted.end(), iv); };
  if (!has({1, n}))
    return {ErrorCode::MissingTrivial, "missing [1," + std::to_string(n) + "]"};
  for (int a = 1; a <= n; ++a)
    if (!has({a, a}))
      return {ErrorCode::MissingTrivial, "missing {" + std::to_string(a) + "}"};
  return {};
}

} // namespace

Validation validate_by_dissection(std::span<const Interval> s, int n) {
  std::vector<Interval> sorted;
  if (auto v = precheck(s, n, sorted); !v)
    return v;
  const auto D = chords_of(sorted, n);
  if (!is_diagonally_framed(D))
    return {ErrorCode::NotFramed, "image has crossing chords without their frame"};
  if (has_quadrilateral(D))
    return {ErrorCode::HasQuadrilateral, "image has an empty quadrilateral"};
  return {};
}

Validation validate_by_decomposition(std::span<const Interval> s, int n) {
  std::vector<Interval> sorted;
  if (auto v = precheck(s, n, sorted); !v)
    return v;
  const auto D = chords_of(sorted, n);
  try {
    const auto produced = decompose(D).intervals();
    if (produced != sorted)
      return {ErrorCode::BadDecomposition, "decomposition does not reproduce the set"};
  } catch (const Error &e) {
    return {ErrorCode::BadDecomposition, e.what()};
  }
  return {};
}

Validation validate_interval_poset(std::span<const Interval> s, int n) {
  auto framed = validate_by_dissection(s, n);
  auto recursive = validate_by_decomposition(s, n);
  if (framed.ok() != recursive.ok())
    return {ErrorCode::BadDecomposition,
            "validators disagree: " + (framed.ok() ? recursive.detail : framed.detail)};
  return framed;
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
  case NodeKind::Singleton: return "singleton";
  case NodeKind::DualClaw: return "dual_claw";
  case NodeKind::Argyle: return "argyle";
  }
  return "unknown";
}

std::vector<Interval> DecompositionNode::intervals() const {
  std::vector<Interval> out;
  std::function<void(const DecompositionNode &)> walk = [&](const DecompositionNode &node) {
    out.push_back(node.interval);
    if (node.kind == NodeKind::Argyle)
      for (std::size_t x = 0; x < node.cuts.size(); ++x)
        for (std::size_t y = x + 1; y < node.cuts.size(); ++y)
          out.push_back({node.cuts[x], node.cuts[y] - 1});
    for (const auto &child : node.children)
      walk(child);
  };
  walk(*this);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Nested argyles alternate direction; two increasing argyles stacked would
// merge into one larger argyle.
Permutation realize_node(const DecompositionNode &node, bool parent_argyle,
                         bool parent_increasing) {
  if (node.kind == NodeKind::Singleton)
    return Permutation({1});

  const int k = node.order();
  const bool argyle = node.kind == NodeKind::Argyle;
  const bool increasing = !(argyle && parent_argyle && parent_increasing);

  std::vector<Permutation> by_value;
  by_value.reserve(static_cast<std::size_t>(k));
  for (const auto &child : node.children)
    by_value.push_back(realize_node(child, argyle, increasing));

  Permutation skeleton = Permutation::identity(k);
  if (argyle && !increasing) {
    std::vector<int> w(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      w[static_cast<std::size_t>(i)] = k - i;
    skeleton = Permutation(std::move(w));
  } else if (!argyle) {
    skeleton = smallest_simple(k);
  }

  std::vector<Permutation> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (int pos = 1; pos <= k; ++pos)
    blocks.push_back(by_value[static_cast<std::size_t>(skeleton.at(pos) - 1)]);
  return inflate(skeleton, blocks);
}

} // namespace

Permutation realize(const IntervalPoset &P) {
  if (auto v = validate_interval_poset(P.intervals(), P.n()); !v)
    throw Error(ErrorCode::InvalidPoset, std::string(to_string(*v.reason)) + ": " + v.detail);
  return realize_node(decompose(phi(P)), false, false);
}

std::vector<Interval> argyle_max_elements(const IntervalPoset &P) {
  if (!classify(P).binary)
    throw Error(ErrorCode::NotBinary, "some element covers more than two elements");
  const auto &ivs = P.intervals();
  std::vector<Interval> out;
  for (const auto &iv : ivs) {
    if (iv.singleton() || iv == P.top())
      continue;
    const bool free = std::none_of(ivs.begin(), ivs.end(),
                                   [&](const Interval &o) { return iv.overlaps(o); });
    if (free)
      out.push_back(iv);
  }
  return out;
}

namespace {

std::string node_id(const Interval &iv) {
  return "\"" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "\"";
}

} // namespace

std::string to_dot(const IntervalPoset &P) {
  std::ostringstream os;
  os << "digraph interval_poset {\n";
  os << "  node [shape=plaintext];\n";
  for (const auto &iv : P.intervals())
    os << "  " << node_id(iv) << " [label=\"" << iv << "\"];\n";
  for (const auto &[parent, child] : hasse_covers(P))
    os << "  " << node_id(parent) << " -> " << node_id(child) << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace ipd

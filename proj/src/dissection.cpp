#include "ipd/dissection.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "ipd/error.hpp"

namespace ipd {

namespace {

std::string show(const Diagonal &d) {
  return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + ")";
}

// Dense adjacency for the O(m^4) predicates.
class Adjacency {
public:
  explicit Adjacency(const Dissection &D)
      : m_(D.m()), cells_(static_cast<std::size_t>((m_ + 1) * (m_ + 1)), 0) {
    for (int i = 1; i < m_; ++i)
      set(i, i + 1);
    if (m_ >= 3)
      set(1, m_);
    for (const auto &d : D.diagonals())
      set(d.i, d.j);
  }

  bool operator()(int i, int j) const {
    return cells_[static_cast<std::size_t>(i * (m_ + 1) + j)] != 0;
  }

private:
  void set(int i, int j) {
    cells_[static_cast<std::size_t>(i * (m_ + 1) + j)] = 1;
    cells_[static_cast<std::size_t>(j * (m_ + 1) + i)] = 1;
  }

  int m_;
  std::vector<char> cells_;
};

std::array<int, 4> sorted_endpoints(const Diagonal &d, const Diagonal &e) {
  std::array<int, 4> v{d.i, d.j, e.i, e.j};
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

Dissection::Dissection(int m, std::vector<Diagonal> diagonals)
    : m_(m), diagonals_(std::move(diagonals)) {
  if (m_ < 2)
    throw Error(ErrorCode::MalformedInput,
                "polygon needs at least 2 vertices, got " + std::to_string(m_));
  for (auto &d : diagonals_) {
    if (d.i > d.j)
      std::swap(d.i, d.j);
    if (d.i < 1 || d.j > m_ || d.j - d.i < 2 || (d.i == 1 && d.j == m_))
      throw Error(ErrorCode::MalformedInput,
                  show(d) + " is not a diagonal of the " + std::to_string(m_) + "-gon");
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
    throw Error(ErrorCode::MalformedInput, "duplicate diagonal");
}

bool Dissection::has_diagonal(int i, int j) const {
  if (i > j)
    std::swap(i, j);
  return std::binary_search(diagonals_.begin(), diagonals_.end(), Diagonal{i, j});
}

bool Dissection::edge_present(int i, int j) const {
  if (i > j)
    std::swap(i, j);
  if (i < 1 || j > m_ || i == j)
    return false;
  if (j == i + 1 || (i == 1 && j == m_))
    return true;
  return has_diagonal(i, j);
}

bool edge_present(const Dissection &D, int i, int j) { return D.edge_present(i, j); }

bool has_crossings(const Dissection &D) {
  const auto &ds = D.diagonals();
  for (std::size_t x = 0; x < ds.size(); ++x)
    for (std::size_t y = x + 1; y < ds.size(); ++y)
      if (crosses(ds[x], ds[y]))
        return true;
  return false;
}

bool is_diagonally_framed(const Dissection &D) {
  const Adjacency adj(D);
  const auto &ds = D.diagonals();
  for (std::size_t x = 0; x < ds.size(); ++x)
    for (std::size_t y = x + 1; y < ds.size(); ++y) {
      if (!crosses(ds[x], ds[y]))
        continue;
      const auto [a, b, c, d] = sorted_endpoints(ds[x], ds[y]);
      if (!adj(a, b) || !adj(b, c) || !adj(c, d) || !adj(a, d))
        return false;
    }
  return true;
}

bool has_quadrilateral(const Dissection &D) {
  const int m = D.m();
  const Adjacency adj(D);
  const auto &ds = D.diagonals();
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      if (!adj(a, b))
        continue;
      for (int c = b + 1; c <= m; ++c) {
        if (!adj(b, c) || adj(a, c))
          continue;
        for (int d = c + 1; d <= m; ++d) {
          if (!adj(c, d) || !adj(a, d) || adj(b, d))
            continue;
          const std::array<Diagonal, 4> sides{{{a, b}, {b, c}, {c, d}, {a, d}}};
          const bool entered = std::any_of(ds.begin(), ds.end(), [&](const Diagonal &e) {
            return std::any_of(sides.begin(), sides.end(),
                               [&](const Diagonal &s) { return crosses(e, s); });
          });
          if (!entered)
            return true;
        }
      }
    }
  return false;
}

bool has_triangle(const Dissection &D) {
  const int m = D.m();
  const Adjacency adj(D);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      if (!adj(a, b))
        continue;
      for (int c = b + 1; c <= m; ++c)
        if (adj(b, c) && adj(a, c))
          return true;
    }
  return false;
}

std::vector<IntersectionalComponent> intersectional_components(const Dissection &D) {
  const auto &ds = D.diagonals();
  std::vector<std::size_t> parent(ds.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < ds.size(); ++x)
    for (std::size_t y = x + 1; y < ds.size(); ++y)
      if (crosses(ds[x], ds[y])) {
        const auto rx = find(x), ry = find(y);
        parent[std::max(rx, ry)] = std::min(rx, ry);
      }

  // Roots are the smallest member, so visiting in order yields the
  // components sorted by their first diagonal.
  std::vector<IntersectionalComponent> out;
  std::vector<std::size_t> slot(ds.size(), 0);
  for (std::size_t x = 0; x < ds.size(); ++x) {
    const auto r = find(x);
    if (r == x) {
      slot[x] = out.size();
      out.emplace_back();
    }
    auto &comp = out[slot[r]];
    comp.diagonals.push_back(ds[x]);
    comp.support.push_back(ds[x].i);
    comp.support.push_back(ds[x].j);
  }
  for (auto &comp : out) {
    std::sort(comp.support.begin(), comp.support.end());
    comp.support.erase(std::unique(comp.support.begin(), comp.support.end()),
                       comp.support.end());
  }
  return out;
}

bool support_induces_complete(const Dissection &D, const IntersectionalComponent &C) {
  for (std::size_t x = 0; x < C.support.size(); ++x)
    for (std::size_t y = x + 1; y < C.support.size(); ++y)
      if (!D.edge_present(C.support[x], C.support[y]))
        return false;
  return true;
}

std::vector<int> face_on_edge(const Dissection &D, int a, int b) {
  std::vector<int> boundary{a};
  int u = a;
  while (u != b) {
    int w = b;
    while (w > u + 1 && (!D.edge_present(u, w) || (u == a && w == b)))
      --w;
    boundary.push_back(w);
    u = w;
  }
  return boundary;
}

std::vector<std::vector<int>> faces(const Dissection &D) {
  if (has_crossings(D))
    throw Error(ErrorCode::HasCrossings, "faces() needs a non-crossing dissection");
  std::vector<std::vector<int>> out;
  if (D.degenerate())
    return out;
  std::vector<std::pair<int, int>> pending{{1, D.m()}};
  while (!pending.empty()) {
    const auto [a, b] = pending.back();
    pending.pop_back();
    auto face = face_on_edge(D, a, b);
    for (std::size_t k = face.size() - 1; k > 0; --k)
      if (face[k] - face[k - 1] >= 2)
        pending.emplace_back(face[k - 1], face[k]);
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<Diagonal> all_diagonals(int m) {
  std::vector<Diagonal> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      if (!(i == 1 && j == m))
        out.push_back({i, j});
  return out;
}

void all_dissections(int m, const DissectionFilter &filter,
                     const DissectionVisitor &visit, int cap) {
  const auto count = all_diagonals(std::max(m, 2)).size();
  all_dissections(m, 0, std::uint64_t{1} << count, filter, visit, cap);
}

void all_dissections(int m, std::uint64_t first, std::uint64_t last,
                     const DissectionFilter &filter,
                     const DissectionVisitor &visit, int cap) {
  if (m > cap)
    throw Error(ErrorCode::TooLarge, "subset scan of the " + std::to_string(m) +
                                         "-gon exceeds cap " + std::to_string(cap));
  const auto diagonals = all_diagonals(m);
  last = std::min(last, std::uint64_t{1} << diagonals.size());
  std::vector<Diagonal> chosen;
  for (std::uint64_t subset = first; subset < last; ++subset) {
    chosen.clear();
    for (std::size_t k = 0; k < diagonals.size(); ++k)
      if (subset >> k & 1U)
        chosen.push_back(diagonals[k]);
    const Dissection D(m, chosen);
    if (!filter || filter(D))
      visit(D);
  }
}

namespace {

class NoncrossingGenerator {
public:
  explicit NoncrossingGenerator(int m) : m_(m) {}

  void run(const std::function<void()> &emit) { inside(1, m_, emit); }
  Dissection current() const { return Dissection(m_, chosen_); }

private:
  // Every choice of chords strictly inside the polygon {a..b}, given that
  // (a, b) bounds it.
  void inside(int a, int b, const std::function<void()> &k) {
    if (b - a < 2) {
      k();
      return;
    }
    const int interior = b - a - 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << interior); ++mask) {
      std::vector<int> face{a};
      for (int t = 0; t < interior; ++t)
        if (mask >> t & 1U)
          face.push_back(a + 1 + t);
      face.push_back(b);
      chain(face, 0, k);
    }
  }

  void chain(const std::vector<int> &face, std::size_t idx,
             const std::function<void()> &k) {
    if (idx + 1 == face.size()) {
      k();
      return;
    }
    const int u = face[idx], w = face[idx + 1];
    if (w - u < 2) {
      chain(face, idx + 1, k);
      return;
    }
    chosen_.push_back({u, w});
    inside(u, w, [&] { chain(face, idx + 1, k); });
    chosen_.pop_back();
  }

  int m_;
  std::vector<Diagonal> chosen_;
};

} // namespace

void noncrossing_dissections(int m, const DissectionFilter &filter,
                             const DissectionVisitor &visit) {
  if (m < 3) {
    const Dissection D(std::max(m, 2));
    if (!filter || filter(D))
      visit(D);
    return;
  }
  NoncrossingGenerator gen(m);
  gen.run([&] {
    const auto D = gen.current();
    if (!filter || filter(D))
      visit(D);
  });
}

DiagonalMasks::DiagonalMasks(int m) : m_(m), diagonals_(all_diagonals(m)) {
  if (diagonals_.size() > 64)
    throw Error(ErrorCode::TooLarge, "bitmask scan supports m <= 11");
  std::vector<int> index(static_cast<std::size_t>((m + 1) * (m + 1)), -1);
  for (std::size_t k = 0; k < diagonals_.size(); ++k)
    index[static_cast<std::size_t>(diagonals_[k].i * (m + 1) + diagonals_[k].j)] =
        static_cast<int>(k);
  auto bit = [&](int i, int j) -> std::uint64_t {
    if (i > j)
      std::swap(i, j);
    const int k = index[static_cast<std::size_t>(i * (m + 1) + j)];
    return k < 0 ? 0 : std::uint64_t{1} << k;
  };
  auto crossing = [&](const Diagonal &s) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < diagonals_.size(); ++k)
      if (crosses(diagonals_[k], s))
        out |= std::uint64_t{1} << k;
    return out;
  };

  for (std::size_t x = 0; x < diagonals_.size(); ++x)
    for (std::size_t y = x + 1; y < diagonals_.size(); ++y) {
      if (!crosses(diagonals_[x], diagonals_[y]))
        continue;
      const auto [a, b, c, d] = sorted_endpoints(diagonals_[x], diagonals_[y]);
      crossing_pairs_.push_back({(std::uint64_t{1} << x) | (std::uint64_t{1} << y),
                                 bit(a, b) | bit(b, c) | bit(c, d) | bit(a, d)});
    }

  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      for (int c = b + 1; c <= m; ++c)
        for (int d = c + 1; d <= m; ++d) {
          Quad q{bit(a, b) | bit(b, c) | bit(c, d) | bit(a, d), bit(a, c) | bit(b, d)};
          for (const Diagonal s : {Diagonal{a, b}, Diagonal{b, c}, Diagonal{c, d}, Diagonal{a, d}})
            q.forbidden |= crossing(s);
          quads_.push_back(q);
        }
}

bool DiagonalMasks::framed(std::uint64_t subset) const {
  return std::none_of(crossing_pairs_.begin(), crossing_pairs_.end(), [&](const CrossingPair &cp) {
    return (subset & cp.pair) == cp.pair && (subset & cp.frame) != cp.frame;
  });
}

bool DiagonalMasks::quad_free(std::uint64_t subset) const {
  return std::none_of(quads_.begin(), quads_.end(), [&](const Quad &q) {
    return (subset & q.sides) == q.sides && (subset & q.forbidden) == 0;
  });
}

bool DiagonalMasks::noncrossing(std::uint64_t subset) const {
  return std::none_of(crossing_pairs_.begin(), crossing_pairs_.end(), [&](const CrossingPair &cp) {
    return (subset & cp.pair) == cp.pair;
  });
}

Dissection DiagonalMasks::dissection(std::uint64_t subset) const {
  std::vector<Diagonal> chosen;
  for (std::size_t k = 0; k < diagonals_.size(); ++k)
    if (subset >> k & 1U)
      chosen.push_back(diagonals_[k]);
  return Dissection(m_, std::move(chosen));
}

} // namespace ipd

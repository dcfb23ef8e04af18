#include "ipd/bijection.hpp"

#include <algorithm>
#include <string>

#include "ipd/error.hpp"

namespace ipd {

Dissection chords_of(std::span<const Interval> intervals, int n) {
  std::vector<Diagonal> chords;
  for (const auto &iv : intervals)
    if (!iv.singleton() && !(iv.lo == 1 && iv.hi == n))
      chords.push_back({iv.lo, iv.hi + 1});
  return Dissection(n + 1, std::move(chords));
}

Dissection phi(const IntervalPoset &P) { return chords_of(P.intervals(), P.n()); }

IntervalPoset phi_inverse(const Dissection &D) {
  if (!is_diagonally_framed(D))
    throw Error(ErrorCode::NotFramed, "crossing chords without their frame");
  if (has_quadrilateral(D))
    throw Error(ErrorCode::HasQuadrilateral, "dissection contains an empty quadrilateral");
  const int n = D.m() - 1;
  std::vector<Interval> ivs;
  for (int a = 1; a <= n; ++a)
    ivs.push_back({a, a});
  ivs.push_back({1, n});
  for (const auto &d : D.diagonals())
    ivs.push_back({d.i, d.j - 1});
  return IntervalPoset(n, std::move(ivs));
}

DecompositionNode decompose(const Dissection &D, int a, int b) {
  if (!D.edge_present(a, b))
    throw Error(ErrorCode::MalformedInput,
                "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
  DecompositionNode node;
  node.interval = {a, b - 1};
  if (b - a == 1)
    return node;

  std::vector<int> cuts{a};
  for (int v = a + 1; v < b; ++v)
    if (D.edge_present(a, v) && D.edge_present(v, b))
      cuts.push_back(v);
  cuts.push_back(b);

  if (cuts.size() >= 3) {
    for (std::size_t x = 0; x < cuts.size(); ++x)
      for (std::size_t y = x + 1; y < cuts.size(); ++y)
        if (!D.edge_present(cuts[x], cuts[y]))
          throw Error(ErrorCode::CutsNotComplete,
                      "cut vertices " + std::to_string(cuts[x]) + " and " +
                          std::to_string(cuts[y]) + " are not joined");
    node.kind = NodeKind::Argyle;
  } else {
    cuts = face_on_edge(D, a, b);
    if (cuts.size() == 4)
      throw Error(ErrorCode::QuadrilateralFace,
                  "face {" + std::to_string(cuts[0]) + "," + std::to_string(cuts[1]) + "," +
                      std::to_string(cuts[2]) + "," + std::to_string(cuts[3]) + "}");
    node.kind = NodeKind::DualClaw;
  }
  node.cuts = cuts;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    node.children.push_back(decompose(D, cuts[k], cuts[k + 1]));
  return node;
}

DecompositionNode decompose(const Dissection &D) { return decompose(D, 1, D.m()); }

Dissection psi(const IntervalPoset &P) {
  const auto heads = argyle_max_elements(P);
  std::vector<Diagonal> chords;
  for (const auto &iv : heads)
    chords.push_back({iv.lo, iv.hi + 1});
  return Dissection(P.n() + 1, std::move(chords));
}

namespace {

void b_poset_from(const Dissection &D, int a, int b, std::vector<Interval> &out) {
  if (b - a == 1) {
    out.push_back({a, a});
    return;
  }
  // A triangle face yields a two-element cover; larger faces yield a full
  // argyle over their boundary. Both are "every [v_i, v_j - 1]".
  const auto face = face_on_edge(D, a, b);
  for (std::size_t x = 0; x < face.size(); ++x)
    for (std::size_t y = x + 1; y < face.size(); ++y)
      out.push_back({face[x], face[y] - 1});
  for (std::size_t k = 0; k + 1 < face.size(); ++k)
    b_poset_from(D, face[k], face[k + 1], out);
}

} // namespace

IntervalPoset b_poset(const Dissection &D) {
  if (has_crossings(D))
    throw Error(ErrorCode::HasCrossings, "B-Poset needs a non-crossing dissection");
  std::vector<Interval> out;
  b_poset_from(D, 1, D.m(), out);
  return IntervalPoset(D.m() - 1, std::move(out));
}

} // namespace ipd

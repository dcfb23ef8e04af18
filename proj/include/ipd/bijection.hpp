#ifndef IPD_BIJECTION_HPP
#define IPD_BIJECTION_HPP

#include <span>

#include "ipd/dissection.hpp"
#include "ipd/poset.hpp"

namespace ipd {

// Edge (a, b) of the (n+1)-gon corresponds to the interval [a, b-1]:
// singletons are the sides (a, a+1), the top [1, n] is the side (1, n+1),
// every other interval is a diagonal.

/// The chord for every non-singleton, non-top interval; no validity checks.
Dissection chords_of(std::span<const Interval> intervals, int n);

/// One-element poset maps to the degenerate 2-gon.
Dissection phi(const IntervalPoset &P);

/// Throws NotFramed or HasQuadrilateral outside the image of phi.
IntervalPoset phi_inverse(const Dissection &D);

/**
 * Recursive dual-claw/argyle decomposition of the subpolygon {a..b} of a
 * framed, quadrilateral-free dissection, rooted at the edge (a, b).
 *
 * The cut set is {a, b} plus every v in between joined to both a and b.
 * Three or more cuts must be pairwise joined and give an argyle over them;
 * otherwise the face on (a, b) gives a dual claw over its boundary.
 * Throws CutsNotComplete or QuadrilateralFace on inputs outside the domain.
 */
DecompositionNode decompose(const Dissection &D, int a, int b);
DecompositionNode decompose(const Dissection &D);

/// Separable-family map: one chord per argyle head. Throws NotBinary.
Dissection psi(const IntervalPoset &P);

/// Inverse of psi on non-crossing dissections. Throws HasCrossings.
IntervalPoset b_poset(const Dissection &D);

} // namespace ipd

#endif

#pragma once

#include <vector>

#include "artifact/catalog.hpp"
#include "artifact/error.hpp"
#include "artifact/lorentz.hpp"
#include "artifact/real.hpp"

namespace artifact::horoball {

// A horoball centered at an ideal point, described by its level t > 0:
// with the center c in affine normalization (c_0 = 1), a point p (also
// affine) lies on the boundary exactly when
//   v(p) = <p, c>^2 / -<p, p> = t.
// Larger t means a larger ball; t > 1 once the ball contains the model
// center, and t = 1 for the ball through it. Levels are tied to this
// affine chart: an isometry moving the center rescales them.
struct Horoball {
    lorentz::ProjectivePoint center; // affine, ideal
    real t;
};

// The parameter s in (-1, 1) marks where the ball meets the model diameter
// through its center, t = (1-s)/(1+s) = exp(-2 artanh s).
real s_to_t(const real& s);
real t_to_s(const real& t);

// The level v(p) of the horosphere through p, both arguments affine.
real level_at(const lorentz::ProjectivePoint& center, const lorentz::ProjectivePoint& p);

// The ball centered at `center` whose boundary passes through p.
Horoball horoball_through(const lorentz::ProjectivePoint& center,
                          const lorentz::ProjectivePoint& p, const real& tol);

enum class Membership { Inside, Boundary, Outside };
Membership membership(const Horoball& b, const lorentz::ProjectivePoint& p, const real& tol);

// Where the boundary of b meets the segment from `toward` to the center:
// parameterize h(u) = u * c + toward and solve v(h) = t. With an ideal
// center the equation is linear; otherwise take the admissible root on the
// segment side, the one nearer `toward` if both qualify. DomainError when
// the boundary misses the segment.
lorentz::ProjectivePoint edge_intersection(const Horoball& b,
                                           const lorentz::ProjectivePoint& toward,
                                           const real& tol);

// The solved parameter u >= 0 itself; the boundary point is
// affine(u * center + toward), so u grows as the ball shrinks.
real edge_intersection_parameter(const Horoball& b, const lorentz::ProjectivePoint& toward,
                                 const real& tol);

// The largest ball centered at ideal vertex i of s that stays on the inner
// side of the opposite facet: its boundary touches the facet plane at the
// orthogonal foot of the vertex.
Horoball facet_tangent_horoball(const catalog::CoxeterSimplex& s, int i, const real& tol);

// Given the ball bi at ideal vertex i, the ball at ideal vertex j tangent
// to it: its boundary passes through the point where bi meets edge ij.
Horoball mutual_tangent_horoball(const catalog::CoxeterSimplex& s, int i, const Horoball& bi,
                                 int j, const real& tol);

// Intrinsic arc length, in the Euclidean metric a horosphere carries,
// between two of its points at hyperbolic distance x: 2 sinh(x/2).
real horospheric_arc(const real& x);

// Euclidean volume of a k-simplex from its edge lengths L[a][b] via the
// bordered Cayley-Menger determinant. DomainError for malformed input;
// Error when the lengths are not embeddable.
real cayley_menger_volume(const std::vector<std::vector<real>>& lengths, int k, const real& tol);

// Volume of the piece the ball at ideal vertex i cuts out of the simplex:
// the horospheric (n-1)-simplex spanned by the boundary points on the n
// edges at vertex i, scaled by 1/(n-1).
real piece_volume(const catalog::CoxeterSimplex& s, int i, const Horoball& b, const real& tol);

} // namespace artifact::horoball

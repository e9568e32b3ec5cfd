#pragma once

#include <array>
#include <vector>

#include "artifact/error.hpp"
#include "artifact/real.hpp"

namespace artifact::lorentz {

// Coordinates in R^{n+1} with the bilinear form of signature (1, n):
//   <x, y> = -x_0 y_0 + x_1 y_1 + ... + x_n y_n.
// Index 0 is the timelike coordinate. Points and forms are stored
// unnormalized; every operation is invariant under positive rescaling.
using Vec = std::vector<real>;

struct ProjectivePoint {
    Vec coords;
    int dim() const { return static_cast<int>(coords.size()) - 1; }
};

// A hyperplane as a covector u: the plane is { x : sum_k u_k x_k = 0 }.
struct HyperplaneForm {
    Vec coeffs;
    int dim() const { return static_cast<int>(coeffs.size()) - 1; }
};

enum class PointClass { Proper, Ideal, Outer };

real bform(const Vec& x, const Vec& y);
real bform(const ProjectivePoint& x, const ProjectivePoint& y);

// Plain evaluation u(x) = sum_k u_k x_k; zero means incidence.
real evaluate(const HyperplaneForm& u, const ProjectivePoint& x);

// The point Lorentz-orthogonal to the plane: pole(u) = (-u_0, u_1, ..., u_n),
// so that u(x) = <pole(u), x> for every x.
ProjectivePoint pole(const HyperplaneForm& u);

// Inverse construction: the plane of points orthogonal to p.
HyperplaneForm polar(const ProjectivePoint& p);

// Proper when <p,p> < 0, Ideal on the light cone, Outer when <p,p> > 0,
// decided against tol scaled by the squared Euclidean norm of the
// coordinates so the answer is independent of scaling.
PointClass classify(const ProjectivePoint& p, const real& tol);

// Hyperbolic distance between proper points:
//   cosh d = -<x,y> / sqrt(<x,x><y,y>).
// Raises DomainError on non-proper input; values of the ratio below 1 by
// more than tol are rejected, closer ones are clamped.
real distance(const ProjectivePoint& x, const ProjectivePoint& y, const real& tol);

// Orthogonal projection of x onto the plane of u:
//   foot = x - (u(x) / <pole(u), pole(u)>) * pole(u).
// Scaled so the result is a valid representative; DomainError when the
// plane is degenerate (lightlike pole) or the foot is not proper.
ProjectivePoint foot(const ProjectivePoint& x, const HyperplaneForm& u, const real& tol);

// Representative rescaled so coords[0] == 1.
ProjectivePoint affine(const ProjectivePoint& p);

// One labeled edge of a Coxeter diagram: dihedral angle pi/weight between
// planes i and j. Absent pairs mean weight 2 (orthogonal); weight_infinity
// marks parallel planes (angle 0).
inline constexpr int weight_infinity = -1;

struct DiagramEdge {
    int i = 0, j = 0;
    int weight = 3;
};

// Unit-normalized Gram matrix of the planes' poles:
//   g_ij = <p_i, p_j> / sqrt(<p_i,p_i><p_j,p_j>).
// Every pole must be spacelike (positive self-product).
struct GramMatrix {
    std::vector<std::vector<real>> entries;
    int size() const { return static_cast<int>(entries.size()); }
};

GramMatrix gram(const std::vector<HyperplaneForm>& forms);

// Cosine the diagram prescribes for a pair of planes: -cos(pi / weight).
real diagram_cosine(int weight);

// Eigenvalue signature (positive, negative, zero) with zeros decided
// against tol times the largest absolute eigenvalue.
std::array<int, 3> signature(const GramMatrix& g, const real& tol);

// Dense helpers shared with the volume computations.
real determinant(std::vector<std::vector<real>> a);
std::vector<real> symmetric_eigenvalues(std::vector<std::vector<real>> a);

// Full Jacobi eigendecomposition; eigenvectors returned as columns of v.
void symmetric_eigen(std::vector<std::vector<real>> a,
                     std::vector<real>& values,
                     std::vector<std::vector<real>>& vectors);

} // namespace artifact::lorentz

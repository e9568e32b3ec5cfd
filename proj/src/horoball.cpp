#include "artifact/horoball.hpp"

#include <sstream>

namespace artifact::horoball {

using lorentz::HyperplaneForm;
using lorentz::PointClass;
using lorentz::ProjectivePoint;

real s_to_t(const real& s) {
    if (s <= -1 || s >= 1)
        throw DomainError("horoball parameter s must lie in (-1, 1)");
    return (1 - s) / (1 + s);
}

real t_to_s(const real& t) {
    if (t <= 0)
        throw DomainError("horoball level must be positive");
    return (1 - t) / (1 + t);
}

real level_at(const ProjectivePoint& center, const ProjectivePoint& p) {
    real pp = lorentz::bform(p, p);
    if (pp >= 0)
        throw DomainError("horoball level is defined for proper points only");
    real pc = lorentz::bform(p, center);
    return pc * pc / -pp;
}

namespace {

ProjectivePoint checked_center(const ProjectivePoint& center, const real& tol) {
    if (lorentz::classify(center, tol) != PointClass::Ideal)
        throw DomainError("horoball center must be ideal");
    return lorentz::affine(center);
}

} // namespace

Horoball horoball_through(const ProjectivePoint& center, const ProjectivePoint& p,
                          const real& tol) {
    Horoball b;
    b.center = checked_center(center, tol);
    b.t = level_at(b.center, lorentz::affine(p));
    if (b.t <= 0)
        throw DomainError("degenerate horoball through the given point");
    return b;
}

Membership membership(const Horoball& b, const ProjectivePoint& p, const real& tol) {
    real v = level_at(b.center, lorentz::affine(p));
    if (v < b.t * (1 - tol))
        return Membership::Inside;
    if (v > b.t * (1 + tol))
        return Membership::Outside;
    return Membership::Boundary;
}

real edge_intersection_parameter(const Horoball& b, const ProjectivePoint& toward,
                                 const real& tol) {
    ProjectivePoint a = lorentz::affine(toward);
    const ProjectivePoint& c = b.center;
    real cc = lorentz::bform(c, c);
    real ac = lorentz::bform(a, c);
    real aa = lorentz::bform(a, a);

    // v(u*c + a) = t expands to a quadratic in u:
    //   <c,c>(<c,c>+t) u^2 + 2<a,c>(<c,c>+t) u + (<a,c>^2 + t<a,a>) = 0.
    real A = cc * (cc + b.t);
    real B = 2 * ac * (cc + b.t);
    real C = ac * ac + b.t * aa;

    real scale = 0;
    for (const real& x : c.coords)
        scale += x * x;

    // The boundary may pass exactly through `toward` (a ball tangent to its
    // facet at a vertex of that facet); cancellation then leaves u a few ulps
    // on either side of zero, so values inside the noise band snap to the
    // endpoint instead of being rejected. Band at half the working digits:
    // far above rounding error, far below any genuine miss.
    real noise = pow(real(10), -static_cast<int>(precision() / 2));

    real u;
    if (abs(cc) <= tol * scale) {
        // Ideal center: the quadratic degenerates to B u + C = 0.
        if (B == 0)
            throw DomainError("edge through the horoball center is degenerate");
        u = -C / B;
        if (u < 0) {
            real band = noise * (ac * ac + abs(b.t * aa)) / abs(B);
            if (-u > band)
                throw DomainError("horoball boundary misses the edge segment");
            u = 0;
        }
    } else {
        real disc = B * B - 4 * A * C;
        if (disc < 0)
            throw DomainError("horoball boundary misses the edge line");
        real root = sqrt(disc);
        real u1 = (-B - root) / (2 * A);
        real u2 = (-B + root) / (2 * A);
        if (u1 > u2)
            std::swap(u1, u2);
        // Segment side is u >= 0; of two admissible roots take the one
        // nearer `toward`, the smaller u.
        real band = noise * (abs(B) + root) / (2 * abs(A));
        if (u1 >= 0)
            u = u1;
        else if (u2 >= 0)
            u = u2;
        else if (-u2 <= band)
            u = 0;
        else
            throw DomainError("horoball boundary misses the edge segment");
    }
    return u;
}

lorentz::ProjectivePoint edge_intersection(const Horoball& b, const ProjectivePoint& toward,
                                           const real& tol) {
    ProjectivePoint a = lorentz::affine(toward);
    real u = edge_intersection_parameter(b, toward, tol);
    ProjectivePoint h;
    h.coords.resize(a.coords.size());
    for (std::size_t k = 0; k < h.coords.size(); ++k)
        h.coords[k] = u * b.center.coords[k] + a.coords[k];
    return lorentz::affine(h);
}

Horoball facet_tangent_horoball(const catalog::CoxeterSimplex& s, int i, const real& tol) {
    if (i < 0 || i > s.dimension)
        throw DomainError("vertex index out of range");
    if (!s.ideal[i])
        throw DomainError("facet-tangent horoball wants an ideal vertex");
    ProjectivePoint f = lorentz::foot(s.vertex(i), s.form(i), tol);
    Horoball b = horoball_through(s.vertex(i), f, tol);
    // The foot realizes the minimum of the level over the facet plane, so
    // the plane's other points must not fall inside; the simplex vertices
    // on the plane give a cheap spot check of the stored geometry.
    for (int j = 0; j <= s.dimension; ++j) {
        if (j == i || s.ideal[j])
            continue;
        if (membership(b, s.vertex(j), tol) == Membership::Inside)
            throw Error("facet-tangent horoball overruns the facet plane");
    }
    return b;
}

Horoball mutual_tangent_horoball(const catalog::CoxeterSimplex& s, int i, const Horoball& bi,
                                 int j, const real& tol) {
    if (i == j)
        throw DomainError("mutual tangency wants two distinct vertices");
    if (i < 0 || i > s.dimension || j < 0 || j > s.dimension)
        throw DomainError("vertex index out of range");
    if (!s.ideal[i] || !s.ideal[j])
        throw DomainError("mutual tangency wants ideal vertices");
    ProjectivePoint touch = edge_intersection(bi, s.vertex(j), tol);
    return horoball_through(s.vertex(j), touch, tol);
}

real horospheric_arc(const real& x) {
    if (x < 0)
        throw DomainError("arc length must be nonnegative");
    return 2 * sinh(x / 2);
}

real cayley_menger_volume(const std::vector<std::vector<real>>& lengths, int k, const real& tol) {
    if (k < 1)
        throw DomainError("simplex dimension must be positive");
    std::size_t m = static_cast<std::size_t>(k) + 1;
    if (lengths.size() != m)
        throw DomainError("edge length matrix has the wrong size");
    for (std::size_t a = 0; a < m; ++a) {
        if (lengths[a].size() != m)
            throw DomainError("edge length matrix is not square");
        if (lengths[a][a] != 0)
            throw DomainError("edge length matrix must have zero diagonal");
        for (std::size_t b = a + 1; b < m; ++b) {
            if (lengths[a][b] < 0)
                throw DomainError("edge lengths must be nonnegative");
            if (abs(lengths[a][b] - lengths[b][a]) >
                tol * (std::max)(real(1), lengths[a][b]))
                throw DomainError("edge length matrix is not symmetric");
        }
    }

    // Bordered determinant: row and column of ones against squared lengths;
    //   vol^2 = (-1)^(k+1) det / (2^k (k!)^2).
    std::vector<std::vector<real>> M(m + 1, std::vector<real>(m + 1, real(0)));
    real maxsq = 0;
    for (std::size_t a = 0; a < m; ++a) {
        M[0][a + 1] = 1;
        M[a + 1][0] = 1;
        for (std::size_t b = 0; b < m; ++b) {
            M[a + 1][b + 1] = lengths[a][b] * lengths[a][b];
            maxsq = (std::max)(maxsq, M[a + 1][b + 1]);
        }
    }
    real det = lorentz::determinant(std::move(M));

    real denom = 1;
    for (int r = 2; r <= k; ++r)
        denom *= r;
    denom = denom * denom;
    for (int r = 0; r < k; ++r)
        denom *= 2;

    real v2 = ((k + 1) % 2 == 0 ? det : -det) / denom;
    if (v2 <= 0) {
        // Degenerate inputs may round to a tiny value of either sign; a
        // decisively negative one is not a point configuration at all.
        real span = (std::max)(real(1), pow(maxsq, static_cast<int>(m)));
        if (v2 < -tol * span / denom)
            throw Error("edge lengths are not embeddable in Euclidean space");
        return real(0);
    }
    return sqrt(v2);
}

real piece_volume(const catalog::CoxeterSimplex& s, int i, const Horoball& b, const real& tol) {
    int n = s.dimension;
    if (i < 0 || i > n)
        throw DomainError("vertex index out of range");
    if (!s.ideal[i])
        throw DomainError("piece volume wants an ideal vertex");

    // Boundary points on the n edges from vertex i.
    std::vector<ProjectivePoint> boundary;
    boundary.reserve(n);
    for (int j = 0; j <= n; ++j) {
        if (j == i)
            continue;
        boundary.push_back(edge_intersection(b, s.vertex(j), tol));
    }

    // Chord lengths between them, converted to intrinsic horospheric ones.
    std::vector<std::vector<real>> L(n, std::vector<real>(n, real(0)));
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            real d = lorentz::distance(boundary[a], boundary[c], tol);
            L[a][c] = horospheric_arc(d);
            L[c][a] = L[a][c];
        }
    }

    real area = cayley_menger_volume(L, n - 1, tol);
    return area / (n - 1);
}

} // namespace artifact::horoball

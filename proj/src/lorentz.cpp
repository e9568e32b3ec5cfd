#include "artifact/lorentz.hpp"

#include <algorithm>
#include <cstddef>

#include <boost/math/constants/constants.hpp>

namespace artifact::lorentz {

namespace {

void check_same_dim(std::size_t a, std::size_t b) {
    if (a != b)
        throw DomainError("dimension mismatch");
    if (a < 3)
        throw DomainError("dimension must be at least 2");
}

real euclid_norm2(const Vec& v) {
    real s = 0;
    for (const real& c : v)
        s += c * c;
    return s;
}

} // namespace

real bform(const Vec& x, const Vec& y) {
    check_same_dim(x.size(), y.size());
    real s = -x[0] * y[0];
    for (std::size_t k = 1; k < x.size(); ++k)
        s += x[k] * y[k];
    return s;
}

real bform(const ProjectivePoint& x, const ProjectivePoint& y) {
    return bform(x.coords, y.coords);
}

real evaluate(const HyperplaneForm& u, const ProjectivePoint& x) {
    check_same_dim(u.coeffs.size(), x.coords.size());
    real s = 0;
    for (std::size_t k = 0; k < u.coeffs.size(); ++k)
        s += u.coeffs[k] * x.coords[k];
    return s;
}

ProjectivePoint pole(const HyperplaneForm& u) {
    if (u.coeffs.size() < 3)
        throw DomainError("dimension must be at least 2");
    ProjectivePoint p{u.coeffs};
    p.coords[0] = -p.coords[0];
    return p;
}

HyperplaneForm polar(const ProjectivePoint& p) {
    if (p.coords.size() < 3)
        throw DomainError("dimension must be at least 2");
    HyperplaneForm u{p.coords};
    u.coeffs[0] = -u.coeffs[0];
    return u;
}

PointClass classify(const ProjectivePoint& p, const real& tol) {
    real scale = euclid_norm2(p.coords);
    if (scale == 0)
        throw DomainError("cannot classify the zero vector");
    real b = bform(p, p);
    if (b < -tol * scale)
        return PointClass::Proper;
    if (b > tol * scale)
        return PointClass::Outer;
    return PointClass::Ideal;
}

real distance(const ProjectivePoint& x, const ProjectivePoint& y, const real& tol) {
    if (classify(x, tol) != PointClass::Proper || classify(y, tol) != PointClass::Proper)
        throw DomainError("distance requires proper points");
    real xx = bform(x, x);
    real yy = bform(y, y);
    real xy = bform(x, y);
    // A representative may carry either sign, so the chart-independent
    // cosine is |<x,y>| / sqrt(<x,x><y,y>).
    real c = abs(xy) / sqrt(xx * yy);
    if (c < 1) {
        if (c < 1 - tol)
            throw DomainError("distance argument below 1");
        c = 1;
    }
    return acosh(c);
}

ProjectivePoint foot(const ProjectivePoint& x, const HyperplaneForm& u, const real& tol) {
    ProjectivePoint p = pole(u);
    real pp = bform(p, p);
    if (abs(pp) <= tol * euclid_norm2(p.coords))
        throw DomainError("degenerate hyperplane: lightlike pole");
    real lambda = evaluate(u, x) / pp;
    ProjectivePoint f{x.coords};
    for (std::size_t k = 0; k < f.coords.size(); ++k)
        f.coords[k] -= lambda * p.coords[k];
    if (classify(f, tol) != PointClass::Proper)
        throw DomainError("foot of the point is not proper");
    return f;
}

ProjectivePoint affine(const ProjectivePoint& p) {
    if (p.coords[0] == 0)
        throw DomainError("point at infinity of the affine chart");
    ProjectivePoint q{p.coords};
    for (real& c : q.coords)
        c /= p.coords[0];
    return q;
}

GramMatrix gram(const std::vector<HyperplaneForm>& forms) {
    std::size_t m = forms.size();
    if (m == 0)
        throw DomainError("empty form list");
    std::vector<ProjectivePoint> poles;
    poles.reserve(m);
    for (const auto& u : forms)
        poles.push_back(pole(u));

    std::vector<real> norms(m);
    for (std::size_t i = 0; i < m; ++i) {
        real pp = bform(poles[i], poles[i]);
        if (pp <= 0)
            throw DomainError("hyperplane pole is not spacelike");
        norms[i] = sqrt(pp);
    }

    GramMatrix g;
    g.entries.assign(m, std::vector<real>(m, real(0)));
    for (std::size_t i = 0; i < m; ++i) {
        g.entries[i][i] = 1;
        for (std::size_t j = i + 1; j < m; ++j) {
            real v = bform(poles[i], poles[j]) / (norms[i] * norms[j]);
            g.entries[i][j] = v;
            g.entries[j][i] = v;
        }
    }
    return g;
}

real diagram_cosine(int weight) {
    if (weight == weight_infinity)
        return real(-1);
    if (weight < 2)
        throw DomainError("diagram weight must be at least 2");
    if (weight == 2)
        return real(0);
    return -cos(boost::math::constants::pi<real>() / weight);
}

std::array<int, 3> signature(const GramMatrix& g, const real& tol) {
    std::vector<real> eig = symmetric_eigenvalues(g.entries);
    real top = 0;
    for (const real& e : eig)
        top = (std::max)(top, abs(e));
    real cut = tol * top;
    std::array<int, 3> s{0, 0, 0};
    for (const real& e : eig) {
        if (e > cut)
            ++s[0];
        else if (e < -cut)
            ++s[1];
        else
            ++s[2];
    }
    return s;
}

real determinant(std::vector<std::vector<real>> a) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw DomainError("determinant of a non-square matrix");
    real det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > abs(a[pivot][col]))
                pivot = r;
        if (a[pivot][col] == 0)
            return real(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            real f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

void symmetric_eigen(std::vector<std::vector<real>> a,
                     std::vector<real>& values,
                     std::vector<std::vector<real>>& vectors) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw DomainError("eigendecomposition of a non-square matrix");

    vectors.assign(n, std::vector<real>(n, real(0)));
    for (std::size_t i = 0; i < n; ++i)
        vectors[i][i] = 1;

    // Cyclic Jacobi sweeps; quadratic convergence makes ~60 sweeps ample at
    // any practical precision.
    real eps = pow(real(10), -static_cast<int>(precision()));
    for (int sweep = 0; sweep < 100; ++sweep) {
        real off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += a[i][j] * a[i][j];
        real scale = 0;
        for (std::size_t i = 0; i < n; ++i)
            scale += a[i][i] * a[i][i];
        if (off <= eps * eps * (scale + off + 1))
            break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0)
                    continue;
                real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                real t = 1 / (abs(theta) + sqrt(theta * theta + 1));
                if (theta < 0)
                    t = -t;
                real c = 1 / sqrt(t * t + 1);
                real s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    real akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    real apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    real vkp = vectors[k][p], vkq = vectors[k][q];
                    vectors[k][p] = c * vkp - s * vkq;
                    vectors[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = a[i][i];
}

std::vector<real> symmetric_eigenvalues(std::vector<std::vector<real>> a) {
    std::vector<real> values;
    std::vector<std::vector<real>> vectors;
    symmetric_eigen(std::move(a), values, vectors);
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace artifact::lorentz

#pragma once

#include <algorithm>
#include <vector>

#include "artifact/lorentz.hpp"
#include "artifact/real.hpp"

namespace embedding {

// Classical multidimensional scaling: recover coordinates from squared
// distances via the double-centered matrix, embed on the top k eigenpairs,
// and take the simplex volume of the points directly. An independent route
// to the same volume as the bordered determinant.
inline artifact::real mds_volume(const std::vector<std::vector<artifact::real>>& lengths,
                                 int k) {
    using artifact::real;
    int n = k + 1;
    std::vector<std::vector<real>> d2(n, std::vector<real>(n, real(0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            d2[a][b] = lengths[a][b] * lengths[a][b];

    std::vector<real> row_mean(n, real(0));
    real grand = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            row_mean[a] += d2[a][b];
        row_mean[a] /= n;
        grand += row_mean[a];
    }
    grand /= n;
    std::vector<std::vector<real>> bmat(n, std::vector<real>(n, real(0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            bmat[a][b] = -(d2[a][b] - row_mean[a] - row_mean[b] + grand) / 2;

    std::vector<real> values;
    std::vector<std::vector<real>> vectors;
    artifact::lorentz::symmetric_eigen(bmat, values, vectors);

    std::vector<int> idx(values.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
        idx[c] = static_cast<int>(c);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return values[a] > values[b]; });

    std::vector<std::vector<real>> x(n, std::vector<real>(k, real(0)));
    for (int c = 0; c < k; ++c) {
        real lam = values[idx[c]] < 0 ? real(0) : values[idx[c]];
        real s = sqrt(lam);
        for (int a = 0; a < n; ++a)
            x[a][c] = s * vectors[a][idx[c]];
    }

    std::vector<std::vector<real>> edges(k, std::vector<real>(k, real(0)));
    for (int a = 1; a < n; ++a)
        for (int c = 0; c < k; ++c)
            edges[a - 1][c] = x[a][c] - x[0][c];
    real fact = 1;
    for (int f = 2; f <= k; ++f)
        fact *= f;
    return abs(artifact::lorentz::determinant(edges)) / fact;
}

} // namespace embedding

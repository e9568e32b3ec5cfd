#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artifact/catalog.hpp"
#include "artifact/error.hpp"
#include "artifact/horoball.hpp"
#include "artifact/real.hpp"

namespace artifact::packing {

// One horoball per ideal vertex of a simplex, keyed by vertex index.
struct HoroballConfig {
    const catalog::CoxeterSimplex* simplex = nullptr;
    std::map<int, horoball::Horoball> balls;
};

HoroballConfig config_from_levels(const catalog::CoxeterSimplex& s,
                                  const std::map<int, real>& levels, const real& tol);
HoroballConfig config_from_s(const catalog::CoxeterSimplex& s,
                             const std::map<int, real>& s_values, const real& tol);

// Whether every ball stays on the inner side of the opposite facet and no
// two balls overlap along their shared edge. `pairs` lists each checked
// pair with its tangency flag.
struct PairStatus {
    int i = 0, j = 0;
    bool tangent = false;
};
struct Admissibility {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<PairStatus> pairs;
};
Admissibility check_admissible(const HoroballConfig& c, const real& tol);

// A fitted rational p/q for a piece's share of the packed volume.
struct Fraction {
    long long num = 0;
    long long den = 1;
    bool operator==(const Fraction&) const = default;
};
std::string to_string(const Fraction& f);

// Best rational approximation via continued-fraction convergents with
// denominator at most max_den; empty when none lands within resid_tol.
std::optional<Fraction> fit_fraction(const real& x, long long max_den, const real& resid_tol,
                                     real* residual = nullptr);

// Densities and per-ball data of one admissible configuration. `trace`
// is filled by the optimizer with its inflation steps (vertex, final s).
struct PackingReport {
    HoroballConfig config;
    std::map<int, real> piece_volumes;
    real density;
    std::map<int, std::optional<Fraction>> fractions;
    std::vector<std::pair<int, real>> trace;
};

// Piece volumes, their sum against the exact simplex volume, and fitted
// volume fractions. Throws InadmissibleError on a bad configuration.
PackingReport density(const HoroballConfig& c, const real& tol);

// Enumeration order of the candidate inflation sequences; the optimum must
// not depend on it.
enum class SearchOrder { Forward, Reverse };

// Maximal-density horoball configurations: each ideal vertex in turn is
// inflated to facet tangency, the remaining balls are grown to their
// admissibility bounds over every inflation order, and the best result per
// anchor is kept. Distinct extremal configurations are returned once each,
// in order of their first anchor.
struct OptimizeResult {
    std::vector<PackingReport> classes;
    real delta_opt;
};
OptimizeResult optimize(const catalog::CoxeterSimplex& s, const real& tol,
                        SearchOrder order = SearchOrder::Forward);

// Packed volume along the one-parameter slide between two extremal
// configurations: shrinking balls lose e^{-(n-1)x}, growing ones gain
// e^{(n-1)x}.
real transition_volume(const real& v_shrink, const real& v_grow, const real& x, int n);

// Density along the slide that shrinks the pivot ball from its largest
// extremal level t_hi to the next one t_lo, re-inflating the other balls
// at each step; x in [0, x_max], x_max = ln(t_hi/t_lo)/2. DomainError when
// the pivot has fewer than two extremal levels to move between.
struct DensityCurve {
    int pivot = 0;
    real x_max;
    std::vector<std::pair<real, real>> samples; // (x, density), grid+1 rows
    real interior_min_x;
    real interior_min_density;
};
DensityCurve sweep(const catalog::CoxeterSimplex& s, int pivot, int grid, const real& tol);

} // namespace artifact::packing

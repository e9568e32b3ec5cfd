#include "artifact/packing.hpp"

#include <algorithm>
#include <sstream>

namespace artifact::packing {

using horoball::Horoball;

namespace {

void require_ideal(const catalog::CoxeterSimplex& s, int v) {
    if (v < 0 || v > s.dimension)
        throw DomainError("vertex index out of range");
    if (!s.ideal[v])
        throw DomainError("vertex " + std::to_string(v) + " of " + s.witt + " is not ideal");
}

} // namespace

HoroballConfig config_from_levels(const catalog::CoxeterSimplex& s,
                                  const std::map<int, real>& levels, const real& tol) {
    if (levels.empty())
        throw DomainError("configuration needs at least one horoball");
    HoroballConfig c;
    c.simplex = &s;
    for (const auto& [v, t] : levels) {
        require_ideal(s, v);
        if (t <= 0)
            throw DomainError("horoball level at vertex " + std::to_string(v) +
                              " must be positive");
        Horoball b;
        b.center = lorentz::affine(s.vertex(v));
        if (lorentz::classify(b.center, tol) != lorentz::PointClass::Ideal)
            throw DomainError("stored vertex is not ideal");
        b.t = t;
        c.balls.emplace(v, std::move(b));
    }
    return c;
}

HoroballConfig config_from_s(const catalog::CoxeterSimplex& s,
                             const std::map<int, real>& s_values, const real& tol) {
    std::map<int, real> levels;
    for (const auto& [v, sv] : s_values)
        levels.emplace(v, horoball::s_to_t(sv));
    return config_from_levels(s, levels, tol);
}

Admissibility check_admissible(const HoroballConfig& c, const real& tol) {
    if (!c.simplex || c.balls.empty())
        throw DomainError("empty horoball configuration");
    const catalog::CoxeterSimplex& s = *c.simplex;
    Admissibility result;

    for (const auto& [v, b] : c.balls) {
        lorentz::ProjectivePoint f = lorentz::foot(s.vertex(v), s.form(v), tol);
        if (horoball::membership(b, f, tol) == horoball::Membership::Inside) {
            result.ok = false;
            std::ostringstream msg;
            msg << "horoball at vertex " << v << " crosses facet " << v << " (level "
                << to_decimal(b.t, 12) << " above tangency "
                << to_decimal(horoball::level_at(b.center, lorentz::affine(f)), 12) << ")";
            result.violations.push_back(msg.str());
        }
    }

    for (auto it = c.balls.begin(); it != c.balls.end(); ++it) {
        for (auto jt = std::next(it); jt != c.balls.end(); ++jt) {
            int i = it->first, j = jt->first;
            // Boundary crossings along edge ij, parameterized from each
            // end; the balls are disjoint exactly when u_i * u_j >= 1.
            real ui = horoball::edge_intersection_parameter(it->second, s.vertex(j), tol);
            real uj = horoball::edge_intersection_parameter(jt->second, s.vertex(i), tol);
            real prod = ui * uj;
            PairStatus st;
            st.i = i;
            st.j = j;
            if (prod < 1 - tol) {
                result.ok = false;
                std::ostringstream msg;
                msg << "horoballs at vertices " << i << " and " << j
                    << " overlap along their edge (separation product "
                    << to_decimal(prod, 12) << ")";
                result.violations.push_back(msg.str());
            } else {
                lorentz::ProjectivePoint pi =
                    horoball::edge_intersection(it->second, s.vertex(j), tol);
                lorentz::ProjectivePoint pj =
                    horoball::edge_intersection(jt->second, s.vertex(i), tol);
                real gap = lorentz::distance(pi, pj, tol);
                st.tangent = gap < real("1e-9");
            }
            result.pairs.push_back(st);
        }
    }
    return result;
}

std::string to_string(const Fraction& f) {
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

std::optional<Fraction> fit_fraction(const real& x, long long max_den, const real& resid_tol,
                                     real* residual) {
    if (max_den < 1)
        throw DomainError("denominator bound must be positive");
    if (x < 0)
        throw DomainError("fraction fitting expects a nonnegative value");

    // Continued-fraction convergents p/q of x until the denominator bound.
    long long p_prev = 1, q_prev = 0;
    long long p = static_cast<long long>(floor(x));
    long long q = 1;
    real frac = x - floor(x);
    for (int round = 0; round < 64 && frac > 0; ++round) {
        real inv = 1 / frac;
        real fl = floor(inv);
        if (fl > real(1000000000))
            break; // effectively exact already
        long long a = static_cast<long long>(fl);
        long long p_next = a * p + p_prev;
        long long q_next = a * q + q_prev;
        if (q_next > max_den)
            break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        frac = inv - fl;
    }

    real resid = abs(x - real(p) / q);
    if (residual)
        *residual = resid;
    if (resid > resid_tol)
        return std::nullopt;
    return Fraction{p, q};
}

PackingReport density(const HoroballConfig& c, const real& tol) {
    Admissibility adm = check_admissible(c, tol);
    if (!adm.ok)
        throw InadmissibleError(adm.violations);

    const catalog::CoxeterSimplex& s = *c.simplex;
    PackingReport report;
    report.config = c;

    real total = 0;
    for (const auto& [v, b] : c.balls) {
        real piece = horoball::piece_volume(s, v, b, tol);
        report.piece_volumes.emplace(v, piece);
        total += piece;
    }
    report.density = total / catalog::exact_volume(s);

    for (const auto& [v, piece] : report.piece_volumes)
        report.fractions.emplace(v, fit_fraction(piece / total, 320, real("1e-6")));
    return report;
}

namespace {

// Piece volumes keyed by (vertex, level) so repeated inflation orders that
// settle on the same configuration are priced once.
using PieceCache = std::map<std::pair<int, std::string>, real>;

std::string level_key(const real& t) { return to_decimal(t, 40); }

real cached_piece(const catalog::CoxeterSimplex& s, int v, const real& t, const real& tol,
                  PieceCache& cache) {
    auto key = std::make_pair(v, level_key(t));
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    Horoball b;
    b.center = lorentz::affine(s.vertex(v));
    b.t = t;
    real piece = horoball::piece_volume(s, v, b, tol);
    cache.emplace(std::move(key), piece);
    return piece;
}

struct GreedyOutcome {
    std::map<int, real> levels;
    std::vector<std::pair<int, real>> trace;
    real total;
    std::string key;
};

std::string config_key(const std::map<int, real>& levels) {
    std::string key;
    for (const auto& [v, t] : levels) {
        key += std::to_string(v);
        key += '=';
        key += level_key(t);
        key += ';';
    }
    return key;
}

// Grows each ball of `order` in turn to the largest level admitted by its
// facet and the balls already placed, then repeats until the levels stop
// moving. The anchor's level stays pinned throughout.
std::map<int, real> greedy_levels(const catalog::CoxeterSimplex& s, int anchor,
                                  const real& t_anchor, const std::vector<int>& order,
                                  const std::map<int, real>& t_tan, const real& tol) {
    std::map<int, real> levels;
    levels.emplace(anchor, t_anchor);

    for (int pass = 0; pass < 200; ++pass) {
        bool moved = false;
        for (int v : order) {
            real t_new = t_tan.at(v);
            for (const auto& [w, tw] : levels) {
                if (w == v)
                    continue;
                Horoball bw;
                bw.center = lorentz::affine(s.vertex(w));
                bw.t = tw;
                real t_mut = horoball::mutual_tangent_horoball(s, w, bw, v, tol).t;
                t_new = (std::min)(t_new, t_mut);
            }
            auto it = levels.find(v);
            if (it == levels.end()) {
                levels.emplace(v, t_new);
                moved = true;
            } else {
                if (abs(t_new - it->second) > real("1e-12") * t_new)
                    moved = true;
                it->second = t_new;
            }
        }
        if (!moved)
            return levels;
    }
    throw ConvergenceError("horoball inflation failed to reach a fixed point");
}

// Best configuration over every inflation order of the free vertices, with
// the anchor pinned at t_anchor. Ties in packed volume break toward the
// lexicographically smaller configuration key, so the enumeration order
// cannot influence the result.
GreedyOutcome best_greedy(const catalog::CoxeterSimplex& s, int anchor, const real& t_anchor,
                          const std::map<int, real>& t_tan, const real& tol, SearchOrder order,
                          PieceCache& cache) {
    std::vector<int> free;
    for (const auto& [v, t] : t_tan)
        if (v != anchor)
            free.push_back(v);
    std::sort(free.begin(), free.end());

    std::vector<std::vector<int>> orders;
    if (free.empty()) {
        orders.push_back({});
    } else {
        std::vector<int> perm = free;
        do {
            orders.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (order == SearchOrder::Reverse)
        std::reverse(orders.begin(), orders.end());

    struct Candidate {
        std::map<int, real> levels;
        const std::vector<int>* perm = nullptr;
        real total;
        std::string key;
    };
    std::vector<Candidate> candidates;
    for (const auto& perm : orders) {
        Candidate c;
        c.levels = greedy_levels(s, anchor, t_anchor, perm, t_tan, tol);
        c.key = config_key(c.levels);
        c.perm = &perm;
        c.total = 0;
        for (const auto& [v, t] : c.levels)
            c.total += cached_piece(s, v, t, tol, cache);
        candidates.push_back(std::move(c));
    }

    // The winner is the largest packed volume; within the numeric noise
    // margin the lexicographically smallest configuration key decides, so
    // the enumeration order cannot influence the result.
    real top = candidates.front().total;
    for (const Candidate& c : candidates)
        top = (std::max)(top, c.total);
    const Candidate* winner = nullptr;
    real margin = real("1e-20") * top;
    for (const Candidate& c : candidates)
        if (c.total >= top - margin && (!winner || c.key < winner->key))
            winner = &c;

    GreedyOutcome outcome;
    outcome.levels = winner->levels;
    outcome.total = winner->total;
    outcome.key = winner->key;
    outcome.trace.emplace_back(anchor, horoball::t_to_s(winner->levels.at(anchor)));
    for (int v : *winner->perm)
        outcome.trace.emplace_back(v, horoball::t_to_s(winner->levels.at(v)));
    return outcome;
}

std::map<int, real> facet_tangency_levels(const catalog::CoxeterSimplex& s, const real& tol) {
    std::map<int, real> t_tan;
    for (int v : s.ideal_vertices())
        t_tan.emplace(v, horoball::facet_tangent_horoball(s, v, tol).t);
    return t_tan;
}

} // namespace

OptimizeResult optimize(const catalog::CoxeterSimplex& s, const real& tol, SearchOrder order) {
    std::vector<int> ideals = s.ideal_vertices();
    if (ideals.empty())
        throw DomainError("simplex " + s.witt + " has no ideal vertex");

    std::map<int, real> t_tan = facet_tangency_levels(s, tol);
    PieceCache cache;

    OptimizeResult result;
    auto already_kept = [&](const std::map<int, real>& levels) {
        for (const PackingReport& kept : result.classes) {
            bool same = kept.config.balls.size() == levels.size();
            for (const auto& [v, t] : levels) {
                auto it = kept.config.balls.find(v);
                if (it == kept.config.balls.end() ||
                    abs(it->second.t - t) > real("1e-20") * t) {
                    same = false;
                    break;
                }
            }
            if (same)
                return true;
        }
        return false;
    };
    for (int anchor : ideals) {
        GreedyOutcome outcome =
            best_greedy(s, anchor, t_tan.at(anchor), t_tan, tol, order, cache);
        if (already_kept(outcome.levels))
            continue;
        PackingReport report = density(config_from_levels(s, outcome.levels, tol), tol);
        report.trace = std::move(outcome.trace);
        result.classes.push_back(std::move(report));
    }

    result.delta_opt = 0;
    for (const PackingReport& r : result.classes)
        result.delta_opt = (std::max)(result.delta_opt, r.density);
    return result;
}

real transition_volume(const real& v_shrink, const real& v_grow, const real& x, int n) {
    if (n < 2)
        throw DomainError("dimension must be at least 2");
    if (v_shrink <= 0 || v_grow <= 0)
        throw DomainError("transition volumes must be positive");
    return v_shrink * exp(-(n - 1) * x) + v_grow * exp((n - 1) * x);
}

DensityCurve sweep(const catalog::CoxeterSimplex& s, int pivot, int grid, const real& tol) {
    require_ideal(s, pivot);
    if (grid < 1)
        throw DomainError("sweep grid must be positive");

    OptimizeResult opt = optimize(s, tol);

    // Distinct extremal levels of the pivot, largest first.
    std::vector<real> levels;
    for (const PackingReport& r : opt.classes) {
        real t = r.config.balls.at(pivot).t;
        bool known = false;
        for (const real& u : levels)
            if (abs(u - t) <= real("1e-12") * t)
                known = true;
        if (!known)
            levels.push_back(t);
    }
    std::sort(levels.begin(), levels.end(), std::greater<real>());
    if (levels.size() < 2)
        throw DomainError("pivot vertex " + std::to_string(pivot) +
                          " admits a single extremal level, nothing to sweep");

    real t_hi = levels[0];
    real t_lo = levels[1];

    DensityCurve curve;
    curve.pivot = pivot;
    curve.x_max = log(t_hi / t_lo) / 2;

    std::map<int, real> t_tan = facet_tangency_levels(s, tol);
    PieceCache cache;
    real vol = catalog::exact_volume(s);

    for (int k = 0; k <= grid; ++k) {
        real x = curve.x_max * k / grid;
        real t_pivot = t_hi * exp(-2 * x);
        GreedyOutcome outcome =
            best_greedy(s, pivot, t_pivot, t_tan, tol, SearchOrder::Forward, cache);
        real delta = outcome.total / vol;
        curve.samples.emplace_back(x, delta);
        if (k == 0 || delta < curve.interior_min_density) {
            curve.interior_min_x = x;
            curve.interior_min_density = delta;
        }
    }
    return curve;
}

} // namespace artifact::packing

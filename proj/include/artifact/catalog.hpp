#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "artifact/algexpr.hpp"
#include "artifact/error.hpp"
#include "artifact/lorentz.hpp"
#include "artifact/real.hpp"

namespace artifact::catalog {

// Exact volume of a simplex, as a closed form when one is known.
struct VolumeDescriptor {
    enum class Kind {
        ZetaMultiple,      // q * zeta(3)
        DirichletMultiple, // q * d^(s/2) * L(s, d), L the Legendre-character series
        NumericLiteral,    // decimal text, no closed form available
    };
    Kind kind = Kind::ZetaMultiple;
    algexpr::Integer num = 0, den = 1; // the rational q
    int order = 3;                     // s for DirichletMultiple
    int modulus = 5;                   // d for DirichletMultiple
    std::string literal;               // NumericLiteral only

    bool operator==(const VolumeDescriptor&) const = default;
};

// An n-simplex in the projective model, given by vertex coordinates and the
// supporting hyperplane form of each facet. Facet i is the one opposite
// vertex i, and forms are oriented so u_i is positive on vertex i.
// Coordinate entries are kept as expressions so they can be evaluated
// exactly at any precision.
struct CoxeterSimplex {
    std::string witt;           // short ASCII name, e.g. "U5"
    std::string coxeter_symbol; // display form, e.g. "[3,3,3,4,3]"
    int dimension = 0;
    std::vector<std::vector<algexpr::Expr>> vertex_exprs;
    std::vector<bool> ideal;
    std::vector<std::vector<algexpr::Expr>> form_exprs;
    std::vector<lorentz::DiagramEdge> diagram;
    std::optional<VolumeDescriptor> volume;

    int size() const { return dimension + 1; }
    int ideal_count() const;
    std::vector<int> ideal_vertices() const;

    // Evaluated at the current precision; cached per precision.
    const lorentz::ProjectivePoint& vertex(int i) const;
    const lorentz::HyperplaneForm& form(int i) const;

private:
    struct Evaluated {
        std::vector<lorentz::ProjectivePoint> vertices;
        std::vector<lorentz::HyperplaneForm> forms;
    };
    const Evaluated& evaluated() const;
    mutable std::map<unsigned, Evaluated> cache_;
    mutable std::mutex cache_mutex_;

public:
    CoxeterSimplex() = default;
    CoxeterSimplex(const CoxeterSimplex& other);
    CoxeterSimplex& operator=(const CoxeterSimplex& other);
};

// The built-in table of the twelve asymptotic Coxeter simplices in H^5,
// keyed by Witt symbol.
const std::vector<std::string>& witt_symbols();
bool has_builtin(const std::string& witt);
const CoxeterSimplex& builtin(const std::string& witt);

// Plain-text file format, one entry per line:
//   witt <symbol>
//   dim <n>
//   vertex <e_0> ... <e_n> [ideal]     (n+1 lines, entries are expressions)
//   form <e_0> ... <e_n>               (n+1 lines)
//   diagram <i>-<j>:<k> ...            (unlisted pairs have weight 2,
//                                       'inf' marks parallel planes)
//   volume zeta3 <p>/<q>               (optional, one of three shapes)
//   volume L <s> <d> <p>/<q>
//   volume literal <decimal>
// '#' starts a comment; blank lines are ignored. Entries containing spaces
// may be double-quoted. load performs syntax checks only; call verify for
// the geometric ones.
CoxeterSimplex load(std::istream& in);
CoxeterSimplex load_file(const std::string& path);
std::string serialize(const CoxeterSimplex& s);

struct CheckResult {
    std::string name;
    bool pass = false;
    real residual;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool pass() const;
};

// Geometric consistency of the stored data: vertex classification against
// the ideal flags, incidence of each vertex with the opposite facets,
// Gram matrix against the diagram (including sign conditions), and the
// Lorentzian signature. Failures are report entries, not exceptions.
VerificationReport verify(const CoxeterSimplex& s, const real& tol);

// Series evaluated with an explicit bound on the truncation error.
struct SeriesValue {
    real value;
    real tail_bound;
    unsigned long terms = 0;
};

// Riemann zeta(k) for integer k >= 2, Euler-Maclaurin accelerated;
// terms == 0 picks enough terms for the current precision.
SeriesValue zeta_eval(int k, unsigned long terms = 0);
real zeta(int k);

// Hurwitz zeta(s, a) for integer s >= 2 and rational a = anum/aden in (0, 1].
SeriesValue hurwitz_zeta_eval(int s, long anum, long aden, unsigned long terms = 0);

// Dirichlet L(s, chi_d) for the Legendre symbol character mod an odd prime d.
SeriesValue dirichlet_L_eval(int s, int d, unsigned long terms = 0);
real dirichlet_L(int s, int d);

// Legendre symbol (a | d) in {-1, 0, 1} for odd prime d.
int legendre_symbol(long a, long d);

// Numeric value of the stored volume descriptor.
real exact_volume(const CoxeterSimplex& s);
real volume_value(const VolumeDescriptor& v);

// Human-readable form, e.g. "7*zeta(3)/46080".
std::string volume_expression(const VolumeDescriptor& v);

} // namespace artifact::catalog

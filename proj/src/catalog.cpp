#include "artifact/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace artifact::catalog {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

int CoxeterSimplex::ideal_count() const {
    return static_cast<int>(std::count(ideal.begin(), ideal.end(), true));
}

std::vector<int> CoxeterSimplex::ideal_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(ideal.size()); ++i)
        if (ideal[i])
            out.push_back(i);
    return out;
}

CoxeterSimplex::CoxeterSimplex(const CoxeterSimplex& other)
    : witt(other.witt),
      coxeter_symbol(other.coxeter_symbol),
      dimension(other.dimension),
      vertex_exprs(other.vertex_exprs),
      ideal(other.ideal),
      form_exprs(other.form_exprs),
      diagram(other.diagram),
      volume(other.volume) {}

CoxeterSimplex& CoxeterSimplex::operator=(const CoxeterSimplex& other) {
    if (this != &other) {
        witt = other.witt;
        coxeter_symbol = other.coxeter_symbol;
        dimension = other.dimension;
        vertex_exprs = other.vertex_exprs;
        ideal = other.ideal;
        form_exprs = other.form_exprs;
        diagram = other.diagram;
        volume = other.volume;
        std::lock_guard lock(cache_mutex_);
        cache_.clear();
    }
    return *this;
}

const CoxeterSimplex::Evaluated& CoxeterSimplex::evaluated() const {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(precision());
    if (it == cache_.end()) {
        // Built aside and inserted only when complete, so a failing
        // expression cannot leave a half-filled entry behind.
        Evaluated ev;
        ev.vertices.reserve(vertex_exprs.size());
        for (const auto& row : vertex_exprs) {
            lorentz::ProjectivePoint p;
            p.coords.reserve(row.size());
            for (const auto& e : row)
                p.coords.push_back(algexpr::eval(e));
            ev.vertices.push_back(std::move(p));
        }
        ev.forms.reserve(form_exprs.size());
        for (const auto& row : form_exprs) {
            lorentz::HyperplaneForm u;
            u.coeffs.reserve(row.size());
            for (const auto& e : row)
                u.coeffs.push_back(algexpr::eval(e));
            ev.forms.push_back(std::move(u));
        }
        it = cache_.emplace(precision(), std::move(ev)).first;
    }
    return it->second;
}

const lorentz::ProjectivePoint& CoxeterSimplex::vertex(int i) const {
    if (i < 0 || i > dimension)
        throw DomainError("vertex index out of range");
    return evaluated().vertices[i];
}

const lorentz::HyperplaneForm& CoxeterSimplex::form(int i) const {
    if (i < 0 || i > dimension)
        throw DomainError("facet index out of range");
    return evaluated().forms[i];
}

namespace {

// Splits a line into tokens. Double quotes group spaces into one token;
// an unquoted '#' ends the line.
std::vector<std::string> tokenize(const std::string& line, std::size_t lineno) {
    std::vector<std::string> out;
    std::string cur;
    bool in_token = false, in_quote = false;
    for (char c : line) {
        if (in_quote) {
            if (c == '"') {
                in_quote = false;
            } else {
                cur += c;
            }
            continue;
        }
        if (c == '"') {
            in_quote = true;
            in_token = true;
            continue;
        }
        if (c == '#')
            break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (in_token) {
                out.push_back(cur);
                cur.clear();
                in_token = false;
            }
            continue;
        }
        cur += c;
        in_token = true;
    }
    if (in_quote)
        throw FormatError("unterminated quote", lineno);
    if (in_token)
        out.push_back(cur);
    return out;
}

long parse_long(const std::string& tok, const char* what, std::size_t lineno) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw FormatError(std::string("invalid ") + what + " '" + tok + "'", lineno);
    }
}

cpp_int parse_bigint(const std::string& tok, std::size_t lineno) {
    if (tok.empty() || tok.find_first_not_of("0123456789-") != std::string::npos)
        throw FormatError("invalid integer '" + tok + "'", lineno);
    return cpp_int(tok);
}

void parse_rational(const std::string& tok, cpp_int& num, cpp_int& den, std::size_t lineno) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
        num = parse_bigint(tok, lineno);
        den = 1;
    } else {
        num = parse_bigint(tok.substr(0, slash), lineno);
        den = parse_bigint(tok.substr(slash + 1), lineno);
    }
    if (den <= 0)
        throw FormatError("rational denominator must be positive in '" + tok + "'", lineno);
}

std::vector<algexpr::Expr> parse_entries(const std::vector<std::string>& toks,
                                         std::size_t first, std::size_t count,
                                         const char* what, std::size_t lineno) {
    std::vector<algexpr::Expr> row;
    row.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        try {
            row.push_back(algexpr::parse(toks[first + k]));
        } catch (const algexpr::ParseError& e) {
            std::ostringstream msg;
            msg << what << " entry " << k << " ('" << toks[first + k] << "', offset " << e.where
                << "): " << e.what();
            throw FormatError(msg.str(), lineno);
        }
    }
    return row;
}

lorentz::DiagramEdge parse_edge(const std::string& tok, int n, std::size_t lineno) {
    auto dash = tok.find('-');
    auto colon = tok.find(':');
    if (dash == std::string::npos || colon == std::string::npos || colon < dash)
        throw FormatError("malformed diagram edge '" + tok + "' (want i-j:k)", lineno);
    lorentz::DiagramEdge e;
    e.i = static_cast<int>(parse_long(tok.substr(0, dash), "diagram index", lineno));
    e.j = static_cast<int>(parse_long(tok.substr(dash + 1, colon - dash - 1), "diagram index",
                                      lineno));
    std::string w = tok.substr(colon + 1);
    if (w == "inf") {
        e.weight = lorentz::weight_infinity;
    } else {
        long k = parse_long(w, "diagram weight", lineno);
        if (k < 2)
            throw FormatError("diagram weight must be at least 2 in '" + tok + "'", lineno);
        e.weight = static_cast<int>(k);
    }
    if (e.i < 0 || e.i > n || e.j < 0 || e.j > n || e.i == e.j)
        throw FormatError("diagram edge '" + tok + "' out of range", lineno);
    if (e.i > e.j)
        std::swap(e.i, e.j);
    return e;
}

} // namespace

CoxeterSimplex load(std::istream& in) {
    CoxeterSimplex s;
    s.dimension = -1;
    bool have_witt = false, have_diagram = false;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = tokenize(line, lineno);
        if (toks.empty())
            continue;
        const std::string& key = toks[0];

        if (key == "witt") {
            if (toks.size() != 2)
                throw FormatError("witt line wants exactly one symbol", lineno);
            s.witt = toks[1];
            have_witt = true;
        } else if (key == "dim") {
            if (toks.size() != 2)
                throw FormatError("dim line wants exactly one integer", lineno);
            long n = parse_long(toks[1], "dimension", lineno);
            if (n < 2)
                throw FormatError("dimension must be at least 2", lineno);
            s.dimension = static_cast<int>(n);
        } else if (key == "vertex") {
            if (s.dimension < 0)
                throw FormatError("dim must precede vertex lines", lineno);
            std::size_t n1 = static_cast<std::size_t>(s.dimension) + 1;
            bool is_ideal = toks.size() == n1 + 2 && toks.back() == "ideal";
            if (toks.size() != n1 + 1 && !is_ideal) {
                std::ostringstream msg;
                msg << "vertex line has " << toks.size() - 1 << " entries, expected " << n1
                    << " (optionally followed by 'ideal')";
                throw FormatError(msg.str(), lineno);
            }
            if (s.vertex_exprs.size() == n1)
                throw FormatError("too many vertex lines", lineno);
            s.vertex_exprs.push_back(parse_entries(toks, 1, n1, "vertex", lineno));
            s.ideal.push_back(is_ideal);
        } else if (key == "form") {
            if (s.dimension < 0)
                throw FormatError("dim must precede form lines", lineno);
            std::size_t n1 = static_cast<std::size_t>(s.dimension) + 1;
            if (toks.size() != n1 + 1) {
                std::ostringstream msg;
                msg << "form line has " << toks.size() - 1 << " entries, expected " << n1;
                throw FormatError(msg.str(), lineno);
            }
            if (s.form_exprs.size() == n1)
                throw FormatError("too many form lines", lineno);
            s.form_exprs.push_back(parse_entries(toks, 1, n1, "form", lineno));
        } else if (key == "diagram") {
            if (s.dimension < 0)
                throw FormatError("dim must precede the diagram line", lineno);
            if (have_diagram)
                throw FormatError("duplicate diagram line", lineno);
            have_diagram = true;
            for (std::size_t k = 1; k < toks.size(); ++k) {
                lorentz::DiagramEdge e = parse_edge(toks[k], s.dimension, lineno);
                for (const auto& prev : s.diagram)
                    if (prev.i == e.i && prev.j == e.j)
                        throw FormatError("duplicate diagram edge '" + toks[k] + "'", lineno);
                if (e.weight != 2)
                    s.diagram.push_back(e);
            }
        } else if (key == "volume") {
            if (s.volume)
                throw FormatError("duplicate volume line", lineno);
            VolumeDescriptor v;
            if (toks.size() == 3 && toks[1] == "zeta3") {
                v.kind = VolumeDescriptor::Kind::ZetaMultiple;
                parse_rational(toks[2], v.num, v.den, lineno);
            } else if (toks.size() == 5 && toks[1] == "L") {
                v.kind = VolumeDescriptor::Kind::DirichletMultiple;
                v.order = static_cast<int>(parse_long(toks[2], "L-function order", lineno));
                v.modulus = static_cast<int>(parse_long(toks[3], "L-function modulus", lineno));
                parse_rational(toks[4], v.num, v.den, lineno);
            } else if (toks.size() == 3 && toks[1] == "literal") {
                v.kind = VolumeDescriptor::Kind::NumericLiteral;
                v.literal = toks[2];
                try {
                    real probe(v.literal);
                    (void)probe;
                } catch (const std::exception&) {
                    throw FormatError("invalid volume literal '" + v.literal + "'", lineno);
                }
            } else {
                throw FormatError(
                    "volume line wants 'zeta3 p/q', 'L s d p/q', or 'literal x'", lineno);
            }
            s.volume = v;
        } else {
            throw FormatError("unknown keyword '" + key + "'", lineno);
        }
    }

    if (!have_witt)
        throw FormatError("missing witt line", lineno);
    if (s.dimension < 0)
        throw FormatError("missing dim line", lineno);
    std::size_t n1 = static_cast<std::size_t>(s.dimension) + 1;
    if (s.vertex_exprs.size() != n1) {
        std::ostringstream msg;
        msg << "found " << s.vertex_exprs.size() << " vertex lines, expected " << n1;
        throw FormatError(msg.str(), lineno);
    }
    if (s.form_exprs.size() != n1) {
        std::ostringstream msg;
        msg << "found " << s.form_exprs.size() << " form lines, expected " << n1;
        throw FormatError(msg.str(), lineno);
    }
    if (!have_diagram)
        throw FormatError("missing diagram line", lineno);
    std::sort(s.diagram.begin(), s.diagram.end(), [](const auto& a, const auto& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    return s;
}

CoxeterSimplex load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw NotFoundError("cannot open catalog file '" + path + "'");
    return load(in);
}

std::string serialize(const CoxeterSimplex& s) {
    std::ostringstream out;
    out << "witt " << s.witt << "\n";
    out << "dim " << s.dimension << "\n";
    for (std::size_t i = 0; i < s.vertex_exprs.size(); ++i) {
        out << "vertex";
        for (const auto& e : s.vertex_exprs[i])
            out << ' ' << algexpr::render(e);
        if (s.ideal[i])
            out << " ideal";
        out << "\n";
    }
    for (const auto& row : s.form_exprs) {
        out << "form";
        for (const auto& e : row)
            out << ' ' << algexpr::render(e);
        out << "\n";
    }
    out << "diagram";
    for (const auto& e : s.diagram) {
        out << ' ' << e.i << '-' << e.j << ':';
        if (e.weight == lorentz::weight_infinity)
            out << "inf";
        else
            out << e.weight;
    }
    out << "\n";
    if (s.volume) {
        const VolumeDescriptor& v = *s.volume;
        switch (v.kind) {
        case VolumeDescriptor::Kind::ZetaMultiple:
            out << "volume zeta3 " << v.num << '/' << v.den << "\n";
            break;
        case VolumeDescriptor::Kind::DirichletMultiple:
            out << "volume L " << v.order << ' ' << v.modulus << ' ' << v.num << '/' << v.den
                << "\n";
            break;
        case VolumeDescriptor::Kind::NumericLiteral:
            out << "volume literal " << v.literal << "\n";
            break;
        }
    }
    return out.str();
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

real euclid_norm(const lorentz::Vec& v) {
    real s = 0;
    for (const real& c : v)
        s += c * c;
    return sqrt(s);
}

template <typename F>
void run_check(VerificationReport& report, const std::string& name, F&& body) {
    CheckResult r;
    r.name = name;
    r.residual = 0;
    try {
        body(r);
    } catch (const Error& e) {
        r.pass = false;
        r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
}

} // namespace

VerificationReport verify(const CoxeterSimplex& s, const real& tol) {
    VerificationReport report;
    int n = s.dimension;

    run_check(report, "classification", [&](CheckResult& r) {
        r.pass = true;
        for (int i = 0; i <= n; ++i) {
            const auto& p = s.vertex(i);
            real scale = 0;
            for (const real& c : p.coords)
                scale += c * c;
            real b = lorentz::bform(p, p);
            if (s.ideal[i])
                r.residual = (std::max)(r.residual, abs(b) / scale);
            lorentz::PointClass cls = lorentz::classify(p, tol);
            lorentz::PointClass want =
                s.ideal[i] ? lorentz::PointClass::Ideal : lorentz::PointClass::Proper;
            if (cls != want) {
                r.pass = false;
                if (r.detail.empty()) {
                    std::ostringstream msg;
                    msg << "vertex " << i << " is "
                        << (cls == lorentz::PointClass::Proper  ? "proper"
                            : cls == lorentz::PointClass::Ideal ? "ideal"
                                                                : "outer")
                        << " but flagged " << (s.ideal[i] ? "ideal" : "proper");
                    r.detail = msg.str();
                }
            }
        }
    });

    run_check(report, "incidence", [&](CheckResult& r) {
        for (int j = 0; j <= n; ++j) {
            const auto& u = s.form(j);
            real un = euclid_norm(u.coeffs);
            for (int i = 0; i <= n; ++i) {
                if (i == j)
                    continue;
                const auto& p = s.vertex(i);
                real resid = abs(lorentz::evaluate(u, p)) / (un * euclid_norm(p.coords));
                if (resid > r.residual) {
                    r.residual = resid;
                    std::ostringstream msg;
                    msg << "largest residual at form " << j << ", vertex " << i;
                    r.detail = msg.str();
                }
            }
        }
        r.pass = r.residual < tol;
    });

    auto all_forms = [&s, n]() {
        std::vector<lorentz::HyperplaneForm> forms;
        forms.reserve(n + 1);
        for (int i = 0; i <= n; ++i)
            forms.push_back(s.form(i));
        return forms;
    };

    run_check(report, "diagram", [&](CheckResult& r) {
        lorentz::GramMatrix g = lorentz::gram(all_forms());
        std::vector<std::vector<int>> weight(n + 1, std::vector<int>(n + 1, 2));
        for (const auto& e : s.diagram) {
            weight[e.i][e.j] = e.weight;
            weight[e.j][e.i] = e.weight;
        }
        for (int i = 0; i <= n; ++i) {
            real d = abs(g.entries[i][i] - 1);
            if (d > r.residual)
                r.residual = d;
            for (int j = i + 1; j <= n; ++j) {
                real want = lorentz::diagram_cosine(weight[i][j]);
                real have = g.entries[i][j];
                real diff = abs(have - want);
                if (diff > r.residual) {
                    r.residual = diff;
                    std::ostringstream msg;
                    msg << "largest deviation at pair (" << i << "," << j << "): entry "
                        << to_decimal(have, 8) << " vs diagram " << to_decimal(want, 8);
                    r.detail = msg.str();
                }
            }
        }
        r.pass = r.residual < tol;
    });

    run_check(report, "sign", [&](CheckResult& r) {
        lorentz::GramMatrix g = lorentz::gram(all_forms());
        r.pass = true;
        for (int i = 0; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if (g.entries[i][j] > r.residual) {
                    r.residual = g.entries[i][j];
                    std::ostringstream msg;
                    msg << "positive off-diagonal entry at (" << i << "," << j << ")";
                    r.detail = msg.str();
                }
            }
        }
        r.pass = r.residual <= tol;
    });

    run_check(report, "signature", [&](CheckResult& r) {
        lorentz::GramMatrix g = lorentz::gram(all_forms());
        auto sig = lorentz::signature(g, tol);
        std::ostringstream msg;
        msg << "(" << sig[0] << "," << sig[1] << "," << sig[2] << ")";
        r.detail = msg.str();
        r.pass = sig[0] == n && sig[1] == 1 && sig[2] == 0;
    });

    return report;
}

namespace {

cpp_rational bernoulli_number(std::size_t m) {
    static std::vector<cpp_rational> table{cpp_rational(1), cpp_rational(-1, 2)};
    static std::mutex mu;
    std::lock_guard lock(mu);
    while (table.size() <= m) {
        std::size_t k = table.size();
        // sum_{j=0}^{k} C(k+1, j) B_j = 0 solved for B_k
        cpp_rational acc = 0;
        cpp_int binom = 1;
        for (std::size_t j = 0; j < k; ++j) {
            acc += cpp_rational(binom) * table[j];
            binom = binom * cpp_int(k + 1 - j) / cpp_int(j + 1);
        }
        table.push_back(-acc / cpp_rational(binom));
    }
    return table[m];
}

real rational_to_real(const cpp_rational& q) {
    return real(numerator(q)) / real(denominator(q));
}

bool is_odd_prime(long d) {
    if (d < 3 || d % 2 == 0)
        return false;
    for (long f = 3; f * f <= d; f += 2)
        if (d % f == 0)
            return false;
    return true;
}

} // namespace

SeriesValue hurwitz_zeta_eval(int s, long anum, long aden, unsigned long terms) {
    if (s < 2)
        throw DomainError("zeta order must be an integer >= 2");
    if (aden < 1 || anum < 1 || anum > aden)
        throw DomainError("Hurwitz parameter must lie in (0, 1]");

    unsigned digits = precision();
    SeriesValue out;
    {
        PrecisionGuard guard(digits + 15);
        real a = real(anum) / aden;
        real target = pow(real(10), -static_cast<int>(digits + 5));
        unsigned long N = terms ? terms : (3UL * digits) / 2 + 10;

        for (int attempt = 0;; ++attempt) {
            real sum = 0;
            for (unsigned long k = 0; k < N; ++k)
                sum += pow(real(k) + a, -s);
            real na = real(N) + a;
            real value = sum + pow(na, 1 - s) / (s - 1) + pow(na, -s) / 2;

            // Euler-Maclaurin corrections:
            //   B_{2j}/(2j)! * s(s+1)...(s+2j-2) * (N+a)^(-s-2j+1),
            // an asymptotic series whose truncation error stays below the
            // first omitted term while the terms decrease.
            real rising = s;
            real power = pow(na, -s - 1);
            real na2 = na * na;
            cpp_int fact = 2; // (2j)! at j = 1
            real bound = -1;
            real prev_mag = -1;
            for (int j = 1; j <= 80; ++j) {
                real coeff = rational_to_real(bernoulli_number(2 * j)) / real(fact);
                real term = coeff * rising * power;
                real mag = abs(term);
                if (prev_mag >= 0 && mag >= prev_mag) {
                    bound = mag;
                    break;
                }
                value += term;
                prev_mag = mag;
                if (mag < target * (std::max)(real(1), abs(value))) {
                    bound = mag;
                    break;
                }
                rising *= (real(s) + (2 * j - 1)) * (real(s) + 2 * j);
                power /= na2;
                fact *= cpp_int(2 * j + 1) * cpp_int(2 * j + 2);
            }
            if (bound < 0)
                bound = prev_mag;

            if (bound <= target * (std::max)(real(1), abs(value)) || terms != 0 || attempt >= 3) {
                if (bound > target * (std::max)(real(1), abs(value)) && terms == 0)
                    throw ConvergenceError("zeta series failed to reach the requested precision");
                out.value = value;
                out.tail_bound = bound;
                out.terms = N;
                break;
            }
            N *= 2;
        }
    }
    out.value.precision(digits);
    out.tail_bound.precision(digits);
    return out;
}

SeriesValue zeta_eval(int k, unsigned long terms) { return hurwitz_zeta_eval(k, 1, 1, terms); }

real zeta(int k) { return zeta_eval(k).value; }

int legendre_symbol(long a, long d) {
    if (!is_odd_prime(d))
        throw DomainError("Legendre symbol modulus must be an odd prime");
    long r = a % d;
    if (r < 0)
        r += d;
    if (r == 0)
        return 0;
    // Euler's criterion: a^((d-1)/2) is 1 for residues, d-1 for nonresidues.
    cpp_int e = boost::multiprecision::powm(cpp_int(r), cpp_int((d - 1) / 2), cpp_int(d));
    return e == 1 ? 1 : -1;
}

SeriesValue dirichlet_L_eval(int s, int d, unsigned long terms) {
    if (s < 2)
        throw DomainError("L-function order must be an integer >= 2");
    if (!is_odd_prime(d))
        throw DomainError("L-function modulus must be an odd prime");

    unsigned digits = precision();
    SeriesValue out;
    {
        PrecisionGuard guard(digits + 10);
        real scale = pow(real(d), -s);
        real value = 0, bound = 0;
        unsigned long used = 0;
        for (int a = 1; a < d; ++a) {
            int chi = legendre_symbol(a, d);
            if (chi == 0)
                continue;
            SeriesValue h = hurwitz_zeta_eval(s, a, d, terms);
            value += chi * h.value;
            bound += h.tail_bound;
            used = (std::max)(used, h.terms);
        }
        out.value = scale * value;
        out.tail_bound = scale * bound;
        out.terms = used;
    }
    out.value.precision(digits);
    out.tail_bound.precision(digits);
    return out;
}

real dirichlet_L(int s, int d) { return dirichlet_L_eval(s, d).value; }

real volume_value(const VolumeDescriptor& v) {
    switch (v.kind) {
    case VolumeDescriptor::Kind::ZetaMultiple:
        return real(v.num) / real(v.den) * zeta(3);
    case VolumeDescriptor::Kind::DirichletMultiple:
        return real(v.num) / real(v.den) * pow(real(v.modulus), real(v.order) / 2) *
               dirichlet_L(v.order, v.modulus);
    case VolumeDescriptor::Kind::NumericLiteral:
        return real(v.literal);
    }
    throw Error("corrupt volume descriptor");
}

real exact_volume(const CoxeterSimplex& s) {
    if (!s.volume)
        throw DomainError("simplex '" + s.witt + "' has no stored volume");
    return volume_value(*s.volume);
}

std::string volume_expression(const VolumeDescriptor& v) {
    std::ostringstream out;
    switch (v.kind) {
    case VolumeDescriptor::Kind::ZetaMultiple:
        if (v.num != 1)
            out << v.num << '*';
        out << "zeta(3)";
        if (v.den != 1)
            out << '/' << v.den;
        return out.str();
    case VolumeDescriptor::Kind::DirichletMultiple:
        if (v.num != 1)
            out << v.num << '*';
        out << v.modulus << "^(" << v.order << "/2)*L(" << v.order << ',' << v.modulus << ')';
        if (v.den != 1)
            out << '/' << v.den;
        return out.str();
    case VolumeDescriptor::Kind::NumericLiteral:
        return v.literal;
    }
    throw Error("corrupt volume descriptor");
}

} // namespace artifact::catalog

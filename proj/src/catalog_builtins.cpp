#include "artifact/catalog.hpp"

#include <sstream>

namespace artifact::catalog {

namespace {

// The twelve asymptotic Coxeter simplices of H^5 with exact coordinates in
// the projective model. Each entry packs the vertex rows A_0..A_n, the
// facet forms u_0..u_n (u_i opposite A_i, positive on A_i), the diagram,
// and the exact volume when one is known.
struct BuiltinSpec {
    const char* witt;
    const char* symbol;
    const char* const* vertices;   // n+1 rows of n+1 expressions
    const unsigned* ideal;         // ideal vertex indices, terminated by ~0u
    const char* const* forms;      // n+1 rows of n+1 expressions
    const char* diagram;           // same token format as catalog files
    const char* volume;            // catalog volume line payload, or nullptr
};


const char* const u5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "0",
    "1", "1/2", "0", "0", "0", "0",
    "1", "1/2", "sqrt(3)/6", "0", "0", "0",
    "1", "1/2", "sqrt(3)/6", "sqrt(6)/12", "0", "0",
    "1", "1/2", "sqrt(3)/6", "sqrt(6)/12", "sqrt(2)/4", "0",
};

const char* const u5_forms[36] = {
    "0", "0", "0", "0", "0", "1",
    "1", "-2", "0", "0", "0", "-1",
    "0", "1/sqrt(3)", "-1", "0", "0", "0",
    "0", "0", "1/sqrt(2)", "-1", "0", "0",
    "0", "0", "0", "sqrt(3)", "-1", "0",
    "0", "0", "0", "0", "1", "0",
};

const unsigned u5_ideal[2] = {0, ~0u};


const char* const s5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "0",
    "1", "0", "0", "0", "1/sqrt(2)", "0",
    "1", "0", "0", "sqrt(6)/8", "3*sqrt(2)/8", "0",
    "1", "0", "sqrt(3)/6", "sqrt(6)/12", "sqrt(2)/4", "0",
    "1", "1/2", "sqrt(3)/6", "sqrt(6)/12", "sqrt(2)/4", "0",
};

const char* const s5_forms[36] = {
    "0", "0", "0", "0", "0", "1",
    "1", "0", "-2/sqrt(3)", "-sqrt(6)/3", "-sqrt(2)", "-1",
    "0", "0", "0", "-sqrt(3)", "1", "0",
    "0", "0", "-1/sqrt(2)", "1", "0", "0",
    "0", "-1/sqrt(3)", "1", "0", "0", "0",
    "0", "1", "0", "0", "0", "0",
};

const unsigned s5_ideal[2] = {0, ~0u};


const char* const q5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "0",
    "1", "0", "0", "0", "-1/2", "0",
    "1", "0", "0", "1/2", "-1/2", "0",
    "1", "0", "-1/2", "0", "-1/2", "0",
    "1", "-1/2", "0", "0", "-1/2", "0",
};

const char* const q5_forms[36] = {
    "0", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "2", "-1",
    "0", "1", "1", "-1", "-1", "0",
    "0", "0", "0", "1", "0", "0",
    "0", "0", "-1", "0", "0", "0",
    "0", "-1", "0", "0", "0", "0",
};

const unsigned q5_ideal[2] = {0, ~0u};


const char* const p5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "0",
    "1", "0", "0", "0", "sqrt(2/5)", "0",
    "1", "0", "0", "sqrt(6)/4", "3/(2*sqrt(10))", "0",
    "1", "0", "1/sqrt(3)", "1/sqrt(6)", "1/sqrt(10)", "0",
    "1", "1/2", "1/(2*sqrt(3))", "1/(2*sqrt(6))", "1/(2*sqrt(10))", "0",
};

const char* const p5_forms[36] = {
    "0", "0", "0", "0", "0", "1",
    "1", "-1", "-1/sqrt(3)", "-1/sqrt(6)", "-sqrt(5/2)", "-1",
    "0", "0", "0", "-1", "sqrt(5/3)", "0",
    "0", "0", "-1/sqrt(2)", "1", "0", "0",
    "0", "-1/sqrt(3)", "1", "0", "0", "0",
    "0", "1", "0", "0", "0", "0",
};

const unsigned p5_ideal[2] = {0, ~0u};


const char* const x5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "0",
    "1", "1/2", "0", "0", "0", "0",
    "1", "1/2", "sqrt(3)/6", "0", "0", "0",
    "1", "1/2", "sqrt(3)/6", "sqrt(6)/6", "0", "0",
    "1", "1/2", "sqrt(3)/6", "sqrt(6)/6", "1/sqrt(2)", "0",
};

const char* const x5_forms[36] = {
    "0", "0", "0", "0", "0", "1/24",
    "1/24", "-1/12", "0", "0", "0", "-1/24",
    "0", "1/12", "-1/(4*sqrt(3))", "0", "0", "0",
    "0", "0", "1/(4*sqrt(3))", "-1/(4*sqrt(6))", "0", "0",
    "0", "0", "0", "1/(4*sqrt(6))", "-1/(12*sqrt(2))", "0",
    "0", "0", "0", "0", "1/(12*sqrt(2))", "0",
};

const unsigned x5_ideal[3] = {0, 5, ~0u};


const char* const r5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "0",
    "1", "sqrt(2)/2", "0", "0", "0", "0",
    "1", "sqrt(2)/2", "sqrt(6)/6", "0", "0", "0",
    "1", "sqrt(2)/2", "sqrt(6)/6", "sqrt(3)/6", "0", "0",
    "1", "sqrt(2)/2", "sqrt(6)/6", "sqrt(3)/6", "1/2", "0",
};

const char* const r5_forms[36] = {
    "0", "0", "0", "0", "0", "1",
    "1", "-sqrt(2)", "0", "0", "0", "-1",
    "0", "1/sqrt(3)", "-1", "0", "0", "0",
    "0", "0", "1/sqrt(2)", "-1", "0", "0",
    "0", "0", "0", "sqrt(3)", "-1", "0",
    "0", "0", "0", "0", "1", "0",
};

const unsigned r5_ideal[3] = {0, 5, ~0u};


const char* const au5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "-1",
    "1", "0", "0", "0", "6*sqrt(2+sqrt(2))/13", "5/13",
    "1", "0", "0", "sqrt(2+sqrt(2))*sqrt(3)/8", "3*sqrt(2+sqrt(2))/8", "1/2",
    "1", "0", "2*sqrt(12+6*sqrt(2))/35", "4*sqrt(2+sqrt(2))*sqrt(3)/35", "12*sqrt(2+sqrt(2))/35", "19/35",
    "1", "3*sqrt(2)*sqrt(2+sqrt(2))/22", "sqrt(6)*sqrt(2+sqrt(2))/22", "sqrt(2+sqrt(2))*sqrt(3)/11", "3*sqrt(2+sqrt(2))/11", "7/11",
};

const char* const au5_forms[36] = {
    "1", "-3*sqrt(2)/(2*sqrt(2+sqrt(2)))", "-sqrt(2)*sqrt(3)/(2*sqrt(2+sqrt(2)))", "-sqrt(3)/sqrt(2+sqrt(2))", "-3/sqrt(2+sqrt(2))", "1",
    "1", "0", "0", "0", "-4/(3*sqrt(2+sqrt(2)))", "-1",
    "0", "0", "0", "-1", "1/sqrt(3)", "0",
    "0", "0", "-sqrt(2)", "1", "0", "0",
    "0", "-1/sqrt(3)", "1", "0", "0", "0",
    "0", "1", "0", "0", "0", "0",
};

const unsigned au5_ideal[3] = {0, 1, ~0u};


const char* const n5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "0",
    "1", "0", "0", "0", "1", "0",
    "1", "0", "0", "-1/2", "1/2", "0",
    "1", "0", "1/(2*sqrt(2))", "-1/4", "3/4", "0",
    "1", "sqrt(2)/2", "0", "-1/2", "1/2", "0",
};

const char* const n5_forms[36] = {
    "0", "0", "0", "0", "0", "1",
    "1", "0", "0", "1", "-1", "-1",
    "0", "0", "-sqrt(2)", "1", "1", "0",
    "0", "-1", "-1", "-sqrt(2)", "0", "0",
    "0", "0", "1", "0", "0", "0",
    "0", "1", "0", "0", "0", "0",
};

const unsigned n5_ideal[4] = {0, 2, 5, ~0u};


const char* const o5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "-1",
    "1", "0", "1/4", "sqrt(2)/4", "sqrt(6)/4", "1/2",
    "1", "0", "0", "sqrt(2)/4", "sqrt(6)/4", "1/2",
    "1", "0", "0", "0", "sqrt(6)/4", "1/2",
    "1", "sqrt(3)/4", "1/4", "sqrt(2)/4", "sqrt(6)/4", "1/2",
};

const char* const o5_forms[36] = {
    "1", "0", "0", "0", "-sqrt(6)", "1",
    "1", "0", "0", "0", "-sqrt(6)/3", "-1",
    "0", "-1/sqrt(3)", "1", "0", "0", "0",
    "0", "0", "-sqrt(2)", "1", "0", "0",
    "0", "0", "0", "-1", "1/sqrt(3)", "0",
    "0", "1", "0", "0", "0", "0",
};

const unsigned o5_ideal[4] = {0, 1, 5, ~0u};


const char* const m5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "0",
    "1", "0", "0", "0", "1", "0",
    "1", "0", "0", "-1/2", "1/2", "0",
    "1", "0", "sqrt(2)/2", "-1/2", "1/2", "0",
    "1", "sqrt(2)/2", "0", "-1/2", "1/2", "0",
};

const char* const m5_forms[36] = {
    "0", "0", "0", "0", "0", "1",
    "1", "0", "0", "1", "-1", "-1",
    "0", "0", "0", "1", "1", "0",
    "0", "-1", "-1", "-sqrt(2)", "0", "0",
    "0", "0", "1", "0", "0", "0",
    "0", "1", "0", "0", "0", "0",
};

const unsigned m5_ideal[5] = {0, 2, 4, 5, ~0u};


const char* const l5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "-1",
    "1", "0", "0", "0", "1", "0",
    "1", "0", "0", "-1/2", "1/2", "0",
    "1", "0", "sqrt(2)/2", "-1/2", "1/2", "0",
    "1", "sqrt(2)/2", "0", "-1/2", "1/2", "0",
};

const char* const l5_forms[36] = {
    "1", "0", "0", "1", "-1", "1",
    "1", "0", "0", "1", "-1", "-1",
    "0", "0", "0", "1", "1", "0",
    "0", "-1", "-1", "-sqrt(2)", "0", "0",
    "0", "0", "1", "0", "0", "0",
    "0", "1", "0", "0", "0", "0",
};

const unsigned l5_ideal[6] = {0, 1, 2, 4, 5, ~0u};


const char* const ur5_vertices[36] = {
    "1", "0", "0", "0", "0", "1",
    "1", "0", "0", "0", "0", "-1",
    "1", "0", "0", "0", "-12/13", "5/13",
    "1", "0", "0", "sqrt(3)/4", "-3/4", "1/2",
    "1", "0", "4*sqrt(6)/35", "8*sqrt(3)/35", "-24/35", "19/35",
    "1", "3*sqrt(2)/11", "sqrt(6)/11", "2*sqrt(3)/11", "-6/11", "7/11",
};

const char* const ur5_forms[36] = {
    "1", "-3/(2*sqrt(2))", "-sqrt(3/2)/2", "-sqrt(3)/2", "3/2", "1",
    "1", "0", "0", "0", "2/3", "-1",
    "0", "0", "0", "-1", "-1/sqrt(3)", "0",
    "0", "0", "-sqrt(2)", "1", "0", "0",
    "0", "-1/sqrt(3)", "1", "0", "0", "0",
    "0", "1", "0", "0", "0", "0",
};

const unsigned ur5_ideal[7] = {0, 1, 2, 3, 4, 5, ~0u};


const BuiltinSpec builtin_table[12] = {
    {"U5", "[3,3,3,4,3]", u5_vertices, u5_ideal, u5_forms,
     "0-1:3 1-2:3 2-3:3 3-4:4 4-5:3",
     "zeta3 7/46080"},
    {"S5", "[4,3,3^{2,1}]", s5_vertices, s5_ideal, s5_forms,
     "0-1:3 1-4:3 2-3:4 3-4:3 4-5:3",
     "zeta3 7/15360"},
    {"Q5", "[3^{2,1,1,1}]", q5_vertices, q5_ideal, q5_forms,
     "0-1:3 1-2:3 2-3:3 2-4:3 2-5:3",
     "zeta3 7/7680"},
    {"P5", "[3,3^{[5]}]", p5_vertices, p5_ideal, p5_forms,
     "0-1:3 1-2:3 1-5:3 2-3:3 3-4:3 4-5:3",
     "L 3 5 1/4608"},
    {"X5", "[3,3,4,3,3]", x5_vertices, x5_ideal, x5_forms,
     "0-1:3 1-2:3 2-3:4 3-4:3 4-5:3",
     "zeta3 7/9216"},
    {"R5", "[3,4,3,3,4]", r5_vertices, r5_ideal, r5_forms,
     "0-1:4 1-2:3 2-3:3 3-4:4 4-5:3",
     "zeta3 7/4608"},
    {"AU5", "[(3^5,4)]", au5_vertices, au5_ideal, au5_forms,
     "0-1:3 0-5:3 1-2:3 2-3:3 3-4:4 4-5:3",
     "literal 0.0075726186"},
    {"N5", "[4,3,3^{3,4}]", n5_vertices, n5_ideal, n5_forms,
     "0-1:4 1-3:3 2-4:4 3-4:3 3-5:3",
     "zeta3 7/1536"},
    {"O5", "[3,4,3,3^{1,1}]", o5_vertices, o5_ideal, o5_forms,
     "0-4:3 1-4:3 2-3:4 2-5:3 3-4:3",
     "zeta3 7/2304"},
    {"M5", "[4,3,3^{1,1,1}]", m5_vertices, m5_ideal, m5_forms,
     "0-1:4 1-3:3 2-3:3 3-4:3 3-5:3",
     "zeta3 7/768"},
    {"L5", "[3^{1,1,1,1,1}]", l5_vertices, l5_ideal, l5_forms,
     "0-3:3 1-3:3 2-3:3 3-4:3 3-5:3",
     "zeta3 7/384"},
    {"UR5", "[(3^2,4)^{[2]}]", ur5_vertices, ur5_ideal, ur5_forms,
     "0-1:4 0-5:3 1-2:3 2-3:3 3-4:4 4-5:3",
     "zeta3 7/288"},
};

CoxeterSimplex from_spec(const BuiltinSpec& spec) {
    std::ostringstream text;
    text << "witt " << spec.witt << "\n";
    text << "dim 5\n";
    const unsigned* ideal = spec.ideal;
    for (int i = 0; i < 6; ++i) {
        text << "vertex";
        for (int k = 0; k < 6; ++k)
            text << ' ' << spec.vertices[6 * i + k];
        if (*ideal == static_cast<unsigned>(i)) {
            text << " ideal";
            ++ideal;
        }
        text << "\n";
    }
    for (int i = 0; i < 6; ++i) {
        text << "form";
        for (int k = 0; k < 6; ++k)
            text << ' ' << spec.forms[6 * i + k];
        text << "\n";
    }
    text << "diagram " << spec.diagram << "\n";
    if (spec.volume)
        text << "volume " << spec.volume << "\n";
    std::istringstream in(text.str());
    CoxeterSimplex s = load(in);
    s.coxeter_symbol = spec.symbol;
    return s;
}

const std::vector<CoxeterSimplex>& builtin_list() {
    static const std::vector<CoxeterSimplex> list = [] {
        std::vector<CoxeterSimplex> v;
        v.reserve(std::size(builtin_table));
        for (const BuiltinSpec& spec : builtin_table)
            v.push_back(from_spec(spec));
        return v;
    }();
    return list;
}

} // namespace

const std::vector<std::string>& witt_symbols() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const BuiltinSpec& spec : builtin_table)
            v.emplace_back(spec.witt);
        return v;
    }();
    return names;
}

bool has_builtin(const std::string& witt) {
    for (const BuiltinSpec& spec : builtin_table)
        if (witt == spec.witt)
            return true;
    return false;
}

const CoxeterSimplex& builtin(const std::string& witt) {
    const auto& list = builtin_list();
    for (const CoxeterSimplex& s : list)
        if (s.witt == witt)
            return s;
    std::string valid;
    for (const auto& name : witt_symbols())
        valid += valid.empty() ? name : ", " + name;
    throw NotFoundError("unknown simplex '" + witt + "' (valid: " + valid + ")");
}

} // namespace artifact::catalog

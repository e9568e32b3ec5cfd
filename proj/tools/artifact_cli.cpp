#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "artifact/algexpr.hpp"
#include "artifact/catalog.hpp"
#include "artifact/error.hpp"
#include "artifact/horoball.hpp"
#include "artifact/lorentz.hpp"
#include "artifact/packing.hpp"
#include "artifact/real.hpp"

namespace {

using artifact::real;
using json = nlohmann::ordered_json;

constexpr const char* tool_version = "1.0.0";
constexpr int json_schema_version = 1;

struct Options {
    unsigned precision = 30;
    std::string tol_text = "1e-9";
    std::string format = "text";
};

// Densities are quoted truncated to five decimals, with a trailing ellipsis
// marking the cut.
std::string trunc5(const real& x) {
    std::string s = x.str(12, std::ios_base::fixed);
    auto dot = s.find('.');
    return s.substr(0, dot + 6) + "...";
}

std::string full(const real& x) { return artifact::to_decimal(x, artifact::precision()); }

json make_meta(const Options& opt) {
    json meta;
    meta["schema"] = json_schema_version;
    meta["tool"] = "artifact";
    meta["version"] = tool_version;
    meta["precision"] = opt.precision;
    meta["tol"] = opt.tol_text;
    return meta;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// Volume expression for terminal display; the ASCII form stays in
// machine-readable output.
std::string pretty_volume(const artifact::catalog::VolumeDescriptor& v) {
    using Kind = artifact::catalog::VolumeDescriptor::Kind;
    std::ostringstream out;
    switch (v.kind) {
    case Kind::ZetaMultiple:
        if (v.num != 1)
            out << v.num << "·";
        out << "ζ(3)";
        if (v.den != 1)
            out << '/' << v.den;
        return out.str();
    case Kind::DirichletMultiple:
        if (v.num != 1)
            out << v.num << "·";
        out << v.modulus << "^(" << v.order << "/2)·L(" << v.order << ',' << v.modulus
            << ')';
        if (v.den != 1)
            out << '/' << v.den;
        return out.str();
    case Kind::NumericLiteral:
        return v.literal;
    }
    return {};
}

const artifact::catalog::CoxeterSimplex resolve_target(const std::string& target) {
    if (artifact::catalog::has_builtin(target))
        return artifact::catalog::builtin(target);
    if (target.find('/') != std::string::npos || target.find('.') != std::string::npos)
        return artifact::catalog::load_file(target);
    return artifact::catalog::builtin(target); // throws with the valid names
}

json config_to_json(const artifact::packing::PackingReport& report) {
    json cfg;
    json params = json::object();
    json pieces = json::object();
    json fractions = json::object();
    for (const auto& [v, ball] : report.config.balls) {
        std::string key = std::to_string(v);
        params[key] = full(artifact::horoball::t_to_s(ball.t));
        pieces[key] = full(report.piece_volumes.at(v));
        const auto& frac = report.fractions.at(v);
        if (frac)
            fractions[key] = artifact::packing::to_string(*frac);
        else
            fractions[key] = nullptr;
    }
    cfg["params"] = params;
    cfg["piece_volumes"] = pieces;
    cfg["fractions"] = fractions;
    cfg["density"] = full(report.density);
    return cfg;
}

void print_config_text(std::ostream& out, const artifact::packing::PackingReport& report,
                       int index) {
    out << "class " << index << ":\n";
    for (const auto& [v, ball] : report.config.balls) {
        out << "  vertex " << v << ": s = " << artifact::to_decimal(
                   artifact::horoball::t_to_s(ball.t), 12)
            << "  t = " << artifact::to_decimal(ball.t, 12)
            << "  piece = " << artifact::to_decimal(report.piece_volumes.at(v), 12);
        const auto& frac = report.fractions.at(v);
        if (frac)
            out << "  fraction = " << artifact::packing::to_string(*frac);
        out << "\n";
    }
    out << "  class density = " << trunc5(report.density) << "\n";
}

int cmd_list(const Options& opt, const real& tol) {
    const auto& names = artifact::catalog::witt_symbols();

    struct Row {
        std::string witt, symbol, volume_expr, volume_pretty, volume, density_full;
        int m = 0;
    };
    std::vector<Row> rows;
    for (const auto& name : names) {
        const auto& s = artifact::catalog::builtin(name);
        Row r;
        r.witt = name;
        r.symbol = s.coxeter_symbol;
        r.m = s.ideal_count();
        r.volume_expr = artifact::catalog::volume_expression(*s.volume);
        r.volume_pretty = pretty_volume(*s.volume);
        r.volume = artifact::to_decimal(artifact::catalog::exact_volume(s), 10);
        r.density_full = full(artifact::packing::optimize(s, tol).delta_opt);
        rows.push_back(std::move(r));
    }

    if (opt.format == "json") {
        json doc;
        doc["rows"] = json::array();
        for (const Row& r : rows) {
            json row;
            row["witt"] = r.witt;
            row["symbol"] = r.symbol;
            row["m"] = r.m;
            row["volume_expr"] = r.volume_expr;
            row["volume"] = r.volume;
            row["density"] = r.density_full;
            doc["rows"].push_back(row);
        }
        doc["meta"] = make_meta(opt);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "witt,symbol,m,volume_expr,volume,density\n";
        for (const Row& r : rows)
            std::cout << csv_field(r.witt) << ',' << csv_field(r.symbol) << ',' << r.m << ','
                      << csv_field(r.volume_expr) << ',' << r.volume << ',' << r.density_full
                      << "\n";
    } else {
        for (const Row& r : rows) {
            std::ostringstream line;
            line << std::left << std::setw(5) << r.witt << std::setw(20) << r.symbol
                 << "m=" << r.m << "  " << std::setw(22) << r.volume_pretty << std::setw(16)
                 << r.volume;
            std::cout << line.str() << trunc5(real(r.density_full)) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& opt, const real& tol, const std::string& target) {
    const auto s = resolve_target(target);
    auto report = artifact::catalog::verify(s, tol);

    if (opt.format == "json") {
        json doc;
        doc["witt"] = s.witt;
        doc["checks"] = json::array();
        for (const auto& c : report.checks) {
            json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["residual"] = artifact::to_decimal(c.residual, 6);
            e["detail"] = c.detail;
            doc["checks"].push_back(e);
        }
        doc["pass"] = report.pass();
        doc["meta"] = make_meta(opt);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "check,pass,residual\n";
        for (const auto& c : report.checks)
            std::cout << c.name << ',' << (c.pass ? "true" : "false") << ','
                      << artifact::to_decimal(c.residual, 6) << "\n";
    } else {
        std::cout << s.witt << " verification:\n";
        for (const auto& c : report.checks) {
            std::cout << "  " << std::left << std::setw(15) << c.name
                      << (c.pass ? "pass" : "FAIL")
                      << "  residual " << artifact::to_decimal(c.residual, 6);
            if (!c.detail.empty())
                std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << (report.pass() ? "all checks passed" : "verification FAILED") << "\n";
    }
    return report.pass() ? 0 : 1;
}

int report_densities(const Options& opt, const artifact::catalog::CoxeterSimplex& s,
                     const std::vector<artifact::packing::PackingReport>& classes,
                     const real& density, bool optimized) {
    if (opt.format == "json") {
        json doc;
        doc["witt"] = s.witt;
        doc["density"] = full(density);
        doc["configs"] = json::array();
        for (const auto& r : classes)
            doc["configs"].push_back(config_to_json(r));
        doc["meta"] = make_meta(opt);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "class,vertex,s,t,piece,fraction\n";
        for (std::size_t k = 0; k < classes.size(); ++k) {
            for (const auto& [v, ball] : classes[k].config.balls) {
                const auto& frac = classes[k].fractions.at(v);
                std::cout << k + 1 << ',' << v << ','
                          << full(artifact::horoball::t_to_s(ball.t)) << ',' << full(ball.t)
                          << ',' << full(classes[k].piece_volumes.at(v)) << ','
                          << (frac ? artifact::packing::to_string(*frac) : std::string())
                          << "\n";
            }
        }
    } else {
        std::cout << s.witt;
        if (!s.coxeter_symbol.empty())
            std::cout << "  " << s.coxeter_symbol;
        std::cout << "\n";
        for (std::size_t k = 0; k < classes.size(); ++k)
            print_config_text(std::cout, classes[k], static_cast<int>(k) + 1);
        std::cout << (optimized ? "optimal density = " : "density = ") << trunc5(density)
                  << "\n";
    }
    return 0;
}

// Parameter values are exact expressions; plain decimals such as -0.2 are
// accepted as a convenience.
real parse_set_value(const std::string& text) {
    try {
        return artifact::algexpr::eval(text);
    } catch (const artifact::FormatError&) {
        try {
            return real(text);
        } catch (const std::exception&) {
            throw artifact::FormatError("cannot parse parameter value '" + text + "'", 0);
        }
    }
}

int cmd_density(const Options& opt, const real& tol, const std::string& target,
                const std::vector<std::string>& sets) {
    const auto s = resolve_target(target);

    if (sets.empty()) {
        auto result = artifact::packing::optimize(s, tol);
        return report_densities(opt, s, result.classes, result.delta_opt, true);
    }

    std::map<int, real> s_values;
    for (const std::string& item : sets) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw artifact::DomainError("--set wants <vertex>=<expression>, got '" + item +
                                        "'");
        int v;
        try {
            std::size_t used = 0;
            v = std::stoi(item.substr(0, eq), &used);
            if (used != eq)
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw artifact::DomainError("invalid vertex index in '" + item + "'");
        }
        if (s_values.count(v))
            throw artifact::DomainError("vertex " + std::to_string(v) + " set twice");
        s_values.emplace(v, parse_set_value(item.substr(eq + 1)));
    }

    auto config = artifact::packing::config_from_s(s, s_values, tol);
    auto report = artifact::packing::density(config, tol);
    real d = report.density;
    std::vector<artifact::packing::PackingReport> classes{std::move(report)};
    return report_densities(opt, s, classes, d, false);
}

int cmd_sweep(const Options& opt, const real& tol, const std::string& target, int pivot,
              int grid, const std::string& out_path) {
    const auto s = resolve_target(target);
    auto curve = artifact::packing::sweep(s, pivot, grid, tol);

    std::ostringstream csv;
    csv << "x,delta\n";
    for (const auto& [x, d] : curve.samples)
        csv << full(x) << ',' << full(d) << "\n";

    std::ostringstream summary;
    summary << "sweep " << s.witt << " pivot " << pivot << ": x_max = "
            << artifact::to_decimal(curve.x_max, 12) << "\n"
            << "endpoint densities " << trunc5(curve.samples.front().second) << " and "
            << trunc5(curve.samples.back().second) << "\n"
            << "interior minimum " << trunc5(curve.interior_min_density) << " at x = "
            << artifact::to_decimal(curve.interior_min_x, 12) << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw artifact::DomainError("cannot write to '" + out_path + "'");
        out << csv.str();
    }

    if (opt.format == "json") {
        json doc;
        doc["witt"] = s.witt;
        doc["pivot"] = curve.pivot;
        doc["x_max"] = full(curve.x_max);
        doc["samples"] = json::array();
        for (const auto& [x, d] : curve.samples)
            doc["samples"].push_back(json::array({full(x), full(d)}));
        doc["endpoints"] =
            json::array({full(curve.samples.front().second), full(curve.samples.back().second)});
        json mn;
        mn["x"] = full(curve.interior_min_x);
        mn["delta"] = full(curve.interior_min_density);
        doc["interior_min"] = mn;
        doc["meta"] = make_meta(opt);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv" && out_path.empty()) {
        std::cerr << summary.str();
        std::cout << csv.str();
    } else {
        std::cout << summary.str();
        if (out_path.empty()) {
            std::cout << "x,delta\n";
            for (const auto& [x, d] : curve.samples)
                std::cout << artifact::to_decimal(x, 12) << ',' << artifact::to_decimal(d, 12)
                          << "\n";
        } else {
            std::cout << curve.samples.size() << " samples written to " << out_path << "\n";
        }
    }
    return 0;
}

int cmd_table(const Options& opt, const real& tol) {
    const auto& names = artifact::catalog::witt_symbols();
    std::vector<std::pair<std::string, real>> rows;
    for (const auto& name : names) {
        const auto& s = artifact::catalog::builtin(name);
        rows.emplace_back(name, artifact::packing::optimize(s, tol).delta_opt);
    }
    const std::string bounds_line =
        "0.59421 ≤ δ_opt(H⁵) ≤ 0.60695";

    if (opt.format == "json") {
        json doc;
        doc["rows"] = json::array();
        for (const auto& [name, d] : rows) {
            json row;
            row["witt"] = name;
            row["density"] = full(d);
            doc["rows"].push_back(row);
        }
        doc["bounds_line"] = bounds_line;
        doc["meta"] = make_meta(opt);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "witt,density\n";
        for (const auto& [name, d] : rows)
            std::cout << name << ',' << full(d) << "\n";
    } else {
        for (const auto& [name, d] : rows)
            std::cout << std::left << std::setw(5) << name << trunc5(d) << "\n";
        std::cout << bounds_line << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal horoball packing densities of the asymptotic Coxeter simplex "
                 "tilings of five-dimensional hyperbolic space"};
    app.require_subcommand(1);
    // Let the global options also be given after the verb.
    app.fallthrough();

    Options opt;
    app.add_option("--precision", opt.precision, "Working precision in decimal digits")
        ->capture_default_str();
    app.add_option("--tol", opt.tol_text, "Relative tolerance for classification and checks")
        ->capture_default_str();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* list_cmd = app.add_subcommand("list", "Catalog of the built-in simplices");

    std::string verify_target;
    auto* verify_cmd = app.add_subcommand("verify", "Check stored geometry for consistency");
    verify_cmd->add_option("target", verify_target, "Witt symbol or catalog file")->required();

    std::string density_target;
    std::vector<std::string> density_sets;
    auto* density_cmd =
        app.add_subcommand("density", "Packing density of a configuration or the optimum");
    density_cmd->add_option("target", density_target, "Witt symbol or catalog file")->required();
    density_cmd->add_option("--set", density_sets,
                            "Horoball parameter <vertex>=<expression>, repeatable");

    std::string optimize_target;
    auto* optimize_cmd =
        app.add_subcommand("optimize", "Optimal packing density and extremal classes");
    optimize_cmd->add_option("target", optimize_target, "Witt symbol or catalog file")
        ->required();

    std::string sweep_target, sweep_out;
    int sweep_pivot = -1;
    int sweep_grid = 100;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Density along the slide between extremal configurations");
    sweep_cmd->add_option("target", sweep_target, "Witt symbol or catalog file")->required();
    sweep_cmd->add_option("--pivot", sweep_pivot, "Ideal vertex whose ball shrinks")
        ->required();
    sweep_cmd->add_option("--grid", sweep_grid, "Number of sample intervals")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_out, "Write the samples to this CSV file");

    auto* table_cmd = app.add_subcommand("table", "Density table with the bounds line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    artifact::set_precision(opt.precision);

    try {
        real tol;
        try {
            tol = real(opt.tol_text);
        } catch (const std::exception&) {
            throw artifact::DomainError("invalid tolerance '" + opt.tol_text + "'");
        }
        if (tol <= 0)
            throw artifact::DomainError("tolerance must be positive");

        if (list_cmd->parsed())
            return cmd_list(opt, tol);
        if (verify_cmd->parsed())
            return cmd_verify(opt, tol, verify_target);
        if (density_cmd->parsed())
            return cmd_density(opt, tol, density_target, density_sets);
        if (optimize_cmd->parsed())
            return cmd_density(opt, tol, optimize_target, {});
        if (sweep_cmd->parsed())
            return cmd_sweep(opt, tol, sweep_target, sweep_pivot, sweep_grid, sweep_out);
        if (table_cmd->parsed())
            return cmd_table(opt, tol);
        return 2;
    } catch (const artifact::InadmissibleError& e) {
        std::cerr << "inadmissible configuration:\n";
        for (const auto& v : e.violations)
            std::cerr << "  " << v << "\n";
        return 1;
    } catch (const artifact::FormatError& e) {
        std::cerr << "error at line/offset " << e.where << ": " << e.what() << "\n";
        return 2;
    } catch (const artifact::NotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const artifact::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const artifact::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

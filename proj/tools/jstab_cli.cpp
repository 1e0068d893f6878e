#include "jstab/reproduce.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace jstab;

namespace {

struct Options {
    std::string model = "builtin:projective_plane";
    std::string L, H, M, D, chain, ideal, grid, c = "1", out, format = "json";
    int oracle = 0;
    std::string scenario;
    bool all = false, list = false;
};

RunManifest manifest(const std::string& command, const Options& o, std::map<std::string, std::string> params) {
    RunManifest m;
    m.command = command;
    for (auto path : {o.model, o.chain, o.ideal})
        if (!path.empty() && path.rfind("builtin:", 0) != 0 && std::filesystem::is_regular_file(path))
            m.input_hashes[path] = sha256_file(path);
    params["model"] = o.model;
    for (auto it = params.begin(); it != params.end();)
        it = it->second.empty() ? params.erase(it) : std::next(it);
    m.parameters = params;
    if (!o.out.empty()) m.outputs.push_back(o.out);
    return m;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << text;
}

void emit_json(const Options& o, const RunManifest& m, const json& result) {
    if (o.format != "json") throw InputError("this subcommand only writes json");
    json doc = {{"manifest", to_json(m)}, {"result", result}};
    emit(o, doc.dump(2) + "\n");
}

DivisorClass need_class(const IntersectionModel& m, const std::string& text, const char* flag) {
    if (text.empty()) throw InputError(std::string("missing ") + flag);
    return parse_class(m, text);
}

FlagChain load_chain(const IntersectionModel& m, const std::string& spec) {
    if (spec.empty()) throw InputError("missing --chain");
    if (spec.find('[') != std::string::npos) return parse_chain(m, spec);
    return chain_from_json(m, read_json_file(spec));
}

std::vector<Rational> grid_axis(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw InputError("grid axis must be a:b:steps, got '" + spec + "'");
    Rational a = parse_rational(parts[0]), b = parse_rational(parts[1]);
    int n = 0;
    try {
        n = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw InputError("bad step count in '" + spec + "'");
    }
    if (n < 1) throw InputError("grid needs at least one step");
    if (n > 100000) throw ResourceError("grid axis has more than 100000 steps");
    std::vector<Rational> v;
    for (int i = 0; i <= n; ++i) v.push_back(a + (b - a) * Rational(i, n));
    return v;
}

int run_classify(const Options& o) {
    auto X = load_model(o.model);
    auto L = need_class(X, o.L, "--L"), H = need_class(X, o.H, "--H");
    if (X.n != 2) throw HypothesisError("classify needs a surface model (n = 2)");
    emit_json(o, manifest("classify", o, {{"L", o.L}, {"H", o.H}}), to_json(X, classify_surface(X, L, H)));
    return 0;
}

int run_threshold(const Options& o) {
    auto X = load_model(o.model);
    auto L = need_class(X, o.L, "--L"), H = need_class(X, o.H, "--H");
    emit_json(o, manifest("threshold", o, {{"L", o.L}, {"H", o.H}}), to_json(threshold(X, L, H)));
    return 0;
}

int run_energy(const Options& o) {
    auto X = load_model(o.model);
    auto L = need_class(X, o.L, "--L");
    FlagChain chain = load_chain(X, o.chain);
    json r;
    if (o.H.empty()) {
        r = to_json(norms(X, L, chain));
    } else {
        auto H = need_class(X, o.H, "--H");
        EnergyReport e = energy_report(X, L, H, chain);
        r = to_json(e);
        if (X.n == 2) {
            SurfaceEnergy s = surface_chain_energy(X, L, H, chain);
            if (s.value != e.jh) throw std::logic_error("surface formula disagrees with the general energy");
            r["surface_energy"] = {{"value", to_string(s.value)}, {"terms", to_json(s.terms)}};
        }
    }
    r["e_flag"] = to_string(e_flag(X, L, chain));
    if (o.oracle > 0) r["oracle"] = to_json(lattice_count_oracle(X, L, chain, o.oracle));
    std::string oracle = o.oracle > 0 ? std::to_string(o.oracle) : "";
    emit_json(o, manifest("energy", o, {{"L", o.L}, {"H", o.H}, {"chain", o.chain}, {"oracle_m_max", oracle}}), r);
    return 0;
}

int run_slope(const Options& o) {
    auto X = load_model(o.model);
    auto L = need_class(X, o.L, "--L"), H = need_class(X, o.H, "--H"), D = need_class(X, o.D, "--D");
    Rational c = parse_rational(o.c);
    SlopeEnergy s = slope_energy(X, L, H, D, c);
    json r = to_json(s);
    std::string poly;
    for (size_t p = 0; p < s.coefficients.size(); ++p) {
        if (s.coefficients[p] == 0) continue;
        if (!poly.empty()) poly += " + ";
        poly += "(" + to_string(s.coefficients[p]) + ")c^" + std::to_string(p);
    }
    r["polynomial"] = poly.empty() ? "0" : poly;
    emit_json(o, manifest("slope", o, {{"L", o.L}, {"H", o.H}, {"D", o.D}, {"c", o.c}}), r);
    return 0;
}

int run_resolve(const Options& o) {
    if (o.ideal.empty()) throw InputError("missing --ideal");
    MonomialFlagIdeal a = ideal_from_json(read_json_file(o.ideal));
    json r;
    r["ideal"] = ideal_to_json(a);
    r["star"] = to_json(condition_star_check(a));
    RescaleResult rs = minimal_rescale(a);
    r["rescale"] = rs.l.str();
    r["rescaled_star"] = to_json(condition_star_check(rs.scaled));
    json charts = json::array();
    for (auto& ch : fan_resolve(rs.scaled)) charts.push_back(to_json(ch));
    r["charts"] = charts;
    emit_json(o, manifest("resolve", o, {}), r);
    return 0;
}

int run_scan(const Options& o) {
    if (o.format != "csv") throw InputError("scan only writes csv");
    auto X = load_model(o.model);
    auto H = need_class(X, o.H, "--H");
    if (o.grid.empty()) throw InputError("missing --grid");
    std::string csv;
    auto comma = o.grid.find(',');
    if (comma == std::string::npos) {
        DivisorClass M;
        if (!o.M.empty()) {
            M = parse_class(X, o.M);
        } else {
            auto b = boundary_class(X, H);
            if (!b) throw HypothesisError("no boundary class for this H; pass --M");
            M = *b;
        }
        csv = scan_csv(X, scan_segment(X, M, H, grid_axis(o.grid)), {"t"});
    } else {
        if (X.rho != 2) throw HypothesisError("plane scans need a rank-2 model");
        csv = scan_csv(X, scan_plane(X, H, grid_axis(o.grid.substr(0, comma)), grid_axis(o.grid.substr(comma + 1))),
                       {"x", "y"});
    }
    std::string head = "# " + to_json(manifest("scan", o, {{"H", o.H}, {"M", o.M}, {"grid", o.grid}})).dump() + "\n";
    emit(o, head + csv);
    return 0;
}

int run_criteria(const Options& o) {
    auto X = load_model(o.model);
    auto L = need_class(X, o.L, "--L"), H = need_class(X, o.H, "--H");
    json r;
    r["fu"] = to_json(check_fu(X, L, H));
    r["comparability"] = to_json(comparability_bound(X, L, H));
    if (X.n == 2) r["sw"] = to_json(check_sw(X, L, H, builtin_cycles(X), X.cycles_complete));
    emit_json(o, manifest("criteria", o, {{"L", o.L}, {"H", o.H}}), r);
    return 0;
}

int run_reproduce(const Options& o) {
    if (o.list) {
        for (auto& n : scenario_names()) std::cout << n << "\n";
        return 0;
    }
    std::vector<std::string> names;
    if (o.all)
        names = scenario_names();
    else if (!o.scenario.empty())
        names = {o.scenario};
    else
        throw InputError("name a scenario or pass --all");
    json results = json::array();
    bool pass = true;
    for (auto& n : names) {
        json r = run_scenario(n);
        pass = pass && r["pass"].get<bool>();
        results.push_back(r);
    }
    json r = names.size() == 1 ? results[0] : json{{"scenarios", results}, {"pass", pass}};
    emit_json(o, manifest("reproduce", o, {{"scenario", o.all ? "all" : o.scenario}}), r);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact numeric toolkit for J^H-stability on intersection models"};
    app.set_version_flag("--version", toolkit_version);
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s, bool lh) {
        s->add_option("--model", o.model, "builtin:<name>[:param] or a model JSON file");
        if (lh) {
            s->add_option("--L", o.L, "polarization class, e.g. \"1*C_0,2*f\"");
            s->add_option("--H", o.H, "twisting class");
        }
        s->add_option("--out", o.out, "write the result here instead of stdout");
        s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto classify = app.add_subcommand("classify", "stability verdict for a polarized surface");
    common(classify, true);
    auto thr = app.add_subcommand("threshold", "stability threshold report");
    common(thr, true);
    auto energy = app.add_subcommand("energy", "energies of a flag chain");
    common(energy, true);
    energy->add_option("--chain", o.chain, "\"[D0; D1; ...]\" or a chain JSON file");
    energy->add_option("--oracle", o.oracle, "also run the lattice-count oracle up to this m");
    auto slope = app.add_subcommand("slope", "slope energy of a divisor");
    common(slope, true);
    slope->add_option("--D", o.D, "divisor class");
    slope->add_option("--c", o.c, "rational parameter");
    auto resolve = app.add_subcommand("resolve", "star condition check, rescale and charts for a flag ideal");
    common(resolve, false);
    resolve->add_option("--ideal", o.ideal, "flag ideal JSON file")->required();
    auto scan = app.add_subcommand("scan", "cone scan as CSV");
    common(scan, true);
    scan->add_option("--M", o.M, "segment start class; defaults to the boundary class");
    scan->add_option("--grid", o.grid, "a:b:steps for a segment, or two axes x0:x1:nx,y0:y1:ny");
    auto criteria = app.add_subcommand("criteria", "sufficient criteria and comparability");
    common(criteria, true);
    auto repro = app.add_subcommand("reproduce", "run a builtin scenario against stored values");
    common(repro, false);
    repro->add_option("name", o.scenario, "scenario name");
    repro->add_flag("--all", o.all, "run every scenario");
    repro->add_flag("--list", o.list, "list scenario names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (scan->parsed() && !scan->count("--format")) o.format = "csv";

    try {
        if (classify->parsed()) return run_classify(o);
        if (thr->parsed()) return run_threshold(o);
        if (energy->parsed()) return run_energy(o);
        if (slope->parsed()) return run_slope(o);
        if (resolve->parsed()) return run_resolve(o);
        if (scan->parsed()) return run_scan(o);
        if (criteria->parsed()) return run_criteria(o);
        if (repro->parsed()) return run_reproduce(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

#include "jstab/model_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace jstab {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

RVec rvec_from_json(const json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
    RVec v;
    for (auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const RVec& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_string(x));
    return a;
}

json to_json(const DivisorClass& d) { return to_json(d.coeffs); }

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

IntersectionModel model_from_json(const json& j) {
    try {
        std::string name = field(j, "name").get<std::string>();
        int n = field(j, "n").get<int>();
        int rho = field(j, "rho").get<int>();
        auto labels = field(j, "basis_labels").get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) != rho) throw InputError("basis_labels length differs from rho");
        std::vector<FormEntry> entries;
        for (auto& e : field(j, "form"))
            entries.push_back({field(e, "indices").get<std::vector<int>>(), rational_from_json(field(e, "value"))});
        std::vector<RVec> nef;
        for (auto& k : field(j, "nef_functionals")) nef.push_back(rvec_from_json(k));
        std::vector<DivisorClass> eff;
        for (auto& g : field(j, "eff_generators")) eff.emplace_back(rvec_from_json(g));
        DivisorClass ref(rvec_from_json(field(j, "reference_ample")));
        IntersectionModel m = make_model(name, n, labels, entries, nef, eff, ref);
        if (j.contains("curves")) {
            for (auto& c : j.at("curves"))
                m.curves.push_back({field(c, "label").get<std::string>(), DivisorClass(rvec_from_json(field(c, "class")))});
            if (m.curves.size() != m.nef_functionals.size())
                throw InputError("curves must align with nef_functionals");
        }
        m.cycles_complete = j.value("cycles_complete", false);
        if (j.contains("toric")) {
            ToricData t;
            for (auto& r : field(j.at("toric"), "rays")) t.rays.push_back({r.at(0).get<long>(), r.at(1).get<long>()});
            t.basis_lift = field(j.at("toric"), "basis_lift").get<std::vector<std::vector<long>>>();
            if (static_cast<int>(t.basis_lift.size()) != rho) throw InputError("toric basis_lift needs one row per basis element");
            m.toric = t;
        }
        return m;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed model file: ") + e.what());
    }
}

json model_to_json(const IntersectionModel& m) {
    json j;
    j["name"] = m.name;
    j["n"] = m.n;
    j["rho"] = m.rho;
    j["basis_labels"] = m.basis_labels;
    json form = json::array();
    for (auto& [idx, v] : m.form)
        if (v != 0) form.push_back({{"indices", idx}, {"value", to_string(v)}});
    j["form"] = form;
    json nef = json::array();
    for (auto& k : m.nef_functionals) nef.push_back(to_json(k));
    j["nef_functionals"] = nef;
    json eff = json::array();
    for (auto& g : m.eff_generators) eff.push_back(to_json(g));
    j["eff_generators"] = eff;
    j["reference_ample"] = to_json(m.reference_ample);
    if (!m.curves.empty()) {
        json cs = json::array();
        for (auto& c : m.curves) cs.push_back({{"label", c.label}, {"class", to_json(c.cls)}});
        j["curves"] = cs;
    }
    j["cycles_complete"] = m.cycles_complete;
    if (m.toric) {
        json rays = json::array();
        for (auto& r : m.toric->rays) rays.push_back({r[0], r[1]});
        j["toric"] = {{"rays", rays}, {"basis_lift", m.toric->basis_lift}};
    }
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

IntersectionModel load_model(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string rest = spec.substr(prefix.size());
        auto colon = rest.find(':');
        std::string name = rest.substr(0, colon);
        int param = 0;
        if (colon != std::string::npos) {
            try {
                param = std::stoi(rest.substr(colon + 1));
            } catch (const std::exception&) {
                throw InputError("bad builtin parameter in '" + spec + "'");
            }
        }
        return builtin(name, param);
    }
    return model_from_json(read_json_file(spec));
}

DivisorClass parse_class(const IntersectionModel& m, const std::string& text) {
    DivisorClass d = m.zero();
    std::vector<std::string> terms;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == ',' || ch == '+') {
            terms.push_back(cur);
            cur.clear();
        } else if (ch == '-' && !cur.empty()) {
            terms.push_back(cur);
            cur = "-";
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    bool any = false;
    for (auto& t : terms) {
        if (t == "0") {
            any = true;
            continue;
        }
        if (t.empty()) continue;
        size_t i = 0;
        std::string sign;
        if (t[i] == '-') {
            sign = "-";
            ++i;
        }
        size_t start = i;
        while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/')) ++i;
        std::string coef = t.substr(start, i - start);
        if (i < t.size() && t[i] == '*') ++i;
        std::string label = t.substr(i);
        if (label.empty()) throw InputError("term '" + t + "' has no basis label");
        Rational c = coef.empty() ? Rational(1) : parse_rational(coef);
        if (!sign.empty()) c = -c;
        d[m.label_index(label)] += c;
        any = true;
    }
    if (!any) throw InputError("empty class '" + text + "'");
    return d;
}

std::string format_class(const IntersectionModel& m, const DivisorClass& d) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.rho; ++i) {
        if (d[i] == 0) continue;
        if (!first) os << ",";
        os << to_string(d[i]) << "*" << m.basis_labels[i];
        first = false;
    }
    return first ? "0" : os.str();
}

FlagChain parse_chain(const IntersectionModel& m, const std::string& text) {
    std::string s = text;
    auto a = s.find('['), b = s.rfind(']');
    if (a == std::string::npos || b == std::string::npos || b < a)
        throw InputError("chain must be written as [D_0; D_1; ...]");
    s = s.substr(a + 1, b - a - 1);
    FlagChain c;
    std::string cur;
    for (char ch : s + ";") {
        if (ch == ';' || ch == '|') {
            bool blank = cur.find_first_not_of(" \t") == std::string::npos;
            if (!blank) c.levels.push_back(parse_class(m, cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return c;
}

FlagChain chain_from_json(const IntersectionModel& m, const json& j) {
    FlagChain c;
    if (j.contains("class_map")) {
        // a flag ideal whose exponent directions are bound to model classes
        auto labels = j.at("class_map").get<std::vector<std::string>>();
        MonomialFlagIdeal a = ideal_from_json(j);
        if (static_cast<int>(labels.size()) != a.k) throw InputError("class_map needs one label per exponent");
        RescaleResult rs = minimal_rescale(a);
        StarReport rep = condition_star_check(rs.scaled);
        if (!rep.ok) throw HypothesisError("flag ideal fails the star condition after rescaling: " + rep.reason);
        c.l = rs.l;
        for (auto& lev : rep.chain.levels) {
            DivisorClass d = m.zero();
            for (int i = 0; i < a.k; ++i) d = d + lev[i] * parse_class(m, labels[i]);
            c.levels.push_back(d);
        }
        return c;
    }
    for (auto& lev : field(j, "levels")) {
        if (lev.is_string())
            c.levels.push_back(parse_class(m, lev.get<std::string>()));
        else
            c.levels.emplace_back(rvec_from_json(lev));
        if (static_cast<int>(c.levels.back().size()) != m.rho) throw InputError("chain level has wrong length");
    }
    if (j.contains("l")) c.l = Integer(j.at("l").get<long long>());
    if (c.l < 1) throw InputError("chain weight l must be positive");
    return c;
}

MonomialFlagIdeal ideal_from_json(const json& j) {
    try {
        MonomialFlagIdeal a;
        a.k = field(j, "k").get<int>();
        for (auto& g : field(j, "gens")) a.gens.push_back({rvec_from_json(field(g, "exp")), field(g, "t").get<long>()});
        if (j.contains("rays"))
            for (auto& r : j.at("rays")) a.rays.push_back(rvec_from_json(r));
        translate(a);
        validate(a);
        return a;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed flag ideal: ") + e.what());
    }
}

json ideal_to_json(const MonomialFlagIdeal& a) {
    json gens = json::array();
    for (auto& g : a.gens) gens.push_back({{"exp", to_json(g.exp)}, {"t", g.t}});
    json j = {{"k", a.k}, {"gens", gens}};
    if (!a.rays.empty()) {
        json rays = json::array();
        for (auto& r : a.rays) rays.push_back(to_json(r));
        j["rays"] = rays;
    }
    return j;
}

json chain_to_json(const LocalChain& c) {
    json levels = json::array();
    for (auto& lev : c.levels) {
        json row = json::array();
        for (auto& x : lev) {
            if (is_integral(x))
                row.push_back(num(x).convert_to<long long>());
            else
                row.push_back(to_string(x));
        }
        levels.push_back(row);
    }
    return {{"l", c.l.convert_to<long long>()}, {"levels", levels}};
}

}  // namespace jstab

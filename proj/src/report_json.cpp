#include "jstab/report_json.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace jstab {

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string data = buf.str();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return hex.str();
}

json to_json(const RunManifest& m) {
    return {{"command", m.command},
            {"input_hashes", m.input_hashes},
            {"parameters", m.parameters},
            {"outputs", m.outputs},
            {"version", m.version}};
}

json to_json(const IntersectionModel& m, const Classification& c) {
    json j;
    j["verdict"] = to_string(c.verdict);
    if (!c.criterion.empty()) j["criterion"] = c.criterion;
    j["B2"] = to_json(c.b2);
    j["B2_text"] = format_class(m, c.b2);
    j["B2_values"] = to_json(c.b2_values);
    j["L_values"] = to_json(c.l_values);
    if (c.witness >= 0) {
        json w = {{"functional", c.witness}, {"value", to_string(c.b2_values[c.witness])}};
        if (!c.witness_label.empty()) w["curve"] = c.witness_label;
        j["witness"] = w;
    }
    if (c.epsilon) j["epsilon"] = to_string(*c.epsilon);
    j["hypotheses"] = {{"H_pseudoeffective", c.h_pseffective}, {"H_big", c.h_big}, {"H_ample", c.h_ample}};
    return j;
}

json to_json(const ThresholdReport& t) {
    return {{"delta_pp", to_string(t.delta_pp)},
            {"ample_infimum", to_string(t.ample_infimum)},
            {"pseff_threshold", to_string(t.pseff_threshold)},
            {"applicable", t.applicable},
            {"checklist",
             {{"H_pseudoeffective", t.h_pseffective},
              {"same_average", t.same_average},
              {"not_uniformly_stable", t.not_uniform},
              {"delta_below_pseff_threshold", t.below_threshold}}}};
}

json to_json(const EnergyReport& r) {
    json links = json::array();
    for (auto& l : r.per_link) links.push_back({{"e_flag", to_string(l.e_flag)}, {"jh", to_string(l.jh)}});
    return {{"jh", to_string(r.jh)},
            {"j", to_string(r.j)},
            {"i_minus_j", to_string(r.i_minus_j)},
            {"i", to_string(r.i)},
            {"e", to_string(r.e)},
            {"per_link", links},
            {"flags", {{"almost_trivial", r.almost_trivial}, {"advisory_nef_failed", r.advisory_nef_failed}}}};
}

json to_json(const SlopeEnergy& s) {
    return {{"value", to_string(s.value)}, {"coefficients", to_json(s.coefficients)}};
}

json to_json(const FuResult& f) {
    json j = {{"verdict", to_string(f.verdict)},
              {"test_class", to_json(f.test_class)},
              {"test_values", to_json(f.test_values)},
              {"H_dot_L", to_string(f.h_dot)}};
    if (!f.criterion.empty()) j["criterion"] = f.criterion;
    if (f.criterion == "uniform") {
        j["epsilon"] = to_string(f.epsilon);
        j["delta_star"] = to_string(f.delta_star);
    }
    return j;
}

json to_json(const ComparabilityResult& c) {
    return {{"delta", to_string(c.delta)}, {"plus", to_json(c.plus)}, {"minus", to_json(c.minus)}};
}

json to_json(const SwResult& s) {
    json rows = json::array();
    for (auto& r : s.rows) {
        json row = {{"label", r.label}, {"p", r.p}};
        if (r.skipped)
            row["covered_by_nef_test"] = true;
        else
            row["value"] = to_string(r.value);
        rows.push_back(row);
    }
    json j = {{"verdict", to_string(s.verdict)}, {"relative_to_supplied_cycles", s.relative}, {"cycles", rows}};
    if (s.witness >= 0) {
        j["epsilon"] = to_string(s.epsilon);
        j["witness"] = s.witness;
    }
    return j;
}

json to_json(const MinimalModelResult& m) {
    json rows = json::array();
    for (auto& r : m.rows) {
        json row = {{"label", r.label},
                    {"p", r.p},
                    {"j", r.j},
                    {"coefficients", to_json(r.coefficients)},
                    {"pairings", to_json(r.pairings)},
                    {"ok", r.ok}};
        if (r.witness >= 0) row["witness_i"] = r.witness;
        rows.push_back(row);
    }
    return {{"pass", m.pass}, {"m", m.m}, {"cycles", rows}};
}

json to_json(const AverageCheck& a) {
    json j = {{"same", a.same}, {"ratios", to_json(a.ratios)}, {"global_ratio", to_string(a.global_ratio)}};
    if (!a.same) {
        j["witness_component"] = a.witness;
        j["coefficient"] = to_string(a.coefficient);
    }
    return j;
}

json to_json(const StarReport& s) {
    json j = {{"ok", s.ok}, {"dim_F", s.dim_F}, {"almost_trivial", s.almost_trivial}};
    if (s.ok) j["chain"] = chain_to_json(s.chain);
    if (!s.ok) {
        j["reason"] = s.reason;
        if (s.failed_slice >= 0) j["failed_slice"] = s.failed_slice;
        json pts = json::array();
        for (auto& p : s.slice_points) pts.push_back(to_json(p));
        if (!pts.empty()) j["slice_points"] = pts;
        if (!s.bad_face.empty()) j["face"] = s.bad_face;
    }
    return j;
}

json to_json(const Chart& c) {
    json ineq = json::array();
    for (auto& v : c.inequalities) ineq.push_back(to_json(v));
    return {{"interior", to_json(c.interior)},
            {"inequalities", ineq},
            {"chain", chain_to_json(c.chain)},
            {"selected", c.selected},
            {"monotone", c.monotone},
            {"one_dimensional", c.one_dimensional}};
}

json to_json(const OracleResult& o) {
    json seq = json::array();
    for (auto& x : o.colengths) seq.push_back(x.str());
    return {{"colengths", seq}, {"fitted_e", o.fitted_e.str()}, {"polynomial", o.polynomial}};
}

std::string scan_csv(const IntersectionModel& m, const std::vector<ScanRow>& rows,
                     const std::vector<std::string>& coord_names) {
    std::ostringstream os;
    for (auto& c : coord_names) os << c << ",";
    os << "L,verdict,epsilon,delta_pp\n";
    for (auto& r : rows) {
        for (auto& c : r.coords) os << to_string(c) << ",";
        os << "\"" << format_class(m, r.L) << "\",";
        if (!r.error.empty())
            os << "Error,,";
        else if (!r.ample)
            os << "NotAmple,,";
        else
            os << to_string(r.cls.verdict) << "," << (r.cls.epsilon ? to_string(*r.cls.epsilon) : "") << ",";
        os << (r.delta_pp ? to_string(*r.delta_pp) : "") << "\n";
    }
    return os.str();
}

}  // namespace jstab

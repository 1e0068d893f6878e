#pragma once

#include "jstab/model_io.hpp"
#include "jstab/stability.hpp"
#include "jstab/toric.hpp"

#include <map>
#include <string>
#include <vector>

namespace jstab {

inline const char* toolkit_version = "jstab 0.3.0";

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> input_hashes;  // path -> sha256
    std::map<std::string, std::string> parameters;
    std::vector<std::string> outputs;
    std::string version = toolkit_version;
};

std::string sha256_file(const std::string& path);
json to_json(const RunManifest& m);

json to_json(const IntersectionModel& m, const Classification& c);
json to_json(const ThresholdReport& t);
json to_json(const EnergyReport& r);
json to_json(const SlopeEnergy& s);
json to_json(const FuResult& f);
json to_json(const ComparabilityResult& c);
json to_json(const SwResult& s);
json to_json(const MinimalModelResult& m);
json to_json(const AverageCheck& a);
json to_json(const StarReport& s);
json to_json(const Chart& c);
json to_json(const OracleResult& o);

// CSV with a header; rows ordered by grid index
std::string scan_csv(const IntersectionModel& m, const std::vector<ScanRow>& rows, const std::vector<std::string>& coord_names);

}  // namespace jstab

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "giso/bench.hpp"
#include "giso/isotest.hpp"
#include "giso/oracle.hpp"
#include "giso/weights.hpp"

namespace giso {

inline constexpr const char* tool_version = "0.1.0";
/// Bumped whenever a field is renamed or removed; see docs/run_report.schema.json.
inline constexpr int report_schema_version = 1;

/// Envelope written to stdout by every CLI command.
struct RunReport {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<std::uint64_t> seed;
    std::map<std::string, double> timings_ms;
    nlohmann::json result;
};

nlohmann::json to_json(const RunReport& r);
nlohmann::json to_json(const IsoResult& r);
nlohmann::json to_json(const HuntReport& r);
nlohmann::json to_json(const BenchReport& r);

/// JSON array of "num/den" strings.
nlohmann::json topo_index_json(const std::vector<Rational>& index);

}  // namespace giso

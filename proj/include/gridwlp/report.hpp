#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridwlp/ideals.hpp"
#include "gridwlp/lefschetz.hpp"

namespace gridwlp {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& name);

/// Explicit integer grid, as accepted by --params and the grid JSON schema
/// {a, b, u:[...], v:[...], prime}.
struct GridSpec {
    std::vector<std::int64_t> u;
    std::vector<std::int64_t> v;
    std::uint64_t prime = 0;  // 0: unspecified or rational

    int a() const { return static_cast<int>(u.size()); }
    int b() const { return static_cast<int>(v.size()); }
};

/// "u=1,2,3;v=1,2,3,4", or a JSON object in the grid schema.
GridSpec parse_grid_spec(const std::string& text);
Json to_json(const GridSpec& spec);

Json to_json(const GridSummary& grid);
Json to_json(const MultMapReport& r);
Json to_json(const WlpReport& r);
Json to_json(const ProbeReport& r);
Json to_json(const BxSequence& s);
Json to_json(const HilbertTable& h);

std::string to_csv(const WlpReport& r);
std::string to_csv(const ProbeReport& r);
std::string to_table(const WlpReport& r);
std::string to_table(const ProbeReport& r);
std::string to_table(const HilbertTable& h);

}  // namespace gridwlp

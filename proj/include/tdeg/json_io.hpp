#ifndef TDEG_JSON_IO_HPP
#define TDEG_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <tdeg/config.hpp>
#include <tdeg/degrees.hpp>
#include <tdeg/pohozaev.hpp>
#include <tdeg/series.hpp>

namespace tdeg
{

using json = nlohmann::json;

// Parses the problem schema
//   {"chi": int, "cartan": "A2"|"B2"|"G2", "truncation": int,
//    "points": [{"label": str, "alpha1": int, "alpha2": int}, ...]}
// All keys are optional; truncation defaults to 32. Syntax errors are
// reported as "<source>:<line>:<column>: ..." in a ConfigError.
ProblemConfig parse_config(std::string_view text, std::string_view source = "<stdin>");
ProblemConfig config_from_json(const json &j);
json to_json(const ProblemConfig &config);

// Decimal-string coefficients, lowest degree first.
json series_to_json(const TruncatedSeries &s);
TruncatedSeries series_from_json(const json &j);

// An exact integer as a JSON number when it fits in 64 bits, otherwise as
// a decimal string.
json integer_to_json(const BigInt &v);

json to_json(const DegreeTable &table);
json to_json(const std::vector<LocalMassPair> &masses);
json to_json(const ScenarioReport &report);
json to_json(const GapReport &report);

} // namespace tdeg

#endif

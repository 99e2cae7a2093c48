#include <tdeg/json_io.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>

#include <tdeg/errors.hpp>

namespace tdeg
{

namespace
{

std::string location(std::string_view text, std::size_t byte, std::string_view source)
{
    // nlohmann reports the 1-based offset of the last byte read.
    const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col);
}

int get_int(const json &obj, const char *key, const std::string &path)
{
    const auto &v = obj.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(path + "." + key + ": expected an integer");
    }
    const auto x = v.get<std::int64_t>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw ConfigError(path + "." + key + ": integer out of range");
    }
    return static_cast<int>(x);
}

} // namespace

ProblemConfig parse_config(std::string_view text, std::string_view source)
{
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::string what = e.what();
        // Drop the "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
        if (auto pos = what.find(": "); pos != std::string::npos) {
            what = what.substr(pos + 2);
        }
        throw ConfigError(location(text, e.byte, source) + ": malformed JSON: " + what);
    }
    return config_from_json(j);
}

ProblemConfig config_from_json(const json &j)
{
    if (!j.is_object()) {
        throw ConfigError("$: expected a JSON object");
    }
    static const char *const known[] = {"chi", "cartan", "truncation", "points"};
    for (const auto &[key, _] : j.items()) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw ConfigError("$." + key + ": unknown key");
        }
    }

    std::optional<int> chi;
    if (j.contains("chi")) {
        chi = get_int(j, "chi", "$");
    }
    std::optional<CartanMatrix> cartan;
    if (j.contains("cartan")) {
        if (!j["cartan"].is_string()) {
            throw ConfigError("$.cartan: expected \"A2\", \"B2\" or \"G2\"");
        }
        cartan = CartanMatrix(parse_cartan_kind(j["cartan"].get<std::string>()));
    }
    int truncation = default_truncation;
    if (j.contains("truncation")) {
        truncation = get_int(j, "truncation", "$");
    }
    std::vector<SingularPoint> points;
    if (j.contains("points")) {
        const auto &arr = j["points"];
        if (!arr.is_array()) {
            throw ConfigError("$.points: expected an array");
        }
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto path = "$.points[" + std::to_string(i) + "]";
            const auto &p = arr[i];
            if (!p.is_object()) {
                throw ConfigError(path + ": expected an object");
            }
            SingularPoint sp;
            if (!p.contains("label") || !p["label"].is_string()) {
                throw ConfigError(path + ".label: expected a string");
            }
            sp.label = p["label"].get<std::string>();
            sp.alpha1 = p.contains("alpha1") ? get_int(p, "alpha1", path) : 0;
            sp.alpha2 = p.contains("alpha2") ? get_int(p, "alpha2", path) : 0;
            points.push_back(std::move(sp));
        }
    }
    return ProblemConfig(chi, std::move(points), cartan, truncation);
}

json to_json(const ProblemConfig &config)
{
    json j = json::object();
    if (config.has_chi()) {
        j["chi"] = config.chi();
    }
    if (config.has_cartan()) {
        j["cartan"] = std::string(to_string(config.cartan().kind()));
    }
    j["truncation"] = config.truncation();
    j["points"] = json::array();
    for (const auto &p : config.points()) {
        j["points"].push_back({{"label", p.label}, {"alpha1", p.alpha1}, {"alpha2", p.alpha2}});
    }
    return j;
}

json series_to_json(const TruncatedSeries &s)
{
    json arr = json::array();
    for (const auto &c : s.coeffs()) {
        arr.push_back(c.str());
    }
    return arr;
}

TruncatedSeries series_from_json(const json &j)
{
    if (!j.is_array() || j.empty()) {
        throw ConfigError("series: expected a nonempty array of decimal strings");
    }
    std::vector<BigInt> coeffs;
    for (const auto &v : j) {
        if (!v.is_string()) {
            throw ConfigError("series: coefficients must be decimal strings");
        }
        try {
            coeffs.emplace_back(v.get<std::string>());
        } catch (const std::exception &) {
            throw ConfigError("series: '" + v.get<std::string>() + "' is not a decimal integer");
        }
    }
    const int n = static_cast<int>(coeffs.size()) - 1;
    return TruncatedSeries(std::move(coeffs), n);
}

json integer_to_json(const BigInt &v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

json to_json(const DegreeTable &table)
{
    json coeffs = json::array();
    for (const auto &c : table.series.coeffs()) {
        coeffs.push_back(integer_to_json(c));
    }
    const auto top = table.series.top_nonzero();
    return {{"interval_unit", std::string(to_string(table.interval_unit))},
            {"coefficients", std::move(coeffs)},
            {"series", series_to_json(table.series)},
            {"top_nonzero", top ? json(*top) : json(nullptr)},
            {"warnings", table.warnings}};
}

json to_json(const std::vector<LocalMassPair> &masses)
{
    json arr = json::array();
    for (const auto &m : masses) {
        arr.push_back({{"sigma1", m.sigma1}, {"sigma2", m.sigma2}});
    }
    return arr;
}

json to_json(const ScenarioReport &report)
{
    return {{"k21", report.k21},
            {"alpha", report.alpha},
            {"admissible_sigma", report.admissible_sigma},
            {"sigma_within_alpha_bound", report.sigma_within_alpha_bound},
            {"admissible_cluster_sizes", report.admissible_cluster_sizes},
            {"blow_up_at_origin_allowed", report.blow_up_at_origin_allowed},
            {"blow_up_at_e_allowed", report.blow_up_at_e_allowed}};
}

json to_json(const GapReport &report)
{
    json residuals = json::array();
    for (const auto &r : report.residuals) {
        residuals.push_back(integer_to_json(r));
    }
    return {{"ok", report.ok()}, {"residuals", std::move(residuals)}, {"warnings", report.warnings}};
}

} // namespace tdeg

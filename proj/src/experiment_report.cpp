#include "cesaro/experiment_report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "cesaro/serialization.hpp"

namespace cesaro {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "consistent") return Verdict::Consistent;
    if (s == "inconsistent") return Verdict::Inconsistent;
    if (s == "inconclusive") return Verdict::Inconclusive;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

void ExperimentReport::push(double index, double value)
{
    series.push_back({index, value});
}

void ExperimentReport::push(const std::string& series_name, double index, double value)
{
    extra[series_name].push_back({index, value});
}

namespace {

void check_increasing(const std::vector<SeriesPoint>& s, const std::string& what)
{
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i].index > s[i - 1].index)) {
            throw std::logic_error(what + ": series indices must be strictly increasing");
        }
    }
}

nlohmann::json series_json(const std::vector<SeriesPoint>& s)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : s) {
        nlohmann::json v = std::isfinite(p.value) ? nlohmann::json(p.value) : nlohmann::json(format_number(p.value));
        a.push_back({{"index", p.index}, {"value", v}});
    }
    return a;
}

std::vector<SeriesPoint> series_from_json(const nlohmann::json& a)
{
    std::vector<SeriesPoint> s;
    for (const auto& p : a) {
        const auto& v = p.at("value");
        double value = v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
        s.push_back({p.at("index").get<double>(), value});
    }
    return s;
}

nlohmann::json space_json(const SpaceSpec& s)
{
    nlohmann::json j = {{"name", s.name()}, {"key", s.key()}};
    if (s.is_lp()) {
        j["p"] = s.p;
        j["q"] = s.q();
    }
    return j;
}

} // namespace

void ExperimentReport::validate() const
{
    if (experiment_id.empty()) throw std::logic_error("experiment report without an id");
    check_increasing(series, experiment_id);
    for (const auto& [name, s] : extra) check_increasing(s, experiment_id + "/" + name);
    if (!(tolerance > 0.0)) throw std::logic_error(experiment_id + ": tolerance must be recorded");
}

nlohmann::json to_json(const ExperimentReport& r)
{
    r.validate();
    nlohmann::json extra = nlohmann::json::object();
    for (const auto& [name, s] : r.extra) extra[name] = series_json(s);
    nlohmann::json metrics = nlohmann::json::object();
    for (const auto& [name, v] : r.metrics) {
        metrics[name] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(format_number(v));
    }
    return {{"experiment_id", r.experiment_id},
            {"space", space_json(r.space)},
            {"parameters", r.parameters},
            {"series", series_json(r.series)},
            {"extra", extra},
            {"metrics", metrics},
            {"verdict", to_string(r.verdict)},
            {"tolerance", r.tolerance},
            {"provenance", r.provenance},
            {"notes", r.notes}};
}

ExperimentReport experiment_report_from_json(const nlohmann::json& j)
{
    ExperimentReport r;
    r.experiment_id = j.at("experiment_id").get<std::string>();
    const auto& sp = j.at("space");
    r.space = SpaceSpec::parse(sp.at("key").get<std::string>(), sp.value("p", 2.0));
    r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    r.series = series_from_json(j.at("series"));
    for (const auto& [name, s] : j.at("extra").items()) r.extra[name] = series_from_json(s);
    for (const auto& [name, v] : j.at("metrics").items()) {
        r.metrics[name] = v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
    }
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.tolerance = j.at("tolerance").get<double>();
    r.provenance = j.at("provenance").get<std::string>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.validate();
    return r;
}

std::string series_csv(const ExperimentReport& r)
{
    std::string out = "n,value\n";
    for (const auto& p : r.series) {
        out += format_number(p.index) + ',' + format_number(p.value) + '\n';
    }
    return out;
}

std::string report_stem(const std::string& experiment_id, bool seedless)
{
    if (seedless) return experiment_id + "-seedless";
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return experiment_id + "-" + buf;
}

std::filesystem::path write_report(const ExperimentReport& r, const std::filesystem::path& dir, bool seedless)
{
    std::filesystem::create_directories(dir);
    const std::string stem = report_stem(r.experiment_id, seedless);
    const auto json_path = dir / (stem + ".json");
    {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path.string());
        out << to_json(r).dump(2) << '\n';
    }
    std::ofstream csv(dir / (stem + ".csv"));
    if (!csv) throw std::runtime_error("cannot write CSV next to " + json_path.string());
    csv << series_csv(r);
    return json_path;
}

} // namespace cesaro

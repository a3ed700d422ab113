#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cesaro/space.hpp"

namespace cesaro {

enum class Verdict { Consistent, Inconsistent, Inconclusive };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct SeriesPoint {
    double index = 0.0;
    double value = 0.0;
};

/// Record of one experiment run. `series` indices are strictly increasing;
/// `extra` holds named side series (per-j sweeps and the like).
struct ExperimentReport {
    std::string experiment_id;
    SpaceSpec space;
    std::map<std::string, std::string> parameters;
    std::vector<SeriesPoint> series;
    std::map<std::string, std::vector<SeriesPoint>> extra;
    std::map<std::string, double> metrics;
    Verdict verdict = Verdict::Inconclusive;
    double tolerance = 1e-4;
    std::string provenance; // the claim being reproduced, in words
    std::vector<std::string> notes;

    void push(double index, double value);
    void push(const std::string& series_name, double index, double value);
    void validate() const;
};

nlohmann::json to_json(const ExperimentReport& r);
ExperimentReport experiment_report_from_json(const nlohmann::json& j);

/// Header `n,value`, one row per series point.
std::string series_csv(const ExperimentReport& r);

/// "<id>-<UTC timestamp>" or "<id>-seedless".
std::string report_stem(const std::string& experiment_id, bool seedless);

/// Writes <stem>.json and <stem>.csv into `dir`; returns the JSON path.
std::filesystem::path write_report(const ExperimentReport& r, const std::filesystem::path& dir, bool seedless);

} // namespace cesaro

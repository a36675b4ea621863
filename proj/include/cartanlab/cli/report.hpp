#pragma once

#include <chrono>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartanlab/cli/config.hpp"

namespace cartan::cli {

using Json = nlohmann::ordered_json;

// Shortest decimal text that parses back to the same double.
std::string shortest(double x);

// Writes <out>/<experiment>.jsonl (config record, one record per trial,
// summary record), <out>/<experiment>.csv and <out>/<experiment>.meta.json.
// Only the meta file carries wall-clock data, so the other two are
// reproducible byte for byte.
class RunReport {
public:
    RunReport(std::string out_dir, std::string experiment, ParamList params, std::vector<std::string> csv_columns);
    ~RunReport();
    RunReport(const RunReport&) = delete;
    RunReport& operator=(const RunReport&) = delete;

    void trial(Json record);
    void row(const std::vector<std::string>& cells);
    void property(const std::string& name, bool holds, const std::string& detail = {});
    // Writes the summary and meta; returns the exit code (0 or 1).
    int finish();

    bool all_hold() const noexcept { return failed_ == 0; }
    const std::string& jsonl_path() const noexcept { return jsonl_path_; }
    const std::string& csv_path() const noexcept { return csv_path_; }
    const std::string& meta_path() const noexcept { return meta_path_; }

private:
    std::string experiment_;
    ParamList params_;
    std::string jsonl_path_, csv_path_, meta_path_;
    std::ofstream jsonl_, csv_;
    std::size_t columns_ = 0;
    long trials_ = 0;
    int failed_ = 0;
    Json properties_ = Json::array();
    bool finished_ = false;
    std::chrono::system_clock::time_point started_;
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace cartan::cli

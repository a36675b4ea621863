#include "cartanlab/cli/report.hpp"

#include <charconv>
#include <ctime>
#include <stdexcept>
#include <filesystem>

#include "cartanlab/simd/kernels.hpp"

namespace cartan::cli {
namespace {

std::string utc(std::chrono::system_clock::time_point t) {
    const std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write " + path);
    return f;
}

}  // namespace

std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

RunReport::RunReport(std::string out_dir, std::string experiment, ParamList params,
                     std::vector<std::string> csv_columns)
    : experiment_(std::move(experiment)),
      params_(std::move(params)),
      columns_(csv_columns.size()),
      started_(std::chrono::system_clock::now()),
      t0_(std::chrono::steady_clock::now()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + out_dir + ": " + ec.message());
    const auto base = std::filesystem::path(out_dir) / experiment_;
    jsonl_path_ = base.string() + ".jsonl";
    csv_path_ = base.string() + ".csv";
    meta_path_ = base.string() + ".meta.json";
    jsonl_ = open_out(jsonl_path_);
    csv_ = open_out(csv_path_);
    Json cfg;
    cfg["record"] = "config";
    cfg["experiment"] = experiment_;
    Json p = Json::object();
    for (const auto& [k, v] : params_) p[k] = v;
    cfg["params"] = p;
    jsonl_ << cfg.dump() << '\n';
    row(csv_columns);
}

RunReport::~RunReport() {
    if (!finished_) {
        try {
            finish();
        } catch (...) {
        }
    }
}

void RunReport::trial(Json record) {
    Json r;
    r["record"] = "trial";
    r["index"] = trials_++;
    for (auto& [k, v] : record.items()) r[k] = v;
    jsonl_ << r.dump() << '\n';
}

void RunReport::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::logic_error("RunReport::row: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) csv_ << (i ? "," : "") << csv_cell(cells[i]);
    csv_ << '\n';
}

void RunReport::property(const std::string& name, bool holds, const std::string& detail) {
    if (!holds) ++failed_;
    Json p;
    p["name"] = name;
    p["holds"] = holds;
    if (!detail.empty()) p["detail"] = detail;
    properties_.push_back(std::move(p));
}

int RunReport::finish() {
    finished_ = true;
    const int code = failed_ == 0 ? 0 : 1;
    Json s;
    s["record"] = "summary";
    s["experiment"] = experiment_;
    s["trials"] = trials_;
    s["properties"] = properties_;
    s["verdict"] = code == 0 ? "pass" : "fail";
    jsonl_ << s.dump() << '\n';
    jsonl_.close();
    csv_.close();
    const auto now = std::chrono::system_clock::now();
    Json m;
    m["experiment"] = experiment_;
    m["started_utc"] = utc(started_);
    m["finished_utc"] = utc(now);
    m["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    m["simd"] = std::string(simd::level_name(simd::active().level));
    m["exit_code"] = code;
    m["jsonl"] = jsonl_path_;
    m["csv"] = csv_path_;
    auto meta = open_out(meta_path_);
    meta << m.dump(2) << '\n';
    return code;
}

}  // namespace cartan::cli

#include "cartanlab/cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace cartan::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double to_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw ConfigError("not a finite number: '" + s + "'");
    return v;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw ConfigError("not an integer: '" + s + "'");
    return v;
}

}  // namespace

void require(bool cond, const std::string& message) {
    if (!cond) throw ConfigError(message);
}

std::string default_out_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return (env && *env) ? env : "cartanlab-out";
}

std::vector<double> parse_real_grid(const std::string& text) {
    require(!text.empty(), "empty grid");
    std::vector<double> out;
    const auto parts = split(text, ':');
    if (parts.size() == 3) {
        const double a = to_real(parts[0]), b = to_real(parts[1]), h = to_real(parts[2]);
        require(h > 0 && b >= a, "grid a:b:step needs b >= a and step > 0");
        const long n = std::lround(std::floor((b - a) / h + 1e-9));
        require(n < 100000, "grid too long");
        for (long i = 0; i <= n; ++i) out.push_back(a + static_cast<double>(i) * h);
        return out;
    }
    require(parts.size() == 1, "grid must be a:b:step or a comma list");
    for (const auto& s : split(text, ',')) out.push_back(to_real(s));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    require(!text.empty(), "empty list");
    std::vector<int> out;
    for (const auto& s : split(text, ',')) out.push_back(to_int(s));
    return out;
}

Domain parse_domain(const std::string& name, int p, int q) {
    require(p >= 1 && q >= 1 && p <= 8 && q <= 8, "p and q must be in 1..8");
    if (name == "ball-I") return Domain::ball(p, q);
    if (name == "symmetric-II") return Domain::symmetric(p);
    if (name == "skew-III") {
        require(p >= 2, "skew-III needs p >= 2");
        return Domain::skew(p);
    }
    throw ConfigError("unknown domain '" + name + "' (ball-I, symmetric-II, skew-III)");
}

GroupType parse_group(const std::string& name) {
    if (name == "U") return GroupType::UPQ;
    if (name == "Sp") return GroupType::SP2N;
    if (name == "SO*") return GroupType::SOSTAR;
    throw ConfigError("unknown group '" + name + "' (U, Sp, SO*)");
}

PhaseModel parse_phase_model(const std::string& name) {
    if (name == "toeplitz") return PhaseModel::Toeplitz;
    if (name == "independent") return PhaseModel::Independent;
    throw ConfigError("unknown phase model '" + name + "' (toeplitz, independent)");
}

ProfileShape parse_profile_shape(const std::string& name) {
    if (name == "symmetric") return ProfileShape::Symmetric;
    if (name == "dual") return ProfileShape::Dual;
    throw ConfigError("unknown profile shape '" + name + "' (symmetric, dual)");
}

}  // namespace cartan::cli

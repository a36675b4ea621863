#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cartanlab/ball/group.hpp"
#include "cartanlab/kernel/kernel.hpp"
#include "cartanlab/trace/power_series.hpp"

namespace cartan::cli {

// Flag and config-file values that do not parse or are out of range.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Resolved parameters in declaration order, values as given or defaulted.
using ParamList = std::vector<std::pair<std::string, std::string>>;

inline constexpr const char* kOutDirEnv = "CARTANLAB_OUT_DIR";
std::string default_out_dir();

// "a:b:step" (inclusive, tolerant to rounding) or "x,y,z".
std::vector<double> parse_real_grid(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

Domain parse_domain(const std::string& name, int p, int q);
GroupType parse_group(const std::string& name);
PhaseModel parse_phase_model(const std::string& name);
ProfileShape parse_profile_shape(const std::string& name);

void require(bool cond, const std::string& message);

}  // namespace cartan::cli

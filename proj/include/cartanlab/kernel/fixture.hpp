#pragma once

#include <cstdint>
#include <string>

#include "cartanlab/kernel/gram.hpp"

namespace cartan {

// A frozen indefiniteness witness: the configuration, how it was drawn and
// the minimum eigenvalue observed when it was frozen.
struct WitnessFixture {
    Domain domain;
    double s = 0.0;
    std::uint64_t config_seed = 0;
    SamplerKind sampler = SamplerKind::Generic;
    int npoints = 0;
    double min_eigenvalue = 0.0;
    PointConfig config;
};

std::string write_witness_json(const WitnessFixture& w);
WitnessFixture read_witness_json(const std::string& text);
void save_witness(const std::string& path, const WitnessFixture& w);
WitnessFixture load_witness(const std::string& path);

std::string sampler_name(SamplerKind k);

}  // namespace cartan

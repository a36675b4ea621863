#include "cartanlab/kernel/fixture.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cartanlab/core/error.hpp"

namespace cartan {
namespace {

using nlohmann::json;

DomainType parse_type(const std::string& s) {
    for (DomainType t : {DomainType::BallI, DomainType::SymmetricII, DomainType::SkewIII, DomainType::Polydisc,
                         DomainType::FockSpace})
        if (domain_type_name(t) == s) return t;
    throw ContractError("fixture: unknown domain type " + s);
}

}  // namespace

std::string sampler_name(SamplerKind k) { return k == SamplerKind::Stencil ? "Stencil" : "Generic"; }

std::string write_witness_json(const WitnessFixture& w) {
    json j;
    j["domain"] = domain_type_name(w.domain.type);
    j["p"] = w.domain.p;
    j["q"] = w.domain.q;
    j["s"] = w.s;
    j["config_seed"] = w.config_seed;
    j["sampler"] = sampler_name(w.sampler);
    j["npoints"] = w.npoints;
    j["min_eigenvalue"] = w.min_eigenvalue;
    json pts = json::array();
    for (const auto& z : w.config.points) {
        json re = json::array(), im = json::array();
        for (auto x : z.entries()) {
            re.push_back(x.real());
            im.push_back(x.imag());
        }
        pts.push_back({{"rows", z.rows()}, {"cols", z.cols()}, {"re", re}, {"im", im}});
    }
    j["points"] = pts;
    return j.dump(2);
}

WitnessFixture read_witness_json(const std::string& text) {
    WitnessFixture w;
    try {
        const json j = json::parse(text);
        w.domain = {parse_type(j.at("domain").get<std::string>()), j.at("p").get<int>(), j.at("q").get<int>()};
        w.s = j.at("s").get<double>();
        w.config_seed = j.at("config_seed").get<std::uint64_t>();
        w.sampler = j.at("sampler").get<std::string>() == "Stencil" ? SamplerKind::Stencil : SamplerKind::Generic;
        w.npoints = j.at("npoints").get<int>();
        w.min_eigenvalue = j.at("min_eigenvalue").get<double>();
        w.config.seed = w.config_seed;
        for (const auto& p : j.at("points")) {
            const auto re = p.at("re").get<std::vector<double>>();
            const auto im = p.at("im").get<std::vector<double>>();
            if (re.size() != im.size()) throw ContractError("fixture: re/im length mismatch");
            std::vector<cplx> e;
            for (std::size_t i = 0; i < re.size(); ++i) e.emplace_back(re[i], im[i]);
            w.config.points.emplace_back(p.at("rows").get<std::size_t>(), p.at("cols").get<std::size_t>(), e);
        }
    } catch (const json::exception& e) {
        throw ContractError(std::string("fixture: malformed JSON: ") + e.what());
    }
    return w;
}

void save_witness(const std::string& path, const WitnessFixture& w) {
    std::ofstream out(path);
    if (!out) throw ContractError("fixture: cannot write " + path);
    out << write_witness_json(w) << '\n';
}

WitnessFixture load_witness(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("fixture: cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_witness_json(ss.str());
}

}  // namespace cartan

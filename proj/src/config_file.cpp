// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: secrecy rate optimization for IRS-assisted MIMOME wiretap channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irssec/config_file.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace irssec
{
namespace
{
std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(const std::string& v)
{
    double out = 0;
    const auto* end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || ptr != end)
        throw ConfigError("expected a number, got '" + v + "'");
    return out;
}

int to_int(const std::string& v)
{
    int out = 0;
    const auto* end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || ptr != end)
        throw ConfigError("expected an integer, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& v)
{
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ConfigError("expected true/false, got '" + v + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters()
{
    static const std::map<std::string, Setter> table = [] {
        std::map<std::string, Setter> t;
        auto geo_int = [&t](const std::string& k, int GeometryConfig::*f) {
            t[k] = [f](RunConfig& c, const std::string& v) { c.geometry.*f = to_int(v); };
        };
        auto geo_real = [&t](const std::string& k, double GeometryConfig::*f) {
            t[k] = [f](RunConfig& c, const std::string& v) { c.geometry.*f = to_double(v); };
        };
        geo_int("Nt", &GeometryConfig::Nt);
        geo_int("Nr", &GeometryConfig::Nr);
        geo_int("Ne", &GeometryConfig::Ne);
        geo_int("N", &GeometryConfig::N);
        geo_real("D", &GeometryConfig::D);
        geo_real("D_E", &GeometryConfig::D_E);
        geo_real("D_e", &GeometryConfig::D_E);
        geo_real("l_t", &GeometryConfig::l_t);
        geo_real("l_r", &GeometryConfig::l_r);
        geo_real("l_e", &GeometryConfig::l_e);
        geo_real("h_T", &GeometryConfig::h_T);
        geo_real("h_R", &GeometryConfig::h_R);
        geo_real("h_E", &GeometryConfig::h_E);
        geo_real("h_I", &GeometryConfig::h_I);
        geo_real("iota_a", &GeometryConfig::iota_a);
        geo_real("iota_b", &GeometryConfig::iota_b);
        geo_real("iota_e", &GeometryConfig::iota_e);
        geo_real("iota_i", &GeometryConfig::iota_i);
        geo_real("ι_a", &GeometryConfig::iota_a);
        geo_real("ι_b", &GeometryConfig::iota_b);
        geo_real("ι_e", &GeometryConfig::iota_e);
        geo_real("ι_i", &GeometryConfig::iota_i);
        geo_real("upsilon", &GeometryConfig::wavelength);
        geo_real("wavelength", &GeometryConfig::wavelength);
        geo_real("υ", &GeometryConfig::wavelength);
        geo_real("kappa", &GeometryConfig::kappa);
        geo_real("κ", &GeometryConfig::kappa);
        geo_real("epsilon", &GeometryConfig::epsilon);
        geo_real("ε", &GeometryConfig::epsilon);
        geo_real("sigma_b2", &GeometryConfig::sigma_b2);
        geo_real("sigma_e2", &GeometryConfig::sigma_e2);
        geo_real("σ_b²", &GeometryConfig::sigma_b2);
        geo_real("σ_e²", &GeometryConfig::sigma_e2);
        t["sigma_n2_dBW"] = [](RunConfig& c, const std::string& v) {
            c.geometry.sigma_b2 = c.geometry.sigma_e2 = dbw_to_watts(to_double(v));
        };
        t["eve_fspl_symmetric"] = [](RunConfig& c, const std::string& v) {
            c.geometry.eve_fspl_symmetric = to_bool(v);
        };
        t["max_iterations"] = [](RunConfig& c, const std::string& v) { c.bsm.max_iterations = to_int(v); };
        t["rel_tolerance"] = [](RunConfig& c, const std::string& v) { c.bsm.rel_tolerance = to_double(v); };
        t["guard_tolerance"] = [](RunConfig& c, const std::string& v) { c.bsm.guard_tolerance = to_double(v); };
        t["phase_init"] = [](RunConfig& c, const std::string& v) { c.bsm.phase_init = parse_phase_init(v); };
        t["P0"] = [](RunConfig& c, const std::string& v) { c.bsm.power_budget = to_double(v); };
        t["P0_watts"] = t["P0"];
        t["P0_dBm"] = [](RunConfig& c, const std::string& v) { c.bsm.power_budget = dbm_to_watts(to_double(v)); };
        return t;
    }();
    return table;
}

} // namespace

std::string to_string(PhaseInit init)
{
    return init == PhaseInit::AllOnes ? "all-ones" : "uniform-random";
}

PhaseInit parse_phase_init(const std::string& name)
{
    if (name == "all-ones")
        return PhaseInit::AllOnes;
    if (name == "uniform-random")
        return PhaseInit::UniformRandom;
    throw ConfigError("unknown phase_init '" + name + "'");
}

RunConfig parse_config(const std::string& text, RunConfig base)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        const auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        try
        {
            it->second(base, value);
        }
        catch (const ConfigError& e)
        {
            throw ConfigError("config line " + std::to_string(lineno) + " (" + key + "): " + e.what());
        }
    }
    base.geometry.validate();
    base.bsm.validate();
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

std::string format_config(const RunConfig& cfg)
{
    const GeometryConfig& g = cfg.geometry;
    std::ostringstream out;
    out.precision(17);
    out << "Nt = " << g.Nt << "\nNr = " << g.Nr << "\nNe = " << g.Ne << "\nN = " << g.N << '\n'
        << "D = " << g.D << "\nD_E = " << g.D_E << '\n'
        << "l_t = " << g.l_t << "\nl_r = " << g.l_r << "\nl_e = " << g.l_e << '\n'
        << "h_T = " << g.h_T << "\nh_R = " << g.h_R << "\nh_E = " << g.h_E << "\nh_I = " << g.h_I << '\n'
        << "iota_a = " << g.iota_a << "\niota_b = " << g.iota_b << "\niota_e = " << g.iota_e
        << "\niota_i = " << g.iota_i << '\n'
        << "upsilon = " << g.wavelength << "\nkappa = " << g.kappa << "\nepsilon = " << g.epsilon << '\n'
        << "sigma_b2 = " << g.sigma_b2 << "\nsigma_e2 = " << g.sigma_e2 << '\n'
        << "eve_fspl_symmetric = " << (g.eve_fspl_symmetric ? "true" : "false") << '\n'
        << "max_iterations = " << cfg.bsm.max_iterations << "\nrel_tolerance = " << cfg.bsm.rel_tolerance
        << "\nguard_tolerance = " << cfg.bsm.guard_tolerance << "\nphase_init = " << to_string(cfg.bsm.phase_init)
        << "\nP0 = " << cfg.bsm.power_budget << '\n';
    return out.str();
}

} // namespace irssec

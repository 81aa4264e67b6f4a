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

#include "irssec/results_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "irssec/config_file.hpp"

namespace irssec
{
namespace
{
using nlohmann::json;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json summary_json(const Summary& s)
{
    return {{"count", s.count}, {"mean_nats", s.mean}, {"stderr_nats", s.std_error},
            {"mean_bits", s.mean / std::numbers::ln2},
            {"min_nats", s.min}, {"max_nats", s.max}};
}

json geometry_json(const GeometryConfig& g)
{
    return {{"Nt", g.Nt},
            {"Nr", g.Nr},
            {"Ne", g.Ne},
            {"N", g.N},
            {"D", g.D},
            {"D_E", g.D_E},
            {"l_t", g.l_t},
            {"l_r", g.l_r},
            {"l_e", g.l_e},
            {"h_T", g.h_T},
            {"h_R", g.h_R},
            {"h_E", g.h_E},
            {"h_I", g.h_I},
            {"iota_a", g.iota_a},
            {"iota_b", g.iota_b},
            {"iota_e", g.iota_e},
            {"iota_i", g.iota_i},
            {"upsilon", g.wavelength},
            {"kappa", g.kappa},
            {"epsilon", g.epsilon},
            {"sigma_b2", g.sigma_b2},
            {"sigma_e2", g.sigma_e2},
            {"eve_fspl_symmetric", g.eve_fspl_symmetric}};
}

GeometryConfig geometry_from_json(const json& j)
{
    GeometryConfig g;
    g.Nt = j.at("Nt").get<int>();
    g.Nr = j.at("Nr").get<int>();
    g.Ne = j.at("Ne").get<int>();
    g.N = j.at("N").get<int>();
    g.D = j.at("D").get<double>();
    g.D_E = j.at("D_E").get<double>();
    g.l_t = j.at("l_t").get<double>();
    g.l_r = j.at("l_r").get<double>();
    g.l_e = j.at("l_e").get<double>();
    g.h_T = j.at("h_T").get<double>();
    g.h_R = j.at("h_R").get<double>();
    g.h_E = j.at("h_E").get<double>();
    g.h_I = j.at("h_I").get<double>();
    g.iota_a = j.at("iota_a").get<double>();
    g.iota_b = j.at("iota_b").get<double>();
    g.iota_e = j.at("iota_e").get<double>();
    g.iota_i = j.at("iota_i").get<double>();
    g.wavelength = j.at("upsilon").get<double>();
    g.kappa = j.at("kappa").get<double>();
    g.epsilon = j.at("epsilon").get<double>();
    g.sigma_b2 = j.at("sigma_b2").get<double>();
    g.sigma_e2 = j.at("sigma_e2").get<double>();
    g.eve_fspl_symmetric = j.at("eve_fspl_symmetric").get<bool>();
    return g;
}

json trial_json(const TrialResult& t)
{
    json j = {{"trial", t.trial}, {"ok", t.ok}};
    if (!t.ok)
    {
        j["error"] = t.error;
        return j;
    }
    j["Cs_nats"] = t.secrecy;
    j["iterations"] = t.iterations;
    j["converged"] = t.converged;
    j["Cs_no_irs_nats"] = t.no_irs ? json(*t.no_irs) : json(nullptr);
    j["Cs_random_phase_nats"] = t.random_phase ? json(*t.random_phase) : json(nullptr);
    if (!t.trace.empty())
    {
        json trace = json::array();
        for (const IterationRecord& r : t.trace)
            trace.push_back({{"k", r.iteration},
                             {"Cs_nats", r.secrecy},
                             {"CB_nats", r.bob},
                             {"CE_nats", r.eve},
                             {"objective_nats", r.objective}});
        j["trace"] = std::move(trace);
    }
    return j;
}

} // namespace

json spec_to_json(const ExperimentSpec& spec)
{
    return {{"kind", to_string(spec.kind)},
            {"geometry", geometry_json(spec.geometry)},
            {"bsm",
             {{"max_iterations", spec.bsm.max_iterations},
              {"rel_tolerance", spec.bsm.rel_tolerance},
              {"guard_tolerance", spec.bsm.guard_tolerance},
              {"phase_init", to_string(spec.bsm.phase_init)},
              {"P0_watts", spec.bsm.power_budget}}},
            {"P0_watts", spec.p0_watts},
            {"N_values", spec.n_values},
            {"Ne_values", spec.ne_values},
            {"trials", spec.trials},
            {"master_seed", spec.master_seed},
            {"baselines", {{"no_irs", spec.baseline_no_irs}, {"random_phase", spec.baseline_random_phase}}},
            {"keep_trials", spec.keep_trials},
            {"keep_traces", spec.keep_traces}};
}

ExperimentSpec spec_from_json(const json& j)
{
    ExperimentSpec spec;
    spec.kind = parse_experiment_kind(j.at("kind").get<std::string>());
    spec.geometry = geometry_from_json(j.at("geometry"));
    const json& b = j.at("bsm");
    spec.bsm.max_iterations = b.at("max_iterations").get<int>();
    spec.bsm.rel_tolerance = b.at("rel_tolerance").get<double>();
    spec.bsm.guard_tolerance = b.at("guard_tolerance").get<double>();
    spec.bsm.phase_init = parse_phase_init(b.at("phase_init").get<std::string>());
    spec.bsm.power_budget = b.at("P0_watts").get<double>();
    spec.p0_watts = j.at("P0_watts").get<std::vector<double>>();
    spec.n_values = j.at("N_values").get<std::vector<int>>();
    spec.ne_values = j.at("Ne_values").get<std::vector<int>>();
    spec.trials = j.at("trials").get<int>();
    spec.master_seed = j.at("master_seed").get<std::uint64_t>();
    spec.baseline_no_irs = j.at("baselines").at("no_irs").get<bool>();
    spec.baseline_random_phase = j.at("baselines").at("random_phase").get<bool>();
    spec.keep_trials = j.at("keep_trials").get<bool>();
    spec.keep_traces = j.at("keep_traces").get<bool>();
    return spec;
}

json results_to_json(const std::vector<ResultRecord>& records, const ExperimentSpec& spec, const EmitOptions& opts)
{
    json out;
    out["software"] = {{"name", kSoftwareName}, {"version", kSoftwareVersion}};
    out["spec"] = spec_to_json(spec);
    json points = json::array();
    for (const ResultRecord& r : records)
    {
        json p = {{"experiment", to_string(r.kind)},
                  {"N", r.point.N},
                  {"Ne", r.point.Ne},
                  {"P0_watts", r.point.p0_watts},
                  {"P0_dBm", watts_to_dbm(r.point.p0_watts)},
                  {"master_seed", r.master_seed},
                  {"trial_count", r.trial_count},
                  {"failures", r.failures},
                  {"Cs", summary_json(r.secrecy)},
                  {"Cs_no_irs", r.no_irs ? summary_json(*r.no_irs) : json(nullptr)},
                  {"Cs_random_phase", r.random_phase ? summary_json(*r.random_phase) : json(nullptr)}};
        if (!r.trials.empty())
        {
            json trials = json::array();
            for (const TrialResult& t : r.trials)
                trials.push_back(trial_json(t));
            p["trials"] = std::move(trials);
        }
        if (opts.include_timing)
            p["seconds"] = r.seconds;
        points.push_back(std::move(p));
    }
    out["points"] = std::move(points);
    return out;
}

void write_csv(const std::vector<ResultRecord>& records, std::ostream& out)
{
    out << "experiment,N,Ne,P0_watts,trial_count,failures,mean_Cs_nats,stderr_Cs_nats,mean_Cs_bits,"
           "mean_Cs_no_irs_nats,stderr_Cs_no_irs_nats,mean_Cs_random_phase_nats,stderr_Cs_random_phase_nats\n";
    for (const ResultRecord& r : records)
    {
        out << to_string(r.kind) << ',' << r.point.N << ',' << r.point.Ne << ',' << num(r.point.p0_watts) << ','
            << r.trial_count << ',' << r.failures << ',' << num(r.secrecy.mean) << ',' << num(r.secrecy.std_error)
            << ',' << num(r.secrecy.mean / std::numbers::ln2) << ',';
        if (r.no_irs)
            out << num(r.no_irs->mean) << ',' << num(r.no_irs->std_error);
        else
            out << ',';
        out << ',';
        if (r.random_phase)
            out << num(r.random_phase->mean) << ',' << num(r.random_phase->std_error);
        else
            out << ',';
        out << '\n';
    }
}

EmittedFiles emit_results(const std::vector<ResultRecord>& records, const ExperimentSpec& spec,
                          const std::string& dir, const EmitOptions& opts)
{
    namespace fs = std::filesystem;
    if (records.empty())
        throw std::invalid_argument("emit_results: no records to write");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("emit_results: cannot create '" + dir + "': " + ec.message());

    EmittedFiles files{(fs::path(dir) / "results.csv").string(), (fs::path(dir) / "results.json").string()};

    std::ofstream csv(files.csv, std::ios::binary);
    if (!csv)
        throw std::runtime_error("emit_results: cannot write '" + files.csv + "'");
    write_csv(records, csv);

    std::ofstream js(files.json, std::ios::binary);
    if (!js)
        throw std::runtime_error("emit_results: cannot write '" + files.json + "'");
    js << results_to_json(records, spec, opts).dump(2) << '\n';

    if (!csv.good() || !js.good())
        throw std::runtime_error("emit_results: write failed in '" + dir + "'");
    return files;
}

} // namespace irssec

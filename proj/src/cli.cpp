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

#include "irssec/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "irssec/config_file.hpp"
#include "irssec/harness.hpp"
#include "irssec/results_io.hpp"

namespace irssec
{
namespace
{
struct CliOptions
{
    std::string config;
    int trials = 0;
    std::uint64_t seed = 1;
    std::vector<double> p0_dbm;
    std::vector<double> p0_watts;
    std::vector<int> n;
    std::vector<int> ne;
    std::string out_dir;
    std::vector<std::string> baselines;
    bool bits = false;
    bool traces = false;
    bool per_trial = false;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CliOptions& o)
{
    cmd->add_option("--config", o.config, "key = value configuration file");
    cmd->add_option("--trials", o.trials, "channel realizations per point")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--p0-dbm", o.p0_dbm, "transmit power budget(s) in dBm")->delimiter(',');
    cmd->add_option("--p0-watts", o.p0_watts, "transmit power budget(s) in watts")->delimiter(',');
    cmd->add_option("--n", o.n, "IRS element counts")->delimiter(',');
    cmd->add_option("--ne", o.ne, "eavesdropper antenna counts")->delimiter(',');
    cmd->add_option("--out", o.out_dir, "directory for results.csv / results.json");
    cmd->add_option("--baselines", o.baselines, "no-irs,random-phase")
        ->delimiter(',')
        ->check(CLI::IsMember({"no-irs", "random-phase"}));
    cmd->add_flag("--bits", o.bits, "report rates in bits instead of nats");
    cmd->add_flag("--traces", o.traces, "store per-iteration traces");
    cmd->add_flag("--per-trial", o.per_trial, "store per-trial values");
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

std::string error_json(const std::string& type, const std::string& message)
{
    nlohmann::json j = {{"error", {{"type", type}, {"message", message}}}};
    return j.dump();
}

ExperimentSpec build_spec(ExperimentKind kind, const CliOptions& o)
{
    RunConfig cfg;
    if (!o.config.empty())
        cfg = load_config(o.config);

    ExperimentSpec spec;
    spec.kind = kind;
    spec.geometry = cfg.geometry;
    spec.bsm = cfg.bsm;
    spec.master_seed = o.seed;
    spec.trials = o.trials > 0 ? o.trials : 1;
    spec.n_values = o.n;
    spec.ne_values = o.ne;
    for (double d : o.p0_dbm)
        spec.p0_watts.push_back(dbm_to_watts(d));
    for (double w : o.p0_watts)
        spec.p0_watts.push_back(w);
    spec.baseline_no_irs = std::ranges::find(o.baselines, "no-irs") != o.baselines.end();
    spec.baseline_random_phase = std::ranges::find(o.baselines, "random-phase") != o.baselines.end();
    spec.keep_traces = o.traces || kind == ExperimentKind::Convergence;
    spec.keep_trials = o.per_trial;
    spec.output_dir = o.out_dir;

    if (kind == ExperimentKind::SweepN && spec.n_values.empty())
        throw ConfigError("sweep-n needs --n");
    if (kind == ExperimentKind::SweepNe && spec.ne_values.empty())
        throw ConfigError("sweep-ne needs --ne");
    if (kind == ExperimentKind::SweepPower && spec.p0_watts.empty())
        throw ConfigError("sweep-power needs --p0-dbm or --p0-watts");
    spec.validate();
    return spec;
}

void print_results(const std::vector<ResultRecord>& records, const ExperimentSpec& spec, bool bits,
                   std::ostream& out)
{
    const double scale = bits ? 1.0 / std::numbers::ln2 : 1.0;
    const char* unit = bits ? "bits" : "nats";
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %4s %4s %9s %6s %12s %12s", "experiment", "N", "Ne", "P0[dBm]", "trials",
                  "mean_Cs", "stderr");
    out << line;
    if (spec.baseline_no_irs)
        out << "     no_irs";
    if (spec.baseline_random_phase)
        out << "  rand_phase";
    out << "   (" << unit << ")\n";

    for (const ResultRecord& r : records)
    {
        std::snprintf(line, sizeof line, "%-12s %4d %4d %9.3f %6d %12.6f %12.6f", to_string(r.kind).c_str(),
                      r.point.N, r.point.Ne, watts_to_dbm(r.point.p0_watts), r.secrecy.count,
                      r.secrecy.mean * scale, r.secrecy.std_error * scale);
        out << line;
        if (r.no_irs)
        {
            std::snprintf(line, sizeof line, " %10.6f", r.no_irs->mean * scale);
            out << line;
        }
        if (r.random_phase)
        {
            std::snprintf(line, sizeof line, " %11.6f", r.random_phase->mean * scale);
            out << line;
        }
        if (r.failures)
            out << "  failures=" << r.failures;
        out << '\n';
    }

    if (spec.kind == ExperimentKind::Convergence)
    {
        for (const ResultRecord& r : records)
        {
            for (const TrialResult& t : r.trials)
            {
                out << "# trace N=" << r.point.N << " Ne=" << r.point.Ne << " trial=" << t.trial << '\n';
                for (const IterationRecord& rec : t.trace)
                {
                    std::snprintf(line, sizeof line, "%5d %.12f\n", rec.iteration, rec.secrecy * scale);
                    out << line;
                }
            }
        }
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Secrecy rate maximization for IRS-assisted MIMOME wiretap channels", "irs_secrecy"};
    app.require_subcommand(1);

    CliOptions opts;
    std::vector<std::pair<CLI::App*, ExperimentKind>> commands;
    for (ExperimentKind kind : {ExperimentKind::Single, ExperimentKind::Convergence, ExperimentKind::SweepN,
                                ExperimentKind::SweepNe, ExperimentKind::SweepPower})
    {
        CLI::App* cmd = app.add_subcommand(to_string(kind));
        add_common(cmd, opts);
        commands.emplace_back(cmd, kind);
    }
    commands[0].first->description("one point, averaged over --trials realizations");
    commands[1].first->description("per-iteration secrecy-rate traces");
    commands[2].first->description("sweep the IRS size (--n)");
    commands[3].first->description("sweep the eavesdropper antenna count (--ne)");
    commands[4].first->description("sweep the power budget (--p0-dbm / --p0-watts)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError& e)
    {
        err << error_json("usage", e.what()) << '\n';
        return 2;
    }

    ExperimentKind kind = ExperimentKind::Single;
    for (const auto& [cmd, k] : commands)
        if (cmd->parsed())
            kind = k;

    try
    {
        const ExperimentSpec spec = build_spec(kind, opts);
        RunOptions run;
        run.threads = opts.threads;
        const std::vector<ResultRecord> records = run_monte_carlo(spec, run);
        print_results(records, spec, opts.bits, out);
        if (!spec.output_dir.empty())
        {
            const EmittedFiles files = emit_results(records, spec, spec.output_dir);
            out << "wrote " << files.csv << '\n' << "wrote " << files.json << '\n';
        }
        return 0;
    }
    catch (const ConfigError& e)
    {
        err << error_json("config", e.what()) << '\n';
        return 2;
    }
    catch (const std::exception& e)
    {
        err << error_json("runtime", e.what()) << '\n';
        return 1;
    }
}

} // namespace irssec

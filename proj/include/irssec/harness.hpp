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

#ifndef IRSSEC_HARNESS_HPP
#define IRSSEC_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irssec/bsm.hpp"
#include "irssec/channel.hpp"

namespace irssec
{
enum class ExperimentKind
{
    Single,
    Convergence,
    SweepN,
    SweepNe,
    SweepPower,
};

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

/// A Monte Carlo experiment. The evaluated points are the cross product
/// Ne x N x P0; an empty list falls back to the geometry / BSM defaults.
struct ExperimentSpec
{
    ExperimentKind kind = ExperimentKind::Single;
    GeometryConfig geometry;
    BsmConfig bsm;
    std::vector<double> p0_watts;
    std::vector<int> n_values;
    std::vector<int> ne_values;
    int trials = 1;
    std::uint64_t master_seed = 1;
    bool baseline_no_irs = false;
    bool baseline_random_phase = false;
    bool keep_trials = false; // per-trial values in the JSON output
    bool keep_traces = false; // per-trial iteration traces in the JSON output
    std::string output_dir;

    void validate() const;
};

bool same_spec(const ExperimentSpec& a, const ExperimentSpec& b);

struct SweepPoint
{
    int N = 0;
    int Ne = 0;
    double p0_watts = 0;
};

std::vector<SweepPoint> sweep_points(const ExperimentSpec& spec);

struct TrialResult
{
    std::uint64_t trial = 0;
    bool ok = false;
    std::string error;
    double secrecy = 0;
    int iterations = 0;
    bool converged = false;
    std::optional<double> no_irs;
    std::optional<double> random_phase;
    std::vector<IterationRecord> trace;
    double seconds = 0;
};

struct Summary
{
    int count = 0;
    double mean = 0;
    double std_error = 0;
    double min = 0;
    double max = 0;
};

Summary summarize(const std::vector<double>& values);

struct ResultRecord
{
    ExperimentKind kind = ExperimentKind::Single;
    SweepPoint point;
    std::uint64_t master_seed = 0;
    int trial_count = 0;
    int failures = 0;
    Summary secrecy;
    std::optional<Summary> no_irs;
    std::optional<Summary> random_phase;
    std::vector<TrialResult> trials;
    double seconds = 0;
};

/// Covariance-only iteration on the direct links (IRS removed).
double baseline_no_irs(const ChannelSet<double>& ch, const BsmConfig& cfg);

/// Covariance-only iteration with the phases fixed at their random initial value.
IterationTrace<double> random_phase_run(const ChannelSet<double>& ch, const BsmConfig& cfg, const Seed& seed);
double baseline_random_phase(const ChannelSet<double>& ch, const BsmConfig& cfg, const Seed& seed);

/// One trial at one sweep point. Channels come from Seed{master, trial}. When
/// the random-phase baseline is enabled, BSM is warm-started from its result.
TrialResult run_trial(const ExperimentSpec& spec, const SweepPoint& point, std::uint64_t trial);

struct RunOptions
{
    unsigned threads = 0; // 0: hardware concurrency
    std::function<void(std::size_t done, std::size_t total)> progress;
};

std::vector<ResultRecord> run_monte_carlo(const ExperimentSpec& spec, const RunOptions& opts = {});

} // namespace irssec

#endif // IRSSEC_HARNESS_HPP

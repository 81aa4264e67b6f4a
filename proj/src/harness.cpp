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

#include "irssec/harness.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace irssec
{
std::string to_string(ExperimentKind kind)
{
    switch (kind)
    {
    case ExperimentKind::Single:
        return "single";
    case ExperimentKind::Convergence:
        return "convergence";
    case ExperimentKind::SweepN:
        return "sweep-n";
    case ExperimentKind::SweepNe:
        return "sweep-ne";
    case ExperimentKind::SweepPower:
        return "sweep-power";
    }
    return "single";
}

ExperimentKind parse_experiment_kind(const std::string& name)
{
    for (ExperimentKind k : {ExperimentKind::Single, ExperimentKind::Convergence, ExperimentKind::SweepN,
                             ExperimentKind::SweepNe, ExperimentKind::SweepPower})
    {
        if (to_string(k) == name)
            return k;
    }
    throw ConfigError("unknown experiment kind '" + name + "'");
}

void ExperimentSpec::validate() const
{
    geometry.validate();
    bsm.validate();
    if (trials < 1)
        throw ConfigError("trials must be >= 1");
    for (double p : p0_watts)
        if (!(p > 0.0) || !std::isfinite(p))
            throw ConfigError("power values must be positive");
    for (int n : n_values)
        if (n < 0)
            throw ConfigError("N values must be >= 0");
    for (int ne : ne_values)
        if (ne < 1)
            throw ConfigError("Ne values must be >= 1");
}

bool same_spec(const ExperimentSpec& a, const ExperimentSpec& b)
{
    return a.kind == b.kind && a.geometry == b.geometry && a.bsm.max_iterations == b.bsm.max_iterations &&
           a.bsm.rel_tolerance == b.bsm.rel_tolerance && a.bsm.phase_init == b.bsm.phase_init &&
           a.bsm.guard_tolerance == b.bsm.guard_tolerance && a.bsm.power_budget == b.bsm.power_budget &&
           a.p0_watts == b.p0_watts && a.n_values == b.n_values && a.ne_values == b.ne_values &&
           a.trials == b.trials && a.master_seed == b.master_seed && a.baseline_no_irs == b.baseline_no_irs &&
           a.baseline_random_phase == b.baseline_random_phase && a.keep_trials == b.keep_trials &&
           a.keep_traces == b.keep_traces;
}

std::vector<SweepPoint> sweep_points(const ExperimentSpec& spec)
{
    const std::vector<int> ne = spec.ne_values.empty() ? std::vector<int>{spec.geometry.Ne} : spec.ne_values;
    const std::vector<int> n = spec.n_values.empty() ? std::vector<int>{spec.geometry.N} : spec.n_values;
    const std::vector<double> p0 =
        spec.p0_watts.empty() ? std::vector<double>{spec.bsm.power_budget} : spec.p0_watts;

    std::vector<SweepPoint> out;
    out.reserve(ne.size() * n.size() * p0.size());
    for (int e : ne)
        for (int k : n)
            for (double p : p0)
                out.push_back({k, e, p});
    return out;
}

Summary summarize(const std::vector<double>& values)
{
    Summary s;
    s.count = static_cast<int>(values.size());
    if (values.empty())
        return s;
    double sum = 0;
    s.min = values.front();
    s.max = values.front();
    for (double v : values)
    {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / s.count;
    if (s.count > 1)
    {
        double ss = 0;
        for (double v : values)
            ss += (v - s.mean) * (v - s.mean);
        s.std_error = std::sqrt(ss / (s.count - 1) / s.count);
    }
    // Keep mean inside [min, max] despite summation roundoff.
    s.mean = std::clamp(s.mean, s.min, s.max);
    return s;
}

double baseline_no_irs(const ChannelSet<double>& ch, const BsmConfig& cfg)
{
    const ChannelSet<double> direct = ch.without_irs();
    auto cov = InputCovariance<double>::scaled_identity(direct.num_tx(), cfg.power_budget);
    return run_bsm_from(direct, cfg, PhaseVector<double>(), std::move(cov)).final_secrecy();
}

IterationTrace<double> random_phase_run(const ChannelSet<double>& ch, const BsmConfig& cfg, const Seed& seed)
{
    BsmConfig fixed = cfg;
    fixed.update_phases = false;
    auto [theta, cov] = init_point(cfg, ch, seed);
    return run_bsm_from(ch, fixed, std::move(theta), std::move(cov));
}

double baseline_random_phase(const ChannelSet<double>& ch, const BsmConfig& cfg, const Seed& seed)
{
    BsmConfig random = cfg;
    random.phase_init = PhaseInit::UniformRandom;
    return random_phase_run(ch, random, seed).final_secrecy();
}

TrialResult run_trial(const ExperimentSpec& spec, const SweepPoint& point, std::uint64_t trial)
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    TrialResult out;
    out.trial = trial;
    try
    {
        GeometryConfig geo = spec.geometry;
        geo.N = point.N;
        geo.Ne = point.Ne;
        BsmConfig cfg = spec.bsm;
        cfg.power_budget = point.p0_watts;
        const Seed seed{spec.master_seed, trial};

        const ChannelSet<double> ch = draw_channels(geo, seed);
        auto [theta, cov] = init_point(cfg, ch, seed);

        IterationTrace<double> trace;
        if (spec.baseline_random_phase)
        {
            BsmConfig fixed = cfg;
            fixed.update_phases = false;
            IterationTrace<double> rp = run_bsm_from(ch, fixed, theta, cov);
            out.random_phase = rp.final_secrecy();
            trace = run_bsm_from(ch, cfg, std::move(theta), std::move(rp.covariance));
        }
        else
        {
            trace = run_bsm_from(ch, cfg, std::move(theta), std::move(cov));
        }

        out.secrecy = trace.final_secrecy();
        out.iterations = trace.iterations();
        out.converged = trace.converged;
        if (spec.keep_traces)
            out.trace = trace.records;
        if (spec.baseline_no_irs)
            out.no_irs = baseline_no_irs(ch, cfg);
        out.ok = true;
    }
    catch (const std::exception& e)
    {
        out.ok = false;
        out.error = e.what();
    }
    out.seconds = std::chrono::duration<double>(clock::now() - start).count();
    return out;
}

std::vector<ResultRecord> run_monte_carlo(const ExperimentSpec& spec, const RunOptions& opts)
{
    spec.validate();
    const std::vector<SweepPoint> points = sweep_points(spec);
    const std::size_t trials = static_cast<std::size_t>(spec.trials);
    const std::size_t total = points.size() * trials;

    std::vector<TrialResult> results(total);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    auto worker = [&] {
        for (std::size_t task = next++; task < total; task = next++)
        {
            results[task] = run_trial(spec, points[task / trials], task % trials);
            const std::size_t finished = ++done;
            if (opts.progress)
            {
                std::lock_guard<std::mutex> lock(progress_mutex);
                opts.progress(finished, total);
            }
        }
    };

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
    if (threads <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    // Aggregation walks trials in index order, so scheduling never changes the output.
    std::vector<ResultRecord> records;
    records.reserve(points.size());
    for (std::size_t p = 0; p < points.size(); ++p)
    {
        ResultRecord rec;
        rec.kind = spec.kind;
        rec.point = points[p];
        rec.master_seed = spec.master_seed;
        rec.trial_count = spec.trials;

        std::vector<double> bsm, no_irs, random;
        for (std::size_t t = 0; t < trials; ++t)
        {
            TrialResult& r = results[p * trials + t];
            rec.seconds += r.seconds;
            if (!r.ok)
            {
                ++rec.failures;
            }
            else
            {
                bsm.push_back(r.secrecy);
                if (r.no_irs)
                    no_irs.push_back(*r.no_irs);
                if (r.random_phase)
                    random.push_back(*r.random_phase);
            }
            if (spec.keep_trials || spec.keep_traces || !r.ok)
                rec.trials.push_back(std::move(r));
        }
        rec.secrecy = summarize(bsm);
        if (spec.baseline_no_irs)
            rec.no_irs = summarize(no_irs);
        if (spec.baseline_random_phase)
            rec.random_phase = summarize(random);
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace irssec

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

#ifndef IRSSEC_BSM_HPP
#define IRSSEC_BSM_HPP

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "irssec/cov_opt.hpp"
#include "irssec/phase_opt.hpp"
#include "irssec/rates.hpp"
#include "irssec/rng.hpp"

namespace irssec
{
enum class PhaseInit
{
    AllOnes,
    UniformRandom,
};

struct BsmConfig
{
    int max_iterations = 500;
    double rel_tolerance = 1e-6;
    PhaseInit phase_init = PhaseInit::UniformRandom;
    double guard_tolerance = 1e-8;
    double power_budget = 0.31622776601683794; // 25 dBm
    bool update_phases = true; // false: covariance-only iteration at fixed phases
    CovOptions cov;

    void validate() const
    {
        if (max_iterations < 1)
            throw ConfigError("BsmConfig: max_iterations must be >= 1");
        if (!(rel_tolerance > 0) || !(guard_tolerance > 0))
            throw ConfigError("BsmConfig: tolerances must be positive");
        if (!(power_budget > 0))
            throw ConfigError("BsmConfig: power budget must be positive");
    }
};

struct IterationRecord
{
    int iteration = 0;
    double secrecy = 0; // clamped C_s
    double bob = 0;
    double eve = 0;
    double objective = 0; // C_B - C_E
    double elapsed_seconds = 0;
};

template <typename Real>
struct IterationTrace
{
    std::vector<IterationRecord> records;
    PhaseVector<Real> phases;
    InputCovariance<Real> covariance;
    bool converged = false;
    int grid_fallbacks = 0;

    double final_secrecy() const { return records.empty() ? 0.0 : records.back().secrecy; }
    double final_objective() const { return records.empty() ? 0.0 : records.back().objective; }
    int iterations() const { return records.empty() ? 0 : records.back().iteration; }
};

template <typename Real>
std::pair<PhaseVector<Real>, InputCovariance<Real>> init_point(const BsmConfig& cfg, const ChannelSet<Real>& ch,
                                                               const Seed& seed)
{
    const Eigen::Index n = ch.num_elements();
    PhaseVector<Real> theta = PhaseVector<Real>::all_ones(n);
    if (cfg.phase_init == PhaseInit::UniformRandom)
    {
        auto engine = make_engine(seed, Stream::PhaseInit);
        std::uniform_real_distribution<Real> angle(Real(0), Real(2) * std::numbers::pi_v<Real>);
        for (Eigen::Index i = 0; i < n; ++i)
            theta.set_angle(i, angle(engine));
    }
    return {std::move(theta), InputCovariance<Real>::scaled_identity(ch.num_tx(), Real(cfg.power_budget))};
}

/// Block successive maximization from a given feasible point: each outer
/// iteration sweeps every phase (exact maximization), then updates X by
/// maximizing the surrogate. Stops when the relative change of C_B - C_E
/// falls below cfg.rel_tolerance or at the iteration cap.
template <typename Real>
IterationTrace<Real> run_bsm_from(const ChannelSet<Real>& ch, const BsmConfig& cfg, PhaseVector<Real> theta,
                                  InputCovariance<Real> cov)
{
    cfg.validate();
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const Real p0 = Real(cfg.power_budget);
    cov.power_budget = p0;

    IterationTrace<Real> trace;
    auto record = [&](int k, const RateReport<Real>& r) {
        IterationRecord rec;
        rec.iteration = k;
        rec.secrecy = double(r.secrecy);
        rec.bob = double(r.bob);
        rec.eve = double(r.eve);
        rec.objective = double(r.objective());
        rec.elapsed_seconds = std::chrono::duration<double>(clock::now() - start).count();
        trace.records.push_back(rec);
    };
    auto guard = [&](Real before, Real after, int k, const char* stage) {
        if (after < before - Real(cfg.guard_tolerance))
        {
            std::ostringstream msg;
            msg.precision(17);
            msg << "run_bsm: objective decreased during " << stage << " at iteration " << k << " (" << before
                << " -> " << after << ")";
            throw MonotonicityViolation(msg.str());
        }
    };

    EffectiveChannels<Real> eff = effective_channels(ch, theta);
    RateReport<Real> current = rate_report(eff, cov.X);
    record(0, current);

    const bool phases = cfg.update_phases && theta.size() > 0;
    for (int k = 1; k <= cfg.max_iterations; ++k)
    {
        const Real before = current.objective();
        Real mid = before;
        if (phases)
        {
            SweepStats stats;
            theta = sweep_phases(ch, theta, cov, &stats);
            trace.grid_fallbacks += stats.grid_fallbacks;
            eff = effective_channels(ch, theta);
            mid = rate_report(eff, cov.X).objective();
            guard(before, mid, k, "phase sweep");
        }

        CovarianceUpdate<Real> up = optimize_covariance(eff.H_B, eff.H_E, cov.X, p0, cfg.cov);
        cov.X = std::move(up.X);
        current = rate_report(eff, cov.X);
        guard(mid, current.objective(), k, "covariance update");
        record(k, current);

        const Real change = std::abs(current.objective() - before);
        const Real scale = std::max(std::abs(current.objective()), Real(1e-12));
        if (change <= Real(cfg.rel_tolerance) * scale)
        {
            trace.converged = true;
            break;
        }
    }
    trace.phases = std::move(theta);
    trace.covariance = std::move(cov);
    return trace;
}

template <typename Real>
IterationTrace<Real> run_bsm(const ChannelSet<Real>& ch, const BsmConfig& cfg, const Seed& seed)
{
    auto [theta, cov] = init_point(cfg, ch, seed);
    return run_bsm_from(ch, cfg, std::move(theta), std::move(cov));
}

} // namespace irssec

#endif // IRSSEC_BSM_HPP

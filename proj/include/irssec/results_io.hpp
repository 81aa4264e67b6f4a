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

#ifndef IRSSEC_RESULTS_IO_HPP
#define IRSSEC_RESULTS_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "irssec/harness.hpp"

namespace irssec
{
inline constexpr const char* kSoftwareName = "irs-secrecy";
inline constexpr const char* kSoftwareVersion = "0.1.0";

nlohmann::json spec_to_json(const ExperimentSpec& spec);
ExperimentSpec spec_from_json(const nlohmann::json& j);

struct EmitOptions
{
    // Wall-clock timings differ run to run; off by default so that
    // re-running an experiment reproduces the files byte for byte.
    bool include_timing = false;
};

/// Full document: software block, spec echo, one entry per sweep point.
nlohmann::json results_to_json(const std::vector<ResultRecord>& records, const ExperimentSpec& spec,
                               const EmitOptions& opts = {});

/// Columns: experiment,N,Ne,P0_watts,trial_count,failures,mean_Cs_nats,
/// stderr_Cs_nats,mean_Cs_bits,mean_Cs_no_irs_nats,stderr_Cs_no_irs_nats,
/// mean_Cs_random_phase_nats,stderr_Cs_random_phase_nats. Disabled
/// baselines leave their cells empty.
void write_csv(const std::vector<ResultRecord>& records, std::ostream& out);

struct EmittedFiles
{
    std::string csv;
    std::string json;
};

/// Writes <dir>/results.csv and <dir>/results.json, creating `dir` if needed.
EmittedFiles emit_results(const std::vector<ResultRecord>& records, const ExperimentSpec& spec,
                          const std::string& dir, const EmitOptions& opts = {});

} // namespace irssec

#endif // IRSSEC_RESULTS_IO_HPP

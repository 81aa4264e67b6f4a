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

#ifndef IRSSEC_CONFIG_FILE_HPP
#define IRSSEC_CONFIG_FILE_HPP

#include <string>

#include "irssec/bsm.hpp"
#include "irssec/channel.hpp"

namespace irssec
{
// Key-value configuration, one `key = value` per line, `#` starts a comment.
//
// Geometry keys:  Nt Nr Ne N D D_E l_t l_r l_e h_T h_R h_E h_I
//                 iota_a iota_b iota_e iota_i upsilon kappa epsilon
//                 sigma_b2 sigma_e2 (watts) | sigma_n2_dBW (sets both)
//                 eve_fspl_symmetric (true|false)
// Optimizer keys: max_iterations rel_tolerance guard_tolerance
//                 phase_init (all-ones|uniform-random) P0 (watts) | P0_dBm
//
// Greek spellings (ι_a, υ, κ, ε, σ_b², σ_e², D_e) are accepted as aliases.
struct RunConfig
{
    GeometryConfig geometry;
    BsmConfig bsm;
};

/// Applies every assignment in `text` on top of `base`. Unknown keys and
/// malformed values throw ConfigError naming the line.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Canonical text form; parse_config(format_config(c)) reproduces c.
std::string format_config(const RunConfig& cfg);

std::string to_string(PhaseInit init);
PhaseInit parse_phase_init(const std::string& name);

} // namespace irssec

#endif // IRSSEC_CONFIG_FILE_HPP

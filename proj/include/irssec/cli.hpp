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

#ifndef IRSSEC_CLI_HPP
#define IRSSEC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace irssec
{
/// Entry point of the `irs_secrecy` tool. Returns the process exit code:
/// 0 on success, 1 on runtime failure, 2 on bad usage. Failures print a
/// one-line JSON object {"error": {"type": ..., "message": ...}} on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace irssec

#endif // IRSSEC_CLI_HPP

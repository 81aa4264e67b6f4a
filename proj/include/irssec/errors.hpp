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

#ifndef IRSSEC_ERRORS_HPP
#define IRSSEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irssec
{
// Wrong shapes, or a matrix that was supposed to be square/Hermitian isn't.
class DimensionError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain (non-PD, non-PSD, distance <= 0, ...).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Matrix too close to singular for the requested function.
class IllConditionedError : public DomainError
{
  public:
    using DomainError::DomainError;
};

// Water-filling with a singular linear penalty: transmit power is unbounded.
class UnboundedPowerError : public DomainError
{
  public:
    using DomainError::DomainError;
};

class GeometryError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class NumericalFailure : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Raised when an objective that must be monotone decreases. Indicates a bug.
class MonotonicityViolation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

} // namespace irssec

#endif // IRSSEC_ERRORS_HPP

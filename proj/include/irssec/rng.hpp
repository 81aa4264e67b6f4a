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

#ifndef IRSSEC_RNG_HPP
#define IRSSEC_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace irssec
{
/// Identifies one Monte Carlo trial: a master seed plus a trial index.
struct Seed
{
    std::uint64_t master = 0;
    std::uint64_t trial = 0;

    friend bool operator==(const Seed&, const Seed&) = default;
};

/// Independent random streams carved out of one trial seed.
enum class Stream : std::uint64_t
{
    LinkAliceBob = 1,
    LinkAliceEve = 2,
    LinkAliceIrs = 3,
    LinkIrsBob = 4,
    LinkIrsEve = 5,
    PhaseInit = 16,
};

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based derivation: the stream depends only on (master, trial, tag),
/// never on how many numbers other streams consumed.
constexpr std::uint64_t derive_stream_seed(const Seed& seed, Stream tag)
{
    std::uint64_t s = splitmix64(seed.master);
    s = splitmix64(s ^ splitmix64(seed.trial + 0x632BE59BD9B4E019ULL));
    s = splitmix64(s ^ (static_cast<std::uint64_t>(tag) * 0xD1B54A32D192ED03ULL));
    return s;
}

inline std::mt19937_64 make_engine(const Seed& seed, Stream tag)
{
    return std::mt19937_64(derive_stream_seed(seed, tag));
}

/// Circularly-symmetric complex Gaussian with unit variance: (g1 + j g2) / sqrt(2).
template <typename Real, typename Engine>
std::complex<Real> complex_normal(Engine& engine)
{
    std::normal_distribution<Real> normal(Real(0), Real(1));
    const Real re = normal(engine);
    const Real im = normal(engine);
    return std::complex<Real>(re, im) * Real(0.70710678118654752440);
}

} // namespace irssec

#endif // IRSSEC_RNG_HPP

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

// Seeded random instances shared by the unit tests and the acceptance suite.

#ifndef IRSSEC_TESTS_SUPPORT_HPP
#define IRSSEC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <numbers>
#include <random>

#include "irssec/channel.hpp"
#include "irssec/rates.hpp"
#include "irssec/rng.hpp"

namespace irssec::testing
{
using Engine = std::mt19937_64;

inline ComplexMatrix random_cmatrix(Eigen::Index rows, Eigen::Index cols, Engine& eng)
{
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = complex_normal<double>(eng);
    return m;
}

inline ComplexVector random_cvector(Eigen::Index n, Engine& eng) { return random_cmatrix(n, 1, eng); }

inline ComplexMatrix random_hermitian(Eigen::Index n, Engine& eng)
{
    const ComplexMatrix a = random_cmatrix(n, n, eng);
    return hermitian_part(a);
}

/// Random PSD matrix of the given rank (n when rank < 0) scaled to trace `trace`.
inline ComplexMatrix random_psd(Eigen::Index n, double trace, Engine& eng, Eigen::Index rank = -1)
{
    if (rank < 0)
        rank = n;
    if (rank == 0 || trace == 0)
        return ComplexMatrix::Zero(n, n);
    const ComplexMatrix g = random_cmatrix(n, rank, eng);
    ComplexMatrix x = g * g.adjoint();
    x *= trace / x.trace().real();
    return hermitian_part(x);
}

inline double uniform(Engine& eng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }

inline int uniform_int(Engine& eng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }

inline PhaseVector<double> random_phases(Eigen::Index n, Engine& eng)
{
    RealVector a(n);
    for (Eigen::Index i = 0; i < n; ++i)
        a(i) = uniform(eng, 0.0, 2.0 * std::numbers::pi);
    return PhaseVector<double>::from_angles(a);
}

/// Unit-variance i.i.d. links with unit noise, so that normalized and raw forms agree.
inline ChannelSet<double> random_channels(Eigen::Index nt, Eigen::Index nr, Eigen::Index ne, Eigen::Index n, Engine& eng)
{
    return ChannelSet<double>::from_links(random_cmatrix(nr, nt, eng), random_cmatrix(ne, nt, eng),
                                          random_cmatrix(n, nt, eng), random_cmatrix(nr, n, eng),
                                          random_cmatrix(ne, n, eng), 1.0, 1.0);
}

} // namespace irssec::testing

#endif // IRSSEC_TESTS_SUPPORT_HPP

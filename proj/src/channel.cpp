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

#include "irssec/channel.hpp"

#include <numbers>
#include <string>

namespace irssec
{
namespace
{
constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw GeometryError("GeometryConfig: " + what);
}

Eigen::Matrix3Xd linear_array(int count, double x, double top, double z, double spacing)
{
    Eigen::Matrix3Xd pos(3, count);
    for (int n = 0; n < count; ++n)
        pos.col(n) << x, top - n * spacing, z;
    return pos;
}

// Rician mix sqrt(gain / (kappa + 1)) * (sqrt(kappa) * LOS + NLOS). The NLOS
// draw order is element-major (outer loop over `outer`), so growing an array
// leaves the coefficients of the existing elements unchanged.
ComplexMatrix rician(const ComplexMatrix& los, double gain, double kappa, std::mt19937_64& engine,
                     bool column_major_draw)
{
    const Eigen::Index rows = los.rows();
    const Eigen::Index cols = los.cols();
    ComplexMatrix nlos(rows, cols);
    if (column_major_draw)
    {
        for (Eigen::Index c = 0; c < cols; ++c)
            for (Eigen::Index r = 0; r < rows; ++r)
                nlos(r, c) = complex_normal<double>(engine);
    }
    else
    {
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c)
                nlos(r, c) = complex_normal<double>(engine);
    }
    const double amp = std::sqrt(gain / (kappa + 1.0));
    return amp * (std::sqrt(kappa) * los + nlos);
}

} // namespace

void GeometryConfig::validate() const
{
    require(Nt >= 1 && Nr >= 1 && Ne >= 1, "antenna counts must be >= 1");
    require(N >= 0, "N must be >= 0");
    for (double len : {D, D_E, l_t, l_r, l_e, h_T, h_R, h_E, h_I, iota_a, iota_b, iota_e, iota_i, wavelength})
        require(len > 0.0 && std::isfinite(len), "lengths must be positive and finite");
    require(kappa >= 0.0 && std::isfinite(kappa), "kappa must be >= 0");
    require(epsilon > 0.0, "path-loss exponent must be positive");
    require(sigma_b2 > 0.0 && sigma_e2 > 0.0, "noise powers must be positive");
}

PositionSet element_positions(const GeometryConfig& cfg)
{
    cfg.validate();

    auto check_height = [](int count, double top, double spacing, const char* who) {
        if (count > 0 && top - (count - 1) * spacing < 0.0)
            throw GeometryError(std::string("element_positions: ") + who + " array extends below ground");
    };
    check_height(cfg.Nt, cfg.h_T, cfg.iota_a, "Alice");
    check_height(cfg.Nr, cfg.h_R, cfg.iota_b, "Bob");
    check_height(cfg.Ne, cfg.h_E, cfg.iota_e, "Eve");

    PositionSet out;
    out.alice = linear_array(cfg.Nt, 0.0, cfg.h_T, cfg.l_t, cfg.iota_a);
    out.bob = linear_array(cfg.Nr, cfg.D, cfg.h_R, cfg.l_r, cfg.iota_b);
    out.eve = linear_array(cfg.Ne, cfg.D_E, cfg.h_E, cfg.l_e, cfg.iota_e);

    // Near-square grid in the z = 0 plane, ceil(sqrt(N)) columns, row-major.
    const int n = cfg.N;
    out.irs.resize(3, n);
    if (n > 0)
    {
        int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
        while (cols * cols < n)
            ++cols;
        const int rows = (n + cols - 1) / cols;
        check_height(rows, cfg.h_I, cfg.iota_i, "IRS");
        for (int k = 0; k < n; ++k)
        {
            const int row = k / cols;
            const int col = k % cols;
            out.irs.col(k) << cfg.D / 2.0 + col * cfg.iota_i, cfg.h_I - row * cfg.iota_i, 0.0;
        }
    }
    return out;
}

ComplexMatrix los_matrix(const Eigen::Matrix3Xd& tx, const Eigen::Matrix3Xd& rx, double wavelength)
{
    if (!(wavelength > 0.0))
        throw DomainError("los_matrix: wavelength must be positive");
    ComplexMatrix out(rx.cols(), tx.cols());
    for (Eigen::Index r = 0; r < rx.cols(); ++r)
    {
        for (Eigen::Index t = 0; t < tx.cols(); ++t)
        {
            const double dist = (rx.col(r) - tx.col(t)).norm();
            out(r, t) = std::polar(1.0, -2.0 * kPi * dist / wavelength);
        }
    }
    return out;
}

double fspl_direct(double distance, double wavelength, double epsilon)
{
    if (!(distance > 0.0))
        throw DomainError("fspl_direct: distance must be positive");
    if (!(wavelength > 0.0))
        throw DomainError("fspl_direct: wavelength must be positive");
    const double k = 4.0 * kPi / wavelength;
    return k * k * std::pow(distance, epsilon);
}

double direct_distance(const GeometryConfig& cfg, Receiver target)
{
    if (target == Receiver::Bob)
        return std::hypot(cfg.D, cfg.l_t - cfg.l_r);
    return std::hypot(cfg.D_E, cfg.l_t - cfg.l_e);
}

double fspl_irs(const GeometryConfig& cfg, Receiver target)
{
    cfg.validate();
    const double ups = cfg.wavelength;
    const double scale = 256.0 * kPi * kPi / (ups * ups * ups * ups);
    const double d_t = std::hypot(cfg.D / 2.0, cfg.l_t);

    if (target == Receiver::Bob)
    {
        const double d_r = std::hypot(cfg.D / 2.0, cfg.l_r);
        const double denom = cfg.l_t / d_t + cfg.l_r / d_r;
        return scale * d_t * d_t * d_r * d_r / (denom * denom);
    }

    const double d_e = std::hypot(cfg.D_E / 2.0, cfg.l_e);
    const double eve_root = cfg.eve_fspl_symmetric ? std::hypot(cfg.D_E, cfg.l_e)
                                                   : std::sqrt(cfg.D_E + cfg.l_e * cfg.l_e);
    const double denom = cfg.l_t / d_t + cfg.l_e / eve_root;
    return scale * d_t * d_t * d_e * d_e / (denom * denom);
}

ChannelSet<double> draw_channels(const GeometryConfig& cfg, const Seed& seed)
{
    const PositionSet pos = element_positions(cfg);
    const double ups = cfg.wavelength;

    const double zeta_ab = fspl_direct(direct_distance(cfg, Receiver::Bob), ups, cfg.epsilon);
    const double zeta_ae = fspl_direct(direct_distance(cfg, Receiver::Eve), ups, cfg.epsilon);
    const double zeta_ib = fspl_irs(cfg, Receiver::Bob);
    const double zeta_ie = fspl_irs(cfg, Receiver::Eve);

    auto eng_ab = make_engine(seed, Stream::LinkAliceBob);
    auto eng_ae = make_engine(seed, Stream::LinkAliceEve);
    auto eng_ai = make_engine(seed, Stream::LinkAliceIrs);
    auto eng_ib = make_engine(seed, Stream::LinkIrsBob);
    auto eng_ie = make_engine(seed, Stream::LinkIrsEve);

    ComplexMatrix ab = rician(los_matrix(pos.alice, pos.bob, ups), 1.0 / zeta_ab, cfg.kappa, eng_ab, false);
    ComplexMatrix ae = rician(los_matrix(pos.alice, pos.eve, ups), 1.0 / zeta_ae, cfg.kappa, eng_ae, false);
    // Alice-IRS carries no path loss of its own; the cascade loss sits in zeta_IB / zeta_IE.
    ComplexMatrix ai = rician(los_matrix(pos.alice, pos.irs, ups), 1.0, cfg.kappa, eng_ai, false);
    ComplexMatrix ib = rician(los_matrix(pos.irs, pos.bob, ups), 1.0 / zeta_ib, cfg.kappa, eng_ib, true);
    ComplexMatrix ie = rician(los_matrix(pos.irs, pos.eve, ups), 1.0 / zeta_ie, cfg.kappa, eng_ie, true);

    return ChannelSet<double>::from_links(std::move(ab), std::move(ae), std::move(ai), std::move(ib), std::move(ie),
                                          std::sqrt(cfg.sigma_b2), std::sqrt(cfg.sigma_e2));
}

} // namespace irssec

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

#ifndef IRSSEC_CHANNEL_HPP
#define IRSSEC_CHANNEL_HPP

#include <cmath>

#include <Eigen/Dense>

#include "irssec/numerics.hpp"
#include "irssec/rng.hpp"

namespace irssec
{
inline double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1000.0); }
inline double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }

/// Node placement, array sizes and propagation constants. All lengths in
/// metres, noise powers in watts. Defaults reproduce the reference scenario.
struct GeometryConfig
{
    int Nt = 4;
    int Nr = 3;
    int Ne = 2;
    int N = 25; // IRS elements; 0 disables the surface

    double D = 50.0;
    double D_E = 40.0;
    double l_t = 20.0;
    double l_r = 15.0;
    double l_e = 35.0;

    double h_T = 3.0;
    double h_R = 2.5;
    double h_E = 2.0;
    double h_I = 5.0;

    double iota_a = 0.05;
    double iota_b = 0.25;
    double iota_e = 0.03;
    double iota_i = 0.02;

    double wavelength = 0.15;
    double kappa = 1.0;
    double epsilon = 3.0;

    double sigma_b2 = dbw_to_watts(-95.0);
    double sigma_e2 = dbw_to_watts(-95.0);

    // false: IRS-Eve loss uses l_e / sqrt(D_E + l_e^2) as printed in the
    // reference model; true: l_e / sqrt(D_E^2 + l_e^2).
    bool eve_fspl_symmetric = false;

    /// Throws GeometryError on out-of-range values.
    void validate() const;

    friend bool operator==(const GeometryConfig&, const GeometryConfig&) = default;
};

/// Element coordinates, one column per element, axes (x, height, z).
struct PositionSet
{
    Eigen::Matrix3Xd alice;
    Eigen::Matrix3Xd bob;
    Eigen::Matrix3Xd eve;
    Eigen::Matrix3Xd irs;
};

enum class Receiver
{
    Bob,
    Eve
};

/// The five link matrices of one realization plus their noise-normalized forms.
template <typename Real>
struct ChannelSet
{
    CMatrix<Real> H_AB; // Nr x Nt
    CMatrix<Real> H_AE; // Ne x Nt
    CMatrix<Real> H_AI; // N  x Nt
    CMatrix<Real> H_IB; // Nr x N
    CMatrix<Real> H_IE; // Ne x N
    Real sigma_b = 1;
    Real sigma_e = 1;

    CMatrix<Real> Hn_AB;
    CMatrix<Real> Hn_IB;
    CMatrix<Real> Hn_AE;
    CMatrix<Real> Hn_IE;

    Eigen::Index num_tx() const { return H_AB.cols(); }
    Eigen::Index num_bob() const { return H_AB.rows(); }
    Eigen::Index num_eve() const { return H_AE.rows(); }
    Eigen::Index num_elements() const { return H_AI.rows(); }

    /// Builds a set from raw links and noise standard deviations and fills
    /// the normalized forms. Checks that all shapes agree.
    static ChannelSet from_links(CMatrix<Real> ab, CMatrix<Real> ae, CMatrix<Real> ai, CMatrix<Real> ib,
                                 CMatrix<Real> ie, Real sigma_b, Real sigma_e)
    {
        const Eigen::Index nt = ab.cols();
        const Eigen::Index n = ai.rows();
        if (ae.cols() != nt || (ai.cols() != nt && n > 0) || ib.rows() != ab.rows() || ib.cols() != n ||
            ie.rows() != ae.rows() || ie.cols() != n)
            throw DimensionError("ChannelSet: link dimensions are inconsistent");
        if (!(sigma_b > 0) || !(sigma_e > 0))
            throw DomainError("ChannelSet: noise standard deviations must be positive");

        ChannelSet out;
        out.H_AB = std::move(ab);
        out.H_AE = std::move(ae);
        out.H_AI = std::move(ai);
        out.H_AI.conservativeResize(n, nt);
        out.H_IB = std::move(ib);
        out.H_IE = std::move(ie);
        out.sigma_b = sigma_b;
        out.sigma_e = sigma_e;
        out.Hn_AB = out.H_AB / sigma_b;
        out.Hn_IB = out.H_IB / sigma_b;
        out.Hn_AE = out.H_AE / sigma_e;
        out.Hn_IE = out.H_IE / sigma_e;
        return out;
    }

    /// Same direct links with the IRS removed (N = 0).
    ChannelSet without_irs() const
    {
        const Eigen::Index nt = num_tx();
        return from_links(H_AB, H_AE, CMatrix<Real>(0, nt), CMatrix<Real>(num_bob(), 0),
                          CMatrix<Real>(num_eve(), 0), sigma_b, sigma_e);
    }
};

PositionSet element_positions(const GeometryConfig& cfg);

/// Entry (r, t) = exp(-j 2 pi |rx_r - tx_t| / wavelength).
ComplexMatrix los_matrix(const Eigen::Matrix3Xd& tx, const Eigen::Matrix3Xd& rx, double wavelength);

/// zeta = (4 pi / wavelength)^2 * distance^epsilon, linear power loss.
double fspl_direct(double distance, double wavelength, double epsilon);

/// Reference distance between Alice and Bob (or Eve).
double direct_distance(const GeometryConfig& cfg, Receiver target);

/// Product-distance cascade loss through the IRS towards Bob or Eve.
double fspl_irs(const GeometryConfig& cfg, Receiver target);

ChannelSet<double> draw_channels(const GeometryConfig& cfg, const Seed& seed);

} // namespace irssec

#endif // IRSSEC_CHANNEL_HPP

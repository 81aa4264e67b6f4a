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

#ifndef IRSSEC_RATES_HPP
#define IRSSEC_RATES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "irssec/channel.hpp"
#include "irssec/numerics.hpp"

namespace irssec
{
/// Reflection coefficients theta_i = exp(j phi_i), phi_i in [0, 2 pi).
template <typename Real>
class PhaseVector
{
  public:
    PhaseVector() = default;

    static PhaseVector all_ones(Eigen::Index n) { return from_angles(RVector<Real>::Zero(n)); }

    static PhaseVector from_angles(const RVector<Real>& angles)
    {
        PhaseVector out;
        out.angles_.resize(angles.size());
        out.coeffs_.resize(angles.size());
        for (Eigen::Index i = 0; i < angles.size(); ++i)
            out.set_angle(i, angles(i));
        return out;
    }

    Eigen::Index size() const { return coeffs_.size(); }
    const CVector<Real>& theta() const { return coeffs_; }
    const RVector<Real>& phi() const { return angles_; }
    std::complex<Real> operator[](Eigen::Index i) const { return coeffs_(i); }

    void set_angle(Eigen::Index i, Real angle)
    {
        angles_(i) = wrap_angle(angle);
        coeffs_(i) = std::polar(Real(1), angles_(i));
    }

    static Real wrap_angle(Real angle)
    {
        constexpr Real two_pi = Real(2) * std::numbers::pi_v<Real>;
        Real w = std::fmod(angle, two_pi);
        if (w < Real(0))
            w += two_pi;
        if (w >= two_pi)
            w = Real(0);
        return w;
    }

  private:
    CVector<Real> coeffs_;
    RVector<Real> angles_;
};

/// Transmit covariance together with its sum-power budget (watts).
template <typename Real>
struct InputCovariance
{
    CMatrix<Real> X;
    Real power_budget = 0;

    static InputCovariance scaled_identity(Eigen::Index nt, Real p0)
    {
        return {CMatrix<Real>::Identity(nt, nt) * (p0 / Real(nt)), p0};
    }
};

template <typename Real>
struct EffectiveChannels
{
    CMatrix<Real> H_B; // noise-normalized Alice -> Bob including the IRS path
    CMatrix<Real> H_E;
};

/// Rates in nats/s/Hz. `secrecy` is clamped at zero; `objective()` is not.
template <typename Real>
struct RateReport
{
    Real bob = 0;
    Real eve = 0;
    Real secrecy = 0;

    Real objective() const { return bob - eve; }
};

template <typename Real>
EffectiveChannels<Real> effective_channels(const ChannelSet<Real>& ch, const PhaseVector<Real>& theta)
{
    if (theta.size() != ch.num_elements())
        throw DimensionError("effective_channels: phase vector length does not match IRS size");
    EffectiveChannels<Real> out;
    if (theta.size() == 0)
    {
        out.H_B = ch.Hn_AB;
        out.H_E = ch.Hn_AE;
        return out;
    }
    out.H_B = ch.Hn_AB + ch.Hn_IB * theta.theta().asDiagonal() * ch.H_AI;
    out.H_E = ch.Hn_AE + ch.Hn_IE * theta.theta().asDiagonal() * ch.H_AI;
    return out;
}

namespace detail
{
template <typename Derived>
void require_psd(const Eigen::MatrixBase<Derived>& x, const char* what)
{
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    detail::require_square(x, what);
    if (x.rows() == 0)
        return;
    const auto evd = hermitian_evd(x);
    const Real top = std::max(std::abs(evd.values(0)), std::numeric_limits<Real>::min());
    if (evd.values(evd.values.size() - 1) < -Real(1e-10) * top)
        throw DomainError(std::string(what) + ": covariance is not positive semidefinite");
}
} // namespace detail

/// ln|I + H X H^H|.
template <typename DerivedH, typename DerivedX>
auto rate(const Eigen::MatrixBase<DerivedH>& h, const Eigen::MatrixBase<DerivedX>& x)
{
    using Real = typename Eigen::NumTraits<typename DerivedH::Scalar>::Real;
    if (h.cols() != x.rows())
        throw DimensionError("rate: channel and covariance dimensions differ");
    detail::require_psd(x, "rate");
    const CMatrix<Real> hx = h * x;
    CMatrix<Real> gram = hx * h.adjoint();
    gram.diagonal().array() += Real(1);
    return logdet_pd(hermitian_part(gram));
}

template <typename Real>
RateReport<Real> rate_report(const EffectiveChannels<Real>& eff, const CMatrix<Real>& x)
{
    RateReport<Real> out;
    out.bob = rate(eff.H_B, x);
    out.eve = rate(eff.H_E, x);
    out.secrecy = std::max(out.bob - out.eve, Real(0));
    return out;
}

template <typename Real>
RateReport<Real> secrecy_rate(const ChannelSet<Real>& ch, const PhaseVector<Real>& theta,
                              const InputCovariance<Real>& cov)
{
    return rate_report(effective_channels(ch, theta), cov.X);
}

} // namespace irssec

#endif // IRSSEC_RATES_HPP

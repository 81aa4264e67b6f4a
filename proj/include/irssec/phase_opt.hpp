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

#ifndef IRSSEC_PHASE_OPT_HPP
#define IRSSEC_PHASE_OPT_HPP

#include <array>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <utility>

#include "irssec/channel.hpp"
#include "irssec/rates.hpp"

namespace irssec
{
/// Scalar reduction of one phase subproblem. With theta = exp(j phi) the
/// exact change in C_B - C_E caused by slot i is
///     ln( (2 Re(gamma_b theta) + delta_b) / (2 Re(gamma_e theta) + delta_e) ).
template <typename Real>
struct PhaseCoefficients
{
    std::complex<Real> gamma_b{0};
    Real delta_b = 1;
    std::complex<Real> gamma_e{0};
    Real delta_e = 1;

    Real numerator(Real phi) const { return Real(2) * std::real(gamma_b * std::polar(Real(1), phi)) + delta_b; }
    Real denominator(Real phi) const { return Real(2) * std::real(gamma_e * std::polar(Real(1), phi)) + delta_e; }
    Real ratio(Real phi) const { return numerator(phi) / denominator(phi); }

    /// delta > 2|gamma| on both sides, i.e. both factors stay positive on the circle.
    bool positive() const { return delta_b > Real(2) * std::abs(gamma_b) && delta_e > Real(2) * std::abs(gamma_e); }
};

/// Per-element subproblem. P/Q belong to Bob, R/S to Eve:
///   I + H_B X H_B^H = P + theta Q + conj(theta) Q^H,  Q = u_b v_b^H
///   I + H_E X H_E^H = R + theta S + conj(theta) S^H,  S = u_e v_e^H
template <typename Real>
struct PhaseSubproblem
{
    Eigen::Index index = 0;
    std::complex<Real> current{1};

    CMatrix<Real> P;
    CMatrix<Real> Q;
    CMatrix<Real> R;
    CMatrix<Real> S;
    CVector<Real> u_b, v_b;
    CVector<Real> u_e, v_e;

    PhaseCoefficients<Real> coeffs;
};

/// Closed-form outcome for one slot.
template <typename Real>
struct PhaseUpdate
{
    std::complex<Real> theta{1};
    Real angle = 0;
    Real value = 1; // attained ratio f(angle)

    Real lambda = 0; // amplitude of the sinusoidal part of f'
    Real psi = 0;
    std::array<Real, 2> stationary{0, 0};

    bool kept_current = false;
    bool used_grid_fallback = false;
};

/// gamma = v^H P^-1 u and delta = 1 + |gamma|^2 - (v^H P^-1 v)(u^H P^-1 u), so
/// that |I + theta P^-1 Q + conj(theta) P^-1 Q^H| = 2 Re(gamma theta) + delta
/// on |theta| = 1 for Q = u v^H.
template <typename Real>
std::pair<std::complex<Real>, Real> gamma_delta(const CMatrix<Real>& p, const CVector<Real>& u,
                                                const CVector<Real>& v)
{
    detail::require_square(p, "gamma_delta");
    if (u.size() != p.rows() || v.size() != p.rows())
        throw DimensionError("gamma_delta: factor length does not match P");

    Eigen::LLT<CMatrix<Real>> llt(p);
    if (llt.info() != Eigen::Success)
        throw DomainError("gamma_delta: P is not positive definite");

    const CVector<Real> pu = llt.solve(u);
    const CVector<Real> pv = llt.solve(v);
    const std::complex<Real> gamma = v.dot(pu);
    const Real vv = std::real(v.dot(pv));
    const Real uu = std::real(u.dot(pu));
    const Real delta = Real(1) + std::norm(gamma) - vv * uu;
    return {gamma, delta};
}

namespace detail
{
template <typename Real>
PhaseUpdate<Real> pick(const PhaseCoefficients<Real>& c, Real angle)
{
    PhaseUpdate<Real> out;
    out.angle = PhaseVector<Real>::wrap_angle(angle);
    out.theta = std::polar(Real(1), out.angle);
    out.value = c.ratio(out.angle);
    return out;
}

template <typename Real>
PhaseUpdate<Real> grid_search(const PhaseCoefficients<Real>& c, int points)
{
    constexpr Real two_pi = Real(2) * std::numbers::pi_v<Real>;
    Real best_angle = 0;
    Real best = c.ratio(Real(0));
    for (int k = 1; k < points; ++k)
    {
        const Real a = two_pi * Real(k) / Real(points);
        const Real f = c.ratio(a);
        if (f > best)
        {
            best = f;
            best_angle = a;
        }
    }
    PhaseUpdate<Real> out = pick(c, best_angle);
    out.used_grid_fallback = true;
    return out;
}
} // namespace detail

/// Maximizes f(phi) = (lambda_b cos(phi - a_b) + delta_b) / (lambda_e cos(phi - a_e) + delta_e)
/// over the circle, where lambda = 2|gamma| and a = -arg(gamma) is the angle
/// that aligns gamma * theta with the real axis. Candidates are {0, phi_1, phi_2},
/// the roots of f'(phi) = 0.
template <typename Real>
PhaseUpdate<Real> optimize_phase(const PhaseCoefficients<Real>& c, std::complex<Real> current)
{
    constexpr Real pi = std::numbers::pi_v<Real>;
    constexpr Real eps = std::numeric_limits<Real>::epsilon();

    if (!c.positive())
        throw DomainError("optimize_phase: subproblem violates delta > 2|gamma|");

    const Real lam_b = Real(2) * std::abs(c.gamma_b);
    const Real lam_e = Real(2) * std::abs(c.gamma_e);
    const bool bob_flat = lam_b <= Real(16) * eps * c.delta_b;
    const bool eve_flat = lam_e <= Real(16) * eps * c.delta_e;

    if (bob_flat && eve_flat)
    {
        PhaseUpdate<Real> out = detail::pick(c, std::arg(current));
        out.kept_current = true;
        return out;
    }
    if (eve_flat)
        return detail::pick(c, -std::arg(c.gamma_b));
    if (bob_flat)
        return detail::pick(c, pi - std::arg(c.gamma_e));

    const Real align_b = -std::arg(c.gamma_b);
    const Real align_e = -std::arg(c.gamma_e);

    // f'(phi) has numerator lam_b lam_e sin(a_b - a_e) - lambda sin(phi - psi).
    const Real cos_part = lam_b * c.delta_e * std::cos(align_b) - lam_e * c.delta_b * std::cos(align_e);
    const Real sin_part = lam_b * c.delta_e * std::sin(align_b) - lam_e * c.delta_b * std::sin(align_e);
    const Real lambda = std::hypot(cos_part, sin_part);

    if (lambda <= Real(1e-12) * (lam_b * c.delta_e + lam_e * c.delta_b))
    {
        // Numerator proportional to denominator: f is constant.
        PhaseUpdate<Real> out = detail::pick(c, std::arg(current));
        out.kept_current = true;
        out.lambda = lambda;
        return out;
    }

    const Real psi = std::atan2(sin_part, cos_part);
    Real s = lam_b * lam_e * std::sin(align_b - align_e) / lambda;

    if (!std::isfinite(s) || std::abs(s) > Real(1) + Real(1e-9))
    {
        std::clog << "irssec: warning: closed-form phase update degenerate (arcsin argument " << s
                  << "), using grid search\n";
        return detail::grid_search(c, 4096);
    }
    s = std::clamp(s, Real(-1), Real(1));

    const Real base = std::asin(s);
    const std::array<Real, 2> roots{base + psi, pi - base + psi};

    PhaseUpdate<Real> best = detail::pick(c, Real(0));
    for (Real r : roots)
    {
        PhaseUpdate<Real> cand = detail::pick(c, r);
        if (cand.value > best.value)
            best = cand;
    }
    best.lambda = lambda;
    best.psi = psi;
    best.stationary = {PhaseVector<Real>::wrap_angle(roots[0]), PhaseVector<Real>::wrap_angle(roots[1])};
    return best;
}

template <typename Real>
PhaseUpdate<Real> optimize_phase(const PhaseSubproblem<Real>& sp)
{
    return optimize_phase(sp.coeffs, sp.current);
}

/// Incremental Gauss-Seidel state for the phase block. Holds
///   running_b = H_AB_hat + sum_j theta_j hb_j hhat_j^H   (Nr x Nt)
///   running_e = H_AE_hat + sum_j theta_j he_j hhat_j^H   (Ne x Nt)
/// with H_hat = H X^{1/2}, hhat_j the j-th column of (H_AI X^{1/2})^H and
/// hb_j / he_j the j-th columns of the normalized IRS-Bob / IRS-Eve links.
template <typename Real>
class PhaseSweep
{
  public:
    PhaseSweep(const ChannelSet<Real>& ch, PhaseVector<Real> theta, const CMatrix<Real>& x)
        : ch_(ch), theta_(std::move(theta))
    {
        if (theta_.size() != ch.num_elements())
            throw DimensionError("PhaseSweep: phase vector length does not match IRS size");
        if (x.rows() != ch.num_tx() || x.cols() != ch.num_tx())
            throw DimensionError("PhaseSweep: covariance size does not match Nt");

        const CMatrix<Real> root = sqrt_psd(hermitian_part(x), Real(1e-8));
        hat_ab_ = ch.Hn_AB * root;
        hat_ae_ = ch.Hn_AE * root;
        hat_ai_adj_ = (ch.H_AI * root).adjoint();
        rebuild();
    }

    /// Recomputes the running aggregates from scratch.
    void rebuild()
    {
        running_b_ = hat_ab_;
        running_e_ = hat_ae_;
        for (Eigen::Index j = 0; j < theta_.size(); ++j)
        {
            running_b_.noalias() += theta_[j] * ch_.Hn_IB.col(j) * hat_ai_adj_.col(j).adjoint();
            running_e_.noalias() += theta_[j] * ch_.Hn_IE.col(j) * hat_ai_adj_.col(j).adjoint();
        }
    }

    PhaseSubproblem<Real> subproblem(Eigen::Index i) const
    {
        if (i < 0 || i >= theta_.size())
            throw DimensionError("PhaseSweep: element index out of range");

        PhaseSubproblem<Real> sp;
        sp.index = i;
        sp.current = theta_[i];
        peel(running_b_, ch_.Hn_IB.col(i), i, sp.P, sp.u_b, sp.v_b);
        peel(running_e_, ch_.Hn_IE.col(i), i, sp.R, sp.u_e, sp.v_e);
        sp.Q = sp.u_b * sp.v_b.adjoint();
        sp.S = sp.u_e * sp.v_e.adjoint();
        std::tie(sp.coeffs.gamma_b, sp.coeffs.delta_b) = gamma_delta(sp.P, sp.u_b, sp.v_b);
        std::tie(sp.coeffs.gamma_e, sp.coeffs.delta_e) = gamma_delta(sp.R, sp.u_e, sp.v_e);
        return sp;
    }

    /// Sets theta_i to `angle` and applies the rank-1 update to both aggregates.
    void accept(Eigen::Index i, Real angle)
    {
        const std::complex<Real> old = theta_[i];
        theta_.set_angle(i, angle);
        const std::complex<Real> step = theta_[i] - old;
        running_b_.noalias() += step * ch_.Hn_IB.col(i) * hat_ai_adj_.col(i).adjoint();
        running_e_.noalias() += step * ch_.Hn_IE.col(i) * hat_ai_adj_.col(i).adjoint();
    }

    const PhaseVector<Real>& phases() const { return theta_; }

  private:
    // P_i = I + (P - theta_i h hhat^H)(...)^H + |hhat|^2 h h^H,  Q_i = h (P_minus hhat)^H
    void peel(const CMatrix<Real>& running, const Eigen::Ref<const CVector<Real>>& h, Eigen::Index i,
              CMatrix<Real>& p_out, CVector<Real>& u, CVector<Real>& v) const
    {
        const auto hhat = hat_ai_adj_.col(i);
        CMatrix<Real> minus = running;
        minus.noalias() -= theta_[i] * h * hhat.adjoint();
        p_out = minus * minus.adjoint();
        p_out.noalias() += hhat.squaredNorm() * h * h.adjoint();
        p_out.diagonal().array() += Real(1);
        p_out = hermitian_part(p_out);
        u = h;
        v = minus * hhat;
    }

    const ChannelSet<Real>& ch_;
    PhaseVector<Real> theta_;
    CMatrix<Real> hat_ab_, hat_ae_, hat_ai_adj_;
    CMatrix<Real> running_b_, running_e_;
};

/// Subproblem for slot i built from scratch.
template <typename Real>
PhaseSubproblem<Real> build_subproblem(const ChannelSet<Real>& ch, const PhaseVector<Real>& theta,
                                       const InputCovariance<Real>& cov, Eigen::Index i)
{
    return PhaseSweep<Real>(ch, theta, cov.X).subproblem(i);
}

struct SweepStats
{
    int grid_fallbacks = 0;
    int kept_current = 0;
};

/// One Gauss-Seidel pass over all IRS elements, i = 0..N-1, each update
/// accepted immediately.
template <typename Real>
PhaseVector<Real> sweep_phases(const ChannelSet<Real>& ch, const PhaseVector<Real>& theta,
                               const InputCovariance<Real>& cov, SweepStats* stats = nullptr)
{
    if (theta.size() == 0)
        return theta;
    PhaseSweep<Real> sweep(ch, theta, cov.X);
    for (Eigen::Index i = 0; i < theta.size(); ++i)
    {
        const PhaseUpdate<Real> up = optimize_phase(sweep.subproblem(i));
        if (stats)
        {
            stats->grid_fallbacks += up.used_grid_fallback ? 1 : 0;
            stats->kept_current += up.kept_current ? 1 : 0;
        }
        sweep.accept(i, up.angle);
    }
    return sweep.phases();
}

} // namespace irssec

#endif // IRSSEC_PHASE_OPT_HPP

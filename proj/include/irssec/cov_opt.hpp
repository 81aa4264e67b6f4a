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

#ifndef IRSSEC_COV_OPT_HPP
#define IRSSEC_COV_OPT_HPP

#include <cmath>
#include <limits>
#include <string>

#include "irssec/numerics.hpp"
#include "irssec/rates.hpp"

namespace irssec
{
/// Phi = H_E^H (I + H_E X_prev H_E^H)^-1 H_E, the gradient of
/// ln|I + H_E X H_E^H| at X_prev.
template <typename Real>
CMatrix<Real> eve_gradient_matrix(const CMatrix<Real>& h_e, const CMatrix<Real>& x_prev)
{
    if (h_e.cols() != x_prev.rows() || x_prev.rows() != x_prev.cols())
        throw DimensionError("eve_gradient_matrix: dimensions differ");
    CMatrix<Real> gram = h_e * x_prev * h_e.adjoint();
    gram.diagonal().array() += Real(1);
    Eigen::LLT<CMatrix<Real>> llt(hermitian_part(gram));
    if (llt.info() != Eigen::Success)
        throw DomainError("eve_gradient_matrix: X_prev is not positive semidefinite");
    const CMatrix<Real> phi = h_e.adjoint() * llt.solve(h_e);
    return hermitian_part(phi);
}

/// Concave minorant of C_B - C_E obtained by linearizing the Eve term at X_prev:
///   ln|I + H_B X H_B^H| - ln|I + H_E X_prev H_E^H| - tr(Phi (X - X_prev)).
template <typename Real>
Real surrogate_value(const CMatrix<Real>& h_b, const CMatrix<Real>& h_e, const CMatrix<Real>& x,
                     const CMatrix<Real>& x_prev)
{
    const CMatrix<Real> phi = eve_gradient_matrix(h_e, x_prev);
    return rate(h_b, x) - rate(h_e, x_prev) - std::real((phi * (x - x_prev)).trace());
}

/// Maximizer of ln|I + H_B X H_B^H| - tr((Phi + mu I) X) over X >= 0.
template <typename Real>
struct WaterfillSolution
{
    Real mu = 0;
    CMatrix<Real> phi_bar;          // Phi + mu I
    CMatrix<Real> modes;            // U
    RVector<Real> gains;            // sigma_j, descending
    Eigen::Index rank = 0;          // gains above 1e-12 * gains(0)
    RVector<Real> allocation;       // [1 - 1/sigma_j]_+ for j < rank, else 0
    CMatrix<Real> X;

    Real power() const { return std::real(X.trace()); }
};

template <typename Real>
WaterfillSolution<Real> waterfill_given_mu(const CMatrix<Real>& h_b, const CMatrix<Real>& phi, Real mu)
{
    const Eigen::Index nt = phi.rows();
    if (phi.cols() != nt || h_b.cols() != nt)
        throw DimensionError("waterfill_given_mu: dimensions differ");
    if (!(mu >= Real(0)))
        throw DomainError("waterfill_given_mu: mu must be non-negative");

    WaterfillSolution<Real> out;
    out.mu = mu;
    out.phi_bar = phi;
    out.phi_bar.diagonal().array() += mu;

    if (h_b.size() == 0 || h_b.cwiseAbs().maxCoeff() == Real(0))
    {
        out.modes = CMatrix<Real>::Identity(nt, nt);
        out.gains = RVector<Real>::Zero(nt);
        out.allocation = RVector<Real>::Zero(nt);
        out.X = CMatrix<Real>::Zero(nt, nt);
        return out;
    }

    CMatrix<Real> w;
    try
    {
        w = inv_sqrt_hpd(hermitian_part(out.phi_bar));
    }
    catch (const IllConditionedError&)
    {
        throw UnboundedPowerError("waterfill_given_mu: Phi + mu I is singular, power diverges at mu = " +
                                  std::to_string(mu));
    }

    const CMatrix<Real> g = h_b * w;
    const HermitianEvd<Real> evd = hermitian_evd(hermitian_part(CMatrix<Real>(g.adjoint() * g)));
    out.modes = evd.vectors;
    out.gains = evd.values.cwiseMax(Real(0));
    out.allocation = RVector<Real>::Zero(nt);
    const Real top = out.gains(0);
    for (Eigen::Index j = 0; j < nt; ++j)
    {
        if (out.gains(j) > Real(1e-12) * top)
        {
            ++out.rank;
            out.allocation(j) = std::max(Real(1) - Real(1) / out.gains(j), Real(0));
        }
    }
    const CMatrix<Real> wu = w * out.modes;
    out.X = hermitian_part(CMatrix<Real>(wu * out.allocation.asDiagonal() * wu.adjoint()));
    return out;
}

struct BisectionReport
{
    double mu = 0;
    int iterations = 0;
    double power_residual = 0; // |tr(X) - P0|
    bool power_slack = false;  // true when tr(X) < P0 at mu = 0
};

class BisectionFailure : public NumericalFailure
{
  public:
    BisectionFailure(const std::string& what, BisectionReport report)
        : NumericalFailure(what), report_(report)
    {
    }
    const BisectionReport& report() const { return report_; }

  private:
    BisectionReport report_;
};

template <typename Real>
struct CovarianceUpdate
{
    CMatrix<Real> X;
    BisectionReport report;
};

struct CovOptions
{
    double mu_floor = 1e-12;
    double power_tolerance = 1e-8; // relative to P0
    int max_iterations = 200;
    int max_doublings = 2000;
};

/// Maximizes ln|I + H_B X H_B^H| - tr(Phi X) subject to X >= 0, tr(X) <= P0
/// by solving the one-dimensional dual in mu.
template <typename Real>
CovarianceUpdate<Real> optimize_covariance_given_phi(const CMatrix<Real>& h_b, const CMatrix<Real>& phi, Real p0,
                                                     const CovOptions& opts = {})
{
    const Eigen::Index nt = phi.rows();
    if (!(p0 > Real(0)))
        throw DomainError("optimize_covariance: power budget must be positive");

    CovarianceUpdate<Real> out;
    if (h_b.size() == 0 || h_b.cwiseAbs().maxCoeff() == Real(0))
    {
        out.X = CMatrix<Real>::Zero(nt, nt);
        out.report.power_slack = true;
        out.report.power_residual = double(p0);
        return out;
    }

    const Real tol = Real(opts.power_tolerance) * p0;
    auto finish = [&](const WaterfillSolution<Real>& sol, int iterations, bool slack) {
        out.X = clip_to_psd(sol.X);
        out.report.mu = double(sol.mu);
        out.report.iterations = iterations;
        out.report.power_residual = double(std::abs(std::real(out.X.trace()) - p0));
        out.report.power_slack = slack;
        return out;
    };

    // tr(X(mu)), with +inf where Phi + mu I is too singular to invert.
    auto power_at = [&](Real mu, WaterfillSolution<Real>& sol) {
        try
        {
            sol = waterfill_given_mu(h_b, phi, mu);
            return sol.power();
        }
        catch (const UnboundedPowerError&)
        {
            return std::numeric_limits<Real>::infinity();
        }
    };

    WaterfillSolution<Real> sol;
    const HermitianEvd<Real> phi_evd = hermitian_evd(phi);
    const Real phi_top = phi_evd.values(0);
    const Real phi_min = phi_evd.values(nt - 1);
    if (phi_top > Real(0) && phi_min >= Real(1e-12) * phi_top)
    {
        if (power_at(Real(0), sol) <= p0 + tol)
            return finish(sol, 0, true);
    }

    Real lo = Real(opts.mu_floor);
    if (power_at(lo, sol) <= p0 + tol)
        return finish(sol, 1, true);

    Real hi = 1;
    WaterfillSolution<Real> hi_sol;
    Real hi_power = power_at(hi, hi_sol);
    int doublings = 0;
    while (hi_power >= p0)
    {
        if (std::abs(hi_power - p0) <= tol)
            return finish(hi_sol, doublings + 2, false);
        lo = hi;
        hi *= Real(2);
        hi_power = power_at(hi, hi_sol);
        if (++doublings > opts.max_doublings)
        {
            BisectionReport rep{double(hi), doublings, double(hi_power - p0), false};
            throw BisectionFailure("optimize_covariance: could not bracket the dual variable", rep);
        }
    }
    if (std::abs(hi_power - p0) <= tol)
        return finish(hi_sol, doublings + 2, false);

    BisectionReport rep;
    for (int it = 1; it <= opts.max_iterations; ++it)
    {
        const Real mid = (hi / lo > Real(4)) ? std::sqrt(lo * hi) : Real(0.5) * (lo + hi);
        const Real pw = power_at(mid, sol);
        rep = {double(mid), it, double(std::abs(pw - p0)), false};
        if (std::abs(pw - p0) <= tol)
            return finish(sol, it, false);
        if (pw > p0)
        {
            lo = mid;
        }
        else
        {
            hi = mid;
            hi_sol = sol;
        }
        // Bracket collapsed to adjacent doubles; take the feasible end.
        if (hi - lo <= Real(4) * std::numeric_limits<Real>::epsilon() * hi)
            return finish(hi_sol, it, false);
    }
    throw BisectionFailure("optimize_covariance: bisection did not reach the power tolerance", rep);
}

template <typename Real>
CovarianceUpdate<Real> optimize_covariance(const CMatrix<Real>& h_b, const CMatrix<Real>& h_e,
                                           const CMatrix<Real>& x_prev, Real p0, const CovOptions& opts = {})
{
    if (h_b.cols() != x_prev.rows() || h_e.cols() != x_prev.rows())
        throw DimensionError("optimize_covariance: dimensions differ");
    return optimize_covariance_given_phi(h_b, eve_gradient_matrix(h_e, x_prev), p0, opts);
}

} // namespace irssec

#endif // IRSSEC_COV_OPT_HPP

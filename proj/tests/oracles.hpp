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

// Independent brute-force references. None of these share code paths with
// the solvers beyond the rate evaluation itself.

#ifndef IRSSEC_TESTS_ORACLES_HPP
#define IRSSEC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "irssec/numerics.hpp"
#include "irssec/phase_opt.hpp"
#include "irssec/rates.hpp"

namespace irssec::oracle
{
/// Maximum of the phase ratio over `points` equispaced angles in [0, 2pi).
inline double dense_phase_max(const PhaseCoefficients<double>& c, int points)
{
    double best = -1e300;
    for (int k = 0; k < points; ++k)
        best = std::max(best, c.ratio(2.0 * std::numbers::pi * k / points));
    return best;
}

/// ln det through eigenvalues, independent of the Cholesky path.
inline double logdet_evd(const ComplexMatrix& m)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
    return es.eigenvalues().array().log().sum();
}

/// Euclidean projection of a real vector onto {x >= 0, sum x <= budget}.
inline RealVector project_capped_simplex(const RealVector& v, double budget)
{
    RealVector x = v.cwiseMax(0.0);
    if (x.sum() <= budget)
        return x;
    std::vector<double> s(v.data(), v.data() + v.size());
    std::sort(s.begin(), s.end(), std::greater<>());
    double cum = 0, tau = 0;
    for (std::size_t k = 0; k < s.size(); ++k)
    {
        cum += s[k];
        const double t = (cum - budget) / double(k + 1);
        if (s[k] - t > 0)
            tau = t;
    }
    return (v.array() - tau).cwiseMax(0.0);
}

/// Projection onto {X PSD, tr X <= budget} in the Frobenius norm.
inline ComplexMatrix project_power_set(const ComplexMatrix& x, double budget)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(x));
    const RealVector lam = project_capped_simplex(es.eigenvalues(), budget);
    return hermitian_part(ComplexMatrix(es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint()));
}

inline double surrogate_objective(const ComplexMatrix& h_b, const ComplexMatrix& phi, const ComplexMatrix& x)
{
    ComplexMatrix g = h_b * x * h_b.adjoint();
    g.diagonal().array() += 1.0;
    return logdet_evd(hermitian_part(g)) - (phi * x).trace().real();
}

struct PgResult
{
    ComplexMatrix X;
    double value = 0;
    int iterations = 0;
};

/// Projected gradient ascent with adaptive step on
/// ln|I + H X H^H| - tr(Phi X) over {X PSD, tr X <= budget}.
inline PgResult projected_gradient(const ComplexMatrix& h_b, const ComplexMatrix& phi, double budget,
                                   int max_iterations = 200000)
{
    const Eigen::Index nt = phi.rows();
    PgResult r;
    r.X = ComplexMatrix::Identity(nt, nt) * (budget / double(nt));
    r.value = surrogate_objective(h_b, phi, r.X);
    double step = 1.0;
    int stalled = 0;
    for (r.iterations = 0; r.iterations < max_iterations && stalled < 50; ++r.iterations)
    {
        ComplexMatrix g = h_b * r.X * h_b.adjoint();
        g.diagonal().array() += 1.0;
        const ComplexMatrix grad = hermitian_part(ComplexMatrix(h_b.adjoint() * g.inverse() * h_b - phi));
        bool moved = false;
        while (step > 1e-14)
        {
            const ComplexMatrix cand = project_power_set(r.X + step * grad, budget);
            const double v = surrogate_objective(h_b, phi, cand);
            if (v >= r.value)
            {
                stalled = v - r.value <= 1e-15 * std::max(1.0, std::abs(v)) ? stalled + 1 : 0;
                r.X = cand;
                r.value = v;
                step *= 1.5;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved)
            break;
    }
    return r;
}

struct KktResiduals
{
    double dual_feasibility = 0; // max(0, largest eigenvalue of G)
    double stationarity = 0;     // max |v^H G v| over eigenvectors v of X with positive eigenvalue
    double complementarity = 0;  // mu * |P0 - tr X|
};

/// Residuals of the optimality conditions of the surrogate problem, with
/// G = H^H (I + H X H^H)^-1 H - Phi - mu I.
inline KktResiduals kkt_residuals(const ComplexMatrix& h_b, const ComplexMatrix& phi, const ComplexMatrix& x,
                                  double mu, double p0)
{
    const Eigen::Index nt = phi.rows();
    ComplexMatrix g = h_b * x * h_b.adjoint();
    g.diagonal().array() += 1.0;
    ComplexMatrix grad = h_b.adjoint() * g.inverse() * h_b - phi;
    grad.diagonal().array() -= mu;
    grad = hermitian_part(grad);

    KktResiduals r;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ge(grad);
    r.dual_feasibility = std::max(0.0, ge.eigenvalues()(nt - 1));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> xe(hermitian_part(x));
    const double top = std::max(xe.eigenvalues()(nt - 1), 0.0);
    for (Eigen::Index j = 0; j < nt; ++j)
    {
        if (xe.eigenvalues()(j) > 1e-9 * std::max(top, p0))
        {
            const ComplexVector v = xe.eigenvectors().col(j);
            r.stationarity = std::max(r.stationarity, std::abs(v.dot(grad * v)));
        }
    }
    r.complementarity = mu * std::abs(p0 - x.trace().real());
    return r;
}

/// Exhaustive search for the scalar Nt = Nr = Ne = N = 1 problem over
/// `phases` equispaced angles and `powers` levels on [0, p0].
inline double tiny_grid_max(const ChannelSet<double>& ch, double p0, int phases, int powers)
{
    const std::complex<double> ab = ch.Hn_AB(0, 0), ae = ch.Hn_AE(0, 0);
    const std::complex<double> ib = ch.Hn_IB(0, 0) * ch.H_AI(0, 0), ie = ch.Hn_IE(0, 0) * ch.H_AI(0, 0);
    double best = 0;
    for (int k = 0; k < phases; ++k)
    {
        const std::complex<double> t = std::polar(1.0, 2.0 * std::numbers::pi * k / phases);
        const double gb = std::norm(ab + ib * t), ge = std::norm(ae + ie * t);
        for (int m = 0; m < powers; ++m)
        {
            const double p = p0 * m / (powers - 1);
            best = std::max(best, std::log1p(gb * p) - std::log1p(ge * p));
        }
    }
    return best;
}

} // namespace irssec::oracle

#endif // IRSSEC_TESTS_ORACLES_HPP

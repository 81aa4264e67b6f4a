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

#include <doctest.h>

#include <cmath>

#include "irssec/cov_opt.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace irssec;
using irssec::testing::Engine;

namespace
{
ComplexMatrix diag2(double a, double b)
{
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}
} // namespace

TEST_CASE("eve_gradient_matrix")
{
    Engine eng(71);
    const ComplexMatrix h = testing::random_cmatrix(2, 4, eng);
    CHECK((eve_gradient_matrix(h, ComplexMatrix(ComplexMatrix::Zero(4, 4))) - h.adjoint() * h).norm() < 1e-12);
    CHECK(eve_gradient_matrix(ComplexMatrix(ComplexMatrix::Zero(2, 4)), testing::random_psd(4, 1.0, eng)).norm() ==
          0.0);

    const ComplexMatrix x = testing::random_psd(4, 2.0, eng);
    const ComplexMatrix phi = eve_gradient_matrix(h, x);
    CHECK(min_eigenvalue(phi) >= -1e-12);
    const double step = 1e-5;
    for (int k = 0; k < 20; ++k)
    {
        const ComplexMatrix d = testing::random_hermitian(4, eng);
        // rate() insists on PSD input, so evaluate the log-det directly.
        auto f = [&](double t) {
            ComplexMatrix g = h * (x + t * d) * h.adjoint();
            g.diagonal().array() += 1.0;
            return oracle::logdet_evd(hermitian_part(g));
        };
        const double fd = (f(step) - f(-step)) / (2 * step);
        CHECK(std::abs(fd - (phi * d).trace().real()) < 1e-6);
    }
}

TEST_CASE("surrogate_value")
{
    Engine eng(72);
    const ComplexMatrix hb = testing::random_cmatrix(3, 4, eng);
    const ComplexMatrix he = testing::random_cmatrix(2, 4, eng);
    const ComplexMatrix zero = ComplexMatrix::Zero(4, 4);
    CHECK(surrogate_value(hb, he, zero, zero) == 0.0);
    for (int k = 0; k < 200; ++k)
    {
        const ComplexMatrix xp = testing::random_psd(4, testing::uniform(eng, 0, 5), eng, testing::uniform_int(eng, 1, 4));
        const ComplexMatrix x = testing::random_psd(4, testing::uniform(eng, 0, 5), eng, testing::uniform_int(eng, 1, 4));
        CHECK(std::abs(surrogate_value(hb, he, xp, xp) - (rate(hb, xp) - rate(he, xp))) < 1e-10);
        CHECK(surrogate_value(hb, he, x, xp) <= rate(hb, x) - rate(he, x) + 1e-9);
    }
}

TEST_CASE("waterfill_given_mu")
{
    const ComplexMatrix one = ComplexMatrix::Constant(1, 1, 1.0);
    const WaterfillSolution<double> s = waterfill_given_mu(one, ComplexMatrix(ComplexMatrix::Zero(1, 1)), 0.5);
    CHECK(s.phi_bar(0, 0).real() == doctest::Approx(0.5));
    CHECK(s.gains(0) == doctest::Approx(2.0));
    CHECK(s.allocation(0) == doctest::Approx(0.5));
    CHECK(s.X(0, 0).real() == doctest::Approx(1.0));

    const WaterfillSolution<double> d = waterfill_given_mu(diag2(1.0, 0.5), ComplexMatrix(ComplexMatrix::Zero(2, 2)), 1.0);
    CHECK(d.gains(0) == doctest::Approx(1.0));
    CHECK(d.gains(1) == doctest::Approx(0.25));
    CHECK(d.X.norm() < 1e-15);

    const WaterfillSolution<double> z =
        waterfill_given_mu(ComplexMatrix(ComplexMatrix::Zero(2, 3)), ComplexMatrix(ComplexMatrix::Identity(3, 3)), 0.0);
    CHECK(z.X.norm() == 0.0);

    CHECK_THROWS_AS(waterfill_given_mu(one, ComplexMatrix(ComplexMatrix::Zero(1, 1)), 0.0), UnboundedPowerError);
    CHECK_THROWS_AS(waterfill_given_mu(one, ComplexMatrix(ComplexMatrix::Zero(1, 1)), -1.0), DomainError);
}

TEST_CASE("power is nonincreasing in mu")
{
    Engine eng(73);
    for (int rep = 0; rep < 10; ++rep)
    {
        const ComplexMatrix hb = testing::random_cmatrix(3, 4, eng);
        const ComplexMatrix phi = eve_gradient_matrix(testing::random_cmatrix(2, 4, eng), testing::random_psd(4, 1.0, eng));
        double last = std::numeric_limits<double>::infinity();
        for (double mu = 1e-3; mu < 1e3; mu *= 1.3)
        {
            const double p = waterfill_given_mu(hb, phi, mu).power();
            CHECK(p <= last * (1 + 1e-12));
            last = p;
        }
    }
}

TEST_CASE("optimize_covariance closed-form cases")
{
    const ComplexMatrix one = ComplexMatrix::Constant(1, 1, 1.0);
    const auto s = optimize_covariance_given_phi(one, ComplexMatrix(ComplexMatrix::Zero(1, 1)), 2.0);
    CHECK(s.X(0, 0).real() == doctest::Approx(2.0).epsilon(1e-8));
    CHECK_FALSE(s.report.power_slack);

    const auto d = optimize_covariance_given_phi(diag2(1.0, 0.5), ComplexMatrix(ComplexMatrix::Zero(2, 2)), 1.0);
    CHECK((d.X - diag2(1.0, 0.0)).norm() < 1e-7);
    CHECK(d.report.mu == doctest::Approx(0.5).epsilon(1e-6));

    const auto z = optimize_covariance_given_phi(ComplexMatrix(ComplexMatrix::Zero(2, 2)), diag2(1.0, 1.0), 1.0);
    CHECK(z.X.norm() == 0.0);

    // Eve strong everywhere: spending the full budget is not worth it.
    const auto slack = optimize_covariance_given_phi(diag2(1.0, 1.0), diag2(0.9, 0.9), 10.0);
    CHECK(slack.report.power_slack);
    CHECK(slack.X.trace().real() < 10.0);
    CHECK((slack.X - diag2(1.0 / 0.9 - 1.0, 1.0 / 0.9 - 1.0)).norm() < 1e-9);

    CHECK_THROWS_AS(optimize_covariance_given_phi(one, ComplexMatrix(ComplexMatrix::Zero(1, 1)), 0.0), DomainError);
}

TEST_CASE("optimize_covariance is optimal and feasible")
{
    Engine eng(74);
    for (int rep = 0; rep < 20; ++rep)
    {
        const int nt = testing::uniform_int(eng, 1, 4);
        const ComplexMatrix hb = testing::random_cmatrix(testing::uniform_int(eng, 1, 4), nt, eng);
        const ComplexMatrix he = testing::random_cmatrix(testing::uniform_int(eng, 1, 4), nt, eng);
        const double p0 = testing::uniform(eng, 0.1, 10.0);
        const ComplexMatrix xp = testing::random_psd(nt, p0, eng);
        const auto up = optimize_covariance(hb, he, xp, p0);
        const ComplexMatrix phi = eve_gradient_matrix(he, xp);

        CHECK(up.X.trace().real() <= p0 * (1 + 1e-8));
        CHECK(min_eigenvalue(up.X) >= -1e-9 * p0);
        const auto kkt = oracle::kkt_residuals(hb, phi, up.X, up.report.mu, p0);
        CHECK(kkt.dual_feasibility < 1e-6);
        CHECK(kkt.stationarity < 1e-6);
        CHECK(kkt.complementarity < 1e-6);

        const double best = surrogate_value(hb, he, up.X, xp);
        CHECK(best >= surrogate_value(hb, he, xp, xp) - 1e-9);
        for (int k = 0; k < 1000; ++k)
        {
            const ComplexMatrix x = testing::random_psd(nt, testing::uniform(eng, 0, p0), eng, testing::uniform_int(eng, 1, nt));
            CHECK(surrogate_value(hb, he, x, xp) <= best + 1e-9);
        }
        const oracle::PgResult pg = oracle::projected_gradient(hb, phi, p0);
        CHECK(std::abs(pg.value - oracle::surrogate_objective(hb, phi, up.X)) < 1e-5);
    }
}

TEST_CASE("float instantiation")
{
    Eigen::MatrixXcf h = Eigen::MatrixXcf::Identity(2, 2);
    h(1, 1) = 0.5f;
    const auto up = optimize_covariance_given_phi<float>(h, Eigen::MatrixXcf::Zero(2, 2), 1.0f);
    CHECK(up.X(0, 0).real() == doctest::Approx(1.0).epsilon(1e-4));
}

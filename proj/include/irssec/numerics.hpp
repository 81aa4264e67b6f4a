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

#ifndef IRSSEC_NUMERICS_HPP
#define IRSSEC_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "irssec/errors.hpp"

namespace irssec
{
template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using RealVector = RVector<double>;

/// Eigen-decomposition of a Hermitian matrix, M = U diag(w) U^H.
/// Eigenvalues are sorted descending. Each eigenvector is rotated so that its
/// largest-magnitude component is real and positive.
template <typename Real>
struct HermitianEvd
{
    CMatrix<Real> vectors;
    RVector<Real> values;
};

namespace detail
{
template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what)
{
    if (m.rows() != m.cols())
    {
        throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
    }
}
} // namespace detail

/// True when ||M - M^H||_max <= rel_tol * ||M||_max.
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real rel_tol = 1e-12)
{
    if (m.rows() != m.cols())
        return false;
    if (m.size() == 0)
        return true;
    const auto scale = m.cwiseAbs().maxCoeff();
    const auto asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    return asym <= rel_tol * scale;
}

/// (M + M^H) / 2
template <typename Derived>
auto hermitian_part(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    CMatrix<Real> out = (m + m.adjoint()) * Real(0.5);
    return out;
}

template <typename Derived>
auto hermitian_evd(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Scalar>::Real;

    detail::require_square(m, "hermitian_evd");
    if (!is_hermitian(m))
        throw DimensionError("hermitian_evd: matrix is not Hermitian");

    const Eigen::Index n = m.rows();
    HermitianEvd<Real> out;
    if (n == 0)
    {
        out.vectors.resize(0, 0);
        out.values.resize(0);
        return out;
    }

    CMatrix<Real> a = m.template cast<std::complex<Real>>();
    Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(a);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("hermitian_evd: eigensolver did not converge");

    // Eigen returns ascending order.
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();

    for (Eigen::Index j = 0; j < n; ++j)
    {
        Eigen::Index pivot = 0;
        out.vectors.col(j).cwiseAbs().maxCoeff(&pivot);
        const std::complex<Real> c = out.vectors(pivot, j);
        const Real mag = std::abs(c);
        if (mag > Real(0))
            out.vectors.col(j) *= std::conj(c) / mag;
    }
    return out;
}

/// ln|M| for Hermitian positive definite M, via Cholesky.
template <typename Derived>
auto logdet_pd(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Scalar>::Real;

    detail::require_square(m, "logdet_pd");
    if (!is_hermitian(m))
        throw DimensionError("logdet_pd: matrix is not Hermitian");
    if (m.rows() == 0)
        return Real(0);

    CMatrix<Real> a = m.template cast<std::complex<Real>>();
    Eigen::LLT<CMatrix<Real>> llt(a);
    if (llt.info() != Eigen::Success)
        throw DomainError("logdet_pd: matrix is not positive definite");

    const auto& l = llt.matrixLLT();
    Real sum = 0;
    for (Eigen::Index i = 0; i < l.rows(); ++i)
    {
        const Real d = l(i, i).real();
        if (!(d > Real(0)))
            throw DomainError("logdet_pd: non-positive Cholesky pivot");
        sum += std::log(d);
    }
    return Real(2) * sum;
}

/// Principal inverse square root of a Hermitian positive definite matrix.
/// Throws IllConditionedError when lambda_min <= 1e-14 * lambda_max.
template <typename Derived>
auto inv_sqrt_hpd(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Scalar>::Real;

    const HermitianEvd<Real> evd = hermitian_evd(m);
    const Eigen::Index n = evd.values.size();
    CMatrix<Real> out(n, n);
    if (n == 0)
        return out;

    const Real largest = evd.values(0);
    const Real smallest = evd.values(n - 1);
    if (!(largest > Real(0)) || !(smallest > Real(1e-14) * largest))
        throw IllConditionedError("inv_sqrt_hpd: matrix is singular or ill-conditioned");

    const RVector<Real> scale = evd.values.cwiseSqrt().cwiseInverse();
    out = evd.vectors * scale.asDiagonal() * evd.vectors.adjoint();
    return hermitian_part(out);
}

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-neg_tol * max(1, |lambda_max|), 0) are treated as roundoff and clamped.
template <typename Derived>
auto sqrt_psd(const Eigen::MatrixBase<Derived>& m,
              typename Eigen::NumTraits<typename Derived::Scalar>::Real neg_tol = 1e-10)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Scalar>::Real;

    const HermitianEvd<Real> evd = hermitian_evd(m);
    const Eigen::Index n = evd.values.size();
    CMatrix<Real> out(n, n);
    if (n == 0)
        return out;

    const Real scale = std::max(Real(1), std::abs(evd.values(0)));
    if (evd.values(n - 1) < -neg_tol * scale)
        throw DomainError("sqrt_psd: matrix has a negative eigenvalue");

    const RVector<Real> roots = evd.values.cwiseMax(Real(0)).cwiseSqrt();
    out = evd.vectors * roots.asDiagonal() * evd.vectors.adjoint();
    return hermitian_part(out);
}

/// Projects a Hermitian matrix onto the PSD cone by clipping negative
/// eigenvalues at zero. Used to absorb roundoff on covariance iterates.
template <typename Derived>
auto clip_to_psd(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Scalar>::Real;

    const HermitianEvd<Real> evd = hermitian_evd(hermitian_part(m));
    const RVector<Real> clipped = evd.values.cwiseMax(Real(0));
    CMatrix<Real> out = evd.vectors * clipped.asDiagonal() * evd.vectors.adjoint();
    return hermitian_part(out);
}

/// Smallest eigenvalue of a Hermitian matrix (0 for an empty matrix).
template <typename Derived>
auto min_eigenvalue(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    const HermitianEvd<Real> evd = hermitian_evd(m);
    return evd.values.size() == 0 ? Real(0) : evd.values(evd.values.size() - 1);
}

} // namespace irssec

#endif // IRSSEC_NUMERICS_HPP

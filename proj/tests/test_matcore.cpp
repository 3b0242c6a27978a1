// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>

#include "nslink/matcore.hpp"
#include "nslink/random.hpp"

using namespace nslink;

namespace {

CMatrix random_complex(int rows, int cols, std::uint64_t seed) {
    RandomStream s(seed);
    CMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = s.cgaussian();
    return a;
}

}  // namespace

TEST_CASE("svd of a diagonal matrix recovers its entries, descending") {
    CMatrix a = CMatrix::Zero(3, 3);
    a(0, 0) = 2.0;
    a(1, 1) = 5.0;
    a(2, 2) = 1.0;
    const SvdResult r = svd(a);
    CHECK(r.sigma.size() == 3);
    CHECK(r.sigma(0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(r.sigma(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.sigma(2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("svd reconstructs, factors unitary, sigma sorted") {
    for (auto [rows, cols] : {std::pair{4, 4}, {6, 3}, {3, 6}, {1, 5}}) {
        const CMatrix a = random_complex(rows, cols, 100 + rows * 10 + cols);
        const SvdResult r = svd(a);
        CHECK(r.u.rows() == rows);
        CHECK(r.u.cols() == rows);
        CHECK(r.v.rows() == cols);
        CHECK(r.v.cols() == cols);
        const Eigen::Index k = std::min(rows, cols);
        CHECK(r.sigma.size() == k);
        for (Eigen::Index i = 1; i < k; ++i) CHECK(r.sigma(i) <= r.sigma(i - 1));

        CMatrix s = CMatrix::Zero(rows, cols);
        for (Eigen::Index i = 0; i < k; ++i) s(i, i) = r.sigma(i);
        CHECK((a - r.u * s * r.v.adjoint()).norm() <= 1e-10 * std::max(1.0, a.norm()));
        CHECK((r.u.adjoint() * r.u - CMatrix::Identity(rows, rows)).norm() < 1e-9);
        CHECK((r.v.adjoint() * r.v - CMatrix::Identity(cols, cols)).norm() < 1e-9);
    }
}

TEST_CASE("svd of the zero matrix") {
    const SvdResult r = svd(CMatrix::Zero(2, 4));
    CHECK(r.sigma.size() == 2);
    CHECK(r.sigma(0) == 0.0);
    CHECK(r.sigma(1) == 0.0);
}

TEST_CASE("svd rejects non-finite input") {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)svd(a), std::invalid_argument);
}

TEST_CASE("norms: known values and unitary invariance") {
    CMatrix a(2, 2);
    a << 3.0, 0.0, 0.0, 4.0;
    CHECK(spectral_norm(a) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(frobenius_norm(a) == doctest::Approx(5.0).epsilon(1e-12));  // 3-4-5

    const CMatrix b = random_complex(4, 3, 7);
    const SvdResult qb = svd(random_complex(4, 4, 8));
    const CMatrix u = qb.u;  // unitary factor reused as a rotation
    CHECK(spectral_norm(u * b) == doctest::Approx(spectral_norm(b)).epsilon(1e-10));
    CHECK(frobenius_norm(u * b) == doctest::Approx(frobenius_norm(b)).epsilon(1e-10));
}

TEST_CASE("subspace basis accepts orthonormal and rejects skewed columns") {
    CMatrix q(3, 2);
    q << 1.0, 0.0, 0.0, 1.0, 0.0, 0.0;
    const SubspaceBasis b = make_subspace_basis(q);
    CHECK(b.ambient() == 3);
    CHECK(b.dim() == 2);

    CMatrix bad = q;
    bad(0, 1) = 0.5;  // columns no longer orthonormal
    CHECK_THROWS_AS((void)make_subspace_basis(bad), std::invalid_argument);

    const SubspaceBasis empty = make_subspace_basis(CMatrix(3, 0));
    CHECK(empty.dim() == 0);
}

TEST_CASE("projector: orthonormal, empty, and degenerate bases") {
    CMatrix q(3, 1);
    q << 0.0, 0.0, 1.0;
    const CMatrix p = projector(make_subspace_basis(q));
    CHECK((p * p - p).norm() < 1e-12);          // idempotent
    CHECK((p - p.adjoint()).norm() < 1e-12);    // hermitian
    CHECK(std::abs(p(2, 2).real() - 1.0) < 1e-12);
    CHECK(std::abs(p(0, 0)) < 1e-12);

    const CMatrix pe = projector(SubspaceBasis{CMatrix(3, 0)});
    CHECK(pe.rows() == 3);
    CHECK(pe.norm() == 0.0);

    // rank-deficient B makes B^H B singular
    CMatrix rep(3, 2);
    rep << 1.0, 1.0, 0.0, 0.0, 0.0, 0.0;
    CHECK_THROWS_AS((void)projector(SubspaceBasis{rep}), NumericError);
}

TEST_CASE("projector handles non-orthonormal full-rank basis") {
    CMatrix b(3, 2);
    b << 2.0, 1.0, 0.0, 1.0, 0.0, 0.0;  // full rank, skewed
    const CMatrix p = projector(SubspaceBasis{b});
    CHECK((p * p - p).norm() < 1e-10);
    CHECK((p * b - b).norm() < 1e-10);  // fixes its own span
}

TEST_CASE("canonical angles: aligned, orthogonal, and 45 degrees") {
    CMatrix e1(2, 1), e2(2, 1), mid(2, 1);
    e1 << 1.0, 0.0;
    e2 << 0.0, 1.0;
    mid << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);

    const auto same = canonical_angles(make_subspace_basis(e1), make_subspace_basis(e1));
    CHECK(same.angles.size() == 1);
    CHECK(same.angles(0) == doctest::Approx(0.0).epsilon(1e-10));

    const auto orth = canonical_angles(make_subspace_basis(e1), make_subspace_basis(e2));
    CHECK(orth.angles(0) == doctest::Approx(std::acos(0.0)).epsilon(1e-12));  // pi/2

    const auto mid45 = canonical_angles(make_subspace_basis(e1), make_subspace_basis(mid));
    CHECK(mid45.angles(0) == doctest::Approx(std::acos(1.0 / std::sqrt(2.0))).epsilon(1e-10));
}

TEST_CASE("canonical angles: rectangular pair uses min dimension") {
    CMatrix w(3, 2);
    w << 1.0, 0.0, 0.0, 1.0, 0.0, 0.0;
    CMatrix z(3, 1);
    z << 1.0, 0.0, 0.0;
    const auto a = canonical_angles(make_subspace_basis(w), make_subspace_basis(z));
    CHECK(a.angles.size() == 1);
    CHECK(a.angles(0) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("raw overload flags a gross cosine overflow") {
    CMatrix w(2, 1), z(2, 1);
    w << 1.1, 0.0;  // not unit norm: cosine 1.1 exceeds the clamp tolerance
    z << 1.0, 0.0;
    CHECK_THROWS_AS((void)canonical_angles_raw(w, z), NumericError);
}

TEST_CASE("sin-theta norms") {
    CanonicalAngles empty;
    empty.angles = RVector(0);
    CHECK(sin_theta_norm(empty, MatNorm::spectral) == 0.0);
    CHECK(sin_theta_norm(empty, MatNorm::frobenius) == 0.0);

    CanonicalAngles one;
    one.angles = RVector::Constant(1, std::acos(0.5));  // 60 degrees
    CHECK(sin_theta_norm(one, MatNorm::frobenius) ==
          doctest::Approx(0.8660254037844386).epsilon(1e-12));

    // two orthogonal planes in C^4: ||sin Theta||_F = sqrt(2), spectral = 1
    CMatrix w = CMatrix::Zero(4, 2), z = CMatrix::Zero(4, 2);
    w(0, 0) = 1.0;
    w(1, 1) = 1.0;
    z(2, 0) = 1.0;
    z(3, 1) = 1.0;
    const auto a = canonical_angles(make_subspace_basis(w), make_subspace_basis(z));
    CHECK(sin_theta_norm(a, MatNorm::frobenius) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sin_theta_norm(a, MatNorm::spectral) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ensure_finite names the offender") {
    CMatrix a = CMatrix::Ones(2, 2);
    CHECK_NOTHROW(ensure_finite(a, "a"));
    a(1, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_WITH_AS(ensure_finite(a, "channel"),
                         doctest::Contains("channel"), std::invalid_argument);
}

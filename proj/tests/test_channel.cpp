// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "nslink/channel.hpp"

using namespace nslink;

TEST_CASE("rician draw is deterministic in the stream") {
    RandomStream a(5), b(5);
    const CMatrix h1 = draw_rician({3.0, 4, 3}, a);
    const CMatrix h2 = draw_rician({3.0, 4, 3}, b);
    CHECK((h1 - h2).norm() == 0.0);
    CHECK(h1.rows() == 4);
    CHECK(h1.cols() == 3);
}

TEST_CASE("huge K collapses onto the all-ones specular component") {
    RandomStream s(6);
    const CMatrix h = draw_rician({1e12, 3, 3}, s);
    CHECK((h - CMatrix::Ones(3, 3)).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("K = 0 is pure diffuse with unit mean entry power") {
    RandomStream s(7);
    double pow_sum = 0.0;
    std::complex<double> mean_sum = 0.0;
    const int draws = 2000;
    for (int i = 0; i < draws; ++i) {
        const CMatrix h = draw_rician({0.0, 8, 8}, s);
        pow_sum += h.squaredNorm();
        mean_sum += h.sum();
    }
    const double n = draws * 64.0;
    CHECK(pow_sum / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(mean_sum) / n < 0.02);
}

TEST_CASE("K = 3 splits power 3:1 between specular and diffuse") {
    RandomStream s(8);
    const double spec = std::sqrt(3.0 / 4.0);
    double mean_re = 0.0, diffuse_pow = 0.0;
    const int draws = 2000;
    for (int i = 0; i < draws; ++i) {
        const CMatrix h = draw_rician({3.0, 8, 8}, s);
        mean_re += h.real().mean();
        diffuse_pow += (h - CMatrix::Ones(8, 8) * spec).squaredNorm() / 64.0;
    }
    CHECK(mean_re / draws == doctest::Approx(spec).epsilon(0.01));
    CHECK(diffuse_pow / draws == doctest::Approx(0.25).epsilon(0.02));
}

TEST_CASE("rician parameter validation") {
    RandomStream s(9);
    CHECK_THROWS_AS((void)draw_rician({-1.0, 2, 2}, s), std::invalid_argument);
    CHECK_THROWS_AS((void)draw_rician({3.0, 0, 2}, s), std::invalid_argument);
}

TEST_CASE("gaussian perturbation has the advertised total power") {
    RandomStream s(10);
    const double rho = 0.3;
    double tot = 0.0;
    const int draws = 4000;
    for (int i = 0; i < draws; ++i) {
        const CMatrix t =
            draw_perturbation({PerturbationFamily::gaussian, rho}, 4, 4, s);
        tot += t.squaredNorm();
    }
    // E||T||_F^2 = 2 N M rho^2
    CHECK(tot / draws == doctest::Approx(2.0 * 16 * rho * rho).epsilon(0.02));
}

TEST_CASE("uniform perturbation stays inside its box") {
    RandomStream s(11);
    const double sc = 0.4;
    double tot = 0.0;
    const int draws = 4000;
    for (int i = 0; i < draws; ++i) {
        const CMatrix t =
            draw_perturbation({PerturbationFamily::uniform, sc}, 3, 5, s);
        CHECK(t.real().cwiseAbs().maxCoeff() <= sc);
        CHECK(t.imag().cwiseAbs().maxCoeff() <= sc);
        tot += t.squaredNorm();
    }
    // per entry: 2 * sc^2 / 3
    CHECK(tot / draws == doctest::Approx(15.0 * 2.0 * sc * sc / 3.0).epsilon(0.03));
}

TEST_CASE("family none draws the zero matrix") {
    RandomStream s(12);
    const CMatrix t = draw_perturbation({PerturbationFamily::none, 0.0}, 2, 2, s);
    CHECK(t.norm() == 0.0);
}

TEST_CASE("perturbation validation") {
    RandomStream s(13);
    CHECK_THROWS_AS(
        (void)draw_perturbation({PerturbationFamily::gaussian, -0.1}, 2, 2, s),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)draw_perturbation({PerturbationFamily::gaussian, 0.1}, 0, 2, s),
        std::invalid_argument);
}

TEST_CASE("path gain follows d^-attenuation") {
    CHECK(path_gain({1.0, 2.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(path_gain({2.0, 2.0}) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(path_gain({10.0, 4.0}) == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK_THROWS_AS((void)path_gain({0.5, 2.0}), std::invalid_argument);
}

TEST_CASE("family names") {
    CHECK(std::string(family_name(PerturbationFamily::none)) == "none");
    CHECK(std::string(family_name(PerturbationFamily::gaussian)) == "gaussian");
    CHECK(std::string(family_name(PerturbationFamily::uniform)) == "uniform");
}

TEST_CASE("haar columns are orthonormal") {
    RandomStream s(14);
    const CMatrix q = haar_cols(6, 3, s);
    CHECK((q.adjoint() * q - CMatrix::Identity(3, 3)).norm() < 1e-10);
}

TEST_CASE("matrix_with_spectrum realizes the requested singular values") {
    RandomStream s(15);
    RVector sig(2);
    sig << 4.0, 1.5;
    const CMatrix a = matrix_with_spectrum(5, 3, sig, s);
    const RVector got = svd(a).sigma;
    CHECK(got.size() == 3);
    CHECK(got(0) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(got(1) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(got(2) == doctest::Approx(0.0).epsilon(1e-10));
}

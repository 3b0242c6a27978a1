// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "nslink/random.hpp"

using nslink::RandomStream;

TEST_CASE("identical seeds give identical sequences") {
    RandomStream a(42), b(42);
    for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());

    RandomStream c(42, 7), d(42, 7);
    for (int i = 0; i < 16; ++i) CHECK(c.next_u64() == d.next_u64());
}

TEST_CASE("different seeds and stream ids diverge") {
    RandomStream a(1), b(2), c(1, 1);
    bool ab = false, ac = false;
    for (int i = 0; i < 8; ++i) {
        const auto x = a.next_u64();
        ab |= x != b.next_u64();
        ac |= x != c.next_u64();
    }
    CHECK(ab);
    CHECK(ac);
}

TEST_CASE("split children are stable and mutually distinct") {
    const RandomStream root(99);
    RandomStream c0 = root.split(0);
    RandomStream c0_again = root.split(0);
    RandomStream c1 = root.split(1);

    bool differs = false;
    for (int i = 0; i < 16; ++i) {
        const auto x = c0.next_u64();
        CHECK(x == c0_again.next_u64());
        differs |= x != c1.next_u64();
    }
    CHECK(differs);

    // splitting must not disturb the parent
    RandomStream p1(99), p2(99);
    (void)p1.split(3);
    for (int i = 0; i < 8; ++i) CHECK(p1.next_u64() == p2.next_u64());
}

TEST_CASE("uniform01 lands in (0, 1]") {
    RandomStream s(7);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = s.uniform01();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("gaussian moments") {
    RandomStream s(11);
    const int n = 200000;
    double m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = s.gaussian();
        m1 += g;
        m2 += g * g;
    }
    m1 /= n;
    m2 /= n;
    CHECK(std::abs(m1) < 0.01);
    CHECK(m2 == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("cgaussian is circularly symmetric with unit power") {
    RandomStream s(13);
    const int n = 200000;
    double re = 0.0, im = 0.0, pow_re = 0.0, pow_im = 0.0, cross = 0.0;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = s.cgaussian();
        re += z.real();
        im += z.imag();
        pow_re += z.real() * z.real();
        pow_im += z.imag() * z.imag();
        cross += z.real() * z.imag();
    }
    CHECK(std::abs(re / n) < 0.01);
    CHECK(std::abs(im / n) < 0.01);
    CHECK(pow_re / n == doctest::Approx(0.5).epsilon(0.02));
    CHECK(pow_im / n == doctest::Approx(0.5).epsilon(0.02));
    CHECK(std::abs(cross / n) < 0.01);
}

TEST_CASE("uniform respects its bounds") {
    RandomStream s(17);
    for (int i = 0; i < 10000; ++i) {
        const double u = s.uniform(-2.5, 3.5);
        CHECK(u > -2.5);
        CHECK(u <= 3.5);
    }
}

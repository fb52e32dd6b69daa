//! \file test_torus.cpp
#include <doctest.h>

#include "generators.hpp"
#include "qpc/error.hpp"
#include "qpc/rng.hpp"
#include "qpc/torus.hpp"

using namespace qpc;
using doctest::Approx;

TEST_SUITE("torus")
{
TEST_CASE("wrap reduces into the unit interval")
{
    CHECK(TorusPoint::wrap({1.25})[0] == 0.25);
    CHECK(TorusPoint::wrap({-0.25})[0] == 0.75);
    auto p = TorusPoint::wrap({0.0, 1.0});
    CHECK(p[0] == 0.0);
    CHECK(p[1] == 0.0);
    // tiny negative values must not round up to 1
    CHECK(wrap_unit(-1e-18) < 1.0);
    CHECK_THROWS_AS(TorusPoint::wrap({std::nan("")}), Error);
    CHECK_THROWS_AS(TorusPoint::zero(0), Error);
    CHECK_THROWS_AS(TorusPoint::zero(kMaxTorusDim + 1), Error);
}

TEST_CASE("translate")
{
    auto p = translate(TorusPoint::wrap({0.7}), TorusPoint::wrap({0.5}));
    CHECK(p[0] == Approx(0.2).epsilon(1e-15));

    Rng rng(1, {});
    for (int i = 0; i < 100; ++i)
    {
        auto theta = test::random_point(rng, 3);
        CHECK(translate(theta, TorusPoint::zero(3)) == theta);
        auto alpha = test::random_point(rng, 3);
        auto back = translate(translate(theta, alpha), alpha.negated());
        CHECK(torus_dist(back, theta) <= 1e-12);
    }
    CHECK_THROWS_AS(translate(TorusPoint::zero(1), TorusPoint::zero(2)), Error);
}

TEST_CASE("translation is an abelian group action")
{
    Rng rng(2, {});
    for (int i = 0; i < 1000; ++i)
    {
        std::size_t d = 1 + test::pick(rng, kMaxTorusDim);
        auto theta = test::random_point(rng, d);
        auto a = test::random_point(rng, d);
        auto b = test::random_point(rng, d);
        auto lhs = translate(translate(theta, a), b);
        auto rhs = translate(theta, translate(a, b));
        CHECK(torus_dist(lhs, rhs) <= 1e-12);
        CHECK(torus_dist(translate(a, b), translate(b, a)) <= 1e-12);
    }
}

TEST_CASE("circle and torus distance")
{
    CHECK(torus_dist(TorusPoint::wrap({0.0}), TorusPoint::wrap({0.5})) == 0.5);
    CHECK(torus_dist(TorusPoint::wrap({0.9}), TorusPoint::wrap({0.1}))
          == Approx(0.2).epsilon(1e-14));
    auto p = TorusPoint::wrap({0.3, 0.8});
    CHECK(torus_dist(p, p) == 0.0);
    // sup over coordinates
    CHECK(torus_dist(TorusPoint::wrap({0.0, 0.0}), TorusPoint::wrap({0.1, 0.95}))
          == Approx(0.1));

    Rng rng(3, {});
    for (int i = 0; i < 2000; ++i)
    {
        std::size_t d = 1 + test::pick(rng, 3);
        auto x = test::random_point(rng, d);
        auto y = test::random_point(rng, d);
        auto z = test::random_point(rng, d);
        CHECK(torus_dist(x, y) == torus_dist(y, x));
        CHECK(torus_dist(x, z) <= torus_dist(x, y) + torus_dist(y, z) + 1e-15);
        CHECK(torus_dist(x, y) <= 0.5);
    }
}

TEST_CASE("characters")
{
    auto theta = TorusPoint::wrap({0.37, 0.11});
    IntVec zero{0, 0};
    CHECK(character(zero, theta) == std::complex<double>(1.0, 0.0));
    IntVec one{1};
    CHECK(character(one, TorusPoint::wrap({0.5})) == std::complex<double>(-1.0, 0.0));
    IntVec two{2};
    CHECK(character(two, TorusPoint::wrap({0.25})) == std::complex<double>(-1.0, 0.0));
    CHECK(character(two, TorusPoint::wrap({0.5})) == std::complex<double>(1.0, 0.0));

    Rng rng(4, {});
    for (int i = 0; i < 1000; ++i)
    {
        std::size_t d = 1 + test::pick(rng, 3);
        IntVec k(d);
        for (auto& x : k)
            x = static_cast<int>(test::pick(rng, 41)) - 20;
        auto t = test::random_point(rng, d);
        auto a = test::random_point(rng, d);
        auto lhs = character(k, translate(t, a));
        auto rhs = character(k, t) * character(k, a);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
        CHECK(std::abs(std::abs(lhs) - 1.0) <= 1e-15);
    }
}

TEST_CASE("haar samples")
{
    Rng a(99, {5}), b(99, {5});
    for (int i = 0; i < 10; ++i)
        CHECK(haar_sample(a, 2) == haar_sample(b, 2));

    Rng rng(7, {});
    constexpr int samples = 100000;
    double mean0 = 0.0, mean1 = 0.0;
    std::complex<double> fourier = 0.0;
    IntVec k{1};
    for (int i = 0; i < samples; ++i)
    {
        auto p = haar_sample(rng, 2);
        mean0 += p[0];
        mean1 += p[1];
        fourier += character(k, TorusPoint::wrap({p[0]}));
    }
    CHECK(mean0 / samples == Approx(0.5).epsilon(0.02));
    CHECK(mean1 / samples == Approx(0.5).epsilon(0.02));
    CHECK(std::abs(fourier) / samples <= 0.02);
}

TEST_CASE("derived seeds separate streams")
{
    CHECK(derive_seed(1, {0}) != derive_seed(1, {1}));
    CHECK(derive_seed(1, {0}) != derive_seed(2, {0}));
    CHECK(derive_seed(1, {0, 1}) != derive_seed(1, {1, 0}));
    CHECK(derive_seed(5, {3}) == derive_seed(5, {3}));
    Rng r(0, {});
    for (int i = 0; i < 1000; ++i)
    {
        double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("grid")
{
    auto g = torus_grid(2, 4);
    CHECK(g.size() == 16);
    CHECK(g.front() == TorusPoint::zero(2));
    for (auto const& p : g)
        CHECK(p.dim() == 2);
}
}

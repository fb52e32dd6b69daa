//! \file test_ldt.cpp
#include <doctest.h>

#include <numbers>

#include "generators.hpp"
#include "qpc/base_dynamics.hpp"
#include "qpc/error.hpp"
#include "qpc/ldt.hpp"

using namespace qpc;
using doctest::Approx;

namespace
{
QpCocycle diag_atom(double freq, double s)
{
    return make_cocycle(TorusPoint::wrap({freq}), FiberMap::constant(SLMatrix::diag({s, 1.0 / s})));
}

CocycleMeasure coin_measure(double fa = 0.0, double fb = 0.0)
{
    return CocycleMeasure({{diag_atom(fa, 2.0), 0.5}, {diag_atom(fb, 0.5), 0.5}});
}

Observable coin_observable()
{
    return Observable::symbolic(2, 1, {1.0, 0.0}, 1);
}
}  // namespace

TEST_SUITE("base_dynamics")
{
TEST_CASE("orbits")
{
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    auto single = CocycleMeasure::dirac(diag_atom(golden, 2.0));
    auto theta0 = TorusPoint::wrap({0.1});
    auto orbit = base_orbit(single, theta0, 50, 1, 0);
    REQUIRE(orbit.thetas.size() == 51);
    for (std::size_t j = 0; j <= 50; ++j)
        CHECK(torus_dist(orbit.thetas[j], TorusPoint::wrap({0.1 + j * golden})) <= 1e-12);

    auto still = base_orbit(coin_measure(), theta0, 100, 2, 0);
    for (auto const& t : still.thetas)
        CHECK(t == theta0);

    auto mixed = base_orbit(coin_measure(0.0, 0.5), TorusPoint::zero(1), 200, 3, 7);
    std::size_t second = 0;
    for (std::size_t j = 0; j < 200; ++j)
    {
        second += mixed.path.symbols[j] == 1;
        CHECK(torus_dist(mixed.thetas[j + 1], TorusPoint::wrap({0.5 * second})) <= 1e-12);
    }

    auto again = base_orbit(coin_measure(0.0, 0.5), TorusPoint::zero(1), 200, 3, 7);
    CHECK(again.path.symbols == mixed.path.symbols);
}

TEST_CASE("observables")
{
    auto one = Observable::constant(2, 1, 1.0);
    auto orbit = base_orbit(coin_measure(), TorusPoint::zero(1), 30, 4, 0);
    CHECK(birkhoff_average(one, orbit.path, orbit.thetas) == Approx(1.0));
    CHECK(one.expectation(coin_measure()) == Approx(1.0));

    CHECK_THROWS_AS(Observable::symbolic(2, 2, {1.0, 0.0}, 1), Error);
    auto pair = Observable::symbolic(2, 2, {0.0, 1.0, 2.0, 3.0}, 1);
    std::vector<std::uint32_t> w{1, 0};
    CHECK(pair.table_value(w) == 2.0);
    CHECK(pair.expectation(coin_measure()) == Approx(1.5));

    // window k uses L - k + 1 terms
    auto short_orbit = base_orbit(coin_measure(), TorusPoint::zero(1), 1, 4, 0);
    CHECK_THROWS_AS(birkhoff_average(pair, short_orbit.path, short_orbit.thetas), Error);
}

TEST_CASE("Birkhoff averages")
{
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    auto rotation = CocycleMeasure::dirac(diag_atom(golden, 2.0));
    Observable cos_only(1, 1, {1.0}, TrigPoly::cosine({1}, 2.0));
    auto orbit = base_orbit(rotation, TorusPoint::wrap({0.3}), 10000, 5, 0);
    double avg = birkhoff_average(cos_only, orbit.path, orbit.thetas);
    double direct = 0.0;
    for (int j = 0; j < 10000; ++j)
        direct += 2.0 * std::cos(2.0 * std::numbers::pi * (0.3 + j * golden));
    CHECK(avg == Approx(direct / 10000).epsilon(1e-9).scale(1.0));
    CHECK(std::fabs(avg) <= 1e-2);

    auto coin = base_orbit(coin_measure(), TorusPoint::zero(1), 10000, 6, 0);
    CHECK(birkhoff_average(coin_observable(), coin.path, coin.thetas) == Approx(0.5).epsilon(0.04));
}
}

TEST_SUITE("ldt")
{
TEST_CASE("rows and rate fit")
{
    auto row = make_ldt_row(10, 100, 25);
    CHECK(row.tail == 0.25);
    CHECK(row.std_error == Approx(std::sqrt(0.25 * 0.75 / 100)));

    std::vector<LdtRow> exact;
    for (long n : {10L, 20L, 40L, 80L})
    {
        LdtRow r;
        r.n = n;
        r.samples = 1000000;
        r.tail = 0.8 * std::exp(-0.05 * static_cast<double>(n));
        exact.push_back(r);
    }
    auto fit = fit_exponential_rate(exact);
    CHECK(fit.status == RateStatus::fitted);
    CHECK(fit.rate == Approx(0.05));
    CHECK(fit.intercept == Approx(std::log(0.8)));
    CHECK(fit.r_squared == Approx(1.0));
    CHECK(fit.residual_rms <= 1e-12);

    std::vector<LdtRow> zeros{make_ldt_row(50, 1000, 0), make_ldt_row(100, 1000, 0)};
    auto censored = fit_exponential_rate(zeros);
    CHECK(censored.status == RateStatus::censored);
    CHECK(censored.rate_lower_bound == Approx(std::log(1000.0) / 50.0));

    std::vector<LdtRow> two{make_ldt_row(50, 1000, 5), make_ldt_row(100, 1000, 1),
                            make_ldt_row(200, 1000, 0)};
    CHECK(fit_exponential_rate(two).status == RateStatus::insufficient);

    auto rep = finalize_ldt(two, 0.1, 0.0);
    CHECK(rep.monotone_decay);
    auto bumpy = finalize_ldt({make_ldt_row(50, 100, 5), make_ldt_row(100, 100, 9)}, 0.1, 0.0);
    CHECK_FALSE(bumpy.monotone_decay);
}

TEST_CASE("base tails")
{
    BaseLdtOptions opts;
    opts.theta = TorusPoint::zero(1);
    opts.n_list = {20, 40};
    opts.samples = 2000;
    opts.seed = 9;

    auto constant = estimate_base_ldt(coin_measure(), Observable::constant(2, 1, 3.0), opts);
    for (auto const& r : constant.rows)
        CHECK(r.tail == 0.0);
    CHECK(constant.fit.status == RateStatus::censored);

    auto deterministic = CocycleMeasure::dirac(diag_atom(0.3, 2.0));
    Observable trig(1, 1, {1.0}, TrigPoly::cosine({1}, 1.0));
    opts.epsilon = 0.5;
    auto det = estimate_base_ldt(deterministic, trig, opts);
    for (auto const& r : det.rows)
        CHECK((r.tail == 0.0 || r.tail == 1.0));
}

TEST_CASE("tails respect Hoeffding and shrink with epsilon")
{
    BaseLdtOptions opts;
    opts.theta = TorusPoint::zero(1);
    opts.n_list = {25, 50, 100};
    opts.samples = 20000;
    opts.seed = 10;
    std::vector<double> previous;
    for (double eps : {0.05, 0.1, 0.15})
    {
        opts.epsilon = eps;
        auto rep = estimate_base_ldt(coin_measure(), coin_observable(), opts);
        for (std::size_t i = 0; i < rep.rows.size(); ++i)
        {
            auto const& r = rep.rows[i];
            double hoeffding = 2.0 * std::exp(-2.0 * r.n * eps * eps);
            CHECK(r.tail <= hoeffding + 3.0 * r.std_error);
            if (!previous.empty())
                CHECK(r.tail <= previous[i]);
        }
        previous.clear();
        for (auto const& r : rep.rows)
            previous.push_back(r.tail);
    }
}

TEST_CASE("tails of symbol-only observables do not depend on theta")
{
    BaseLdtOptions opts;
    opts.n_list = {30, 60};
    opts.samples = 3000;
    opts.seed = 11;
    opts.epsilon = 0.1;
    auto nu = coin_measure(0.2, 0.7);
    std::vector<LdtRow> reference;
    for (auto const& theta : torus_grid(1, 16))
    {
        opts.theta = theta;
        auto rep = estimate_base_ldt(nu, coin_observable(), opts);
        if (reference.empty())
            reference = rep.rows;
        for (std::size_t i = 0; i < rep.rows.size(); ++i)
            CHECK(rep.rows[i].hits == reference[i].hits);
    }

    // with a trig factor the tails move but stay comparable
    Observable mixed(2, 1, {1.0, -1.0}, TrigPoly::cosine({1}, 1.0));
    opts.epsilon = 0.2;
    double lo = 1.0, hi = 0.0;
    for (auto const& theta : torus_grid(1, 16))
    {
        opts.theta = theta;
        auto rep = estimate_base_ldt(nu, mixed, opts);
        lo = std::min(lo, rep.rows[0].tail);
        hi = std::max(hi, rep.rows[0].tail);
    }
    CHECK(hi < 10.0 * lo);
}

TEST_CASE("threads do not change tails")
{
    BaseLdtOptions opts;
    opts.theta = TorusPoint::zero(1);
    opts.n_list = {40};
    opts.samples = 5000;
    opts.seed = 12;
    auto serial = estimate_base_ldt(coin_measure(), coin_observable(), opts);
    opts.threads = 4;
    auto threaded = estimate_base_ldt(coin_measure(), coin_observable(), opts);
    CHECK(serial.rows[0].hits == threaded.rows[0].hits);
}
}

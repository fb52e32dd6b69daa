//! \file acceptance.cpp
//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every criterion renders its measurements as CSV text. The suite runs each
//! criterion at 1 and 8 threads and requires byte-identical CSVs.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "qpc/base_dynamics.hpp"
#include "qpc/ergodicity.hpp"
#include "qpc/lyapunov.hpp"
#include "qpc/runner.hpp"
#include "qpc/schrodinger.hpp"
#include "qpc/wasserstein.hpp"

using namespace qpc;

namespace
{
double const golden = (std::sqrt(5.0) - 1.0) / 2.0;

struct Outcome
{
    bool pass = true;
    std::string detail;
    std::string csv;
};

//! Accumulates CSV rows and pass/fail checks.
class Recorder
{
  public:
    explicit Recorder(std::string header) { csv_ << header << '\n'; }

    void row(std::vector<double> const& values)
    {
        for (std::size_t i = 0; i < values.size(); ++i)
            csv_ << (i ? "," : "") << format_double(values[i]);
        csv_ << '\n';
    }

    void check(bool ok, std::string const& what)
    {
        if (!ok && pass_)
            first_failure_ = what;
        pass_ = pass_ && ok;
    }

    Outcome finish(std::string detail) const
    {
        if (!pass_)
            detail = "first failure: " + first_failure_ + "; " + detail;
        return {pass_, std::move(detail), csv_.str()};
    }

  private:
    std::ostringstream csv_;
    bool pass_ = true;
    std::string first_failure_;
};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

QpCocycle diag_atom(double freq, double s)
{
    return make_cocycle(TorusPoint::wrap({freq}),
                        FiberMap::constant(SLMatrix(make_matrix({{s, 0.0}, {0.0, 1.0 / s}}))));
}

//! Fair +-1 walk: diag(2, 1/2) or its inverse, frequency zero.
CocycleMeasure walk_measure()
{
    return CocycleMeasure({{diag_atom(0.0, 2.0), 0.5}, {diag_atom(0.0, 0.5), 0.5}});
}

QpCocycle free_schrodinger(double energy)
{
    return make_cocycle(TorusPoint::wrap({golden}),
                        FiberMap::schrodinger(TrigPoly::constant(1, 0.0), energy));
}

//---------------------------------------------------------------------------//
Outcome group_laws(unsigned)
{
    Recorder rec("trial,assoc_err,left_inverse_err,right_inverse_err");
    Rng rng(1001, {});
    double worst = 0.0;
    auto identity = FiberMap::identity(2);
    for (int t = 0; t < 200; ++t)
    {
        auto a = test::random_cocycle(rng, 5);
        auto b = test::random_cocycle(rng, 5);
        auto c = test::random_cocycle(rng, 5);
        auto left = compose(compose(a, b), c);
        auto right = compose(a, compose(b, c));
        double assoc = std::max(torus_dist(left.freq, right.freq),
                                test::grid_diff(left.fiber, right.fiber, 64));
        auto li = compose(inverse(a), a);
        auto ri = compose(a, inverse(a));
        double lerr = std::max(torus_dist(li.freq, TorusPoint::zero(1)),
                               test::grid_diff(li.fiber, identity, 64));
        double rerr = std::max(torus_dist(ri.freq, TorusPoint::zero(1)),
                               test::grid_diff(ri.fiber, identity, 64));
        rec.row({double(t), assoc, lerr, rerr});
        worst = std::max({worst, assoc, lerr, rerr});
        rec.check(assoc <= 1e-9 && lerr <= 1e-9 && rerr <= 1e-9, "trial " + std::to_string(t));
    }
    return rec.finish("max error " + fmt(worst));
}

Outcome fourier_diagonalization(unsigned)
{
    Recorder rec("trial,abs_err");
    Rng rng(1002, {});
    double worst = 0.0;
    for (int t = 0; t < 100; ++t)
    {
        std::size_t d = 1 + test::pick(rng, 3);
        auto mu = test::random_torus_measure(rng, 1 + test::pick(rng, 5), d);
        auto nu = test::random_torus_measure(rng, 1 + test::pick(rng, 5), d);
        auto conv = convolve(mu, nu);
        double err = 0.0;
        for (int probe = 0; probe < 20; ++probe)
        {
            IntVec k(d);
            for (auto& x : k)
                x = static_cast<int>(test::pick(rng, 41)) - 20;
            err = std::max(err, std::abs(fourier_coeff(conv, k)
                                         - fourier_coeff(mu, k) * fourier_coeff(nu, k)));
        }
        rec.row({double(t), err});
        worst = std::max(worst, err);
        rec.check(err <= 1e-12, "trial " + std::to_string(t));
    }
    return rec.finish("max error " + fmt(worst));
}

Outcome ergodicity_battery(unsigned)
{
    Recorder rec("case,n,value");
    auto half = TorusMeasure::dirac(TorusPoint::wrap({0.5}));
    auto f_half = check_fourier_criterion(half, default_fourier_cutoff(1));
    rec.check(f_half.verdict == Verdict::fail, "delta_0.5 verdict");
    rec.check(f_half.witness && *f_half.witness == IntVec{2}, "delta_0.5 witness");
    auto frozen = TrigPoly::cosine({2}, 2.0);  // e_2 + e_-2
    Rng rng(1003, {});
    for (long n : {1L, 2L, 3L, 10L, 101L, 1000L, 123457L})
    {
        auto theta = test::random_point(rng, 1);
        double expected = frozen(theta);
        double got = cesaro_markov_average(half, frozen, theta, n);
        rec.row({0.0, double(n), got - expected});
        rec.check(std::fabs(got - expected) <= 1e-12, "frozen mode at n=" + std::to_string(n));
    }
    double at_zero = cesaro_markov_average(half, frozen, TorusPoint::zero(1), 1000);
    rec.row({1.0, 1000.0, at_zero});
    rec.check(std::fabs(at_zero - 2.0) <= 1e-12, "frozen mode value at theta = 0");

    auto gold = TorusMeasure::dirac(TorusPoint::wrap({golden}));
    auto f_gold = check_fourier_criterion(gold, 50);
    rec.check(f_gold.verdict == Verdict::pass, "golden mean verdict");
    long n = static_cast<long>(std::ceil(2.0 / (1e-3 * f_gold.min_gap)));
    double scan = uniform_cesaro_scan(gold, TrigPoly::cosine({1}, 1.0), n, 256);
    rec.row({2.0, double(n), scan});
    rec.check(scan < 1e-3, "golden mean scan");
    return rec.finish("witness " + (f_half.witness ? std::to_string((*f_half.witness)[0]) : "none")
                      + ", golden scan " + fmt(scan) + " at n=" + std::to_string(n));
}

Outcome cocycle_identity(unsigned)
{
    Recorder rec("trial,n,m,abs_err,scaled_err");
    Rng rng(1004, {});
    double worst_abs = 0.0, worst_scaled = 0.0;
    for (int t = 0; t < 100; ++t)
    {
        auto nu = test::random_cocycle_measure(rng, 1 + test::pick(rng, 3), 3);
        auto theta = test::random_point(rng, 1);
        long n = 1 + static_cast<long>(test::pick(rng, 20));
        long m = 1 + static_cast<long>(test::pick(rng, 20));
        std::uint64_t seed = 77;
        auto orbit = base_orbit(nu, theta, n + m, seed, t);
        Matrix first = Matrix::Identity(2, 2), second = Matrix::Identity(2, 2);
        for (long j = 0; j < n; ++j)
            first = nu.point(orbit.path.symbols[j]).fiber(orbit.thetas[j]) * first;
        for (long j = n; j < n + m; ++j)
            second = nu.point(orbit.path.symbols[j]).fiber(orbit.thetas[j]) * second;
        auto full = raw_transfer_product(nu, theta, n + m, seed, t);
        double err = test::max_abs_diff(full, second * first);
        // rounding in a product scales with the factor norms
        double scale = std::max(1.0, op_norm(second) * op_norm(first));
        rec.row({double(t), double(n), double(m), err, err / scale});
        worst_abs = std::max(worst_abs, err);
        worst_scaled = std::max(worst_scaled, err / scale);
        rec.check(err <= 1e-8 * scale, "trial " + std::to_string(t));
    }
    return rec.finish("max scaled error " + fmt(worst_scaled) + ", max absolute error "
                      + fmt(worst_abs));
}

Outcome lyapunov_exact(unsigned threads)
{
    Recorder rec("case,estimate,stderr,expected");
    L1Options opts;
    opts.threads = threads;
    opts.seed = 1005;
    std::string detail;
    auto run = [&](int id, CocycleMeasure const& nu, double expected, double tol) {
        auto est = estimate_L1(nu, opts);
        rec.row({double(id), est.estimate, est.std_error, expected});
        rec.check(std::fabs(est.estimate - expected) <= tol, "case " + std::to_string(id));
        detail += (detail.empty() ? "" : ", ") + fmt(est.estimate);
    };
    opts.n = 1000;
    opts.samples = 10;
    run(0, CocycleMeasure::dirac(diag_atom(golden, 2.0)), std::log(2.0), 1e-6);
    opts.n = 10000;
    opts.samples = 1000;
    run(1, walk_measure(), 0.0, 0.02);
    opts.n = 2000;
    opts.samples = 100;
    run(2, CocycleMeasure::dirac(free_schrodinger(3.0)), std::log((3.0 + std::sqrt(5.0)) / 2.0), 0.01);
    run(3, CocycleMeasure::dirac(free_schrodinger(1.0)), 0.0, 0.02);
    return rec.finish("estimates " + detail);
}

Outcome wasserstein_oracle(unsigned)
{
    Recorder rec("space,trial,w1,brute,abs_err");
    Rng rng(1006, {});
    GMetric metric{32};
    double worst = 0.0;
    for (int t = 0; t < 50; ++t)
    {
        auto a = test::random_torus_measure(rng, 1 + test::pick(rng, 3));
        auto b = test::random_torus_measure(rng, 1 + test::pick(rng, 3));
        double w = wasserstein1(a, b);
        double brute = test::brute_w1(a, b, [](auto const& x, auto const& y) { return torus_dist(x, y); });
        rec.row({0.0, double(t), w, brute, std::fabs(w - brute)});
        rec.check(std::fabs(w - brute) <= 1e-12, "circle trial " + std::to_string(t));
        worst = std::max(worst, std::fabs(w - brute));
    }
    for (int t = 0; t < 50; ++t)
    {
        auto a = test::random_cocycle_measure(rng, 1 + test::pick(rng, 3), 3);
        auto b = test::random_cocycle_measure(rng, 1 + test::pick(rng, 3), 3);
        double w = wasserstein1(a, b, metric);
        double brute = test::brute_w1(
            a, b, [&](auto const& x, auto const& y) { return g_distance(x, y, metric); });
        rec.row({1.0, double(t), w, brute, std::fabs(w - brute)});
        rec.check(std::fabs(w - brute) <= 1e-12, "cocycle trial " + std::to_string(t));
        worst = std::max(worst, std::fabs(w - brute));
    }
    return rec.finish("max error " + fmt(worst));
}

Outcome base_ldt(unsigned threads)
{
    Recorder rec("n,tail,stderr,hoeffding");
    auto nu = walk_measure();
    auto coin = Observable::symbolic(2, 1, {1.0, 0.0}, 1);
    BaseLdtOptions opts;
    opts.epsilon = 0.1;
    opts.n_list = {50, 100, 200};
    opts.samples = 100000;
    opts.theta = TorusPoint::zero(1);
    opts.seed = 1007;
    opts.threads = threads;
    auto report = estimate_base_ldt(nu, coin, opts);
    for (auto const& row : report.rows)
    {
        double hoeffding = 2.0 * std::exp(-2.0 * row.n * opts.epsilon * opts.epsilon);
        rec.row({double(row.n), row.tail, row.std_error, hoeffding});
        rec.check(row.tail <= hoeffding + 3.0 * row.std_error, "n=" + std::to_string(row.n));
    }
    rec.check(report.fit.rate > 0.0, "rate");
    rec.row({-1.0, report.fit.rate, report.fit.r_squared, 0.0});
    return rec.finish("rate " + fmt(report.fit.rate));
}

Outcome fiber_ldt(unsigned threads)
{
    Recorder rec("case,n,tail,stderr");
    FiberLdtOptions opts;
    opts.theta = TorusPoint::zero(1);
    opts.epsilon = 0.1 * std::log(2.0);
    opts.reference_L1 = 0.0;
    opts.n_list = {100, 200, 400};
    opts.samples = 10000;
    opts.seed = 1008;
    opts.threads = threads;
    auto walk = fiber_ldt_tail(walk_measure(), opts);
    for (auto const& row : walk.rows)
        rec.row({0.0, double(row.n), row.tail, row.std_error});
    rec.check(walk.fit.status == RateStatus::fitted, "walk fit status");
    rec.check(walk.fit.rate > 0.0, "walk slope");
    rec.check(walk.fit.r_squared >= 0.9, "walk R^2");
    rec.row({0.0, -1.0, -walk.fit.rate, walk.fit.r_squared});

    opts.reference_L1 = std::log(2.0);
    auto diag = fiber_ldt_tail(CocycleMeasure::dirac(diag_atom(golden, 2.0)), opts);
    for (auto const& row : diag.rows)
    {
        rec.row({1.0, double(row.n), row.tail, row.std_error});
        rec.check(row.tail == 0.0, "diag tail at n=" + std::to_string(row.n));
    }
    return rec.finish("walk slope " + fmt(-walk.fit.rate) + ", R^2 " + fmt(walk.fit.r_squared));
}

Outcome semicontinuity(unsigned threads)
{
    Recorder rec("t,w1,L1,stderr");
    auto family = [](double t) {
        return CocycleMeasure::dirac(diag_atom(golden, std::exp2(1.0 - t)));
    };
    L1Options opts;
    opts.n = 1000;
    opts.samples = 100;
    opts.seed = 1009;
    opts.threads = threads;
    std::vector<double> ts{0.05, 0.1};
    std::vector<CocycleMeasure> perturbations;
    for (double t : ts)
        perturbations.push_back(family(t));
    auto scan = semicontinuity_scan(family(0.0), perturbations, opts, GMetric{});
    rec.row({0.0, 0.0, scan.reference.estimate, scan.reference.std_error});
    double prev_w1 = 0.0, prev_l1 = scan.reference.estimate;
    for (auto const& row : scan.rows)
    {
        rec.row({ts[row.index], row.w1, row.l1.estimate, row.l1.std_error});
        rec.check(row.w1 >= prev_w1 && row.l1.estimate <= prev_l1, "monotone in W1");
        rec.check(row.l1.estimate <= scan.reference.estimate + 0.05 + 3.0 * row.l1.std_error,
                  "upper bound");
        prev_w1 = row.w1;
        prev_l1 = row.l1.estimate;
    }
    return rec.finish("L1 at t=0 " + fmt(scan.reference.estimate) + ", last " + fmt(prev_l1));
}

struct Criterion
{
    int id;
    char const* name;
    std::function<Outcome(unsigned)> run;
};
}  // namespace

int main()
{
    std::vector<Criterion> criteria{
        {1, "group laws", group_laws},
        {2, "Fourier diagonalization", fourier_diagonalization},
        {3, "ergodicity battery", ergodicity_battery},
        {4, "cocycle identity", cocycle_identity},
        {5, "exact Lyapunov exponents", lyapunov_exact},
        {6, "Wasserstein oracle", wasserstein_oracle},
        {7, "base LDT", base_ldt},
        {8, "fiber upper LDT", fiber_ldt},
        {9, "upper semicontinuity", semicontinuity},
    };
    bool all = true, deterministic = true;
    std::string mismatches;
    for (auto const& c : criteria)
    {
        auto start = std::chrono::steady_clock::now();
        Outcome serial;
        try
        {
            serial = c.run(1);
        }
        catch (std::exception const& e)
        {
            serial = {false, std::string("exception: ") + e.what(), {}};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d (%s): %s [%.2fs]\n", serial.pass ? "PASS" : "FAIL", c.id,
                    c.name, serial.detail.c_str(), seconds);
        std::fflush(stdout);
        all = all && serial.pass;

        Outcome threaded;
        try
        {
            threaded = c.run(8);
        }
        catch (std::exception const&)
        {
        }
        if (serial.csv.empty() || threaded.csv != serial.csv)
        {
            deterministic = false;
            mismatches += " " + std::to_string(c.id);
        }
    }
    std::printf("%s criterion 10 (determinism at 1 and 8 threads): %s\n",
                deterministic ? "PASS" : "FAIL",
                deterministic ? "all CSVs byte-identical" : ("CSV mismatch in" + mismatches).c_str());
    all = all && deterministic;
    return all ? 0 : 1;
}

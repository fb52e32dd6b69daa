//! \file lyapunov.cpp
#include "qpc/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qpc/error.hpp"
#include "qpc/parallel.hpp"
#include "qpc/rng.hpp"
#include "qpc/wasserstein.hpp"

namespace qpc
{
namespace
{
//! Sub-stream used for Haar start points, distinct from symbol streams.
constexpr std::uint64_t kThetaStream = 0x7468657461ull;

// Visit A(omega_j) evaluated at theta_j for j = 0..n-1 along the path keyed
// by (seed, sample_index).
template<class F>
void walk(CocycleSampler const& sampler,
          TorusPoint theta,
          long n,
          std::uint64_t seed,
          std::uint64_t sample_index,
          F&& visit)
{
    require(n >= 1, "transfer product: n must be at least 1");
    require(theta.dim() == torus_dim(sampler.measure()),
            "transfer product: theta dimension mismatch");
    Rng rng(seed, {sample_index});
    for (long j = 0; j < n; ++j)
    {
        std::size_t atom = sampler.draw(rng);
        visit(sampler.fiber(atom, theta));
        theta = translate(theta, sampler.freq(atom));
    }
}
}  // namespace

//---------------------------------------------------------------------------//
ProductAccumulator::ProductAccumulator(int m) : current_(Matrix::Identity(m, m)) {}

void ProductAccumulator::left_multiply(Matrix const& a)
{
    current_ = a * current_;
    ++steps_;
    double frob2 = current_.squaredNorm();
    if (frob2 > upper_bound * upper_bound || frob2 < lower_bound * lower_bound)
    {
        if (!all_finite(current_))
            throw Error("transfer product: non-finite matrix entries after "
                        + std::to_string(steps_) + " steps");
        double norm = op_norm(current_);
        if (!(norm > 0.0))
            throw Error("transfer product: product collapsed to zero");
        current_ /= norm;
        log_scale_ += std::log(norm);
        ++renormalizations_;
    }
    else if (!std::isfinite(frob2))
    {
        throw Error("transfer product: non-finite matrix entries");
    }
}

double ProductAccumulator::log_norm() const
{
    return log_scale_ + std::log(op_norm(current_));
}

//---------------------------------------------------------------------------//
CocycleSampler::CocycleSampler(CocycleMeasure const& nu) : nu_(&nu)
{
    cache_.reserve(nu.size());
    TorusPoint origin = TorusPoint::zero(torus_dim(nu));
    for (auto const& atom : nu.atoms())
    {
        if (atom.point.fiber.is_constant())
            cache_.emplace_back(atom.point.fiber(origin));
        else
            cache_.emplace_back(std::nullopt);
    }
}

double transfer_log_norm(CocycleSampler const& sampler,
                         TorusPoint const& theta,
                         long n,
                         std::uint64_t seed,
                         std::uint64_t sample_index)
{
    ProductAccumulator acc(matrix_dim(sampler.measure()));
    walk(sampler, theta, n, seed, sample_index,
         [&](Matrix const& a) { acc.left_multiply(a); });
    double result = acc.log_norm();
    if (!std::isfinite(result))
        throw Error("transfer product: non-finite log-norm");
    return result;
}

double transfer_log_norm(CocycleMeasure const& nu,
                         TorusPoint const& theta,
                         long n,
                         std::uint64_t seed,
                         std::uint64_t sample_index)
{
    return transfer_log_norm(CocycleSampler(nu), theta, n, seed, sample_index);
}

Matrix raw_transfer_product(CocycleMeasure const& nu,
                            TorusPoint const& theta,
                            long n,
                            std::uint64_t seed,
                            std::uint64_t sample_index)
{
    int m = matrix_dim(nu);
    Matrix product = Matrix::Identity(m, m);
    walk(CocycleSampler(nu), theta, n, seed, sample_index,
         [&](Matrix const& a) { product = a * product; });
    return product;
}

//---------------------------------------------------------------------------//
char const* to_string(ThetaPolicy p)
{
    return p == ThetaPolicy::fixed ? "fixed" : "haar";
}

TorusPoint sample_start(L1Options const& opts, std::size_t d, std::uint64_t sample_index)
{
    if (opts.policy == ThetaPolicy::haar)
    {
        Rng rng(opts.seed, {kThetaStream, sample_index});
        return haar_sample(rng, d);
    }
    return opts.theta0 ? *opts.theta0 : TorusPoint::zero(d);
}

L1Estimate estimate_L1(CocycleMeasure const& nu, L1Options const& opts)
{
    require(opts.n >= 1, "estimate_L1: n must be at least 1");
    require(opts.samples >= 1, "estimate_L1: need at least one sample");
    std::size_t d = torus_dim(nu);
    if (opts.theta0)
        require(opts.theta0->dim() == d, "estimate_L1: theta0 dimension mismatch");

    L1Estimate est;
    est.n = opts.n;
    est.samples = opts.samples;
    est.policy = opts.policy;
    if (opts.check_ergodicity)
    {
        int cutoff = opts.ergodicity_cutoff > 0 ? opts.ergodicity_cutoff
                                                : default_fourier_cutoff(d);
        est.base_ergodic = check_fourier_criterion(pushforward_freq(nu), cutoff).verdict;
    }

    CocycleSampler sampler(nu);
    std::vector<double> rates(opts.samples);
    auto n = static_cast<double>(opts.n);
    parallel_for(opts.samples, opts.threads, [&](std::size_t i) {
        TorusPoint theta = sample_start(opts, d, i);
        rates[i] = transfer_log_norm(sampler, theta, opts.n, opts.seed, i) / n;
    });
    auto stats = mean_stderr(rates);
    est.estimate = stats.mean;
    est.std_error = stats.std_error;
    return est;
}

//---------------------------------------------------------------------------//
LdtReport fiber_ldt_tail(CocycleMeasure const& nu, FiberLdtOptions const& opts)
{
    require(opts.epsilon > 0.0, "fiber LDT: epsilon must be positive");
    require(!opts.n_list.empty(), "fiber LDT: empty n list");
    require(opts.samples >= 1, "fiber LDT: need at least one sample");
    CocycleSampler sampler(nu);
    double threshold = opts.reference_L1 + opts.epsilon;

    std::vector<LdtRow> rows;
    for (long n : opts.n_list)
    {
        require(n >= 1, "fiber LDT: horizons must be positive");
        std::uint64_t seed_n = derive_seed(opts.seed, {static_cast<std::uint64_t>(n)});
        std::vector<char> hit(opts.samples, 0);
        parallel_for(opts.samples, opts.threads, [&](std::size_t i) {
            double rate = transfer_log_norm(sampler, opts.theta, n, seed_n, i)
                          / static_cast<double>(n);
            hit[i] = rate >= threshold;
        });
        auto hits = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
        rows.push_back(make_ldt_row(n, opts.samples, hits));
    }
    return finalize_ldt(std::move(rows), opts.epsilon, opts.reference_L1);
}

//---------------------------------------------------------------------------//
SemicontinuityScan semicontinuity_scan(CocycleMeasure const& nu0,
                                       std::vector<CocycleMeasure> const& perturbations,
                                       L1Options const& opts,
                                       GMetric const& metric)
{
    std::size_t d = torus_dim(nu0);
    int m = matrix_dim(nu0);
    for (auto const& nu : perturbations)
        require(torus_dim(nu) == d && matrix_dim(nu) == m,
                "semicontinuity scan: perturbation dimensions differ from the reference");

    SemicontinuityScan scan;
    scan.reference = estimate_L1(nu0, opts);
    for (std::size_t i = 0; i < perturbations.size(); ++i)
    {
        ScanRow row;
        row.index = i;
        row.w1 = wasserstein1(perturbations[i], nu0, metric);
        row.l1 = estimate_L1(perturbations[i], opts);
        scan.rows.push_back(row);
    }
    std::stable_sort(scan.rows.begin(), scan.rows.end(),
                     [](ScanRow const& a, ScanRow const& b) { return a.w1 < b.w1; });
    return scan;
}

}  // namespace qpc

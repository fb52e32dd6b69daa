//---------------------------------------------------------------------------//
//! \file qpc/lyapunov.hpp
//! Random products of quasiperiodic cocycles and their growth rates.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qpc/ergodicity.hpp"
#include "qpc/ldt.hpp"
#include "qpc/matrix.hpp"
#include "qpc/measure.hpp"

namespace qpc
{
//---------------------------------------------------------------------------//
/*!
 * Running product M_n ... M_1 stored as current * exp(log_scale).
 *
 * The current factor is divided by its operator norm whenever its Frobenius
 * norm leaves [1e-6, 1e6]; the logarithm of that norm is added to
 * log_scale. Hence log ||raw product|| = log_scale + log ||current||.
 */
class ProductAccumulator
{
  public:
    static constexpr double lower_bound = 1e-6;
    static constexpr double upper_bound = 1e6;

    explicit ProductAccumulator(int m);

    //! current <- a * current, renormalizing if needed. Throws on
    //! non-finite entries.
    void left_multiply(Matrix const& a);

    Matrix const& current() const { return current_; }
    double log_scale() const { return log_scale_; }
    long steps() const { return steps_; }
    long renormalizations() const { return renormalizations_; }

    //! log of the operator norm of the raw product.
    double log_norm() const;

  private:
    Matrix current_;
    double log_scale_ = 0.0;
    long steps_ = 0;
    long renormalizations_ = 0;
};

//---------------------------------------------------------------------------//
/*!
 * Driving measure prepared for repeated sampling: fibers that do not depend
 * on theta are evaluated once.
 */
class CocycleSampler
{
  public:
    explicit CocycleSampler(CocycleMeasure const& nu);

    CocycleMeasure const& measure() const { return *nu_; }
    std::size_t draw(Rng& rng) const { return nu_->sample_index(rng); }
    Matrix fiber(std::size_t atom, TorusPoint const& theta) const
    {
        auto const& cached = cache_[atom];
        return cached ? *cached : nu_->point(atom).fiber(theta);
    }
    TorusPoint const& freq(std::size_t atom) const { return nu_->point(atom).freq; }

  private:
    CocycleMeasure const* nu_;
    std::vector<std::optional<Matrix>> cache_;
};

//! log ||A^n(omega)(theta)|| for the symbol path keyed by (seed, sample).
double transfer_log_norm(CocycleSampler const& sampler,
                         TorusPoint const& theta,
                         long n,
                         std::uint64_t seed,
                         std::uint64_t sample_index);
double transfer_log_norm(CocycleMeasure const& nu,
                         TorusPoint const& theta,
                         long n,
                         std::uint64_t seed,
                         std::uint64_t sample_index);

//! Unrenormalized product A^n(omega)(theta) for the same symbol path as
//! transfer_log_norm. Intended for short horizons (testing and diagnostics).
Matrix raw_transfer_product(CocycleMeasure const& nu,
                            TorusPoint const& theta,
                            long n,
                            std::uint64_t seed,
                            std::uint64_t sample_index);

//---------------------------------------------------------------------------//
enum class ThetaPolicy
{
    fixed,  //!< every sample starts at theta0
    haar,   //!< fresh Haar draw per sample
};

char const* to_string(ThetaPolicy p);

struct L1Options
{
    long n = 1000;
    std::size_t samples = 100;
    ThetaPolicy policy = ThetaPolicy::fixed;
    //! Start point for the fixed policy (defaults to zero).
    std::optional<TorusPoint> theta0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    //! Run the Fourier ergodicity check on the frequency law.
    bool check_ergodicity = true;
    int ergodicity_cutoff = 0;
};

//! Estimate of the maximal Lyapunov exponent (natural log per step).
struct L1Estimate
{
    double estimate = 0.0;
    double std_error = 0.0;
    long n = 0;
    std::size_t samples = 0;
    ThetaPolicy policy = ThetaPolicy::fixed;
    //! Advisory: outcome of the frequency-law Fourier check (inconclusive
    //! when the check was skipped).
    Verdict base_ergodic = Verdict::inconclusive;
};

//! Start point of sample i under a policy.
TorusPoint sample_start(L1Options const& opts, std::size_t d, std::uint64_t sample_index);

//! Mean over samples of (1/n) log ||A^n(omega)(theta)||.
L1Estimate estimate_L1(CocycleMeasure const& nu, L1Options const& opts);

//---------------------------------------------------------------------------//
struct FiberLdtOptions
{
    TorusPoint theta;
    double epsilon = 0.1;
    double reference_L1 = 0.0;
    std::vector<long> n_list;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/*!
 * Upper tail nu^Z{ (1/n) log ||A^n(omega)(theta)|| >= reference_L1 + epsilon }
 * per horizon n. Only the upper tail is estimated.
 */
LdtReport fiber_ldt_tail(CocycleMeasure const& nu, FiberLdtOptions const& opts);

//---------------------------------------------------------------------------//
struct ScanRow
{
    std::size_t index = 0;  //!< position in the input perturbation list
    double w1 = 0.0;
    L1Estimate l1;
};

struct SemicontinuityScan
{
    L1Estimate reference;
    //! Sorted by W1 distance to the reference measure.
    std::vector<ScanRow> rows;
};

/*!
 * W1 distance of each perturbation to nu0 (with g_distance) and its L1
 * estimate. All estimates share the same seed (common random numbers).
 */
SemicontinuityScan semicontinuity_scan(CocycleMeasure const& nu0,
                                       std::vector<CocycleMeasure> const& perturbations,
                                       L1Options const& opts,
                                       GMetric const& metric);

}  // namespace qpc

//---------------------------------------------------------------------------//
//! \file qpc/ldt.hpp
//! Empirical tail probabilities and exponential rate fits.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qpc
{
//! Empirical tail at one time horizon n.
struct LdtRow
{
    long n = 0;
    std::size_t samples = 0;
    std::size_t hits = 0;
    double tail = 0.0;
    //! Binomial standard error sqrt(p (1 - p) / samples).
    double std_error = 0.0;
};

enum class RateStatus
{
    fitted,        //!< least-squares fit over >= 3 nonzero tails
    censored,      //!< every tail was zero; only a lower bound is known
    insufficient,  //!< one or two nonzero tails
};

char const* to_string(RateStatus s);

/*!
 * Fit of log(tail) = intercept - rate * n over the strictly positive tails.
 *
 * When all tails vanish the rate is censored at log(samples) / min n: any
 * tail below 1/samples would have produced the same counts.
 */
struct RateFit
{
    RateStatus status = RateStatus::insufficient;
    double rate = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    //! Root mean square residual of the log-tail fit.
    double residual_rms = 0.0;
    //! Censoring bound (only meaningful when status == censored).
    double rate_lower_bound = 0.0;
    std::size_t points = 0;
};

RateFit fit_exponential_rate(std::span<LdtRow const> rows);

//! Output of a tail-probability experiment.
struct LdtReport
{
    std::vector<LdtRow> rows;
    RateFit fit;
    double epsilon = 0.0;
    //! Reference value the deviations are measured from.
    double reference = 0.0;
    //! True when tails are non-increasing in n.
    bool monotone_decay = true;
};

//! Build an LdtRow from hit counts.
LdtRow make_ldt_row(long n, std::size_t samples, std::size_t hits);

//! Finish a report: rate fit and monotonicity diagnostic.
LdtReport finalize_ldt(std::vector<LdtRow> rows, double epsilon, double reference);

}  // namespace qpc

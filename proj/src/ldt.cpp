//! \file ldt.cpp
#include "qpc/ldt.hpp"

#include <algorithm>
#include <cmath>

namespace qpc
{
char const* to_string(RateStatus s)
{
    switch (s)
    {
        case RateStatus::fitted:
            return "fitted";
        case RateStatus::censored:
            return "censored";
        case RateStatus::insufficient:
            return "insufficient";
    }
    return "?";
}

LdtRow make_ldt_row(long n, std::size_t samples, std::size_t hits)
{
    LdtRow row;
    row.n = n;
    row.samples = samples;
    row.hits = hits;
    if (samples > 0)
    {
        auto s = static_cast<double>(samples);
        row.tail = static_cast<double>(hits) / s;
        row.std_error = std::sqrt(row.tail * (1.0 - row.tail) / s);
    }
    return row;
}

RateFit fit_exponential_rate(std::span<LdtRow const> rows)
{
    RateFit fit;
    std::vector<double> xs, ys;
    for (auto const& r : rows)
    {
        if (r.tail > 0.0)
        {
            xs.push_back(static_cast<double>(r.n));
            ys.push_back(std::log(r.tail));
        }
    }
    fit.points = xs.size();
    if (xs.empty())
    {
        fit.status = RateStatus::censored;
        if (!rows.empty())
        {
            long min_n = rows.front().n;
            std::size_t samples = rows.front().samples;
            for (auto const& r : rows)
            {
                min_n = std::min(min_n, r.n);
                samples = std::min(samples, r.samples);
            }
            fit.rate_lower_bound = std::log(static_cast<double>(samples))
                                   / static_cast<double>(min_n);
        }
        return fit;
    }
    if (xs.size() < 3)
    {
        fit.status = RateStatus::insufficient;
        return fit;
    }

    auto count = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        mx += xs[i], my += ys[i];
    mx /= count;
    my /= count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0)
    {
        fit.status = RateStatus::insufficient;
        return fit;
    }
    double slope = sxy / sxx;
    fit.status = RateStatus::fitted;
    fit.rate = -slope;
    fit.intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        double r = ys[i] - (fit.intercept + slope * xs[i]);
        ss_res += r * r;
    }
    fit.residual_rms = std::sqrt(ss_res / count);
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

LdtReport finalize_ldt(std::vector<LdtRow> rows, double epsilon, double reference)
{
    LdtReport report;
    report.rows = std::move(rows);
    report.epsilon = epsilon;
    report.reference = reference;
    report.fit = fit_exponential_rate(report.rows);
    std::vector<LdtRow> sorted = report.rows;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](LdtRow const& a, LdtRow const& b) { return a.n < b.n; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].tail > sorted[i - 1].tail)
            report.monotone_decay = false;
    return report;
}

}  // namespace qpc

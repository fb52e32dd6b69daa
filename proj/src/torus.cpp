//! \file torus.cpp
#include "qpc/torus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpc/error.hpp"
#include "qpc/rng.hpp"

namespace qpc
{
//---------------------------------------------------------------------------//
double wrap_unit(double x)
{
    require(std::isfinite(x), "torus: non-finite coordinate");
    double r = x - std::floor(x);
    // x slightly negative can round up to exactly 1
    if (r >= 1.0)
        r = 0.0;
    return r;
}

TorusPoint TorusPoint::zero(std::size_t d)
{
    require(d >= 1 && d <= kMaxTorusDim,
            "torus: dimension must be in [1, " + std::to_string(kMaxTorusDim)
                + "], got " + std::to_string(d));
    TorusPoint p;
    p.dim_ = d;
    return p;
}

TorusPoint TorusPoint::wrap(std::span<double const> coords)
{
    TorusPoint p = zero(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        p.coords_[i] = wrap_unit(coords[i]);
    return p;
}

TorusPoint TorusPoint::wrap(std::initializer_list<double> coords)
{
    return wrap(std::span<double const>(coords.begin(), coords.size()));
}

TorusPoint TorusPoint::negated() const
{
    TorusPoint p = *this;
    for (std::size_t i = 0; i < dim_; ++i)
        p.coords_[i] = wrap_unit(-coords_[i]);
    return p;
}

//---------------------------------------------------------------------------//
TorusPoint translate(TorusPoint const& theta, FrequencyVector const& alpha)
{
    if (theta.dim_ != alpha.dim_)
        throw Error("translate: dimension mismatch ("
                    + std::to_string(theta.dim_) + " vs "
                    + std::to_string(alpha.dim_) + ")");
    TorusPoint p = theta;
    for (std::size_t i = 0; i < p.dim_; ++i)
    {
        // both summands in [0,1): one conditional subtraction suffices
        double s = theta.coords_[i] + alpha.coords_[i];
        if (s >= 1.0)
            s -= 1.0;
        p.coords_[i] = s >= 1.0 ? 0.0 : s;
    }
    return p;
}

double circle_dist(double a, double b)
{
    double diff = std::fabs(a - b);
    return std::fmin(diff, 1.0 - diff);
}

double torus_dist(TorusPoint const& a, TorusPoint const& b)
{
    require(a.dim() == b.dim(), "torus_dist: dimension mismatch");
    double result = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        result = std::fmax(result, circle_dist(a[i], b[i]));
    return result;
}

double dist_to_integer(double x)
{
    return std::fabs(x - std::nearbyint(x));
}

std::complex<double> character(std::span<int const> k, TorusPoint const& theta)
{
    require(k.size() == theta.dim(), "character: dimension mismatch");
    double phase = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i)
    {
        // reduce each term separately to keep large k accurate
        double term = static_cast<double>(k[i]) * theta[i];
        phase += term - std::nearbyint(term);
    }
    phase -= std::nearbyint(phase);
    if (phase == 0.0)
        return {1.0, 0.0};
    if (std::fabs(phase) == 0.5)
        return {-1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

TorusPoint haar_sample(Rng& rng, std::size_t d)
{
    require(d >= 1 && d <= kMaxTorusDim, "haar_sample: bad dimension");
    std::array<double, kMaxTorusDim> c{};
    for (std::size_t i = 0; i < d; ++i)
        c[i] = rng.uniform();
    return TorusPoint::wrap(std::span<double const>(c.data(), d));
}

std::vector<TorusPoint> torus_grid(std::size_t d, std::size_t g)
{
    require(g >= 1, "torus_grid: need at least one point per dimension");
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i)
        total *= g;
    std::vector<TorusPoint> result;
    result.reserve(total);
    std::array<double, kMaxTorusDim> c{};
    for (std::size_t idx = 0; idx < total; ++idx)
    {
        std::size_t rem = idx;
        for (std::size_t i = 0; i < d; ++i)
        {
            c[i] = static_cast<double>(rem % g) / static_cast<double>(g);
            rem /= g;
        }
        result.push_back(TorusPoint::wrap(std::span<double const>(c.data(), d)));
    }
    return result;
}

}  // namespace qpc

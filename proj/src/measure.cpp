//! \file measure.cpp
#include "qpc/measure.hpp"

#include <string>

namespace qpc
{
double AtomSpace<QpCocycle>::distance(QpCocycle const& a, QpCocycle const& b)
{
    double freq = torus_dist(a.freq, b.freq);
    // cheap reject: fiber sup-distance is only needed for coincident frequencies
    if (freq > AtomicMeasure<QpCocycle>::merge_tolerance)
        return freq;
    return g_distance(a, b);
}

//---------------------------------------------------------------------------//
TorusMeasure pushforward_freq(CocycleMeasure const& nu)
{
    std::vector<TorusMeasure::Atom> atoms;
    atoms.reserve(nu.size());
    for (auto const& a : nu.atoms())
        atoms.push_back({a.point.freq, a.weight});
    return TorusMeasure(std::move(atoms));
}

TorusMeasure convolve(TorusMeasure const& mu, TorusMeasure const& nu, std::size_t atom_cap)
{
    require(torus_dim(mu) == torus_dim(nu), "convolve: dimension mismatch");
    std::size_t count = mu.size() * nu.size();
    if (count > atom_cap)
        throw Error("convolve: " + std::to_string(count)
                    + " product atoms exceed the cap of " + std::to_string(atom_cap)
                    + "; compute Fourier coefficients as products instead");
    std::vector<TorusMeasure::Atom> atoms;
    atoms.reserve(count);
    for (auto const& a : mu.atoms())
        for (auto const& b : nu.atoms())
            atoms.push_back({translate(a.point, b.point), a.weight * b.weight});
    return TorusMeasure(std::move(atoms));
}

TorusMeasure convolution_power(TorusMeasure const& mu, int n, std::size_t atom_cap)
{
    require(n >= 0, "convolution_power: negative exponent");
    TorusMeasure result = TorusMeasure::dirac(TorusPoint::zero(torus_dim(mu)));
    for (int i = 0; i < n; ++i)
        result = convolve(result, mu, atom_cap);
    return result;
}

std::complex<double> fourier_coeff(TorusMeasure const& mu, std::span<int const> k)
{
    std::complex<double> sum = 0.0;
    for (auto const& a : mu.atoms())
        sum += a.weight * character(k, a.point);
    return sum;
}

std::size_t torus_dim(TorusMeasure const& mu)
{
    return mu.point(0).dim();
}

std::size_t torus_dim(CocycleMeasure const& nu)
{
    return nu.point(0).torus_dim();
}

int matrix_dim(CocycleMeasure const& nu)
{
    return nu.point(0).matrix_dim();
}

//---------------------------------------------------------------------------//
double g_distance(QpCocycle const& g, QpCocycle const& h, GMetric const& metric)
{
    require(g.torus_dim() == h.torus_dim(), "g_distance: torus dimension mismatch");
    std::size_t d = g.torus_dim();
    double freq = torus_dist(g.freq, h.freq);
    double fiber = sup_distance(g.fiber, h.fiber, metric.resolved_grid(d), d);
    return metric.freq_weight * freq + metric.fiber_weight * fiber;
}

}  // namespace qpc

//! \file generators.hpp
//! Hand-rolled random generators for property tests.
#pragma once

#include <cmath>
#include <vector>

#include "qpc/cocycle_group.hpp"
#include "qpc/measure.hpp"
#include "qpc/rng.hpp"

namespace qpc::test
{
inline double uniform(Rng& rng, double lo, double hi)
{
    return lo + (hi - lo) * rng.uniform();
}

inline std::size_t pick(Rng& rng, std::size_t n)
{
    return static_cast<std::size_t>(rng.uniform() * static_cast<double>(n)) % n;
}

inline TorusPoint random_point(Rng& rng, std::size_t d)
{
    std::vector<double> c(d);
    for (auto& x : c)
        x = rng.uniform();
    return TorusPoint::wrap(c);
}

//! SL(2) matrix with entries of modest size (norm below ~5).
inline SLMatrix random_sl2(Rng& rng)
{
    double a = uniform(rng, 0.5, 2.0);
    double b = uniform(rng, -1.0, 1.0);
    double c = uniform(rng, -1.0, 1.0);
    return SLMatrix(make_matrix({{a, b}, {c, (1.0 + b * c) / a}}));
}

//! Real trig polynomial of degree <= 2 on T^d with small coefficients.
inline TrigPoly random_trig(Rng& rng, std::size_t d = 1)
{
    std::vector<TrigPoly::Term> terms;
    terms.push_back({IntVec(d, 0), {uniform(rng, -1.0, 1.0), 0.0}});
    int degree = 1 + static_cast<int>(pick(rng, 2));
    for (int j = 1; j <= degree; ++j)
    {
        IntVec k(d, 0), neg(d, 0);
        k[pick(rng, d)] = j;
        for (std::size_t i = 0; i < d; ++i)
            neg[i] = -k[i];
        std::complex<double> c{uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5)};
        terms.push_back({k, c});
        terms.push_back({neg, std::conj(c)});
    }
    return TrigPoly(d, std::move(terms));
}

inline FiberMap random_leaf(Rng& rng, std::size_t d)
{
    switch (pick(rng, 3))
    {
        case 0:
            return FiberMap::constant(random_sl2(rng));
        case 1:
            return FiberMap::schrodinger(random_trig(rng, d), uniform(rng, -1.0, 1.0));
        default:
            return FiberMap::shear(uniform(rng, -1.0, 1.0));
    }
}

//! 2x2 fiber tree of depth at most \c depth.
inline FiberMap random_fiber(Rng& rng, int depth, std::size_t d = 1)
{
    if (depth <= 1 || pick(rng, 4) == 0)
        return random_leaf(rng, d);
    switch (pick(rng, 3))
    {
        case 0:
            return FiberMap::translate(random_fiber(rng, depth - 1, d), random_point(rng, d));
        case 1:
            return FiberMap::product(random_fiber(rng, depth - 1, d),
                                     random_fiber(rng, depth - 1, d));
        default:
            return FiberMap::inverse(random_fiber(rng, depth - 1, d));
    }
}

inline QpCocycle random_cocycle(Rng& rng, int depth, std::size_t d = 1)
{
    return make_cocycle(random_point(rng, d), random_fiber(rng, depth, d));
}

inline std::vector<double> random_weights(Rng& rng, std::size_t n)
{
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w)
        total += x = uniform(rng, 0.1, 1.0);
    for (auto& x : w)
        x /= total;
    return w;
}

inline TorusMeasure random_torus_measure(Rng& rng, std::size_t atoms, std::size_t d = 1)
{
    auto w = random_weights(rng, atoms);
    std::vector<TorusMeasure::Atom> out;
    for (std::size_t i = 0; i < atoms; ++i)
        out.push_back({random_point(rng, d), w[i]});
    return TorusMeasure(std::move(out));
}

inline CocycleMeasure random_cocycle_measure(Rng& rng, std::size_t atoms, int depth, std::size_t d = 1)
{
    auto w = random_weights(rng, atoms);
    std::vector<CocycleMeasure::Atom> out;
    for (std::size_t i = 0; i < atoms; ++i)
        out.push_back({random_cocycle(rng, depth, d), w[i]});
    return CocycleMeasure(std::move(out));
}

//! Max entrywise difference.
inline double max_abs_diff(Matrix const& a, Matrix const& b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

//! Max over a regular grid of the entrywise difference of two fibers.
inline double grid_diff(FiberMap const& a, FiberMap const& b, std::size_t g, std::size_t d = 1)
{
    double worst = 0.0;
    for (auto const& theta : torus_grid(d, g))
        worst = std::max(worst, max_abs_diff(a(theta), b(theta)));
    return worst;
}

}  // namespace qpc::test

//---------------------------------------------------------------------------//
//! \file qpc/wasserstein.hpp
//! Exact Wasserstein-1 distance between finitely supported measures.
//---------------------------------------------------------------------------//
#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "qpc/measure.hpp"

namespace qpc
{
//---------------------------------------------------------------------------//
//! Optimal transport plan on the bipartite atom graph.
struct TransportPlan
{
    struct Flow
    {
        std::size_t from;
        std::size_t to;
        double mass;
    };

    double cost = 0.0;
    //! Basic cells of the optimal vertex (may include zero-mass cells).
    std::vector<Flow> flows;
    std::size_t pivots = 0;
};

/*!
 * Solve the balanced transportation problem
 *   min sum_ij C_ij x_ij  s.t.  sum_j x_ij = supply_i, sum_i x_ij = demand_j,
 *   x >= 0
 * by the transportation (network) simplex method.
 *
 * The starting vertex comes from the north-west corner rule; entering cells
 * use Dantzig pricing and fall back to Bland's rule after a run of degenerate
 * pivots. \c cost is row-major with supply.size() rows.
 */
TransportPlan solve_transport(std::span<double const> supply,
                              std::span<double const> demand,
                              std::span<double const> cost);

//! W1 between two atomic measures under the metric \c dist.
template<class X, class Dist>
    requires std::invocable<Dist&, X const&, X const&>
double wasserstein1(AtomicMeasure<X> const& a, AtomicMeasure<X> const& b, Dist&& dist)
{
    std::vector<double> supply(a.size()), demand(b.size());
    std::vector<double> cost(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        supply[i] = a.weight(i);
        for (std::size_t j = 0; j < b.size(); ++j)
            cost[i * b.size() + j] = dist(a.point(i), b.point(j));
    }
    for (std::size_t j = 0; j < b.size(); ++j)
        demand[j] = b.weight(j);
    return solve_transport(supply, demand, cost).cost;
}

//! W1 on T^d with torus_dist.
double wasserstein1(TorusMeasure const& a, TorusMeasure const& b);
//! W1 on R with |x - y|.
double wasserstein1(RealMeasure const& a, RealMeasure const& b);
//! W1 on the cocycle group with g_distance.
double wasserstein1(CocycleMeasure const& a, CocycleMeasure const& b, GMetric const& metric);

}  // namespace qpc

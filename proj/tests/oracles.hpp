//! \file oracles.hpp
//! Exhaustive reference solvers for small transport problems.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qpc/measure.hpp"

namespace qpc::test
{
// Exhaustive optimum of a small transport problem: every vertex of the
// transportation polytope is the flow on some spanning tree of the bipartite
// graph, so enumerating all (r + c - 1)-edge subsets covers them.
inline double brute_force_transport(std::vector<double> const& supply,
                             std::vector<double> const& demand,
                             std::vector<double> const& cost)
{
    std::size_t r = supply.size(), c = demand.size(), cells = r * c, need = r + c - 1;
    double best = std::numeric_limits<double>::infinity();
    for (unsigned mask = 0; mask < (1u << cells); ++mask)
    {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != need)
            continue;
        std::vector<double> s = supply, d = demand, flow(cells, 0.0);
        std::vector<bool> used(cells, false);
        for (std::size_t e = 0; e < cells; ++e)
            used[e] = mask >> e & 1u;
        // peel leaves: a row or column with exactly one unused-by-flow edge
        std::size_t remaining = need;
        bool progress = true;
        while (remaining > 0 && progress)
        {
            progress = false;
            for (std::size_t i = 0; i < r + c && remaining > 0; ++i)
            {
                std::size_t count = 0, last = 0;
                for (std::size_t j = 0; j < (i < r ? c : r); ++j)
                {
                    std::size_t e = i < r ? i * c + j : j * c + (i - r);
                    if (used[e])
                    {
                        ++count;
                        last = e;
                    }
                }
                if (count != 1)
                    continue;
                std::size_t row = last / c, col = last % c;
                double x = i < r ? s[row] : d[col];
                flow[last] = x;
                s[row] -= x;
                d[col] -= x;
                used[last] = false;
                --remaining;
                progress = true;
            }
        }
        if (remaining > 0)
            continue;  // contains a cycle
        bool feasible = true;
        for (double x : flow)
            feasible = feasible && x >= -1e-14;
        for (double x : s)
            feasible = feasible && std::fabs(x) <= 1e-12;
        for (double x : d)
            feasible = feasible && std::fabs(x) <= 1e-12;
        if (!feasible)
            continue;
        double total = 0.0;
        for (std::size_t e = 0; e < cells; ++e)
            total += flow[e] * cost[e];
        best = std::min(best, total);
    }
    return best;
}

template<class X, class Dist>
inline double brute_w1(AtomicMeasure<X> const& a, AtomicMeasure<X> const& b, Dist dist)
{
    std::vector<double> s, d, cost;
    for (auto const& x : a.atoms())
    {
        s.push_back(x.weight);
        for (auto const& y : b.atoms())
            cost.push_back(dist(x.point, y.point));
    }
    for (auto const& y : b.atoms())
        d.push_back(y.weight);
    return brute_force_transport(s, d, cost);
}
}  // namespace qpc::test

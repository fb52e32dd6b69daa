//! \file wasserstein.cpp
#include "qpc/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qpc/error.hpp"

namespace qpc
{
namespace
{
struct Cell
{
    std::size_t i;
    std::size_t j;
    double x;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

//! Degenerate pivots in a row before switching to Bland's rule.
constexpr std::size_t bland_after = 50;

class TransportSimplex
{
  public:
    TransportSimplex(std::span<double const> supply,
                     std::span<double const> demand,
                     std::span<double const> cost)
        : n_(supply.size()), m_(demand.size()), cost_(cost)
    {
        double max_cost = 0.0;
        for (double c : cost)
        {
            require(std::isfinite(c) && c >= 0.0, "transport: invalid cost entry");
            max_cost = std::max(max_cost, c);
        }
        tolerance_ = 1e-13 * std::max(1.0, max_cost);
        north_west_corner(supply, demand);
    }

    TransportPlan solve()
    {
        TransportPlan plan;
        std::size_t degenerate_run = 0;
        std::size_t const max_pivots = 1000 * (n_ + m_) * (n_ + m_) + 10000;
        for (;;)
        {
            build_tree();
            compute_potentials();
            auto [ei, ej] = price(degenerate_run >= bland_after);
            if (ei == npos)
                break;
            require(plan.pivots < max_pivots,
                    "transport: simplex did not converge");
            double step = pivot(ei, ej);
            degenerate_run = step == 0.0 ? degenerate_run + 1 : 0;
            ++plan.pivots;
        }
        for (auto const& c : basis_)
        {
            plan.cost += c.x * cost_[c.i * m_ + c.j];
            plan.flows.push_back({c.i, c.j, c.x});
        }
        return plan;
    }

  private:
    std::size_t n_, m_;
    std::span<double const> cost_;
    double tolerance_ = 0.0;
    std::vector<Cell> basis_;
    // tree adjacency: node r < n_ is row r, node n_ + c is column c
    std::vector<std::vector<std::size_t>> adjacent_;
    std::vector<double> potential_;

    double c(std::size_t i, std::size_t j) const { return cost_[i * m_ + j]; }

    void north_west_corner(std::span<double const> supply, std::span<double const> demand)
    {
        std::vector<double> rs(supply.begin(), supply.end());
        std::vector<double> rd(demand.begin(), demand.end());
        std::size_t i = 0, j = 0;
        while (basis_.size() < n_ + m_ - 1)
        {
            double x = std::max(0.0, std::min(rs[i], rd[j]));
            bool row_done = rs[i] <= rd[j];
            rs[i] -= x;
            rd[j] -= x;
            basis_.push_back({i, j, x});
            if (i == n_ - 1)
                ++j;
            else if (j == m_ - 1)
                ++i;
            else if (row_done)
                ++i;
            else
                ++j;
        }
    }

    void build_tree()
    {
        adjacent_.assign(n_ + m_, {});
        for (std::size_t e = 0; e < basis_.size(); ++e)
        {
            adjacent_[basis_[e].i].push_back(e);
            adjacent_[n_ + basis_[e].j].push_back(e);
        }
    }

    std::size_t other_end(std::size_t e, std::size_t node) const
    {
        return node < n_ ? n_ + basis_[e].j : basis_[e].i;
    }

    void compute_potentials()
    {
        // u_i + v_j = c_ij on basic cells; u_0 = 0
        potential_.assign(n_ + m_, std::numeric_limits<double>::quiet_NaN());
        potential_[0] = 0.0;
        std::vector<std::size_t> stack{0};
        while (!stack.empty())
        {
            std::size_t node = stack.back();
            stack.pop_back();
            for (std::size_t e : adjacent_[node])
            {
                std::size_t next = other_end(e, node);
                if (!std::isnan(potential_[next]))
                    continue;
                potential_[next] = c(basis_[e].i, basis_[e].j) - potential_[node];
                stack.push_back(next);
            }
        }
    }

    std::pair<std::size_t, std::size_t> price(bool bland) const
    {
        double best = -tolerance_;
        std::pair<std::size_t, std::size_t> result{npos, npos};
        for (std::size_t i = 0; i < n_; ++i)
        {
            for (std::size_t j = 0; j < m_; ++j)
            {
                double reduced = c(i, j) - potential_[i] - potential_[n_ + j];
                if (reduced < best)
                {
                    result = {i, j};
                    if (bland)
                        return result;
                    best = reduced;
                }
            }
        }
        return result;
    }

    //! Tree path from row node ei to column node n_+ej, as basis indices
    //! ordered starting at the column end.
    std::vector<std::size_t> tree_path(std::size_t ei, std::size_t ej) const
    {
        std::vector<std::size_t> via(n_ + m_, npos);
        std::vector<bool> seen(n_ + m_, false);
        std::vector<std::size_t> stack{ei};
        seen[ei] = true;
        while (!stack.empty())
        {
            std::size_t node = stack.back();
            stack.pop_back();
            for (std::size_t e : adjacent_[node])
            {
                std::size_t next = other_end(e, node);
                if (seen[next])
                    continue;
                seen[next] = true;
                via[next] = e;
                stack.push_back(next);
            }
        }
        std::vector<std::size_t> path;
        for (std::size_t node = n_ + ej; node != ei;)
        {
            std::size_t e = via[node];
            require(e != npos, "transport: basis is not a spanning tree");
            path.push_back(e);
            node = other_end(e, node);
        }
        return path;
    }

    double pivot(std::size_t ei, std::size_t ej)
    {
        // cycle: entering (+), then path cells alternate -, +, -, ...
        auto path = tree_path(ei, ej);
        double step = std::numeric_limits<double>::infinity();
        std::size_t leaving = npos;
        for (std::size_t k = 0; k < path.size(); k += 2)
        {
            auto const& cell = basis_[path[k]];
            bool better = cell.x < step
                          || (cell.x == step
                              && std::pair(cell.i, cell.j)
                                     < std::pair(basis_[leaving].i, basis_[leaving].j));
            if (better)
            {
                step = cell.x;
                leaving = path[k];
            }
        }
        for (std::size_t k = 0; k < path.size(); ++k)
        {
            auto& cell = basis_[path[k]];
            cell.x = k % 2 == 0 ? cell.x - step : cell.x + step;
        }
        basis_[leaving] = Cell{ei, ej, step};
        return step;
    }
};
}  // namespace

TransportPlan solve_transport(std::span<double const> supply,
                              std::span<double const> demand,
                              std::span<double const> cost)
{
    require(!supply.empty() && !demand.empty(), "transport: empty marginal");
    require(cost.size() == supply.size() * demand.size(),
            "transport: cost matrix has wrong size");
    return TransportSimplex(supply, demand, cost).solve();
}

double wasserstein1(TorusMeasure const& a, TorusMeasure const& b)
{
    return wasserstein1(a, b, [](TorusPoint const& x, TorusPoint const& y) {
        return torus_dist(x, y);
    });
}

double wasserstein1(RealMeasure const& a, RealMeasure const& b)
{
    return wasserstein1(a, b, [](double x, double y) { return std::fabs(x - y); });
}

double wasserstein1(CocycleMeasure const& a, CocycleMeasure const& b, GMetric const& metric)
{
    return wasserstein1(a, b, [&](QpCocycle const& x, QpCocycle const& y) {
        return g_distance(x, y, metric);
    });
}

}  // namespace qpc

//! \file base_dynamics.cpp
#include "qpc/base_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpc/error.hpp"
#include "qpc/parallel.hpp"
#include "qpc/rng.hpp"

namespace qpc
{
BaseOrbit base_orbit(CocycleMeasure const& nu,
                     TorusPoint const& theta0,
                     long n,
                     std::uint64_t seed,
                     std::uint64_t sample_index)
{
    require(n >= 1, "base_orbit: n must be at least 1");
    require(theta0.dim() == torus_dim(nu), "base_orbit: theta dimension mismatch");
    BaseOrbit orbit;
    orbit.path.seed = seed;
    orbit.path.sample_index = sample_index;
    orbit.path.symbols.reserve(static_cast<std::size_t>(n));
    orbit.thetas.reserve(static_cast<std::size_t>(n) + 1);
    orbit.thetas.push_back(theta0);
    Rng rng(seed, {sample_index});
    for (long j = 0; j < n; ++j)
    {
        std::size_t idx = nu.sample_index(rng);
        orbit.path.symbols.push_back(static_cast<std::uint32_t>(idx));
        orbit.thetas.push_back(translate(orbit.thetas.back(), nu.point(idx).freq));
    }
    return orbit;
}

//---------------------------------------------------------------------------//
Observable::Observable(std::size_t atoms,
                       std::size_t window,
                       std::vector<double> table,
                       TrigPoly trig)
    : atoms_(atoms), window_(window), table_(std::move(table)), trig_(std::move(trig))
{
    require(atoms >= 1, "observable: driving measure has no atoms");
    require(window >= 1, "observable: window must be at least 1");
    double expected = std::pow(static_cast<double>(atoms), static_cast<double>(window));
    require(expected <= 1e8, "observable: window table too large");
    if (static_cast<double>(table_.size()) != expected)
        throw Error("observable: table has " + std::to_string(table_.size())
                    + " entries, expected atoms^window = "
                    + std::to_string(static_cast<std::size_t>(expected)));
    for (double v : table_)
        require(std::isfinite(v), "observable: non-finite table entry");
}

Observable Observable::symbolic(std::size_t atoms,
                                std::size_t window,
                                std::vector<double> table,
                                std::size_t torus_dim)
{
    return Observable(atoms, window, std::move(table), TrigPoly::constant(torus_dim, 1.0));
}

Observable Observable::constant(std::size_t atoms, std::size_t torus_dim, double c)
{
    return symbolic(atoms, 1, std::vector<double>(atoms, c), torus_dim);
}

double Observable::table_value(std::span<std::uint32_t const> window_symbols) const
{
    std::size_t idx = 0;
    for (std::size_t j = 0; j < window_; ++j)
        idx = idx * atoms_ + window_symbols[j];
    return table_[idx];
}

double Observable::expectation(CocycleMeasure const& nu) const
{
    require(nu.size() == atoms_, "observable: table built for a different atom count");
    // enumerate windows with the first symbol most significant
    double sum = 0.0;
    std::vector<std::uint32_t> w(window_, 0);
    for (std::size_t idx = 0; idx < table_.size(); ++idx)
    {
        double prob = 1.0;
        for (std::uint32_t s : w)
            prob *= nu.weight(s);
        sum += prob * table_[idx];
        for (std::size_t j = window_; j-- > 0;)
        {
            if (++w[j] < atoms_)
                break;
            w[j] = 0;
        }
    }
    return sum * trig_.mean();
}

double Observable::range_bound() const
{
    auto [lo, hi] = std::minmax_element(table_.begin(), table_.end());
    if (trig_.is_constant())
        return (*hi - *lo) * std::fabs(trig_.mean());
    double amp = std::max(std::fabs(*lo), std::fabs(*hi));
    return 2.0 * amp * trig_.l1_norm();
}

double birkhoff_average(Observable const& phi,
                        SymbolPath const& path,
                        std::span<TorusPoint const> thetas)
{
    std::size_t len = path.symbols.size();
    std::size_t k = phi.window();
    if (len < k)
        throw Error("birkhoff_average: path of " + std::to_string(len)
                    + " symbols is shorter than the window " + std::to_string(k));
    require(thetas.size() >= len - k + 1, "birkhoff_average: trajectory too short");
    std::size_t n = len - k + 1;
    std::span<std::uint32_t const> symbols(path.symbols);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        sum += phi(symbols.subspan(j, k), thetas[j]);
    return sum / static_cast<double>(n);
}

//---------------------------------------------------------------------------//
LdtReport estimate_base_ldt(CocycleMeasure const& nu,
                            Observable const& phi,
                            BaseLdtOptions const& opts)
{
    require(opts.epsilon > 0.0, "base LDT: epsilon must be positive");
    require(!opts.n_list.empty(), "base LDT: empty n list");
    require(opts.samples >= 1, "base LDT: need at least one sample");
    require(phi.atoms() == nu.size(), "base LDT: observable table does not match nu");
    double mean = phi.expectation(nu);
    auto window = static_cast<long>(phi.window());

    std::vector<LdtRow> rows;
    for (long n : opts.n_list)
    {
        require(n >= 1, "base LDT: horizons must be positive");
        std::uint64_t seed_n = derive_seed(opts.seed, {static_cast<std::uint64_t>(n)});
        std::vector<char> hit(opts.samples, 0);
        parallel_for(opts.samples, opts.threads, [&](std::size_t i) {
            auto orbit = base_orbit(nu, opts.theta, n + window - 1, seed_n, i);
            double avg = birkhoff_average(phi, orbit.path, orbit.thetas);
            hit[i] = std::fabs(avg - mean) >= opts.epsilon;
        });
        auto hits = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
        rows.push_back(make_ldt_row(n, opts.samples, hits));
    }
    return finalize_ldt(std::move(rows), opts.epsilon, mean);
}

}  // namespace qpc

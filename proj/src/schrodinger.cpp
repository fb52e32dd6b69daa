//! \file schrodinger.cpp
#include "qpc/schrodinger.hpp"

#include <algorithm>
#include <cmath>

#include "qpc/error.hpp"
#include "qpc/rng.hpp"

namespace qpc
{
namespace
{
FiberMap noisy_fiber(TrigPoly const& v, double energy, double w)
{
    FiberMap s = FiberMap::schrodinger(v, energy);
    return w == 0.0 ? s : FiberMap::product(FiberMap::shear(w), s);
}
}  // namespace

CocycleMeasure build_random_potential_measure(TorusPoint const& alpha,
                                              TrigPoly const& v,
                                              RealMeasure const& rho,
                                              double energy)
{
    return build_random_both_measure(TorusMeasure::dirac(alpha), v, rho, energy);
}

CocycleMeasure build_random_frequency_measure(TorusMeasure const& mu,
                                              TrigPoly const& v,
                                              double energy)
{
    return build_random_both_measure(mu, v, RealMeasure::dirac(0.0), energy);
}

CocycleMeasure build_random_both_measure(TorusMeasure const& mu,
                                         TrigPoly const& v,
                                         RealMeasure const& rho,
                                         double energy)
{
    require(torus_dim(mu) == v.dim(), "Schrodinger model: potential and frequency dimensions differ");
    std::vector<CocycleMeasure::Atom> atoms;
    atoms.reserve(mu.size() * rho.size());
    for (auto const& a : mu.atoms())
        for (auto const& w : rho.atoms())
            atoms.push_back({make_cocycle(a.point, noisy_fiber(v, energy, w.point)),
                             a.weight * w.weight});
    return CocycleMeasure(std::move(atoms));
}

//---------------------------------------------------------------------------//
CocycleMeasure SchrodingerModel::measure_at(double energy) const
{
    if (auto const* alpha = std::get_if<TorusPoint>(&frequency))
        return build_random_potential_measure(*alpha, potential, noise, energy);
    auto const& mu = std::get<TorusMeasure>(frequency);
    if (noise.size() == 1 && noise.point(0) == 0.0)
        return build_random_frequency_measure(mu, potential, energy);
    return build_random_both_measure(mu, potential, noise, energy);
}

double default_energy_bound(SchrodingerModel const& model)
{
    double sup_v = 0.0;
    std::size_t d = model.potential.dim();
    for (auto const& theta : torus_grid(d, d <= 1 ? 256 : 64))
        sup_v = std::max(sup_v, std::fabs(model.potential(theta)));
    double max_noise = 0.0;
    for (auto const& a : model.noise.atoms())
        max_noise = std::max(max_noise, std::fabs(a.point));
    return 2.0 + sup_v + max_noise;
}

std::vector<double> default_energy_grid(SchrodingerModel const& model, double step)
{
    return energy_grid(default_energy_bound(model), step);
}

std::vector<double> energy_grid(double bound, double step)
{
    require(step > 0.0, "energy grid: step must be positive");
    require(bound >= 0.0, "energy grid: bound must be non-negative");
    require(bound / step <= 1e7, "energy grid: too many points");
    auto half = static_cast<long>(std::ceil(bound / step - 1e-9));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(2 * half + 1));
    for (long i = -half; i <= half; ++i)
        grid.push_back(static_cast<double>(i) * step);
    return grid;
}

std::vector<EnergyScanRow> lyapunov_energy_scan(SchrodingerModel const& model,
                                                std::vector<double> const& energies,
                                                L1Options const& opts)
{
    require(!energies.empty(), "energy scan: empty energy grid");
    std::vector<EnergyScanRow> rows;
    rows.reserve(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i)
    {
        L1Options local = opts;
        local.seed = derive_seed(opts.seed, {i});
        rows.push_back({energies[i], estimate_L1(model.measure_at(energies[i]), local)});
    }
    return rows;
}

}  // namespace qpc

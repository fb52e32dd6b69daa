//---------------------------------------------------------------------------//
//! \file qpc/schrodinger.hpp
//! Mixed random-quasiperiodic Schrodinger families
//!   (H psi)_n = -psi_{n+1} - psi_{n-1} + (v(theta + n alpha) + w_n) psi_n.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qpc/lyapunov.hpp"
#include "qpc/measure.hpp"
#include "qpc/trig_poly.hpp"

namespace qpc
{
/*!
 * delta_alpha x (integral of delta_{P(w) S_E} d rho(w)): fixed frequency,
 * i.i.d. additive noise w ~ rho. P(w) = [[1, w], [0, 1]]; noise atoms at
 * w = 0 use S_E directly.
 */
CocycleMeasure build_random_potential_measure(TorusPoint const& alpha,
                                              TrigPoly const& v,
                                              RealMeasure const& rho,
                                              double energy);

//! mu x delta_{S_E}: random frequency, deterministic potential.
CocycleMeasure build_random_frequency_measure(TorusMeasure const& mu,
                                              TrigPoly const& v,
                                              double energy);

//! mu x (integral of delta_{P(w) S_E} d rho(w)): both randomized.
CocycleMeasure build_random_both_measure(TorusMeasure const& mu,
                                         TrigPoly const& v,
                                         RealMeasure const& rho,
                                         double energy);

//---------------------------------------------------------------------------//
struct SchrodingerModel
{
    TrigPoly potential;
    //! Fixed frequency alpha or a frequency law mu.
    std::variant<TorusPoint, TorusMeasure> frequency;
    //! Noise law rho (delta_0 for no noise).
    RealMeasure noise = RealMeasure::dirac(0.0);

    //! nu_E for the family this model belongs to.
    CocycleMeasure measure_at(double energy) const;
};

//! Default grid half-width 2 + sup|v| (grid estimate) + max |noise atom|.
double default_energy_bound(SchrodingerModel const& model);

//! Multiples of \c step covering [-bound, bound].
std::vector<double> energy_grid(double bound, double step);

//! energy_grid(default_energy_bound(model), step).
std::vector<double> default_energy_grid(SchrodingerModel const& model, double step = 0.01);

struct EnergyScanRow
{
    double energy;
    L1Estimate l1;
};

/*!
 * L1(nu_E) over an energy grid. Energy i runs estimate_L1 with seed
 * derive_seed(opts.seed, {i}).
 */
std::vector<EnergyScanRow> lyapunov_energy_scan(SchrodingerModel const& model,
                                                std::vector<double> const& energies,
                                                L1Options const& opts);

}  // namespace qpc

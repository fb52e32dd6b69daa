//---------------------------------------------------------------------------//
//! \file qpc/base_dynamics.hpp
//! Orbits of (omega, theta) -> (shift omega, theta + freq(omega_0)),
//! Birkhoff averages, and the empirical base large-deviations estimator.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qpc/ldt.hpp"
#include "qpc/measure.hpp"
#include "qpc/trig_poly.hpp"

namespace qpc
{
//---------------------------------------------------------------------------//
//! Realized symbols omega_0, ..., omega_{L-1} as atom indices of nu.
struct SymbolPath
{
    std::vector<std::uint32_t> symbols;
    std::uint64_t seed = 0;
    std::uint64_t sample_index = 0;
};

struct BaseOrbit
{
    SymbolPath path;
    //! theta_0, ..., theta_L (one more than the number of symbols).
    std::vector<TorusPoint> thetas;
};

//! Draw n symbols from nu (stream keyed by seed and sample index) and
//! translate theta0 along them.
BaseOrbit base_orbit(CocycleMeasure const& nu,
                     TorusPoint const& theta0,
                     long n,
                     std::uint64_t seed,
                     std::uint64_t sample_index);

//---------------------------------------------------------------------------//
/*!
 * Observable phi(omega, theta) = table(omega_0, ..., omega_{k-1}) * trig(theta)
 * depending on the first k symbols and on theta.
 *
 * The table has N^k entries for an N-atom driving measure, indexed with the
 * first symbol most significant.
 */
class Observable
{
  public:
    Observable(std::size_t atoms, std::size_t window, std::vector<double> table, TrigPoly trig);

    //! Pure symbol observable with trivial trig part (the constant 1).
    static Observable symbolic(std::size_t atoms,
                               std::size_t window,
                               std::vector<double> table,
                               std::size_t torus_dim);
    //! Constant observable c.
    static Observable constant(std::size_t atoms, std::size_t torus_dim, double c);

    std::size_t atoms() const { return atoms_; }
    std::size_t window() const { return window_; }
    std::vector<double> const& table() const { return table_; }
    TrigPoly const& trig() const { return trig_; }

    double table_value(std::span<std::uint32_t const> window_symbols) const;
    double operator()(std::span<std::uint32_t const> window_symbols, TorusPoint const& theta) const
    {
        return table_value(window_symbols) * trig_(theta);
    }

    //! Integral against nu^Z x Haar: product-measure expectation of the table
    //! times the mean of the trig part.
    double expectation(CocycleMeasure const& nu) const;

    //! max - min of the table times sup bound of the trig part.
    double range_bound() const;

  private:
    std::size_t atoms_;
    std::size_t window_;
    std::vector<double> table_;
    TrigPoly trig_;
};

/*!
 * (1/n) sum_{j<n} phi(sigma^j omega, theta_j) with n = L - k + 1 terms for a
 * path of L symbols and window k. Throws if L < k.
 */
double birkhoff_average(Observable const& phi,
                        SymbolPath const& path,
                        std::span<TorusPoint const> thetas);

//---------------------------------------------------------------------------//
struct BaseLdtOptions
{
    double epsilon = 0.1;
    std::vector<long> n_list;
    std::size_t samples = 10000;
    TorusPoint theta;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/*!
 * Empirical nu^Z{ |(1/n) Birkhoff sum - integral| >= epsilon } for each n.
 *
 * Sample i at horizon n uses base_orbit with seed derive_seed(seed, {n}) and
 * sample index i, drawing n + k - 1 symbols so every average has n terms.
 */
LdtReport estimate_base_ldt(CocycleMeasure const& nu,
                            Observable const& phi,
                            BaseLdtOptions const& opts);

}  // namespace qpc

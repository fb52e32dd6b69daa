//---------------------------------------------------------------------------//
//! \file qpc/measure.hpp
//! Finitely supported probability measures.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <vector>

#include "qpc/cocycle_group.hpp"
#include "qpc/error.hpp"
#include "qpc/rng.hpp"
#include "qpc/torus.hpp"

namespace qpc
{
//---------------------------------------------------------------------------//
/*!
 * Metric structure used to merge coincident atoms.
 *
 * \c sort_key must be 1-Lipschitz for \c distance (so atoms farther apart in
 * key than the tolerance are never close). When \c periodic_key is set the
 * key lives on [0, 1) with wrap-around.
 */
template<class X>
struct AtomSpace;

template<>
struct AtomSpace<double>
{
    static constexpr bool periodic_key = false;
    static double distance(double a, double b) { return std::fabs(a - b); }
    static double sort_key(double a) { return a; }
};

template<>
struct AtomSpace<TorusPoint>
{
    static constexpr bool periodic_key = true;
    static double distance(TorusPoint const& a, TorusPoint const& b)
    {
        return torus_dist(a, b);
    }
    static double sort_key(TorusPoint const& a) { return a[0]; }
};

template<>
struct AtomSpace<QpCocycle>
{
    static constexpr bool periodic_key = true;
    //! Product-metric distance with the default fiber grid.
    static double distance(QpCocycle const& a, QpCocycle const& b);
    static double sort_key(QpCocycle const& a) { return a.freq[0]; }
};

//---------------------------------------------------------------------------//
/*!
 * Probability measure sum_i w_i delta_{x_i} with finitely many atoms.
 *
 * Invariants (checked at construction): weights finite and strictly
 * positive, total within 1e-12 of one, and no two atoms closer than 1e-12
 * (such atoms are merged, keeping the first occurrence's point and order).
 */
template<class X>
class AtomicMeasure
{
  public:
    struct Atom
    {
        X point;
        double weight;
    };

    static constexpr double weight_tolerance = 1e-12;
    static constexpr double merge_tolerance = 1e-12;

    explicit AtomicMeasure(std::vector<Atom> atoms);

    static AtomicMeasure dirac(X x) { return AtomicMeasure({Atom{std::move(x), 1.0}}); }

    std::size_t size() const { return atoms_.size(); }
    std::vector<Atom> const& atoms() const { return atoms_; }
    X const& point(std::size_t i) const { return atoms_[i].point; }
    double weight(std::size_t i) const { return atoms_[i].weight; }

    //! Index of an atom drawn with probability equal to its weight.
    std::size_t sample_index(Rng& rng) const
    {
        if (atoms_.size() == 1)
            return 0;
        double u = rng.uniform() * cdf_.back();
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        auto idx = static_cast<std::size_t>(it - cdf_.begin());
        return std::min(idx, atoms_.size() - 1);
    }

  private:
    std::vector<Atom> atoms_;
    std::vector<double> cdf_;
};

//! Draw an atom of nu.
template<class X>
X const& sample_atom(AtomicMeasure<X> const& nu, Rng& rng)
{
    return nu.point(nu.sample_index(rng));
}

using TorusMeasure = AtomicMeasure<TorusPoint>;
using RealMeasure = AtomicMeasure<double>;
using CocycleMeasure = AtomicMeasure<QpCocycle>;

//---------------------------------------------------------------------------//
template<class X>
AtomicMeasure<X>::AtomicMeasure(std::vector<Atom> atoms)
{
    require(!atoms.empty(), "measure: no atoms");
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
    {
        double w = atoms[i].weight;
        if (!(std::isfinite(w) && w > 0.0))
        {
            std::ostringstream os;
            os << "measure: atom " << i << " has weight " << w
               << " (weights must be finite and positive)";
            throw Error(os.str());
        }
        total += w;
    }
    if (!(std::fabs(total - 1.0) <= weight_tolerance))
    {
        std::ostringstream os;
        os.precision(17);
        os << "measure: weights sum to " << total << ", expected 1";
        throw Error(os.str());
    }

    // Cluster atoms within merge_tolerance, scanning in key order.
    std::size_t n = atoms.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> key(n);
    for (std::size_t i = 0; i < n; ++i)
        key[i] = AtomSpace<X>::sort_key(atoms[i].point);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> head(n, none);
    auto try_join = [&](std::size_t h, std::size_t j) {
        if (head[j] == none
            && AtomSpace<X>::distance(atoms[h].point, atoms[j].point)
                   <= merge_tolerance)
            head[j] = h;
    };
    for (std::size_t a = 0; a < n; ++a)
    {
        std::size_t i = order[a];
        if (head[i] != none)
            continue;
        head[i] = i;
        for (std::size_t b = a + 1; b < n && key[order[b]] - key[i] <= merge_tolerance; ++b)
            try_join(i, order[b]);
        if constexpr (AtomSpace<X>::periodic_key)
        {
            if (key[i] <= merge_tolerance)
            {
                for (std::size_t b = n; b-- > a + 1
                                        && key[order[b]] >= 1.0 - merge_tolerance;)
                    try_join(i, order[b]);
            }
        }
    }

    // Each cluster is emitted at the position of its earliest member.
    std::vector<std::size_t> first(n, none);
    std::vector<double> mass(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t h = head[i];
        mass[h] += atoms[i].weight;
        if (first[h] == none)
            first[h] = i;
    }
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t h = head[i];
        if (first[h] == i)
            atoms_.push_back(Atom{atoms[i].point, mass[h]});
    }
    cdf_.resize(atoms_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
    {
        acc += atoms_[i].weight;
        cdf_[i] = acc;
    }
}

//---------------------------------------------------------------------------//
// Torus measure operations
//---------------------------------------------------------------------------//

//! Default cap on the number of product atoms in a convolution.
inline constexpr std::size_t kDefaultAtomCap = 1'000'000;

//! Law of the frequency projection: atoms with equal frequency are merged.
TorusMeasure pushforward_freq(CocycleMeasure const& nu);

//! mu * nu: pairwise sums mod 1 with product weights.
TorusMeasure convolve(TorusMeasure const& mu,
                      TorusMeasure const& nu,
                      std::size_t atom_cap = kDefaultAtomCap);

//! n-fold convolution; n = 0 gives delta_0 of dimension mu's.
TorusMeasure convolution_power(TorusMeasure const& mu,
                               int n,
                               std::size_t atom_cap = kDefaultAtomCap);

//! mu-hat(k) = sum_i w_i e^{2 pi i <k, alpha_i>}.
std::complex<double> fourier_coeff(TorusMeasure const& mu, std::span<int const> k);

//! Torus dimension of a measure on T^d or on the cocycle group.
std::size_t torus_dim(TorusMeasure const& mu);
std::size_t torus_dim(CocycleMeasure const& nu);
int matrix_dim(CocycleMeasure const& nu);

//---------------------------------------------------------------------------//
// Product metric on the cocycle group
//---------------------------------------------------------------------------//

//! Product metric freq_weight * torus_dist + fiber_weight * sup_distance.
struct GMetric
{
    //! Points per dimension of the fiber grid; 0 selects default_fiber_grid(d).
    std::size_t grid = 0;
    double freq_weight = 1.0;
    double fiber_weight = 1.0;

    std::size_t resolved_grid(std::size_t d) const
    {
        return grid == 0 ? default_fiber_grid(d) : grid;
    }
};

double g_distance(QpCocycle const& g, QpCocycle const& h, GMetric const& metric = {});

}  // namespace qpc

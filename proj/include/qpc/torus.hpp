//---------------------------------------------------------------------------//
//! \file qpc/torus.hpp
//! Points, translations, metric and characters on the d-torus (R/Z)^d.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qpc
{
class Rng;

//! Largest supported torus dimension.
inline constexpr std::size_t kMaxTorusDim = 4;

//---------------------------------------------------------------------------//
/*!
 * Point of the d-torus with every coordinate reduced into [0, 1).
 *
 * Storage is inline (no heap) so points can be created freely inside the
 * matrix-product hot loop. The same type is used for frequency vectors.
 */
class TorusPoint
{
  public:
    TorusPoint() = default;

    //! Zero point of dimension d.
    static TorusPoint zero(std::size_t d);

    //! Reduce arbitrary finite coordinates mod 1; throws on non-finite input.
    static TorusPoint wrap(std::span<double const> coords);
    static TorusPoint wrap(std::initializer_list<double> coords);

    std::size_t dim() const { return dim_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<double const> coords() const { return {coords_.data(), dim_}; }

    //! Additive inverse, wrapped.
    TorusPoint negated() const;

    friend bool operator==(TorusPoint const& a, TorusPoint const& b)
    {
        if (a.dim_ != b.dim_)
            return false;
        for (std::size_t i = 0; i < a.dim_; ++i)
            if (a.coords_[i] != b.coords_[i])
                return false;
        return true;
    }

  private:
    std::array<double, kMaxTorusDim> coords_{};
    std::size_t dim_ = 0;

    friend TorusPoint translate(TorusPoint const&, TorusPoint const&);
};

//! Role alias: the translation step of a quasiperiodic cocycle.
using FrequencyVector = TorusPoint;

//! Integer frequency vector k in Z^d.
using IntVec = std::vector<int>;

//! Reduce a single real into [0, 1).
double wrap_unit(double x);

//! theta + alpha mod 1.
TorusPoint translate(TorusPoint const& theta, FrequencyVector const& alpha);

//! Circle distance min(|a-b|, 1-|a-b|) of two reduced coordinates.
double circle_dist(double a, double b);

//! Max over coordinates of the circle distance. Bounded by 1/2.
double torus_dist(TorusPoint const& a, TorusPoint const& b);

//! Distance from <k, x> to the nearest integer.
double dist_to_integer(double x);

//! e^{2 pi i <k, theta>}, with <k, theta> reduced mod 1 before the exponential.
std::complex<double> character(std::span<int const> k, TorusPoint const& theta);

//! Haar (uniform) sample on T^d.
TorusPoint haar_sample(Rng& rng, std::size_t d);

//! Regular grid of g points per dimension: coordinates j/g. g^d points total.
std::vector<TorusPoint> torus_grid(std::size_t d, std::size_t g);

//---------------------------------------------------------------------------//
}  // namespace qpc

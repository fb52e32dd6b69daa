//---------------------------------------------------------------------------//
//! \file qpc/trig_poly.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qpc/torus.hpp"

namespace qpc
{
//---------------------------------------------------------------------------//
/*!
 * Real-valued trigonometric polynomial on T^d:
 *   v(theta) = sum_k c_k e^{2 pi i <k, theta>}
 * with Hermitian symmetry c_{-k} = conj(c_k) enforced at construction.
 */
class TrigPoly
{
  public:
    struct Term
    {
        IntVec k;
        std::complex<double> coeff;
    };

    //! Hermitian tolerance on |c_{-k} - conj(c_k)|.
    static constexpr double symmetry_tolerance = 1e-12;
    //! Allowed imaginary residue of an evaluation.
    static constexpr double imag_tolerance = 1e-12;

    //! Validates dimensions, duplicate modes, and Hermitian symmetry.
    TrigPoly(std::size_t dim, std::vector<Term> terms);

    //! The constant function c.
    static TrigPoly constant(std::size_t dim, double c);
    //! amplitude * cos(2 pi <k, theta>) = (amplitude/2)(e_k + e_{-k}).
    static TrigPoly cosine(IntVec k, double amplitude);

    std::size_t dim() const { return dim_; }
    std::vector<Term> const& terms() const { return terms_; }

    //! Coefficient of e_k (zero when absent).
    std::complex<double> coeff(std::span<int const> k) const;
    //! Mean over Haar measure: the real part of c_0.
    double mean() const;
    //! Max |k_i| over nonzero modes.
    int degree() const;
    //! sum |c_k|, an upper bound on sup |v|.
    double l1_norm() const;
    //! True when only the zero mode is present.
    bool is_constant() const;

    //! Real value; throws if the imaginary residue exceeds imag_tolerance.
    double operator()(TorusPoint const& theta) const;
    std::complex<double> eval_complex(TorusPoint const& theta) const;

    //! Add a real constant to the zero mode.
    TrigPoly shifted(double c) const;

  private:
    std::size_t dim_;
    std::vector<Term> terms_;
};

//! Evaluate v at theta (imaginary part discarded after the residue check).
inline double eval_potential(TrigPoly const& v, TorusPoint const& theta)
{
    return v(theta);
}

}  // namespace qpc

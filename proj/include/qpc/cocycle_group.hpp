//---------------------------------------------------------------------------//
//! \file qpc/cocycle_group.hpp
//! The group of quasiperiodic cocycles (alpha, A).
//---------------------------------------------------------------------------//
#pragma once

#include <span>

#include "qpc/fiber_map.hpp"
#include "qpc/torus.hpp"

namespace qpc
{
//---------------------------------------------------------------------------//
/*!
 * Quasiperiodic cocycle (theta, v) -> (theta + alpha, A(theta) v).
 *
 * Equality of cocycles is only ever tested by evaluation on a grid; many
 * trees denote the same function.
 */
struct QpCocycle
{
    FrequencyVector freq;
    FiberMap fiber;

    //! Torus dimension (taken from the frequency).
    std::size_t torus_dim() const { return freq.dim(); }
    int matrix_dim() const { return fiber.matrix_dim(); }
};

//! Checked construction: fiber dimension must agree with the frequency.
QpCocycle make_cocycle(FrequencyVector freq, FiberMap fiber);

//! Identity element (0, I) of dimension (d, m).
QpCocycle identity_cocycle(std::size_t d, int m);

//! (alpha, A) o (beta, B) = (alpha + beta, (A o tau_beta) B).
QpCocycle compose(QpCocycle const& g, QpCocycle const& h);

//! (alpha, A)^{-1} = (-alpha, (A o tau_{-alpha})^{-1}).
QpCocycle inverse(QpCocycle const& g);

/*!
 * gs[n-1] o ... o gs[1] o gs[0].
 *
 * The composition is assembled as a balanced tree so evaluation depth is
 * O(log n). Throws on an empty list.
 */
QpCocycle word_product(std::span<QpCocycle const> gs);

}  // namespace qpc

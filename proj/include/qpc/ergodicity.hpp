//---------------------------------------------------------------------------//
//! \file qpc/ergodicity.hpp
//! Ergodicity criteria for the random torus translation driven by mu.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpc/measure.hpp"
#include "qpc/trig_poly.hpp"

namespace qpc
{
enum class Verdict
{
    pass,
    fail,
    inconclusive
};

char const* to_string(Verdict v);

//! Default Fourier cutoff: 100 for d = 1, 20 for d = 2, 8 beyond.
int default_fourier_cutoff(std::size_t d);
inline constexpr double kDefaultFourierTolerance = 1e-9;
//! |z - 1| at or below this counts as a frozen mode in Cesaro averages.
inline constexpr double kFrozenModeTolerance = 1e-14;

//! |mu-hat(k) - 1| for one mode of the cutoff box.
struct ModeGap
{
    IntVec k;
    double gap;
};

//---------------------------------------------------------------------------//
/*!
 * Outcome of the Fourier criterion mu-hat(k) != 1 on the box [-K, K]^d.
 *
 * A pass is only "up to cutoff K". A fail carries the first witness k (in
 * box enumeration order) with |mu-hat(k) - 1| <= tol.
 */
struct FourierCriterion
{
    Verdict verdict = Verdict::inconclusive;
    std::optional<IntVec> witness;
    int cutoff = 0;
    double tolerance = 0.0;
    //! Smallest gap over the box and the mode achieving it.
    double min_gap = 0.0;
    IntVec min_gap_mode;
    std::vector<ModeGap> gaps;
};

//! Nonzero modes of [-K, K]^d, lexicographic with smaller |k|_inf first.
std::vector<IntVec> cutoff_box(std::size_t d, int cutoff);

FourierCriterion check_fourier_criterion(TorusMeasure const& mu,
                                         int cutoff,
                                         double tol = kDefaultFourierTolerance);

//! An atom alpha of supp(mu) with dist(<k, alpha>, Z) > tol, if any.
std::optional<TorusPoint>
check_character_witness(TorusMeasure const& mu, IntVec const& k, double tol = kDefaultFourierTolerance);

//! G_n(z) = (1 - z^n) / (n (1 - z)), or 1 for a frozen mode.
std::complex<double> cesaro_factor(std::complex<double> z, long n);

/*!
 * (1/n) sum_{j<n} (Q_mu^j phi)(theta), in closed form through the Fourier
 * diagonalization Q_mu e_k = mu-hat(k) e_k.
 */
double cesaro_markov_average(TorusMeasure const& mu,
                             TrigPoly const& phi,
                             TorusPoint const& theta,
                             long n);

//! Max over a regular theta grid of |Cesaro average - phi-hat(0)|.
double uniform_cesaro_scan(TorusMeasure const& mu, TrigPoly const& phi, long n, std::size_t grid);

//---------------------------------------------------------------------------//
struct SumsetResult
{
    Verdict verdict = Verdict::inconclusive;  //!< pass = eps-dense
    //! First step at which every cell was occupied (when dense).
    std::optional<int> dense_at;
    std::size_t cells_total = 0;
    std::size_t cells_occupied = 0;
    //! Occupied cell indices (flattened, first coordinate fastest).
    std::vector<std::size_t> occupied;
};

//! Default cap on the occupancy table size.
inline constexpr std::size_t kDefaultCellCap = 50'000'000;

/*!
 * Grow S^n = S + S^{n-1}, S = supp(mu), on an occupancy table of cells of
 * side \c eps, stopping once every cell is hit or after n_max steps.
 *
 * Each occupied cell keeps one genuine element of the sumset as its
 * representative, so a "dense" verdict is sound: every cell contains a
 * point of the union of the S^n.
 */
SumsetResult sumset_density_check(TorusMeasure const& mu,
                                  int n_max,
                                  double eps,
                                  std::size_t cell_cap = kDefaultCellCap);

//---------------------------------------------------------------------------//
//! Combined report across the implemented criteria.
struct ErgodicityReport
{
    FourierCriterion fourier;
    //! Witness search result per failing mode, when a failure was found.
    std::optional<TorusPoint> character_witness;
    std::optional<double> cesaro_scan;
    long cesaro_n = 0;
    std::optional<SumsetResult> sumset;
    //! Overall verdict (the Fourier criterion's).
    Verdict overall = Verdict::inconclusive;
    std::string backed_by;
};

struct ErgodicityOptions
{
    int cutoff = 0;  //!< 0 selects default_fourier_cutoff(d)
    double tolerance = kDefaultFourierTolerance;
    std::optional<TrigPoly> cesaro_observable;
    long cesaro_n = 1000;
    std::size_t cesaro_grid = 64;
    std::optional<int> sumset_steps;
    double sumset_eps = 0.01;
};

ErgodicityReport assess_ergodicity(TorusMeasure const& mu, ErgodicityOptions const& opts);

}  // namespace qpc

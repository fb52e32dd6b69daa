//---------------------------------------------------------------------------//
//! \file qpc/matrix.hpp
//! Small dense matrices for SL_m(R) fibers.
//---------------------------------------------------------------------------//
#pragma once

#include <Eigen/Dense>
#include <initializer_list>

namespace qpc
{
//! Largest supported fiber dimension m.
inline constexpr int kMaxMatrixDim = 6;

//! Dynamic m x m matrix with inline storage (never allocates).
using Matrix = Eigen::Matrix<double,
                             Eigen::Dynamic,
                             Eigen::Dynamic,
                             Eigen::ColMajor,
                             kMaxMatrixDim,
                             kMaxMatrixDim>;

//! Largest singular value. Closed form for m = 2.
double op_norm(Matrix const& a);

//! True if all entries are finite.
bool all_finite(Matrix const& a);

//! Row-major construction helper: make_matrix({{a, b}, {c, d}}).
Matrix make_matrix(std::initializer_list<std::initializer_list<double>> rows);

//---------------------------------------------------------------------------//
/*!
 * Square real matrix with determinant within 1e-9 of one.
 *
 * The check runs once at construction; products built from SLMatrix values
 * are plain \c Matrix and the determinant drift is monitored, not corrected.
 */
class SLMatrix
{
  public:
    static constexpr double det_tolerance = 1e-9;

    explicit SLMatrix(Matrix m);

    static SLMatrix identity(int m);
    static SLMatrix diag(std::initializer_list<double> entries);

    Matrix const& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

  private:
    Matrix m_;
};

}  // namespace qpc

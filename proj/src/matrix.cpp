//! \file matrix.cpp
#include "qpc/matrix.hpp"

#include <cmath>
#include <sstream>

#include "qpc/error.hpp"

namespace qpc
{
double op_norm(Matrix const& a)
{
    if (a.rows() == 2 && a.cols() == 2)
    {
        // sigma_max = (|z1| + |z2|) / 2 with z1 = (a+d, c-b), z2 = (a-d, b+c)
        double p = a(0, 0), q = a(0, 1), r = a(1, 0), s = a(1, 1);
        return 0.5 * (std::hypot(p + s, r - q) + std::hypot(p - s, q + r));
    }
    if (a.rows() == 1)
        return std::fabs(a(0, 0));
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

bool all_finite(Matrix const& a)
{
    return a.allFinite();
}

Matrix make_matrix(std::initializer_list<std::initializer_list<double>> rows)
{
    auto m = static_cast<int>(rows.size());
    require(m >= 1 && m <= kMaxMatrixDim, "matrix: unsupported dimension");
    Matrix result(m, m);
    int i = 0;
    for (auto const& row : rows)
    {
        require(static_cast<int>(row.size()) == m, "matrix: not square");
        int j = 0;
        for (double v : row)
            result(i, j++) = v;
        ++i;
    }
    return result;
}

//---------------------------------------------------------------------------//
SLMatrix::SLMatrix(Matrix m) : m_(std::move(m))
{
    require(m_.rows() == m_.cols() && m_.rows() >= 1
                && m_.rows() <= kMaxMatrixDim,
            "SLMatrix: must be square with dimension in [1, 6]");
    require(all_finite(m_), "SLMatrix: non-finite entry");
    double det = m_.determinant();
    if (!(std::fabs(det - 1.0) <= det_tolerance))
    {
        std::ostringstream os;
        os.precision(17);
        os << "SLMatrix: determinant " << det << " is not 1";
        throw Error(os.str());
    }
}

SLMatrix SLMatrix::identity(int m)
{
    require(m >= 1 && m <= kMaxMatrixDim, "SLMatrix: unsupported dimension");
    return SLMatrix(Matrix::Identity(m, m));
}

SLMatrix SLMatrix::diag(std::initializer_list<double> entries)
{
    auto m = static_cast<int>(entries.size());
    require(m >= 1 && m <= kMaxMatrixDim, "SLMatrix: unsupported dimension");
    Matrix d = Matrix::Zero(m, m);
    int i = 0;
    for (double v : entries)
        d(i, i) = v, ++i;
    return SLMatrix(d);
}

}  // namespace qpc

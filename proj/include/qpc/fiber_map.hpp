//---------------------------------------------------------------------------//
//! \file qpc/fiber_map.hpp
//! Expression trees for continuous SL_m(R)-valued functions on T^d.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <memory>
#include <variant>

#include "qpc/matrix.hpp"
#include "qpc/torus.hpp"
#include "qpc/trig_poly.hpp"

namespace qpc
{
struct FiberNode;

//---------------------------------------------------------------------------//
/*!
 * Immutable, exactly evaluable fiber map A: T^d -> SL_m(R).
 *
 * Node kinds:
 *  - constant(M)          A(theta) = M
 *  - schrodinger(v, E)    A(theta) = [[v(theta) - E, -1], [1, 0]]
 *  - shear(w)             A(theta) = [[1, w], [0, 1]]
 *  - translate(B, beta)   A(theta) = B(theta + beta)
 *  - product(L, R)        A(theta) = L(theta) R(theta)
 *  - inverse(B)           A(theta) = B(theta)^{-1}
 *
 * Copies share the tree. Nodes whose value does not depend on theta
 * (constants, shears, constant potentials) report is_constant().
 */
class FiberMap
{
  public:
    enum class Kind
    {
        constant,
        schrodinger,
        shear,
        translate,
        product,
        inverse
    };

    //! Determinant below which Inverse evaluation fails.
    static constexpr double singular_tolerance = 1e-12;

    static FiberMap constant(SLMatrix m);
    static FiberMap schrodinger(TrigPoly v, double energy);
    static FiberMap shear(double w);
    static FiberMap translate(FiberMap child, TorusPoint shift);
    static FiberMap product(FiberMap left, FiberMap right);
    static FiberMap inverse(FiberMap child);
    static FiberMap identity(int m) { return constant(SLMatrix::identity(m)); }

    Kind kind() const;
    FiberNode const& node() const { return *node_; }

    //! Matrix dimension m.
    int matrix_dim() const { return m_; }
    //! Torus dimension required by the tree, or 0 if any d is accepted.
    std::size_t torus_dim() const { return d_; }
    bool is_constant() const { return constant_; }
    std::size_t depth() const { return depth_; }

    //! A(theta). Throws on singular Inverse or dimension mismatch.
    Matrix operator()(TorusPoint const& theta) const;

  private:
    explicit FiberMap(std::shared_ptr<FiberNode const> node);

    std::shared_ptr<FiberNode const> node_;
    int m_ = 0;
    std::size_t d_ = 0;
    bool constant_ = false;
    std::size_t depth_ = 1;
};

//---------------------------------------------------------------------------//
struct ConstNode
{
    SLMatrix value;
};
struct SchrodingerNode
{
    TrigPoly potential;
    double energy;
};
struct ShearNode
{
    double w;
};
struct TranslateNode
{
    FiberMap child;
    TorusPoint shift;
};
struct ProductNode
{
    FiberMap left;
    FiberMap right;
};
struct InverseNode
{
    FiberMap child;
};

struct FiberNode
{
    std::variant<ConstNode,
                 SchrodingerNode,
                 ShearNode,
                 TranslateNode,
                 ProductNode,
                 InverseNode>
        data;
};

//---------------------------------------------------------------------------//
//! Evaluate A at theta.
inline Matrix eval_fiber(FiberMap const& a, TorusPoint const& theta)
{
    return a(theta);
}

//! Default sup-distance grid resolution for torus dimension d.
std::size_t default_fiber_grid(std::size_t d);

/*!
 * Max over a regular grid of op_norm(A(theta) - B(theta)).
 *
 * This is a lower bound for the uniform distance that converges as the grid
 * is refined. \c d is the torus dimension used when neither tree fixes one.
 */
double sup_distance(FiberMap const& a,
                    FiberMap const& b,
                    std::size_t grid_points_per_dim,
                    std::size_t d = 1);

//! Max over a regular grid of op_norm(A(theta)).
double sup_norm(FiberMap const& a, std::size_t grid_points_per_dim, std::size_t d = 1);

}  // namespace qpc

//! \file fiber_map.cpp
#include "qpc/fiber_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpc/error.hpp"

namespace qpc
{
namespace
{
template<class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};
template<class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t merge_torus_dim(std::size_t a, std::size_t b)
{
    if (a == 0)
        return b;
    if (b == 0 || a == b)
        return a;
    throw Error("FiberMap: torus dimension mismatch (" + std::to_string(a)
                + " vs " + std::to_string(b) + ")");
}

Matrix invert(Matrix const& a)
{
    double det = a.determinant();
    if (!(std::fabs(det) >= FiberMap::singular_tolerance))
        throw Error("FiberMap: singular matrix under inverse (det = "
                    + std::to_string(det) + ")");
    if (a.rows() == 2)
    {
        Matrix inv(2, 2);
        inv << a(1, 1), -a(0, 1), -a(1, 0), a(0, 0);
        return inv / det;
    }
    return a.inverse();
}
}  // namespace

//---------------------------------------------------------------------------//
FiberMap::FiberMap(std::shared_ptr<FiberNode const> node)
    : node_(std::move(node))
{
    std::visit(
        Overloaded{
            [this](ConstNode const& n) {
                m_ = n.value.dim();
                constant_ = true;
            },
            [this](SchrodingerNode const& n) {
                require(std::isfinite(n.energy), "FiberMap: non-finite energy");
                m_ = 2;
                d_ = n.potential.dim();
                constant_ = n.potential.is_constant();
            },
            [this](ShearNode const& n) {
                require(std::isfinite(n.w), "FiberMap: non-finite shear");
                m_ = 2;
                constant_ = true;
            },
            [this](TranslateNode const& n) {
                m_ = n.child.m_;
                d_ = merge_torus_dim(n.child.d_, n.shift.dim());
                constant_ = n.child.constant_;
                depth_ = n.child.depth_ + 1;
            },
            [this](ProductNode const& n) {
                require(n.left.m_ == n.right.m_,
                        "FiberMap: product of matrices of different size");
                m_ = n.left.m_;
                d_ = merge_torus_dim(n.left.d_, n.right.d_);
                constant_ = n.left.constant_ && n.right.constant_;
                depth_ = std::max(n.left.depth_, n.right.depth_) + 1;
            },
            [this](InverseNode const& n) {
                m_ = n.child.m_;
                d_ = n.child.d_;
                constant_ = n.child.constant_;
                depth_ = n.child.depth_ + 1;
            },
        },
        node_->data);
}

FiberMap FiberMap::constant(SLMatrix m)
{
    return FiberMap(std::make_shared<FiberNode const>(FiberNode{ConstNode{std::move(m)}}));
}

FiberMap FiberMap::schrodinger(TrigPoly v, double energy)
{
    return FiberMap(std::make_shared<FiberNode const>(
        FiberNode{SchrodingerNode{std::move(v), energy}}));
}

FiberMap FiberMap::shear(double w)
{
    return FiberMap(std::make_shared<FiberNode const>(FiberNode{ShearNode{w}}));
}

FiberMap FiberMap::translate(FiberMap child, TorusPoint shift)
{
    return FiberMap(std::make_shared<FiberNode const>(
        FiberNode{TranslateNode{std::move(child), shift}}));
}

FiberMap FiberMap::product(FiberMap left, FiberMap right)
{
    return FiberMap(std::make_shared<FiberNode const>(
        FiberNode{ProductNode{std::move(left), std::move(right)}}));
}

FiberMap FiberMap::inverse(FiberMap child)
{
    return FiberMap(std::make_shared<FiberNode const>(
        FiberNode{InverseNode{std::move(child)}}));
}

FiberMap::Kind FiberMap::kind() const
{
    return static_cast<Kind>(node_->data.index());
}

Matrix FiberMap::operator()(TorusPoint const& theta) const
{
    if (d_ != 0 && theta.dim() != d_)
        throw Error("FiberMap: evaluated at a point of dimension "
                    + std::to_string(theta.dim()) + ", tree requires "
                    + std::to_string(d_));
    return std::visit(
        Overloaded{
            [](ConstNode const& n) -> Matrix { return n.value.matrix(); },
            [&](SchrodingerNode const& n) -> Matrix {
                Matrix s(2, 2);
                s << n.potential(theta) - n.energy, -1.0, 1.0, 0.0;
                return s;
            },
            [](ShearNode const& n) -> Matrix {
                Matrix s(2, 2);
                s << 1.0, n.w, 0.0, 1.0;
                return s;
            },
            [&](TranslateNode const& n) -> Matrix {
                return n.child(qpc::translate(theta, n.shift));
            },
            [&](ProductNode const& n) -> Matrix {
                return n.left(theta) * n.right(theta);
            },
            [&](InverseNode const& n) -> Matrix {
                return invert(n.child(theta));
            },
        },
        node_->data);
}

//---------------------------------------------------------------------------//
std::size_t default_fiber_grid(std::size_t d)
{
    return d <= 1 ? 256 : 64;
}

double sup_distance(FiberMap const& a,
                    FiberMap const& b,
                    std::size_t grid_points_per_dim,
                    std::size_t d)
{
    require(a.matrix_dim() == b.matrix_dim(),
            "sup_distance: fibers of different matrix dimension");
    std::size_t dim = merge_torus_dim(a.torus_dim(), b.torus_dim());
    if (dim == 0)
        dim = d;
    if (a.is_constant() && b.is_constant())
        grid_points_per_dim = 1;
    double result = 0.0;
    for (auto const& theta : torus_grid(dim, grid_points_per_dim))
        result = std::max(result, op_norm(a(theta) - b(theta)));
    return result;
}

double sup_norm(FiberMap const& a, std::size_t grid_points_per_dim, std::size_t d)
{
    std::size_t dim = a.torus_dim() == 0 ? d : a.torus_dim();
    if (a.is_constant())
        grid_points_per_dim = 1;
    double result = 0.0;
    for (auto const& theta : torus_grid(dim, grid_points_per_dim))
        result = std::max(result, op_norm(a(theta)));
    return result;
}

}  // namespace qpc

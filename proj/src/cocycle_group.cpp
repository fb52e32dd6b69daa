//! \file cocycle_group.cpp
#include "qpc/cocycle_group.hpp"

#include <string>

#include "qpc/error.hpp"

namespace qpc
{
QpCocycle make_cocycle(FrequencyVector freq, FiberMap fiber)
{
    require(freq.dim() >= 1, "cocycle: frequency has no coordinates");
    if (fiber.torus_dim() != 0 && fiber.torus_dim() != freq.dim())
        throw Error("cocycle: fiber expects torus dimension "
                    + std::to_string(fiber.torus_dim()) + " but frequency has "
                    + std::to_string(freq.dim()));
    return QpCocycle{freq, std::move(fiber)};
}

QpCocycle identity_cocycle(std::size_t d, int m)
{
    return make_cocycle(TorusPoint::zero(d), FiberMap::identity(m));
}

QpCocycle compose(QpCocycle const& g, QpCocycle const& h)
{
    require(g.torus_dim() == h.torus_dim(), "compose: torus dimension mismatch");
    require(g.matrix_dim() == h.matrix_dim(), "compose: matrix dimension mismatch");
    return make_cocycle(translate(g.freq, h.freq),
                        FiberMap::product(FiberMap::translate(g.fiber, h.freq), h.fiber));
}

QpCocycle inverse(QpCocycle const& g)
{
    TorusPoint neg = g.freq.negated();
    return make_cocycle(neg, FiberMap::inverse(FiberMap::translate(g.fiber, neg)));
}

namespace
{
// Composition of gs[lo..hi) as gs[hi-1] o ... o gs[lo].
QpCocycle compose_range(std::span<QpCocycle const> gs, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 1)
        return gs[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return compose(compose_range(gs, mid, hi), compose_range(gs, lo, mid));
}
}  // namespace

QpCocycle word_product(std::span<QpCocycle const> gs)
{
    require(!gs.empty(), "word_product: empty word");
    return compose_range(gs, 0, gs.size());
}

}  // namespace qpc

//! \file trig_poly.cpp
#include "qpc/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "qpc/error.hpp"

namespace qpc
{
namespace
{
std::string format_k(IntVec const& k)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < k.size(); ++i)
        os << (i ? "," : "") << k[i];
    os << ')';
    return os.str();
}

bool is_zero_mode(IntVec const& k)
{
    return std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
}
}  // namespace

TrigPoly::TrigPoly(std::size_t dim, std::vector<Term> terms)
    : dim_(dim), terms_(std::move(terms))
{
    require(dim >= 1 && dim <= kMaxTorusDim, "TrigPoly: bad dimension");
    std::map<IntVec, std::complex<double>> by_mode;
    for (auto const& t : terms_)
    {
        require(t.k.size() == dim_,
                "TrigPoly: mode " + format_k(t.k) + " has wrong dimension");
        require(std::isfinite(t.coeff.real()) && std::isfinite(t.coeff.imag()),
                "TrigPoly: non-finite coefficient at " + format_k(t.k));
        require(by_mode.emplace(t.k, t.coeff).second,
                "TrigPoly: duplicate mode " + format_k(t.k));
    }
    for (auto const& [k, c] : by_mode)
    {
        IntVec neg(k.size());
        std::transform(k.begin(), k.end(), neg.begin(), [](int x) { return -x; });
        auto it = by_mode.find(neg);
        std::complex<double> partner = it == by_mode.end() ? 0.0 : it->second;
        if (std::abs(partner - std::conj(c)) > symmetry_tolerance)
            throw Error("TrigPoly: coefficient of " + format_k(neg)
                        + " is not the conjugate of " + format_k(k)
                        + " (function would not be real)");
    }
    // drop explicit zeros so is_constant/degree see only live modes
    std::erase_if(terms_, [](Term const& t) { return t.coeff == 0.0; });
}

TrigPoly TrigPoly::constant(std::size_t dim, double c)
{
    std::vector<Term> terms;
    terms.push_back({IntVec(dim, 0), {c, 0.0}});
    return TrigPoly(dim, std::move(terms));
}

TrigPoly TrigPoly::cosine(IntVec k, double amplitude)
{
    require(!is_zero_mode(k), "TrigPoly::cosine: k must be nonzero");
    IntVec neg(k.size());
    std::transform(k.begin(), k.end(), neg.begin(), [](int x) { return -x; });
    std::size_t d = k.size();
    std::vector<Term> terms;
    terms.push_back({std::move(k), {amplitude / 2, 0.0}});
    terms.push_back({std::move(neg), {amplitude / 2, 0.0}});
    return TrigPoly(d, std::move(terms));
}

std::complex<double> TrigPoly::coeff(std::span<int const> k) const
{
    for (auto const& t : terms_)
        if (std::equal(t.k.begin(), t.k.end(), k.begin(), k.end()))
            return t.coeff;
    return 0.0;
}

double TrigPoly::mean() const
{
    IntVec zero(dim_, 0);
    return coeff(zero).real();
}

int TrigPoly::degree() const
{
    int deg = 0;
    for (auto const& t : terms_)
        for (int x : t.k)
            deg = std::max(deg, std::abs(x));
    return deg;
}

double TrigPoly::l1_norm() const
{
    double s = 0.0;
    for (auto const& t : terms_)
        s += std::abs(t.coeff);
    return s;
}

bool TrigPoly::is_constant() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](Term const& t) {
        return is_zero_mode(t.k);
    });
}

std::complex<double> TrigPoly::eval_complex(TorusPoint const& theta) const
{
    require(theta.dim() == dim_, "TrigPoly: evaluation dimension mismatch");
    std::complex<double> sum = 0.0;
    for (auto const& t : terms_)
        sum += t.coeff * character(t.k, theta);
    return sum;
}

double TrigPoly::operator()(TorusPoint const& theta) const
{
    auto z = eval_complex(theta);
    if (std::fabs(z.imag()) > imag_tolerance * std::max(1.0, l1_norm()))
        throw Error("TrigPoly: imaginary residue above tolerance");
    return z.real();
}

TrigPoly TrigPoly::shifted(double c) const
{
    std::vector<Term> terms = terms_;
    IntVec zero(dim_, 0);
    auto it = std::find_if(terms.begin(), terms.end(),
                           [&](Term const& t) { return t.k == zero; });
    if (it == terms.end())
        terms.push_back({zero, {c, 0.0}});
    else
        it->coeff += c;
    return TrigPoly(dim_, std::move(terms));
}

}  // namespace qpc

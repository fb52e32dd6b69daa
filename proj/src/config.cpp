//! \file config.cpp
#include "qpc/config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qpc/error.hpp"

namespace qpc
{
namespace
{
char const* type_name(Json const& j)
{
    return j.type_name();
}

// Run a constructor that may throw a domain error and report it at \c node.
template<class F>
auto checked(ConfigNode const& node, F&& make) -> decltype(make())
{
    try
    {
        return make();
    }
    catch (Error const& e)
    {
        node.fail(e.what());
    }
}

template<class X, class F>
AtomicMeasure<X> read_measure(ConfigNode const& node, F&& read_point)
{
    node.expect_object();
    node.allow_keys({"atoms"});
    ConfigNode atoms = node.at("atoms");
    atoms.expect_array();
    if (atoms.size() == 0)
        atoms.fail("measure has no atoms");
    std::vector<typename AtomicMeasure<X>::Atom> parsed;
    for (std::size_t i = 0; i < atoms.size(); ++i)
    {
        ConfigNode atom = atoms.at(i);
        atom.expect_object();
        parsed.push_back({read_point(atom), atom.at("weight").number()});
    }
    return checked(node, [&] { return AtomicMeasure<X>(std::move(parsed)); });
}

Json matrix_json(Matrix const& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
    {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}
}  // namespace

//---------------------------------------------------------------------------//
bool ConfigNode::has(std::string const& key) const
{
    return value_->is_object() && value_->contains(key);
}

ConfigNode ConfigNode::at(std::string const& key) const
{
    expect_object();
    auto it = value_->find(key);
    if (it == value_->end())
        throw ConfigError(path_ + "/" + key, "required field is missing");
    return ConfigNode(*it, path_ + "/" + key, defaults_);
}

ConfigNode ConfigNode::at(std::size_t index) const
{
    expect_array();
    if (index >= value_->size())
        throw ConfigError(path_ + "/" + std::to_string(index), "index out of range");
    return ConfigNode((*value_)[index], path_ + "/" + std::to_string(index), defaults_);
}

ConfigNode ConfigNode::at_or(std::string const& key, Json const& fallback) const
{
    expect_object();
    if (!value_->contains(key))
    {
        (*value_)[key] = fallback;
        if (defaults_)
            defaults_->push_back(path_ + "/" + key);
    }
    return at(key);
}

std::size_t ConfigNode::size() const
{
    return value_->size();
}

double ConfigNode::number() const
{
    if (!value_->is_number())
        fail(std::string("expected a number, found ") + type_name(*value_));
    double x = value_->get<double>();
    if (!std::isfinite(x))
        fail("expected a finite number");
    return x;
}

long ConfigNode::integer() const
{
    if (!value_->is_number_integer())
        fail(std::string("expected an integer, found ") + type_name(*value_));
    if (value_->is_number_unsigned()
        && value_->get<std::uint64_t>()
               > static_cast<std::uint64_t>(std::numeric_limits<long>::max()))
        fail("integer out of range");
    return value_->get<long>();
}

std::uint64_t ConfigNode::unsigned_integer() const
{
    if (!value_->is_number_integer())
        fail(std::string("expected a non-negative integer, found ") + type_name(*value_));
    if (!value_->is_number_unsigned() && value_->get<long>() < 0)
        fail("expected a non-negative integer");
    return value_->get<std::uint64_t>();
}

std::string ConfigNode::string() const
{
    if (!value_->is_string())
        fail(std::string("expected a string, found ") + type_name(*value_));
    return value_->get<std::string>();
}

void ConfigNode::expect_object() const
{
    if (!value_->is_object())
        fail(std::string("expected an object, found ") + type_name(*value_));
}

void ConfigNode::expect_array() const
{
    if (!value_->is_array())
        fail(std::string("expected an array, found ") + type_name(*value_));
}

void ConfigNode::allow_keys(std::initializer_list<char const*> allowed) const
{
    expect_object();
    for (auto const& item : value_->items())
    {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](char const* k) { return item.key() == k; });
        if (!known)
            throw ConfigError(path_ + "/" + item.key(), "unknown field");
    }
}

//---------------------------------------------------------------------------//
TorusPoint read_torus_point(ConfigNode const& node)
{
    node.expect_array();
    if (node.size() == 0 || node.size() > kMaxTorusDim)
        node.fail("torus point needs 1 to " + std::to_string(kMaxTorusDim) + " coordinates");
    std::vector<double> coords;
    for (std::size_t i = 0; i < node.size(); ++i)
        coords.push_back(node.at(i).number());
    return TorusPoint::wrap(coords);
}

IntVec read_int_vec(ConfigNode const& node)
{
    node.expect_array();
    IntVec k;
    for (std::size_t i = 0; i < node.size(); ++i)
    {
        long x = node.at(i).integer();
        if (std::labs(x) > 1'000'000)
            node.at(i).fail("mode index too large");
        k.push_back(static_cast<int>(x));
    }
    return k;
}

std::vector<long> read_long_list(ConfigNode const& node)
{
    node.expect_array();
    std::vector<long> out;
    for (std::size_t i = 0; i < node.size(); ++i)
        out.push_back(node.at(i).integer());
    return out;
}

Matrix read_matrix(ConfigNode const& node)
{
    node.expect_array();
    auto m = static_cast<Eigen::Index>(node.size());
    if (m < 1 || m > kMaxMatrixDim)
        node.fail("matrix needs 1 to " + std::to_string(kMaxMatrixDim) + " rows");
    Matrix out(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
    {
        ConfigNode row = node.at(static_cast<std::size_t>(i));
        row.expect_array();
        if (static_cast<Eigen::Index>(row.size()) != m)
            row.fail("matrix must be square");
        for (Eigen::Index j = 0; j < m; ++j)
            out(i, j) = row.at(static_cast<std::size_t>(j)).number();
    }
    return out;
}

TrigPoly read_trig_poly(ConfigNode const& node)
{
    node.expect_object();
    node.allow_keys({"dim", "terms"});
    ConfigNode terms = node.at("terms");
    terms.expect_array();
    std::vector<TrigPoly::Term> parsed;
    for (std::size_t i = 0; i < terms.size(); ++i)
    {
        ConfigNode t = terms.at(i);
        t.allow_keys({"k", "re", "im"});
        IntVec k = read_int_vec(t.at("k"));
        double re = t.at_or("re", 0.0).number();
        double im = t.at_or("im", 0.0).number();
        parsed.push_back({std::move(k), {re, im}});
    }
    Json inferred = parsed.empty() ? Json(1) : Json(parsed.front().k.size());
    auto dim = node.at_or("dim", inferred).unsigned_integer();
    return checked(node, [&] { return TrigPoly(dim, std::move(parsed)); });
}

FiberMap read_fiber(ConfigNode const& node)
{
    node.expect_object();
    std::string kind = node.at("kind").string();
    return checked(node, [&]() -> FiberMap {
        if (kind == "const")
        {
            node.allow_keys({"kind", "matrix"});
            return FiberMap::constant(SLMatrix(read_matrix(node.at("matrix"))));
        }
        if (kind == "schrodinger")
        {
            node.allow_keys({"kind", "potential", "energy"});
            return FiberMap::schrodinger(read_trig_poly(node.at("potential")),
                                         node.at("energy").number());
        }
        if (kind == "shear")
        {
            node.allow_keys({"kind", "w"});
            return FiberMap::shear(node.at("w").number());
        }
        if (kind == "translate")
        {
            node.allow_keys({"kind", "child", "shift"});
            return FiberMap::translate(read_fiber(node.at("child")),
                                       read_torus_point(node.at("shift")));
        }
        if (kind == "product")
        {
            node.allow_keys({"kind", "left", "right"});
            return FiberMap::product(read_fiber(node.at("left")), read_fiber(node.at("right")));
        }
        if (kind == "inverse")
        {
            node.allow_keys({"kind", "child"});
            return FiberMap::inverse(read_fiber(node.at("child")));
        }
        node.at("kind").fail("unknown fiber node kind '" + kind
                             + "' (expected const, schrodinger, shear, translate, "
                               "product or inverse)");
    });
}

QpCocycle read_cocycle(ConfigNode const& node)
{
    node.expect_object();
    TorusPoint freq = read_torus_point(node.at("freq"));
    FiberMap fiber = read_fiber(node.at("fiber"));
    return checked(node, [&] { return make_cocycle(freq, fiber); });
}

TorusMeasure read_torus_measure(ConfigNode const& node)
{
    return read_measure<TorusPoint>(node, [](ConfigNode const& atom) {
        atom.allow_keys({"point", "weight"});
        return read_torus_point(atom.at("point"));
    });
}

RealMeasure read_real_measure(ConfigNode const& node)
{
    return read_measure<double>(node, [](ConfigNode const& atom) {
        atom.allow_keys({"value", "weight"});
        return atom.at("value").number();
    });
}

CocycleMeasure read_cocycle_measure(ConfigNode const& node)
{
    auto nu = read_measure<QpCocycle>(node, [](ConfigNode const& atom) {
        atom.allow_keys({"freq", "fiber", "weight"});
        return read_cocycle(atom);
    });
    for (std::size_t i = 1; i < nu.size(); ++i)
    {
        if (nu.point(i).torus_dim() != nu.point(0).torus_dim()
            || nu.point(i).matrix_dim() != nu.point(0).matrix_dim())
            node.fail("atoms disagree on torus or matrix dimension");
    }
    return nu;
}

//---------------------------------------------------------------------------//
Json to_json(TorusPoint const& p)
{
    Json out = Json::array();
    for (double x : p.coords())
        out.push_back(x);
    return out;
}

Json to_json(TrigPoly const& v)
{
    Json terms = Json::array();
    for (auto const& t : v.terms())
        terms.push_back({{"k", t.k}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
    return {{"dim", v.dim()}, {"terms", std::move(terms)}};
}

Json to_json(FiberMap const& a)
{
    return std::visit(
        [](auto const& n) -> Json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstNode>)
                return {{"kind", "const"}, {"matrix", matrix_json(n.value.matrix())}};
            else if constexpr (std::is_same_v<T, SchrodingerNode>)
                return {{"kind", "schrodinger"},
                        {"potential", to_json(n.potential)},
                        {"energy", n.energy}};
            else if constexpr (std::is_same_v<T, ShearNode>)
                return {{"kind", "shear"}, {"w", n.w}};
            else if constexpr (std::is_same_v<T, TranslateNode>)
                return {{"kind", "translate"},
                        {"child", to_json(n.child)},
                        {"shift", to_json(n.shift)}};
            else if constexpr (std::is_same_v<T, ProductNode>)
                return {{"kind", "product"},
                        {"left", to_json(n.left)},
                        {"right", to_json(n.right)}};
            else
                return {{"kind", "inverse"}, {"child", to_json(n.child)}};
        },
        a.node().data);
}

Json to_json(QpCocycle const& g)
{
    return {{"freq", to_json(g.freq)}, {"fiber", to_json(g.fiber)}};
}

Json to_json(TorusMeasure const& mu)
{
    Json atoms = Json::array();
    for (auto const& a : mu.atoms())
        atoms.push_back({{"point", to_json(a.point)}, {"weight", a.weight}});
    return {{"atoms", std::move(atoms)}};
}

Json to_json(RealMeasure const& rho)
{
    Json atoms = Json::array();
    for (auto const& a : rho.atoms())
        atoms.push_back({{"value", a.point}, {"weight", a.weight}});
    return {{"atoms", std::move(atoms)}};
}

Json to_json(CocycleMeasure const& nu)
{
    Json atoms = Json::array();
    for (auto const& a : nu.atoms())
    {
        Json atom = to_json(a.point);
        atom["weight"] = a.weight;
        atoms.push_back(std::move(atom));
    }
    return {{"atoms", std::move(atoms)}};
}

//---------------------------------------------------------------------------//
Json parse_config_text(std::string const& text)
{
    try
    {
        return Json::parse(text);
    }
    catch (Json::parse_error const& e)
    {
        std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset; ++i)
        {
            if (text[i] == '\n')
            {
                ++line;
                column = 1;
            }
            else
            {
                ++column;
            }
        }
        std::string what = e.what();
        auto colon = what.find("parse error");
        std::string detail = colon == std::string::npos ? what : what.substr(colon);
        throw ConfigError("", "line " + std::to_string(line) + ", column "
                                  + std::to_string(column) + ": " + detail);
    }
}

}  // namespace qpc

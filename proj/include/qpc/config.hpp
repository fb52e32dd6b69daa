//---------------------------------------------------------------------------//
//! \file qpc/config.hpp
//! JSON schema for experiment inputs: torus points, trig polynomials, fiber
//! maps, cocycles and measures.
//---------------------------------------------------------------------------//
#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpc/fiber_map.hpp"
#include "qpc/measure.hpp"
#include "qpc/trig_poly.hpp"

namespace qpc
{
using Json = nlohmann::json;

//---------------------------------------------------------------------------//
/*!
 * Schema violation. \c path is a JSON pointer to the offending field.
 */
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string path, std::string const& msg)
        : std::runtime_error(path.empty() ? msg : path + ": " + msg)
        , path_(std::move(path))
    {
    }
    std::string const& path() const { return path_; }

  private:
    std::string path_;
};

//---------------------------------------------------------------------------//
/*!
 * Cursor into a mutable JSON document.
 *
 * Reads validate types and report JSON-pointer paths on failure. Optional
 * reads write the default back into the document, so after a full pass the
 * document lists every resolved default.
 */
class ConfigNode
{
  public:
    //! \c defaults, when given, collects the paths of filled-in defaults.
    ConfigNode(Json& value, std::string path, std::vector<std::string>* defaults = nullptr)
        : value_(&value), path_(std::move(path)), defaults_(defaults)
    {
    }

    Json& json() const { return *value_; }
    std::string const& path() const { return path_; }

    [[noreturn]] void fail(std::string const& msg) const { throw ConfigError(path_, msg); }

    bool has(std::string const& key) const;
    ConfigNode at(std::string const& key) const;
    ConfigNode at(std::size_t index) const;
    //! Member with a default written back when absent.
    ConfigNode at_or(std::string const& key, Json const& fallback) const;
    std::size_t size() const;

    double number() const;
    long integer() const;
    std::uint64_t unsigned_integer() const;
    std::string string() const;
    void expect_object() const;
    void expect_array() const;

    //! Reject keys outside \c allowed.
    void allow_keys(std::initializer_list<char const*> allowed) const;

  private:
    Json* value_;
    std::string path_;
    std::vector<std::string>* defaults_;
};

//---------------------------------------------------------------------------//
// Readers
TorusPoint read_torus_point(ConfigNode const& node);
IntVec read_int_vec(ConfigNode const& node);
std::vector<long> read_long_list(ConfigNode const& node);
Matrix read_matrix(ConfigNode const& node);
TrigPoly read_trig_poly(ConfigNode const& node);
FiberMap read_fiber(ConfigNode const& node);
QpCocycle read_cocycle(ConfigNode const& node);
TorusMeasure read_torus_measure(ConfigNode const& node);
RealMeasure read_real_measure(ConfigNode const& node);
CocycleMeasure read_cocycle_measure(ConfigNode const& node);

// Writers (inverse of the readers)
Json to_json(TorusPoint const& p);
Json to_json(TrigPoly const& v);
Json to_json(FiberMap const& a);
Json to_json(QpCocycle const& g);
Json to_json(TorusMeasure const& mu);
Json to_json(RealMeasure const& rho);
Json to_json(CocycleMeasure const& nu);

//! Parse text, mapping syntax errors to "line L, column C" diagnostics.
Json parse_config_text(std::string const& text);

}  // namespace qpc

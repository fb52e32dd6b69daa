//---------------------------------------------------------------------------//
//! \file qpc/runner.hpp
//! Declarative experiment runner behind the command-line tool.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qpc/config.hpp"

namespace qpc
{
inline constexpr char const kArtifactVersion[] = "1.0.0";

//! Experiment kinds, in the order they are listed by the CLI.
std::vector<std::string> const& command_names();

struct RunOptions
{
    std::optional<std::uint64_t> seed;  //!< overrides the config seed
    unsigned threads = 1;
};

struct CsvTable
{
    std::string name;  //!< file stem
    std::string text;  //!< header row plus data rows
};

struct ExperimentReport
{
    std::string command;
    Json manifest;  //!< resolved config plus artifact version
    std::vector<CsvTable> tables;
    Json summary;
    Json metrics;  //!< wall clock and throughput; never part of a table
};

struct Validation
{
    std::string command;
    Json manifest;
    std::vector<std::string> defaults;  //!< JSON pointers of filled defaults
};

//! Read and parse a config file. Throws ConfigError.
Json load_config(std::filesystem::path const& path);

/*!
 * Schema-check a config without running it.
 *
 * \c command, when given, must agree with the config's "command" field (and
 * supplies it when the field is absent).
 */
Validation validate_config(Json config,
                           RunOptions const& opts,
                           std::optional<std::string> const& command = {});

//! Validate, then dispatch to the module operation.
ExperimentReport run_experiment(Json config,
                                RunOptions const& opts,
                                std::optional<std::string> const& command = {});

//! Write <name>.csv for every table, manifest.json and report.json.
void write_report(ExperimentReport const& report, std::filesystem::path const& out_dir);

//! 17 significant digits ("%.17g"), which round-trips any double.
std::string format_double(double x);

}  // namespace qpc

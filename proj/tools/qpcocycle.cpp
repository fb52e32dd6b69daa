//! \file qpcocycle.cpp
//! Command-line front end: one subcommand per experiment kind.
#include <CLI11.hpp>
#include <iostream>

#include "qpc/error.hpp"
#include "qpc/runner.hpp"

namespace
{
enum Exit
{
    ok = 0,
    domain_error = 1,
    config_error = 2,
};

struct Flags
{
    std::string config;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::string out_dir = ".";
};

int validate(Flags const& flags)
{
    qpc::RunOptions opts;
    opts.seed = flags.seed;
    auto v = qpc::validate_config(qpc::load_config(flags.config), opts);
    std::cout << "config ok: " << v.command << "\n";
    if (v.defaults.empty())
    {
        std::cout << "no defaults were needed\n";
    }
    else
    {
        std::cout << "resolved defaults:\n";
        for (auto const& path : v.defaults)
            std::cout << "  " << path << " = "
                      << v.manifest.at(nlohmann::json::json_pointer(path)).dump() << "\n";
    }
    std::cout << v.manifest.dump(2) << "\n";
    return ok;
}

int run(std::string const& command, Flags const& flags)
{
    qpc::RunOptions opts;
    opts.seed = flags.seed;
    opts.threads = flags.threads;
    auto report = qpc::run_experiment(qpc::load_config(flags.config), opts, command);
    qpc::write_report(report, flags.out_dir);
    for (auto const& t : report.tables)
        std::cout << flags.out_dir << "/" << t.name << ".csv\n";
    std::cout << flags.out_dir << "/report.json\n";
    return ok;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Random products of quasiperiodic cocycles: experiment runner"};
    app.set_version_flag("--version", std::string(qpc::kArtifactVersion));
    app.require_subcommand(1);

    Flags flags;
    std::string chosen;
    for (auto const& name : qpc::command_names())
    {
        auto* sub = app.add_subcommand(name, name == "validate"
                                                 ? "Check a config and list resolved defaults"
                                                 : "Run the " + name + " experiment");
        sub->add_option("--config", flags.config, "Experiment config (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", flags.seed, "Override the master seed");
        if (name != "validate")
        {
            sub->add_option("--threads", flags.threads, "Worker threads")
                ->check(CLI::Range(1u, 1024u));
            sub->add_option("--out-dir", flags.out_dir, "Output directory");
        }
        sub->callback([&chosen, name] { chosen = name; });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    try
    {
        return chosen == "validate" ? validate(flags) : run(chosen, flags);
    }
    catch (qpc::ConfigError const& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return config_error;
    }
    catch (qpc::Error const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return domain_error;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return domain_error;
    }
}

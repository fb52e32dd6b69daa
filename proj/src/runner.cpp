//! \file runner.cpp
#include "qpc/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "qpc/base_dynamics.hpp"
#include "qpc/ergodicity.hpp"
#include "qpc/error.hpp"
#include "qpc/lyapunov.hpp"
#include "qpc/schrodinger.hpp"
#include "qpc/wasserstein.hpp"

namespace qpc
{
namespace
{
//! Computation of a validated experiment; returns a count of work units.
using Job = std::function<double(ExperimentReport&, unsigned threads)>;

struct Prepared
{
    std::string command;
    Json manifest;
    std::vector<std::string> defaults;
    Job job;
    char const* unit = "";
};

class Csv
{
  public:
    explicit Csv(std::vector<std::string> const& header) { line(header); }

    void row(std::vector<std::string> const& cells) { line(cells); }
    std::string const& text() const { return text_; }

  private:
    void line(std::vector<std::string> const& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i)
        {
            if (i)
                text_ += ',';
            text_ += cells[i];
        }
        text_ += '\n';
    }
    std::string text_;
};

std::string cell(double x)
{
    return format_double(x);
}
std::string cell(long x)
{
    return std::to_string(x);
}

//---------------------------------------------------------------------------//
// Scalar readers with range checks

long positive_long(ConfigNode const& node)
{
    long x = node.integer();
    if (x < 1)
        node.fail("must be at least 1");
    return x;
}

double positive_number(ConfigNode const& node)
{
    double x = node.number();
    if (!(x > 0.0))
        node.fail("must be positive");
    return x;
}

bool boolean(ConfigNode const& node)
{
    if (!node.json().is_boolean())
        node.fail(std::string("expected true or false, found ") + node.json().type_name());
    return node.json().get<bool>();
}

std::vector<long> horizon_list(ConfigNode const& node)
{
    auto list = read_long_list(node);
    if (list.empty())
        node.fail("needs at least one horizon");
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] < 1)
            node.at(i).fail("horizons must be at least 1");
    return list;
}

Json zeros(std::size_t d)
{
    return Json(std::vector<double>(d, 0.0));
}

TorusPoint theta_of(ConfigNode const& root, std::size_t d)
{
    ConfigNode node = root.at_or("theta", zeros(d));
    TorusPoint theta = read_torus_point(node);
    if (theta.dim() != d)
        node.fail("expected " + std::to_string(d) + " coordinates");
    return theta;
}

std::size_t grid_of(ConfigNode const& root, std::size_t d)
{
    ConfigNode node = root.at_or("grid", default_fiber_grid(d));
    long g = positive_long(node);
    if (std::pow(static_cast<double>(g), static_cast<double>(d)) > 1e7)
        node.fail("grid has more than 1e7 points");
    return static_cast<std::size_t>(g);
}

L1Options l1_options(ConfigNode const& root, std::size_t d, std::uint64_t seed, bool read_n = true)
{
    L1Options opts;
    opts.seed = seed;
    if (read_n)
        opts.n = positive_long(root.at_or("n", 1000));
    opts.samples = static_cast<std::size_t>(positive_long(root.at_or("samples", 100)));
    ConfigNode policy = root.at_or("theta_policy", "fixed");
    std::string p = policy.string();
    if (p == "fixed")
        opts.policy = ThetaPolicy::fixed;
    else if (p == "haar")
        opts.policy = ThetaPolicy::haar;
    else
        policy.fail("unknown theta policy '" + p + "' (expected fixed or haar)");
    opts.theta0 = theta_of(root, d);
    opts.check_ergodicity = boolean(root.at_or("check_ergodicity", true));
    opts.ergodicity_cutoff
        = static_cast<int>(positive_long(root.at_or("ergodicity_cutoff", default_fourier_cutoff(d))));
    return opts;
}

//! Mode table sizes stay bounded so validation cannot schedule runaway work.
int cutoff_of(ConfigNode const& node, std::size_t d)
{
    long k = positive_long(node);
    if (std::pow(2.0 * static_cast<double>(k) + 1.0, static_cast<double>(d)) > 1e8)
        node.fail("cutoff box has more than 1e8 modes");
    return static_cast<int>(k);
}

CocycleMeasure measure_of(ConfigNode const& root, char const* key)
{
    return read_cocycle_measure(root.at(key));
}

Json fit_json(RateFit const& fit)
{
    return {{"status", to_string(fit.status)},
            {"rate", fit.rate},
            {"intercept", fit.intercept},
            {"r_squared", fit.r_squared},
            {"residual_rms", fit.residual_rms},
            {"rate_lower_bound", fit.rate_lower_bound},
            {"points", fit.points}};
}

Json ldt_json(LdtReport const& rep)
{
    Json rows = Json::array();
    for (auto const& r : rep.rows)
        rows.push_back({{"n", r.n}, {"samples", r.samples}, {"hits", r.hits}});
    return {{"epsilon", rep.epsilon},
            {"reference", rep.reference},
            {"monotone_decay", rep.monotone_decay},
            {"fit", fit_json(rep.fit)},
            {"counts", std::move(rows)}};
}

CsvTable ldt_table(char const* name, LdtReport const& rep)
{
    Csv csv({"n", "tail", "stderr"});
    for (auto const& r : rep.rows)
        csv.row({cell(r.n), cell(r.tail), cell(r.std_error)});
    return {name, csv.text()};
}

Json optional_json(std::optional<IntVec> const& k)
{
    return k ? Json(*k) : Json(nullptr);
}

//---------------------------------------------------------------------------//
// Commands

Prepared prepare_ergodicity(ConfigNode const& root)
{
    root.allow_keys({"command", "seed", "version", "frequency_measure", "measure", "cutoff",
                     "tolerance", "cesaro", "sumset"});
    if (root.has("frequency_measure") == root.has("measure"))
        root.fail("give exactly one of 'frequency_measure' or 'measure'");
    TorusMeasure mu = root.has("frequency_measure")
                          ? read_torus_measure(root.at("frequency_measure"))
                          : pushforward_freq(measure_of(root, "measure"));
    std::size_t d = torus_dim(mu);

    ErgodicityOptions eo;
    eo.cutoff = cutoff_of(root.at_or("cutoff", default_fourier_cutoff(d)), d);
    eo.tolerance = positive_number(root.at_or("tolerance", kDefaultFourierTolerance));
    if (root.has("cesaro"))
    {
        ConfigNode c = root.at("cesaro");
        c.allow_keys({"observable", "n", "grid"});
        ConfigNode obs = c.at("observable");
        TrigPoly phi = read_trig_poly(obs);
        if (phi.dim() != d)
            obs.fail("observable dimension differs from the measure");
        eo.cesaro_observable = std::move(phi);
        eo.cesaro_n = positive_long(c.at_or("n", 1000));
        eo.cesaro_grid = grid_of(c, d);
    }
    if (root.has("sumset"))
    {
        ConfigNode s = root.at("sumset");
        s.allow_keys({"steps", "eps"});
        eo.sumset_steps = static_cast<int>(positive_long(s.at_or("steps", 100)));
        ConfigNode eps = s.at_or("eps", 0.01);
        eo.sumset_eps = positive_number(eps);
        if (eo.sumset_eps > 1.0)
            eps.fail("must not exceed 1");
    }

    Prepared p;
    p.unit = "modes";
    p.job = [mu = std::move(mu), eo, d](ExperimentReport& r, unsigned) {
        ErgodicityReport rep = assess_ergodicity(mu, eo);
        std::vector<std::string> header;
        if (d == 1)
            header.push_back("k");
        else
            for (std::size_t i = 0; i < d; ++i)
                header.push_back("k" + std::to_string(i + 1));
        header.push_back("abs_gap");
        Csv csv(header);
        for (auto const& g : rep.fourier.gaps)
        {
            std::vector<std::string> row;
            for (int x : g.k)
                row.push_back(std::to_string(x));
            row.push_back(cell(g.gap));
            csv.row(row);
        }
        r.tables.push_back({"ergodicity_modes", csv.text()});

        Json fourier = {{"verdict", to_string(rep.fourier.verdict)},
                        {"cutoff", rep.fourier.cutoff},
                        {"tolerance", rep.fourier.tolerance},
                        {"witness", optional_json(rep.fourier.witness)},
                        {"min_gap", rep.fourier.min_gap},
                        {"min_gap_mode", rep.fourier.min_gap_mode}};
        r.summary = {{"overall", to_string(rep.overall)},
                     {"backed_by", rep.backed_by},
                     {"fourier", std::move(fourier)}};
        if (rep.fourier.witness)
        {
            // every atom should pair with the witness to an integer
            r.summary["character_check"]
                = {{"k", *rep.fourier.witness},
                   {"confirmed", !rep.character_witness},
                   {"offending_atom", rep.character_witness ? to_json(*rep.character_witness)
                                                            : Json(nullptr)}};
        }
        if (rep.cesaro_scan)
            r.summary["cesaro"] = {{"n", rep.cesaro_n}, {"sup_abs_average", *rep.cesaro_scan}};
        if (rep.sumset)
        {
            auto const& s = *rep.sumset;
            r.summary["sumset"] = {{"verdict", to_string(s.verdict)},
                                   {"dense_at", s.dense_at ? Json(*s.dense_at) : Json(nullptr)},
                                   {"cells_total", s.cells_total},
                                   {"cells_occupied", s.cells_occupied}};
        }
        return static_cast<double>(rep.fourier.gaps.size());
    };
    return p;
}

Prepared prepare_base_ldt(ConfigNode const& root, std::uint64_t seed)
{
    root.allow_keys({"command", "seed", "version", "measure", "observable", "epsilon",
                     "n_list", "samples", "theta"});
    CocycleMeasure nu = measure_of(root, "measure");
    std::size_t d = torus_dim(nu);

    ConfigNode obs = root.at("observable");
    obs.allow_keys({"window", "table", "trig"});
    auto window = static_cast<std::size_t>(positive_long(obs.at_or("window", 1)));
    ConfigNode table_node = obs.at("table");
    table_node.expect_array();
    std::vector<double> table;
    for (std::size_t i = 0; i < table_node.size(); ++i)
        table.push_back(table_node.at(i).number());
    Json unit_trig = {{"dim", d}, {"terms", {{{"k", std::vector<int>(d, 0)}, {"re", 1.0}}}}};
    ConfigNode trig_node = obs.at_or("trig", unit_trig);
    TrigPoly trig = read_trig_poly(trig_node);
    if (trig.dim() != d)
        trig_node.fail("dimension differs from the measure");
    Observable phi = [&] {
        try
        {
            return Observable(nu.size(), window, std::move(table), std::move(trig));
        }
        catch (Error const& e)
        {
            obs.fail(e.what());
        }
    }();

    BaseLdtOptions bo;
    bo.seed = seed;
    bo.epsilon = positive_number(root.at_or("epsilon", 0.1));
    bo.n_list = horizon_list(root.at_or("n_list", Json{50, 100, 200}));
    bo.samples = static_cast<std::size_t>(positive_long(root.at_or("samples", 10000)));
    bo.theta = theta_of(root, d);

    Prepared p;
    p.unit = "symbols";
    p.job = [nu = std::move(nu), phi = std::move(phi), bo](ExperimentReport& r,
                                                           unsigned threads) {
        BaseLdtOptions local = bo;
        local.threads = threads;
        LdtReport rep = estimate_base_ldt(nu, phi, local);
        r.tables.push_back(ldt_table("base_ldt", rep));
        r.summary = ldt_json(rep);
        r.summary["expectation"] = phi.expectation(nu);
        r.summary["range_bound"] = phi.range_bound();
        double work = 0.0;
        for (long n : bo.n_list)
            work += static_cast<double>(n) * static_cast<double>(bo.samples);
        return work;
    };
    return p;
}

Json l1_json(L1Estimate const& e)
{
    return {{"estimate", e.estimate},
            {"stderr", e.std_error},
            {"n", e.n},
            {"samples", e.samples},
            {"theta_policy", to_string(e.policy)},
            {"base_ergodic", to_string(e.base_ergodic)}};
}

Prepared prepare_lyapunov(ConfigNode const& root, std::uint64_t seed)
{
    root.allow_keys({"command", "seed", "version", "measure", "n_list", "samples",
                     "theta_policy", "theta", "check_ergodicity", "ergodicity_cutoff"});
    CocycleMeasure nu = measure_of(root, "measure");
    std::size_t d = torus_dim(nu);
    std::vector<long> n_list = horizon_list(root.at_or("n_list", Json{1000}));
    L1Options opts = l1_options(root, d, seed, false);

    Prepared p;
    p.unit = "matrix products";
    p.job = [nu = std::move(nu), n_list, opts](ExperimentReport& r, unsigned threads) {
        Csv csv({"n", "estimate", "stderr"});
        Json rows = Json::array();
        double work = 0.0;
        for (std::size_t i = 0; i < n_list.size(); ++i)
        {
            L1Options local = opts;
            local.n = n_list[i];
            local.threads = threads;
            local.check_ergodicity = opts.check_ergodicity && i == 0;
            L1Estimate est = estimate_L1(nu, local);
            csv.row({cell(est.n), cell(est.estimate), cell(est.std_error)});
            rows.push_back(l1_json(est));
            work += static_cast<double>(est.n) * static_cast<double>(est.samples);
        }
        r.tables.push_back({"lyapunov", csv.text()});
        Json base_ergodic = rows[0]["base_ergodic"];
        r.summary = {{"estimates", std::move(rows)}, {"base_ergodic", std::move(base_ergodic)}};
        return work;
    };
    return p;
}

Prepared prepare_fiber_ldt(ConfigNode const& root, std::uint64_t seed)
{
    root.allow_keys({"command", "seed", "version", "measure", "reference_L1", "epsilon",
                     "n_list", "samples", "theta"});
    CocycleMeasure nu = measure_of(root, "measure");
    std::size_t d = torus_dim(nu);
    FiberLdtOptions fo;
    fo.seed = seed;
    fo.reference_L1 = root.at("reference_L1").number();
    fo.epsilon = positive_number(root.at_or("epsilon", 0.1));
    fo.n_list = horizon_list(root.at_or("n_list", Json{100, 200, 400}));
    fo.samples = static_cast<std::size_t>(positive_long(root.at_or("samples", 10000)));
    fo.theta = theta_of(root, d);

    Prepared p;
    p.unit = "matrix products";
    p.job = [nu = std::move(nu), fo](ExperimentReport& r, unsigned threads) {
        FiberLdtOptions local = fo;
        local.threads = threads;
        LdtReport rep = fiber_ldt_tail(nu, local);
        r.tables.push_back(ldt_table("fiber_ldt", rep));
        r.summary = ldt_json(rep);
        double work = 0.0;
        for (long n : fo.n_list)
            work += static_cast<double>(n) * static_cast<double>(fo.samples);
        return work;
    };
    return p;
}

Prepared prepare_semicontinuity(ConfigNode const& root, std::uint64_t seed)
{
    root.allow_keys({"command", "seed", "version", "reference_measure", "perturbations", "n",
                     "samples", "theta_policy", "theta", "check_ergodicity",
                     "ergodicity_cutoff", "grid"});
    CocycleMeasure nu0 = measure_of(root, "reference_measure");
    std::size_t d = torus_dim(nu0);
    ConfigNode list = root.at("perturbations");
    list.expect_array();
    if (list.size() == 0)
        list.fail("needs at least one perturbation");
    std::vector<CocycleMeasure> perturbations;
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        perturbations.push_back(read_cocycle_measure(list.at(i)));
        if (torus_dim(perturbations.back()) != d
            || matrix_dim(perturbations.back()) != matrix_dim(nu0))
            list.at(i).fail("dimensions differ from the reference measure");
    }
    L1Options opts = l1_options(root, d, seed);
    GMetric metric;
    metric.grid = grid_of(root, d);

    Prepared p;
    p.unit = "matrix products";
    p.job = [nu0 = std::move(nu0), perturbations = std::move(perturbations), opts,
             metric](ExperimentReport& r, unsigned threads) {
        L1Options local = opts;
        local.threads = threads;
        SemicontinuityScan scan = semicontinuity_scan(nu0, perturbations, local, metric);
        Csv csv({"w1", "L1", "stderr"});
        csv.row({cell(0.0), cell(scan.reference.estimate), cell(scan.reference.std_error)});
        Json rows = Json::array();
        bool non_increasing = true;
        double previous = scan.reference.estimate;
        double max_excess = -std::numeric_limits<double>::infinity();
        for (auto const& row : scan.rows)
        {
            csv.row({cell(row.w1), cell(row.l1.estimate), cell(row.l1.std_error)});
            rows.push_back({{"index", row.index},
                            {"w1", row.w1},
                            {"L1", row.l1.estimate},
                            {"stderr", row.l1.std_error}});
            non_increasing = non_increasing && row.l1.estimate <= previous;
            previous = row.l1.estimate;
            max_excess = std::max(max_excess, row.l1.estimate - scan.reference.estimate);
        }
        r.tables.push_back({"semicontinuity", csv.text()});
        r.summary = {{"reference", l1_json(scan.reference)},
                     {"rows", std::move(rows)},
                     {"non_increasing_in_w1", non_increasing},
                     {"max_excess_over_reference", max_excess}};
        return static_cast<double>(local.n * static_cast<long>(local.samples))
               * static_cast<double>(perturbations.size() + 1);
    };
    return p;
}

Prepared prepare_schrodinger_scan(ConfigNode const& root, std::uint64_t seed)
{
    root.allow_keys({"command", "seed", "version", "potential", "frequency",
                     "frequency_measure", "noise", "energies", "energy_step", "energy_bound",
                     "n", "samples", "theta_policy", "theta", "check_ergodicity",
                     "ergodicity_cutoff"});
    ConfigNode pot = root.at("potential");
    TrigPoly v = read_trig_poly(pot);
    std::size_t d = v.dim();
    if (root.has("frequency") == root.has("frequency_measure"))
        root.fail("give exactly one of 'frequency' or 'frequency_measure'");
    std::variant<TorusPoint, TorusMeasure> frequency = TorusPoint::zero(d);
    if (root.has("frequency"))
        frequency = read_torus_point(root.at("frequency"));
    else
        frequency = read_torus_measure(root.at("frequency_measure"));
    std::size_t fd = std::visit(
        [](auto const& f) {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, TorusPoint>)
                return f.dim();
            else
                return torus_dim(f);
        },
        frequency);
    if (fd != d)
        root.at(root.has("frequency") ? "frequency" : "frequency_measure")
            .fail("dimension differs from the potential");
    Json delta0 = {{"atoms", {{{"value", 0.0}, {"weight", 1.0}}}}};
    RealMeasure noise = read_real_measure(root.at_or("noise", delta0));
    SchrodingerModel model{std::move(v), std::move(frequency), std::move(noise)};

    std::vector<double> energies;
    if (root.has("energies"))
    {
        ConfigNode list = root.at("energies");
        list.expect_array();
        if (list.size() == 0)
            list.fail("needs at least one energy");
        for (std::size_t i = 0; i < list.size(); ++i)
            energies.push_back(list.at(i).number());
    }
    else
    {
        ConfigNode step_node = root.at_or("energy_step", 0.01);
        double step = positive_number(step_node);
        ConfigNode bound_node = root.at_or("energy_bound", default_energy_bound(model));
        double bound = bound_node.number();
        if (bound < 0.0)
            bound_node.fail("must be non-negative");
        if (bound / step > 1e6)
            step_node.fail("energy grid has more than 2e6 points");
        energies = energy_grid(bound, step);
    }
    L1Options opts = l1_options(root, d, seed);

    Prepared p;
    p.unit = "matrix products";
    p.job = [model = std::move(model), energies, opts](ExperimentReport& r, unsigned threads) {
        L1Options local = opts;
        local.threads = threads;
        auto rows = lyapunov_energy_scan(model, energies, local);
        Csv csv({"E", "L1", "stderr"});
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        std::size_t resolved_positive = 0;
        for (auto const& row : rows)
        {
            csv.row({cell(row.energy), cell(row.l1.estimate), cell(row.l1.std_error)});
            lo = std::min(lo, row.l1.estimate);
            hi = std::max(hi, row.l1.estimate);
            if (row.l1.estimate > 3.0 * row.l1.std_error)
                ++resolved_positive;
        }
        r.tables.push_back({"schrodinger_scan", csv.text()});
        r.summary = {{"energies", rows.size()},
                     {"min_L1", lo},
                     {"max_L1", hi},
                     {"energies_with_L1_above_3_stderr", resolved_positive},
                     {"base_ergodic", to_string(rows.front().l1.base_ergodic)}};
        return static_cast<double>(rows.size()) * static_cast<double>(local.n)
               * static_cast<double>(local.samples);
    };
    return p;
}

Prepared prepare_wasserstein(ConfigNode const& root)
{
    root.allow_keys({"command", "seed", "version", "space", "first", "second", "grid",
                     "refinements"});
    ConfigNode space_node = root.at("space");
    std::string space = space_node.string();
    Prepared p;
    p.unit = "transport problems";
    if (space == "torus")
    {
        TorusMeasure a = read_torus_measure(root.at("first"));
        TorusMeasure b = read_torus_measure(root.at("second"));
        if (torus_dim(a) != torus_dim(b))
            root.at("second").fail("dimension differs from 'first'");
        p.job = [a = std::move(a), b = std::move(b)](ExperimentReport& r, unsigned) {
            double w = wasserstein1(a, b);
            Csv csv({"grid", "w1"});
            csv.row({cell(0L), cell(w)});
            r.tables.push_back({"wasserstein", csv.text()});
            r.summary = {{"w1", w}};
            return 1.0;
        };
    }
    else if (space == "real")
    {
        RealMeasure a = read_real_measure(root.at("first"));
        RealMeasure b = read_real_measure(root.at("second"));
        p.job = [a = std::move(a), b = std::move(b)](ExperimentReport& r, unsigned) {
            double w = wasserstein1(a, b);
            Csv csv({"grid", "w1"});
            csv.row({cell(0L), cell(w)});
            r.tables.push_back({"wasserstein", csv.text()});
            r.summary = {{"w1", w}};
            return 1.0;
        };
    }
    else if (space == "cocycle")
    {
        CocycleMeasure a = read_cocycle_measure(root.at("first"));
        CocycleMeasure b = read_cocycle_measure(root.at("second"));
        std::size_t d = torus_dim(a);
        if (torus_dim(b) != d || matrix_dim(b) != matrix_dim(a))
            root.at("second").fail("dimensions differ from 'first'");
        std::size_t grid = grid_of(root, d);
        ConfigNode ref_node = root.at_or("refinements", 3);
        long refinements = positive_long(ref_node);
        if (refinements > 8)
            ref_node.fail("at most 8 refinements");
        p.job = [a = std::move(a), b = std::move(b), grid, refinements](ExperimentReport& r,
                                                                       unsigned) {
            Csv csv({"grid", "w1"});
            Json rows = Json::array();
            std::size_t g = grid;
            for (long i = 0; i < refinements; ++i, g *= 2)
            {
                GMetric metric;
                metric.grid = g;
                double w = wasserstein1(a, b, metric);
                csv.row({cell(static_cast<long>(g)), cell(w)});
                rows.push_back({{"grid", g}, {"w1", w}});
            }
            r.tables.push_back({"wasserstein", csv.text()});
            double finest = rows.back()["w1"].get<double>();
            double coarsest = rows.front()["w1"].get<double>();
            r.summary = {{"w1", finest},
                         {"refinement", std::move(rows)},
                         {"refinement_change", std::fabs(finest - coarsest)}};
            return static_cast<double>(refinements);
        };
    }
    else
    {
        space_node.fail("unknown space '" + space + "' (expected torus, real or cocycle)");
    }
    return p;
}

//---------------------------------------------------------------------------//
Prepared prepare(Json config, RunOptions const& opts, std::optional<std::string> const& command)
{
    Prepared p;
    ConfigNode root(config, "", &p.defaults);
    root.expect_object();

    std::string kind;
    if (root.has("command"))
    {
        kind = root.at("command").string();
        if (command && *command != kind)
            root.at("command").fail("config is for '" + kind + "' but '" + *command
                                    + "' was requested");
    }
    else if (command)
    {
        kind = *command;
        config["command"] = kind;
    }
    else
    {
        throw ConfigError("/command", "required field is missing");
    }
    auto const& names = command_names();
    if (kind == "validate" || std::find(names.begin(), names.end(), kind) == names.end())
        root.at("command").fail("unknown command '" + kind + "'");

    if (opts.seed)
        config["seed"] = *opts.seed;
    std::uint64_t seed = root.at_or("seed", 0).unsigned_integer();
    if (root.has("version"))
        root.at("version").string();

    Prepared body;
    if (kind == "ergodicity")
        body = prepare_ergodicity(root);
    else if (kind == "base-ldt")
        body = prepare_base_ldt(root, seed);
    else if (kind == "lyapunov")
        body = prepare_lyapunov(root, seed);
    else if (kind == "fiber-ldt")
        body = prepare_fiber_ldt(root, seed);
    else if (kind == "semicontinuity")
        body = prepare_semicontinuity(root, seed);
    else if (kind == "schrodinger-scan")
        body = prepare_schrodinger_scan(root, seed);
    else
        body = prepare_wasserstein(root);

    config["version"] = kArtifactVersion;
    p.command = kind;
    p.manifest = std::move(config);
    p.job = std::move(body.job);
    p.unit = body.unit;
    return p;
}
}  // namespace

//---------------------------------------------------------------------------//
std::vector<std::string> const& command_names()
{
    static std::vector<std::string> const names{"validate",       "ergodicity",
                                                "base-ldt",       "lyapunov",
                                                "fiber-ldt",      "semicontinuity",
                                                "schrodinger-scan", "wasserstein"};
    return names;
}

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json load_config(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("", "cannot read config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try
    {
        return parse_config_text(text.str());
    }
    catch (ConfigError const& e)
    {
        throw ConfigError("", path.string() + ": " + e.what());
    }
}

Validation validate_config(Json config,
                           RunOptions const& opts,
                           std::optional<std::string> const& command)
{
    Prepared p = prepare(std::move(config), opts, command);
    return {p.command, std::move(p.manifest), std::move(p.defaults)};
}

ExperimentReport run_experiment(Json config,
                                RunOptions const& opts,
                                std::optional<std::string> const& command)
{
    Prepared p = prepare(std::move(config), opts, command);
    ExperimentReport report;
    report.command = p.command;
    report.manifest = std::move(p.manifest);

    unsigned threads = std::max(1u, opts.threads);
    auto start = std::chrono::steady_clock::now();
    double work = 0.0;
    try
    {
        work = p.job(report, threads);
    }
    catch (ConfigError const&)
    {
        throw;
    }
    catch (Error const& e)
    {
        throw Error(p.command + ": " + e.what());
    }
    double seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.metrics = {{"threads", threads},
                      {"wall_seconds", seconds},
                      {"work_units", work},
                      {"work_unit", p.unit},
                      {"units_per_second", seconds > 0.0 ? work / seconds : 0.0}};
    return report;
}

void write_report(ExperimentReport const& report, std::filesystem::path const& out_dir)
{
    std::filesystem::create_directories(out_dir);
    auto write = [&](std::string const& file, std::string const& text) {
        std::ofstream out(out_dir / file, std::ios::binary);
        out << text;
        if (!out)
            throw Error("cannot write '" + (out_dir / file).string() + "'");
    };
    for (auto const& t : report.tables)
        write(t.name + ".csv", t.text);
    write("manifest.json", report.manifest.dump(2) + "\n");
    Json full = {{"command", report.command},
                 {"manifest", report.manifest},
                 {"summary", report.summary},
                 {"metrics", report.metrics}};
    write("report.json", full.dump(2) + "\n");
}

}  // namespace qpc

// SPDX-License-Identifier: Apache-2.0
//
// mmoutage: outage analysis of finite wireless networks with randomly
// selected Gamma interference distributions
// Copyright (C) 2026 The mmoutage authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "mmoutage/conditional.hpp"
#include "mmoutage/losball.hpp"
#include "mmoutage/sim.hpp"
#include "mmoutage/spatial.hpp"

namespace mmoutage::app {

using nlohmann::json;

namespace {

std::string short_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

struct Result {
    std::vector<LabeledCurve> curves;
    std::vector<std::pair<std::string, std::string>> notes;
    std::string title;
};

double best_fit_radius(const RunConfig& cfg, bool spatial, const std::vector<double>& grid)
{
    return spatial ? best_fit_r_los_spatial(grid, cfg.scenario, cfg.rings).radius
                   : best_fit_r_los_conditional(grid, cfg.realization(), cfg.scenario).radius;
}

OutageCurve exact_curve(const RunConfig& cfg, bool spatial, const std::vector<double>& grid)
{
    const auto& sc = cfg.scenario;
    if (spatial)
        return spatial_outage_curve(grid, sc, cfg.rings);
    const auto mix = build_mixture(cfg.realization(), sc.geometry, sc.channel, sc.tx, sc.rx);
    return conditional_outage_curve(grid, mix, sc.reference());
}

OutageCurve ball_curve(const RunConfig& cfg, bool spatial, const std::vector<double>& grid, double r)
{
    return spatial ? losball_spatial_curve(grid, r, cfg.scenario, cfg.rings)
                   : losball_conditional_curve(grid, cfg.realization(), r, cfg.scenario);
}

OutageCurve mc_curve(const RunConfig& cfg, bool spatial, const std::vector<double>& grid, unsigned jobs)
{
    SimConfig sim = cfg.sim;
    sim.jobs = jobs;
    return spatial ? simulate_spatial(grid, cfg.scenario, sim)
                   : simulate_conditional(grid, cfg.realization(), cfg.scenario, sim);
}

Result execute(const Options& opts, const RunConfig& cfg, std::ostream& log)
{
    const auto grid = cfg.thresholds.linear();
    const auto& sc = cfg.scenario;
    const std::string snr = format_number(cfg.snr_db) + " dB";
    Result r;
    switch (opts.command) {
    case Command::conditional:
        r.curves.push_back({"", exact_curve(cfg, false, grid)});
        r.title = "Conditional outage, SNR " + snr;
        break;
    case Command::spatial:
        r.curves.push_back({"", exact_curve(cfg, true, grid)});
        r.notes.emplace_back("rings", std::to_string(cfg.rings));
        r.title = "Spatially averaged outage, L = " + std::to_string(cfg.rings) + ", SNR " + snr;
        break;
    case Command::simulate:
        r.curves.push_back({"", mc_curve(cfg, opts.spatial, grid, opts.jobs)});
        r.notes.emplace_back(opts.spatial ? "num_network_draws" : "num_power_draws",
                             std::to_string(opts.spatial ? cfg.sim.num_network_draws : cfg.sim.num_power_draws));
        r.title = std::string("Monte Carlo ") + (opts.spatial ? "spatial" : "conditional") + " outage, SNR " + snr;
        break;
    case Command::losball: {
        const double moment = r_los_moment_match(sc.geometry);
        const auto fit = opts.spatial ? best_fit_r_los_spatial(grid, sc, cfg.rings)
                                      : best_fit_r_los_conditional(grid, cfg.realization(), sc);
        log << "R_LOS moment-matched: " << format_number(moment) << '\n';
        log << "R_LOS best-fit: " << format_number(fit.radius) << " (mse " << format_number(fit.mse) << ")\n";
        r.notes.emplace_back("r_los_moment", format_number(moment));
        r.notes.emplace_back("r_los_bestfit", format_number(fit.radius));
        r.notes.emplace_back("r_los_bestfit_mse", format_number(fit.mse));
        std::string how;
        double radius = cfg.losball.radius;
        if (cfg.losball.selection == LosBallSelection::moment_matched) {
            radius = moment;
            how = "moment";
        } else if (cfg.losball.selection == LosBallSelection::best_fit) {
            radius = fit.radius;
            how = "bestfit";
        } else {
            how = "value";
        }
        r.curves.push_back({"", exact_curve(cfg, opts.spatial, grid)});
        r.curves.push_back({"los-ball:" + how + "=" + short_number(radius), ball_curve(cfg, opts.spatial, grid, radius)});
        r.title = std::string("LOS ball, ") + (opts.spatial ? "spatial" : "conditional") + ", SNR " + snr;
        break;
    }
    case Command::sweep: {
        const double moment = r_los_moment_match(sc.geometry);
        const double best = best_fit_radius(cfg, opts.spatial, grid);
        r.notes.emplace_back("r_los_moment", format_number(moment));
        r.notes.emplace_back("r_los_bestfit", format_number(best));
        r.curves.push_back({"", exact_curve(cfg, opts.spatial, grid)});
        r.curves.push_back({"los-ball:moment=" + short_number(moment), ball_curve(cfg, opts.spatial, grid, moment)});
        r.curves.push_back({"los-ball:bestfit=" + short_number(best), ball_curve(cfg, opts.spatial, grid, best)});
        r.curves.push_back({"", mc_curve(cfg, opts.spatial, grid, opts.jobs)});
        r.title = std::string(opts.spatial ? "Spatially averaged" : "Conditional") + " outage sweep, SNR " + snr;
        break;
    }
    case Command::convergence: {
        const auto a = spatial_outage_curve(grid, sc, cfg.rings);
        const auto b = spatial_outage_curve(grid, sc, 2 * cfg.rings);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            worst = std::max(worst, std::fabs(a.points[i].outage - b.points[i].outage));
        log << "max |L=" << cfg.rings << " - L=" << 2 * cfg.rings << "| = " << format_number(worst) << '\n';
        r.notes.emplace_back("max_ring_discrepancy", format_number(worst));
        r.curves.push_back({"analytic-spatial:L=" + std::to_string(cfg.rings), a});
        r.curves.push_back({"analytic-spatial:L=" + std::to_string(2 * cfg.rings), b});
        r.title = "Ring convergence, SNR " + snr;
        break;
    }
    }
    for (auto& c : r.curves) {
        if (c.label.empty())
            c.label = curve_label(c.curve);
        c.curve.config_digest = cfg.digest;
        if (!c.curve.is_valid())
            throw NumericalError("curve '" + c.label + "' is not a nondecreasing probability curve");
    }
    return r;
}

} // namespace

std::string to_string(Command command)
{
    switch (command) {
    case Command::conditional: return "conditional";
    case Command::spatial: return "spatial";
    case Command::simulate: return "simulate";
    case Command::losball: return "losball";
    case Command::sweep: return "sweep";
    case Command::convergence: return "convergence";
    }
    return "unknown";
}

Command command_from_string(const std::string& name)
{
    for (auto c : {Command::conditional, Command::spatial, Command::simulate, Command::losball, Command::sweep,
                   Command::convergence})
        if (to_string(c) == name)
            return c;
    throw std::invalid_argument("unknown command '" + name + "'");
}

json apply_overrides(json doc, const Options& opts)
{
    if (!doc.is_object())
        throw ConfigError("config: top level must be an object");
    auto section = [&](const char* name) -> json& {
        json& s = doc[name];
        if (s.is_null())
            s = json::object();
        if (!s.is_object())
            throw ConfigError(std::string(name) + ": expected an object");
        return s;
    };
    if (opts.seed)
        section("simulation")["seed"] = *opts.seed;
    if (opts.snr_db)
        section("channel")["snr_db"] = *opts.snr_db;
    if (opts.rings)
        section("spatial")["rings"] = *opts.rings;
    if (opts.thresholds) {
        const auto g = ThresholdGrid::parse(*opts.thresholds);
        json& t = section("thresholds");
        t["start_db"] = g.start_db;
        t["stop_db"] = g.stop_db;
        t["count"] = g.count;
    }
    if (opts.rlos) {
        json& lb = section("losball");
        const std::string& v = *opts.rlos;
        if (v == "value" || v == "moment" || v == "bestfit") {
            lb["selection"] = v;
        } else {
            double radius = 0.0;
            std::size_t used = 0;
            try {
                radius = std::stod(v, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != v.size() || v.empty())
                throw ConfigError("--rlos: expected a radius, value, moment or bestfit, got '" + v + "'");
            lb["selection"] = "value";
            lb["radius"] = radius;
        }
    }
    return doc;
}

int run(const Options& opts, std::ostream& out, std::ostream& log, std::ostream& err)
{
    RunManifest manifest;
    manifest.command = to_string(opts.command);
    manifest.started = utc_timestamp();
    try {
        if (opts.jobs < 1)
            throw ConfigError("--jobs: must be >= 1");
        const auto cfg = parse_config(apply_overrides(read_json_file(opts.config_path), opts));
        manifest.config_digest = cfg.digest;
        auto result = execute(opts, cfg, log);
        for (const auto& c : result.curves)
            if (c.curve.method == CurveMethod::monte_carlo) {
                manifest.seed = c.curve.seed;
                manifest.sampler = c.curve.sampler;
            }
        if (!opts.out.empty())
            manifest.outputs.push_back(opts.out);
        if (!opts.svg.empty())
            manifest.outputs.push_back(opts.svg);
        manifest.notes = result.notes;
        manifest.finished = utc_timestamp();

        if (opts.out.empty()) {
            write_csv(out, manifest, result.curves);
        } else {
            std::ofstream f(opts.out);
            if (!f)
                throw std::runtime_error("cannot write " + opts.out);
            write_csv(f, manifest, result.curves);
        }
        if (!opts.svg.empty()) {
            std::ofstream f(opts.svg);
            if (!f)
                throw std::runtime_error("cannot write " + opts.svg);
            write_svg(f, result.curves, result.title, manifest);
        }
        return exit_ok;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const NumericalError& e) {
        err << "numerical error in " << manifest.command << ": " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& e) {
        err << "error in " << manifest.command << ": " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace mmoutage::app

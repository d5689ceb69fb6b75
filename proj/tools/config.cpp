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


#include "config.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace mmoutage::app {

using nlohmann::json;

namespace {

// Typed access to one JSON object with dotted-path diagnostics and
// rejection of unknown keys.
class Section {
public:
    Section(const json* node, std::string path) : node_(node), path_(std::move(path))
    {
        if (node_ && !node_->is_object())
            fail("", "expected an object");
    }

    bool has(const char* key) const { return node_ && node_->contains(key); }

    double number(const char* key, double fallback)
    {
        const json* v = take(key);
        if (!v)
            return fallback;
        if (!v->is_number())
            fail(key, "expected a number, got " + std::string(v->type_name()));
        const double x = v->get<double>();
        if (!std::isfinite(x))
            fail(key, "must be finite");
        return x;
    }

    std::int64_t integer(const char* key, std::int64_t fallback)
    {
        const json* v = take(key);
        if (!v)
            return fallback;
        if (!v->is_number_integer())
            fail(key, "expected an integer, got " + std::string(v->type_name()));
        return v->get<std::int64_t>();
    }

    std::uint64_t unsigned_integer(const char* key, std::uint64_t fallback)
    {
        const json* v = take(key);
        if (!v)
            return fallback;
        if (!v->is_number_unsigned())
            fail(key, "expected a nonnegative integer");
        return v->get<std::uint64_t>();
    }

    std::string text(const char* key, const std::string& fallback)
    {
        const json* v = take(key);
        if (!v)
            return fallback;
        if (!v->is_string())
            fail(key, "expected a string, got " + std::string(v->type_name()));
        return v->get<std::string>();
    }

    const json* raw(const char* key) { return take(key); }

    Section child(const char* key) { return Section(take(key), field(key)); }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    [[noreturn]] void fail(const std::string& key, const std::string& what) const
    {
        throw ConfigError((key.empty() ? path_ : field(key)) + ": " + what);
    }

    void finish() const
    {
        if (!node_)
            return;
        for (const auto& [k, v] : node_->items())
            if (!seen_.count(k))
                fail(k, "unknown field");
    }

private:
    const json* take(const char* key)
    {
        seen_.insert(key);
        if (!node_)
            return nullptr;
        auto it = node_->find(key);
        return it == node_->end() ? nullptr : &*it;
    }

    const json* node_;
    std::string path_;
    std::set<std::string> seen_;
};

template <class F>
void checked(const std::string& where, F&& f)
{
    try {
        f();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

AntennaPattern read_antenna(Section s)
{
    AntennaPattern a;
    if (s.has("elements")) {
        const auto n = s.integer("elements", 1);
        if (s.has("main_gain") || s.has("side_gain") || s.has("beamwidth"))
            s.fail("elements", "give either elements or main_gain/side_gain/beamwidth, not both");
        if (n < 1 || n > 1 << 20)
            s.fail("elements", "must be in [1, 2^20]");
        a = AntennaPattern::from_elements(static_cast<int>(n));
    } else {
        a.main_gain = s.number("main_gain", a.main_gain);
        a.side_gain = s.number("side_gain", a.side_gain);
        a.beamwidth = s.number("beamwidth", a.beamwidth);
    }
    s.finish();
    return a;
}

} // namespace

ThresholdGrid ThresholdGrid::parse(const std::string& text)
{
    ThresholdGrid g;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.start_db, &g.stop_db, &g.count, &tail) != 3)
        throw ConfigError("thresholds: expected start_db:stop_db:count, got \"" + text + "\"");
    g.validate();
    return g;
}

void ThresholdGrid::validate() const
{
    if (!std::isfinite(start_db) || !std::isfinite(stop_db))
        throw ConfigError("thresholds: bounds must be finite");
    if (count < 1)
        throw ConfigError("thresholds.count: must be >= 1");
    if (count > 1 && !(stop_db > start_db))
        throw ConfigError("thresholds: stop_db must exceed start_db");
}

std::vector<double> ThresholdGrid::db() const
{
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(count == 1 ? start_db : start_db + (stop_db - start_db) * i / (count - 1));
    return out;
}

std::vector<double> ThresholdGrid::linear() const
{
    auto out = db();
    for (auto& x : out)
        x = db_to_linear(x);
    return out;
}

NetworkRealization RunConfig::realization() const
{
    if (network.interferers.empty() && scenario.num_interferers > 0) {
        Xoshiro256 rng(network.realization_seed);
        return draw_realization(scenario.geometry, scenario.num_interferers, rng, scenario.ref_distance);
    }
    NetworkRealization net;
    net.interferers = network.interferers;
    net.ref_distance = scenario.ref_distance;
    return net;
}

std::string fnv1a64_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

RunConfig parse_config(const json& doc)
{
    Section root(&doc, "");
    RunConfig cfg;
    auto& sc = cfg.scenario;

    Section net = root.child("network");
    sc.num_interferers = static_cast<int>(net.integer("num_interferers", 20));
    sc.ref_distance = net.number("ref_distance", 1.0);
    cfg.network.realization_seed = net.unsigned_integer("realization_seed", 1);
    if (const json* list = net.raw("interferers")) {
        if (!list->is_array())
            net.fail("interferers", "expected an array of {distance, angle}");
        for (std::size_t i = 0; i < list->size(); ++i) {
            Section item(&(*list)[i], net.field("interferers[" + std::to_string(i) + "]"));
            Interferer it{item.number("distance", NAN), item.number("angle", NAN)};
            if (std::isnan(it.distance) || std::isnan(it.angle))
                item.fail("", "distance and angle are required");
            item.finish();
            cfg.network.interferers.push_back(it);
        }
        if (!net.has("num_interferers"))
            sc.num_interferers = static_cast<int>(list->size());
        else if (static_cast<std::size_t>(sc.num_interferers) != list->size())
            net.fail("num_interferers", "does not match the length of interferers");
    }
    if (sc.num_interferers < 0)
        net.fail("num_interferers", "must be >= 0");
    if (!(sc.ref_distance > 0.0))
        net.fail("ref_distance", "must be positive");
    net.finish();

    Section geo = root.child("geometry");
    auto& g = sc.geometry;
    g.r_in = geo.number("r_in", 1.0);
    g.r_out = geo.number("r_out", 6.0);
    const auto blockages = geo.integer("num_blockages", sc.num_interferers);
    if (blockages < 0)
        geo.fail("num_blockages", "must be >= 0");
    g.num_blockages = static_cast<int>(blockages);
    g.blockage_width = geo.number("blockage_width", 1.0);
    checked(geo.field("blockage_model"),
            [&] { g.blockage_model = blockage_model_from_string(geo.text("blockage_model", "annulus")); });
    geo.finish();
    checked("geometry", [&] { g.validate(); });

    Section ch = root.child("channel");
    auto& c = sc.channel;
    const auto m_los = ch.integer("m_los", 4);
    if (m_los < 1 || m_los > 64)
        ch.fail("m_los", "must be an integer in [1, 64]");
    c.m_los = static_cast<int>(m_los);
    c.m_nlos = ch.number("m_nlos", 1.0);
    c.alpha_los = ch.number("alpha_los", 2.0);
    c.alpha_nlos = ch.number("alpha_nlos", 4.0);
    c.p_transmit = ch.number("p_transmit", 0.5);
    cfg.snr_db = ch.number("snr_db", 20.0);
    c.snr = db_to_linear(cfg.snr_db);
    ch.finish();
    checked("channel", [&] { c.validate(); });

    Section ant = root.child("antennas");
    Section tx = ant.child("tx");
    Section rx = ant.child("rx");
    sc.tx = tx.has("elements") || tx.has("main_gain") || tx.has("side_gain") || tx.has("beamwidth")
                ? read_antenna(std::move(tx))
                : AntennaPattern::from_elements(4);
    sc.rx = rx.has("elements") || rx.has("main_gain") || rx.has("side_gain") || rx.has("beamwidth")
                ? read_antenna(std::move(rx))
                : AntennaPattern::from_elements(4);
    ant.finish();
    checked("antennas.tx", [&] { sc.tx.validate(); });
    checked("antennas.rx", [&] { sc.rx.validate(); });

    Section sim = root.child("simulation");
    cfg.sim.num_power_draws = sim.unsigned_integer("num_power_draws", cfg.sim.num_power_draws);
    cfg.sim.num_network_draws = sim.unsigned_integer("num_network_draws", cfg.sim.num_network_draws);
    cfg.sim.seed = sim.unsigned_integer("seed", cfg.sim.seed);
    cfg.sim.rng_algorithm = sim.text("rng_algorithm", cfg.sim.rng_algorithm);
    sim.finish();
    checked("simulation", [&] { cfg.sim.validate(); });

    Section lb = root.child("losball");
    checked(lb.field("selection"),
            [&] { cfg.losball.selection = los_ball_selection_from_string(lb.text("selection", "moment")); });
    cfg.losball.radius = lb.number("radius", 0.0);
    lb.finish();
    checked("losball", [&] { cfg.losball.validate(g); });

    Section sp = root.child("spatial");
    const auto rings = sp.integer("rings", 10);
    if (rings < 1 || rings > 100000)
        sp.fail("rings", "must be in [1, 100000]");
    cfg.rings = static_cast<int>(rings);
    sp.finish();

    Section th = root.child("thresholds");
    cfg.thresholds.start_db = th.number("start_db", -10.0);
    cfg.thresholds.stop_db = th.number("stop_db", 30.0);
    const auto count = th.integer("count", 20);
    if (count < 1 || count > 100000)
        th.fail("count", "must be in [1, 100000]");
    cfg.thresholds.count = static_cast<int>(count);
    th.finish();
    cfg.thresholds.validate();

    root.finish();
    checked("scenario", [&] { sc.validate(); });
    if (!cfg.network.interferers.empty())
        checked("network.interferers", [&] { cfg.realization().validate(g); });

    cfg.digest = "fnv1a64:" + fnv1a64_hex(doc.dump());
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    return parse_config(read_json_file(path));
}

} // namespace mmoutage::app

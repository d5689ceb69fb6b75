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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "app.hpp"
#include "config.hpp"
#include "mmoutage/specialfn.hpp"
#include "output.hpp"

using namespace mmoutage;
using namespace mmoutage::app;
using nlohmann::json;

namespace {

const std::string kConfigDir = MMOUTAGE_CONFIG_DIR;

std::string example1() { return kConfigDir + "/example1.json"; }

struct Outcome {
    int code;
    std::string out, log, err;
};

Outcome invoke(Options opts)
{
    std::ostringstream out, log, err;
    const int code = run(opts, out, log, err);
    return {code, out.str(), log.str(), err.str()};
}

Options options(Command c, const std::string& config)
{
    Options o;
    o.command = c;
    o.config_path = config;
    return o;
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("mmoutage_test_" + name)).string();
}

std::string write_config(const std::string& name, const json& doc)
{
    const auto path = temp_path(name);
    std::ofstream(path) << doc.dump(2);
    return path;
}

json example1_json() { return read_json_file(example1()); }

// Rows after the header, without manifest lines.
std::string rows_of(const std::string& csv)
{
    return csv.substr(csv.find(kCsvHeader));
}

} // namespace

TEST_CASE("FNV-1a digest")
{
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("threshold grids")
{
    const auto g = ThresholdGrid::parse("-10:30:5");
    CHECK(g.db() == std::vector<double>{-10.0, 0.0, 10.0, 20.0, 30.0});
    CHECK(g.linear()[2] == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(ThresholdGrid::parse("3:3:1").db() == std::vector<double>{3.0});
    CHECK_THROWS_AS(ThresholdGrid::parse("-10:30"), ConfigError);
    CHECK_THROWS_AS(ThresholdGrid::parse("-10:30:5x"), ConfigError);
    CHECK_THROWS_AS(ThresholdGrid::parse("5:1:3"), ConfigError);
    CHECK_THROWS_AS(ThresholdGrid::parse("0:1:0"), ConfigError);
}

TEST_CASE("bundled configurations load with the documented parameters")
{
    for (const char* name : {"example1.json", "example2.json"}) {
        const auto cfg = load_config(kConfigDir + "/" + name);
        const auto& sc = cfg.scenario;
        CAPTURE(name);
        CHECK(sc.geometry.r_in == 1.0);
        CHECK(sc.geometry.r_out == 6.0);
        CHECK(sc.num_interferers == 20);
        CHECK(sc.geometry.num_blockages == 20);
        CHECK(sc.geometry.blockage_width == 1.0);
        CHECK(sc.ref_distance == 1.0);
        CHECK(sc.channel.m_los == 4);
        CHECK(sc.channel.m_nlos == 1.0);
        CHECK(sc.channel.alpha_los == 2.0);
        CHECK(sc.channel.alpha_nlos == 4.0);
        CHECK(sc.channel.p_transmit == 0.5);
        CHECK(cfg.snr_db == 20.0);
        CHECK(sc.tx.main_gain == 4.0);
        CHECK(sc.rx.beamwidth == doctest::Approx(kTwoPi / 4));
        CHECK(cfg.rings == 10);
        CHECK(cfg.thresholds.count == 20);
        CHECK(cfg.digest.rfind("fnv1a64:", 0) == 0);
    }
    CHECK(load_config(example1()).realization().interferers.size() == 20);
}

TEST_CASE("configuration errors name the field")
{
    auto expect_error = [](const json& doc, const std::string& field) {
        const auto path = write_config("bad.json", doc);
        const auto r = invoke(options(Command::conditional, path));
        CHECK(r.code == exit_config);
        CHECK(r.err.find(field) != std::string::npos);
        CHECK(r.out.empty());
    };
    auto doc = example1_json();
    doc["channel"]["snr_db"] = "loud";
    expect_error(doc, "channel.snr_db");
    doc = example1_json();
    doc["geometry"]["r_out"] = 0.5;
    expect_error(doc, "geometry");
    doc = example1_json();
    doc["geometry"]["colour"] = "red";
    expect_error(doc, "geometry.colour");
    doc = example1_json();
    doc["simulation"]["num_power_draws"] = 0;
    expect_error(doc, "simulation");
    doc = example1_json();
    doc["simulation"]["rng_algorithm"] = "mt19937";
    expect_error(doc, "simulation.rng_algorithm");
    doc = example1_json();
    doc["antennas"]["tx"] = {{"elements", 4}, {"main_gain", 2.0}};
    expect_error(doc, "antennas.tx.elements");
    doc = example1_json();
    doc["network"]["interferers"] = json::array({{{"distance", 2.0}}});
    expect_error(doc, "network.interferers[0]");
    doc = example1_json();
    doc["losball"] = {{"selection", "median"}};
    expect_error(doc, "losball.selection");

    const auto missing = invoke(options(Command::spatial, temp_path("does_not_exist.json")));
    CHECK(missing.code == exit_config);

    std::ofstream(temp_path("broken.json")) << "{ \"geometry\": ";
    CHECK(invoke(options(Command::spatial, temp_path("broken.json"))).code == exit_config);

    auto o = options(Command::spatial, example1());
    o.rlos = "wide";
    CHECK(invoke(o).code == exit_config);
}

TEST_CASE("conditional command writes 20 monotone rows")
{
    const auto r = invoke(options(Command::conditional, example1()));
    REQUIRE(r.code == exit_ok);
    std::istringstream in(r.out);
    const auto doc = read_csv(in);
    REQUIRE(doc.curves.size() == 1);
    const auto& c = doc.curves[0].curve;
    CHECK(doc.curves[0].label == "analytic-conditional");
    CHECK(c.points.size() == 20);
    CHECK(c.is_valid());
    for (std::size_t i = 1; i < c.points.size(); ++i)
        CHECK(c.points[i].outage >= c.points[i - 1].outage);
    CHECK(c.config_digest == load_config(example1()).digest);
}

TEST_CASE("spatial command without transmissions is the Erlang CDF")
{
    auto doc = example1_json();
    doc["channel"]["p_transmit"] = 0.0;
    const auto path = write_config("pt0.json", doc);
    auto o = options(Command::spatial, path);
    o.rings = 10;
    const auto r = invoke(o);
    REQUIRE(r.code == exit_ok);
    std::istringstream in(r.out);
    const auto csv = read_csv(in);
    const auto ref = load_config(path).scenario.reference();
    REQUIRE(csv.curves.size() == 1);
    for (const auto& p : csv.curves[0].curve.points) {
        const double want = erlang_cdf(p.threshold * ref.noise, ref.shape, ref.rate);
        CHECK(p.outage == doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("sweep emits four labelled series with the exact curve inside the Monte Carlo brackets")
{
    auto o = options(Command::sweep, example1());
    o.snr_db = 20.0;
    o.svg = temp_path("sweep.svg");
    const auto r = invoke(o);
    REQUIRE(r.code == exit_ok);
    std::istringstream in(r.out);
    const auto doc = read_csv(in);
    REQUIRE(doc.curves.size() == 4);
    CHECK(doc.curves[0].curve.method == CurveMethod::analytic_conditional);
    CHECK(doc.curves[1].label.rfind("los-ball:moment=", 0) == 0);
    CHECK(doc.curves[2].label.rfind("los-ball:bestfit=", 0) == 0);
    CHECK(doc.curves[3].curve.method == CurveMethod::monte_carlo);
    const auto& exact = doc.curves[0].curve.points;
    const auto& mc = doc.curves[3].curve.points;
    const double n = static_cast<double>(load_config(example1()).sim.num_power_draws);
    int inside = 0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        const double p = exact[i].outage;
        inside += std::fabs(mc[i].outage - p) <= 3.0 * std::sqrt(p * (1.0 - p) / n) + 1e-11;
    }
    CHECK(inside >= 19);

    std::ifstream svg(o.svg);
    const std::string text((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("<?xml", 0) == 0);
    CHECK(text.find("</svg>") != std::string::npos);
    for (const auto& c : doc.curves)
        CHECK(text.find(">" + c.label + "<") != std::string::npos);
    CHECK(text.find(load_config(example1()).digest) != std::string::npos);
}

TEST_CASE("losball and convergence reports")
{
    auto o = options(Command::losball, example1());
    o.rlos = "4.4";
    auto r = invoke(o);
    REQUIRE(r.code == exit_ok);
    CHECK(r.log.find("R_LOS moment-matched: 4.45") != std::string::npos);
    CHECK(r.log.find("R_LOS best-fit: ") != std::string::npos);
    CHECK(r.out.find(",los-ball:value=4.4\n") != std::string::npos);

    o = options(Command::convergence, example1());
    r = invoke(o);
    REQUIRE(r.code == exit_ok);
    std::istringstream in(r.out);
    const auto doc = read_csv(in);
    REQUIRE(doc.curves.size() == 2);
    CHECK(doc.curves[1].label == "analytic-spatial:L=20");
    bool reported = false;
    for (const auto& [k, v] : doc.manifest)
        if (k == "max_ring_discrepancy")
            reported = std::stod(v) < 0.005;
    CHECK(reported);
}

TEST_CASE("CSV round trip")
{
    OutageCurve mc;
    mc.method = CurveMethod::monte_carlo;
    mc.seed = 99;
    mc.sampler = "xoshiro256**/marsaglia-tsang";
    OutageCurve exact;
    exact.method = CurveMethod::analytic_spatial;
    for (int i = 0; i < 7; ++i) {
        const double t = db_to_linear(-10.0 + 6.123456789 * i);
        exact.points.push_back({t, std::erf(0.1 * i) / 3.0});
        mc.points.push_back({t, 1.0 / (1.0 + std::exp(3.0 - i)), 1e-3 / (i + 1)});
    }
    RunManifest m;
    m.command = "sweep";
    m.config_digest = "fnv1a64:0123456789abcdef";
    m.seed = 99;
    m.sampler = mc.sampler;
    std::ostringstream first;
    write_csv(first, m, {{"analytic-spatial", exact}, {"monte-carlo", mc}});

    std::istringstream in(first.str());
    const auto doc = read_csv(in);
    REQUIRE(doc.curves.size() == 2);
    CHECK(doc.curves[1].curve.seed == std::uint64_t{99});
    CHECK(doc.curves[1].curve.sampler == mc.sampler);
    CHECK(doc.curves[0].curve.config_digest == m.config_digest);
    for (std::size_t i = 0; i < exact.points.size(); ++i) {
        CHECK(doc.curves[0].curve.points[i].outage == doctest::Approx(exact.points[i].outage).epsilon(1e-11));
        CHECK(doc.curves[0].curve.points[i].standard_error == 0.0);
        CHECK(doc.curves[1].curve.points[i].standard_error == doctest::Approx(mc.points[i].standard_error).epsilon(1e-11));
    }

    // The parsed curve is reproduced bit for bit by a second write and read.
    std::ostringstream second;
    write_csv(second, m, doc.curves);
    CHECK(second.str() == first.str());
    std::istringstream again(second.str());
    const auto doc2 = read_csv(again);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t i = 0; i < exact.points.size(); ++i) {
            const auto& a = doc.curves[c].curve.points[i];
            const auto& b = doc2.curves[c].curve.points[i];
            CHECK(a.threshold == b.threshold);
            CHECK(a.outage == b.outage);
            CHECK(a.standard_error == b.standard_error);
        }

    std::istringstream bad("beta_db,outage,stderr,method\n1,0.5,,nonsense\n");
    CHECK_THROWS_AS(read_csv(bad), std::runtime_error);
    std::istringstream headless("1,0.5,,analytic-spatial\n");
    CHECK_THROWS_AS(read_csv(headless), std::runtime_error);
}

TEST_CASE("output does not depend on the number of jobs")
{
    auto doc = example1_json();
    doc["simulation"]["num_power_draws"] = 40000;
    doc["simulation"]["num_network_draws"] = 12;
    const auto path = write_config("jobs.json", doc);
    for (bool spatial : {false, true}) {
        auto o = options(Command::simulate, path);
        o.spatial = spatial;
        o.seed = 7;
        const auto one = invoke(o);
        o.jobs = 3;
        const auto three = invoke(o);
        REQUIRE(one.code == exit_ok);
        REQUIRE(three.code == exit_ok);
        CHECK(rows_of(one.out) == rows_of(three.out));
        CHECK(one.out.find("# seed: 7") != std::string::npos);
    }
    auto o = options(Command::simulate, path);
    o.seed = 8;
    const auto other = invoke(o);
    o.seed = 7;
    CHECK(rows_of(other.out) != rows_of(invoke(o).out));
}

TEST_CASE("overrides change the digest")
{
    const auto base = load_config(example1()).digest;
    Options o = options(Command::spatial, example1());
    o.snr_db = 15.0;
    const auto changed = parse_config(apply_overrides(example1_json(), o));
    CHECK(changed.digest != base);
    CHECK(changed.snr_db == 15.0);
    o = options(Command::spatial, example1());
    CHECK(parse_config(apply_overrides(example1_json(), o)).digest == base);
    o.thresholds = "0:10:3";
    o.rings = 4;
    o.rlos = "bestfit";
    const auto cfg = parse_config(apply_overrides(example1_json(), o));
    CHECK(cfg.thresholds.count == 3);
    CHECK(cfg.rings == 4);
    CHECK(cfg.losball.selection == LosBallSelection::best_fit);
}

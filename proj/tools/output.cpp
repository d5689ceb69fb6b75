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


#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mmoutage/model.hpp"

namespace mmoutage::app {

namespace {

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

double parse_double(const std::string& field, std::size_t line)
{
    double v = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" + field + "'");
    return v;
}

std::vector<std::string> split(const std::string& row, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : row) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double nice_step(double span, int max_ticks)
{
    const double raw = span / max_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw)
            return m * mag;
    return 10.0 * mag;
}

} // namespace

std::string curve_label(const OutageCurve& curve, const std::string& qualifier)
{
    return qualifier.empty() ? to_string(curve.method) : to_string(curve.method) + ":" + qualifier;
}

std::vector<std::pair<std::string, std::string>> RunManifest::entries() const
{
    std::vector<std::pair<std::string, std::string>> e = {{"tool", tool}, {"command", command},
                                                           {"config_digest", config_digest}};
    if (seed)
        e.emplace_back("seed", std::to_string(*seed));
    if (!sampler.empty())
        e.emplace_back("sampler", sampler);
    std::string outs;
    for (const auto& o : outputs)
        outs += (outs.empty() ? "" : " ") + o;
    if (!outs.empty())
        e.emplace_back("outputs", outs);
    e.emplace_back("started", started);
    e.emplace_back("finished", finished);
    for (const auto& n : notes)
        e.push_back(n);
    return e;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(std::ostream& out, const RunManifest& manifest, const std::vector<LabeledCurve>& curves)
{
    for (const auto& [k, v] : manifest.entries())
        out << "# " << k << ": " << v << '\n';
    out << kCsvHeader << '\n';
    for (const auto& c : curves) {
        if (c.label.find(',') != std::string::npos)
            throw std::invalid_argument("write_csv: label contains a comma: " + c.label);
        const bool mc = c.curve.method == CurveMethod::monte_carlo;
        for (const auto& p : c.curve.points) {
            out << format_number(linear_to_db(p.threshold)) << ',' << format_number(p.outage) << ','
                << (mc ? format_number(p.standard_error) : "") << ',' << c.label << '\n';
        }
    }
}

CsvDocument read_csv(std::istream& in)
{
    CsvDocument doc;
    std::string row;
    std::size_t line = 0;
    bool header = false;
    std::optional<std::uint64_t> seed;
    std::string digest;
    std::string sampler;
    while (std::getline(in, row)) {
        ++line;
        if (!row.empty() && row.back() == '\r')
            row.pop_back();
        if (row.empty())
            continue;
        if (row[0] == '#') {
            if (header)
                throw std::runtime_error("csv line " + std::to_string(line) + ": manifest after header");
            const auto colon = row.find(": ");
            if (colon == std::string::npos || colon < 2)
                throw std::runtime_error("csv line " + std::to_string(line) + ": malformed manifest line");
            const std::string key = row.substr(2, colon - 2);
            const std::string value = row.substr(colon + 2);
            doc.manifest.emplace_back(key, value);
            if (key == "seed")
                seed = std::stoull(value);
            else if (key == "config_digest")
                digest = value;
            else if (key == "sampler")
                sampler = value;
            continue;
        }
        if (!header) {
            if (row != kCsvHeader)
                throw std::runtime_error("csv line " + std::to_string(line) + ": expected header " + kCsvHeader);
            header = true;
            continue;
        }
        const auto f = split(row, ',');
        if (f.size() != 4)
            throw std::runtime_error("csv line " + std::to_string(line) + ": expected 4 fields");
        const std::string& label = f[3];
        auto it = std::find_if(doc.curves.begin(), doc.curves.end(),
                               [&](const LabeledCurve& c) { return c.label == label; });
        if (it == doc.curves.end()) {
            LabeledCurve c;
            c.label = label;
            try {
                c.curve.method = curve_method_from_string(label.substr(0, label.find(':')));
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error("csv line " + std::to_string(line) + ": " + e.what());
            }
            c.curve.config_digest = digest;
            if (c.curve.method == CurveMethod::monte_carlo) {
                c.curve.seed = seed;
                c.curve.sampler = sampler;
            }
            doc.curves.push_back(std::move(c));
            it = doc.curves.end() - 1;
        }
        OutagePoint p;
        p.threshold = db_to_linear(parse_double(f[0], line));
        p.outage = parse_double(f[1], line);
        p.standard_error = f[2].empty() ? 0.0 : parse_double(f[2], line);
        it->curve.points.push_back(p);
    }
    if (!header)
        throw std::runtime_error("csv: missing header");
    return doc;
}

void write_svg(std::ostream& out, const std::vector<LabeledCurve>& curves, const std::string& title,
               const RunManifest& manifest)
{
    constexpr double W = 760, H = 500, left = 70, right = 20, top = 40, bottom = 60;
    const double pw = W - left - right, ph = H - top - bottom;

    double lo = INFINITY, hi = -INFINITY;
    for (const auto& c : curves)
        for (const auto& p : c.curve.points) {
            const double db = linear_to_db(p.threshold);
            if (std::isfinite(db)) {
                lo = std::min(lo, db);
                hi = std::max(hi, db);
            }
        }
    if (!(lo < hi)) {
        lo = std::isfinite(lo) ? lo - 1.0 : 0.0;
        hi = lo + 2.0;
    }
    auto px = [&](double db) { return left + (db - lo) / (hi - lo) * pw; };
    auto py = [&](double p) { return top + (1.0 - std::clamp(p, 0.0, 1.0)) * ph; };
    auto num = [](double v) {
        char b[32];
        std::snprintf(b, sizeof b, "%.2f", v);
        return std::string(b);
    };

    static const char* palette[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
        << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<metadata>\n";
    for (const auto& [k, v] : manifest.entries())
        out << xml_escape(k) << ": " << xml_escape(v) << '\n';
    out << "</metadata>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(title)
        << "</text>\n";

    // grid and ticks
    const double step = nice_step(hi - lo, 10);
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) {
        out << "<line x1=\"" << num(px(t)) << "\" y1=\"" << top << "\" x2=\"" << num(px(t)) << "\" y2=\"" << top + ph
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << num(px(t)) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
            << format_number(std::round(t / step) * step) << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double p = 0.2 * i;
        out << "<line x1=\"" << left << "\" y1=\"" << num(py(p)) << "\" x2=\"" << left + pw << "\" y2=\"" << num(py(p))
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << num(py(p) + 4) << "\" text-anchor=\"end\">"
            << format_number(p) << "</text>\n";
    }
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">SINR threshold (dB)</text>\n";
    out << "<text transform=\"translate(18 " << top + ph / 2
        << ") rotate(-90)\" text-anchor=\"middle\">outage probability</text>\n";

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i];
        const char* colour = palette[i % std::size(palette)];
        if (c.curve.method == CurveMethod::monte_carlo) {
            for (const auto& p : c.curve.points) {
                const double x = px(linear_to_db(p.threshold));
                if (p.standard_error > 0.0)
                    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(py(p.outage - p.standard_error)) << "\" x2=\""
                        << num(x) << "\" y2=\"" << num(py(p.outage + p.standard_error)) << "\" stroke=\"" << colour
                        << "\"/>\n";
                out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(py(p.outage)) << "\" r=\"3\" fill=\"" << colour
                    << "\"/>\n";
            }
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\"";
            if (c.curve.method == CurveMethod::los_ball)
                out << " stroke-dasharray=\"6 3\"";
            out << " points=\"";
            for (const auto& p : c.curve.points)
                out << num(px(linear_to_db(p.threshold))) << ',' << num(py(p.outage)) << ' ';
            out << "\"/>\n";
        }
        const double ly = top + 16 + 18 * static_cast<double>(i);
        if (c.curve.method == CurveMethod::monte_carlo)
            out << "<circle cx=\"" << left + 22 << "\" cy=\"" << ly - 4 << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
        else
            out << "<line x1=\"" << left + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + 34 << "\" y2=\""
                << ly - 4 << "\" stroke=\"" << colour << "\" stroke-width=\"2\""
                << (c.curve.method == CurveMethod::los_ball ? " stroke-dasharray=\"6 3\"" : "") << "/>\n";
        out << "<text x=\"" << left + 40 << "\" y=\"" << ly << "\">" << xml_escape(c.label) << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace mmoutage::app

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "psf/core.hpp"

namespace psf::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    s = s.substr(first, last - first + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

inline std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace detail

/**
 * Reads a series from text: one value per line, or `timestamp,value` pairs.
 * A non-numeric first line is taken as a header. Blank lines are ignored.
 */
inline std::vector<double> parse_series(std::istream& in, const std::string& source = "input") {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty()) {
            continue;
        }
        std::string_view field = text;
        const auto comma = text.find(',');
        if (comma != std::string_view::npos) {
            if (text.find(',', comma + 1) != std::string_view::npos) {
                throw Error(source + ":" + std::to_string(line_no) + ": expected at most two columns");
            }
            field = text.substr(comma + 1);
        }
        const auto value = detail::parse_double(field);
        if (!value) {
            if (line_no == 1) {
                continue;  // header
            }
            throw Error(source + ":" + std::to_string(line_no) + ": cannot parse value '" +
                        std::string(detail::trim(field)) + "' on line " + std::to_string(line_no));
        }
        if (!std::isfinite(*value)) {
            throw Error(source + ":" + std::to_string(line_no) + ": non-finite value on line " +
                        std::to_string(line_no));
        }
        values.push_back(*value);
    }
    return values;
}

inline TimeSeries ingest_csv(const std::filesystem::path& path, std::size_t cycle) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open input file '" + path.string() + "'");
    }
    auto values = parse_series(in, path.string());
    if (values.size() < 2 * cycle) {
        throw Error(path.string() + ": insufficient data: " + std::to_string(values.size()) +
                    " values, need at least " + std::to_string(2 * cycle));
    }
    return TimeSeries(std::move(values), cycle);
}

/// Shortest decimal text that parses back to exactly `value`.
inline std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

inline std::string format_lines(std::span<const double> values) {
    std::string out;
    for (double v : values) {
        out += format_double(v);
        out += '\n';
    }
    return out;
}

/// Writes via a sibling temporary file and renames it into place, so a
/// failed write never leaves a partial file at `path`.
inline void write_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write '" + path.string() + "'");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw Error("cannot write '" + path.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw Error("cannot write '" + path.string() + "': " + ec.message());
    }
}

struct PlotStyle {
    double width = 960.0;
    double height = 420.0;
    double margin = 48.0;
    std::string title = "PSF forecast";
    std::string history_color = "#1f77b4";
    std::string forecast_color = "#d62728";
};

/**
 * SVG line chart of a history followed by its forecast. The forecast starts
 * at x-index history.size(); the y-range covers both series.
 */
inline std::string render_plot(std::span<const double> history, std::span<const double> predictions,
                               const PlotStyle& style = {}) {
    if (predictions.empty()) {
        throw Error("nothing to plot");
    }
    if (history.empty()) {
        throw Error("nothing to plot: empty history");
    }
    const std::size_t total = history.size() + predictions.size();
    double lo = std::min(*std::min_element(history.begin(), history.end()),
                         *std::min_element(predictions.begin(), predictions.end()));
    double hi = std::max(*std::max_element(history.begin(), history.end()),
                         *std::max_element(predictions.begin(), predictions.end()));
    if (hi == lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    const double plot_w = style.width - 2 * style.margin;
    const double plot_h = style.height - 2 * style.margin;
    auto x_of = [&](std::size_t i) {
        return style.margin + plot_w * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(1, total - 1));
    };
    auto y_of = [&](double v) { return style.margin + plot_h * (hi - v) / (hi - lo); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };
    auto polyline = [&](std::span<const double> ys, std::size_t offset, const std::string& color,
                        const char* name) {
        std::string s = "  <polyline class=\"" + std::string(name) + "\" data-first-index=\"" +
                        std::to_string(offset) + "\" data-last-index=\"" +
                        std::to_string(offset + ys.size() - 1) + "\" fill=\"none\" stroke=\"" + color +
                        "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < ys.size(); ++i) {
            if (i != 0) {
                s += ' ';
            }
            s += num(x_of(offset + i)) + "," + num(y_of(ys[i]));
        }
        s += "\"/>\n";
        return s;
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(style.width) << "\" height=\""
        << num(style.height) << "\" viewBox=\"0 0 " << num(style.width) << " " << num(style.height) << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "  <text x=\"" << num(style.width / 2) << "\" y=\"" << num(style.margin / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << style.title << "</text>\n"
        << "  <line x1=\"" << num(style.margin) << "\" y1=\"" << num(style.height - style.margin) << "\" x2=\""
        << num(style.width - style.margin) << "\" y2=\"" << num(style.height - style.margin)
        << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << num(style.margin) << "\" y1=\"" << num(style.margin) << "\" x2=\""
        << num(style.margin) << "\" y2=\"" << num(style.height - style.margin) << "\" stroke=\"black\"/>\n"
        << "  <text x=\"" << num(style.margin - 4) << "\" y=\"" << num(y_of(hi - pad))
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << num(hi - pad) << "</text>\n"
        << "  <text x=\"" << num(style.margin - 4) << "\" y=\"" << num(y_of(lo + pad))
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << num(lo + pad) << "</text>\n"
        << polyline(history, 0, style.history_color, "history")
        << polyline(predictions, history.size(), style.forecast_color, "forecast") << "</svg>\n";
    return svg.str();
}

inline void emit_plot(std::span<const double> history, std::span<const double> predictions,
                      const std::filesystem::path& path, const PlotStyle& style = {}) {
    write_atomic(path, render_plot(history, predictions, style));
}

}  // namespace psf::io

#pragma once

// Static clock-and-arc figures. Output is plain text emitted from a fixed template, so
// identical inputs give identical bytes.

#include <cmath>
#include <iomanip>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arcorder/core.hpp"

namespace arcorder {

struct SvgOptions {
    double clock_radius = 120.0;
    double band_gap = 14.0;
    double margin = 48.0;
};

namespace detail {

inline constexpr double pi = 3.14159265358979323846;

inline std::string fixed3(double v)
{
    std::ostringstream s;
    s.imbue(std::locale::classic());
    if (std::abs(v) < 5e-4) v = 0.0;
    s << std::fixed << std::setprecision(3) << v;
    return s.str();
}

inline std::string xml_escape(const std::string& s)
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

}  // namespace detail

/// Draws the m-hour clock (hour 1 at the top, clockwise), hour markers labelled with the
/// vertex whose arc ends there, and one concentric band per arc (model order, innermost
/// first). `sides`, when given, colours X black and Y red.
inline std::string render_svg(const ArcModel& model, const std::optional<std::vector<Side>>& sides = std::nullopt,
                              const SvgOptions& opt = {})
{
    using detail::fixed3;
    const int m = model.clock_size();
    const double outer = opt.clock_radius + opt.band_gap * static_cast<double>(model.size() + 1);
    const double half = outer + opt.margin;
    const double size = 2 * half;

    auto angle = [&](double pos) { return 2 * detail::pi * (pos - 1) / m; };
    auto px = [&](double r, double a) { return half + r * std::sin(a); };
    auto py = [&](double r, double a) { return half - r * std::cos(a); };
    auto colour = [&](std::size_t i) -> std::string {
        if (!sides) return "#333333";
        return (*sides)[i] == Side::X ? "#000000" : "#cc0000";
    };

    std::vector<std::string> label(static_cast<std::size_t>(m) + 1);
    std::vector<std::string> label_colour(static_cast<std::size_t>(m) + 1, "#333333");
    for (std::size_t i = 0; i < model.size(); ++i) {
        auto p = static_cast<std::size_t>(model.arc(i).end);
        if (!label[p].empty()) label[p] += ",";
        label[p] += model.names()[i];
        label_colour[p] = colour(i);
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed3(size) << "\" height=\""
        << fixed3(size) << "\" viewBox=\"0 0 " << fixed3(size) << " " << fixed3(size) << "\">\n";
    out << "<g class=\"clock\">\n";
    out << " <circle cx=\"" << fixed3(half) << "\" cy=\"" << fixed3(half) << "\" r=\"" << fixed3(opt.clock_radius)
        << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    for (int p = 1; p <= m; ++p) {
        const double a = angle(p);
        out << " <circle class=\"marker\" data-position=\"" << p << "\" cx=\"" << fixed3(px(opt.clock_radius, a))
            << "\" cy=\"" << fixed3(py(opt.clock_radius, a)) << "\" r=\"3\" fill=\"#999999\"/>\n";
        const double lr = opt.clock_radius - 18.0;
        out << " <text class=\"hour\" x=\"" << fixed3(px(lr, a)) << "\" y=\"" << fixed3(py(lr, a))
            << "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#999999\">" << p
            << "</text>\n";
        if (!label[static_cast<std::size_t>(p)].empty()) {
            const double tr = outer + 16.0;
            out << " <text class=\"label\" data-position=\"" << p << "\" x=\"" << fixed3(px(tr, a)) << "\" y=\""
                << fixed3(py(tr, a)) << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\""
                << label_colour[static_cast<std::size_t>(p)] << "\">" << detail::xml_escape(label[static_cast<std::size_t>(p)])
                << "</text>\n";
        }
    }
    out << "</g>\n<g class=\"arcs\">\n";

    // A point arc is widened by a small pad so it stays visible.
    const double pad = 0.12;
    for (std::size_t i = 0; i < model.size(); ++i) {
        const auto& arc = model.arc(i);
        const double r = opt.clock_radius + opt.band_gap * static_cast<double>(i + 1);
        const double span = clockwise_distance(arc.start, arc.end, m);
        const double a0 = angle(arc.start - pad);
        const double a1 = angle(arc.start + span + pad);
        const int large = (span + 2 * pad) * 2 > m ? 1 : 0;
        out << " <path class=\"arc\" data-vertex=\"" << detail::xml_escape(model.names()[i]) << "\" data-start=\""
            << arc.start << "\" data-end=\"" << arc.end << "\" d=\"M " << fixed3(px(r, a0)) << " " << fixed3(py(r, a0))
            << " A " << fixed3(r) << " " << fixed3(r) << " 0 " << large << " 1 " << fixed3(px(r, a1)) << " "
            << fixed3(py(r, a1)) << "\" fill=\"none\" stroke=\"" << colour(i)
            << "\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace arcorder

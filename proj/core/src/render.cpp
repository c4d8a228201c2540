#include "funcwalk/render.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace funcwalk {

namespace {

using nlohmann::json;

struct WalkPaths {
    std::vector<Vec2> solid;
    std::vector<Vec2> dotted;  // shares its first point with solid's last
};

WalkPaths build_paths(const WalkSpec& spec, std::size_t steps, const RenderStyle& style) {
    const auto index = repetition_index(spec);
    const bool closed = index && cyclo_is_zero(period_displacement(spec, *index));
    std::size_t tail = 0;
    if (!closed && (index ? style.repetition_figure : style.dotted_tail)) {
        tail = style.tail_edges.value_or(index ? *index : 5);
    }
    const std::vector<Vec2> all = vertices_float(spec, steps + tail, style.scale);
    WalkPaths paths;
    paths.solid.assign(all.begin(), all.begin() + steps + 1);
    if (tail > 0) {
        paths.dotted.assign(all.begin() + steps, all.end());
    }
    return paths;
}

void append_point(std::string& out, Vec2 p, int decimals, char separator) {
    out += format_coordinate(p.x, decimals);
    out += separator;
    out += format_coordinate(p.y, decimals);
}

std::string tikz_path(const std::vector<Vec2>& points, int decimals, bool dotted) {
    std::string out = dotted ? "\\draw[dotted] " : "\\draw ";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            out += " -- ";
        }
        out += '(';
        append_point(out, points[i], decimals, ',');
        out += ')';
    }
    out += ";\n";
    return out;
}

}  // namespace

std::string format_coordinate(double value, int decimals) {
    if (decimals < 1) {
        throw std::invalid_argument("format_coordinate: decimals must be >= 1");
    }
    // std::round rounds halfway cases away from zero
    const double p = std::pow(10.0, decimals);
    const double rounded = std::round(value * p) / p;
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, rounded);
    std::string out = buffer;
    while (out.size() > 1 && out.back() == '0' && out[out.size() - 2] != '.') {
        out.pop_back();
    }
    return out;
}

RenderDocument to_tikz(const WalkSpec& spec, std::size_t steps, const RenderStyle& style) {
    if (steps < 1) {
        throw std::invalid_argument("to_tikz: steps must be >= 1");
    }
    const WalkPaths paths = build_paths(spec, steps, style);
    std::string text = tikz_path(paths.solid, style.decimals, false);
    if (!paths.dotted.empty()) {
        text += tikz_path(paths.dotted, style.decimals, true);
    }
    return {RenderFormat::Tikz, std::move(text)};
}

RenderDocument to_svg(const WalkSpec& spec, std::size_t steps, const RenderStyle& style) {
    if (steps < 1) {
        throw std::invalid_argument("to_svg: steps must be >= 1");
    }
    WalkPaths paths = build_paths(spec, steps, style);
    // flip y so mathematical +y is up in screen coordinates
    for (auto* path : {&paths.solid, &paths.dotted}) {
        for (Vec2& p : *path) {
            p.y = -p.y;
        }
    }
    double min_x = paths.solid[0].x;
    double max_x = min_x;
    double min_y = paths.solid[0].y;
    double max_y = min_y;
    for (const auto* path : {&paths.solid, &paths.dotted}) {
        for (const Vec2& p : *path) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    min_x -= style.padding;
    min_y -= style.padding;
    max_x += style.padding;
    max_y += style.padding;
    const double width = max_x - min_x;
    const double height = max_y - min_y;
    const double extent = std::max(width, height);
    const int d = style.decimals;

    auto polyline = [&](const std::vector<Vec2>& points, bool dotted) {
        std::string out = "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
                          format_coordinate(extent / 200.0, 6) + "\"";
        if (dotted) {
            out += " stroke-dasharray=\"" + format_coordinate(extent / 60.0, 6) + " " +
                   format_coordinate(extent / 90.0, 6) + "\"";
        }
        out += " points=\"";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            append_point(out, points[i], d, ',');
        }
        out += "\"/>\n";
        return out;
    };

    std::string text = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    text += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
            format_coordinate(min_x, d) + " " + format_coordinate(min_y, d) + " " +
            format_coordinate(width, d) + " " + format_coordinate(height, d) + "\">\n";
    text += polyline(paths.solid, false);
    if (!paths.dotted.empty()) {
        text += polyline(paths.dotted, true);
    }
    text += "</svg>\n";
    return {RenderFormat::Svg, std::move(text)};
}

namespace {

json classification_to_json(const Classification& c) {
    json closed;
    closed["is_closed"] = c.closure.closed;
    if (c.closure.period) {
        closed["period"] = *c.closure.period;
    } else {
        closed["period"] = nullptr;
    }

    json bounded;
    switch (c.bounded.verdict) {
        case Boundedness::Bounded:
            bounded["verdict"] = "bounded";
            break;
        case Boundedness::Unbounded:
            bounded["verdict"] = "unbounded";
            break;
        case Boundedness::Unknown:
            bounded["verdict"] = "unknown";
            break;
    }
    bounded["certificate"] = c.bounded.certificate;
    bounded["bound"] = c.bounded.bound ? json(*c.bounded.bound) : json(nullptr);
    bounded["max_observed"] = c.bounded.max_observed;

    json converging;
    switch (c.converging.verdict) {
        case Convergence::Converging:
            converging["verdict"] = "converging";
            break;
        case Convergence::NotConverging:
            converging["verdict"] = "not-converging";
            break;
        case Convergence::Unknown:
            converging["verdict"] = "unknown";
            break;
    }
    converging["limit"] = c.converging.limit ? json(*c.converging.limit) : json(nullptr);
    converging["method"] = c.converging.method;

    json repetition = nullptr;
    if (c.repetition) {
        json figure = json::array();
        for (const Vec2& p : c.repetition->figure) {
            figure.push_back(json::array({p.x, p.y}));
        }
        repetition = json{{"index", c.repetition->index}, {"figure", std::move(figure)}};
    }

    return json{{"closed", std::move(closed)},
                {"bounded", std::move(bounded)},
                {"converging", std::move(converging)},
                {"repetition", std::move(repetition)}};
}

}  // namespace

RenderDocument to_json(const WalkSpec& spec, std::size_t steps, const Classification& classification,
                       double scale) {
    json doc;
    doc["notation"] = spec.label;
    doc["m"] = spec.m;
    doc["n0"] = spec.start_index;
    json vertices = json::array();
    for (const Vec2& p : vertices_float(spec, steps, scale)) {
        vertices.push_back(json::array({p.x, p.y}));
    }
    doc["vertices"] = std::move(vertices);
    doc["classification"] = classification_to_json(classification);
    return {RenderFormat::Json, doc.dump(2) + "\n"};
}

std::string classification_json(const Classification& classification) {
    return classification_to_json(classification).dump(2) + "\n";
}

}  // namespace funcwalk

#pragma once

#include "funcwalk/classify.hpp"

#include <optional>
#include <string>

namespace funcwalk {

struct RenderStyle {
    double scale = 1.0;
    int decimals = 4;  // >= 1; coordinates round half away from zero
    /// Dotted continuation length; defaults to one repetition period for
    /// repetitive walks and 5 edges otherwise.
    std::optional<std::size_t> tail_edges;
    bool dotted_tail = true;        // continuation after open walks
    bool repetition_figure = true;  // dotted repetition figure after repetitive walks
    double padding = 0.5;           // canvas padding around the svg view box
};

enum class RenderFormat { Svg, Tikz, Json };

struct RenderDocument {
    RenderFormat format;
    std::string text;
};

/// TikZ \draw fragment: a solid path of the first `steps` vertices plus a
/// dotted continuation for open walks (one repetition figure when the walk
/// is repetitive). Closed walks emit no dotted element.
RenderDocument to_tikz(const WalkSpec& spec, std::size_t steps, const RenderStyle& style = {});

/// SVG 1.1 document with the same geometry; the y axis is flipped so
/// mathematical +y points up, and dotted elements use a dash pattern.
RenderDocument to_svg(const WalkSpec& spec, std::size_t steps, const RenderStyle& style = {});

/// JSON document: notation, m, n0, vertices and the classification with its
/// witnesses. Vertices reproduce vertices_float(spec, steps, scale) exactly.
RenderDocument to_json(const WalkSpec& spec, std::size_t steps, const Classification& classification,
                       double scale = 1.0);

/// The classification object alone, as a JSON string.
std::string classification_json(const Classification& classification);

/// Half-away-from-zero rounding to `decimals` places, trailing zeros
/// trimmed but at least one decimal kept ("0.45", "1.0", "-0.35").
std::string format_coordinate(double value, int decimals);

}  // namespace funcwalk

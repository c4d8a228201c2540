#pragma once

#include "funcwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

struct Figure {
    std::vector<funcwalk::Vec2> solid;
    std::vector<funcwalk::Vec2> dotted;
};

inline std::string golden_path(const std::string& name) {
    return std::string(FUNCWALK_GOLDEN_DIR) + "/" + name;
}

inline Figure load_figure(const std::string& name) {
    std::ifstream in(golden_path("figures/" + name + ".txt"));
    if (!in) {
        throw std::runtime_error("missing golden figure: " + name);
    }
    Figure fig;
    std::vector<funcwalk::Vec2>* current = nullptr;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line == "solid") {
            current = &fig.solid;
            continue;
        }
        if (line == "dotted") {
            current = &fig.dotted;
            continue;
        }
        std::istringstream row(line);
        funcwalk::Vec2 p;
        row >> p.x >> p.y;
        current->push_back(p);
    }
    return fig;
}

/// Coordinate lists of every path in a TikZ fragment, in document order.
inline std::vector<std::vector<funcwalk::Vec2>> tikz_paths(const std::string& text) {
    std::vector<std::vector<funcwalk::Vec2>> paths;
    std::size_t pos = 0;
    while ((pos = text.find("\\draw", pos)) != std::string::npos) {
        const std::size_t end = text.find(';', pos);
        std::vector<funcwalk::Vec2> points;
        std::size_t p = pos;
        while ((p = text.find('(', p)) != std::string::npos && p < end) {
            const std::size_t comma = text.find(',', p);
            const std::size_t close = text.find(')', p);
            funcwalk::Vec2 v;
            v.x = std::stod(text.substr(p + 1, comma - p - 1));
            v.y = std::stod(text.substr(comma + 1, close - comma - 1));
            points.push_back(v);
            p = close;
        }
        paths.push_back(std::move(points));
        pos = end;
    }
    return paths;
}

/// Largest per-coordinate deviation; infinity on length mismatch.
inline double max_coordinate_error(const std::vector<funcwalk::Vec2>& a,
                                   const std::vector<funcwalk::Vec2>& b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        err = std::max({err, std::abs(a[i].x - b[i].x), std::abs(a[i].y - b[i].y)});
    }
    return err;
}

/// Minimal XML well-formedness scan: matched tags, quoted attributes, one root.
inline bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    int roots = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t close = text.find('>', i);
        if (close == std::string::npos) {
            return false;
        }
        std::string tag = text.substr(i + 1, close - i - 1);
        if (tag.empty()) {
            return false;
        }
        if (tag.front() == '?') {
            i = close + 1;
            continue;
        }
        // attribute values must be quoted: count quotes
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) {
            return false;
        }
        if (tag.front() == '/') {
            const std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) {
                return false;
            }
            stack.pop_back();
            if (stack.empty()) {
                ++roots;
            }
        } else if (tag.back() == '/') {
            if (stack.empty()) {
                ++roots;
            }
        } else {
            const std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            stack.push_back(name);
        }
        i = close + 1;
    }
    return stack.empty() && roots == 1;
}

}  // namespace testutil

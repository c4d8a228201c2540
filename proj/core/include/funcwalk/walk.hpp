#pragma once

#include "funcwalk/cyclotomic.hpp"
#include "funcwalk/expr.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace funcwalk {

/// A functional walk <f | g>_m: edge t points in direction
/// 2*pi/m * (f(t) mod m) and has length g(t); vertices start at the origin
/// and edges are evaluated from t = start_index upward.
struct WalkSpec {
    ExprAst f;
    ExprAst g;
    unsigned m = 1;
    int start_index = 1;  // 0 or 1
    std::string label;
};

/// Validates f (integer-class), m >= 1 and the start index; g defaults to
/// the constant 1. The label is the display notation.
WalkSpec make_walk(ExprAst f, std::optional<ExprAst> g, unsigned m, int start_index = 1);

/// Display notation for the triple; g is omitted when it is the constant 1.
std::string walk_label(const ExprAst& f, const ExprAst& g, unsigned m);

/// Direction residue f(n) mod m in [0, m).
unsigned direction(const WalkSpec& spec, const Int& n);

/// g(n) * zeta_m^direction(n), exact.
CycloElem edge_vector_exact(const WalkSpec& spec, const Int& n);

/// Visits v_0 = (0,0), v_1, ..., v_steps in order.
void scan_vertices(const WalkSpec& spec, std::size_t steps, double scale,
                   const std::function<void(std::size_t, Vec2)>& visit);

/// steps+1 vertices, v_0 = (0,0); scale multiplies every edge length.
std::vector<Vec2> vertices_float(const WalkSpec& spec, std::size_t steps, double scale);

/// Exact vertices as elements of Q(zeta_m); no scale (a rendering concern).
std::vector<CycloElem> vertices_exact(const WalkSpec& spec, std::size_t steps);

/// Exact sum of the first `period` edge vectors: the translation between
/// consecutive pieces of a repetitive walk.
CycloElem period_displacement(const WalkSpec& spec, unsigned period);

}  // namespace funcwalk

#include "funcwalk/walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace funcwalk {

WalkSpec make_walk(ExprAst f, std::optional<ExprAst> g, unsigned m, int start_index) {
    if (!f.integer_class()) {
        throw std::invalid_argument("walk direction function f must not contain division");
    }
    if (m < 1) {
        throw std::invalid_argument("walk modulus m must be >= 1");
    }
    if (start_index != 0 && start_index != 1) {
        throw std::invalid_argument("walk start index must be 0 or 1");
    }
    ExprAst length = g ? std::move(*g) : ExprAst::constant(1);
    std::string label = walk_label(f, length, m);
    return WalkSpec{std::move(f), std::move(length), m, start_index, std::move(label)};
}

std::string walk_label(const ExprAst& f, const ExprAst& g, unsigned m) {
    std::string out = "⟨" + f.to_string();
    if (!g.structural_equal(ExprAst::constant(1))) {
        out += " | " + g.to_string();
    }
    out += "⟩_" + std::to_string(m);
    return out;
}

unsigned direction(const WalkSpec& spec, const Int& n) {
    return euclid_mod(spec.f.eval_int(n), spec.m).convert_to<unsigned>();
}

CycloElem edge_vector_exact(const WalkSpec& spec, const Int& n) {
    return cyclo_scale(zeta_pow(direction(spec, n), spec.m), spec.g.eval_rat(n));
}

void scan_vertices(const WalkSpec& spec, std::size_t steps, double scale,
                   const std::function<void(std::size_t, Vec2)>& visit) {
    // unit direction table for the m residues
    std::vector<Vec2> unit(spec.m);
    for (unsigned k = 0; k < spec.m; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / spec.m;
        unit[k] = {std::cos(angle), std::sin(angle)};
    }
    Vec2 v{0.0, 0.0};
    visit(0, v);
    for (std::size_t i = 1; i <= steps; ++i) {
        const Int t = Int(spec.start_index) + (i - 1);
        const unsigned k = direction(spec, t);
        const double length = scale * to_double(spec.g.eval_rat(t));
        v.x += length * unit[k].x;
        v.y += length * unit[k].y;
        visit(i, v);
    }
}

std::vector<Vec2> vertices_float(const WalkSpec& spec, std::size_t steps, double scale) {
    std::vector<Vec2> out;
    out.reserve(steps + 1);
    scan_vertices(spec, steps, scale, [&out](std::size_t, Vec2 v) { out.push_back(v); });
    return out;
}

std::vector<CycloElem> vertices_exact(const WalkSpec& spec, std::size_t steps) {
    std::vector<CycloElem> out;
    out.reserve(steps + 1);
    CycloElem v = CycloElem::zero(spec.m);
    out.push_back(v);
    for (std::size_t i = 1; i <= steps; ++i) {
        v = cyclo_add(v, edge_vector_exact(spec, Int(spec.start_index) + (i - 1)));
        out.push_back(v);
    }
    return out;
}

CycloElem period_displacement(const WalkSpec& spec, unsigned period) {
    if (period < 1) {
        throw std::invalid_argument("period_displacement: period must be >= 1");
    }
    CycloElem sum = CycloElem::zero(spec.m);
    for (unsigned i = 0; i < period; ++i) {
        sum = cyclo_add(sum, edge_vector_exact(spec, Int(spec.start_index) + i));
    }
    return sum;
}

}  // namespace funcwalk

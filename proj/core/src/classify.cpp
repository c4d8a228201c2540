#include "funcwalk/classify.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace funcwalk {

namespace {

int identity_probes(const ExprAst& a, const ExprAst& b) {
    const long bound = degree_bound(a) + degree_bound(b) + 1;
    return static_cast<int>(std::min<long>(bound, 1 << 20));
}

bool identically_constant(const ExprAst& e, const Int& c) {
    return exprs_identical(e, ExprAst::constant(c), degree_bound(e) + 1);
}

double scan_max_radius(const WalkSpec& spec, std::size_t steps) {
    double max_r = 0.0;
    scan_vertices(spec, steps, 1.0, [&max_r](std::size_t, Vec2 v) {
        max_r = std::max(max_r, std::hypot(v.x, v.y));
    });
    return max_r;
}

// g matching c / n^k exactly on the AST
struct InversePower {
    Int c;
    unsigned k;
};

std::optional<InversePower> match_inverse_power(const ExprAst& g) {
    if (g.kind() != ExprKind::Divide || g.lhs().kind() != ExprKind::Constant) {
        return std::nullopt;
    }
    const ExprAst den = g.rhs();
    if (den.kind() == ExprKind::Power && den.lhs().kind() == ExprKind::Variable &&
        den.exponent() <= 64) {
        return InversePower{g.lhs().constant_value(), den.exponent().convert_to<unsigned>()};
    }
    if (den.kind() == ExprKind::Variable) {
        return InversePower{g.lhs().constant_value(), 1};
    }
    return std::nullopt;
}

}  // namespace

std::optional<unsigned> repetition_index(const WalkSpec& spec) {
    if (identically_constant(spec.g, 0)) {
        return 1;  // every edge is the zero vector
    }
    const unsigned period = residue_period(spec.f, spec.m);
    const ExprAst shifted = shift_variable(spec.g, period);
    if (exprs_identical(shifted, spec.g, identity_probes(shifted, spec.g))) {
        return period;
    }
    return std::nullopt;
}

ClosureResult is_closed(const WalkSpec& spec) {
    const auto index = repetition_index(spec);
    if (index && cyclo_is_zero(period_displacement(spec, *index))) {
        return {true, *index};
    }
    return {false, std::nullopt};
}

BoundednessResult boundedness(const WalkSpec& spec, const ClassifyOptions& opts) {
    const auto index = repetition_index(spec);
    if (index) {
        const CycloElem drift = period_displacement(spec, *index);
        if (cyclo_is_zero(drift)) {
            // closed: the whole walk is one period, B is exact up to rounding
            double max_r = 0.0;
            for (const CycloElem& v : vertices_exact(spec, *index)) {
                const Vec2 p = cyclo_to_xy(v);
                max_r = std::max(max_r, std::hypot(p.x, p.y));
            }
            return {Boundedness::Bounded, "closed", max_r, max_r};
        }
        return {Boundedness::Unbounded, "repetitive-drift", std::nullopt,
                scan_max_radius(spec, opts.horizon)};
    }
    // |g| = |c|/n^k with k >= 2 is absolutely summable: partial sum plus an
    // integral tail bound on sum 1/n^k
    if (const auto ip = match_inverse_power(spec.g); ip && ip->k >= 2 && spec.start_index >= 1) {
        constexpr unsigned kPartialTerms = 1000;
        Rational partial = 0;
        for (unsigned n = spec.start_index; n <= kPartialTerms; ++n) {
            partial += spec.g.eval_rat(n) < 0 ? -spec.g.eval_rat(n) : spec.g.eval_rat(n);
        }
        const double tail = to_double(Rational(abs(ip->c))) *
                            std::pow(static_cast<double>(kPartialTerms), 1.0 - ip->k) /
                            (ip->k - 1.0);
        const double bound = to_double(partial) + tail;
        return {Boundedness::Bounded, "absolutely-summable", bound,
                scan_max_radius(spec, opts.horizon)};
    }
    // a non-repetitive integer-class g is a nonconstant polynomial, so edge
    // lengths diverge and with them max(|v_{n-1}|, |v_n|) >= |e_n| / 2
    if (spec.g.integer_class()) {
        return {Boundedness::Unbounded, "edge-growth", std::nullopt,
                scan_max_radius(spec, opts.horizon)};
    }
    return {Boundedness::Unknown, "horizon-scan", std::nullopt,
            scan_max_radius(spec, opts.horizon)};
}

ConvergenceResult convergence(const WalkSpec& spec, const ClassifyOptions& opts) {
    const auto index = repetition_index(spec);
    if (index) {
        const CycloElem drift = period_displacement(spec, *index);
        if (!cyclo_is_zero(drift)) {
            return {Convergence::NotConverging, std::nullopt, "repetitive-drift"};
        }
        // closed: |v_n| is purely periodic, so it converges only if it is
        // constant, i.e. equal to |v_0| = 0 everywhere
        bool all_zero = true;
        for (const CycloElem& v : vertices_exact(spec, *index)) {
            all_zero = all_zero && cyclo_is_zero(v);
        }
        if (all_zero) {
            return {Convergence::Converging, 0.0, "exact-periodic"};
        }
        return {Convergence::NotConverging, std::nullopt, "exact-periodic"};
    }
    // heuristic tail test on the radial sequence
    if (opts.tail_window >= opts.horizon) {
        throw std::invalid_argument("convergence: tail window must be smaller than the horizon");
    }
    std::vector<double> radii(opts.horizon + 1);
    scan_vertices(spec, opts.horizon, 1.0,
                  [&radii](std::size_t i, Vec2 v) { radii[i] = std::hypot(v.x, v.y); });
    const double last = radii.back();
    double deviation = 0.0;
    for (std::size_t i = opts.horizon - opts.tail_window; i <= opts.horizon; ++i) {
        deviation = std::max(deviation, std::abs(radii[i] - last));
    }
    if (deviation < opts.figure_tolerance) {
        return {Convergence::Converging, last, "tail-window"};
    }
    return {Convergence::Unknown, std::nullopt, "tail-window"};
}

EqualityResult walks_equal(const WalkSpec& a, const WalkSpec& b, const ClassifyOptions& opts) {
    const unsigned compositum = std::lcm(a.m, b.m);
    const auto ra = repetition_index(a);
    const auto rb = repetition_index(b);
    const bool periodic = ra.has_value() && rb.has_value();
    const std::size_t limit = periodic ? std::lcm(*ra, *rb) : opts.horizon;
    for (std::size_t i = 1; i <= limit; ++i) {
        const Int na = Int(a.start_index) + (i - 1);
        const Int nb = Int(b.start_index) + (i - 1);
        // edge embedded into the compositum: g(n) * zeta_L^(k * L / m)
        const CycloElem ea =
            cyclo_scale(zeta_pow(Int(direction(a, na)) * (compositum / a.m), compositum),
                        a.g.eval_rat(na));
        const CycloElem eb =
            cyclo_scale(zeta_pow(Int(direction(b, nb)) * (compositum / b.m), compositum),
                        b.g.eval_rat(nb));
        if (!cyclo_equal(ea, eb)) {
            return {WalkEquality::NotEqual, i};
        }
    }
    return {periodic ? WalkEquality::Equal : WalkEquality::EqualUpToHorizon, std::nullopt};
}

namespace {

ExprAst rational_constant(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return ExprAst::constant(num);
    }
    return ExprAst::divide(ExprAst::constant(num), ExprAst::constant(den));
}

}  // namespace

EquivalenceResult walks_equivalent(const WalkSpec& a, const WalkSpec& b,
                                   const ClassifyOptions& opts) {
    // j is pinned by the first index where both edge lengths evaluate
    std::optional<Rational> offset;
    for (std::size_t i = 1; i <= opts.horizon; ++i) {
        try {
            const Rational ga = a.g.eval_rat(Int(a.start_index) + (i - 1));
            const Rational gb = b.g.eval_rat(Int(b.start_index) + (i - 1));
            offset = ga - gb;
            break;
        } catch (const SingularEvaluation&) {
            continue;
        }
    }
    if (!offset) {
        return {std::nullopt, false};
    }
    ExprAst adjusted = *offset == 0 ? b.g : ExprAst::add(b.g, rational_constant(*offset));
    const WalkSpec candidate = make_walk(b.f, adjusted, b.m, b.start_index);
    try {
        const EqualityResult eq = walks_equal(a, candidate, opts);
        if (eq.verdict == WalkEquality::Equal) {
            return {offset, true};
        }
        if (eq.verdict == WalkEquality::EqualUpToHorizon) {
            return {offset, false};
        }
    } catch (const SingularEvaluation&) {
        // a pole inside the comparison window: no certificate
    }
    return {std::nullopt, false};
}

bool is_regular_polygon(const WalkSpec& spec) {
    if (spec.m < 3) {
        return false;
    }
    const ClosureResult closure = is_closed(spec);
    if (!closure.closed || *closure.period != spec.m) {
        return false;
    }
    // consecutive directions must advance by one constant step
    std::vector<unsigned> residues(spec.m);
    for (unsigned i = 0; i < spec.m; ++i) {
        residues[i] = direction(spec, Int(spec.start_index) + i);
    }
    const unsigned step = (residues[1] + spec.m - residues[0]) % spec.m;
    for (unsigned i = 1; i + 1 < spec.m; ++i) {
        if ((residues[i + 1] + spec.m - residues[i]) % spec.m != step) {
            return false;
        }
    }
    // equal edge lengths
    Rational first_len = spec.g.eval_rat(spec.start_index);
    if (first_len < 0) {
        first_len = -first_len;
    }
    if (first_len == 0) {
        return false;
    }
    for (unsigned i = 1; i < spec.m; ++i) {
        Rational len = spec.g.eval_rat(Int(spec.start_index) + i);
        if (len < 0) {
            len = -len;
        }
        if (len != first_len) {
            return false;
        }
    }
    // m pairwise distinct vertices
    const auto vertices = vertices_exact(spec, spec.m - 1);
    for (unsigned i = 0; i < spec.m; ++i) {
        for (unsigned j = i + 1; j < spec.m; ++j) {
            if (cyclo_equal(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

Classification classify_all(const WalkSpec& spec, const ClassifyOptions& opts) {
    Classification result;
    result.closure = is_closed(spec);
    result.bounded = boundedness(spec, opts);
    result.converging = convergence(spec, opts);
    if (const auto index = repetition_index(spec)) {
        result.repetition = RepetitionInfo{*index, vertices_float(spec, *index, 1.0)};
    }
    assert(!result.closure.closed || result.bounded.verdict == Boundedness::Bounded);
    assert(!result.closure.closed || result.repetition.has_value());
    return result;
}

}  // namespace funcwalk

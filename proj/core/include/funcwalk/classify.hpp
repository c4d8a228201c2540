#pragma once

#include "funcwalk/walk.hpp"

#include <optional>
#include <string>

namespace funcwalk {

struct ClassifyOptions {
    std::size_t horizon = 100000;     // float-step budget for numeric scans
    std::size_t tail_window = 1000;   // trailing window for the convergence test
    double tolerance = 1e-9;          // numeric zero / agreement tolerance
    double figure_tolerance = 1e-3;   // allowed tail radial variation
};

struct ClosureResult {
    bool closed = false;
    std::optional<unsigned> period;  // set iff closed
};

enum class Boundedness { Bounded, Unbounded, Unknown };

struct BoundednessResult {
    Boundedness verdict = Boundedness::Unknown;
    // "closed", "repetitive-drift", "absolutely-summable", "edge-growth",
    // "horizon-scan" (the Unknown fallback)
    std::string certificate;
    std::optional<double> bound;  // B, when Bounded
    double max_observed = 0.0;    // max |v_n| seen by the certifying scan
};

enum class Convergence { Converging, NotConverging, Unknown };

struct ConvergenceResult {
    Convergence verdict = Convergence::Unknown;
    std::optional<double> limit;  // C, when Converging
    // "exact-periodic", "repetitive-drift" (both exact), "tail-window" (heuristic)
    std::string method;
};

struct RepetitionInfo {
    unsigned index = 0;           // repetition index R
    std::vector<Vec2> figure;     // the repetition figure v_0..v_R, scale 1
};

struct Classification {
    ClosureResult closure;
    BoundednessResult bounded;
    ConvergenceResult converging;
    std::optional<RepetitionInfo> repetition;
};

/// Minimal period R of the edge-vector sequence, when it exists. Edges
/// repeat exactly when g is unaffected by shifting n by the residue period
/// of f (probe-checked identity, so g must be constant in this expression
/// class); an identically zero g makes every edge the zero vector (R = 1).
std::optional<unsigned> repetition_index(const WalkSpec& spec);

/// Closed(R) iff the walk is repetitive and one period's displacement is
/// exactly zero in Q(zeta_m). Complete for this expression class: edge
/// sequences are purely periodic or not repetitive at all.
ClosureResult is_closed(const WalkSpec& spec);

BoundednessResult boundedness(const WalkSpec& spec, const ClassifyOptions& opts = {});

ConvergenceResult convergence(const WalkSpec& spec, const ClassifyOptions& opts = {});

enum class WalkEquality { Equal, NotEqual, EqualUpToHorizon };

struct EqualityResult {
    WalkEquality verdict = WalkEquality::EqualUpToHorizon;
    std::optional<std::size_t> differing_index;  // set for NotEqual
};

/// Vertexwise equality, decided on the edge sequences in the compositum
/// field Q(zeta_lcm(ma, mb)). A complete certificate when both walks are
/// edge-periodic; otherwise exact only up to the horizon.
EqualityResult walks_equal(const WalkSpec& a, const WalkSpec& b, const ClassifyOptions& opts = {});

struct EquivalenceResult {
    std::optional<Rational> offset;  // j with a = <f_b | g_b + j>_mb
    bool complete = false;           // true when backed by an Equal certificate
};

EquivalenceResult walks_equivalent(const WalkSpec& a, const WalkSpec& b,
                                   const ClassifyOptions& opts = {});

/// True iff the walk traces an m-gon: closed with period m, constant
/// direction step, constant edge length, m pairwise distinct vertices.
bool is_regular_polygon(const WalkSpec& spec);

Classification classify_all(const WalkSpec& spec, const ClassifyOptions& opts = {});

}  // namespace funcwalk

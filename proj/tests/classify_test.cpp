#include "funcwalk/classify.hpp"

#include <doctest.h>

#include <cmath>

using namespace funcwalk;

namespace {

WalkSpec walk(const char* f, const char* g, unsigned m, int n0 = 1) {
    return make_walk(parse_expr(f), g ? std::optional(parse_expr(g)) : std::nullopt, m, n0);
}

ClassifyOptions fast_opts() {
    ClassifyOptions opts;
    opts.horizon = 2000;
    opts.tail_window = 200;
    return opts;
}

}  // namespace

TEST_CASE("repetition_index") {
    CHECK(repetition_index(walk("n^2", nullptr, 5)) == 5);
    CHECK(!repetition_index(walk("n", "n", 4)).has_value());
    CHECK(repetition_index(walk("n^3", nullptr, 9)) == 3);
    CHECK(repetition_index(walk("n^2", nullptr, 4)) == 2);
    // constant-by-value g still repeats
    CHECK(repetition_index(walk("n", "7-n+n", 4)) == 4);
    // the all-zero walk repeats immediately
    CHECK(repetition_index(walk("n", "0", 4)) == 1);
}

TEST_CASE("repetition index divides m on the corpus") {
    const char* functions[] = {"n", "n^2", "n^3", "2*n", "n^2+n"};
    for (const char* f : functions) {
        for (unsigned m = 1; m <= 24; ++m) {
            const auto index = repetition_index(walk(f, nullptr, m));
            REQUIRE(index.has_value());
            CHECK(m % *index == 0);
        }
    }
}

TEST_CASE("is_closed") {
    const ClosureResult square = is_closed(walk("n", nullptr, 4));
    CHECK(square.closed);
    CHECK(square.period == 4);

    CHECK(!is_closed(walk("n", "n", 4)).closed);
    CHECK(is_closed(walk("n^2", nullptr, 18)).closed);
    CHECK(!is_closed(walk("n^2", nullptr, 5)).closed);
}

TEST_CASE("boundedness ladder") {
    SUBCASE("closed walks carry an exact period bound") {
        const BoundednessResult r = boundedness(walk("n", nullptr, 4), fast_opts());
        CHECK(r.verdict == Boundedness::Bounded);
        CHECK(r.certificate == "closed");
        CHECK(*r.bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
    SUBCASE("repetitive drift forces unboundedness") {
        const BoundednessResult r = boundedness(walk("n^2", nullptr, 5), fast_opts());
        CHECK(r.verdict == Boundedness::Unbounded);
        CHECK(r.certificate == "repetitive-drift");
    }
    SUBCASE("absolutely summable tails are bounded") {
        const BoundednessResult r = boundedness(walk("n", "1/n^2", 4), fast_opts());
        CHECK(r.verdict == Boundedness::Bounded);
        CHECK(r.certificate == "absolutely-summable");
        CHECK(*r.bound < 1.645);
        CHECK(*r.bound >= r.max_observed);
    }
    SUBCASE("polynomial edge growth forces unboundedness") {
        const BoundednessResult r = boundedness(walk("n", "n", 4), fast_opts());
        CHECK(r.verdict == Boundedness::Unbounded);
        CHECK(r.certificate == "edge-growth");
    }
    SUBCASE("harmonic lengths stay unresolved with numeric evidence") {
        const BoundednessResult r = boundedness(walk("n", "1/n", 4), fast_opts());
        CHECK(r.verdict == Boundedness::Unknown);
        CHECK(r.certificate == "horizon-scan");
        CHECK(r.max_observed > 0.0);
        CHECK(r.max_observed < 4.0);
    }
}

TEST_CASE("convergence") {
    SUBCASE("inward spiral converges radially") {
        ClassifyOptions opts;
        opts.horizon = 20000;
        opts.tail_window = 500;
        const ConvergenceResult r = convergence(walk("n", "1/n", 4), opts);
        CHECK(r.verdict == Convergence::Converging);
        CHECK(r.limit.has_value());
        CHECK(r.method == "tail-window");
    }
    SUBCASE("closed walks with distinct radii do not converge") {
        const ConvergenceResult r = convergence(walk("n", nullptr, 4), fast_opts());
        CHECK(r.verdict == Convergence::NotConverging);
        CHECK(r.method == "exact-periodic");
    }
    SUBCASE("the zero walk converges to 0") {
        const ConvergenceResult r = convergence(walk("n", "0", 4), fast_opts());
        CHECK(r.verdict == Convergence::Converging);
        CHECK(*r.limit == 0.0);
    }
    SUBCASE("drifting repetitive walks diverge") {
        const ConvergenceResult r = convergence(walk("n^2", nullptr, 5), fast_opts());
        CHECK(r.verdict == Convergence::NotConverging);
        CHECK(r.method == "repetitive-drift");
    }
    SUBCASE("growing spirals stay unresolved") {
        const ConvergenceResult r = convergence(walk("n", "n", 4), fast_opts());
        CHECK(r.verdict == Convergence::Unknown);
    }
}

TEST_CASE("walks_equal") {
    SUBCASE("shifting f by the modulus changes nothing") {
        const EqualityResult r = walks_equal(walk("n", nullptr, 4), walk("n+4", nullptr, 4));
        CHECK(r.verdict == WalkEquality::Equal);
    }
    SUBCASE("cross-modulus equality via the compositum") {
        const EqualityResult r = walks_equal(walk("n", nullptr, 2), walk("3*n", nullptr, 6));
        CHECK(r.verdict == WalkEquality::Equal);
    }
    SUBCASE("different polygons differ at the first edge") {
        const EqualityResult r = walks_equal(walk("n", nullptr, 3), walk("n", nullptr, 4));
        CHECK(r.verdict == WalkEquality::NotEqual);
        CHECK(r.differing_index == 1);
    }
    SUBCASE("non-periodic walks only certify up to the horizon") {
        const EqualityResult r =
            walks_equal(walk("n", "n", 4), walk("n", "n", 4), fast_opts());
        CHECK(r.verdict == WalkEquality::EqualUpToHorizon);
    }
}

TEST_CASE("walks_equal is an equivalence relation on the corpus") {
    const WalkSpec corpus[] = {walk("n", nullptr, 4), walk("n+4", nullptr, 4),
                               walk("n", nullptr, 2), walk("3*n", nullptr, 6),
                               walk("n^2", nullptr, 5)};
    for (const auto& a : corpus) {
        CHECK(walks_equal(a, a).verdict == WalkEquality::Equal);  // reflexive
        for (const auto& b : corpus) {
            const auto ab = walks_equal(a, b).verdict;
            const auto ba = walks_equal(b, a).verdict;
            CHECK((ab == WalkEquality::Equal) == (ba == WalkEquality::Equal));  // symmetric
        }
    }
    // transitivity spot-check on an equal triple
    const WalkSpec a = walk("n", nullptr, 4);
    const WalkSpec b = walk("n+4", nullptr, 4);
    const WalkSpec c = walk("n+8", nullptr, 4);
    CHECK(walks_equal(a, b).verdict == WalkEquality::Equal);
    CHECK(walks_equal(b, c).verdict == WalkEquality::Equal);
    CHECK(walks_equal(a, c).verdict == WalkEquality::Equal);
}

TEST_CASE("walks_equivalent") {
    SUBCASE("additive length offset is recovered") {
        const EquivalenceResult r =
            walks_equivalent(walk("n", "n", 4), walk("n", "n+5", 4), fast_opts());
        REQUIRE(r.offset.has_value());
        CHECK(*r.offset == -5);
    }
    SUBCASE("every walk is equivalent to itself with j = 0") {
        const EquivalenceResult r =
            walks_equivalent(walk("n^2", nullptr, 5), walk("n^2", nullptr, 5), fast_opts());
        REQUIRE(r.offset.has_value());
        CHECK(*r.offset == 0);
        CHECK(r.complete);  // repetitive, so the certificate is exact
    }
    SUBCASE("scaling is not an additive offset") {
        const EquivalenceResult r =
            walks_equivalent(walk("n", "n", 4), walk("n", "2*n", 4), fast_opts());
        CHECK(!r.offset.has_value());
    }
}

TEST_CASE("is_regular_polygon") {
    CHECK(is_regular_polygon(walk("n", nullptr, 5)));
    CHECK(!is_regular_polygon(walk("n^2", nullptr, 4)));  // open
    CHECK(!is_regular_polygon(walk("2*n", nullptr, 4)));  // degenerate back-and-forth
    CHECK(!is_regular_polygon(walk("n", nullptr, 2)));    // a segment is not a polygon
    // clockwise traversal still traces the square
    CHECK(is_regular_polygon(walk("3*n", nullptr, 4)));
}

TEST_CASE("theorem: <n>_m is the closed regular m-gon") {
    for (unsigned m = 2; m <= 24; ++m) {
        const WalkSpec spec = walk("n", nullptr, m);
        const ClosureResult closure = is_closed(spec);
        CHECK(closure.closed);
        CHECK(closure.period == m);
        CHECK(cyclo_is_zero(period_displacement(spec, m)));
        if (m >= 3) {
            CHECK(is_regular_polygon(spec));
        }
    }
}

TEST_CASE("classify_all") {
    SUBCASE("closed square") {
        const Classification c = classify_all(walk("n", nullptr, 4), fast_opts());
        CHECK(c.closure.closed);
        CHECK(c.closure.period == 4);
        CHECK(c.bounded.verdict == Boundedness::Bounded);
        CHECK(c.converging.verdict == Convergence::NotConverging);
        REQUIRE(c.repetition.has_value());
        CHECK(c.repetition->index == 4);
        CHECK(c.repetition->figure.size() == 5);
    }
    SUBCASE("square spiral") {
        const Classification c = classify_all(walk("n", "n", 4), fast_opts());
        CHECK(!c.closure.closed);
        CHECK(c.bounded.verdict == Boundedness::Unbounded);
        CHECK(!c.repetition.has_value());
    }
    SUBCASE("repetitive open walk") {
        const Classification c = classify_all(walk("n^2", nullptr, 5), fast_opts());
        CHECK(!c.closure.closed);
        CHECK(c.bounded.verdict == Boundedness::Unbounded);
        REQUIRE(c.repetition.has_value());
        CHECK(c.repetition->index == 5);
    }
}

TEST_CASE("classification invariants hold across a mixed corpus") {
    const WalkSpec corpus[] = {
        walk("n", nullptr, 4),      walk("n", "n", 4),        walk("n^2", nullptr, 5),
        walk("n^2", nullptr, 18),   walk("n", "1/n", 4),      walk("n", "1/n^2", 4),
        walk("n^3", nullptr, 9),    walk("n", "0", 4),        walk("n", nullptr, 1),
        walk("2*n", nullptr, 4),    walk("n^3", nullptr, 10),
    };
    for (const WalkSpec& spec : corpus) {
        CAPTURE(spec.label);
        const Classification c = classify_all(spec, fast_opts());
        if (c.closure.closed) {
            CHECK(c.bounded.verdict == Boundedness::Bounded);
            CHECK(c.repetition.has_value());
        }
        if (c.repetition &&
            !cyclo_is_zero(period_displacement(spec, c.repetition->index))) {
            CHECK(c.bounded.verdict == Boundedness::Unbounded);
        }
    }
}

TEST_CASE("concurrent classification is consistent") {
    std::vector<std::future<Classification>> futures;
    for (int repeat = 0; repeat < 4; ++repeat) {
        for (unsigned m = 3; m <= 10; ++m) {
            futures.push_back(std::async(std::launch::async, [m]() {
                return classify_all(walk("n^2", nullptr, m), fast_opts());
            }));
        }
    }
    std::size_t i = 0;
    for (auto& future : futures) {
        const unsigned m = 3 + (i++ % 8);
        const Classification c = future.get();
        CHECK(c.closure.closed == (m % 4 == 2));  // quadratic residue sums vanish iff m = 4j+2
        CHECK(c.repetition.has_value());
    }
}

TEST_CASE("repetitive open walks grow linearly") {
    const WalkSpec spec = walk("n^2", nullptr, 5);
    const unsigned period = *repetition_index(spec);
    const Vec2 drift = cyclo_to_xy(period_displacement(spec, period));
    const double drift_len = std::hypot(drift.x, drift.y);
    const auto vs = vertices_float(spec, 50 * period, 1.0);
    double figure_max = 0.0;
    for (unsigned i = 0; i <= period; ++i) {
        figure_max = std::max(figure_max, std::hypot(vs[i].x, vs[i].y));
    }
    for (unsigned k = 1; k <= 50; ++k) {
        const double radius = std::hypot(vs[k * period].x, vs[k * period].y);
        CHECK(std::abs(radius - k * drift_len) <= figure_max + 1e-9);
    }
}

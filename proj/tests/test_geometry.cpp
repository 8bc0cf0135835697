#include <doctest.h>

#include "euclid/geometry.hpp"
#include "support/geometry_suites.hpp"

using namespace euclid;
using namespace euclid::testing;

namespace {

constexpr Truth T = Truth::True;
constexpr Truth F = Truth::False;
constexpr Truth U = Truth::Undetermined;

Interval I(double v) { return Interval(v); }
Interval I(double lo, double hi) { return Interval(lo, hi); }

Point2 P2(Interval x, Interval y) { return {x, y}; }
Point3 P3(Interval x, Interval y, Interval z) { return {x, y, z}; }
Vec3 V(Interval x, Interval y, Interval z) { return {x, y, z}; }

// The wide line from the worked sameSide example.
Line2 wide_line() { return {I(2, 2.5), I(-1, -0.5), Interval(1, parse_decimal("1.05").hi())}; }

Line3 x_axis() { return {P3(I(0), I(0), I(0)), V(I(1), I(0), I(0))}; }
Line3 y_axis() { return {P3(I(0), I(0), I(0)), V(I(0), I(1), I(0))}; }
Plane z0() { return {I(0), I(0), I(1), I(0)}; }

} // namespace

TEST_CASE("object validation")
{
    CHECK_THROWS_AS(Line2(I(0), I(0), I(1)), ValidationError);
    CHECK_THROWS_AS(Line2(I(-1, 1), I(0, 2), I(1)), ValidationError);
    CHECK_NOTHROW(Line2(I(-1, 1), I(1, 2), I(1)));
    CHECK_THROWS_AS(Line3(P3(I(0), I(0), I(0)), V(I(0), I(-1, 1), I(0))), ValidationError);
    CHECK_THROWS_AS(Plane(I(0), I(0, 1), I(0), I(1)), ValidationError);
    CHECK_THROWS_AS(Point2(Interval::empty(), I(0)), ValidationError);
}

TEST_CASE("points_equal")
{
    CHECK(points_equal(P2(I(1), I(2)), P2(I(1), I(2))) == T);
    CHECK(points_equal(P2(I(0, 1), I(0, 1)), P2(I(2, 3), I(0, 1))) == F);
    CHECK(points_equal(P2(I(0, 1), I(0)), P2(I(0.5, 2), I(0))) == U);
    CHECK(points_equal(P3(I(1), I(2), I(3)), P3(I(1), I(2), I(4))) == F);
}

TEST_CASE("on_line in the plane")
{
    const Line2 diag(I(1), I(-1), I(0));
    CHECK(on_line(P2(I(0), I(0)), diag) == T);
    CHECK(on_line(P2(I(0), I(0)), wide_line()) == F);
    CHECK(on_line(P2(I(0, 0.1), I(0)), diag) == U);
}

TEST_CASE("on_line when the residual only touches zero")
{
    // Residual [-4, 0]: the corner a = b = 2, x = y = 1 lies on the line, so
    // propagation must not report Empty.
    const Line2 l(I(1, 2), I(1, 2), I(4));
    CHECK(on_line(P2(I(0, 1), I(0, 1)), l) == U);
    CHECK(on_line(P2(I(0, 0.5), I(0, 1)), l) == F);
}

TEST_CASE("in_plane and line_in_plane")
{
    CHECK(in_plane(P3(I(0), I(0), I(0)), z0()) == T);
    CHECK(in_plane(P3(I(0), I(0), I(1)), z0()) == F);
    CHECK(in_plane(P3(I(0, 1), I(0), I(0)), Plane(I(1), I(0), I(1), I(0))) == U);

    CHECK(line_in_plane(x_axis(), z0()) == T);
    CHECK(line_in_plane(x_axis(), Plane(I(0), I(0), I(1), I(-1))) == F);
    CHECK(line_in_plane(Line3(P3(I(0), I(0), I(0, 0.1)), V(I(1), I(0), I(0))), z0()) == U);
}

TEST_CASE("parallel")
{
    CHECK(parallel(Line2(I(1), I(-1), I(0)), Line2(I(1), I(-1), I(1))) == T);
    CHECK(parallel(z0(), Plane(I(0), I(1), I(0), I(0))) == F);
    CHECK(parallel(wide_line(), Line2(I(1), I(-1), I(0))) == F);
    CHECK(parallel(wide_line(), Line2(I(2, 2.5), I(-1, -0.5), I(3))) == U);
    CHECK(parallel(x_axis(), Line3(P3(I(0), I(0), I(1)), V(I(2), I(0), I(0)))) == T);
    CHECK(parallel(x_axis(), z0()) == T);
    CHECK(parallel(z0(), x_axis()) == T);
    CHECK(parallel(y_axis(), Plane(I(0), I(1), I(0), I(0))) == F);
}

TEST_CASE("lines_intersect in the plane")
{
    const auto axes = lines_intersect(Line2(I(1), I(0), I(0)), Line2(I(0), I(1), I(0)));
    CHECK(axes.verdict == T);
    REQUIRE(axes.box);
    CHECK(*axes.box == P2(I(0), I(0)));

    const auto parallel_pair = lines_intersect(Line2(I(1), I(0), I(0)), Line2(I(1), I(0), I(1)));
    CHECK(parallel_pair.verdict == F);
    CHECK_FALSE(parallel_pair.box);

    const auto coincident = lines_intersect(Line2(I(1), I(0), I(0)), Line2(I(2), I(0), I(0)));
    CHECK(coincident.verdict == U);
}

TEST_CASE("circumcenter pipeline")
{
    const Point2 p(I(0), I(0)), q(I(1), I(0.5)), r(I(0.5), I(1));
    const Point2 m = midpoint(p, q);
    CHECK(m == P2(I(0.5), I(0.25)));

    const Line2 pq = line_through(p, q).value();
    const Line2 qr = line_through(q, r).value();
    const Line2 b1 = perpendicular_through(midpoint(p, q), pq);
    const Line2 b2 = perpendicular_through(midpoint(q, r), qr);

    // The bisector of PQ is a multiple of 2x + y = 1.25.
    const Rational ratio_b = exact(b1.b().lo()) / exact(b1.a().lo());
    const Rational ratio_c = exact(b1.c().lo()) / exact(b1.a().lo());
    CHECK(ratio_b == Rational(1, 2));
    CHECK(ratio_c == Rational(5, 8));

    const auto hit = lines_intersect(b1, b2);
    REQUIRE(hit.verdict == T);
    REQUIRE(hit.box);
    const Rational center(5, 12);
    CHECK(encloses(hit.box->x(), center));
    CHECK(encloses(hit.box->y(), center));
    CHECK(hit.box->x().width() <= 1e-10);
    CHECK(hit.box->y().width() <= 1e-10);

    const Line2 b3 = perpendicular_through(midpoint(p, r), line_through(p, r).value());
    CHECK(on_line(*hit.box, b3) == U);
}

TEST_CASE("lines_intersect in space")
{
    CHECK(lines_intersect(x_axis(), y_axis()) == T);
    CHECK(lines_intersect(x_axis(), Line3(P3(I(0), I(0), I(1)), V(I(0), I(1), I(0)))) == F);
    CHECK(lines_intersect(x_axis(), Line3(P3(I(0), I(0), I(0, 0.1)), V(I(0), I(1), I(0)))) == U);
    // Parallel and distinct.
    CHECK(lines_intersect(x_axis(), Line3(P3(I(0), I(1), I(0)), V(I(3), I(0), I(0)))) == F);
}

TEST_CASE("same_side on the worked example")
{
    const Point2 p(I(0), I(0));
    CHECK(same_side(p, P2(I(0.5), I(0.5)), wide_line()) == T);
    CHECK(same_side(p, P2(I(1), I(0.5)), wide_line()) == F);
    CHECK(same_side(p, P2(I(0.75, 1), I(0.25, 0.5)), wide_line()) == U);
}

TEST_CASE("line_through")
{
    const auto l = line_through(P2(I(0), I(0)), P2(I(1), I(1)));
    REQUIRE(l);
    CHECK(l.value() == Line2(I(1), I(-1), I(0)));

    const auto same = line_through(P2(I(2), I(3)), P2(I(2), I(3)));
    REQUIRE_FALSE(same);
    CHECK(same.reason().condition == "equal");
    CHECK(same.reason().verdict == T);

    const auto overlap = line_through(P2(I(0, 1), I(0, 1)), P2(I(0.5, 2), I(0.5, 2)));
    REQUIRE_FALSE(overlap);
    CHECK(overlap.reason().verdict == U);

    const auto l3 = line_through(P3(I(0), I(0), I(0)), P3(I(1), I(2), I(3)));
    REQUIRE(l3);
    CHECK(l3.value().dir() == V(I(1), I(2), I(3)));
}

TEST_CASE("midpoint")
{
    CHECK(midpoint(P2(I(0), I(0)), P2(I(1), I(1))) == P2(I(0.5), I(0.5)));
    CHECK(midpoint(P2(I(0, 1), I(0)), P2(I(1, 2), I(0))).x() == I(0.5, 1.5));
    CHECK(midpoint(P3(I(0), I(0), I(0)), P3(I(2), I(4), I(6))) == P3(I(1), I(2), I(3)));
}

TEST_CASE("perpendicular_through")
{
    CHECK(perpendicular_through(P2(I(1), I(0)), Line2(I(1), I(-1), I(0))) == Line2(I(-1), I(-1), I(-1)));
    CHECK(perpendicular_through(P2(I(0), I(0)), Line2(I(1), I(0), I(0))) == Line2(I(0), I(-1), I(0)));
}

TEST_CASE("plane_from_point_line")
{
    const auto pl = plane_from_point_line(P3(I(0), I(1), I(0)), x_axis());
    REQUIRE(pl);
    CHECK(pl.value().normal() == V(I(0), I(0), I(1)));
    CHECK(pl.value().d() == I(0));

    const auto on = plane_from_point_line(P3(I(2), I(0), I(0)), x_axis());
    REQUIRE_FALSE(on);
    CHECK(on.reason().condition == "on");
    CHECK(on.reason().verdict == T);

    const auto wide = plane_from_point_line(P3(I(0, 0.1), I(1), I(0)), x_axis());
    REQUIRE(wide);
    CHECK(wide.value().c().contains(1.0));
}

TEST_CASE("perpendicular_to_plane")
{
    const Line3 l = perpendicular_to_plane(P3(I(1), I(2), I(3)), z0());
    CHECK(l.anchor() == P3(I(1), I(2), I(3)));
    CHECK(l.dir() == V(I(0), I(0), I(1)));
    CHECK(perpendicular_to_plane(P3(I(0), I(0), I(0)), Plane(I(1), I(1), I(1), I(0))).dir() ==
          V(I(1), I(1), I(1)));
    CHECK(perpendicular_to_plane(P3(I(0), I(0), I(0)), Plane(I(1), I(0, 0.1), I(0), I(0))).dir() ==
          V(I(1), I(0, 0.1), I(0)));
}

TEST_CASE("common_perpendicular")
{
    const auto skew = common_perpendicular(x_axis(), Line3(P3(I(0), I(0), I(1)), V(I(0), I(1), I(0))));
    REQUIRE(skew);
    CHECK(skew.value().anchor().vec().x.contains(0.0));
    CHECK(skew.value().anchor().vec().y.contains(0.0));
    CHECK(skew.value().anchor().vec().z.contains(0.0));
    CHECK(skew.value().dir() == V(I(0), I(0), I(1)));

    const auto crossing = common_perpendicular(x_axis(), y_axis());
    REQUIRE_FALSE(crossing);
    CHECK(crossing.reason().condition == "intersect");
    CHECK(crossing.reason().verdict == T);

    const auto para = common_perpendicular(x_axis(), Line3(P3(I(0), I(0), I(1)), V(I(1), I(0), I(0))));
    REQUIRE_FALSE(para);
    CHECK(para.reason().condition == "parallel");
    CHECK(para.reason().verdict == T);
}

TEST_CASE("meet_line_plane")
{
    const auto hit = meet_line_plane(Line3(P3(I(1), I(2), I(3)), V(I(0), I(0), I(1))), z0());
    REQUIRE(hit);
    CHECK(hit.value() == P3(I(1), I(2), I(0)));

    const auto inside = meet_line_plane(x_axis(), z0());
    REQUIRE_FALSE(inside);
    CHECK(inside.reason().verdict == T);

    const auto tilted = meet_line_plane(Line3(P3(I(0), I(0), I(0)), V(I(1), I(0), I(-0.1, 0.1))), z0());
    REQUIRE_FALSE(tilted);
    CHECK(tilted.reason().verdict == U);
}

TEST_CASE("meet_planes")
{
    const auto l = meet_planes(z0(), Plane(I(0), I(1), I(0), I(0)));
    REQUIRE(l);
    CHECK(l.value().dir() == V(I(-1), I(0), I(0)));
    CHECK(l.value().anchor() == P3(I(0), I(0), I(0)));

    const auto par = meet_planes(z0(), Plane(I(0), I(0), I(1), I(-1)));
    REQUIRE_FALSE(par);
    CHECK(par.reason().verdict == T);

    const auto tilted = meet_planes(z0(), Plane(I(1), I(0), I(-0.1, 0.1), I(0)));
    REQUIRE(tilted);
    CHECK(tilted.value().dir().y == I(1));
    CHECK(tilted.value().anchor().vec().y == I(0));
}

// --- Randomized suites ------------------------------------------------------------

TEST_CASE("predicate verdicts agree with the exact oracle")
{
    Rng rng(31);
    for_each_predicate([&](const auto& pc) {
        CAPTURE(pc.name);
        const auto singles = run_oracle(pc, rng, 1500, Shape{true}, 1);
        CHECK_MESSAGE(singles.violations == 0, singles.first_failure);
        CHECK(singles.trues > 0);
        CHECK(singles.falses > 0);
        const auto boxes = run_oracle(pc, rng, 400, Shape{false}, 30);
        CHECK_MESSAGE(boxes.violations == 0, boxes.first_failure);
    });
}

TEST_CASE("refinement never flips a definite verdict")
{
    Rng rng(32);
    for_each_predicate([&](const auto& pc) {
        CAPTURE(pc.name);
        const auto st = run_refinement(pc, rng, 500);
        CHECK_MESSAGE(st.flips == 0, st.first_failure);
        CHECK(st.definite > 0);
    });
}

TEST_CASE("constructions contain every exact selection")
{
    Rng rng(33);
    for (const auto& cc : construction_cases()) {
        CAPTURE(cc.name);
        const auto st = run_construction(cc, rng, 400, 20);
        CHECK_MESSAGE(st.violations == 0, st.first_failure);
        CHECK(st.built > 0);
    }
}

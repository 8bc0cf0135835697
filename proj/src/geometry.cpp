#include "euclid/geometry.hpp"

#include <array>

namespace euclid {

// --- Vector helpers ---------------------------------------------------------

Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
Vec3 operator-(const Vec3& u, const Vec3& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
Vec3 operator*(const Interval& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

Interval dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

Vec3 cross(const Vec3& u, const Vec3& v)
{
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

Truth zero_test(const Interval& v)
{
    if (v.is_zero())
        return Truth::True;
    if (v.excludes_zero())
        return Truth::False;
    return Truth::Undetermined;
}

Truth zero_test(const Vec3& v)
{
    return and3(and3(zero_test(v.x), zero_test(v.y)), zero_test(v.z));
}

namespace {

bool excludes_zero_vector(const Vec3& v)
{
    return v.x.excludes_zero() || v.y.excludes_zero() || v.z.excludes_zero();
}

void require_nonempty(const Interval& i, const char* what)
{
    if (i.is_empty())
        throw ValidationError(std::string(what) + " is empty");
}

} // namespace

// --- Objects ---------------------------------------------------------------

Point2::Point2(const Interval& x, const Interval& y)
    : x_(x)
    , y_(y)
{
    require_nonempty(x, "point coordinate");
    require_nonempty(y, "point coordinate");
}

Point3::Point3(const Interval& x, const Interval& y, const Interval& z)
    : v_{x, y, z}
{
    require_nonempty(x, "point coordinate");
    require_nonempty(y, "point coordinate");
    require_nonempty(z, "point coordinate");
}

Line2::Line2(const Interval& a, const Interval& b, const Interval& c)
    : a_(a)
    , b_(b)
    , c_(c)
{
    require_nonempty(a, "line coefficient");
    require_nonempty(b, "line coefficient");
    require_nonempty(c, "line coefficient");
    if (!a.excludes_zero() && !b.excludes_zero())
        throw ValidationError("line normal (a, b) may be zero");
}

Line3::Line3(const Point3& anchor, const Vec3& dir)
    : anchor_(anchor)
    , dir_(dir)
{
    require_nonempty(dir.x, "line direction");
    require_nonempty(dir.y, "line direction");
    require_nonempty(dir.z, "line direction");
    if (!excludes_zero_vector(dir))
        throw ValidationError("line direction may be the zero vector");
}

Plane::Plane(const Interval& a, const Interval& b, const Interval& c, const Interval& d)
    : normal_{a, b, c}
    , d_(d)
{
    require_nonempty(a, "plane coefficient");
    require_nonempty(b, "plane coefficient");
    require_nonempty(c, "plane coefficient");
    require_nonempty(d, "plane coefficient");
    if (!excludes_zero_vector(normal_))
        throw ValidationError("plane normal (a, b, c) may be the zero vector");
}

// --- Predicates ---------------------------------------------------------------

namespace {

Truth coordinates_equal(const Interval& u, const Interval& v)
{
    if (intersect(u, v).is_empty())
        return Truth::False;
    if (u.is_singleton() && u == v)
        return Truth::True;
    return Truth::Undetermined;
}

// Verdict of "residual = 0" where the residual encloses the defining
// functional; `propagate` is the fallback that can still prove False.
template <class Fallback>
Truth incidence(const Interval& residual, Fallback propagate)
{
    if (residual.excludes_zero())
        return Truth::False;
    if (residual.is_zero())
        return Truth::True;
    return propagate() ? Truth::False : Truth::Undetermined;
}

// Builds the decomposed system and reports whether propagation proved it
// infeasible.
bool proves_infeasible(csp::Csp& system, const PredicateOptions& options)
{
    return system.propagate(options).status == csp::Status::Empty;
}

} // namespace

Truth points_equal(const Point2& p, const Point2& q)
{
    return and3(coordinates_equal(p.x(), q.x()), coordinates_equal(p.y(), q.y()));
}

Truth points_equal(const Point3& p, const Point3& q)
{
    return and3(and3(coordinates_equal(p.x(), q.x()), coordinates_equal(p.y(), q.y())),
                coordinates_equal(p.z(), q.z()));
}

Truth on_line(const Point2& p, const Line2& l, const PredicateOptions& options)
{
    const Interval residual = l.a() * p.x() + l.b() * p.y() - l.c();
    return incidence(residual, [&] {
        csp::Csp system;
        const csp::VarId x = system.add_variable(p.x());
        const csp::VarId y = system.add_variable(p.y());
        const std::array terms{csp::Term{l.a(), x}, csp::Term{l.b(), y}};
        csp::decompose_linear(system, terms, l.c());
        return proves_infeasible(system, options);
    });
}

Truth on_line(const Point3& p, const Line3& l)
{
    return zero_test(cross(p.vec() - l.anchor().vec(), l.dir()));
}

Truth in_plane(const Point3& p, const Plane& pl, const PredicateOptions& options)
{
    const Interval residual = dot(pl.normal(), p.vec()) + pl.d();
    return incidence(residual, [&] {
        csp::Csp system;
        const csp::VarId x = system.add_variable(p.x());
        const csp::VarId y = system.add_variable(p.y());
        const csp::VarId z = system.add_variable(p.z());
        const csp::VarId one = system.add_constant(Interval(1.0));
        const std::array terms{csp::Term{pl.a(), x}, csp::Term{pl.b(), y},
                               csp::Term{pl.c(), z}, csp::Term{pl.d(), one}};
        csp::decompose_linear(system, terms, Interval(0.0));
        return proves_infeasible(system, options);
    });
}

Truth line_in_plane(const Line3& l, const Plane& pl, const PredicateOptions& options)
{
    return and3(zero_test(dot(pl.normal(), l.dir())), in_plane(l.anchor(), pl, options));
}

Truth parallel(const Line2& l1, const Line2& l2)
{
    return zero_test(l1.a() * l2.b() - l2.a() * l1.b());
}

Truth parallel(const Line3& l1, const Line3& l2) { return zero_test(cross(l1.dir(), l2.dir())); }

Truth parallel(const Line3& l, const Plane& pl) { return zero_test(dot(pl.normal(), l.dir())); }

Truth parallel(const Plane& p1, const Plane& p2)
{
    return zero_test(cross(p1.normal(), p2.normal()));
}

LineIntersection lines_intersect(const Line2& l1, const Line2& l2)
{
    const Interval det = l1.a() * l2.b() - l2.a() * l1.b();
    if (det.excludes_zero()) {
        const Interval x = div_rel(l1.c() * l2.b() - l2.c() * l1.b(), det);
        const Interval y = div_rel(l1.a() * l2.c() - l2.a() * l1.c(), det);
        return {Truth::True, Point2(x, y)};
    }
    if (det.is_zero()) {
        const Interval offset_x = l1.c() * l2.b() - l2.c() * l1.b();
        const Interval offset_y = l1.a() * l2.c() - l2.a() * l1.c();
        if (offset_x.excludes_zero() || offset_y.excludes_zero())
            return {Truth::False, std::nullopt};
    }
    return {Truth::Undetermined, std::nullopt};
}

Truth lines_intersect(const Line3& l1, const Line3& l2)
{
    const Interval triple =
        dot(l2.anchor().vec() - l1.anchor().vec(), cross(l1.dir(), l2.dir()));
    if (triple.excludes_zero())
        return Truth::False;
    const Truth par = parallel(l1, l2);
    if (par == Truth::True && on_line(l2.anchor(), l1) == Truth::False)
        return Truth::False;
    if (triple.is_zero() && par == Truth::False)
        return Truth::True;
    return Truth::Undetermined;
}

Truth same_side(const Point2& p, const Point2& q, const Line2& l)
{
    const auto f = [&l](const Point2& v) { return l.a() * v.x() + l.b() * v.y() - l.c(); };
    const Interval s = f(p) * f(q);
    if (s.nonnegative())
        return Truth::True;
    if (s.negative())
        return Truth::False;
    return Truth::Undetermined;
}

// --- Constructions --------------------------------------------------------------

Construction<Line2> line_through(const Point2& p, const Point2& q)
{
    const Truth equal = points_equal(p, q);
    if (equal != Truth::False)
        return Disabled{"equal", equal};
    const Interval a = q.y() - p.y();
    const Interval b = p.x() - q.x();
    return Line2(a, b, a * p.x() + b * p.y());
}

Construction<Line3> line_through(const Point3& p, const Point3& q)
{
    const Truth equal = points_equal(p, q);
    if (equal != Truth::False)
        return Disabled{"equal", equal};
    const Vec3 dir = q.vec() - p.vec();
    if (!excludes_zero_vector(dir))
        return Disabled{"degenerate direction", Truth::Undetermined};
    return Line3(p, dir);
}

namespace {
const Interval kHalf(0.5);
}

Point2 midpoint(const Point2& p, const Point2& q)
{
    return Point2((p.x() + q.x()) * kHalf, (p.y() + q.y()) * kHalf);
}

Point3 midpoint(const Point3& p, const Point3& q)
{
    return Point3(kHalf * (p.vec() + q.vec()));
}

Line2 perpendicular_through(const Point2& p, const Line2& l)
{
    const Interval a = l.b();
    const Interval b = -l.a();
    return Line2(a, b, a * p.x() + b * p.y());
}

Construction<Plane> plane_from_point_line(const Point3& p, const Line3& l)
{
    const Truth on = on_line(p, l);
    if (on != Truth::False)
        return Disabled{"on", on};
    const Vec3 n = cross(l.dir(), p.vec() - l.anchor().vec());
    if (!excludes_zero_vector(n))
        return Disabled{"degenerate normal", Truth::Undetermined};
    return Plane(n.x, n.y, n.z, -dot(n, p.vec()));
}

Line3 perpendicular_to_plane(const Point3& p, const Plane& pl) { return Line3(p, pl.normal()); }

Construction<Line3> common_perpendicular(const Line3& l1, const Line3& l2)
{
    const Truth par = parallel(l1, l2);
    if (par != Truth::False)
        return Disabled{"parallel", par};
    const Truth meet = lines_intersect(l1, l2);
    if (meet != Truth::False)
        return Disabled{"intersect", meet};

    const Vec3& d1 = l1.dir();
    const Vec3& d2 = l2.dir();
    const Vec3 dir = cross(d1, d2);
    const Vec3 w = l2.anchor().vec() - l1.anchor().vec();

    // Foot parameters solve
    //   (d1.d1) t1 - (d1.d2) t2 = w.d1
    //   (d1.d2) t1 - (d2.d2) t2 = w.d2
    // whose determinant is -|d1 x d2|^2 (Lagrange identity).
    const Interval det = -(sqr(dir.x) + sqr(dir.y) + sqr(dir.z));
    if (!det.excludes_zero())
        return Disabled{"singular foot system", Truth::Undetermined};
    const Interval t1 = div_rel(dot(d1, d2) * dot(w, d2) - dot(d2, d2) * dot(w, d1), det);
    return Line3(Point3(l1.anchor().vec() + t1 * d1), dir);
}

Construction<Point3> meet_line_plane(const Line3& l, const Plane& pl)
{
    const Truth par = parallel(l, pl);
    if (par != Truth::False)
        return Disabled{"parallel", par};
    const Interval denom = dot(pl.normal(), l.dir());
    const Interval t = div_rel(-(dot(pl.normal(), l.anchor().vec()) + pl.d()), denom);
    return Point3(l.anchor().vec() + t * l.dir());
}

Construction<Line3> meet_planes(const Plane& p1, const Plane& p2)
{
    const Truth par = parallel(p1, p2);
    if (par != Truth::False)
        return Disabled{"parallel", par};
    const Vec3 dir = cross(p1.normal(), p2.normal());

    // Pin the coordinate whose direction component is farthest from zero.
    int pinned = -1;
    double best = 0.0;
    for (int k = 0; k < 3; ++k) {
        if (dir[k].excludes_zero() && dir[k].mignitude() > best) {
            best = dir[k].mignitude();
            pinned = k;
        }
    }
    if (pinned < 0)
        return Disabled{"degenerate direction", Truth::Undetermined};

    const int u = (pinned + 1) % 3;
    const int v = (pinned + 2) % 3;
    const Vec3& n1 = p1.normal();
    const Vec3& n2 = p2.normal();
    // n1[u] X_u + n1[v] X_v = -d1 and likewise for plane 2; the determinant
    // is the pinned component of n1 x n2.
    const Interval& det = dir[pinned];
    const Interval xu = div_rel(p2.d() * n1[v] - p1.d() * n2[v], det);
    const Interval xv = div_rel(p1.d() * n2[u] - p2.d() * n1[u], det);

    std::array<Interval, 3> anchor{};
    anchor[static_cast<std::size_t>(pinned)] = Interval(0.0);
    anchor[static_cast<std::size_t>(u)] = xu;
    anchor[static_cast<std::size_t>(v)] = xv;
    return Line3(Point3(anchor[0], anchor[1], anchor[2]), dir);
}

} // namespace euclid

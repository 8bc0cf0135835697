#pragma once

// Exact rational geometry: one concrete selection from an interval object,
// and the defining relations evaluated without rounding.

#include <array>

#include "euclid/geometry.hpp"
#include "support/oracle.hpp"

namespace euclid::testing {

using Q3 = std::array<Rational, 3>;

struct QPoint2 {
    Rational x, y;
};
struct QLine2 {
    Rational a, b, c;
};
struct QLine3 {
    Q3 p, d;
};
struct QPlane {
    Q3 n;
    Rational d;
};

inline Q3 sub(const Q3& u, const Q3& v) { return {u[0] - v[0], u[1] - v[1], u[2] - v[2]}; }
inline Rational dotq(const Q3& u, const Q3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }
inline Q3 crossq(const Q3& u, const Q3& v)
{
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
inline bool is_zero(const Q3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

inline Rational pick(Rng& rng, const Interval& i) { return exact(sample_in(rng, i)); }

inline QPoint2 select(Rng& rng, const Point2& p) { return {pick(rng, p.x()), pick(rng, p.y())}; }
inline Q3 select(Rng& rng, const Point3& p) { return {pick(rng, p.x()), pick(rng, p.y()), pick(rng, p.z())}; }
inline Q3 select(Rng& rng, const Vec3& v) { return {pick(rng, v.x), pick(rng, v.y), pick(rng, v.z)}; }

// Coefficient selections may land on a degenerate (zero) normal only if the
// object invariant is broken, which the constructors rule out.
inline QLine2 select(Rng& rng, const Line2& l) { return {pick(rng, l.a()), pick(rng, l.b()), pick(rng, l.c())}; }
inline QLine3 select(Rng& rng, const Line3& l) { return {select(rng, l.anchor()), select(rng, l.dir())}; }
inline QPlane select(Rng& rng, const Plane& pl) { return {select(rng, pl.normal()), pick(rng, pl.d())}; }

inline bool encloses(const Vec3& box, const Q3& v)
{
    return encloses(box.x, v[0]) && encloses(box.y, v[1]) && encloses(box.z, v[2]);
}

// --- Exact relations -----------------------------------------------------

inline bool equal_q(const QPoint2& p, const QPoint2& q) { return p.x == q.x && p.y == q.y; }
inline bool equal_q(const Q3& p, const Q3& q) { return p == q; }

inline Rational residual_q(const QPoint2& p, const QLine2& l) { return l.a * p.x + l.b * p.y - l.c; }
inline bool on_line_q(const QPoint2& p, const QLine2& l) { return residual_q(p, l) == 0; }
inline bool on_line_q(const Q3& p, const QLine3& l) { return is_zero(crossq(sub(p, l.p), l.d)); }
inline bool in_plane_q(const Q3& p, const QPlane& pl) { return dotq(pl.n, p) + pl.d == 0; }
inline bool line_in_plane_q(const QLine3& l, const QPlane& pl)
{
    return dotq(pl.n, l.d) == 0 && in_plane_q(l.p, pl);
}

inline Rational det_q(const QLine2& l1, const QLine2& l2) { return l1.a * l2.b - l2.a * l1.b; }
inline bool parallel_q(const QLine2& l1, const QLine2& l2) { return det_q(l1, l2) == 0; }
inline bool parallel_q(const QLine3& l1, const QLine3& l2) { return is_zero(crossq(l1.d, l2.d)); }
inline bool parallel_q(const QLine3& l, const QPlane& pl) { return dotq(pl.n, l.d) == 0; }
inline bool parallel_q(const QPlane& p1, const QPlane& p2) { return is_zero(crossq(p1.n, p2.n)); }

inline bool intersect_q(const QLine2& l1, const QLine2& l2)
{
    if (det_q(l1, l2) != 0)
        return true;
    // Parallel: they meet only when coincident.
    return l1.c * l2.b - l2.c * l1.b == 0 && l1.a * l2.c - l2.a * l1.c == 0;
}

inline bool intersect_q(const QLine3& l1, const QLine3& l2)
{
    const Q3 n = crossq(l1.d, l2.d);
    if (dotq(sub(l2.p, l1.p), n) != 0)
        return false;
    if (!is_zero(n))
        return true;
    return on_line_q(l2.p, l1);
}

inline bool same_side_q(const QPoint2& p, const QPoint2& q, const QLine2& l)
{
    return residual_q(p, l) * residual_q(q, l) >= 0;
}

/// The exact meeting point of two non-parallel lines.
inline QPoint2 meet_q(const QLine2& l1, const QLine2& l2)
{
    const Rational det = det_q(l1, l2);
    return {(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

} // namespace euclid::testing

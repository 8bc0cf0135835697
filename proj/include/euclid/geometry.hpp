#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "euclid/csp.hpp"
#include "euclid/interval.hpp"
#include "euclid/trilogic.hpp"

namespace euclid {

/// A geometric object whose intervals cannot denote any valid object, such
/// as a line whose normal box contains the zero vector.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Box of three intervals used for directions and normals. No invariant.
struct Vec3 {
    Interval x, y, z;

    const Interval& operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 operator+(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u, const Vec3& v);
Vec3 operator*(const Interval& s, const Vec3& v);
Interval dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);

/// True if every component is [0, 0], False if some component excludes 0.
Truth zero_test(const Vec3& v);
/// True if v is [0, 0], False if v excludes 0.
Truth zero_test(const Interval& v);

/// The set of planar points in an axis-aligned box.
class Point2 {
public:
    Point2(const Interval& x, const Interval& y);

    const Interval& x() const noexcept { return x_; }
    const Interval& y() const noexcept { return y_; }

    friend bool operator==(const Point2&, const Point2&) = default;

private:
    Interval x_, y_;
};

/// The set of spatial points in an axis-aligned box.
class Point3 {
public:
    Point3(const Interval& x, const Interval& y, const Interval& z);
    explicit Point3(const Vec3& v)
        : Point3(v.x, v.y, v.z)
    {
    }

    const Interval& x() const noexcept { return v_.x; }
    const Interval& y() const noexcept { return v_.y; }
    const Interval& z() const noexcept { return v_.z; }
    const Vec3& vec() const noexcept { return v_; }

    friend bool operator==(const Point3&, const Point3&) = default;

private:
    Vec3 v_;
};

/// The set of planar lines a*x + b*y = c with coefficients in the given
/// intervals. Subtraction in a user's equation is folded into a negative
/// coefficient.
class Line2 {
public:
    /// Throws ValidationError unless 0 is excluded from a or from b.
    Line2(const Interval& a, const Interval& b, const Interval& c);

    const Interval& a() const noexcept { return a_; }
    const Interval& b() const noexcept { return b_; }
    const Interval& c() const noexcept { return c_; }

    friend bool operator==(const Line2&, const Line2&) = default;

private:
    Interval a_, b_, c_;
};

/// The set of spatial lines through a point of `anchor` with a direction
/// from `dir`. Directions are not normalized.
class Line3 {
public:
    /// Throws ValidationError unless some direction component excludes 0.
    Line3(const Point3& anchor, const Vec3& dir);

    const Point3& anchor() const noexcept { return anchor_; }
    const Vec3& dir() const noexcept { return dir_; }

    friend bool operator==(const Line3&, const Line3&) = default;

private:
    Point3 anchor_;
    Vec3 dir_;
};

/// The set of planes a*x + b*y + c*z + d = 0.
class Plane {
public:
    /// Throws ValidationError unless some normal component excludes 0.
    Plane(const Interval& a, const Interval& b, const Interval& c, const Interval& d);

    const Interval& a() const noexcept { return normal_.x; }
    const Interval& b() const noexcept { return normal_.y; }
    const Interval& c() const noexcept { return normal_.z; }
    const Interval& d() const noexcept { return d_; }
    const Vec3& normal() const noexcept { return normal_; }

    friend bool operator==(const Plane&, const Plane&) = default;

private:
    Vec3 normal_;
    Interval d_;
};

/// Why a construction refused to run: the disabling condition and its
/// verdict (True or Undetermined).
struct Disabled {
    std::string condition;
    Truth verdict = Truth::Undetermined;
};

/// A construction's result. Built only when every disabling condition was
/// proved false.
template <class T>
class Construction {
public:
    Construction(T value)
        : state_(std::move(value))
    {
    }
    Construction(Disabled reason)
        : state_(std::move(reason))
    {
    }

    bool built() const noexcept { return std::holds_alternative<T>(state_); }
    explicit operator bool() const noexcept { return built(); }

    /// Throws std::bad_variant_access when disabled.
    const T& value() const { return std::get<T>(state_); }
    const Disabled& reason() const { return std::get<Disabled>(state_); }

private:
    std::variant<T, Disabled> state_;
};

/// Options for predicates that may fall back to constraint propagation.
using PredicateOptions = csp::PropagationOptions;

// --- Predicates -----------------------------------------------------------
//
// False proves that no selection from the operand sets satisfies the
// relation, True proves that every selection does.

Truth points_equal(const Point2& p, const Point2& q);
Truth points_equal(const Point3& p, const Point3& q);

/// Residual test, then constraint propagation when the residual is
/// inconclusive (propagation can only prove False).
Truth on_line(const Point2& p, const Line2& l, const PredicateOptions& options = {});
/// Zero test of (p - anchor) x dir.
Truth on_line(const Point3& p, const Line3& l);

Truth in_plane(const Point3& p, const Plane& pl, const PredicateOptions& options = {});
Truth line_in_plane(const Line3& l, const Plane& pl, const PredicateOptions& options = {});

Truth parallel(const Line2& l1, const Line2& l2);
Truth parallel(const Line3& l1, const Line3& l2);
Truth parallel(const Line3& l, const Plane& pl);
inline Truth parallel(const Plane& pl, const Line3& l) { return parallel(l, pl); }
Truth parallel(const Plane& p1, const Plane& p2);

struct LineIntersection {
    Truth verdict = Truth::Undetermined;
    /// On True: a box containing the meeting point of every selectable pair.
    std::optional<Point2> box;
};

LineIntersection lines_intersect(const Line2& l1, const Line2& l2);
Truth lines_intersect(const Line3& l1, const Line3& l2);

/// Sign test on f(p) * f(q) with f(v) = a*v.x + b*v.y - c. A point on the
/// line counts as being on the same side as any other point.
Truth same_side(const Point2& p, const Point2& q, const Line2& l);

// --- Constructions --------------------------------------------------------

Construction<Line2> line_through(const Point2& p, const Point2& q);
Construction<Line3> line_through(const Point3& p, const Point3& q);

Point2 midpoint(const Point2& p, const Point2& q);
Point3 midpoint(const Point3& p, const Point3& q);

/// The perpendicular to l through p. Always exists in the plane.
Line2 perpendicular_through(const Point2& p, const Line2& l);

Construction<Plane> plane_from_point_line(const Point3& p, const Line3& l);

/// The perpendicular to pl through p.
Line3 perpendicular_to_plane(const Point3& p, const Plane& pl);

/// The line perpendicular to both l1 and l2, anchored at its foot on l1.
Construction<Line3> common_perpendicular(const Line3& l1, const Line3& l2);

Construction<Point3> meet_line_plane(const Line3& l, const Plane& pl);
Construction<Line3> meet_planes(const Plane& p1, const Plane& p2);

} // namespace euclid

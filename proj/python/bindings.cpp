#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "euclid/geometry.hpp"
#include "euclid/script.hpp"

namespace py = pybind11;

namespace euclid {

namespace {

// Constructions hand back either the built object or the Disabled record.
template <class T>
py::object unwrap(const Construction<T>& c)
{
    if (c.built())
        return py::cast(c.value());
    return py::cast(c.reason());
}

void bind_interval(py::module_& m)
{
    py::class_<Interval>(m, "Interval")
        .def(py::init<>())
        .def(py::init<double>(), py::arg("value"))
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_static("empty", &Interval::empty)
        .def_static("entire", &Interval::entire)
        .def_static("from_decimal", &parse_decimal, py::arg("text"),
                    "Tightest interval containing a decimal literal")
        .def_property_readonly("lo", &Interval::lo)
        .def_property_readonly("hi", &Interval::hi)
        .def("is_empty", &Interval::is_empty)
        .def("is_singleton", &Interval::is_singleton)
        .def("contains", &Interval::contains, py::arg("value"))
        .def("subset_of", &Interval::subset_of, py::arg("other"))
        .def("width", &Interval::width)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const Interval& i) { return "Interval(" + format_interval(i) + ")"; })
        .def("__str__", &format_interval);
    py::implicitly_convertible<double, Interval>();
    py::implicitly_convertible<int, Interval>();

    m.def("div_rel", &div_rel, py::arg("a"), py::arg("b"));
    m.def("intersect", py::overload_cast<const Interval&, const Interval&>(&intersect),
          py::arg("a"), py::arg("b"));
    m.def("format_interval", &format_interval, py::arg("interval"));
}

void bind_csp(py::module_& m)
{
    py::enum_<csp::Status>(m, "Status")
        .value("CONSISTENT", csp::Status::Consistent)
        .value("EMPTY", csp::Status::Empty)
        .value("ITERATION_CAP_EXCEEDED", csp::Status::IterationCapExceeded);

    auto id = [](std::uint32_t i) { return csp::VarId{i}; };

    py::class_<csp::Csp>(m, "Csp")
        .def(py::init<>())
        .def(
            "add_variable",
            [](csp::Csp& c, const Interval& d) { return c.add_variable(d).index; },
            py::arg("domain") = Interval::entire())
        .def(
            "add_sum",
            [id](csp::Csp& c, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
                c.add(csp::Sum{id(x), id(y), id(z)});
            },
            "x + y = z")
        .def(
            "add_prod",
            [id](csp::Csp& c, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
                c.add(csp::Prod{id(x), id(y), id(z)});
            },
            "x * y = z")
        .def(
            "decompose_linear",
            [id](csp::Csp& c, const std::vector<std::pair<Interval, std::uint32_t>>& terms,
                 const Interval& rhs) {
                std::vector<csp::Term> ts;
                for (const auto& [coef, v] : terms)
                    ts.push_back({coef, id(v)});
                return csp::decompose_linear(c, ts, rhs).result.index;
            },
            py::arg("terms"), py::arg("rhs"))
        .def("domain", [id](const csp::Csp& c, std::uint32_t v) { return c.domain(id(v)); })
        .def_property_readonly("variable_count", &csp::Csp::variable_count)
        .def_property_readonly("constraint_count", &csp::Csp::constraint_count)
        .def(
            "propagate",
            [](csp::Csp& c, std::size_t max_dro, std::uint64_t order_seed) {
                const auto r = c.propagate({max_dro, order_seed});
                return py::make_tuple(r.status, r.dro_applications);
            },
            py::arg("max_dro") = csp::kDefaultDroCap, py::arg("order_seed") = 0)
        .def("dump", &csp::Csp::dump);
}

void bind_geometry(py::module_& m)
{
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::enum_<Truth>(m, "Truth")
        .value("FALSE", Truth::False)
        .value("TRUE", Truth::True)
        .value("UNDETERMINED", Truth::Undetermined)
        .def("__str__", [](Truth t) { return std::string(to_string(t)); });

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<Interval, Interval, Interval>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readonly("x", &Vec3::x)
        .def_readonly("y", &Vec3::y)
        .def_readonly("z", &Vec3::z);

    py::class_<Point2>(m, "Point2")
        .def(py::init<Interval, Interval>(), py::arg("x"), py::arg("y"))
        .def_property_readonly("x", &Point2::x)
        .def_property_readonly("y", &Point2::y)
        .def(py::self == py::self);
    py::class_<Point3>(m, "Point3")
        .def(py::init<Interval, Interval, Interval>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_property_readonly("x", &Point3::x)
        .def_property_readonly("y", &Point3::y)
        .def_property_readonly("z", &Point3::z)
        .def(py::self == py::self);
    py::class_<Line2>(m, "Line2")
        .def(py::init<Interval, Interval, Interval>(), py::arg("a"), py::arg("b"), py::arg("c"),
             "a*x + b*y = c")
        .def_property_readonly("a", &Line2::a)
        .def_property_readonly("b", &Line2::b)
        .def_property_readonly("c", &Line2::c);
    py::class_<Line3>(m, "Line3")
        .def(py::init<Point3, Vec3>(), py::arg("anchor"), py::arg("dir"))
        .def_property_readonly("anchor", &Line3::anchor)
        .def_property_readonly("dir", &Line3::dir);
    py::class_<Plane>(m, "Plane")
        .def(py::init<Interval, Interval, Interval, Interval>(), py::arg("a"), py::arg("b"),
             py::arg("c"), py::arg("d"), "a*x + b*y + c*z + d = 0")
        .def_property_readonly("a", &Plane::a)
        .def_property_readonly("b", &Plane::b)
        .def_property_readonly("c", &Plane::c)
        .def_property_readonly("d", &Plane::d);

    py::class_<Disabled>(m, "Disabled")
        .def_readonly("condition", &Disabled::condition)
        .def_readonly("verdict", &Disabled::verdict)
        .def("__repr__", [](const Disabled& d) {
            return "Disabled(" + d.condition + " = " + std::string(to_string(d.verdict)) + ")";
        });

    m.def("points_equal", py::overload_cast<const Point2&, const Point2&>(&points_equal));
    m.def("points_equal", py::overload_cast<const Point3&, const Point3&>(&points_equal));
    m.def("on_line", [](const Point2& p, const Line2& l) { return on_line(p, l); });
    m.def("on_line", py::overload_cast<const Point3&, const Line3&>(&on_line));
    m.def("in_plane", [](const Point3& p, const Plane& pl) { return in_plane(p, pl); });
    m.def("line_in_plane", [](const Line3& l, const Plane& pl) { return line_in_plane(l, pl); });
    m.def("parallel", py::overload_cast<const Line2&, const Line2&>(&parallel));
    m.def("parallel", py::overload_cast<const Line3&, const Line3&>(&parallel));
    m.def("parallel", py::overload_cast<const Line3&, const Plane&>(&parallel));
    m.def("parallel", py::overload_cast<const Plane&, const Line3&>(&parallel));
    m.def("parallel", py::overload_cast<const Plane&, const Plane&>(&parallel));
    m.def(
        "lines_intersect",
        [](const Line2& a, const Line2& b) {
            const auto r = lines_intersect(a, b);
            return py::make_tuple(r.verdict, r.box ? py::cast(*r.box) : py::none());
        },
        "Verdict and, when True, the enclosing box of the meeting point");
    m.def("lines_intersect", py::overload_cast<const Line3&, const Line3&>(&lines_intersect));
    m.def("same_side", &same_side, py::arg("p"), py::arg("q"), py::arg("line"));

    m.def("line_through", [](const Point2& p, const Point2& q) { return unwrap(line_through(p, q)); });
    m.def("line_through", [](const Point3& p, const Point3& q) { return unwrap(line_through(p, q)); });
    m.def("midpoint", py::overload_cast<const Point2&, const Point2&>(&midpoint));
    m.def("midpoint", py::overload_cast<const Point3&, const Point3&>(&midpoint));
    m.def("perpendicular_through", &perpendicular_through);
    m.def("plane_from_point_line",
          [](const Point3& p, const Line3& l) { return unwrap(plane_from_point_line(p, l)); });
    m.def("perpendicular_to_plane", &perpendicular_to_plane);
    m.def("common_perpendicular",
          [](const Line3& a, const Line3& b) { return unwrap(common_perpendicular(a, b)); });
    m.def("meet_line_plane",
          [](const Line3& l, const Plane& pl) { return unwrap(meet_line_plane(l, pl)); });
    m.def("meet_planes", [](const Plane& a, const Plane& b) { return unwrap(meet_planes(a, b)); });
}

void bind_script(py::module_& m)
{
    static py::exception<script::ScriptError> script_error(m, "ScriptError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const script::ScriptError& e) {
            py::set_error(script_error, e.diagnostic().c_str());
        }
    });

    m.def(
        "run_script",
        [](const std::string& text, bool durations, std::size_t max_dro) {
            script::ExecuteOptions options;
            options.predicates.max_dro = max_dro;
            const auto report = script::execute(script::parse(text), options);
            return script::format_report(report, {.durations = durations});
        },
        py::arg("text"), py::arg("durations") = true, py::arg("max_dro") = csp::kDefaultDroCap,
        "Execute a geometry script and return its report");
    m.def(
        "check_script", [](const std::string& text) { script::parse(text); }, py::arg("text"),
        "Parse a script; raises ScriptError on the first problem");
}

} // namespace

PYBIND11_MODULE(_euclid, m)
{
    m.doc() = "Interval geometry with three-valued predicates";
    m.attr("__version__") = "0.1.0";
    bind_interval(m);
    bind_csp(m);
    bind_geometry(m);
    bind_script(m);
}

} // namespace euclid

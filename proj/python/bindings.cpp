#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "funkhilbert/body_io.hpp"
#include "funkhilbert/checks.hpp"
#include "funkhilbert/funk.hpp"
#include "funkhilbert/projective.hpp"
#include "funkhilbert/trig.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace fh;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Funk and Hilbert metrics on convex bodies in Euclidean, spherical and hyperbolic space";

  // Translators run newest first, so the subclasses are registered last.
  const auto base = py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  py::enum_<Kind>(m, "Kind")
      .value("euclidean", Kind::Euclidean)
      .value("spherical", Kind::Spherical)
      .value("hyperbolic", Kind::Hyperbolic);

  py::class_<Geometry>(m, "Geometry")
      .def(py::init<Kind, int>(), "kind"_a, "dim"_a)
      .def_property_readonly("kind", &Geometry::kind)
      .def_property_readonly("dim", &Geometry::dim)
      .def_property_readonly("ambient_dim", &Geometry::ambient_dim)
      .def("__eq__", [](const Geometry& a, const Geometry& b) { return a == b; })
      .def("__repr__", [](const Geometry& g) {
        return "Geometry(" + std::string(to_string(g.kind())) + ", " + std::to_string(g.dim()) + ")";
      });

  py::class_<Point>(m, "Point")
      .def(py::init<const Geometry&, Vec>(), "geometry"_a, "coords"_a)
      .def_static("project", &Point::project, "geometry"_a, "v"_a)
      .def_property_readonly("geometry", &Point::geometry)
      .def_property_readonly("coords", &Point::coords);

  py::class_<TangentVector>(m, "TangentVector")
      .def(py::init<Point, Vec>(), "base"_a, "vec"_a)
      .def_property_readonly("base", &TangentVector::base)
      .def_property_readonly("vec", &TangentVector::vec)
      .def("norm", &TangentVector::norm)
      .def("normalized", &TangentVector::normalized);

  py::enum_<BodyKind>(m, "BodyKind").value("polytope", BodyKind::Polytope).value("ball", BodyKind::Ball);

  py::class_<ConvexBody>(m, "ConvexBody")
      .def_static("ball", &ConvexBody::ball, "center"_a, "radius"_a)
      .def_static("from_json", &body_from_json, "text"_a)
      .def_static("load", &load_body, "path"_a)
      .def("to_json", [](const ConvexBody& b) { return body_to_json(b); })
      .def_property_readonly("geometry", &ConvexBody::geometry)
      .def_property_readonly("kind", &ConvexBody::kind)
      .def_property_readonly("interior_point", &ConvexBody::interior_witness)
      .def_property_readonly("bounded", [](const ConvexBody& b) { return b.flags().bounded; })
      .def("contains", [](const ConvexBody& b, const Point& x) { return contains(b, x); }, "x"_a);

  m.def("origin", &origin, "geometry"_a);
  m.def("dist", &dist, "x"_a, "y"_a);
  m.def("unit_tangent", &unit_tangent, "x"_a, "y"_a);
  m.def("exp", static_cast<Point (*)(const TangentVector&, double)>(&fh::exp), "xi"_a, "t"_a);

  m.def("funk", &funk_f1, "body"_a, "x"_a, "y"_a, "Funk distance F(x, y)");
  m.def("funk_variational", &funk_f2, "body"_a, "x"_a, "y"_a,
        "Funk distance as a supremum over supporting hyperplanes");
  m.def("hilbert", &hilbert, "body"_a, "x"_a, "y"_a);
  m.def("finsler_norm", &finsler_norm, "body"_a, "xi"_a);
  m.def(
      "path_length",
      [](const ConvexBody& body, std::vector<Point> vertices, int subdivisions) {
        return path_length_f3(body, PolyPath{std::move(vertices), subdivisions});
      },
      "body"_a, "vertices"_a, "subdivisions"_a = 1024);
  m.def(
      "indicatrix",
      [](const ConvexBody& body, const Point& x, int count) {
        std::vector<std::tuple<double, double, double, bool>> out;
        for (const auto& s : indicatrix_sample(body, x, count)) out.emplace_back(s.theta, s.vx, s.vy, s.unbounded);
        return out;
      },
      "body"_a, "x"_a, "count"_a, "List of (theta, vx, vy, unbounded).");

  m.def("cross_ratio", &cross_ratio_of, "a1"_a, "a2"_a, "a3"_a, "a4"_a);
  m.def("lift_point", &lift_point, "chart_point"_a, "target"_a);
  m.def("chart_point", &chart_point, "x"_a);
  m.def("lift_body", &lift_body, "body"_a, "target"_a);

  m.def(
      "halfplane_to_hyperboloid", [](double re, double im) { return halfplane_to_hyperboloid({re, im}); }, "re"_a,
      "im"_a);
  m.def(
      "ideal_triangle_funk",
      [](std::pair<double, double> a, std::pair<double, double> b) {
        return ideal_triangle_funk({a.first, a.second}, {b.first, b.second});
      },
      "x1"_a, "x2"_a);

  m.def(
      "check",
      [](const std::string& suite, std::uint64_t seed, int samples, int jobs) {
        CheckOptions o;
        o.seed = seed;
        o.samples = samples;
        o.jobs = jobs;
        py::gil_scoped_release release;
        const RunReport r = run_check(suite, o);
        return std::make_pair(r.passed(), r.format());
      },
      "suite"_a, "seed"_a = 42, "samples"_a = 1000, "jobs"_a = 1, "Returns (passed, report text).");
}

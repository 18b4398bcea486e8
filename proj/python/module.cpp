#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qinv/cabling.hpp"
#include "qinv/cli.hpp"
#include "qinv/errors.hpp"
#include "qinv/fixtures.hpp"
#include "qinv/fourman.hpp"
#include "qinv/rtw.hpp"
#include "qinv/skein.hpp"

namespace py = pybind11;
using namespace qinv;

namespace
{

py::dict poly_dict(const LaurentPoly& p)
{
    py::dict d;
    for (auto [e, c] : p.terms())
        d[py::int_(e)] = py::int_(c);
    return d;
}

RootContext ctx_of(int level, const std::string& mode)
{
    return RootContext(level, parse_mode(mode));
}

py::dict scalar_dict(const RootScalar& v)
{
    py::dict d;
    d["value"] = v.to_complex();
    d["exact"] = v.is_exact() ? py::object(py::str(v.exact_string())) : py::object(py::none());
    return d;
}

py::list report_list(const EquivReport& r)
{
    py::list out;
    for (const auto& row : r.rows) {
        py::dict d;
        d["level"] = row.level;
        d["first"] = row.first.to_complex();
        d["second"] = row.second.to_complex();
        d["exact"] = row.exact;
        d["equal"] = row.equal;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Kauffman bracket, colored brackets and quantum 3- and 4-manifold invariants";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<SyntaxError>(m, "SyntaxError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
    py::register_exception<ColorOutOfRange>(m, "ColorOutOfRange", base.ptr());
    py::register_exception<DegenerateNormalizer>(m, "DegenerateNormalizer", base.ptr());

    py::class_<Diagram>(m, "Diagram")
        .def(py::init<>())
        .def_static("parse", &Diagram::parse, py::arg("text"))
        .def_static("load", &Diagram::load, py::arg("path"))
        .def_static("braid_closure", &braid_closure, py::arg("strands"), py::arg("word"))
        .def("serialize", &Diagram::serialize)
        .def_property_readonly("component_count", &Diagram::component_count)
        .def_property_readonly("crossing_count", &Diagram::crossing_count)
        .def_property_readonly("writhe", &Diagram::writhe)
        .def("mirror", [](const Diagram& d) { return mirror(d); })
        .def("blow_up", [](const Diagram& d, int sign) { return blow_up(d, sign); }, py::arg("sign"))
        .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; })
        .def("__repr__", [](const Diagram& d) {
            return "<Diagram components=" + std::to_string(d.component_count()) +
                   " crossings=" + std::to_string(d.crossing_count()) + ">";
        });

    m.def("fixture", &fixtures::get, py::arg("name"), "Built-in example diagram by name");
    m.def("fixture_names", [] {
        std::vector<std::string> names;
        for (const auto* t : {&fixtures::links(), &fixtures::surgery(), &fixtures::special()})
            for (const auto& e : *t)
                names.push_back(e.name);
        return names;
    });

    m.def("bracket", [](const Diagram& d) { return poly_dict(bracket(d)); }, py::arg("diagram"),
          "Kauffman bracket as {exponent of A: coefficient}");
    m.def("bracket_bruteforce", [](const Diagram& d) { return poly_dict(bracket_bruteforce(d)); },
          py::arg("diagram"));
    m.def("jones", [](const Diagram& d) { return jones(d).to_t_string(); }, py::arg("diagram"),
          "Jones polynomial as text in t");
    m.def(
        "skein_residual",
        [](const Diagram& d, std::size_t crossing) {
            const auto t = skein_triple_at(d, crossing);
            return poly_dict(check_skein(t.plus, t.minus, t.zero).residual);
        },
        py::arg("diagram"), py::arg("crossing"));
    m.def(
        "colored_bracket",
        [](const Diagram& d, const std::vector<int>& colors) {
            const auto v = colored_bracket(d, colors);
            if (auto r = v.reduced())
                return py::make_tuple(poly_dict(*r), poly_dict(LaurentPoly(1)));
            return py::make_tuple(poly_dict(v.numerator), poly_dict(v.denominator));
        },
        py::arg("diagram"), py::arg("colors"), "(numerator, denominator) over generic A, reduced when exact");
    m.def(
        "colored_bracket_at",
        [](const Diagram& d, const std::vector<int>& colors, int level, const std::string& mode) {
            return scalar_dict(colored_bracket(d, colors, ctx_of(level, mode)));
        },
        py::arg("diagram"), py::arg("colors"), py::arg("level"), py::arg("mode") = "exact");
    m.def(
        "rtw",
        [](const Diagram& d, int level, const std::string& mode) {
            const RootScalar v = [&] {
                py::gil_scoped_release release;
                return rtw_invariant(d, ctx_of(level, mode));
            }();
            return scalar_dict(v);
        },
        py::arg("diagram"), py::arg("level"), py::arg("mode") = "exact");
    m.def(
        "broda",
        [](const Diagram& d, int level, const std::string& mode) {
            const auto v = broda_invariant(d, ctx_of(level, mode));
            auto out = scalar_dict(v.value);
            out["principal_branch"] = v.principal_branch;
            return out;
        },
        py::arg("diagram"), py::arg("level"), py::arg("mode") = "exact");
    m.def(
        "kirby_equiv_check",
        [](const Diagram& a, const Diagram& b, const std::vector<int>& levels) {
            return report_list(kirby_equiv_check(a, b, levels));
        },
        py::arg("first"), py::arg("second"), py::arg("levels"));
    m.def(
        "fourman_equiv_check",
        [](const Diagram& a, const Diagram& b, const std::vector<int>& levels) {
            return report_list(fourman_equiv_check(a, b, levels));
        },
        py::arg("first"), py::arg("second"), py::arg("levels"));
    m.def(
        "linking_matrix",
        [](const Diagram& d) {
            const auto lm = linking_matrix(d);
            std::vector<std::vector<long long>> rows(lm.size(), std::vector<long long>(lm.size()));
            for (std::size_t i = 0; i < lm.size(); ++i)
                for (std::size_t j = 0; j < lm.size(); ++j)
                    rows[i][j] = lm.at(i, j);
            return rows;
        },
        py::arg("diagram"));
    m.def(
        "signature_nullity",
        [](const std::vector<std::vector<long long>>& rows) {
            const auto in = signature_nullity(LinkingMatrix::from_rows(rows));
            return py::make_tuple(in.b_plus, in.b_minus, in.nullity);
        },
        py::arg("matrix"), "(b+, b-, nullity) of a symmetric integer matrix");
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a command-line invocation; returns (exit code, stdout, stderr)");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json_out.hpp"
#include "orbivertex/fock.hpp"
#include "orbivertex/gerbe.hpp"
#include "orbivertex/hurwitz.hpp"
#include "orbivertex/loop_schur.hpp"
#include "orbivertex/suites.hpp"
#include "orbivertex/vertex.hpp"

namespace py = pybind11;
using namespace orbivertex;

// Every entry point returns a JSON document; the Python layer decodes it.
namespace {

std::string char_table_json(int n, int d) { return to_json(*char_table(n, d)).dump(); }

std::string schur_json(int n, const std::string& shape, int k, long order) {
    Partition lbar = parse_partition(shape);
    FactoredSeries F = shifted_schur_factored(lbar, n, k);
    ordered_json j;
    j["factored"] = F.str();
    j["series"] = to_json(F.expand(order));
    return j.dump();
}

std::string gw_vertex_json(const std::string& mu, const std::string& a, long order) {
    return to_json(gw_vertex(parse_multipartition(mu), parse_rational(a), order)).dump();
}

std::string dt_vertex_json(const std::string& lam, const std::string& a, long order) {
    return to_json(dt_vertex(parse_multipartition(lam), parse_rational(a), order)).dump();
}

std::string burnside_json(const std::string& nu, const std::string& mu, long order) {
    return to_json(burnside(parse_multipartition(nu), parse_multipartition(mu), order).value).dump();
}

std::string hurwitz_count(const std::string& nu, const std::string& mu, int r, const std::vector<int>& gamma) {
    return wreath_hurwitz_count_cyc(parse_multipartition(nu), parse_multipartition(mu), r, gamma).str();
}

std::string gerbe_json(int n, int k, const std::string& b, int d, long order) {
    LocalGerbe X{n, k, parse_rational(b)};
    auto gw = gw_potential(X, d, order);
    auto dt = dt_potential(X, d, order);
    CheckReport rep;
    compare_series(gw, dt, X.str(), rep);
    ordered_json j;
    j["gw"] = to_json(gw);
    j["dt"] = to_json(dt);
    j["equal"] = rep.pass;
    return j.dump();
}

std::string verify_json(const std::string& suite, int max_n, int max_d, long order) {
    CheckReport r;
    if (suite == "reduction")
        r = suite_reduction(max_n, max_d, order);
    else if (suite == "relations")
        r = suite_relations(max_n, max_d, order);
    else if (suite == "appendix")
        r = suite_appendix(max_n, max_d);
    else if (suite == "strips")
        r = suite_strips(max_n, 2 * max_d, 2, order);
    else if (suite == "theorem2")
        r = suite_theorem2(max_n, max_d, order);
    else
        throw DomainError("unknown suite " + suite);
    return to_json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_orbivertex, m) {
    m.doc() = "exact orbifold vertex computations";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    m.def("char_table_json", &char_table_json, py::arg("n"), py::arg("d"));
    m.def("schur_json", &schur_json, py::arg("n"), py::arg("shape"), py::arg("k") = 0, py::arg("order") = 6);
    m.def("gw_vertex_json", &gw_vertex_json, py::arg("mu"), py::arg("a") = "0", py::arg("order") = 6);
    m.def("dt_vertex_json", &dt_vertex_json, py::arg("lam"), py::arg("a") = "0", py::arg("order") = 6);
    m.def("burnside_json", &burnside_json, py::arg("nu"), py::arg("mu"), py::arg("order") = 6);
    m.def("hurwitz_count", &hurwitz_count, py::arg("nu"), py::arg("mu"), py::arg("r"), py::arg("gamma"));
    m.def("gerbe_json", &gerbe_json, py::arg("n"), py::arg("k"), py::arg("b"), py::arg("degree"),
          py::arg("order") = 6);
    m.def("verify_json", &verify_json, py::arg("suite"), py::arg("max_n") = 2, py::arg("max_d") = 2,
          py::arg("order") = 6, py::call_guard<py::gil_scoped_release>());
}

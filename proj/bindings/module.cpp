// Python bindings; structured results cross as JSON text and are decoded on the Python side
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msplab/gw0.hpp"
#include "msplab/level0.hpp"
#include "msplab/level1.hpp"
#include "msplab/membership.hpp"
#include "msplab/msp.hpp"
#include "msplab/suite.hpp"
#include "msplab/zz.hpp"

namespace py = pybind11;
using namespace msplab;

namespace {

std::string checks_json(const std::vector<CheckResult>& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(c.to_json());
    return arr.dump();
}

std::string target_json(int k) {
    TargetConfig t = target_config(k);
    return json{{"k", t.k}, {"weights", t.a}, {"p_k", to_string(t.p_k)}, {"r", to_string(t.r)},
                {"ordinary", t.ordinary}, {"band", t.c_vec}}
        .dump();
}

std::string generators_json(int k, int order) {
    Generators g = generators(target_config(k), order);
    json j;
    for (auto [name, s] : std::vector<std::pair<const char*, const Series*>>{
             {"I0", &g.I0}, {"I11", &g.I11}, {"I22", &g.I22}, {"J1", &g.J1}, {"J2", &g.J2}, {"J3", &g.J3},
             {"A", &g.A}, {"B", &g.B}, {"B2", &g.B2}, {"B3", &g.B3}, {"Y", &g.Y}})
        j[name] = series_json(*s);
    return j.dump();
}

std::string genus0_json(int k, int dmax) {
    Genus0Report r = genus0_invariants(target_config(k), dmax);
    json a = json::array(), b = json::array();
    for (size_t d = 1; d < r.N_yukawa.size(); ++d) {
        a.push_back(to_string(r.N_yukawa[d]));
        b.push_back(to_string(r.N_j2[d]));
    }
    return json{{"yukawa_route", a}, {"j2_route", b}}.dump();
}

std::string r_tower_json(int k, int N, int m_max) {
    json arr = json::array();
    for (const auto& p : solve_r_tower(target_config(k), N, m_max)) arr.push_back(poly_json(p));
    return arr.dump();
}

std::string find_polynomial_json(int k, const std::string& name, int degree, int guard, int order) {
    Generators g = generators(target_config(k), order);
    GenSeriesTable tab(g);
    Series s = named_series(g, name);
    return find_polynomial(s, tab, degree, guard).to_json(k).dump();
}

std::string criterion_json(int n) {
    Criterion c = run_criterion(n);
    return c.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact MSP / Yamaguchi-Yau ring checks";
    py::register_exception<InsufficientOrder>(m, "InsufficientOrder", PyExc_ValueError);
    py::register_exception<GuardFailed>(m, "GuardFailed", PyExc_RuntimeError);
    py::register_exception<UnknownTarget>(m, "UnknownTarget", PyExc_ValueError);
    py::register_exception<InvalidN>(m, "InvalidN", PyExc_ValueError);

    m.def("target_config", &target_json, py::arg("k"));
    m.def("generators", &generators_json, py::arg("k"), py::arg("order"));
    m.def("genus0_invariants", &genus0_json, py::arg("k"), py::arg("dmax"));
    m.def("verify_yukawa_identity", [](int k, int order) { return verify_yukawa_identity(target_config(k), order).to_json().dump(); },
          py::arg("k"), py::arg("order"));
    m.def("pf_check", [](int k, int N, int order) { return pf_check(target_config(k), N, order).to_json().dump(); },
          py::arg("k"), py::arg("N"), py::arg("order"));
    m.def("specialized_checks", [](int k, int N, int a_max) { return specialized_checks(target_config(k), N, a_max).to_json().dump(); },
          py::arg("k"), py::arg("N"), py::arg("a_max"));
    m.def("r_tower", &r_tower_json, py::arg("k"), py::arg("N"), py::arg("m_max"));
    m.def("delta_compare", [](int k, int N, int m_max) { return delta_compare(target_config(k), N, m_max).to_json().dump(); },
          py::arg("k"), py::arg("N"), py::arg("m_max") = 4);
    m.def("tail_constants", [](int k, std::vector<int> Ns) { return tail_constants(target_config(k), Ns, 3).to_json().dump(); },
          py::arg("k"), py::arg("Ns"));
    m.def("level0_dual_route", [](int k, int N, int m_max, int order) {
              return level0_dual_route(target_config(k), N, m_max, order, default_zdepth(N, order)).to_json().dump();
          },
          py::arg("k"), py::arg("N"), py::arg("m_max"), py::arg("order"));
    m.def("named_series", &named_series_list);
    m.def("find_polynomial", &find_polynomial_json, py::arg("k"), py::arg("series"), py::arg("degree"),
          py::arg("guard") = 8, py::arg("order") = 30);
    m.def("dclosure_witnesses", [](int k, int order) { return dclosure_witnesses(target_config(k), order).check.to_json().dump(); },
          py::arg("k"), py::arg("order") = 30);
    m.def("verify_zz", [](int k, int order) { return verify_zz(target_config(k), order).to_json().dump(); },
          py::arg("k"), py::arg("order"));
    m.def("verify_all", [](int k, int N, int order, int zdepth) { return checks_json(verify_all(k, N, order, zdepth)); },
          py::arg("k"), py::arg("N"), py::arg("order"), py::arg("zdepth") = 0);
    m.def("run_criterion", &criterion_json, py::arg("number"));
}

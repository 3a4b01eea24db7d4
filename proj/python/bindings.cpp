// Python face of the library: strings in, strings out. Rationals cross the
// boundary as "p/q" text and structured data as JSON, so no precision is
// lost and the module needs no numpy.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lg3/report.hpp"

namespace py = pybind11;
using namespace lg3;

namespace {

Point13 point_of(const std::string& json_text) { return point13_from(Json::parse(json_text)); }

std::string classify_text(const std::string& point_json) {
    Point13 p = point_of(point_json);
    Json out{{"orbit", orbit_name(classify_orbit(p))},
             {"F", rat_json(F_eval(p))},
             {"grad_zero", F_grad(p).is_zero()}};
    return out.dump();
}

std::string exp_map_text(const std::vector<std::string>& upper6) {
    if (upper6.size() != 6)
        throw std::invalid_argument("need 6 entries: x11,x12,x13,x22,x23,x33");
    SymMat3 X;
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) X.at(i, j) = parse_rat(upper6[(std::size_t)n++]);
    return point13_json(exp_map(X)).dump();
}

std::string pivot_text(const std::string& point_json) {
    return point13_json(hat_pivot(point_of(point_json))).dump();
}

std::string dual_quartic_text(std::uint64_t seed) {
    FanoSection sec = random_section(seed);
    return dual_quartic_json(dual_quartic(sec)).dump();
}

std::string verify_text(const std::string& suite, std::uint64_t seed, long trials,
                        unsigned digits10) {
    return report_json(verify_suite(suite, seed, trials, digits10)).dump();
}

std::string section_report_text(std::uint64_t seed, long points, unsigned digits10) {
    FanoSection sec = random_section(seed);
    DualQuartic q = dual_quartic(sec);
    auto params = sample_curve(q, (std::size_t)points, digits10);
    CurveSample cs = pivot_curve(sec, params, digits10);
    vertex_surface(sec, cs);
    FibrationReport fr = fibration_check(cs);
    BigFloat worst(0);
    for (const auto& cp : cs.points)
        if (cp.pivot_residual > worst) worst = cp.pivot_residual;
    Json out{{"seed", seed},
             {"precision", digits10},
             {"points", cs.points.size()},
             {"max_pivot_residual", bigfloat_json(worst, digits10)},
             {"pivots_distinct", cs.pivots_distinct},
             {"fibration_pairs", fr.pairs},
             {"fibration_failures", fr.failures}};
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact geometry of the lagrangian grassmannian LG(3,6) and its linear sections";
    m.def("classify", &classify_text, py::arg("point_json"),
          "orbit report (JSON) for a Point13 given as JSON text");
    m.def("exp_map", &exp_map_text, py::arg("upper_triangle"),
          "variety point (JSON) of a symmetric matrix given as 6 rational strings");
    m.def("pivot", &pivot_text, py::arg("point_json"),
          "pivot of a hyperplane covector lying on the invariant quartic");
    m.def("f_value", [](const std::string& pj) { return rat_str(F_eval(point_of(pj))); },
          py::arg("point_json"), "value of the invariant quartic, as an exact rational string");
    m.def("sigma_residual", [](const std::string& pj) { return rat_str(sigma_residual(point_of(pj))); },
          py::arg("point_json"), "max quadric violation at the point, 0 iff on the variety");
    m.def("random_section", &dual_quartic_text, py::arg("seed"),
          "dual plane quartic (JSON) of a seeded random linear section");
    m.def("verify_suite", &verify_text, py::arg("suite"), py::arg("seed") = 1,
          py::arg("trials") = 50, py::arg("digits") = kDefaultDigits,
          "run one invariant suite, returning the JSON report");
    m.def("section_report", &section_report_text, py::arg("seed"), py::arg("points") = 8,
          py::arg("digits") = kDefaultDigits,
          "sampled pivot-curve and fibration summary for a seeded section");
}

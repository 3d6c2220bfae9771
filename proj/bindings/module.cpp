#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stratmorse/milnor.hpp"
#include "stratmorse/polar.hpp"
#include "stratmorse/run.hpp"

namespace py = pybind11;
using namespace stratmorse;

namespace {

// run one job given as file text, return the structured report as a JSON
// string plus the exit-style flag
py::dict run_text(const std::string& text) {
    JobSpec job = parse_input(text);
    Report report = run(job);
    py::dict out;
    out["ok"] = report.all_ok;
    out["structured"] = render_structured(report);
    out["text"] = render_text(report);
    return out;
}

py::object morse_pairs_text(const std::string& text) {
    JobSpec job = parse_input(text);
    if (!job.l) throw std::invalid_argument("morse_pairs needs an explicit l");
    MorsePairSet set = morse_pairs(job.germ, job.f, *job.l);
    py::list pairs;
    for (const auto& p : set.pairs) {
        py::dict d;
        d["stratum"] = p.stratum;
        d["dim"] = p.dim;
        d["morse_number"] = p.morse;
        d["mult_f"] = p.mult_f;
        d["mult_l"] = p.mult_l;
        pairs.append(d);
    }
    return pairs;
}

py::object milnor(const std::string& poly, const std::vector<std::string>& variables,
                  std::uint32_t degree_bound) {
    Polynomial f = parse_polynomial(poly, variables);
    auto mu = milnor_oracle(f, degree_bound);
    if (!mu) return py::none();
    return py::int_(*mu);
}

unsigned long local_mult(const std::vector<std::string>& gens,
                         const std::vector<std::string>& variables) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(parse_polynomial(g, variables));
    Ideal I(variables.size(), std::move(polys));
    auto m = local_multiplicity(I);
    if (!m) throw std::overflow_error("infinite local multiplicity");
    return *m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Morse pairs of function germs on stratified spaces";
    m.def("run", &run_text, py::arg("text"),
          "Parse a germ description and run the full pipeline; returns ok, "
          "structured (JSON string) and text renderings.");
    m.def("morse_pairs", &morse_pairs_text, py::arg("text"),
          "Morse pairs for a germ description with an explicit linear form.");
    m.def("milnor_oracle", &milnor, py::arg("poly"), py::arg("variables"),
          py::arg("degree_bound") = 12,
          "Brute-force Milnor number; None when the bound is inconclusive.");
    m.def("local_multiplicity", &local_mult, py::arg("generators"), py::arg("variables"),
          "Local multiplicity of the quotient by the given ideal at the origin.");
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qweyl/casimir.hpp"
#include "qweyl/coxrep.hpp"
#include "qweyl/periods.hpp"
#include "qweyl/salvetti.hpp"
#include "qweyl/uqmodule.hpp"

namespace py = pybind11;
using namespace qweyl;

namespace {

QuantumModule make_module(const std::string& type, const std::vector<long>& weight) {
    return QuantumModule(CartanDatum::of_type(type), Weight{weight});
}

std::vector<std::vector<std::string>> render(
    const std::vector<std::vector<RatFunc>>& m) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : m) {
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(e.str());
        out.push_back(r);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_qweyl, m) {
    m.doc() = "quantum Weyl group representations and monodromy checks";

    py::class_<QuantumModule>(m, "QuantumModule")
        .def(py::init(&make_module), py::arg("type"), py::arg("weight"))
        .def_property_readonly("dim", &QuantumModule::dim)
        .def("weights",
             [](const QuantumModule& M) {
                 std::vector<std::vector<long>> out;
                 for (const Weight& w : M.weights()) out.push_back(w.c);
                 return out;
             })
        .def("multiplicity", [](const QuantumModule& M, const std::vector<long>& w) {
            return M.multiplicity(Weight{w});
        });

    m.def(
        "verify_alge",
        [](long mu1, long mu2) {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const FormulaCheck& c : verify_alge(mu1, mu2))
                out.emplace_back(c.name, c.ok, c.detail);
            return out;
        },
        py::arg("mu1"), py::arg("mu2"),
        "Closed-form symmetry identities on the extreme-orbit weight spaces of "
        "the A2 module L(mu1, mu2); returns (name, ok, detail) per identity.");

    m.def("verify_braid", &verify_braid, py::arg("module"),
          "Exact braid relations of the wall-crossing representation.");

    m.def(
        "adjoint_zero_weight_matrix",
        [](int i, int e) { return render(adjoint_zero_weight_matrix(i, e)); },
        py::arg("i"), py::arg("sign"),
        "Exact matrix of T'_{i+1,sign} on the zero weight space of L(1,1), "
        "entries rendered as Laurent expressions in v.");

    m.def(
        "product_composite_matrix",
        [](long mu1, long mu2, int sign) {
            CartanDatum cd = CartanDatum::of_type("A2");
            QuantumModule M(cd, Weight{{mu1, mu2}});
            GroupoidRep rep(M);
            ChamberComplex cc(cd, {0, 1});
            return render(product_composite_matrix(rep, cc, sign));
        },
        py::arg("mu1"), py::arg("mu2"), py::arg("sign"),
        "Composite holonomy across the three walls, from the first to the "
        "last canonical basis; equals v^{sign (mu1+mu2+1)} Id.");

    m.def(
        "half_monodromy",
        [](const std::vector<int>& y, const std::vector<int>& w, int sign,
           const std::array<Complex, 3>& mu, double kappa, double tol) {
            TransportResult r = half_monodromy(y, w, sign, mu, kappa, tol);
            return py::make_tuple(r.matrix, r.error);
        },
        py::arg("y"), py::arg("w"), py::arg("sign"), py::arg("mu"),
        py::arg("kappa") = 0.1, py::arg("tol") = 1e-6,
        "Twisted-period half-monodromy matrix between neighboring chambers y "
        "and w (as reduced words) with the given detour sign; returns "
        "(matrix, error_estimate).");

    m.def(
        "casimir_compare",
        [](const std::string& type, const std::vector<long>& weight, double kappa,
           double tol) {
            CartanDatum cd = CartanDatum::of_type(type);
            QuantumModule M(cd, Weight{weight});
            std::vector<int> full(cd.rank());
            for (int i = 0; i < cd.rank(); ++i) full[i] = i;
            ChamberComplex cc(cd, full);
            GroupoidPath loop{cc.base(), {{0, +1}, {0, -1}}};
            QuantumComparison q = compare_with_quantum(M, loop, kappa, tol);
            py::dict d;
            d["casimir"] = q.casimir;
            d["plain"] = q.plain;
            d["eig_distance_plain"] = q.eig_distance_plain;
            d["gauge_residual_plain"] = q.gauge_residual_plain;
            d["integration_error"] = q.casimir_error;
            d["tl_valid"] = q.tl_valid;
            if (q.tl_valid) {
                d["tl"] = q.tl;
                d["eig_distance_tl"] = q.eig_distance_tl;
                d["gauge_residual_tl"] = q.gauge_residual_tl;
            }
            return d;
        },
        py::arg("type"), py::arg("weight"), py::arg("kappa") = 0.1,
        py::arg("tol") = 1e-8,
        "Casimir-connection holonomy of the squared first-wall crossing, "
        "compared with the quantum holonomies at zeta = exp(i pi kappa).");

    m.def(
        "weyl_dimension",
        [](const std::string& type, const std::vector<long>& weight) {
            CartanDatum cd = CartanDatum::of_type(type);
            return weyl_dimension(cd, Weight{weight});
        },
        py::arg("type"), py::arg("weight"));
}

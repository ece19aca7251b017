// Python bindings. Matrices are lists of rows; indices are 0-based.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropreg/auction.hpp"
#include "tropreg/dominions.hpp"
#include "tropreg/regression.hpp"

namespace py = pybind11;
using namespace tropreg;

namespace {

TropMatrix mat(const std::vector<Vec>& rows) { return TropMatrix::from_rows(rows); }

SolverConfig config(const std::string& method, double eps, double gamma, long max_iter) {
  SolverConfig c;
  c.method = parse_method(method);
  c.epsilon = eps;
  c.gamma = gamma;
  c.max_iter = max_iter;
  c.validate();
  return c;
}

PartitionIJ partition(const Index& I, const Index& J) {
  PartitionIJ p;
  p.I = I;
  p.J = J;
  return p;
}

#define SOLVER_ARGS py::arg("method") = "km", py::arg("eps") = 1e-8, py::arg("gamma") = 0.5, py::arg("max_iter") = 1000000L

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tropical linear regression";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DegenerateOperator>(m, "DegenerateOperator", PyExc_RuntimeError);
  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);
  py::register_exception<CertificateError>(m, "CertificateError", PyExc_RuntimeError);

  py::class_<SpectralCertificate>(m, "SpectralCertificate")
      .def_property_readonly("method", [](const SpectralCertificate& c) { return to_string(c.method); })
      .def_readonly("rho", &SpectralCertificate::rho)
      .def_property_readonly("rho_rational",
                             [](const SpectralCertificate& c) -> std::optional<std::pair<long long, long long>> {
                               if (!c.rho_exact) return std::nullopt;
                               return std::pair{c.rho_exact->num, c.rho_exact->den};
                             })
      .def_readonly("lower", &SpectralCertificate::lower)
      .def_readonly("upper", &SpectralCertificate::upper)
      .def_readonly("eigenvector", &SpectralCertificate::eigenvector)
      .def_readonly("sub", &SpectralCertificate::sub)
      .def_readonly("super", &SpectralCertificate::super)
      .def_readonly("sub_ok", &SpectralCertificate::sub_ok)
      .def_readonly("super_ok", &SpectralCertificate::super_ok)
      .def_readonly("residual", &SpectralCertificate::residual)
      .def_readonly("iterations", &SpectralCertificate::iterations)
      .def_readonly("converged", &SpectralCertificate::converged)
      .def_readonly("part", &SpectralCertificate::part)
      .def_readonly("note", &SpectralCertificate::note);

  py::class_<InradiusResult>(m, "InradiusResult")
      .def_readonly("radius", &InradiusResult::radius)
      .def_readonly("center", &InradiusResult::center)
      .def_readonly("cert", &InradiusResult::cert);

  py::class_<RegressionResult>(m, "RegressionResult")
      .def_readonly("apex", &RegressionResult::apex)
      .def_readonly("value", &RegressionResult::value)
      .def_readonly("apex_verified", &RegressionResult::apex_verified)
      .def_readonly("ball_center", &RegressionResult::ball_center)
      .def_readonly("ball_radius", &RegressionResult::ball_radius)
      .def_property_readonly("witness_columns",
                             [](const RegressionResult& r) -> std::optional<Index> {
                               if (!r.witnesses) return std::nullopt;
                               return r.witnesses->columns;
                             })
      .def_readonly("simplicial_support", &RegressionResult::simplicial)
      .def_readonly("class_distances", &RegressionResult::class_distances)
      .def_readonly("cert", &RegressionResult::cert);

  py::class_<SignedRegressionResult>(m, "SignedRegressionResult")
      .def_readonly("apex", &SignedRegressionResult::apex)
      .def_readonly("value", &SignedRegressionResult::value)
      .def_readonly("apex_verified", &SignedRegressionResult::apex_verified)
      .def_readonly("interval_center", &SignedRegressionResult::interval_center)
      .def_readonly("interval_verified", &SignedRegressionResult::interval_verified)
      .def_readonly("cert", &SignedRegressionResult::cert);

  py::class_<DominionReport>(m, "DominionReport")
      .def_readonly("found", &DominionReport::found)
      .def_readonly("S", &DominionReport::S)
      .def_readonly("max_dominion", &DominionReport::max_dominion)
      .def_readonly("K", &DominionReport::K)
      .def_readonly("ops", &DominionReport::ops)
      .def_property_readonly("verdict", [](const DominionReport& r) { return to_string(r.verdict); })
      .def_readonly("message", &DominionReport::message);

  py::class_<AuctionInstance>(m, "AuctionInstance")
      .def_readonly("prices", &AuctionInstance::prices)
      .def_readonly("f", &AuctionInstance::f)
      .def_readonly("reference_prices", &AuctionInstance::reference_prices)
      .def_readonly("delta", &AuctionInstance::delta)
      .def_readonly("seed", &AuctionInstance::seed)
      .def_readonly("winners", &AuctionInstance::winners);

  py::class_<InferenceReport>(m, "InferenceReport")
      .def_readonly("f_reg", &InferenceReport::f_reg)
      .def_readonly("apex", &InferenceReport::apex)
      .def_readonly("value", &InferenceReport::value)
      .def_readonly("distance", &InferenceReport::distance)
      .def_property_readonly("e", [](const InferenceReport& r) -> std::optional<double> {
        if (!r.e_defined) return std::nullopt;
        return r.e;
      })
      .def_readonly("typed", &InferenceReport::typed)
      .def_readonly("class_distances", &InferenceReport::class_distances)
      .def_readonly("untyped_apex", &InferenceReport::untyped_apex)
      .def_readonly("untyped_value", &InferenceReport::untyped_value)
      .def_readonly("cert", &InferenceReport::cert);

  m.def("hilbert_distance", &hilbert_distance, py::arg("x"), py::arg("y"));
  m.def("hyperplane_distance", &hyperplane_distance, py::arg("x"), py::arg("a"));
  m.def(
      "signed_distance",
      [](const Vec& x, const Vec& a, const Index& I, const Index& J) { return signed_distance(x, a, partition(I, J)); },
      py::arg("x"), py::arg("a"), py::arg("I"), py::arg("J"));
  m.def(
      "cone_project", [](const std::vector<Vec>& V, const Vec& x) { return cone_project(mat(V), x); }, py::arg("V"),
      py::arg("x"));
  m.def(
      "in_column_space", [](const std::vector<Vec>& V, const Vec& x, double tol) { return in_column_space(mat(V), x, tol); },
      py::arg("V"), py::arg("x"), py::arg("tol") = 1e-9);
  m.def(
      "spectral_radius",
      [](const std::vector<Vec>& V, const std::string& method, double eps, double gamma, long max_iter) {
        return solve(PlainOperator(mat(V)), config(method, eps, gamma, max_iter));
      },
      py::arg("V"), SOLVER_ARGS);
  m.def(
      "inradius",
      [](const std::vector<Vec>& V, const std::string& method, double eps, double gamma, long max_iter) {
        return inradius(mat(V), config(method, eps, gamma, max_iter));
      },
      py::arg("V"), SOLVER_ARGS);
  m.def(
      "best_hyperplane",
      [](const std::vector<Vec>& V, const std::string& method, double eps, double gamma, long max_iter) {
        return best_hyperplane(mat(V), config(method, eps, gamma, max_iter));
      },
      py::arg("V"), SOLVER_ARGS);
  m.def(
      "regress_signed",
      [](const std::vector<Vec>& V, const Index& I, const Index& J, const std::string& method, double eps,
         double gamma, long max_iter) {
        return regress_signed(mat(V), partition(I, J), config(method, eps, gamma, max_iter));
      },
      py::arg("V"), py::arg("I"), py::arg("J"), SOLVER_ARGS);
  m.def(
      "regress_typed",
      [](const std::vector<Vec>& V, const Index& types, const std::string& method, double eps, double gamma,
         long max_iter) { return regress_typed(mat(V), types, config(method, eps, gamma, max_iter)); },
      py::arg("V"), py::arg("types"), SOLVER_ARGS);
  m.def(
      "detect_dominions", [](const std::vector<Vec>& V) { return dominion_report(mat(V)); }, py::arg("V"));
  m.def(
      "simulate",
      [](std::size_t firms, std::size_t tenders, const Vec& factors, const Vec& reference_prices, double delta,
         std::uint64_t seed) {
        AuctionParams p;
        p.n = firms;
        p.q = tenders;
        p.f = factors;
        p.reference_prices = reference_prices;
        p.delta = delta;
        p.seed = seed;
        return simulate(p);
      },
      py::arg("firms") = 3, py::arg("tenders") = 6, py::arg("factors") = Vec{1.0, 0.8, 0.6},
      py::arg("reference_prices") = Vec{}, py::arg("delta") = 0.05, py::arg("seed") = 42);
  m.def(
      "determine_winners", [](const std::vector<Vec>& prices, const Vec& f) { return determine_winners(prices, f); },
      py::arg("prices"), py::arg("f"));
  m.def(
      "infer",
      [](const std::vector<Vec>& prices, const std::optional<Index>& winners) { return infer(prices, winners); },
      py::arg("prices"), py::arg("winners") = std::nullopt);
}

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "srcid/cli.hpp"
#include "srcid/det_rep.hpp"
#include "srcid/engine.hpp"
#include "srcid/report.hpp"
#include "srcid/scalar.hpp"
#include "srcid/source.hpp"

namespace py = pybind11;
using namespace srcid;

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(Rational::parse(x));
    return out;
}

Side side_of(const std::string& s) {
    if (s == "F") return Side::F;
    if (s == "G") return Side::G;
    if (s == "P") return Side::P;
    if (s == "Q") return Side::Q;
    throw DomainError("side must be one of F, G, P, Q");
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
        py::gil_scoped_release release;
        code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

std::vector<py::dict> list_cases() {
    std::vector<py::dict> out;
    for (const CaseDef& def : case_registry()) {
        py::dict d;
        d["id"] = def.info.id;
        d["anchor"] = def.info.anchor;
        d["regime"] = def.info.regime;
        d["group"] = def.info.group;
        d["description"] = def.info.description;
        std::vector<std::string> fields;
        if (def.info.exact_field) fields.emplace_back("exact");
        if (def.info.complex_field) fields.emplace_back("complex");
        d["fields"] = fields;
        out.push_back(d);
    }
    return out;
}

std::string verify_json(const std::vector<std::string>& cases, std::optional<std::string> regime, std::uint64_t seed,
                        std::optional<int> points, std::optional<int> nmax, std::optional<std::string> field,
                        std::optional<double> tol, double tol_singular, int threads) {
    SamplingConfig cfg;
    cfg.master_seed = seed;
    cfg.points = points;
    cfg.nmax = nmax;
    if (field) cfg.field = parse_field(*field);
    cfg.tol_match = tol;
    cfg.tol_singular = tol_singular;
    cfg.threads = threads;
    cfg.validate();
    const Selection sel{cases, regime};
    py::gil_scoped_release release;
    return to_json(run_verification(sel, cfg), false);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Subset-sum source identities: evaluators and verification engine";

    // translators run most-recent first, so the base class goes first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
    py::register_exception<SingularError>(m, "SingularError", PyExc_ZeroDivisionError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("run_cli", &cli, py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
    m.def("list_cases", &list_cases);
    m.def("verify_json", &verify_json, py::arg("cases"), py::arg("regime"), py::arg("seed"), py::arg("points"),
          py::arg("nmax"), py::arg("field"), py::arg("tol"), py::arg("tol_singular"), py::arg("threads"));

    m.def("theta", [](Complex u, Complex p) { return theta(u, p); }, py::arg("u"), py::arg("p"));
    m.def("qpoch_inf", [](Complex u, Complex q) { return qpoch_inf(u, q); }, py::arg("u"), py::arg("q"));
    m.def("qpoch_n", [](Complex u, Complex q, long n) { return qpoch_n(u, q, n); }, py::arg("u"), py::arg("q"),
          py::arg("n"));
    m.def(
        "q_binomial_exact",
        [](long n, long l, const std::string& q) { return q_binomial(n, l, Rational::parse(q)).str(); },
        py::arg("n"), py::arg("l"), py::arg("q"));

    m.def(
        "rational_source_exact",
        [](const std::string& c, const std::string& z, const std::vector<std::string>& u,
           const std::vector<std::string>& v, const std::string& side) {
            RationalParams<Rational> rp{Rational::parse(c), Rational::parse(z), parse_all(u), parse_all(v)};
            return rational_source(rp, side_of(side)).str();
        },
        py::arg("c"), py::arg("z"), py::arg("u"), py::arg("v"), py::arg("side"));
    m.def(
        "rational_source_complex",
        [](Complex c, Complex z, std::vector<Complex> u, std::vector<Complex> v, const std::string& side) {
            return rational_source(RationalParams<Complex>{c, z, std::move(u), std::move(v)}, side_of(side));
        },
        py::arg("c"), py::arg("z"), py::arg("u"), py::arg("v"), py::arg("side"));
    m.def(
        "trig_source_exact",
        [](const std::string& q, const std::string& z, const std::vector<std::string>& u,
           const std::vector<std::string>& v, const std::string& side) {
            TrigParams<Rational> tp{Rational::parse(q), Rational::parse(z), parse_all(u), parse_all(v), {}};
            return trig_source(tp, side_of(side)).str();
        },
        py::arg("q"), py::arg("z"), py::arg("u"), py::arg("v"), py::arg("side"));
    m.def(
        "trig_source_complex",
        [](Complex q, Complex z, std::vector<Complex> u, std::vector<Complex> v, const std::string& side) {
            return trig_source(TrigParams<Complex>{q, z, std::move(u), std::move(v), {}}, side_of(side));
        },
        py::arg("q"), py::arg("z"), py::arg("u"), py::arg("v"), py::arg("side"));
    m.def(
        "elliptic_source",
        [](Complex p, Complex q, Complex lambda, Complex z, std::vector<Complex> u, std::vector<Complex> v,
           const std::string& side) {
            return elliptic_source(EllipticParams<Complex>{p, q, lambda, z, std::move(u), std::move(v)},
                                   side_of(side));
        },
        py::arg("p"), py::arg("q"), py::arg("lam"), py::arg("z"), py::arg("u"), py::arg("v"), py::arg("side"));
    m.def(
        "izergin_korepin_exact",
        [](const std::vector<std::string>& u, const std::vector<std::string>& v, const std::string& c) {
            return izergin_korepin(parse_all(u), parse_all(v), Rational::parse(c)).str();
        },
        py::arg("u"), py::arg("v"), py::arg("c"));
}

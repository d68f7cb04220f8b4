#include "coingame/analysis.hpp"
#include "coingame/game.hpp"
#include "coingame/limits_above.hpp"
#include "coingame/montecarlo.hpp"
#include "coingame/numerics.hpp"
#include "coingame/perturbation.hpp"
#include "coingame/policy.hpp"
#include "coingame/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace coingame;

namespace {

py::object to_fraction(const Rational& x)
{
        static py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(x.to_string());
}

// Accepts str, int or fractions.Fraction; floats are refused because their
// binary value is rarely the probability the caller meant.
Rational to_rational(const py::handle& obj)
{
        if (py::isinstance<py::float_>(obj))
                throw py::type_error("pass probabilities as str or fractions.Fraction, not float");
        if (py::isinstance<py::str>(obj))
                return Rational::parse(obj.cast<std::string>());
        return Rational::parse(py::str(obj).cast<std::string>());
}

Prob to_prob(const py::handle& obj)
{
        return Prob(to_rational(obj));
}

py::tuple bounded(const BoundedValue& v)
{
        return py::make_tuple(to_fraction(v.approx), to_fraction(v.error_radius));
}

py::list fractions(const std::vector<Rational>& xs)
{
        py::list out;
        for (const auto& x : xs)
                out.append(to_fraction(x));
        return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
        m.doc() = "Exact solver for the sequential coin-flipping game";

        py::register_exception_translator([](std::exception_ptr p) {
                try {
                        if (p)
                                std::rethrow_exception(p);
                } catch (const std::domain_error& e) {
                        PyErr_SetString(PyExc_ValueError, e.what());
                }
        });

        m.def(
            "w_value", [](std::size_t n, const py::object& p) { return to_fraction(w_table(to_prob(p), n).values[n]); },
            py::arg("n"), py::arg("p"), "Optimal winning probability with n coins.");
        m.def(
            "w_values", [](std::size_t n_max, const py::object& p) { return fractions(w_table(to_prob(p), n_max).values); },
            py::arg("n_max"), py::arg("p"), "Optimal values for n = 0..n_max.");
        m.def(
            "a_value", [](std::size_t n, const py::object& p) { return to_fraction(a_value(n, to_prob(p))); },
            py::arg("n"), py::arg("p"), "Value of keeping one head per round.");
        m.def(
            "b_value", [](std::size_t n, const py::object& p) { return to_fraction(b_value(n, to_prob(p))); },
            py::arg("n"), py::arg("p"), "Value of keeping every head.");
        m.def(
            "deficit", [](std::size_t n, const py::object& p) { return to_fraction(deficit(n, to_prob(p))); },
            py::arg("n"), py::arg("p"), "1/2 minus the optimal value.");
        m.def(
            "c_values", [](std::size_t n_max) { return fractions(c_table(n_max).values); }, py::arg("n_max"),
            "First-order deficit coefficients c_1..c_n_max.");
        m.def(
            "limit_L", [](const py::object& tol) { return bounded(limit_L(to_rational(tol))); },
            py::arg("tolerance") = "1e-21", "(approx, radius) for the limit of c_n.");
        m.def(
            "limit_W",
            [](const py::object& p, const py::object& tol, std::size_t bits) {
                    return bounded(limit_W(to_prob(p), to_rational(tol), IterationOptions{bits}));
            },
            py::arg("p"), py::arg("tolerance") = "1e-6", py::arg("bits") = 256,
            "(approx, radius) for the large-n limit when p > 1/2.");
        m.def(
            "extrema",
            [](const py::object& p, std::size_t n_max) {
                    const ExtremaReport r = extrema_scan(to_prob(p), n_max);
                    return py::make_tuple(r.minima, r.maxima);
            },
            py::arg("p"), py::arg("n_max") = 20, "(minima, maxima) of n -> w over 2..n_max.");
        m.def(
            "value_table",
            [](const std::vector<py::object>& ps, std::size_t n_max, unsigned digits) {
                    std::vector<Prob> probs;
                    for (const auto& p : ps)
                            probs.push_back(to_prob(p));
                    return value_table(probs, n_max, digits).cells;
            },
            py::arg("ps"), py::arg("n_max") = 20, py::arg("digits") = 8, "Rows of decimal strings, one per n.");
        m.def(
            "to_decimal", [](const py::object& x, unsigned digits) { return to_decimal(to_rational(x), digits).digits; },
            py::arg("x"), py::arg("digits"), "Round-half-even decimal rendering.");
        m.def(
            "brute_force",
            [](std::size_t n, const py::object& p) {
                    const BruteForceResult r = brute_force(n, to_prob(p));
                    return py::make_tuple(to_fraction(r.best), r.policies);
            },
            py::arg("n"), py::arg("p"), "(best value, policies enumerated) for n <= 6.");
        m.def(
            "simulate",
            [](std::size_t n, const py::object& p, const std::string& policy, std::uint64_t trials, std::uint64_t seed,
               unsigned threads, bool compare) {
                    const Prob prob = to_prob(p);
                    Policy pi = policy == "one"   ? make_one(n)
                                : policy == "all" ? make_all(n)
                                : policy == "optimal"
                                    ? make_policy(StrategyKind::Optimal, n, prob)
                                    : throw std::invalid_argument("policy must be one, all or optimal");
                    std::optional<Rational> analytic;
                    if (compare)
                            analytic = eval_policy(pi, n, prob);
                    const SimResult r = simulate({n, prob, trials, seed, pi, threads}, analytic);
                    py::dict out;
                    out["wins"] = r.wins;
                    out["trials"] = r.trials;
                    out["estimate"] = r.estimate;
                    out["std_error"] = r.std_error;
                    out["z"] = r.z_vs ? py::object(py::float_(*r.z_vs)) : py::object(py::none());
                    return out;
            },
            py::arg("n"), py::arg("p"), py::arg("policy") = "optimal", py::arg("trials") = 100000,
            py::arg("seed") = 0, py::arg("threads") = 1, py::arg("compare") = true,
            "Monte Carlo estimate, optionally with a z-score against the exact policy value.");
        m.def(
            "verify",
            [](const std::string& suite) {
                    py::list out;
                    for (const auto& r : run_verify_suite(suite)) {
                            py::dict d;
                            d["suite"] = r.suite;
                            d["name"] = r.name;
                            d["passed"] = r.passed;
                            d["detail"] = r.detail;
                            out.append(d);
                    }
                    return out;
            },
            py::arg("suite") = "all", "Run an exact verification suite.");
}

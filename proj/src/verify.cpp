#include "coingame/verify.hpp"

#include "coingame/analysis.hpp"
#include "coingame/game.hpp"
#include "coingame/limits_above.hpp"
#include "coingame/numerics.hpp"
#include "coingame/perturbation.hpp"
#include "coingame/policy.hpp"
#include "coingame/reference_values.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace coingame {

namespace {

using Counterexample = std::optional<std::string>;

struct Suite {
        std::string name;
        std::vector<CheckResult> results;

        void check(std::string check_name, const std::function<Counterexample()>& body)
        {
                CheckResult r{name, std::move(check_name), true, {}};
                try {
                        if (auto bad = body()) {
                                r.passed = false;
                                r.detail = *bad;
                        }
                } catch (const std::exception& e) {
                        r.passed = false;
                        r.detail = std::string("exception: ") + e.what();
                }
                results.push_back(std::move(r));
        }
};

template <typename... Parts>
std::string describe(const Parts&... parts)
{
        std::ostringstream os;
        (os << ... << parts);
        return os.str();
}

std::string list(const std::vector<std::size_t>& xs)
{
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i)
                out += (i ? ";" : "") + std::to_string(xs[i]);
        return out.empty() ? "-" : out;
}

const std::vector<Rational>& above_half_probs()
{
        static const std::vector<Rational> probs{Rational(51, 100), Rational(11, 20), Rational(3, 5),
                                                 Rational(7, 10), Rational(9, 10)};
        return probs;
}

void identities(Suite& s)
{
        s.check("algebraic identity A_n - 27/16 B_n + delta_n = 0, n = 1..64", []() -> Counterexample {
                for (std::size_t n = 1; n <= 64; ++n)
                        if (auto r = alg_identity_residual(n); !r.is_zero())
                                return describe("n=", n, " residual=", r);
                return std::nullopt;
        });
        const CnTable table = c_table(80);
        s.check("linear recursion c_n = A_n + (1 - B_n) c_{n-1}, n = 7..80", [&]() -> Counterexample {
                for (std::size_t n = 7; n <= 80; ++n)
                        if (c_linear(n, table) != table.c(n))
                                return describe("n=", n, " linear=", c_linear(n, table), " table=", table.c(n));
                return std::nullopt;
        });
        s.check("suffix-minimum collapse, 7 <= n <= 60", [&]() -> Counterexample {
                for (std::size_t n = 7; n <= 60; ++n)
                        for (std::size_t j = 1; j < n; ++j) {
                                Rational brute = table.c(j);
                                for (std::size_t m = j + 1; m < n; ++m)
                                        brute = min(brute, table.c(m));
                                if (collapse_min(j, n, table) != brute)
                                        return describe("n=", n, " j=", j, " brute=", brute);
                        }
                return std::nullopt;
        });
        s.check("c_n dyadic, c_n >= 27/16 (n >= 4), strictly decreasing from n = 5, n <= 80",
                [&]() -> Counterexample {
                        for (std::size_t n = 1; n <= 80; ++n) {
                                if (!table.c(n).is_dyadic())
                                        return describe("c_", n, "=", table.c(n), " not dyadic");
                                if (n >= 4 && table.c(n) < Rational(27, 16))
                                        return describe("c_", n, "=", table.c(n), " below 27/16");
                                if (n >= 6 && !(table.c(n) < table.c(n - 1)))
                                        return describe("c_", n, " >= c_", n - 1);
                        }
                        return std::nullopt;
                });
        s.check("deficit recursion residual = 0, n <= 15, p in {2/5, 1/2, 7/10}", []() -> Counterexample {
                for (const Rational& pv : {Rational(2, 5), Rational(1, 2), Rational(7, 10)})
                        for (std::size_t n = 1; n <= 15; ++n)
                                if (auto r = deficit_recursion_residual(n, Prob(pv)); !r.is_zero())
                                        return describe("p=", pv, " n=", n, " residual=", r);
                return std::nullopt;
        });
        s.check("tail bounds: sum_{n>=13} delta_n <= 297/65536 < 1/200, sum_{n>=13} B_n < 1/8", []() -> Counterexample {
                const std::vector<Rational> square{Rational(0), Rational(0), Rational(3, 32)};
                const Rational dominator = poly_geo_tail(square, 12);
                if (dominator != Rational(297, 65536))
                        return describe("(3/32) sum n^2/2^n = ", dominator);
                if (!(tail_delta(12) <= dominator) || !(dominator < Rational(1, 200)))
                        return describe("tail_delta(12)=", tail_delta(12));
                if (!(tail_B(12) < Rational(1, 8)))
                        return describe("tail_B(12)=", tail_B(12));
                return std::nullopt;
        });
        s.check("starting buffer c_12 - 27/16 > 1/60", []() -> Counterexample {
                if (!eps_buffer_check())
                        return describe("c_12=", c_table(12).c(12));
                return std::nullopt;
        });
}

void theorems(Suite& s)
{
        s.check("fair coin: w = a = b = 1/2, n <= 30", []() -> Counterexample {
                const Prob half(Rational(1, 2));
                const auto w = w_table(half, 30).values;
                const auto a = a_values(30, half);
                const auto b = b_values(30, half);
                for (std::size_t n = 1; n <= 30; ++n)
                        if (w[n] != Rational(1, 2) || a[n] != Rational(1, 2) || b[n] != Rational(1, 2))
                                return describe("n=", n, " w=", w[n], " a=", a[n], " b=", b[n]);
                return std::nullopt;
        });
        for (const Rational& pv : above_half_probs()) {
                const Prob p(pv);
                const auto w = w_table(p, 30).values;
                s.check(describe("p=", to_exact_string(pv), ": strictly increasing, w = a, linear recursion, n <= 30"),
                        [&]() -> Counterexample {
                                const auto a = a_values(30, p);
                                const auto lin = w_above_values(30, p);
                                for (std::size_t n = 1; n <= 30; ++n) {
                                        if (!(w[n] > w[n - 1]) && n > 1)
                                                return describe("n=", n, " not increasing");
                                        if (w[n] != a[n])
                                                return describe("n=", n, " w=", w[n], " a=", a[n]);
                                        if (w[n] != lin[n])
                                                return describe("n=", n, " w=", w[n], " recursion=", lin[n]);
                                }
                                return std::nullopt;
                        });
                s.check(describe("p=", to_exact_string(pv), ": w_{n-1} < p^n/(p^n+q^n), n = 2..30"),
                        [&]() -> Counterexample {
                                for (std::size_t n = 2; n <= 30; ++n) {
                                        const Rational pn = pv.pow(n), qn = p.q().pow(n);
                                        if (!(w[n - 1] < pn / (pn + qn)))
                                                return describe("n=", n);
                                }
                                return std::nullopt;
                        });
        }
        s.check("deficit sign: positive below 1/2, negative above, n <= 20", []() -> Counterexample {
                for (const Rational& pv : {Rational(49, 100), Rational(45, 100), Rational(42, 100), Rational(35, 100),
                                           Rational(1, 4), Rational(51, 100), Rational(3, 5), Rational(9, 10)}) {
                        const auto w = w_table(Prob(pv), 20).values;
                        for (std::size_t n = 1; n <= 20; ++n) {
                                const Rational d = Rational(1, 2) - w[n];
                                if ((pv < Rational(1, 2)) != (d.sign() > 0) || d.is_zero())
                                        return describe("p=", pv, " n=", n, " deficit=", d);
                        }
                }
                return std::nullopt;
        });
}

void tables(Suite& s)
{
        s.check("value table: 100 cells at 8 decimals", []() -> Counterexample {
                std::vector<Prob> probs;
                for (auto p : reference::kTableProbs)
                        probs.push_back(Prob::parse(p));
                const ValueTableRows rows = value_table(probs, 20, 8);
                for (std::size_t n = 1; n <= 20; ++n)
                        for (std::size_t i = 0; i < probs.size(); ++i)
                                if (rows.cells[n - 1][i] != reference::kValueTable[n - 1][i])
                                        return describe("n=", n, " p=", reference::kTableProbs[i], " got ",
                                                        rows.cells[n - 1][i], " expected ",
                                                        reference::kValueTable[n - 1][i]);
                return std::nullopt;
        });
        s.check("local extrema table, n in [2,19]", []() -> Counterexample {
                for (const auto& row : reference::kExtremaTable) {
                        const ExtremaReport r = extrema_scan(Prob::parse(row.p), 20);
                        if (r.minima != row.minima || r.maxima != row.maxima)
                                return describe("p=", row.p, " minima=", list(r.minima), " maxima=", list(r.maxima));
                }
                return std::nullopt;
        });
        s.check("c_1 .. c_6", []() -> Counterexample {
                const CnTable t = c_table(6);
                for (std::size_t n = 1; n <= 6; ++n)
                        if (t.c(n) != Rational::parse(reference::kFirstCoefficients[n - 1]))
                                return describe("c_", n, "=", t.c(n));
                return std::nullopt;
        });
}

void oracle(Suite& s)
{
        s.check("brute force equals Bellman value, n <= 4, seven p", []() -> Counterexample {
                for (const Rational& pv : {Rational(1, 4), Rational(2, 5), Rational(49, 100), Rational(1, 2),
                                           Rational(51, 100), Rational(3, 5), Rational(9, 10)}) {
                        const Prob p(pv);
                        const auto w = w_table(p, 4).values;
                        for (std::size_t n = 1; n <= 4; ++n) {
                                const BruteForceResult r = brute_force(n, p);
                                if (r.best != w[n] || r.policies != policy_count(n))
                                        return describe("p=", pv, " n=", n, " brute=", r.best, " bellman=", w[n]);
                        }
                }
                return std::nullopt;
        });
        s.check("refusing an all-heads cash-in loses value at p = 1/2, n <= 4", []() -> Counterexample {
                const Prob half(Rational(1, 2));
                Counterexample bad;
                for_each_policy(4, half, [&](const Policy& pi, const Rational&) {
                        if (bad)
                                return;
                        const PolicyValue v = evaluate(pi, half);
                        for (std::size_t n = 1; n <= 4; ++n) {
                                bool refuses = false;
                                for (std::size_t m = 1; m <= n; ++m)
                                        refuses = refuses || pi.decision(m, m) < m;
                                if (refuses != (v.values[n] < Rational(1, 2)))
                                        bad = describe("n=", n, " value=", v.values[n], " policy:\n", pi.to_text());
                        }
                });
                return bad;
        });
}

void perturbation_suite(Suite& s)
{
        const std::vector<Rational> deltas{Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};
        s.check("deficit quotients converge monotonically to c_n within 1/100, n = 1..10", [&]() -> Counterexample {
                for (std::size_t n = 1; n <= 10; ++n) {
                        const SlopeCheck sc = slope_check(n, deltas, Rational(1, 100));
                        if (!sc.passed())
                                return describe("n=", n, " last quotient=", to_decimal(sc.quotients.back(), 8).digits,
                                                " c_n=", sc.reference);
                }
                return std::nullopt;
        });
        s.check("shape near 1/2: delta = 1/100 gives minimum at 5 only", []() -> Counterexample {
                const ExtremaReport r = shape_report(Rational(1, 100), 20);
                if (r.minima != std::vector<std::size_t>{5} || !r.maxima.empty())
                        return describe("minima=", list(r.minima), " maxima=", list(r.maxima));
                return std::nullopt;
        });
        s.check("local maxima away from 1/2: 9 at delta = 8/100, 15 at delta = 5/100", []() -> Counterexample {
                const auto has = [](const std::vector<std::size_t>& xs, std::size_t x) {
                        return std::find(xs.begin(), xs.end(), x) != xs.end();
                };
                if (!has(shape_report(Rational(8, 100), 20).maxima, 9))
                        return std::string("no maximum at 9");
                if (!has(shape_report(Rational(5, 100), 20).maxima, 15))
                        return std::string("no maximum at 15");
                return std::nullopt;
        });
}

void limits(Suite& s)
{
        s.check("L to 20 digits with radius <= 1e-21", []() -> Counterexample {
                const Rational tol = Rational::parse("1e-21");
                const BoundedValue L = limit_L(tol);
                if (to_decimal(L.approx, 20).digits != reference::kLimitL20 || L.error_radius > tol)
                        return describe("L=", to_decimal(L.approx, 22).digits);
                if (!L.overlaps(limit_L_formula(7, 120)))
                        return std::string("product-series interval does not overlap");
                return std::nullopt;
        });
        s.check("W(p) at the reference grid", []() -> Counterexample {
                for (const auto& row : reference::kLimitW) {
                        const BoundedValue W =
                            limit_W(Prob::parse(row.p), Rational::parse("1e-6"), IterationOptions{256});
                        if (to_decimal(W.approx, row.digits).digits != row.rendered)
                                return describe("p=", row.p, " W=", to_decimal(W.approx, 8).digits);
                }
                return std::nullopt;
        });
}

} // namespace

std::vector<std::string_view> verify_suite_names()
{
        return {"identities", "theorems", "tables", "oracle", "perturbation", "limits", "all"};
}

std::vector<CheckResult> run_verify_suite(std::string_view suite)
{
        static const std::vector<std::pair<std::string_view, void (*)(Suite&)>> suites{
            {"identities", identities}, {"theorems", theorems},
            {"tables", tables},         {"oracle", oracle},
            {"perturbation", perturbation_suite}, {"limits", limits},
        };
        std::vector<CheckResult> out;
        bool found = false;
        for (const auto& [name, run] : suites) {
                if (suite != "all" && suite != name)
                        continue;
                found = true;
                Suite s{std::string(name), {}};
                run(s);
                out.insert(out.end(), s.results.begin(), s.results.end());
        }
        if (!found)
                throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
        return out;
}

} // namespace coingame

#include "cli.hpp"

#include "coingame/analysis.hpp"
#include "coingame/game.hpp"
#include "coingame/limits_above.hpp"
#include "coingame/montecarlo.hpp"
#include "coingame/numerics.hpp"
#include "coingame/perturbation.hpp"
#include "coingame/policy.hpp"
#include "coingame/reference_values.hpp"
#include "coingame/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace coingame::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { Csv, Json, Plain };

struct Rows {
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;

        void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void write_csv(const Rows& t, std::ostream& out)
{
        auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i)
                        out << (i ? "," : "") << csv_escape(cells[i]);
                out << '\n';
        };
        line(t.columns);
        for (const auto& r : t.rows)
                line(r);
}

void write_json(const Rows& t, std::ostream& out)
{
        ordered_json arr = ordered_json::array();
        for (const auto& r : t.rows) {
                ordered_json obj = ordered_json::object();
                for (std::size_t i = 0; i < t.columns.size(); ++i)
                        obj[t.columns[i]] = r[i];
                arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
}

void write_plain_default(const Rows& t, std::ostream& out)
{
        std::vector<std::size_t> width(t.columns.size(), 0);
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
                width[i] = t.columns[i].size();
                for (const auto& r : t.rows)
                        width[i] = std::max(width[i], r[i].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) {
                        out << (i ? "  " : "") << cells[i];
                        if (i + 1 < cells.size())
                                out << std::string(width[i] - cells[i].size(), ' ');
                }
                out << '\n';
        };
        line(t.columns);
        for (const auto& r : t.rows)
                line(r);
}

void emit(const Rows& t, OutputFormat format, std::ostream& out,
          const std::function<void(std::ostream&)>& plain = nullptr)
{
        switch (format) {
        case OutputFormat::Csv:
                write_csv(t, out);
                break;
        case OutputFormat::Json:
                write_json(t, out);
                break;
        case OutputFormat::Plain:
                if (plain)
                        plain(out);
                else
                        write_plain_default(t, out);
                break;
        }
}

std::string join(const std::vector<std::size_t>& xs, const char* sep)
{
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
                s += (i ? sep : "") + std::to_string(xs[i]);
        return s;
}

std::string scientific(const Rational& x)
{
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", x.to_double());
        return buf;
}

struct UsageError : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
};

Prob parse_prob(const std::string& text)
{
        try {
                return Prob::parse(text);
        } catch (const std::exception& e) {
                throw UsageError("bad probability '" + text + "': " + e.what());
        }
}

Rational parse_positive(const std::string& text, const char* what)
{
        Rational r;
        try {
                r = Rational::parse(text);
        } catch (const std::exception& e) {
                throw UsageError(std::string("bad ") + what + " '" + text + "': " + e.what());
        }
        if (r.sign() <= 0)
                throw UsageError(std::string(what) + " must be positive");
        return r;
}

struct Context {
        std::ostream& out;
        std::ostream& err;
        OutputFormat format = OutputFormat::Csv;
};

// --- value ---------------------------------------------------------------

struct ValueArgs {
        std::size_t n = 1;
        std::string p;
        unsigned digits = 8;
        bool exact = false;
};

int cmd_value(const ValueArgs& a, Context& ctx)
{
        const Prob p = parse_prob(a.p);
        const Rational w = w_table(p, a.n).values[a.n];
        Rows t;
        t.columns = {"n", "p", "w"};
        if (a.exact)
                t.columns.push_back("w_exact");
        std::vector<std::string> row{std::to_string(a.n), to_exact_string(p.p()), to_decimal(w, a.digits).digits};
        if (a.exact)
                row.push_back(w.to_string());
        t.add(row);
        emit(t, ctx.format, ctx.out, [&](std::ostream& o) {
                o << (a.exact ? w.to_string() : to_decimal(w, a.digits).digits) << '\n';
        });
        return kSuccess;
}

// --- table ---------------------------------------------------------------

struct TableArgs {
        std::vector<std::string> ps;
        std::size_t n_max = 20;
        unsigned digits = 8;
};

int cmd_table(const TableArgs& a, Context& ctx)
{
        if (a.n_max < 1)
                throw UsageError("--n-max must be >= 1");
        std::vector<Prob> probs;
        for (const auto& s : a.ps)
                probs.push_back(parse_prob(s));
        const ValueTableRows vt = value_table(probs, a.n_max, a.digits);
        Rows t;
        t.columns.push_back("n");
        for (const Prob& p : probs)
                t.columns.push_back(to_exact_string(p.p()));
        for (std::size_t n = 1; n <= a.n_max; ++n) {
                std::vector<std::string> row{std::to_string(n)};
                row.insert(row.end(), vt.cells[n - 1].begin(), vt.cells[n - 1].end());
                t.add(std::move(row));
        }
        emit(t, ctx.format, ctx.out);
        return kSuccess;
}

// --- extrema -------------------------------------------------------------

struct ExtremaArgs {
        std::vector<std::string> ps;
        std::size_t n_max = 20;
};

int cmd_extrema(const ExtremaArgs& a, Context& ctx)
{
        if (a.n_max < 3)
                throw UsageError("--n-max must be >= 3");
        Rows t;
        t.columns = {"p", "minima", "maxima"};
        std::vector<ExtremaReport> reports;
        for (const auto& s : a.ps) {
                reports.push_back(extrema_scan(parse_prob(s), a.n_max));
                const auto& r = reports.back();
                t.add({to_exact_string(r.p.p()), join(r.minima, ";"), join(r.maxima, ";")});
        }
        emit(t, ctx.format, ctx.out, [&](std::ostream& o) {
                for (const auto& r : reports) {
                        if (reports.size() > 1)
                                o << "p=" << to_exact_string(r.p.p()) << ' ';
                        o << "min: " << join(r.minima, ",") << " max: " << join(r.maxima, ",") << '\n';
                }
        });
        return kSuccess;
}

// --- cn ------------------------------------------------------------------

struct CnArgs {
        std::size_t n_max = 6;
        unsigned digits = 20;
        bool check_linear = false;
};

int cmd_cn(const CnArgs& a, Context& ctx)
{
        if (a.n_max < 1)
                throw UsageError("--n-max must be >= 1");
        const CnTable table = c_table(a.n_max);
        Rows t;
        t.columns = {"n", "c_n", "decimal"};
        for (std::size_t n = 1; n <= a.n_max; ++n)
                t.add({std::to_string(n), table.c(n).to_string(), to_decimal(table.c(n), a.digits).digits});
        emit(t, ctx.format, ctx.out);

        if (a.check_linear) {
                for (std::size_t n = 7; n <= a.n_max; ++n)
                        if (c_linear(n, table) != table.c(n)) {
                                ctx.err << "linear recursion mismatch at n=" << n << ": " << c_linear(n, table)
                                        << " vs " << table.c(n) << '\n';
                                return kCheckFailure;
                        }
                ctx.err << "linear recursion matches c_n exactly for n = 7.." << a.n_max << '\n';
        }
        return kSuccess;
}

// --- limit-l / limit-w ---------------------------------------------------

struct LimitLArgs {
        std::string tol = "1e-21";
        unsigned digits = 20;
        bool formula = false;
        std::size_t n0 = 7;
        std::size_t terms = 120;
};

int cmd_limit_l(const LimitLArgs& a, Context& ctx)
{
        const Rational tol = parse_positive(a.tol, "tolerance");
        const std::size_t level = limit_L_level(tol);
        ctx.err << "computing c_n up to n=" << level << '\n';
        const BoundedValue L = limit_L(tol);
        Rows t;
        t.columns = {"method", "value", "radius", "level"};
        t.add({"monotone", to_decimal(L.approx, a.digits).digits, scientific(L.error_radius), std::to_string(level)});
        std::optional<BoundedValue> F;
        if (a.formula) {
                if (a.n0 < 7)
                        throw UsageError("--n0 must be >= 7");
                F = limit_L_formula(a.n0, a.terms);
                t.add({"product-series", to_decimal(F->approx, a.digits).digits, scientific(F->error_radius),
                       std::to_string(a.n0 + a.terms)});
        }
        emit(t, ctx.format, ctx.out, [&](std::ostream& o) {
                o << to_decimal(L.approx, a.digits).digits << " ± " << scientific(L.error_radius) << '\n';
                if (F)
                        o << to_decimal(F->approx, a.digits).digits << " ± " << scientific(F->error_radius)
                          << " (product series)\n";
        });
        if (F && !F->overlaps(L)) {
                ctx.err << "monotone and product-series intervals do not overlap\n";
                return kCheckFailure;
        }
        return kSuccess;
}

struct LimitWArgs {
        std::vector<std::string> ps;
        std::string tol = "1e-6";
        unsigned digits = 6;
        std::size_t bits = 256;
};

int cmd_limit_w(const LimitWArgs& a, Context& ctx)
{
        const Rational tol = parse_positive(a.tol, "tolerance");
        std::vector<Prob> probs;
        for (const auto& s : a.ps) {
                Prob p = parse_prob(s);
                if (!p.above_half())
                        throw UsageError("limit-w requires p > 1/2, got " + s);
                probs.push_back(std::move(p));
        }
        Rows t;
        t.columns = {"p", "value", "radius", "level"};
        std::vector<BoundedValue> values;
        for (const Prob& p : probs) {
                const LimitW lw = limit_W_detailed(p, tol, IterationOptions{a.bits});
                values.push_back(lw.value);
                t.add({to_exact_string(p.p()), to_decimal(lw.value.approx, a.digits).digits,
                       scientific(lw.value.error_radius), std::to_string(lw.level)});
        }
        emit(t, ctx.format, ctx.out, [&](std::ostream& o) {
                for (std::size_t i = 0; i < probs.size(); ++i) {
                        if (probs.size() > 1)
                                o << "W(" << to_exact_string(probs[i].p()) << ") = ";
                        o << to_decimal(values[i].approx, a.digits).digits << " ± "
                          << scientific(values[i].error_radius) << '\n';
                }
        });
        return kSuccess;
}

// --- oracle --------------------------------------------------------------

struct OracleArgs {
        std::size_t n = 1;
        std::string p;
};

int cmd_oracle(const OracleArgs& a, Context& ctx)
{
        const Prob p = parse_prob(a.p);
        if (a.n < 1)
                throw UsageError("--n must be >= 1");
        if (a.n > kBruteForceLimit)
                throw UsageError("n = " + std::to_string(a.n) + " exceeds brute-force guard of " +
                                 std::to_string(kBruteForceLimit));
        if (a.n >= 5)
                ctx.err << "enumerating " << policy_count(a.n) << " policies\n";
        const BruteForceResult r = brute_force(a.n, p);
        const Rational bellman = w_table(p, a.n).values[a.n];
        const bool match = r.best == bellman;
        Rows t;
        t.columns = {"n", "p", "policies", "brute_force", "bellman", "match"};
        t.add({std::to_string(a.n), to_exact_string(p.p()), std::to_string(r.policies), r.best.to_string(),
               bellman.to_string(), match ? "true" : "false"});
        emit(t, ctx.format, ctx.out, [&](std::ostream& o) {
                o << (match ? "MATCH " : "MISMATCH ") << r.policies << " policies max = " << r.best
                  << " bellman = " << bellman << '\n';
        });
        return match ? kSuccess : kCheckFailure;
}

// --- simulate ------------------------------------------------------------

struct SimulateArgs {
        std::size_t n = 1;
        std::string p;
        std::string policy = "optimal";
        std::string policy_file;
        std::uint64_t trials = 1'000'000;
        std::uint64_t seed = 0;
        std::string compare;
        unsigned threads = 1;
        double z_limit = 4.0;
};

int cmd_simulate(const SimulateArgs& a, Context& ctx)
{
        const Prob p = parse_prob(a.p);
        if (a.n < 1)
                throw UsageError("--n must be >= 1");
        if (a.trials < 1)
                throw UsageError("--trials must be >= 1");

        std::optional<Policy> policy;
        std::string policy_name = a.policy;
        if (!a.policy_file.empty()) {
                std::ifstream in(a.policy_file);
                if (!in)
                        throw UsageError("cannot open policy file '" + a.policy_file + "'");
                std::stringstream buf;
                buf << in.rdbuf();
                policy = Policy::from_text(buf.str());
                policy_name = "file";
        } else if (a.policy == "one") {
                policy = make_one(a.n);
        } else if (a.policy == "all") {
                policy = make_all(a.n);
        } else if (a.policy == "optimal") {
                policy = make_policy(StrategyKind::Optimal, a.n, p);
        } else {
                throw UsageError("unknown policy '" + a.policy + "' (one, all, optimal)");
        }
        if (policy->horizon() < a.n)
                throw UsageError("policy horizon " + std::to_string(policy->horizon()) + " is shorter than n");

        std::optional<Rational> analytic;
        if (a.compare == "analytic")
                analytic = eval_policy(*policy, a.n, p);
        else if (!a.compare.empty())
                analytic = parse_positive(a.compare, "comparison value");

        SimConfig config{a.n, p, a.trials, a.seed, *policy, a.threads};
        const SimResult r = simulate(config, analytic);

        char est[32], se[32], z[32] = "";
        std::snprintf(est, sizeof est, "%.6f", r.estimate);
        std::snprintf(se, sizeof se, "%.6f", r.std_error);
        if (r.z_vs)
                std::snprintf(z, sizeof z, "%.3f", *r.z_vs);
        Rows t;
        t.columns = {"n", "p", "policy", "trials", "seed", "wins", "estimate", "std_error", "analytic", "z"};
        t.add({std::to_string(a.n), to_exact_string(p.p()), policy_name, std::to_string(r.trials),
               std::to_string(a.seed), std::to_string(r.wins), est, se,
               analytic ? to_decimal(*analytic, 8).digits : "", z});
        emit(t, ctx.format, ctx.out, [&](std::ostream& o) {
                o << "wins " << r.wins << " / " << r.trials << " estimate " << est << " ± " << se;
                if (r.z_vs)
                        o << " analytic " << to_decimal(*analytic, 8).digits << " z " << z;
                o << '\n';
        });
        if (r.z_vs && std::abs(*r.z_vs) > a.z_limit) {
                ctx.err << "|z| = " << std::abs(*r.z_vs) << " exceeds " << a.z_limit << '\n';
                return kCheckFailure;
        }
        return kSuccess;
}

// --- verify --------------------------------------------------------------

int cmd_verify(const std::string& suite, Context& ctx)
{
        std::vector<CheckResult> results;
        try {
                results = run_verify_suite(suite);
        } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
        }
        Rows t;
        t.columns = {"suite", "check", "status", "detail"};
        bool ok = true;
        for (const auto& r : results) {
                ok = ok && r.passed;
                t.add({r.suite, r.name, r.passed ? "pass" : "fail", r.detail});
        }
        emit(t, ctx.format, ctx.out, [&](std::ostream& o) {
                for (const auto& r : results) {
                        o << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << '\n';
                        if (!r.passed)
                                o << "     " << r.detail << '\n';
                }
                o << (ok ? "all checks passed" : "some checks failed") << '\n';
        });
        return ok ? kSuccess : kCheckFailure;
}

// --- emit-plot-data ------------------------------------------------------

struct PlotArgs {
        std::string figure;
        std::size_t n_max = 0;
        std::string out_dir;
        std::size_t bits = 256;
};

Rows plot_fig1(const PlotArgs& a, Context& ctx)
{
        Rows t;
        t.columns = {"p", "W", "radius"};
        const Rational tol = Rational::parse("1e-6");
        for (int hundredths = 51; hundredths <= 99; ++hundredths) {
                const Prob p(Rational(hundredths, 100));
                ctx.err << "fig1: p=" << to_exact_string(p.p()) << '\n';
                const BoundedValue W = limit_W(p, tol, IterationOptions{a.bits});
                t.add({to_exact_string(p.p()), to_decimal(W.approx, 10).digits, scientific(W.error_radius)});
        }
        return t;
}

Rows plot_series(const std::vector<std::string_view>& ps, std::size_t n_first, std::size_t n_max, bool markers)
{
        Rows t;
        t.columns = {"p", "n", "w"};
        if (markers)
                t.columns.push_back("extremum");
        for (auto ps_text : ps) {
                const Prob p = Prob::parse(ps_text);
                const ValueTable table = w_table(p, n_max);
                const ExtremaReport r = extrema_scan(table);
                for (std::size_t n = n_first; n <= n_max; ++n) {
                        std::vector<std::string> row{to_exact_string(p.p()), std::to_string(n),
                                                     to_decimal(table.values[n], 10).digits};
                        if (markers) {
                                const bool is_min = std::find(r.minima.begin(), r.minima.end(), n) != r.minima.end();
                                const bool is_max = std::find(r.maxima.begin(), r.maxima.end(), n) != r.maxima.end();
                                row.push_back(is_min ? "min" : (is_max ? "max" : ""));
                        }
                        t.add(std::move(row));
                }
        }
        return t;
}

Rows plot_cn(std::size_t n_max)
{
        const CnTable table = c_table(n_max);
        const BoundedValue L = limit_L(Rational::parse("1e-21"));
        const std::string lower = to_decimal(Rational(27, 16), 20).digits;
        const std::string limit = to_decimal(L.approx, 20).digits;
        Rows t;
        t.columns = {"n", "c_n", "c_n_exact", "lower_bound", "limit"};
        for (std::size_t n = 1; n <= n_max; ++n)
                t.add({std::to_string(n), to_decimal(table.c(n), 20).digits, table.c(n).to_string(), lower, limit});
        return t;
}

int cmd_emit_plot_data(const PlotArgs& a, Context& ctx)
{
        Rows t;
        if (a.figure == "fig1") {
                t = plot_fig1(a, ctx);
        } else if (a.figure == "fig2") {
                t = plot_series({"0.42", "0.45"}, 5, a.n_max ? a.n_max : 20, true);
        } else if (a.figure == "fig3") {
                std::vector<std::string_view> ps(reference::kTableProbs.begin(), reference::kTableProbs.end());
                t = plot_series(ps, 1, a.n_max ? a.n_max : 20, false);
        } else if (a.figure == "cn") {
                t = plot_cn(a.n_max ? a.n_max : 25);
        } else {
                throw UsageError("unknown figure '" + a.figure + "' (fig1, fig2, fig3, cn)");
        }

        if (a.out_dir.empty()) {
                emit(t, ctx.format, ctx.out);
                return kSuccess;
        }
        std::filesystem::create_directories(a.out_dir);
        const auto path = std::filesystem::path(a.out_dir) / (a.figure + (ctx.format == OutputFormat::Json ? ".json" : ".csv"));
        std::ofstream file(path, std::ios::binary);
        if (!file)
                throw std::runtime_error("cannot write " + path.string());
        emit(t, ctx.format, file);
        ctx.err << "wrote " << path.string() << '\n';
        return kSuccess;
}

} // namespace

std::string csv_escape(const std::string& cell)
{
        if (cell.find_first_of(",\"\n\r") == std::string::npos)
                return cell;
        std::string out = "\"";
        for (char c : cell) {
                if (c == '"')
                        out += '"';
                out += c;
        }
        return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line)
{
        std::vector<std::string> cells;
        std::string cur;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
                const char c = line[i];
                if (quoted) {
                        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                                cur += '"';
                                ++i;
                        } else if (c == '"') {
                                quoted = false;
                        } else {
                                cur += c;
                        }
                } else if (c == '"') {
                        quoted = true;
                } else if (c == ',') {
                        cells.push_back(std::move(cur));
                        cur.clear();
                } else {
                        cur += c;
                }
        }
        cells.push_back(std::move(cur));
        return cells;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
        CLI::App app{"Exact solver and analysis toolkit for the sequential coin-flipping game", "coingame"};
        app.require_subcommand(1);

        Context ctx{out, err};
        std::string format = "csv";
        const std::map<std::string, OutputFormat> formats{
            {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}, {"plain", OutputFormat::Plain}};
        auto add_format = [&](CLI::App* sub) {
                sub->add_option("--format", format, "Output format")
                    ->check(CLI::IsMember({"csv", "json", "plain"}));
        };

        ValueArgs value;
        auto* value_cmd = app.add_subcommand("value", "Optimal winning probability w_{n,p}");
        value_cmd->add_option("--n", value.n, "Number of coins")->required();
        value_cmd->add_option("--p", value.p, "Heads probability, e.g. 0.49 or 3/5")->required();
        value_cmd->add_option("--digits", value.digits, "Decimal digits")->check(CLI::Range(1u, 10000u));
        value_cmd->add_flag("--exact", value.exact, "Also print the exact fraction");
        add_format(value_cmd);

        TableArgs table;
        auto* table_cmd = app.add_subcommand("table", "Table of w_{n,p} for several p");
        table_cmd->add_option("--p", table.ps, "Comma-separated probabilities")->required()->delimiter(',');
        table_cmd->add_option("--n-max", table.n_max, "Largest n");
        table_cmd->add_option("--digits", table.digits, "Decimal digits")->check(CLI::Range(1u, 10000u));
        add_format(table_cmd);

        ExtremaArgs extrema;
        auto* extrema_cmd = app.add_subcommand("extrema", "Strict local extrema of n -> w_{n,p}");
        extrema_cmd->add_option("--p", extrema.ps, "Comma-separated probabilities")->required()->delimiter(',');
        extrema_cmd->add_option("--n-max", extrema.n_max, "Largest n of the scanned table");
        add_format(extrema_cmd);

        CnArgs cn;
        auto* cn_cmd = app.add_subcommand("cn", "First-order deficit coefficients c_n");
        cn_cmd->add_option("--n-max", cn.n_max, "Largest n");
        cn_cmd->add_option("--digits", cn.digits, "Decimal digits")->check(CLI::Range(1u, 10000u));
        cn_cmd->add_flag("--check-linear", cn.check_linear, "Check c_n = A_n + (1 - B_n) c_{n-1} for n >= 7");
        add_format(cn_cmd);

        LimitLArgs limit_l;
        auto* limit_l_cmd = app.add_subcommand("limit-l", "Limit L of c_n with a rigorous radius");
        limit_l_cmd->add_option("--tol", limit_l.tol, "Radius bound");
        limit_l_cmd->add_option("--digits", limit_l.digits, "Decimal digits")->check(CLI::Range(1u, 10000u));
        limit_l_cmd->add_flag("--formula", limit_l.formula, "Cross-check with the product-series representation");
        limit_l_cmd->add_option("--n0", limit_l.n0, "Product-series start (>= 7)");
        limit_l_cmd->add_option("--terms", limit_l.terms, "Product-series terms");
        add_format(limit_l_cmd);

        LimitWArgs limit_w;
        auto* limit_w_cmd = app.add_subcommand("limit-w", "Limit W(p) of w_{n,p} for p > 1/2");
        limit_w_cmd->add_option("--p", limit_w.ps, "Comma-separated probabilities > 1/2")->required()->delimiter(',');
        limit_w_cmd->add_option("--tol", limit_w.tol, "Radius bound");
        limit_w_cmd->add_option("--digits", limit_w.digits, "Decimal digits")->check(CLI::Range(1u, 10000u));
        limit_w_cmd->add_option("--bits", limit_w.bits, "Dyadic bit budget for iterates, 0 = exact");
        add_format(limit_w_cmd);

        OracleArgs oracle;
        auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force policy enumeration vs the Bellman value");
        oracle_cmd->add_option("--n", oracle.n, "Number of coins (<= 6)")->required();
        oracle_cmd->add_option("--p", oracle.p, "Heads probability")->required();
        add_format(oracle_cmd);

        SimulateArgs sim;
        auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo simulation of the game");
        sim_cmd->add_option("--n", sim.n, "Number of coins")->required();
        sim_cmd->add_option("--p", sim.p, "Heads probability")->required();
        sim_cmd->add_option("--policy", sim.policy, "one, all or optimal");
        sim_cmd->add_option("--policy-file", sim.policy_file, "Policy table with 'm k i' lines");
        sim_cmd->add_option("--trials", sim.trials, "Number of games");
        sim_cmd->add_option("--seed", sim.seed, "64-bit seed");
        sim_cmd->add_option("--compare", sim.compare, "'analytic' or a value to compute a z-score against");
        sim_cmd->add_option("--threads", sim.threads, "Worker threads")->check(CLI::Range(1u, 64u));
        sim_cmd->add_option("--z-limit", sim.z_limit, "Largest accepted |z|");
        add_format(sim_cmd);

        std::string suite = "all";
        auto* verify_cmd = app.add_subcommand("verify", "Run exact verification suites");
        verify_cmd->add_option("--suite", suite, "identities, theorems, tables, oracle, perturbation, limits, all");
        add_format(verify_cmd);

        PlotArgs plot;
        auto* plot_cmd = app.add_subcommand("emit-plot-data", "CSV data behind the figures");
        plot_cmd->add_option("--figure", plot.figure, "fig1, fig2, fig3 or cn")->required();
        plot_cmd->add_option("--n-max", plot.n_max, "Largest n (figure dependent default)");
        plot_cmd->add_option("--out-dir", plot.out_dir, "Write <figure>.csv here instead of stdout");
        plot_cmd->add_option("--bits", plot.bits, "Dyadic bit budget for fig1");
        add_format(plot_cmd);

        try {
                std::vector<std::string> reversed(args.rbegin(), args.rend());
                app.parse(reversed);
        } catch (const CLI::ParseError& e) {
                const int code = app.exit(e, out, err);
                return code == 0 ? kSuccess : kUsageError;
        }
        ctx.format = formats.at(format);

        try {
                if (*value_cmd)
                        return cmd_value(value, ctx);
                if (*table_cmd)
                        return cmd_table(table, ctx);
                if (*extrema_cmd)
                        return cmd_extrema(extrema, ctx);
                if (*cn_cmd)
                        return cmd_cn(cn, ctx);
                if (*limit_l_cmd)
                        return cmd_limit_l(limit_l, ctx);
                if (*limit_w_cmd)
                        return cmd_limit_w(limit_w, ctx);
                if (*oracle_cmd)
                        return cmd_oracle(oracle, ctx);
                if (*sim_cmd)
                        return cmd_simulate(sim, ctx);
                if (*verify_cmd)
                        return cmd_verify(suite, ctx);
                if (*plot_cmd)
                        return cmd_emit_plot_data(plot, ctx);
        } catch (const UsageError& e) {
                err << "error: " << e.what() << '\n';
                return kUsageError;
        } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << '\n';
                return kUsageError;
        } catch (const std::exception& e) {
                err << "error: " << e.what() << '\n';
                return kCheckFailure;
        }
        return kUsageError;
}

} // namespace coingame::cli

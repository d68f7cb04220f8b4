#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using coingame::cli::csv_escape;
using coingame::cli::csv_split;
using coingame::cli::run;

namespace {

struct Outcome {
        int code;
        std::string out;
        std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
        std::vector<std::vector<std::string>> rows;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
                rows.push_back(csv_split(line));
        return rows;
}

} // namespace

TEST_CASE("csv helpers round-trip")
{
        for (std::string cell : {"plain", "a,b", "quote\"d", "", "\"", "x\"\"y,z"}) {
                const auto cells = csv_split(csv_escape(cell) + "," + csv_escape("tail"));
                REQUIRE(cells.size() == 2);
                CHECK(cells[0] == cell);
                CHECK(cells[1] == "tail");
        }
}

TEST_CASE("value")
{
        auto r = invoke({"value", "--n", "5", "--p", "0.49", "--digits", "8", "--format", "plain"});
        CHECK(r.code == 0);
        CHECK(r.out == "0.48254059\n");
        r = invoke({"value", "--n", "2", "--p", "3/5", "--exact", "--format", "plain"});
        CHECK(r.out == "81/125\n");
        r = invoke({"value", "--n", "7", "--p", "1/2", "--exact", "--format", "plain"});
        CHECK(r.out == "1/2\n");
        r = invoke({"value", "--n", "2", "--p", "3/5", "--exact"});
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0] == std::vector<std::string>{"n", "p", "w", "w_exact"});
        CHECK(rows[1] == std::vector<std::string>{"2", "0.6", "0.64800000", "81/125"});
        CHECK(invoke({"value", "--n", "2", "--p", "1"}).code == 2);
        CHECK(invoke({"value", "--n", "2"}).code == 2);
}

TEST_CASE("table")
{
        auto r = invoke({"table", "--p", "0.5", "--n-max", "10"});
        CHECK(r.code == 0);
        auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 11);
        for (std::size_t i = 1; i <= 10; ++i)
                CHECK(rows[i][1] == "0.50000000");

        r = invoke({"table", "--p", "0.6", "--n-max", "5", "--format", "json"});
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.size() == 5);
        for (std::size_t i = 1; i < 5; ++i)
                CHECK(j[i]["0.6"].get<std::string>() > j[i - 1]["0.6"].get<std::string>());

        r = invoke({"table", "--p", "0.49,0.25", "--n-max", "20"});
        rows = parse_csv(r.out);
        CHECK(rows[0] == std::vector<std::string>{"n", "0.49", "0.25"});
        CHECK(rows[20][2] == "0.07315919");
}

TEST_CASE("extrema")
{
        auto r = invoke({"extrema", "--p", "0.42", "--n-max", "20", "--format", "plain"});
        CHECK(r.out == "min: 7,13 max: 9\n");
        r = invoke({"extrema", "--p", "0.42", "--n-max", "20"});
        CHECK(parse_csv(r.out)[1] == std::vector<std::string>{"0.42", "7;13", "9"});
        for (const char* p : {"0.25", "0.5"}) {
                r = invoke({"extrema", "--p", p, "--n-max", "20"});
                const auto rows = parse_csv(r.out);
                CHECK(rows[1][1].empty());
                CHECK(rows[1][2].empty());
        }
}

TEST_CASE("cn")
{
        auto r = invoke({"cn", "--n-max", "6"});
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 7);
        const std::vector<std::string> expected{"1", "3/2", "27/16", "111/64", "3555/2048", "113337/65536"};
        for (std::size_t i = 0; i < 6; ++i)
                CHECK(rows[i + 1][1] == expected[i]);
        r = invoke({"cn", "--n-max", "1"});
        CHECK(parse_csv(r.out).size() == 2);
        CHECK(invoke({"cn", "--n-max", "40", "--check-linear"}).code == 0);
}

TEST_CASE("limits")
{
        auto r = invoke({"limit-l", "--tol", "1e-21", "--formula"});
        CHECK(r.code == 0);
        auto rows = parse_csv(r.out);
        CHECK(rows[1][1] == "1.70347176087173673645");
        CHECK(rows[2][1] == "1.70347176087173673645");

        r = invoke({"limit-w", "--p", "0.55", "--tol", "1e-6", "--digits", "4"});
        CHECK(r.code == 0);
        CHECK(parse_csv(r.out)[1][1] == "0.6288");
        CHECK(invoke({"limit-w", "--p", "0.5"}).code == 2);
}

TEST_CASE("oracle")
{
        auto r = invoke({"oracle", "--n", "4", "--p", "0.4", "--format", "plain"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("MATCH 288 policies", 0) == 0);
        r = invoke({"oracle", "--n", "2", "--p", "0.4", "--format", "plain"});
        CHECK(r.out.find("max = 44/125") != std::string::npos);
        r = invoke({"oracle", "--n", "7", "--p", "0.4"});
        CHECK(r.code == 2);
        CHECK(r.err.find("guard") != std::string::npos);
}

TEST_CASE("simulate")
{
        auto r = invoke({"simulate", "--n", "10", "--p", "0.6", "--policy", "one", "--trials", "100000", "--seed", "42",
                         "--compare", "analytic"});
        CHECK(r.code == 0);
        auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0][0] == "n");
        CHECK(std::abs(std::stod(rows[1].back())) <= 4.0);

        // A wrong comparison value is a check failure.
        r = invoke({"simulate", "--n", "1", "--p", "0.6", "--trials", "100000", "--seed", "1", "--compare", "1/2"});
        CHECK(r.code == 1);

        // The same run through a policy file.
        const auto path = std::filesystem::temp_directory_path() / "coingame_policy_test.txt";
        {
                std::ofstream f(path);
                f << "1 1 1\n2 1 1\n2 2 2\n";
        }
        r = invoke({"simulate", "--n", "2", "--p", "0.5", "--policy-file", path.string(), "--trials", "50000",
                    "--compare", "1/2", "--threads", "3"});
        CHECK(r.code == 0);
        CHECK(parse_csv(r.out)[1][2] == "file");
        std::filesystem::remove(path);

        CHECK(invoke({"simulate", "--n", "3", "--p", "0.5", "--policy", "bogus"}).code == 2);
}

TEST_CASE("verify and plot data")
{
        CHECK(invoke({"verify", "--suite", "identities"}).code == 0);
        CHECK(invoke({"verify", "--suite", "oracle"}).code == 0);
        CHECK(invoke({"verify", "--suite", "nope"}).code == 2);

        auto r = invoke({"emit-plot-data", "--figure", "cn", "--n-max", "25"});
        auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 26);
        CHECK(rows[1][3] == "1.68750000000000000000");
        CHECK(rows[1][4] == "1.70347176087173673645");

        r = invoke({"emit-plot-data", "--figure", "fig3"});
        CHECK(parse_csv(r.out).size() == 1 + 5 * 20);

        r = invoke({"emit-plot-data", "--figure", "fig2"});
        rows = parse_csv(r.out);
        std::size_t markers = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
                markers += !rows[i][3].empty();
        CHECK(markers == 3 + 3); // 0.42: 7, 9, 13; 0.45: 6, 15, 17

        const auto dir = std::filesystem::temp_directory_path() / "coingame_plot_test";
        r = invoke({"emit-plot-data", "--figure", "fig1", "--out-dir", dir.string()});
        CHECK(r.code == 0);
        std::ifstream f(dir / "fig1.csv");
        std::stringstream buf;
        buf << f.rdbuf();
        rows = parse_csv(buf.str());
        CHECK(rows.size() == 1 + 49);
        CHECK(rows[0] == std::vector<std::string>{"p", "W", "radius"});
        std::filesystem::remove_all(dir);

        CHECK(invoke({"emit-plot-data", "--figure", "fig9"}).code == 2);
        CHECK(invoke({}).code == 2);
}

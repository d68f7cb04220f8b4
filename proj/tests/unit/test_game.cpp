#include "coingame/game.hpp"
#include "coingame/numerics.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace coingame;

namespace {

const std::vector<Rational> kSampleProbs{Rational(1, 4),  Rational(2, 5),   Rational(42, 100), Rational(49, 100),
                                         Rational(1, 2),  Rational(51, 100), Rational(3, 5),   Rational(9, 10)};

} // namespace

TEST_CASE("probabilities must lie strictly inside (0, 1)")
{
        CHECK_THROWS_AS(Prob(Rational(0)), std::invalid_argument);
        CHECK_THROWS_AS(Prob(Rational(1)), std::invalid_argument);
        CHECK_THROWS_AS(Prob(Rational(-1, 2)), std::invalid_argument);
        CHECK_THROWS_AS(Prob::parse("1.5"), std::invalid_argument);
        const Prob p = Prob::parse("0.49");
        CHECK(p.p() == Rational(49, 100));
        CHECK(p.q() == Rational(51, 100));
        CHECK(p.below_half());
        CHECK_FALSE(p.above_half());
}

TEST_CASE("optimal values match a direct-scan Bellman oracle")
{
        for (const Rational& pv : kSampleProbs) {
                const auto table = w_table(Prob(pv), 25);
                const auto ref = oracle::bellman(pv.raw(), 25);
                REQUIRE(table.horizon() == 25);
                for (std::size_t n = 0; n <= 25; ++n)
                        CHECK(table.values[n] == oracle::wrap(ref[n]));
                for (std::size_t j = 0; j <= 25; ++j) {
                        Rational m = table.values[j];
                        for (std::size_t k = j; k <= 25; ++k)
                                m = coingame::max(m, table.values[k]);
                        CHECK(table.suffix_max[j] == m);
                }
        }
}

TEST_CASE("known optimal values")
{
        CHECK(w_table(Prob(Rational(3, 5)), 2).values[2] == Rational(81, 125));
        CHECK(w_table(Prob(Rational(2, 7)), 1).values[1] == Rational(2, 7));
        CHECK(to_decimal(w_table(Prob::parse("0.49"), 5).values[5], 8).digits == "0.48254059");
        const auto half = w_table(Prob(Rational(1, 2)), 20);
        for (std::size_t n = 1; n <= 20; ++n)
                CHECK(half.values[n] == Rational(1, 2));
}

TEST_CASE("strategy values match an independent policy evaluator")
{
        for (const Rational& pv : kSampleProbs) {
                const Prob p(pv);
                const auto one = oracle::policy_values(pv.raw(), 20, [](std::size_t m, std::size_t k) {
                        return k == m ? m : std::size_t{1};
                });
                const auto all = oracle::policy_values(pv.raw(), 20, [](std::size_t, std::size_t k) { return k; });
                const auto a = a_values(20, p);
                const auto b = b_values(20, p);
                for (std::size_t n = 0; n <= 20; ++n) {
                        CHECK(a[n] == oracle::wrap(one[n]));
                        CHECK(b[n] == oracle::wrap(all[n]));
                }
                CHECK(a_value(7, p) == a[7]);
                CHECK(b_value(7, p) == b[7]);
        }
}

TEST_CASE("strategy One is optimal above one half; All falls short below")
{
        const Prob p35(Rational(3, 5));
        const auto w = w_table(p35, 30).values;
        for (std::size_t n = 0; n <= 30; ++n)
                CHECK(a_value(n, p35) == w[n]);

        // At p = 2/5 All is optimal for n <= 15 and first falls short at n = 16.
        const Prob p25(Rational(2, 5));
        const auto w2 = w_table(p25, 16).values;
        for (std::size_t n = 1; n <= 15; ++n)
                CHECK(b_value(n, p25) == w2[n]);
        CHECK(b_value(16, p25) < w2[16]);
        const Prob p42(Rational(42, 100));
        const auto w3 = w_table(p42, 12).values;
        for (std::size_t n = 1; n <= 12; ++n)
                CHECK(b_value(n, p42) <= w3[n]);
        CHECK(b_value(8, p42) == w3[8]);
        CHECK(b_value(9, p42) < w3[9]);
}

TEST_CASE("deficit sign and recursion residual")
{
        CHECK(deficit(0, Prob(Rational(2, 5))) == Rational(-1, 2));
        for (std::size_t n = 1; n <= 20; ++n) {
                CHECK(deficit(n, Prob(Rational(1, 2))) == Rational(0));
                CHECK(deficit(n, Prob(Rational(2, 5))).sign() > 0);
                CHECK(deficit(n, Prob(Rational(7, 10))).sign() < 0);
        }
        for (const Rational& pv : {Rational(2, 5), Rational(1, 2), Rational(7, 10)})
                for (std::size_t n = 1; n <= 15; ++n)
                        CHECK(deficit_recursion_residual(n, Prob(pv)).is_zero());
        CHECK_THROWS(deficit_recursion_residual(0, Prob(Rational(2, 5))));
}

TEST_CASE("optimal keep sets agree with exhaustive comparison")
{
        const auto half = optimal_keeps(9, 3, Prob(Rational(1, 2)));
        CHECK(half == std::vector<std::size_t>{3, 4, 5, 6, 7, 8});
        CHECK(optimal_keeps(8, 3, Prob(Rational(3, 5))) == std::vector<std::size_t>{7});

        const Prob p(Rational(42, 100));
        const auto w = w_table(p, 10).values;
        Rational best = w[4];
        for (std::size_t m = 4; m <= 9; ++m)
                best = coingame::max(best, w[m]);
        std::vector<std::size_t> expected;
        for (std::size_t m = 4; m <= 9; ++m)
                if (w[m] == best)
                        expected.push_back(m);
        CHECK(optimal_keeps(10, 4, p) == expected);
        CHECK_THROWS(optimal_keeps(5, 0, p));
        CHECK_THROWS(optimal_keeps(5, 5, p));
}

TEST_CASE("ratio bound above one half")
{
        CHECK(ratio_bound_check(2, Prob(Rational(3, 5))));
        for (std::size_t n = 2; n <= 25; ++n) {
                CHECK(ratio_bound_check(n, Prob(Rational(51, 100))));
                CHECK(ratio_bound_check(n, Prob(Rational(9, 10))));
        }
        CHECK_THROWS(ratio_bound_check(3, Prob(Rational(1, 2))));
        CHECK_THROWS(ratio_bound_check(1, Prob(Rational(3, 5))));
}

TEST_CASE("property: above one half the values increase and obey the linear recursion")
{
        for (const Rational& pv : {Rational(51, 100), Rational(11, 20), Rational(3, 5), Rational(7, 10), Rational(9, 10)}) {
                const Prob p(pv);
                const auto w = w_table(p, 30).values;
                for (std::size_t n = 1; n <= 30; ++n) {
                        if (n >= 2)
                                CHECK(w[n] > w[n - 1]);
                        const Rational pn = pv.pow(n), qn = p.q().pow(n);
                        CHECK(w[n] == pn + (Rational(1) - pn - qn) * w[n - 1]);
                }
        }
}

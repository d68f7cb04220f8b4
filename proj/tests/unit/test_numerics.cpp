#include "coingame/numerics.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace coingame;

TEST_CASE("binomials match Pascal's triangle")
{
        const auto rows = oracle::pascal(60);
        for (unsigned long n = 0; n <= 60; ++n) {
                const auto row = binom_row(n);
                REQUIRE(row.size() == n + 1);
                for (unsigned long k = 0; k <= n; ++k) {
                        CHECK(binom(n, k) == rows[n][k]);
                        CHECK(row[k] == rows[n][k]);
                }
                CHECK(binom(n, n + 1) == 0);
        }
        CHECK(binom(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("property: Pascal's rule and row sums")
{
        for (unsigned long n = 1; n <= 120; ++n) {
                BigInt sum = 0;
                for (unsigned long k = 0; k <= n; ++k) {
                        sum += binom(n, k);
                        if (k >= 1)
                                CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
                }
                CHECK(sum == BigInt(1) << n);
        }
}

TEST_CASE("decimal rendering rounds half to even and keeps the sign")
{
        CHECK(to_decimal(Rational(81, 125), 8).digits == "0.64800000");
        CHECK(to_decimal(Rational(1, 3), 4).digits == "0.3333");
        CHECK(to_decimal(Rational(2, 3), 4).digits == "0.6667");
        CHECK(to_decimal(Rational(1, 8), 2).digits == "0.12");
        CHECK(to_decimal(Rational(3, 8), 2).digits == "0.38");
        CHECK(to_decimal(Rational(-1, 8), 2).digits == "-0.12");
        CHECK(to_decimal(Rational(199999, 100000), 2).digits == "2.00");
        CHECK(to_decimal(Rational(1, 3), 4).precision == 4);
        CHECK_THROWS(to_decimal(Rational(1, 3), 0));
}

TEST_CASE("property: decimal rendering agrees with an integer-arithmetic oracle")
{
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<long> num(-10'000'000, 10'000'000), den(1, 100'000);
        std::uniform_int_distribution<unsigned> dig(1, 30);
        for (int i = 0; i < 1000; ++i) {
                const Rational x(num(rng), den(rng));
                const unsigned d = dig(rng);
                CHECK(to_decimal(x, d).digits == oracle::decimal(x.raw(), d));
        }
}

TEST_CASE("exact strings terminate only for 2^a 5^b denominators")
{
        CHECK(to_exact_string(Rational(49, 100)) == "0.49");
        CHECK(to_exact_string(Rational(3, 5)) == "0.6");
        CHECK(to_exact_string(Rational(3, 1)) == "3");
        CHECK(to_exact_string(Rational(1, 3)) == "1/3");
        CHECK(Rational::parse(to_exact_string(Rational(113337, 65536))) == Rational(113337, 65536));
}

TEST_CASE("property: polynomial-geometric tails equal long partial sums")
{
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> coef(-50, 50);
        for (int trial = 0; trial < 40; ++trial) {
                std::vector<Rational> c{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng), 7),
                                        Rational(coef(rng), 3)};
                const unsigned long N = static_cast<unsigned long>(trial % 15);
                Rational partial;
                for (unsigned long k = N + 1; k <= N + 400; ++k) {
                        const Rational K(static_cast<long>(k));
                        partial += (c[0] + c[1] * K + c[2] * K * K + c[3] * K * K * K) * Rational::inv_pow2(k);
                }
                // Remaining terms are below 1000^3 * 2^-400 in absolute value.
                CHECK((poly_geo_tail(c, N) - partial).abs() < Rational::inv_pow2(360));
        }
        const std::vector<Rational> one{Rational(1)};
        CHECK(poly_geo_tail(one, 0) == Rational(1));
        CHECK(poly_geo_tail(one, 5) == Rational(1, 32));
}

TEST_CASE("dyadic rounding brackets the value")
{
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 999983);
        for (int i = 0; i < 300; ++i) {
                const Rational x(num(rng), den(rng));
                const unsigned long bits = 1 + static_cast<unsigned long>(i % 40);
                const Rational lo = round_down_dyadic(x, bits), hi = round_up_dyadic(x, bits);
                CHECK(lo <= x);
                CHECK(x <= hi);
                CHECK(hi - lo <= Rational::inv_pow2(bits));
                CHECK(lo.is_dyadic());
                CHECK(hi.is_dyadic());
        }
        CHECK(round_down_dyadic(Rational(3, 8), 3) == Rational(3, 8));
        CHECK(round_up_dyadic(Rational(1, 3), 2) == Rational(1, 2));
}

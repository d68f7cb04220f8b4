#pragma once

#include "coingame/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace coingame {

/// C(n, k); zero when k > n.
BigInt binom(unsigned long n, unsigned long k);

/// Row n of Pascal's triangle, C(n,0) .. C(n,n).
std::vector<BigInt> binom_row(unsigned long n);

struct DecimalString {
        std::string digits;
        unsigned precision = 0;

        friend bool operator==(const DecimalString&, const DecimalString&) = default;
};

/// Round-half-even decimal expansion with exactly `digits` fractional digits.
DecimalString to_decimal(const Rational& x, unsigned digits);

/// Exact rendering: a terminating decimal when the denominator is 2^a 5^b,
/// otherwise "a/b".
std::string to_exact_string(const Rational& x);

/*
 * Sum_{k=N+1}^inf (c0 + c1 k + c2 k^2 + c3 k^3) / 2^k, exactly.
 *
 * Shifting k = N + i turns the tail into 2^-N Sum_{i>=1} Q(i)/2^i with Q the
 * re-expanded polynomial, and Sum_{i>=1} i^d / 2^i = 1, 2, 6, 26 for d = 0..3.
 */
Rational poly_geo_tail(std::span<const Rational> coeffs, unsigned long N);

/// Largest dyadic m/2^bits that is <= x.
Rational round_down_dyadic(const Rational& x, unsigned long bits);
/// Smallest dyadic m/2^bits that is >= x.
Rational round_up_dyadic(const Rational& x, unsigned long bits);

} // namespace coingame

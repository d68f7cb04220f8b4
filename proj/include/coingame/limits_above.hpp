#pragma once

#include "coingame/game.hpp"
#include "coingame/perturbation.hpp"

#include <vector>

namespace coingame {

/// w_n from w_n = p^n + (1 - p^n - q^n) w_{n-1}, w_0 = 1. Requires p > 1/2.
Rational w_above_recursion(std::size_t n, const Prob& p);
std::vector<Rational> w_above_values(std::size_t N, const Prob& p);

struct IterationOptions {
        /// Zero keeps every iterate exact. Otherwise, once an iterate needs more
        /// than this many bits it is rounded to a dyadic with this many
        /// fractional bits and the rounding error is added to the radius.
        std::size_t bit_budget = 0;
};

struct LimitW {
        BoundedValue value;
        std::size_t level = 0;      // N, the last iterate
        Rational rounding_error;    // accumulated dyadic rounding, zero when exact
        bool strictly_increasing = true;
};

/*
 * W(p) = lim w_n for p > 1/2.
 *
 * 0 <= w_n - w_{n-1} = p^n (1 - w_{n-1}) - q^n w_{n-1} <= p^n, so
 * W - w_N <= sum_{k>N} p^k = p^(N+1) / (1 - p). Iteration stops at the first N
 * where that tail is within tolerance. Rounding errors pass through later
 * steps with factor 1 - p^n - q^n < 1, so they add up.
 */
LimitW limit_W_detailed(const Prob& p, const Rational& tolerance, IterationOptions options = {});
BoundedValue limit_W(const Prob& p, const Rational& tolerance, IterationOptions options = {});

/// Pi_k = prod_{j>k} (1 - p^j - q^j), truncated at M.
struct ProductTail {
        std::size_t k = 0;
        std::size_t M = 0;
        Rational partial;     // prod_{j=k+1}^{M} (1 - p^j - q^j)
        Rational lower_bound; // partial * (1 - sum_{j>max(k,M)} (p^j + q^j))
};

ProductTail product_tail(const Prob& p, std::size_t k, std::size_t M);

/// sum_{j>N} (p^j + q^j)
Rational power_tail(const Prob& p, std::size_t N);

/// W(p) = sum_{k>=1} p^k Pi_k, truncated at K terms with products truncated at M.
BoundedValue W_series(const Prob& p, std::size_t K, std::size_t M);
/// U(p) = 1 - W(p) = sum_{k>=1} q^k Pi_k, truncated likewise.
BoundedValue U_series(const Prob& p, std::size_t K, std::size_t M);

/// Companion recursion u_n = q^n + (1 - p^n - q^n) u_{n-1}, u_0 = 0.
std::vector<Rational> u_above_values(std::size_t N, const Prob& p);

} // namespace coingame

#pragma once

#include "coingame/rational.hpp"

#include <string_view>
#include <vector>

namespace coingame {

/// Heads probability, strictly inside (0, 1).
class Prob {
public:
        explicit Prob(Rational value);
        static Prob parse(std::string_view text) { return Prob(Rational::parse(text)); }

        const Rational& p() const { return p_; }
        Rational q() const { return Rational(1) - p_; }

        bool above_half() const { return p_ > Rational(1, 2); }
        bool below_half() const { return p_ < Rational(1, 2); }

        friend bool operator==(const Prob&, const Prob&) = default;

private:
        Rational p_;
};

enum class StrategyKind { One, All, Optimal };

/*
 * Optimal winning probabilities w_0 .. w_N.
 *
 * suffix_max[j] = max_{j <= m <= N} values[m]; index 0 includes the absorbing
 * win value 1 and so is always 1.
 */
struct ValueTable {
        Prob p;
        std::vector<Rational> values;
        std::vector<Rational> suffix_max;

        std::size_t horizon() const { return values.size() - 1; }
};

/// Powers x^0 .. x^n.
std::vector<Rational> powers(const Rational& x, std::size_t n);

/// Bellman table. O(N^2) rational operations: the inner maximum over
/// m in [j, n-1] is maintained as a running maximum while j descends.
ValueTable w_table(const Prob& p, std::size_t N);

/// Strategy One: a_n = p^n + (1 - p^n - q^n) a_{n-1}, a_0 = 1.
Rational a_value(std::size_t n, const Prob& p);
std::vector<Rational> a_values(std::size_t N, const Prob& p);

/// Strategy All: b_n = p^n + sum_{j=1}^{n-1} C(n,j) p^(n-j) q^j b_j, b_0 = 1.
Rational b_value(std::size_t n, const Prob& p);
std::vector<Rational> b_values(std::size_t N, const Prob& p);

/// 1/2 - w_{n,p}; -1/2 at n = 0.
Rational deficit(std::size_t n, const Prob& p);

/// LHS - RHS of the deficit recursion
///   D_n = (q^n - p^n)/2 + sum_j C(n,j) p^(n-j) q^j min_{j<=m<=n-1} D_m,
/// with the inner minimum taken by direct scan. Zero whenever the table is right.
Rational deficit_recursion_residual(std::size_t n, const Prob& p);

/// Every m in [j, n-1] attaining max w_m, ascending. Throws unless 1 <= j <= n-1.
std::vector<std::size_t> optimal_keeps(std::size_t n, std::size_t j, const Prob& p);
std::vector<std::size_t> optimal_keeps(const ValueTable& table, std::size_t n, std::size_t j);

/// w_{n-1} < p^n / (p^n + q^n). Requires p > 1/2 and n >= 2.
bool ratio_bound_check(std::size_t n, const Prob& p);

} // namespace coingame

#pragma once

#include "coingame/rational.hpp"

#include <vector>

namespace coingame {

/// An approximation with a rigorous two-sided error radius: the exact
/// quantity lies in [approx - error_radius, approx + error_radius].
struct BoundedValue {
        Rational approx;
        Rational error_radius;

        Rational lower() const { return approx - error_radius; }
        Rational upper() const { return approx + error_radius; }
        bool contains(const Rational& x) const { return lower() <= x && x <= upper(); }
        bool overlaps(const BoundedValue& o) const { return lower() <= o.upper() && o.lower() <= upper(); }

        static BoundedValue from_bounds(const Rational& lo, const Rational& hi);
};

/*
 * First-order deficit coefficients c_1 .. c_N near p = 1/2:
 *
 *   c_1 = 1,  c_n = n / 2^(n-1) + 2^-n sum_{j=1}^{n-1} C(n,j) min_{j<=m<=n-1} c_m.
 *
 * Indexing is 1-based through c() and suffix_min().
 */
struct CnTable {
        std::vector<Rational> values;     // values[n-1] = c_n
        std::vector<Rational> suffix_min; // suffix_min[j-1] = min_{j<=m<=N} c_m

        std::size_t size() const { return values.size(); }
        const Rational& c(std::size_t n) const;
        const Rational& min_from(std::size_t j) const;
};

CnTable c_table(std::size_t N);

/// c_n = A_n + (1 - B_n) c_{n-1} for n >= 7.
struct LinCoeffs {
        std::size_t n = 0;
        Rational A;
        Rational B;
};

LinCoeffs lin_coeffs(std::size_t n);

/// A_n - (27/16) B_n + 3(n^2 - 15n + 36) / (32 2^n); identically zero.
Rational alg_identity_residual(std::size_t n);

/// Closed form of min_{j<=m<=n-1} c_m for n >= 7: c_j for j <= 3, c_{n-1} otherwise.
Rational collapse_min(std::size_t j, std::size_t n, const CnTable& table);

/// A_n + (1 - B_n) c_{n-1}; n >= 7.
Rational c_linear(std::size_t n, const CnTable& table);

/// sum_{k>N} B_k, exactly; N >= 7.
Rational tail_B(std::size_t N);
/// sum_{k>N} A_k, exactly.
Rational tail_A(std::size_t N);
/// 3(k^2 - 15k + 36) / (32 2^k)
Rational delta_term(std::size_t k);
/// sum_{k>N} delta_k, exactly; N >= 12.
Rational tail_delta(std::size_t N);

/// c_12 - 27/16 > 1/60
bool eps_buffer_check();

/// Smallest N >= 7 with c_5 * tail_B(N) <= tolerance.
std::size_t limit_L_level(const Rational& tolerance);

/// L = lim c_n by the monotone route: c_N is an upper bound and
/// c_N - L <= c_5 sum_{k>N} B_k. approx = c_N.
BoundedValue limit_L(const Rational& tolerance);

/*
 * L from the product-series representation started at n0 >= 7 and truncated
 * at M = n0 + terms:
 *
 *   S_M = c_{n0-1} prod_{m=n0}^{M} (1 - B_m) + sum_{k=n0}^{M} A_k prod_{m=k+1}^{M} (1 - B_m)
 *   (1 - tail_B(M)) S_M <= L <= S_M + tail_A(M)
 */
BoundedValue limit_L_formula(std::size_t n0, std::size_t terms);

/// c_n - c_{n-1}; n >= 2.
Rational cn_slope_reference(std::size_t n);

} // namespace coingame

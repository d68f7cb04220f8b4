#include "coingame/perturbation.hpp"

#include "coingame/numerics.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace coingame {

namespace {

const Rational kC1 = 1;
const Rational kC2{3, 2};
const Rational kC3{27, 16};
const Rational kC5{3555, 2048};

// B_k numerator: 2 + k + C(k,2) + C(k,3) = 2 + (5/6) k + (1/6) k^3.
const std::array<Rational, 4> kBPoly{Rational(2), Rational(5, 6), Rational(0), Rational(1, 6)};

// A_k numerator: 2k + c1 k + c2 C(k,2) + c3 C(k,3), expanded in powers of k.
const std::array<Rational, 4> kAPoly{
    Rational(0),
    Rational(2) + kC1 - kC2 / Rational(2) + kC3 / Rational(3),
    kC2 / Rational(2) - kC3 / Rational(2),
    kC3 / Rational(6),
};

// delta_k numerator: 3(k^2 - 15k + 36) / 32.
const std::array<Rational, 4> kDeltaPoly{Rational(108, 32), Rational(-45, 32), Rational(3, 32), Rational(0)};

} // namespace

BoundedValue BoundedValue::from_bounds(const Rational& lo, const Rational& hi)
{
        if (hi < lo)
                throw std::invalid_argument("BoundedValue: upper bound below lower bound");
        return {(lo + hi) / Rational(2), (hi - lo) / Rational(2)};
}

const Rational& CnTable::c(std::size_t n) const
{
        if (n < 1 || n > values.size())
                throw std::out_of_range("c_n requested outside table: n=" + std::to_string(n));
        return values[n - 1];
}

const Rational& CnTable::min_from(std::size_t j) const
{
        if (j < 1 || j > suffix_min.size())
                throw std::out_of_range("suffix minimum requested outside table: j=" + std::to_string(j));
        return suffix_min[j - 1];
}

CnTable c_table(std::size_t N)
{
        if (N < 1)
                throw std::invalid_argument("c_table needs N >= 1");
        std::vector<Rational> c(N);
        c[0] = 1;
        for (std::size_t n = 2; n <= N; ++n) {
                const auto row = binom_row(n);
                Rational sum;
                Rational running_min = c[n - 2];
                for (std::size_t j = n - 1; j >= 1; --j) {
                        running_min = min(running_min, c[j - 1]);
                        sum += Rational(row[j]) * running_min;
                }
                c[n - 1] = Rational(n) * Rational::inv_pow2(n - 1) + sum * Rational::inv_pow2(n);
        }

        std::vector<Rational> suffix(N);
        suffix[N - 1] = c[N - 1];
        for (std::size_t i = N - 1; i-- > 0;)
                suffix[i] = min(c[i], suffix[i + 1]);
        return CnTable{std::move(c), std::move(suffix)};
}

LinCoeffs lin_coeffs(std::size_t n)
{
        if (n < 1)
                throw std::invalid_argument("lin_coeffs needs n >= 1");
        const Rational inv = Rational::inv_pow2(n);
        Rational A = Rational(n) * Rational::inv_pow2(n - 1) +
                     (Rational(n) * kC1 + Rational(binom(n, 2)) * kC2 + Rational(binom(n, 3)) * kC3) * inv;
        Rational B = Rational(BigInt(2 + n + binom(n, 2) + binom(n, 3))) * inv;
        return {n, std::move(A), std::move(B)};
}

Rational delta_term(std::size_t k)
{
        const long kk = static_cast<long>(k);
        return Rational(3 * (kk * kk - 15 * kk + 36), 32) * Rational::inv_pow2(k);
}

Rational alg_identity_residual(std::size_t n)
{
        const LinCoeffs lc = lin_coeffs(n);
        return lc.A - kC3 * lc.B + delta_term(n);
}

Rational collapse_min(std::size_t j, std::size_t n, const CnTable& table)
{
        if (n < 7)
                throw std::invalid_argument("collapse holds only for n >= 7");
        if (j < 1 || j > n - 1 || n - 1 > table.size())
                throw std::invalid_argument("collapse_min needs 1 <= j <= n-1 <= table size");
        return j <= 3 ? table.c(j) : table.c(n - 1);
}

Rational c_linear(std::size_t n, const CnTable& table)
{
        if (n < 7)
                throw std::invalid_argument("linear c_n recursion holds only for n >= 7");
        const LinCoeffs lc = lin_coeffs(n);
        return lc.A + (Rational(1) - lc.B) * table.c(n - 1);
}

Rational tail_B(std::size_t N)
{
        if (N < 7)
                throw std::invalid_argument("tail_B needs N >= 7");
        return poly_geo_tail(kBPoly, N);
}

Rational tail_A(std::size_t N)
{
        return poly_geo_tail(kAPoly, N);
}

Rational tail_delta(std::size_t N)
{
        if (N < 12)
                throw std::invalid_argument("tail_delta needs N >= 12");
        return poly_geo_tail(kDeltaPoly, N);
}

bool eps_buffer_check()
{
        return c_table(12).c(12) - kC3 > Rational(1, 60);
}

std::size_t limit_L_level(const Rational& tolerance)
{
        if (tolerance.sign() <= 0)
                throw std::invalid_argument("tolerance must be positive");
        std::size_t N = 7;
        while (kC5 * tail_B(N) > tolerance)
                ++N;
        return N;
}

BoundedValue limit_L(const Rational& tolerance)
{
        // For k > N >= 7: c_{k-1} - c_k = B_k c_{k-1} - A_k <= c_5 B_k, since
        // c is decreasing from n = 5 on and A_k > 0. Summing gives the radius.
        const std::size_t N = limit_L_level(tolerance);
        const CnTable table = c_table(N);
        return {table.c(N), kC5 * tail_B(N)};
}

BoundedValue limit_L_formula(std::size_t n0, std::size_t terms)
{
        if (n0 < 7)
                throw std::invalid_argument("limit formula needs n0 >= 7");
        if (terms < 1)
                throw std::invalid_argument("limit formula needs at least one term");
        const std::size_t M = n0 + terms;
        const Rational start = c_table(n0 - 1).c(n0 - 1);

        // Backward sweep: tail_product = prod_{m=k+1}^{M} (1 - B_m).
        Rational tail_product = 1;
        Rational series;
        for (std::size_t k = M; k >= n0; --k) {
                const LinCoeffs lc = lin_coeffs(k);
                series += lc.A * tail_product;
                tail_product *= Rational(1) - lc.B;
        }
        const Rational partial = start * tail_product + series;

        // 1 - sum B_m <= prod_{m>M} (1 - B_m) <= 1 because every B_m lies in (0,1).
        const Rational lower = (Rational(1) - tail_B(M)) * partial;
        const Rational upper = partial + tail_A(M);
        return BoundedValue::from_bounds(lower, upper);
}

Rational cn_slope_reference(std::size_t n)
{
        if (n < 2)
                throw std::invalid_argument("cn_slope_reference needs n >= 2");
        const CnTable table = c_table(n);
        return table.c(n) - table.c(n - 1);
}

} // namespace coingame

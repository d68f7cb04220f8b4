#include "coingame/limits_above.hpp"

#include "coingame/numerics.hpp"

#include <stdexcept>

namespace coingame {

namespace {

void require_above_half(const Prob& p, const char* what)
{
        if (!p.above_half())
                throw std::invalid_argument(std::string(what) + " requires p > 1/2, got " + p.p().to_string());
}

} // namespace

std::vector<Rational> w_above_values(std::size_t N, const Prob& p)
{
        require_above_half(p, "linear recursion above 1/2");
        std::vector<Rational> w(N + 1);
        w[0] = 1;
        const Rational q = p.q();
        Rational pn = 1, qn = 1;
        for (std::size_t n = 1; n <= N; ++n) {
                pn *= p.p();
                qn *= q;
                w[n] = pn + (Rational(1) - pn - qn) * w[n - 1];
        }
        return w;
}

Rational w_above_recursion(std::size_t n, const Prob& p)
{
        return w_above_values(n, p)[n];
}

std::vector<Rational> u_above_values(std::size_t N, const Prob& p)
{
        require_above_half(p, "companion recursion");
        std::vector<Rational> u(N + 1);
        u[0] = 0;
        const Rational q = p.q();
        Rational pn = 1, qn = 1;
        for (std::size_t n = 1; n <= N; ++n) {
                pn *= p.p();
                qn *= q;
                u[n] = qn + (Rational(1) - pn - qn) * u[n - 1];
        }
        return u;
}

LimitW limit_W_detailed(const Prob& p, const Rational& tolerance, IterationOptions options)
{
        require_above_half(p, "limit_W");
        if (tolerance.sign() <= 0)
                throw std::invalid_argument("tolerance must be positive");

        const Rational q = p.q();
        LimitW out;
        Rational w = 1;
        Rational pn = 1, qn = 1;
        // p^(N+1) / (1 - p), the bound on W - w_N
        Rational tail = p.p() / q;
        std::size_t n = 0;
        while (true) {
                ++n;
                pn *= p.p();
                qn *= q;
                Rational next = pn + (Rational(1) - pn - qn) * w;
                if (options.bit_budget != 0 && next.bit_size() > options.bit_budget) {
                        Rational rounded = round_down_dyadic(next, options.bit_budget);
                        out.rounding_error += next - rounded;
                        next = std::move(rounded);
                }
                if (next <= w && n > 1)
                        out.strictly_increasing = false;
                w = std::move(next);
                tail *= p.p();
                if (tail + out.rounding_error <= tolerance)
                        break;
        }
        out.level = n;
        out.value = BoundedValue{w, tail + out.rounding_error};
        return out;
}

BoundedValue limit_W(const Prob& p, const Rational& tolerance, IterationOptions options)
{
        return limit_W_detailed(p, tolerance, options).value;
}

Rational power_tail(const Prob& p, std::size_t N)
{
        const Rational q = p.q();
        return p.p().pow(N + 1) / q + q.pow(N + 1) / p.p();
}

ProductTail product_tail(const Prob& p, std::size_t k, std::size_t M)
{
        if (k < 1)
                throw std::invalid_argument("product_tail needs k >= 1");
        const Rational q = p.q();
        Rational partial = 1;
        for (std::size_t j = k + 1; j <= M; ++j)
                partial *= Rational(1) - p.p().pow(j) - q.pow(j);
        const std::size_t cut = k > M ? k : M;
        Rational lower = partial * (Rational(1) - power_tail(p, cut));
        if (lower.sign() < 0)
                lower = 0;
        return ProductTail{k, M, std::move(partial), std::move(lower)};
}

namespace {

// Truncated products prod_{j=k+1}^{M} (1 - p^j - q^j) for k = 1..K, by one backward sweep.
std::vector<Rational> truncated_products(const Prob& p, std::size_t K, std::size_t M)
{
        const Rational q = p.q();
        std::vector<Rational> partial(K + 1, Rational(1));
        Rational running = 1;
        for (std::size_t j = M; j >= 2; --j) {
                running *= Rational(1) - p.p().pow(j) - q.pow(j);
                if (j - 1 <= K)
                        partial[j - 1] = running;
        }
        return partial;
}

BoundedValue weighted_product_series(const Prob& p, const Rational& base, std::size_t K, std::size_t M)
{
        const std::vector<Rational> partial = truncated_products(p, K, M);
        Rational lower, upper;
        Rational weight = 1;
        for (std::size_t k = 1; k <= K; ++k) {
                weight *= base;
                const Rational term = weight * partial[k];
                upper += term;
                Rational shrink = Rational(1) - power_tail(p, k > M ? k : M);
                if (shrink.sign() < 0)
                        shrink = 0;
                lower += term * shrink;
        }
        // Dropped terms: 0 <= sum_{k>K} base^k Pi_k <= base^(K+1) / (1 - base).
        upper += base.pow(K + 1) / (Rational(1) - base);
        return BoundedValue::from_bounds(lower, upper);
}

} // namespace

BoundedValue W_series(const Prob& p, std::size_t K, std::size_t M)
{
        require_above_half(p, "W_series");
        if (K < 1)
                throw std::invalid_argument("W_series needs K >= 1");
        return weighted_product_series(p, p.p(), K, M);
}

BoundedValue U_series(const Prob& p, std::size_t K, std::size_t M)
{
        require_above_half(p, "U_series");
        if (K < 1)
                throw std::invalid_argument("U_series needs K >= 1");
        return weighted_product_series(p, p.q(), K, M);
}

} // namespace coingame

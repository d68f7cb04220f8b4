#include "coingame/game.hpp"

#include "coingame/numerics.hpp"

#include <stdexcept>
#include <string>

namespace coingame {

Prob::Prob(Rational value) : p_(std::move(value))
{
        if (p_ <= Rational(0) || p_ >= Rational(1))
                throw std::invalid_argument("probability must lie strictly inside (0,1), got " + p_.to_string());
}

std::vector<Rational> powers(const Rational& x, std::size_t n)
{
        std::vector<Rational> out(n + 1);
        out[0] = 1;
        for (std::size_t i = 1; i <= n; ++i)
                out[i] = out[i - 1] * x;
        return out;
}

ValueTable w_table(const Prob& p, std::size_t N)
{
        const auto pp = powers(p.p(), N);
        const auto qq = powers(p.q(), N);

        std::vector<Rational> w(N + 1);
        w[0] = 1;
        for (std::size_t n = 1; n <= N; ++n) {
                const auto row = binom_row(n);
                Rational sum = pp[n];
                Rational running_max;
                for (std::size_t j = n - 1; j >= 1; --j) {
                        if (j == n - 1 || running_max < w[j])
                                running_max = w[j];
                        sum += Rational(row[j]) * pp[n - j] * qq[j] * running_max;
                }
                w[n] = std::move(sum);
        }

        std::vector<Rational> suffix(N + 1);
        suffix[N] = w[N];
        for (std::size_t j = N; j-- > 0;)
                suffix[j] = max(w[j], suffix[j + 1]);

        return ValueTable{p, std::move(w), std::move(suffix)};
}

std::vector<Rational> a_values(std::size_t N, const Prob& p)
{
        std::vector<Rational> a(N + 1);
        a[0] = 1;
        const Rational q = p.q();
        Rational pn = 1, qn = 1;
        for (std::size_t n = 1; n <= N; ++n) {
                pn *= p.p();
                qn *= q;
                a[n] = pn + (Rational(1) - pn - qn) * a[n - 1];
        }
        return a;
}

Rational a_value(std::size_t n, const Prob& p)
{
        return a_values(n, p)[n];
}

std::vector<Rational> b_values(std::size_t N, const Prob& p)
{
        const auto pp = powers(p.p(), N);
        const auto qq = powers(p.q(), N);
        std::vector<Rational> b(N + 1);
        b[0] = 1;
        for (std::size_t n = 1; n <= N; ++n) {
                const auto row = binom_row(n);
                Rational sum = pp[n];
                for (std::size_t j = 1; j < n; ++j)
                        sum += Rational(row[j]) * pp[n - j] * qq[j] * b[j];
                b[n] = std::move(sum);
        }
        return b;
}

Rational b_value(std::size_t n, const Prob& p)
{
        return b_values(n, p)[n];
}

Rational deficit(std::size_t n, const Prob& p)
{
        return Rational(1, 2) - w_table(p, n).values[n];
}

Rational deficit_recursion_residual(std::size_t n, const Prob& p)
{
        if (n == 0)
                throw std::invalid_argument("deficit recursion is defined for n >= 1");
        const ValueTable table = w_table(p, n);
        std::vector<Rational> d(n + 1);
        for (std::size_t m = 0; m <= n; ++m)
                d[m] = Rational(1, 2) - table.values[m];

        const Rational pn = p.p().pow(n);
        const Rational qn = p.q().pow(n);
        Rational rhs = (qn - pn) / Rational(2);
        for (std::size_t j = 1; j < n; ++j) {
                Rational lowest = d[j];
                for (std::size_t m = j + 1; m < n; ++m)
                        lowest = min(lowest, d[m]);
                rhs += Rational(binom(n, j)) * p.p().pow(n - j) * p.q().pow(j) * lowest;
        }
        return d[n] - rhs;
}

std::vector<std::size_t> optimal_keeps(const ValueTable& table, std::size_t n, std::size_t j)
{
        if (n < 2 || j < 1 || j > n - 1)
                throw std::invalid_argument("optimal_keeps needs 1 <= j <= n-1, got n=" + std::to_string(n) +
                                            " j=" + std::to_string(j));
        if (n - 1 > table.horizon())
                throw std::invalid_argument("value table too short for optimal_keeps");

        const Rational* best = &table.values[j];
        for (std::size_t m = j + 1; m < n; ++m)
                if (*best < table.values[m])
                        best = &table.values[m];
        std::vector<std::size_t> keeps;
        for (std::size_t m = j; m < n; ++m)
                if (table.values[m] == *best)
                        keeps.push_back(m);
        return keeps;
}

std::vector<std::size_t> optimal_keeps(std::size_t n, std::size_t j, const Prob& p)
{
        if (n < 2 || j < 1 || j > n - 1)
                throw std::invalid_argument("optimal_keeps needs 1 <= j <= n-1, got n=" + std::to_string(n) +
                                            " j=" + std::to_string(j));
        return optimal_keeps(w_table(p, n - 1), n, j);
}

bool ratio_bound_check(std::size_t n, const Prob& p)
{
        if (!p.above_half())
                throw std::invalid_argument("ratio bound requires p > 1/2");
        if (n < 2)
                throw std::invalid_argument("ratio bound requires n >= 2");
        const Rational pn = p.p().pow(n);
        const Rational qn = p.q().pow(n);
        return w_table(p, n - 1).values[n - 1] < pn / (pn + qn);
}

} // namespace coingame

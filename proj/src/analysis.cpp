#include "coingame/analysis.hpp"

#include "coingame/perturbation.hpp"

#include <stdexcept>

namespace coingame {

ValueTableRows value_table(const std::vector<Prob>& p_list, std::size_t n_max, unsigned digits)
{
        if (n_max < 1)
                throw std::invalid_argument("value_table needs n_max >= 1");
        ValueTableRows rows{p_list, digits, std::vector<std::vector<std::string>>(n_max)};
        for (const Prob& p : p_list) {
                const ValueTable table = w_table(p, n_max);
                for (std::size_t n = 1; n <= n_max; ++n)
                        rows.cells[n - 1].push_back(to_decimal(table.values[n], digits).digits);
        }
        return rows;
}

ExtremaReport extrema_scan(const ValueTable& table)
{
        const std::size_t n_max = table.horizon();
        if (n_max < 3)
                throw std::invalid_argument("extrema_scan needs n_max >= 3");
        ExtremaReport report{table.p, 2, n_max - 1, {}, {}};
        const auto& w = table.values;
        for (std::size_t n = 2; n + 1 <= n_max; ++n) {
                if (w[n - 1] > w[n] && w[n] < w[n + 1])
                        report.minima.push_back(n);
                else if (w[n - 1] < w[n] && w[n] > w[n + 1])
                        report.maxima.push_back(n);
        }
        return report;
}

ExtremaReport extrema_scan(const Prob& p, std::size_t n_max)
{
        if (n_max < 3)
                throw std::invalid_argument("extrema_scan needs n_max >= 3");
        return extrema_scan(w_table(p, n_max));
}

SlopeCheck slope_check(std::size_t n, const std::vector<Rational>& deltas, const Rational& tolerance)
{
        if (n < 1)
                throw std::invalid_argument("slope_check needs n >= 1");
        if (deltas.empty())
                throw std::invalid_argument("slope_check needs at least one delta");
        for (std::size_t i = 0; i < deltas.size(); ++i) {
                if (deltas[i].sign() <= 0 || deltas[i] >= Rational(1, 2))
                        throw std::invalid_argument("slope_check deltas must lie in (0, 1/2)");
                if (i > 0 && !(deltas[i] < deltas[i - 1]))
                        throw std::invalid_argument("slope_check deltas must be strictly decreasing");
        }

        SlopeCheck out;
        out.n = n;
        out.deltas = deltas;
        out.reference = c_table(n).c(n);
        out.tolerance = tolerance;
        out.monotone = true;
        Rational previous_error;
        for (std::size_t i = 0; i < deltas.size(); ++i) {
                const Prob p(Rational(1, 2) - deltas[i]);
                const Rational quotient = deficit(n, p) / deltas[i];
                const Rational error = (quotient - out.reference).abs();
                if (i > 0 && previous_error < error)
                        out.monotone = false;
                previous_error = error;
                out.quotients.push_back(quotient);
        }
        out.within = previous_error <= tolerance;
        return out;
}

ExtremaReport shape_report(const Rational& delta, std::size_t n_max)
{
        if (delta.sign() <= 0 || delta >= Rational(1, 2))
                throw std::invalid_argument("shape_report needs 0 < delta < 1/2");
        return extrema_scan(Prob(Rational(1, 2) - delta), n_max);
}

} // namespace coingame

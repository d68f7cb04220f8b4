#pragma once

#include "coingame/game.hpp"
#include "coingame/numerics.hpp"

#include <string>
#include <vector>

namespace coingame {

/// Rendered w_{n,p}: cells[n-1][i] is w_{n, p_list[i]} at the requested digits.
struct ValueTableRows {
        std::vector<Prob> probs;
        unsigned digits = 8;
        std::vector<std::vector<std::string>> cells;
};

ValueTableRows value_table(const std::vector<Prob>& p_list, std::size_t n_max, unsigned digits);

/// Strict interior local extrema of n -> w_{n,p} over n in [2, n_max-1].
struct ExtremaReport {
        Prob p;
        std::size_t n_first = 2;
        std::size_t n_last = 2;
        std::vector<std::size_t> minima;
        std::vector<std::size_t> maxima;
};

ExtremaReport extrema_scan(const Prob& p, std::size_t n_max);
ExtremaReport extrema_scan(const ValueTable& table);

/// Deficit quotients D_{n, 1/2-delta} / delta against c_n.
struct SlopeCheck {
        std::size_t n = 0;
        std::vector<Rational> deltas;
        std::vector<Rational> quotients;
        Rational reference;
        Rational tolerance;
        bool monotone = false;  // |quotient - c_n| non-increasing along deltas
        bool within = false;    // final quotient within tolerance of c_n
        bool passed() const { return monotone && within; }
};

SlopeCheck slope_check(std::size_t n, const std::vector<Rational>& deltas, const Rational& tolerance);

/// extrema_scan at p = 1/2 - delta.
ExtremaReport shape_report(const Rational& delta, std::size_t n_max);

} // namespace coingame

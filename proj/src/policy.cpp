#include "coingame/policy.hpp"

#include "coingame/numerics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coingame {

Policy::Policy(std::size_t horizon)
{
        if (horizon == 0)
                throw std::invalid_argument("policy horizon must be >= 1");
        rows_.resize(horizon);
        for (std::size_t m = 1; m <= horizon; ++m) {
                rows_[m - 1].resize(m);
                for (std::size_t k = 1; k <= m; ++k)
                        rows_[m - 1][k - 1] = static_cast<std::uint32_t>(k);
        }
}

void Policy::check_state(std::size_t m, std::size_t k) const
{
        if (m < 1 || m > horizon() || k < 1 || k > m)
                throw std::out_of_range("policy state (m=" + std::to_string(m) + ", k=" + std::to_string(k) +
                                        ") outside horizon " + std::to_string(horizon()));
}

std::size_t Policy::decision(std::size_t m, std::size_t k) const
{
        check_state(m, k);
        return rows_[m - 1][k - 1];
}

void Policy::set_decision(std::size_t m, std::size_t k, std::size_t set_aside)
{
        check_state(m, k);
        if (set_aside < 1 || set_aside > k)
                throw std::invalid_argument("decision must set aside between 1 and k heads");
        rows_[m - 1][k - 1] = static_cast<std::uint32_t>(set_aside);
}

std::string Policy::to_text() const
{
        std::ostringstream out;
        for (std::size_t m = 1; m <= horizon(); ++m)
                for (std::size_t k = 1; k <= m; ++k)
                        out << m << ' ' << k << ' ' << rows_[m - 1][k - 1] << '\n';
        return out.str();
}

Policy Policy::from_text(std::string_view text)
{
        struct Entry {
                std::size_t m, k, i;
        };
        std::vector<Entry> entries;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t horizon = 0;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
                ++line_no;
                if (auto hash = line.find('#'); hash != std::string::npos)
                        line.erase(hash);
                std::istringstream fields(line);
                long long m = 0, k = 0, i = 0;
                if (!(fields >> m)) {
                        continue;
                }
                std::string rest;
                if (!(fields >> k >> i) || (fields >> rest) || m < 1 || k < 1 || i < 1)
                        throw std::invalid_argument("policy line " + std::to_string(line_no) + ": expected 'm k i'");
                entries.push_back({static_cast<std::size_t>(m), static_cast<std::size_t>(k),
                                   static_cast<std::size_t>(i)});
                horizon = std::max(horizon, static_cast<std::size_t>(m));
        }
        if (horizon == 0)
                throw std::invalid_argument("policy text has no entries");

        Policy pi(horizon);
        std::vector<std::vector<bool>> seen(horizon);
        for (std::size_t m = 1; m <= horizon; ++m)
                seen[m - 1].assign(m, false);
        for (const auto& e : entries) {
                if (e.k > e.m)
                        throw std::invalid_argument("policy entry has k > m");
                if (seen[e.m - 1][e.k - 1])
                        throw std::invalid_argument("duplicate policy entry for state (" + std::to_string(e.m) +
                                                    ", " + std::to_string(e.k) + ")");
                seen[e.m - 1][e.k - 1] = true;
                pi.set_decision(e.m, e.k, e.i);
        }
        for (std::size_t m = 1; m <= horizon; ++m)
                for (std::size_t k = 1; k <= m; ++k)
                        if (!seen[m - 1][k - 1])
                                throw std::invalid_argument("policy missing state (" + std::to_string(m) + ", " +
                                                            std::to_string(k) + ")");
        return pi;
}

Policy make_one(std::size_t horizon)
{
        Policy pi(horizon);
        for (std::size_t m = 1; m <= horizon; ++m)
                for (std::size_t k = 1; k < m; ++k)
                        pi.set_decision(m, k, 1);
        return pi;
}

Policy make_all(std::size_t horizon)
{
        return Policy(horizon);
}

Policy make_policy(StrategyKind kind, std::size_t horizon, const Prob& p)
{
        switch (kind) {
        case StrategyKind::One:
                return make_one(horizon);
        case StrategyKind::All:
                return make_all(horizon);
        case StrategyKind::Optimal:
                break;
        }
        // Keep the smallest optimal number of coins; all-heads rounds cash in.
        const ValueTable table = w_table(p, horizon);
        Policy pi(horizon);
        for (std::size_t m = 2; m <= horizon; ++m)
                for (std::size_t k = 1; k < m; ++k) {
                        const std::size_t tails = m - k;
                        const std::size_t keep = optimal_keeps(table, m, tails).front();
                        pi.set_decision(m, k, m - keep);
                }
        return pi;
}

namespace {

struct Weights {
        // weight[m][k] = C(m,k) p^k q^(m-k)
        std::vector<std::vector<Rational>> weight;

        Weights(std::size_t n, const Prob& p)
        {
                const auto pp = powers(p.p(), n);
                const auto qq = powers(p.q(), n);
                weight.resize(n + 1);
                for (std::size_t m = 1; m <= n; ++m) {
                        const auto row = binom_row(m);
                        weight[m].resize(m + 1);
                        for (std::size_t k = 0; k <= m; ++k)
                                weight[m][k] = Rational(row[k]) * pp[k] * qq[m - k];
                }
        }
};

Rational state_value(const Weights& w, const Policy& pi, std::size_t m, const std::vector<Rational>& v)
{
        Rational sum;
        for (std::size_t k = 1; k <= m; ++k)
                sum += w.weight[m][k] * v[m - pi.decision(m, k)];
        return sum;
}

} // namespace

PolicyValue evaluate(const Policy& pi, const Prob& p)
{
        const std::size_t n = pi.horizon();
        const Weights w(n, p);
        std::vector<Rational> v(n + 1);
        v[0] = 1;
        for (std::size_t m = 1; m <= n; ++m)
                v[m] = state_value(w, pi, m, v);
        return PolicyValue{pi, p, std::move(v)};
}

Rational eval_policy(const Policy& pi, std::size_t n, const Prob& p)
{
        if (n > pi.horizon())
                throw std::invalid_argument("eval_policy: n exceeds policy horizon");
        if (n == 0)
                return 1;
        const Weights w(n, p);
        std::vector<Rational> v(n + 1);
        v[0] = 1;
        for (std::size_t m = 1; m <= n; ++m)
                v[m] = state_value(w, pi, m, v);
        return v[n];
}

std::uint64_t policy_count(std::size_t n)
{
        std::uint64_t count = 1, fact = 1;
        for (std::size_t m = 1; m <= n; ++m) {
                fact *= m;
                count *= fact;
        }
        return count;
}

namespace {

struct Enumerator {
        std::size_t n;
        const Weights& w;
        const std::function<void(const Policy&, const Rational&)>& visit;
        Policy pi;
        std::vector<Rational> v;

        void descend(std::size_t m)
        {
                if (m > n) {
                        visit(pi, v[n]);
                        return;
                }
                // Odometer over row m, k = 1 most significant, every i starting at 1.
                for (std::size_t k = 1; k <= m; ++k)
                        pi.set_decision(m, k, 1);
                while (true) {
                        v[m] = state_value(w, pi, m, v);
                        descend(m + 1);
                        std::size_t k = m;
                        while (k >= 1 && pi.decision(m, k) == k) {
                                pi.set_decision(m, k, 1);
                                --k;
                        }
                        if (k == 0)
                                break;
                        pi.set_decision(m, k, pi.decision(m, k) + 1);
                }
        }
};

} // namespace

void for_each_policy(std::size_t n, const Prob& p,
                     const std::function<void(const Policy&, const Rational&)>& visit)
{
        if (n == 0)
                throw std::invalid_argument("policy enumeration needs n >= 1");
        if (n > kBruteForceLimit)
                throw std::invalid_argument("n = " + std::to_string(n) + " exceeds brute-force guard of " +
                                            std::to_string(kBruteForceLimit));
        const Weights w(n, p);
        Enumerator e{n, w, visit, Policy(n), std::vector<Rational>(n + 1)};
        e.v[0] = 1;
        e.descend(1);
}

BruteForceResult brute_force(std::size_t n, const Prob& p)
{
        BruteForceResult result;
        bool first = true;
        for_each_policy(n, p, [&](const Policy& pi, const Rational& value) {
                ++result.policies;
                if (first || result.best < value) {
                        result.best = value;
                        result.argmax = pi;
                        first = false;
                }
        });
        return result;
}

Rational brute_force_value(std::size_t n, const Prob& p)
{
        return brute_force(n, p).best;
}

} // namespace coingame

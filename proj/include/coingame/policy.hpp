#pragma once

#include "coingame/game.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace coingame {

/*
 * Deterministic Markov policy: in state m (coins still in play), after seeing
 * k >= 1 heads, set aside i in [1, k] of them.
 */
class Policy {
public:
        explicit Policy(std::size_t horizon);

        std::size_t horizon() const { return rows_.size(); }

        std::size_t decision(std::size_t m, std::size_t k) const;
        void set_decision(std::size_t m, std::size_t k, std::size_t set_aside);

        /// "m k i" per line, ascending in (m, k).
        std::string to_text() const;
        /// Inverse of to_text. Every (m, k) up to the largest m must appear exactly once.
        static Policy from_text(std::string_view text);

        friend bool operator==(const Policy&, const Policy&) = default;

private:
        void check_state(std::size_t m, std::size_t k) const;

        // rows_[m-1][k-1] = decision(m, k)
        std::vector<std::vector<std::uint32_t>> rows_;
};

Policy make_one(std::size_t horizon);
Policy make_all(std::size_t horizon);
Policy make_policy(StrategyKind kind, std::size_t horizon, const Prob& p);

struct PolicyValue {
        Policy policy;
        Prob p;
        std::vector<Rational> values;
};

/// v_0 .. v_horizon for the whole policy, in one bottom-up pass.
PolicyValue evaluate(const Policy& pi, const Prob& p);
/// v_n; requires n <= horizon.
Rational eval_policy(const Policy& pi, std::size_t n, const Prob& p);

inline constexpr std::size_t kBruteForceLimit = 6;

/// prod_{m=1}^{n} m!
std::uint64_t policy_count(std::size_t n);

/// Visits every deterministic policy of horizon n in lexicographic order over
/// (m, k) with i ascending, passing the policy and its value v_n.
void for_each_policy(std::size_t n, const Prob& p,
                     const std::function<void(const Policy&, const Rational&)>& visit);

struct BruteForceResult {
        Rational best;
        std::uint64_t policies = 0;
        Policy argmax{1};
};

/// Exact maximum of v_n over all policies. Throws when n > kBruteForceLimit.
BruteForceResult brute_force(std::size_t n, const Prob& p);
Rational brute_force_value(std::size_t n, const Prob& p);

} // namespace coingame

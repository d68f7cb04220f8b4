#pragma once

#include "coingame/policy.hpp"

#include <cstdint>
#include <optional>

namespace coingame {

/// SplitMix64 (Steele, Lea, Flood 2014). One stream per trial, seeded by
/// mixing (seed, trial index), so results do not depend on scheduling.
class SplitMix64 {
public:
        explicit SplitMix64(std::uint64_t state) : state_(state) {}

        std::uint64_t next()
        {
                std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
                z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
                z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
                return z ^ (z >> 31);
        }

        static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);

private:
        std::uint64_t state_;
};

struct SimConfig {
        std::size_t n = 1;
        Prob p{Rational(1, 2)};
        std::uint64_t trials = 1;
        std::uint64_t seed = 0;
        Policy policy{1};
        unsigned threads = 1;
};

struct SimResult {
        std::uint64_t wins = 0;
        std::uint64_t trials = 0;
        double estimate = 0.0;
        double std_error = 0.0;
        std::optional<double> z_vs;
};

inline constexpr std::uint64_t kMaxRoundsPerGame = 1'000'000;

/// Heads iff a uniform 64-bit draw u satisfies u < ceil(p 2^64).
std::uint64_t heads_threshold(const Prob& p);

/// Plays one game from n coins; true on a win.
bool play_game(std::size_t n, std::uint64_t threshold, const Policy& policy, SplitMix64& rng);

/// Runs config.trials independent games. z_vs is filled when an analytic
/// value is supplied; the standard error is floored at 1/trials.
SimResult simulate(const SimConfig& config, const std::optional<Rational>& analytic = std::nullopt);

} // namespace coingame

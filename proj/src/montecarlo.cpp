#include "coingame/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace coingame {

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial)
{
        SplitMix64 mixer(seed);
        const std::uint64_t a = mixer.next();
        SplitMix64 index_mixer(trial ^ 0x6a09e667f3bcc909ULL);
        return SplitMix64(a ^ index_mixer.next());
}

std::uint64_t heads_threshold(const Prob& p)
{
        BigInt scaled = p.p().num_ref();
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 64);
        BigInt ceil_q;
        mpz_cdiv_q(ceil_q.get_mpz_t(), scaled.get_mpz_t(), p.p().den_ref().get_mpz_t());
        BigInt cap = std::numeric_limits<std::uint64_t>::max();
        if (ceil_q > cap)
                ceil_q = cap;
        std::uint64_t out = 0;
        mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, ceil_q.get_mpz_t());
        return out;
}

bool play_game(std::size_t n, std::uint64_t threshold, const Policy& policy, SplitMix64& rng)
{
        std::size_t coins = n;
        for (std::uint64_t round = 0; round < kMaxRoundsPerGame; ++round) {
                if (coins == 0)
                        return true;
                std::size_t heads = 0;
                for (std::size_t c = 0; c < coins; ++c)
                        heads += rng.next() < threshold;
                if (heads == 0)
                        return false;
                coins -= policy.decision(coins, heads);
        }
        throw std::runtime_error("game exceeded the round cap; policy is malformed");
}

SimResult simulate(const SimConfig& config, const std::optional<Rational>& analytic)
{
        if (config.n < 1)
                throw std::invalid_argument("simulate needs n >= 1");
        if (config.trials < 1)
                throw std::invalid_argument("simulate needs at least one trial");
        if (config.policy.horizon() < config.n)
                throw std::invalid_argument("policy horizon " + std::to_string(config.policy.horizon()) +
                                            " is shorter than n = " + std::to_string(config.n));

        const std::uint64_t threshold = heads_threshold(config.p);
        const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, 64));

        std::vector<std::uint64_t> wins(workers, 0);
        auto run_block = [&](unsigned w) {
                const std::uint64_t begin = config.trials * w / workers;
                const std::uint64_t end = config.trials * (w + 1) / workers;
                std::uint64_t local = 0;
                for (std::uint64_t t = begin; t < end; ++t) {
                        SplitMix64 rng = SplitMix64::for_trial(config.seed, t);
                        local += play_game(config.n, threshold, config.policy, rng);
                }
                wins[w] = local;
        };
        if (workers == 1) {
                run_block(0);
        } else {
                std::vector<std::jthread> pool;
                for (unsigned w = 0; w < workers; ++w)
                        pool.emplace_back(run_block, w);
        }

        SimResult result;
        for (std::uint64_t w : wins)
                result.wins += w;
        result.trials = config.trials;
        const double trials = static_cast<double>(config.trials);
        result.estimate = static_cast<double>(result.wins) / trials;
        result.std_error = std::sqrt(result.estimate * (1.0 - result.estimate) / trials);
        if (analytic) {
                const double se = std::max(result.std_error, 1.0 / trials);
                result.z_vs = (result.estimate - analytic->to_double()) / se;
        }
        return result;
}

} // namespace coingame

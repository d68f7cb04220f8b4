#include "coingame/numerics.hpp"

#include <array>
#include <stdexcept>

namespace coingame {

BigInt binom(unsigned long n, unsigned long k)
{
        if (k > n)
                return 0;
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), n, k);
        return r;
}

std::vector<BigInt> binom_row(unsigned long n)
{
        std::vector<BigInt> row(n + 1);
        row[0] = 1;
        for (unsigned long k = 1; k <= n; ++k)
                row[k] = row[k - 1] * (n - k + 1) / k;
        return row;
}

DecimalString to_decimal(const Rational& x, unsigned digits)
{
        if (digits == 0)
                throw std::invalid_argument("to_decimal needs at least one digit");

        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
        const BigInt scaled_num = abs(x.num_ref()) * scale;
        const BigInt& den = x.den_ref();

        BigInt quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
        const int half = cmp(BigInt(rem * 2), den);
        if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t())))
                quot += 1;

        std::string body = quot.get_str();
        if (body.size() <= digits)
                body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
        if (x.sign() < 0 && quot != 0)
                body.insert(0, "-");
        return {body, digits};
}

std::string to_exact_string(const Rational& x)
{
        BigInt d = x.denominator();
        unsigned twos = 0, fives = 0;
        while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
                d /= 2;
                ++twos;
        }
        while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
                d /= 5;
                ++fives;
        }
        if (d != 1)
                return x.to_string();
        if (x.is_integer())
                return x.to_string();
        return to_decimal(x, twos > fives ? twos : fives).digits;
}

Rational poly_geo_tail(std::span<const Rational> coeffs, unsigned long N)
{
        if (coeffs.size() > 4)
                throw std::invalid_argument("poly_geo_tail supports degree <= 3");

        // Sum_{i>=1} i^d / 2^i
        static const std::array<long, 4> moment{1, 2, 6, 26};

        // Q(i) = P(N + i) = sum_d coeffs[d] sum_e C(d,e) N^(d-e) i^e
        std::array<Rational, 4> shifted{};
        const Rational n_val(N);
        for (std::size_t d = 0; d < coeffs.size(); ++d)
                for (std::size_t e = 0; e <= d; ++e)
                        shifted[e] += coeffs[d] * Rational(binom(d, e)) * n_val.pow(d - e);

        Rational sum;
        for (std::size_t e = 0; e < shifted.size(); ++e)
                sum += shifted[e] * Rational(moment[e]);
        return sum * Rational::inv_pow2(N);
}

Rational round_down_dyadic(const Rational& x, unsigned long bits)
{
        BigInt scaled = x.num_ref();
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
        BigInt floor_q;
        mpz_fdiv_q(floor_q.get_mpz_t(), scaled.get_mpz_t(), x.den_ref().get_mpz_t());
        return Rational(floor_q) * Rational::inv_pow2(bits);
}

Rational round_up_dyadic(const Rational& x, unsigned long bits)
{
        BigInt scaled = x.num_ref();
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
        BigInt ceil_q;
        mpz_cdiv_q(ceil_q.get_mpz_t(), scaled.get_mpz_t(), x.den_ref().get_mpz_t());
        return Rational(ceil_q) * Rational::inv_pow2(bits);
}

} // namespace coingame

#include "coingame/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace coingame {

namespace {

bool all_digits(std::string_view s)
{
        if (s.empty())
                return false;
        for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                        return false;
        return true;
}

BigInt parse_int(std::string_view s)
{
        bool neg = false;
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
                neg = s.front() == '-';
                s.remove_prefix(1);
        }
        if (!all_digits(s))
                throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
        BigInt v(std::string(s), 10);
        return neg ? BigInt(-v) : v;
}

BigInt pow10(unsigned long e)
{
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
        return r;
}

} // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator))
{
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
{
        if (denominator == 0)
                throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(numerator, denominator);
        q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
                text.remove_prefix(1);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
                text.remove_suffix(1);
        if (text.empty())
                throw std::invalid_argument("empty number");

        if (auto slash = text.find('/'); slash != std::string_view::npos) {
                BigInt num = parse_int(text.substr(0, slash));
                std::string_view den_text = text.substr(slash + 1);
                if (!all_digits(den_text))
                        throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
                BigInt den(std::string(den_text), 10);
                if (den == 0)
                        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
                return Rational(num, den);
        }

        std::string_view mantissa = text;
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
                BigInt ev = parse_int(text.substr(e + 1));
                if (!ev.fits_slong_p() || ::abs(ev) > 100000)
                        throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
                exponent = ev.get_si();
                mantissa = text.substr(0, e);
        }

        bool neg = false;
        if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
                neg = mantissa.front() == '-';
                mantissa.remove_prefix(1);
        }
        std::string_view int_part = mantissa;
        std::string_view frac_part;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
                int_part = mantissa.substr(0, dot);
                frac_part = mantissa.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty())
                throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
                throw std::invalid_argument("malformed number '" + std::string(text) + "'");

        std::string digits = std::string(int_part) + std::string(frac_part);
        BigInt num(digits.empty() ? std::string("0") : digits, 10);
        if (neg)
                num = -num;
        long scale = static_cast<long>(frac_part.size()) - exponent;
        if (scale >= 0)
                return Rational(num, pow10(static_cast<unsigned long>(scale)));
        return Rational(BigInt(num * pow10(static_cast<unsigned long>(-scale))));
}

Rational Rational::inv_pow2(unsigned long k)
{
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
        Rational r;
        r.q_ = mpq_class(BigInt(1), den);
        return r;
}

bool Rational::is_dyadic() const
{
        const mpz_class& d = q_.get_den();
        return mpz_popcount(d.get_mpz_t()) == 1;
}

Rational Rational::abs() const
{
        Rational r;
        r.q_ = ::abs(q_);
        return r;
}

Rational Rational::pow(unsigned long exponent) const
{
        Rational r;
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
        r.q_ = mpq_class(n, d);
        return r;
}

std::size_t Rational::bit_size() const
{
        std::size_t n = mpz_sizeinbase(q_.get_num_mpz_t(), 2);
        std::size_t d = mpz_sizeinbase(q_.get_den_mpz_t(), 2);
        return n > d ? n : d;
}

std::string Rational::to_string() const
{
        if (is_integer())
                return q_.get_num().get_str();
        return q_.get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
        if (o.is_zero())
                throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
        return os << r.to_string();
}

} // namespace coingame

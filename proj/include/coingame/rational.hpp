#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace coingame {

using BigInt = mpz_class;

/*
 * Exact rational number backed by GMP.
 *
 * Always stored in lowest terms with a positive denominator; zero is 0/1.
 * No operation rounds.
 */
class Rational {
public:
        Rational() = default;
        template <std::integral T>
        Rational(T value) {
                if constexpr (std::is_signed_v<T>)
                        q_ = static_cast<long>(value);
                else
                        q_ = static_cast<unsigned long>(value);
        }
        Rational(const BigInt& value) : q_(value) {}
        Rational(long numerator, long denominator);
        Rational(const BigInt& numerator, const BigInt& denominator);

        /// Parses "a", "a/b" or a decimal literal such as "-0.49" or "1e-21".
        /// Throws std::invalid_argument on malformed input or a zero denominator.
        static Rational parse(std::string_view text);

        /// 1 / 2^k
        static Rational inv_pow2(unsigned long k);

        BigInt numerator() const { return q_.get_num(); }
        BigInt denominator() const { return q_.get_den(); }
        const mpz_class& num_ref() const { return q_.get_num(); }
        const mpz_class& den_ref() const { return q_.get_den(); }

        int sign() const { return sgn(q_); }
        bool is_zero() const { return sign() == 0; }
        bool is_integer() const { return q_.get_den() == 1; }
        bool is_dyadic() const;

        Rational abs() const;
        Rational pow(unsigned long exponent) const;
        double to_double() const { return q_.get_d(); }

        /// Bits needed for the larger of |numerator| and denominator.
        std::size_t bit_size() const;

        /// "a" for integers, "a/b" otherwise.
        std::string to_string() const;

        Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
        Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
        Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
        Rational& operator/=(const Rational& o);

        friend Rational operator+(Rational a, const Rational& b) { return a += b; }
        friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
        friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
        friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
        friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

        friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
        friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
                const int c = cmp(a.q_, b.q_);
                return c < 0 ? std::strong_ordering::less
                             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        }

        friend std::ostream& operator<<(std::ostream& os, const Rational& r);

        const mpq_class& raw() const { return q_; }

private:
        mpq_class q_;
};

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

} // namespace coingame

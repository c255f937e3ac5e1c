#ifndef LEIBNIZ_RATIONAL_HPP
#define LEIBNIZ_RATIONAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace leibniz {

/*
 * Exact rational number backed by GMP.
 *
 * Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1. Every
 * arithmetic operation returns a canonical value, so structural equality
 * is numeric equality.
 */
class Rational {
public:
    Rational() = default;
    Rational(long v) : m_value(v) {}                   // NOLINT(google-explicit-constructor)
    Rational(int v) : m_value(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)

    Rational(long num, long den)
    {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        m_value = mpq_class(num, den);
        m_value.canonicalize();
    }

    explicit Rational(mpq_class v) : m_value(std::move(v)) { m_value.canonicalize(); }

    /// Parses "p" or "p/q" with an optional leading sign on p; q must be positive.
    static Rational parse(std::string_view text)
    {
        auto bad = [&] { return ParseError("invalid rational '" + std::string(text) + "'"); };
        if (text.empty())
            throw bad();
        auto slash = text.find('/');
        auto num = text.substr(0, slash);
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
                s.remove_prefix(1);
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        if (!valid_int(num, true))
            throw bad();
        std::string num_str(num.front() == '+' ? num.substr(1) : num);
        mpz_class p(num_str, 10);
        mpz_class q(1);
        if (slash != std::string_view::npos) {
            auto den = text.substr(slash + 1);
            if (!valid_int(den, false))
                throw bad();
            q = mpz_class(std::string(den), 10);
            if (q == 0)
                throw bad();
        }
        return Rational(mpq_class(p, q));
    }

    const mpq_class& value() const { return m_value; }
    mpz_class numerator() const { return m_value.get_num(); }
    mpz_class denominator() const { return m_value.get_den(); }

    bool is_zero() const { return sgn(m_value) == 0; }
    int sign() const { return sgn(m_value); }

    /// Bit length of |num| plus bit length of den; the pivot-selection cost measure.
    std::size_t bit_size() const
    {
        return mpz_sizeinbase(m_value.get_num_mpz_t(), 2) + mpz_sizeinbase(m_value.get_den_mpz_t(), 2);
    }

    /// Canonical text: "p" when den = 1, else "p/q".
    std::string str() const { return m_value.get_str(10); }

    Rational& operator+=(const Rational& o) { m_value += o.m_value; return *this; }
    Rational& operator-=(const Rational& o) { m_value -= o.m_value; return *this; }
    Rational& operator*=(const Rational& o) { m_value *= o.m_value; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        m_value /= o.m_value;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a)
    {
        Rational r;
        r.m_value = -a.m_value;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.m_value == b.m_value; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.m_value < b.m_value; }

    /// this -= f * o, without a temporary for the product.
    void sub_mul(const Rational& f, const Rational& o)
    {
        mpq_class t = f.m_value * o.m_value;
        m_value -= t;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class m_value;
};

} // namespace leibniz

template <>
struct std::hash<leibniz::Rational> {
    std::size_t operator()(const leibniz::Rational& r) const noexcept { return std::hash<std::string>{}(r.str()); }
};

#endif

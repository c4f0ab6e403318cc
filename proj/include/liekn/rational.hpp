#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "liekn/errors.hpp"

namespace liekn {

/**
 * Exact rational number backed by GMP.
 *
 * Always canonical: lowest terms, positive denominator, and a unique zero.
 * Structural equality is therefore value equality.
 */
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) : value_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)

    template <std::integral I, std::integral J>
    Rational(I num, J den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p/q" or "p"; a leading minus is allowed on p only.
    static Rational parse(std::string_view text) {
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        const std::string original(text);
        bool negative = false;
        if (!text.empty() && text.front() == '-') {
            negative = true;
            text.remove_prefix(1);
        }
        std::string_view num = text;
        std::string_view den = "1";
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
        }
        if (!digits(num) || !digits(den)) throw ParseError("malformed rational \"" + original + "\"");
        mpz_class p(std::string(num), 10);
        mpz_class q(std::string(den), 10);
        if (q == 0) throw ParseError("zero denominator in rational \"" + original + "\"");
        if (negative) p = -p;
        return Rational(mpq_class(p, q));
    }

    std::string str() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& gmp() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    int sign() const noexcept { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

} // namespace liekn

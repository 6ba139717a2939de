#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "tsum/sign.hpp"

namespace tsum {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational scalar. Always canonical:
/// gcd(|numerator|, denominator) = 1, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {} // NOLINT: implicit for integer literals
    explicit Rational(const BigInt& value) : v_(value) {}
    Rational(const BigInt& num, const BigInt& den);

    /// Wraps a gmp value that is already canonical (all gmp arithmetic
    /// results are). Raw mpq_t manipulation must canonicalize first.
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    /// Exact conversion; every finite binary double is a rational.
    static Rational from_double(double x);

    /// Accepts an optional-sign decimal integer or "p/q".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    Sign sign() const { return sign_of_cmp(sgn(v_)); }

    std::string str() const { return v_.get_str(); }

    const mpq_class& mpq() const { return v_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ + y.v_));
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ - y.v_));
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ * y.v_));
    }
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& x, const Rational& y) {
        return mpq_equal(x.v_.get_mpq_t(), y.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int c = mpq_cmp(x.v_.get_mpq_t(), y.v_.get_mpq_t());
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    mpq_class v_;
};

} // namespace tsum

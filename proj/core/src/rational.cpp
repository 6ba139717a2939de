#include "tsum/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tsum {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_class q(num);
    q /= mpq_class(den); // canonicalizes, makes denominator positive
    v_ = std::move(q);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("cannot convert non-finite double to rational");
    }
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x); // exact
    return Rational(std::move(q));
}

Rational operator/(const Rational& x, const Rational& y) {
    if (sgn(y.v_) == 0) {
        throw std::domain_error("rational division by zero");
    }
    return Rational(mpq_class(x.v_ / y.v_));
}

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        pos = 1;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("sign without digits");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("invalid digit in number: " + std::string(text));
        }
    }
    // mpz accepts '-' but not '+'
    std::string s(text[0] == '+' ? text.substr(1) : text);
    return BigInt(s);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in: " + std::string(text));
    }
    return Rational(num, den);
}

} // namespace tsum

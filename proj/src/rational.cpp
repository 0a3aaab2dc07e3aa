#include "g2/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace g2 {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

// Optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return all_digits(s);
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

mpq_class parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        const std::string_view exp_part = s.substr(epos + 1);
        if (!is_integer_literal(exp_part) || exp_part.size() > 6) {
            throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        }
        exponent = std::stol(std::string(exp_part));
        s = s.substr(0, epos);
    }
    std::string digits;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = s.substr(0, dot);
        const std::string_view frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty())) {
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        }
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s)) {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
        digits = std::string(s);
    }
    mpq_class value(mpz_class(digits, 10));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        value /= mpq_class(scale);
    } else {
        value *= mpq_class(scale);
    }
    value.canonicalize();
    return negative ? mpq_class(-value) : value;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const std::string_view num = s.substr(0, slash);
        const std::string_view den = s.substr(slash + 1);
        if (!is_integer_literal(num) || !all_digits(den)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        mpz_class d = parse_integer(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        mpq_class q(parse_integer(num), d);
        q.canonicalize();
        return Rational(q);
    }
    if (is_integer_literal(s)) return Rational(mpq_class(parse_integer(s)));
    return Rational(parse_decimal(s));
}

Rational Rational::from_double(double value) {
    if (value != value || value - value != 0.0) {
        throw std::invalid_argument("non-finite double has no rational value");
    }
    return Rational(mpq_class(value));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace g2

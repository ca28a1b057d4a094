#include "graphpoly/rational.hpp"

#include "graphpoly/errors.hpp"

#include <cctype>

namespace graphpoly {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(const std::string& s, const std::string& whole) {
    std::string body = s;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    if (!all_digits(body)) throw ParseError("invalid rational: " + whole);
    BigInt value(body);
    return negative ? -value : value;
}

} // namespace

Rational rat_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("invalid rational: " + text);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s, text));
    BigInt num = parse_integer(s.substr(0, slash), text);
    std::string den_part = s.substr(slash + 1);
    if (!all_digits(den_part)) throw ParseError("invalid rational: " + text);
    BigInt den(den_part);
    if (den == 0) throw ParseError("invalid rational: " + text);
    return Rational(num, den);
}

std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rat_pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw DomainError("zero to a negative power");
        return rat_pow(Rational(1) / base, -e);
    }
    Rational result(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

double rat_double(const Rational& r) { return r.convert_to<double>(); }

Rational falling_factorial(const Rational& x, int k) {
    Rational result(1);
    for (int i = 0; i < k; ++i) result *= x - i;
    return result;
}

} // namespace graphpoly

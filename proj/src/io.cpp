#include "xoplab/io.hpp"

#include <charconv>
#include <stdexcept>

namespace xoplab {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::string term_text(const std::string& coeff, std::size_t power) {
    if (power == 0) return coeff;
    std::string x = power == 1 ? "x" : "x^" + std::to_string(power);
    if (coeff == "1") return x;
    if (coeff == "-1") return "-" + x;
    return coeff + " " + x;
}

template <class P, class Fmt>
std::string poly_text(const P& p, Fmt&& fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t j = p.coeffs().size(); j-- > 0;) {
        auto c = p.coeff(j);
        std::string cs = fmt(c);
        if (cs == "0" || cs == "-0") continue;
        if (out.empty()) {
            out = term_text(cs, j);
        } else if (!cs.empty() && cs[0] == '-') {
            out += " - " + term_text(cs.substr(1), j);
        } else {
            out += " + " + term_text(cs, j);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string format_poly_text(const PolyQ& p) {
    return poly_text(p, [](const Rational& c) { return c.to_string(); });
}

std::string format_poly_text(const PolyC& p) {
    return poly_text(p, [](const Complex& c) {
        if (c.imag() == 0.0) return format_double(c.real());
        return "(" + format_double(c.real()) + (c.imag() < 0 ? "-" : "+") +
               format_double(std::abs(c.imag())) + "i)";
    });
}

std::string format_poly_csv(const PolyQ& p) {
    std::string out;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        if (j) out += ",";
        out += p.coeff(j).to_fraction_string();
    }
    return out.empty() ? "0/1" : out;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty");
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::from_string(s);
    // Decimal literal: shift the point into an exact denominator.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    BigInt den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= BigInt(10);
    return Rational(BigInt::from_string(digits), den);
}

Complex parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma != std::string::npos) {
        return Complex(parse_rational(s.substr(0, comma)).to_double(),
                       parse_rational(s.substr(comma + 1)).to_double());
    }
    if (!s.empty() && s.back() == 'i') {
        auto body = s.substr(0, s.size() - 1);
        auto split = body.find_last_of("+-");
        if (split != std::string::npos && split > 0) {
            double re = parse_rational(body.substr(0, split)).to_double();
            std::string imag = body.substr(split);
            if (imag == "+" ) imag = "1";
            if (imag == "-") imag = "-1";
            return Complex(re, parse_rational(imag).to_double());
        }
        if (body.empty() || body == "+") return Complex(0.0, 1.0);
        if (body == "-") return Complex(0.0, -1.0);
        return Complex(0.0, parse_rational(body).to_double());
    }
    return Complex(parse_rational(s).to_double(), 0.0);
}

}  // namespace xoplab

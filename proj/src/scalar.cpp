#include "hyperalg/scalar.hpp"

#include <cctype>
#include <cstdio>

#include "hyperalg/error.hpp"

namespace hyperalg {

std::string ScalarTraits<double>::to_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(Errc::InvalidInput, "empty rational literal");

    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            Rational r(s, 10);
            if (r.get_den() == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + text + "'");
            r.canonicalize();
            return r;
        }
        bool negative = s[0] == '-';
        std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
        dot = body.find('.');
        std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::InvalidInput, "malformed decimal '" + text + "'");
        Integer num(digits, 10);
        Integer den = 1;
        for (std::size_t i = dot + 1; i < body.size(); ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    } catch (const std::invalid_argument&) {
        throw Error(Errc::InvalidInput, "malformed rational '" + text + "'");
    }
}

}  // namespace hyperalg

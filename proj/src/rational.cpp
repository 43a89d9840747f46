#include "wedgecert/rational.hpp"

#include <cctype>

namespace wedgecert {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view token) {
    if (token.empty())
        return std::nullopt;
    bool negative = false;
    if (token.front() == '+' || token.front() == '-') {
        negative = token.front() == '-';
        token.remove_prefix(1);
    }
    std::string_view num = token;
    std::string_view den = "1";
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        num = token.substr(0, slash);
        den = token.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        return std::nullopt;
    Integer d{std::string(den)};
    if (d == 0)
        return std::nullopt;
    Integer p{std::string(num)};
    if (negative)
        p = -p;
    return make_rational(std::move(p), std::move(d));
}

std::string rational_str(const Rational& r) {
    std::string s = rat_num(r).str();
    Integer d = rat_den(r);
    if (d != 1) {
        s += '/';
        s += d.str();
    }
    return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace wedgecert

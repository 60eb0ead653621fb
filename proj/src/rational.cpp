#include "rodwave/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rodwave {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational");

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        const mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        result = Rational(n, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class n(std::string(whole) + std::string(frac), 10);
        result = Rational(n, scale);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        result = Rational(mpz_class(std::string(body), 10));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value)
{
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace rodwave

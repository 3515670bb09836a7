#include "arborkit/rational.hpp"

#include <charconv>

#include "arborkit/graph.hpp"

namespace arborkit {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_part(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error("malformed rational '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_part(text, text));
    std::int64_t num = parse_part(text.substr(0, slash), text);
    std::int64_t den = parse_part(text.substr(slash + 1), text);
    if (den == 0) throw Error("rational with zero denominator '" + std::string(text) + "'");
    return Rational(num, den);
}

std::int64_t ceil(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

}  // namespace arborkit

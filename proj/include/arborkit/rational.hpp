#ifndef ARBORKIT_RATIONAL_HPP
#define ARBORKIT_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace arborkit {

// Canonical exact rational (reduced, positive denominator).
using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including integers ("2/1").
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

}  // namespace arborkit

#endif  // ARBORKIT_RATIONAL_HPP

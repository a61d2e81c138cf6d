/*
   Copyright 2026 The unf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace unf {

// The scalar field: arbitrary-precision rationals, always kept canonical
// (positive denominator, coprime numerator/denominator). GMP does the
// canonicalization; everything built on top only needs field operations.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses the text form used by every file format: an optional sign, a
/// decimal integer, and an optional "/" followed by a positive decimal
/// integer. Examples: "5", "-3/7". Throws std::invalid_argument on anything
/// else, including a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](const char* why) -> Rational {
        throw std::invalid_argument("invalid rational \"" + std::string(text) + "\": " + why);
    };

    std::size_t pos = 0;
    const std::size_t slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (num_part.empty())
        return fail("empty numerator");
    if (num_part[0] == '+' || num_part[0] == '-')
        pos = 1;
    if (pos == num_part.size())
        return fail("sign without digits");
    for (std::size_t i = pos; i < num_part.size(); ++i)
        if (num_part[i] < '0' || num_part[i] > '9')
            return fail("numerator is not a decimal integer");

    // GMP rejects an explicit leading '+', so hand it only the digits.
    Integer num{std::string(num_part.substr(pos))};
    if (num_part[0] == '-')
        num = -num;
    if (slash == std::string_view::npos)
        return Rational(num);

    std::string_view den_part = text.substr(slash + 1);
    if (den_part.empty())
        return fail("empty denominator");
    for (char c : den_part)
        if (c < '0' || c > '9')
            return fail("denominator is not a positive decimal integer");
    Integer den{std::string(den_part)};
    if (den == 0)
        return fail("zero denominator");
    return Rational(num, den);
}

/// Text form matching parse_rational: "n" when the denominator is 1,
/// otherwise "n/d" with d > 0.
inline std::string to_string(const Rational& q) {
    return q.str();
}

} // namespace unf

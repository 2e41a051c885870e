#ifndef MILNOR_INTEGER_HPP
#define MILNOR_INTEGER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace milnor {

using Integer = mpz_class;

std::string to_string(const Integer& value);

// Parses an optionally signed decimal integer; throws InputError otherwise.
Integer parse_integer(std::string_view text);

// True when |value| <= 2^53, i.e. exactly representable as a JSON number.
bool fits_json_number(const Integer& value);

std::int64_t to_int64(const Integer& value);

// Floor division and the matching nonnegative-remainder modulus for b != 0.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace milnor

#endif  // MILNOR_INTEGER_HPP

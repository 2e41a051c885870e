#include "milnor/integer.hpp"

#include <cctype>

#include "milnor/errors.hpp"

namespace milnor {

std::string to_string(const Integer& value) { return value.get_str(); }

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw InputError("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InputError("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

bool fits_json_number(const Integer& value) {
  static const Integer limit = Integer(1) << 53;
  return abs(value) <= limit;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw InputError("integer out of 64-bit range: " + to_string(value));
  return value.get_si();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace milnor

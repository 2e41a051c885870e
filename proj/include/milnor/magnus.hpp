#ifndef MILNOR_MAGNUS_HPP
#define MILNOR_MAGNUS_HPP

#include <map>
#include <string>
#include <vector>

#include "milnor/integer.hpp"
#include "milnor/words.hpp"

namespace milnor {

// Enough for the degree-2 coefficient behind mu(123) plus the F_3 test.
inline constexpr int kDefaultDegreeCap = 3;

// Sequence of 1-based variable indices; {1, 2} is the monomial a_1 a_2.
using Monomial = std::vector<int>;

// Truncated power series in non-commuting variables a_1..a_r with integer
// coefficients. Monomials longer than the degree cap are discarded and zero
// coefficients are never stored. Terms iterate in lexicographic monomial order.
class MagnusSeries {
 public:
  MagnusSeries(int rank, int degree_cap);

  static MagnusSeries one(int rank, int degree_cap);

  int rank() const { return rank_; }
  int degree_cap() const { return degree_cap_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }

  // Adds `c` to the coefficient of `m`. Terms beyond the cap are dropped.
  void add_term(const Monomial& m, const Integer& c);

  // Canonical text: `c * a_i a_j ...` terms joined by " + " / " - ", the
  // constant term as a bare integer, the zero series as "0".
  std::string to_string() const;

  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

 private:
  int rank_;
  int degree_cap_;
  std::map<Monomial, Integer> terms_;
};

MagnusSeries series_mul(const MagnusSeries& lhs, const MagnusSeries& rhs);

// The Magnus representation: x_i -> 1 + a_i, x_i^-1 -> 1 - a_i + a_i^2 - ...,
// truncated at degree_cap.
MagnusSeries phi(const FreeWord& word, int degree_cap);

// Throws InputError if the monomial is longer than the cap or uses a bad index.
Integer coefficient(const MagnusSeries& series, const Monomial& monomial);

// Milnor's triple linking number mu(123): the coefficient of a_1 a_2 in the
// Magnus expansion of the third longitude. Requires rank 3 and all exponent
// sums zero (pairwise linking numbers vanish); otherwise PreconditionError
// naming the first offending generator.
Integer mu123(const FreeWord& lambda3, int degree_cap = kDefaultDegreeCap);

// Largest k <= kmax such that phi(w) - 1 has no terms of degree < k. Only a
// statement about membership in F_k for k <= kmax.
int lcs_depth(const FreeWord& word, int kmax);

}  // namespace milnor

#endif  // MILNOR_MAGNUS_HPP

#ifndef MILNOR_NILPOTENT_HPP
#define MILNOR_NILPOTENT_HPP

#include <array>

#include "milnor/integer.hpp"
#include "milnor/words.hpp"

namespace milnor {

// An element of F_2/F_3 for the free group of rank 3, written in the basis
// ([x1,x2], [x1,x3], [x2,x3]). The quotient is free abelian of rank 3.
struct CommutatorClass {
  std::array<Integer, 3> coords{0, 0, 0};

  CommutatorClass operator+(const CommutatorClass& other) const;
  CommutatorClass operator-() const;
  friend bool operator==(const CommutatorClass&, const CommutatorClass&) = default;
};

// Class of [w1, w2] from exponent sums alone:
// (n1 m2 - n2 m1, n1 m3 - n3 m1, n2 m3 - n3 m2).
CommutatorClass commutator_class(const FreeWord& w1, const FreeWord& w2);

// Class of w in F_2/F_3 read from the degree-2 Magnus coefficients of
// a1a2, a1a3, a2a3. Requires rank 3 and w in F_2 (all exponent sums zero).
CommutatorClass class_of(const FreeWord& w);

inline Integer mu_from_class(const CommutatorClass& c) { return c.coords[0]; }

}  // namespace milnor

#endif  // MILNOR_NILPOTENT_HPP

#ifndef MILNOR_SEIFERT_HPP
#define MILNOR_SEIFERT_HPP

#include <array>
#include <string_view>
#include <vector>

#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"

namespace milnor {

// Order of the symplectic basis a_i, b_i underlying a Seifert matrix.
//   interleaved: a_1, b_1, a_2, b_2, ..., a_g, b_g
//   blocked:     a_1, ..., a_g, b_1, ..., b_g
enum class BasisOrdering { interleaved, blocked };

std::string_view to_string(BasisOrdering ordering);
BasisOrdering parse_ordering(std::string_view text);

// M - M^T for a Seifert matrix in the given ordering: 2x2 blocks [[0,1],[-1,0]]
// when interleaved, [[0,I],[-I,0]] when blocked.
Matrix intersection_form(int genus, BasisOrdering ordering);

// A 2g x 2g integer matrix M with M - M^T equal to the intersection form of
// its tagged ordering. Only constructible through validate().
class SeifertMatrix {
 public:
  int genus() const { return genus_; }
  BasisOrdering ordering() const { return ordering_; }
  const Matrix& entries() const { return entries_; }

  friend SeifertMatrix validate(const Matrix& m, BasisOrdering ordering);
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  SeifertMatrix(int genus, BasisOrdering ordering, Matrix entries)
      : genus_(genus), ordering_(ordering), entries_(std::move(entries)) {}

  int genus_;
  BasisOrdering ordering_;
  Matrix entries_;
};

// Throws InputError on a non-square or odd-dimensional matrix, or on the
// first (i, j) where M - M^T disagrees with the intersection form.
SeifertMatrix validate(const Matrix& m, BasisOrdering ordering);

// Coordinates of a vector (or the rows of a matrix of row vectors) after
// relabelling the basis from one ordering to another.
Vector reorder_vector(const Vector& v, int genus, BasisOrdering from, BasisOrdering to);
Matrix reorder_columns(const Matrix& columns, int genus, BasisOrdering from, BasisOrdering to);

// Conjugation by the basis permutation. reorder(reorder(M, o), M.ordering()) == M.
SeifertMatrix reorder(const SeifertMatrix& m, BasisOrdering target);

// The Seifert form u^T M v = lk(u, v^+).
Integer form(const SeifertMatrix& m, const Vector& u, const Vector& v);

enum class Pushoff { positive, negative };

// Linking number of the curve x with the pushoff of y off the surface:
// positive gives x^T M y, negative gives x^T M^T y.
Integer linking_with_pushoff(const SeifertMatrix& m, const Vector& x, const Vector& y, Pushoff direction);

// [[d, e], [e - 1, 0]]: genus-one Seifert matrix with metabolizer span(b).
SeifertMatrix genus_one_matrix(const Integer& d, const Integer& e);

// Boundary connected sum of three genus-one surfaces: the interleaved
// block-diagonal 6x6 matrix.
SeifertMatrix connected_sum(const SeifertMatrix& m1, const SeifertMatrix& m2, const SeifertMatrix& m3);

// Change of metabolizer for [[d, e], [e - 1, 0]]:
//   n = gcd(2e - 1, -d) > 0, (x, y) = ((2e - 1)/n, -d/n),
//   (z, w) with -x w + z y = 1, |w| minimal and ties broken toward w <= 0
//   (z = 0 when y = 0, where z is otherwise free).
// In the basis {z a + w b, x a + y b} the Seifert matrix is
// [[*, 1 - e], [-e, 0]]; `identities` holds
// ((z w) M (x y)^T, (x y) M (z w)^T, (x y) M (x y)^T) = (1 - e, -e, 0).
struct GenusOneNormalization {
  Integer n, x, y, z, w;
  std::array<Integer, 3> identities;
  SeifertMatrix new_matrix;
};

GenusOneNormalization genus_one_normalize(const Integer& d, const Integer& e);

// e if |e| > |e - 1| (e >= 1), else 1 - e. Always >= 1.
Integer normalize_e(const Integer& e);

}  // namespace milnor

#endif  // MILNOR_SEIFERT_HPP

#ifndef MILNOR_GENERATOR_HPP
#define MILNOR_GENERATOR_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"
#include "milnor/metabolizer.hpp"
#include "milnor/seifert.hpp"

namespace milnor {

// A generator n0 of the subgroup {n * n0} of realized differences of
// mu(123) across derivatives. `generator` is |n0|: negating a basis curve
// negates every difference, so only the absolute value is basis-free.
// `signed_value` is the raw det(B^T - I) - det(B).
struct GeneratorResult {
  Integer generator;
  Integer signed_value;
  Matrix b;  // the 3x3 block B = (lk(a_i, b_j^+)) it was computed from
};

// Both evaluations of the generator for a 3x3 block B read in the layout
//   [[a,  x1, y1],
//    [x2, b,  z1],
//    [y2, z2, c ]]
// the expanded (a-1)(b-1)(c-1) - abc + x1 x2 + y1 y2 + z1 z2 and
// det(B^T - I) - det(B). Throws DefectError if they disagree.
GeneratorResult generator_from_b(const Matrix& b);

Integer expanded_generator(const Matrix& b);
Integer determinant_generator(const Matrix& b);

// Completes V to a symplectic basis, rewrites M in that blocked basis and
// reads off B (the a-b block). Requires genus 3 and a metabolizer; the
// result does not depend on the completion, which `seed` varies.
GeneratorResult generator_for_metabolizer(const SeifertMatrix& m, const MetabolizerBasis& v,
                                          std::optional<std::uint64_t> seed = std::nullopt);

// Generator for a connected sum of three genus-one knots
// [[d_i, e_i], [e_i - 1, 0]]: summands with e_i < 1 are first moved to the
// metabolizer from genus_one_normalize, whose matrix has e_i replaced by
// normalize_e(e_i) >= 1; then the generator of the sum is computed for the
// metabolizer span(b_1, b_2, b_3).
struct ConnectedSumGenerator {
  SeifertMatrix matrix;
  std::array<Integer, 3> normalized_e;
  GeneratorResult result;
};

ConnectedSumGenerator connected_sum_generator(const std::array<std::pair<Integer, Integer>, 3>& summands);

}  // namespace milnor

#endif  // MILNOR_GENERATOR_HPP

#ifndef MILNOR_METABOLIZER_HPP
#define MILNOR_METABOLIZER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/lattice.hpp"
#include "milnor/seifert.hpp"

namespace milnor {

// g rationally independent column vectors in Z^{2g}, in the coordinates of
// the Seifert matrix they are paired with.
class MetabolizerBasis {
 public:
  // Throws InputError if the columns are linearly dependent.
  explicit MetabolizerBasis(Matrix columns);
  static MetabolizerBasis from_columns(const std::vector<Vector>& columns);

  const Matrix& columns() const { return columns_; }
  std::size_t count() const { return columns_.cols(); }

  friend bool operator==(const MetabolizerBasis&, const MetabolizerBasis&) = default;

 private:
  Matrix columns_;
};

// Direct summand test: every invariant factor of the column matrix is 1.
bool is_primitive(const MetabolizerBasis& v);

// V^T M V = 0 and V primitive. Throws InputError unless V is 2g x g.
bool is_metabolizer(const SeifertMatrix& m, const MetabolizerBasis& v);

struct EnumerationLimits {
  int max_genus = 3;
  int max_bound = 3;
};

// Every metabolizer lattice spanned by g columns with entries in
// [-bound, bound], one representative per lattice: the transposed row
// Hermite form of the span, sorted by that key.
std::vector<MetabolizerBasis> enumerate_metabolizers(const SeifertMatrix& m, int bound,
                                                     const EnumerationLimits& limits = {});

// Extends a metabolizer basis b_1..b_g to a symplectic basis. Returns the
// unimodular T = [a_1 .. a_g | b_1 .. b_g] (columns in M's coordinates) with
// T^T (M - M^T) T = [[0, I], [-I, 0]] and the b-columns equal to V.
//
// The a-columns are found by solving (omega V)^T A = I through the Smith
// form, then corrected by multiples of V until the a_i pair to zero. With a
// seed the free parts of that solution are randomised, giving a different
// valid completion. Throws PreconditionError when V is not a metabolizer.
Matrix symplectic_complete(const SeifertMatrix& m, const MetabolizerBasis& v,
                           std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace milnor

#endif  // MILNOR_METABOLIZER_HPP

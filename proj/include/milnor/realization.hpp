#ifndef MILNOR_REALIZATION_HPP
#define MILNOR_REALIZATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"
#include "milnor/seifert.hpp"

namespace milnor {

// The nine linking parameters of a genus-three Seifert matrix in a
// symplectic basis whose b-curves span the metabolizer:
//   lk(a1,b1^+) = a, lk(a2,b2^+) = b, lk(a3,b3^+) = c,
//   lk(a1,b2^+) = x1, lk(a2,b1^+) = x2, lk(a1,b3^+) = y1,
//   lk(a3,b1^+) = y2, lk(a2,b3^+) = z1, lk(a3,b2^+) = z2.
struct GenusThreeParams {
  Integer a, b, c, x1, x2, y1, y2, z1, z2;
};

// Self-linkings among the a-curves (a symmetric 3x3 block), ordered
// (a1a1, a1a2, a1a3, a2a2, a2a3, a3a3). They never enter the generator or
// the ledger.
using StarEntries = std::array<Integer, 6>;

// Interleaved 6x6 matrix in the basis a1, b1, a2, b2, a3, b3.
SeifertMatrix parameter_matrix(const GenusThreeParams& p, const StarEntries& star = {});

// The 3x3 block B with B(i,j) = lk(a_i, b_j^+).
Matrix b_block(const GenusThreeParams& p);

struct LedgerDescription {
  Integer parallel_copies;         // |n| parallel copies of gamma_2
  std::string wrap_count;          // label "n-2"; not computed from
  std::string inner_alteration_count;  // label "n-1"; not computed from
  bool roles_swapped = false;      // n < 0: gamma_2 and gamma_3 families exchanged
};

struct Ledger {
  Integer band1_term;     // first band through the bounding surface: n (a-1)(-(c-1)-b)
  Integer band3_term;     // third band: n x1 x2
  Integer band5_term;     // fifth band: n y1 y2
  Integer residual_term;  // the two original band cores: n (-bc + z1 z2)
  Integer total;
  Integer n;
  LedgerDescription description;
};

// mu(123) of the n-th realizing derivative, assembled term by term from
// exponent sums (pushoff linking numbers) and commutator contributions.
// Throws DefectError if any term or the total misses its closed form, or
// the total differs from n times the signed generator.
Ledger ledger(const GenusThreeParams& p, std::int64_t n);

struct PushoffEntry {
  std::string name;
  Integer value;        // evaluated as a matrix product on the Seifert matrix
  Integer closed_form;  // the same number from the parameters directly
};

// The thirteen linking numbers between band cores and derivative
// components used by the ledger: eight for the first derivative and five
// for the n-th. Throws DefectError on any mismatch.
std::vector<PushoffEntry> pushoff_ledger_entries(const GenusThreeParams& p, std::int64_t n,
                                                 const StarEntries& star = {});

// Coefficient of [m2, m3] in the class of [phi, psi] in F_2/F_3, where
// (e12, e13) and (f12, f13) are the exponent sums of the meridians m2, m3
// in phi and psi:  e12 f13 - e13 f12.
Integer assemble_commutator_contribution(const Integer& e12, const Integer& e13, const Integer& f12,
                                         const Integer& f13);

}  // namespace milnor

#endif  // MILNOR_REALIZATION_HPP

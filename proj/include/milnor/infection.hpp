#ifndef MILNOR_INFECTION_HPP
#define MILNOR_INFECTION_HPP

#include <array>

#include "milnor/integer.hpp"

namespace milnor {

using Square3 = std::array<std::array<Integer, 3>, 3>;

// n[i][j]: algebraic intersection number of the i-th infection disk with the
// j-th link component. The disks themselves are not modelled.
struct IntersectionProfile {
  Square3 n{};
};

// Counts of positive (alpha) and negative (beta) intersections of disk i
// with component j. Entries must be nonnegative.
class BandSumCounts {
 public:
  BandSumCounts(Square3 alpha, Square3 beta);

  const Square3& alpha() const { return alpha_; }
  const Square3& beta() const { return beta_; }

  // alpha - beta
  IntersectionProfile profile() const;

 private:
  Square3 alpha_;
  Square3 beta_;
};

// sum over sigma in S_3 of sign(sigma) n[0][sigma(0)] n[1][sigma(1)] n[2][sigma(2)]
Integer triple_det(const IntersectionProfile& profile);

// mu(123) after infecting L by a string link whose closure has triple
// linking number mu_j:  mu_j * triple_det(N) + mu_l.
// Both links are assumed to have vanishing pairwise linking numbers; that
// hypothesis is the caller's and is not checked.
Integer infected_mu(const Integer& mu_j, const IntersectionProfile& profile, const Integer& mu_l);

// The same quantity expanded over positive/negative intersections: for each
// sigma the eight products of alpha/beta entries, each signed by (-1)^(number
// of beta factors). Independent route to infected_mu with n = alpha - beta.
Integer band_sum_expansion(const Integer& mu_j, const BandSumCounts& counts, const Integer& mu_l);

// mu(123) of the Borromean rings in the orientation whose third longitude is
// [x1, x2]. Used as the default mu_j for a Borromean insertion.
inline const Integer kBorromeanMu{1};

}  // namespace milnor

#endif  // MILNOR_INFECTION_HPP

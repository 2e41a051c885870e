#include "milnor/infection.hpp"

#include <utility>

#include "milnor/errors.hpp"

namespace milnor {
namespace {

struct SignedPermutation {
  std::array<int, 3> image;
  int sign;
};

constexpr std::array<SignedPermutation, 6> kS3{{
    {{0, 1, 2}, 1},
    {{0, 2, 1}, -1},
    {{1, 0, 2}, -1},
    {{1, 2, 0}, 1},
    {{2, 0, 1}, 1},
    {{2, 1, 0}, -1},
}};

}  // namespace

BandSumCounts::BandSumCounts(Square3 alpha, Square3 beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (alpha_[i][j] < 0 || beta_[i][j] < 0) {
        throw InputError("intersection counts must be nonnegative at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
      }
}

IntersectionProfile BandSumCounts::profile() const {
  IntersectionProfile p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.n[i][j] = alpha_[i][j] - beta_[i][j];
  return p;
}

Integer triple_det(const IntersectionProfile& profile) {
  Integer sum = 0;
  for (const auto& [s, sign] : kS3) {
    const Integer term = profile.n[0][s[0]] * profile.n[1][s[1]] * profile.n[2][s[2]];
    if (sign > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Integer infected_mu(const Integer& mu_j, const IntersectionProfile& profile, const Integer& mu_l) {
  return mu_j * triple_det(profile) + mu_l;
}

Integer band_sum_expansion(const Integer& mu_j, const BandSumCounts& counts, const Integer& mu_l) {
  const Square3& al = counts.alpha();
  const Square3& be = counts.beta();
  Integer sum = 0;
  for (const auto& [s, sign] : kS3) {
    const Integer& a1 = al[0][s[0]];
    const Integer& a2 = al[1][s[1]];
    const Integer& a3 = al[2][s[2]];
    const Integer& b1 = be[0][s[0]];
    const Integer& b2 = be[1][s[1]];
    const Integer& b3 = be[2][s[2]];
    Integer inner = a1 * a2 * a3;
    inner -= b1 * a2 * a3;
    inner -= a1 * b2 * a3;
    inner -= a1 * a2 * b3;
    inner += b1 * b2 * a3;
    inner += a1 * b2 * b3;
    inner += b1 * a2 * b3;
    inner -= b1 * b2 * b3;
    sum += sign * inner;
  }
  return mu_j * sum + mu_l;
}

}  // namespace milnor

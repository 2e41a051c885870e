#ifndef MILNOR_TESTS_FIXTURES_HPP
#define MILNOR_TESTS_FIXTURES_HPP

#include "milnor/lattice.hpp"
#include "milnor/metabolizer.hpp"
#include "milnor/realization.hpp"
#include "milnor/seifert.hpp"

namespace fixtures {

inline milnor::Matrix unknot_entries() {
  return {{0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}};
}

inline milnor::SeifertMatrix unknot() {
  return milnor::validate(unknot_entries(), milnor::BasisOrdering::interleaved);
}

inline milnor::Vector e(std::size_t n, std::size_t k) {  // 1-based unit vector
  milnor::Vector v(n, 0);
  v[k - 1] = 1;
  return v;
}

inline milnor::MetabolizerBasis standard_b() {
  return milnor::MetabolizerBasis::from_columns({e(6, 2), e(6, 4), e(6, 6)});
}

inline milnor::GenusThreeParams sample_params() { return {2, 3, 4, 5, 6, 7, 8, 9, 10}; }

inline milnor::GenusThreeParams unknot_params() { return {1, 1, 1, 0, 0, 0, 0, 0, 0}; }

}  // namespace fixtures

#endif  // MILNOR_TESTS_FIXTURES_HPP

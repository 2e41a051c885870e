#include "brute_metabolizers.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "milnor/errors.hpp"
#include "milnor/metabolizer.hpp"
#include "oracles.hpp"
#include "random_models.hpp"

using namespace milnor;
using fixtures::e;

namespace {

MetabolizerBasis cols(const std::vector<Vector>& columns) { return MetabolizerBasis::from_columns(columns); }

bool contains_lattice(const std::vector<MetabolizerBasis>& found, const MetabolizerBasis& v) {
  const auto key = oracle::plucker_key(models::to_dense(v.columns()));
  for (const auto& f : found)
    if (oracle::plucker_key(models::to_dense(f.columns())) == key) return true;
  return false;
}

Matrix blocked_j(std::size_t g) { return intersection_form(static_cast<int>(g), BasisOrdering::blocked); }

void check_completion(const SeifertMatrix& m, const MetabolizerBasis& v, const Matrix& t) {
  const std::size_t g = v.count();
  const Matrix omega = m.entries() - m.entries().transpose();
  CHECK(t.transpose() * omega * t == blocked_j(g));
  CHECK(abs(determinant(t)) == 1);
  CHECK(t.block(0, g, 2 * g, g) == v.columns());
}

}  // namespace

TEST_CASE("basis construction") {
  CHECK(fixtures::standard_b().count() == 3);
  CHECK_THROWS_AS(cols({Vector{1, 2}, Vector{2, 4}}), InputError);
  CHECK_THROWS_AS(MetabolizerBasis(Matrix(4, 0)), InputError);
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(fixtures::standard_b()));
  CHECK_FALSE(is_primitive(cols({Vector{0, 2}})));
  CHECK(is_primitive(cols({Vector{3, -2}})));
  CHECK(is_primitive(cols({Vector{1, -2}})));
  CHECK_FALSE(is_primitive(cols({Vector{1, 1, 0, 0}, Vector{1, -1, 0, 0}})));

  models::Rng rng(601);
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix m = models::random_matrix(rng, 4, 2, -3, 3);
    if (rank(m) < 2) continue;
    CHECK(is_primitive(MetabolizerBasis(m)) == (oracle::minor_gcd(models::to_dense(m)) == 1));
  }
}

TEST_CASE("is_metabolizer") {
  const SeifertMatrix u = fixtures::unknot();
  CHECK(is_metabolizer(u, fixtures::standard_b()));
  CHECK_FALSE(is_metabolizer(u, cols({e(6, 1), e(6, 2), e(6, 4)})));
  CHECK_FALSE(is_metabolizer(u, cols({Vector{0, 2, 0, 0, 0, 0}, e(6, 4), e(6, 6)})));
  CHECK(is_metabolizer(genus_one_matrix(7, -3), cols({Vector{0, 1}})));
  CHECK_THROWS_AS(is_metabolizer(u, cols({e(6, 2), e(6, 4)})), InputError);
  CHECK_THROWS_AS(is_metabolizer(u, cols({Vector{0, 1}})), InputError);
}

TEST_CASE("enumerate_metabolizers") {
  const auto found = enumerate_metabolizers(fixtures::unknot(), 1);
  CHECK(contains_lattice(found, fixtures::standard_b()));
  for (const auto& v : found) CHECK(is_metabolizer(fixtures::unknot(), v));

  const SeifertMatrix h = genus_one_matrix(0, 1);
  CHECK(contains_lattice(enumerate_metabolizers(h, 1), cols({Vector{0, 1}})));
  const auto definite = validate(Matrix{{1, 1}, {0, 1}}, BasisOrdering::interleaved);
  CHECK(enumerate_metabolizers(definite, 2).empty());
  CHECK(brute::scan(definite, 2).lattices.empty());

  CHECK_THROWS_AS(enumerate_metabolizers(h, 0), InputError);
  CHECK_THROWS_AS(enumerate_metabolizers(h, 4), InputError);
  CHECK_NOTHROW(enumerate_metabolizers(h, 4, EnumerationLimits{3, 4}));
  Matrix big(8, 8);
  for (std::size_t k = 0; k < 4; ++k) big(k, 4 + k) = 1;
  const auto g4 = validate(big, BasisOrdering::blocked);
  CHECK_THROWS_AS(enumerate_metabolizers(g4, 1), InputError);
}

TEST_CASE("enumeration matches the exhaustive scan") {
  models::Rng rng(602);
  std::vector<SeifertMatrix> cases{genus_one_matrix(0, 1), genus_one_matrix(2, 1), genus_one_matrix(-3, 2),
                                   validate(Matrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}},
                                            BasisOrdering::interleaved)};
  for (int k = 0; k < 3; ++k) cases.push_back(models::random_valid_pair(rng, 2, -1, 1, k % 2 == 0).m);
  for (const SeifertMatrix& m : cases) {
    const int bound = m.genus() == 1 ? 2 : 1;
    const auto scan = brute::scan(m, bound);
    CHECK(scan.disagreements == 0);
    const auto found = enumerate_metabolizers(m, bound);
    CHECK(brute::keys_of(found) == scan.lattices);
    CHECK(brute::keys_of(found).size() == found.size());
  }
}

TEST_CASE("enumeration order is canonical") {
  const auto first = enumerate_metabolizers(fixtures::unknot(), 1);
  const auto second = enumerate_metabolizers(fixtures::unknot(), 1);
  CHECK(first == second);
  for (std::size_t i = 1; i < first.size(); ++i)
    CHECK(row_hermite_form(first[i - 1].columns().transpose()) < row_hermite_form(first[i].columns().transpose()));
}

TEST_CASE("symplectic_complete") {
  const SeifertMatrix u = fixtures::unknot();
  const Matrix t = symplectic_complete(u, fixtures::standard_b());
  check_completion(u, fixtures::standard_b(), t);
  CHECK(t.block(0, 0, 6, 3) == Matrix::from_columns({e(6, 1), e(6, 3), e(6, 5)}));

  const SeifertMatrix g1 = genus_one_matrix(2, 1);
  const MetabolizerBasis v = cols({Vector{1, -2}});
  CHECK(is_metabolizer(g1, v));
  const Matrix t1 = symplectic_complete(g1, v);
  const Integer z = t1(0, 0), w = t1(1, 0);
  CHECK(-1 * w + z * -2 == 1);

  CHECK_THROWS_AS(symplectic_complete(u, cols({Vector{0, 2, 0, 0, 0, 0}, e(6, 4), e(6, 6)})), PreconditionError);
  CHECK_THROWS_AS(symplectic_complete(u, cols({e(6, 1), e(6, 2), e(6, 4)})), PreconditionError);

  models::Rng rng(603);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t g = static_cast<std::size_t>(models::uniform(rng, 1, 3));
    const auto pair = models::random_valid_pair(rng, g, -5, 5, trial % 2 == 1);
    check_completion(pair.m, pair.v, symplectic_complete(pair.m, pair.v));
    const Matrix seeded = symplectic_complete(pair.m, pair.v, rng());
    check_completion(pair.m, pair.v, seeded);
  }
}

TEST_CASE("seeded completions are reproducible") {
  const SeifertMatrix u = fixtures::unknot();
  CHECK(symplectic_complete(u, fixtures::standard_b(), 7) == symplectic_complete(u, fixtures::standard_b(), 7));
}

#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "milnor/generator.hpp"
#include "milnor/realization.hpp"
#include "milnor/seifert.hpp"
#include "random_models.hpp"

using namespace milnor;

namespace {

GenusThreeParams random_params(models::Rng& rng, int lo, int hi) {
  GenusThreeParams p;
  for (Integer* f : {&p.a, &p.b, &p.c, &p.x1, &p.x2, &p.y1, &p.y2, &p.z1, &p.z2}) *f = models::uniform(rng, lo, hi);
  return p;
}

Integer entry(const std::vector<PushoffEntry>& entries, const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return e.value;
  FAIL("no entry " << name);
  return 0;
}

}  // namespace

TEST_CASE("parameter matrix layout") {
  const GenusThreeParams p = fixtures::sample_params();
  CHECK(parameter_matrix(p).entries() == Matrix{{0, 2, 0, 5, 0, 7},
                                              {1, 0, 6, 0, 8, 0},
                                              {0, 6, 0, 3, 0, 9},
                                              {5, 0, 2, 0, 10, 0},
                                              {0, 8, 0, 10, 0, 4},
                                              {7, 0, 9, 0, 3, 0}});
  CHECK(parameter_matrix(fixtures::unknot_params()).entries() == fixtures::unknot_entries());
  CHECK(reorder(parameter_matrix(fixtures::unknot_params()), BasisOrdering::blocked).entries().block(0, 3, 3, 3) ==
        Matrix::identity(3));
}

TEST_CASE("ledger") {
  const Ledger u = ledger(fixtures::unknot_params(), 1);
  CHECK(u.band1_term == 0);
  CHECK(u.band3_term == 0);
  CHECK(u.band5_term == 0);
  CHECK(u.residual_term == -1);
  CHECK(u.total == -1);

  const Ledger z = ledger(fixtures::sample_params(), 0);
  CHECK(z.total == 0);
  CHECK(z.band1_term == 0);
  CHECK(z.residual_term == 0);

  const Ledger s = ledger(fixtures::sample_params(), 2);
  CHECK(s.total == 316);
  CHECK(s.band1_term == 2 * 1 * (-3 - 3));
  CHECK(s.band3_term == 2 * 5 * 6);
  CHECK(s.band5_term == 2 * 7 * 8);
  CHECK(s.residual_term == 2 * (-12 + 90));
  CHECK(s.description.parallel_copies == 2);
  CHECK(s.description.wrap_count == "n-2");
  CHECK(s.description.inner_alteration_count == "n-1");
  CHECK_FALSE(s.description.roles_swapped);

  const Ledger neg = ledger(fixtures::sample_params(), -2);
  CHECK(neg.total == -316);
  CHECK(neg.description.roles_swapped);
  CHECK(neg.description.parallel_copies == 2);
}

TEST_CASE("ledger identity over random parameters") {
  models::Rng rng(901);
  for (int trial = 0; trial < 1000; ++trial) {
    const GenusThreeParams p = random_params(rng, -20, 20);
    const int n = models::uniform(rng, -10, 10);
    const Ledger l = ledger(p, n);
    CHECK(l.total == l.band1_term + l.band3_term + l.band5_term + l.residual_term);
    CHECK(l.total == n * generator_from_b(b_block(p)).signed_value);
    CHECK(l.total == -ledger(p, -n).total);
  }
}

TEST_CASE("pushoff entries") {
  GenusThreeParams p = fixtures::sample_params();
  const auto entries = pushoff_ledger_entries(p, 1);
  CHECK(entries.size() == 13);
  CHECK(entry(entries, "lk(psi_1, gamma_13)") == -3);
  CHECK(entry(entries, "lk(psi_2, gamma_12)") == 3);
  CHECK(entry(entries, "lk(psi_3, gamma_12)") == -5);
  CHECK(entry(entries, "lk(psi_4, gamma_13)") == 7);
  CHECK(entry(entries, "lk(phi_5, gamma_12)") == 3);
  CHECK(entry(entries, "lk(phi_5, gamma_13)") == 9);
  CHECK(entry(entries, "lk(psi_5, gamma_12)") == -10);
  CHECK(entry(entries, "lk(psi_5, gamma_13)") == -4);

  p.b = 5;
  CHECK(entry(pushoff_ledger_entries(p, 3), "lk(psi_n2, gamma_12)") == 15);
  CHECK(entry(pushoff_ledger_entries(fixtures::sample_params(), 2), "lk(psi_nk, gamma_13)") == -13);

  models::Rng rng(902);
  for (int trial = 0; trial < 500; ++trial) {
    const GenusThreeParams q = random_params(rng, -30, 30);
    const int n = models::uniform(rng, 1, 10);
    const Matrix s = models::random_matrix(rng, 1, 6, -9, 9);
    const StarEntries star{s(0, 0), s(0, 1), s(0, 2), s(0, 3), s(0, 4), s(0, 5)};
    for (const PushoffEntry& e : pushoff_ledger_entries(q, n, star)) CHECK(e.value == e.closed_form);
    const auto es = pushoff_ledger_entries(q, n, star);
    CHECK(entry(es, "lk(psi_nk, gamma_12)") == -(n - 1) * q.b - q.z2);
    CHECK(entry(es, "lk(phi_nk, gamma_13)") == n * q.z1);
  }
}

TEST_CASE("assemble_commutator_contribution") {
  CHECK(assemble_commutator_contribution(5, 9, -10, -4) == 70);
  CHECK(assemble_commutator_contribution(1, 0, 0, 1) == 1);
  CHECK(assemble_commutator_contribution(3, -7, 3, -7) == 0);

  models::Rng rng(903);
  for (int trial = 0; trial < 300; ++trial) {
    const GenusThreeParams p = random_params(rng, -15, 15);
    const auto es = pushoff_ledger_entries(p, 1);
    const Ledger l = ledger(p, 1);
    // Two tube pairs per passage of the first band.
    const Integer band1 = assemble_commutator_contribution(1, 0, 0, entry(es, "lk(psi_1, gamma_13)")) +
                          assemble_commutator_contribution(0, 1, entry(es, "lk(psi_2, gamma_12)"), 0);
    CHECK(l.band1_term == (p.a - 1) * band1);
    CHECK(l.band3_term == p.x2 * assemble_commutator_contribution(0, 1, entry(es, "lk(psi_3, gamma_12)"), 0));
    CHECK(l.band5_term == p.y2 * assemble_commutator_contribution(1, 0, 0, entry(es, "lk(psi_4, gamma_13)")));
    CHECK(l.residual_term == assemble_commutator_contribution(
                                 entry(es, "lk(phi_5, gamma_12)"), entry(es, "lk(phi_5, gamma_13)"),
                                 entry(es, "lk(psi_5, gamma_12)"), entry(es, "lk(psi_5, gamma_13)")));
  }
}

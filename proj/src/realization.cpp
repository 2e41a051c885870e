#include "milnor/realization.hpp"

#include "milnor/errors.hpp"
#include "milnor/generator.hpp"

namespace milnor {
namespace {

Vector vec(std::initializer_list<Integer> xs) { return Vector(xs); }

const PushoffEntry& find(const std::vector<PushoffEntry>& entries, const std::string& name) {
  for (const PushoffEntry& e : entries)
    if (e.name == name) return e;
  throw DefectError("missing pushoff entry " + name);
}

// Exchanging the roles of the second and third components transposes the
// exponent-sum pairs, which negates the contribution.
Integer contribution(const Integer& e12, const Integer& e13, const Integer& f12, const Integer& f13, bool swapped) {
  return swapped ? assemble_commutator_contribution(e13, e12, f13, f12)
                 : assemble_commutator_contribution(e12, e13, f12, f13);
}

void expect(const Integer& got, const Integer& want, const std::string& what) {
  if (got != want) {
    throw DefectError(what + ": assembled " + to_string(got) + " but closed form gives " + to_string(want));
  }
}

}  // namespace

SeifertMatrix parameter_matrix(const GenusThreeParams& p, const StarEntries& s) {
  const Integer zero = 0;
  const std::vector<Vector> rows{
      vec({s[0], p.a, s[1], p.x1, s[2], p.y1}),
      vec({p.a - 1, zero, p.x2, zero, p.y2, zero}),
      vec({s[1], p.x2, s[3], p.b, s[4], p.z1}),
      vec({p.x1, zero, p.b - 1, zero, p.z2, zero}),
      vec({s[2], p.y2, s[4], p.z2, s[5], p.c}),
      vec({p.y1, zero, p.z1, zero, p.c - 1, zero}),
  };
  return validate(Matrix::from_rows(rows), BasisOrdering::interleaved);
}

Matrix b_block(const GenusThreeParams& p) {
  return Matrix::from_rows({vec({p.a, p.x1, p.y1}), vec({p.x2, p.b, p.z1}), vec({p.y2, p.z2, p.c})});
}

Integer assemble_commutator_contribution(const Integer& e12, const Integer& e13, const Integer& f12,
                                         const Integer& f13) {
  return e12 * f13 - e13 * f12;
}

std::vector<PushoffEntry> pushoff_ledger_entries(const GenusThreeParams& p, std::int64_t n_raw,
                                                 const StarEntries& star) {
  const SeifertMatrix m = parameter_matrix(p, star);
  const Integer n = static_cast<long>(n_raw);
  const Integer one = 1, zero = 0;

  // Derivative components in H_1 of the surface: gamma_12 = b2, gamma_13 = b3.
  const Vector gamma12 = vec({zero, zero, zero, one, zero, zero});
  const Vector gamma13 = vec({zero, zero, zero, zero, zero, one});

  // Band cores, as classes on the surface (basis a1 b1 a2 b2 a3 b3).
  const Vector psi1 = vec({zero, zero, zero, zero, -one, zero});           // -a3, positive pushoff
  const Vector psi2 = vec({zero, one, one, one, zero, one});               // b1 + a2 + b2 + b3, negative
  const Vector psi3 = vec({-one, one, zero, zero, zero, -one});            // -a1 + b1 - b3, positive
  const Vector psi4 = vec({one, -one, zero, zero, zero, one});             // a1 - b1 + b3, positive
  const Vector phi5 = vec({zero, zero, one, one, zero, zero});             // a2 + b2, negative
  const Vector psi5 = vec({zero, zero, zero, -one, -one, zero});           // -b2 - a3, negative
  const Vector psi_n2 = vec({zero, one, n, one, zero, one});               // b1 + n a2 + b2 + b3
  const Vector phi_n = vec({zero, zero, n, one, zero, zero});              // n a2 + b2
  const Vector psi_n = vec({zero, zero, Integer(-(n - 1)), -one, -one, zero});  // -(n-1) a2 - b2 - a3

  const auto pos = [&](const Vector& gamma, const Vector& core) {
    return linking_with_pushoff(m, gamma, core, Pushoff::positive);
  };
  const auto neg = [&](const Vector& gamma, const Vector& core) {
    return linking_with_pushoff(m, gamma, core, Pushoff::negative);
  };

  std::vector<PushoffEntry> entries{
      {"lk(psi_1, gamma_13)", pos(gamma13, psi1), -(p.c - 1)},
      {"lk(psi_2, gamma_12)", neg(gamma12, psi2), p.b},
      {"lk(psi_3, gamma_12)", pos(gamma12, psi3), -p.x1},
      {"lk(psi_4, gamma_13)", pos(gamma13, psi4), p.y1},
      {"lk(phi_5, gamma_12)", neg(gamma12, phi5), p.b},
      {"lk(phi_5, gamma_13)", neg(gamma13, phi5), p.z1},
      {"lk(psi_5, gamma_12)", neg(gamma12, psi5), -p.z2},
      {"lk(psi_5, gamma_13)", neg(gamma13, psi5), -p.c},
      {"lk(psi_n2, gamma_12)", neg(gamma12, psi_n2), n * p.b},
      {"lk(phi_nk, gamma_12)", neg(gamma12, phi_n), n * p.b},
      {"lk(phi_nk, gamma_13)", neg(gamma13, phi_n), n * p.z1},
      {"lk(psi_nk, gamma_12)", neg(gamma12, psi_n), Integer(-(n - 1) * p.b - p.z2)},
      {"lk(psi_nk, gamma_13)", neg(gamma13, psi_n), Integer(-(n - 1) * p.z1 - p.c)},
  };
  for (const PushoffEntry& e : entries) expect(e.value, e.closed_form, e.name);
  return entries;
}

Ledger ledger(const GenusThreeParams& p, std::int64_t n) {
  const std::int64_t copies = n < 0 ? -n : n;
  const bool swapped = n < 0;
  const Integer m = static_cast<long>(copies);
  const Integer one = 1, zero = 0;

  Ledger out;
  out.n = static_cast<long>(n);
  out.description = {m, "n-2", "n-1", swapped};

  if (copies == 0) {
    out.band1_term = out.band3_term = out.band5_term = out.residual_term = out.total = 0;
  } else {
    const auto entries = pushoff_ledger_entries(p, copies);
    const Integer& psi1 = find(entries, "lk(psi_1, gamma_13)").value;
    const Integer& psi_n2 = find(entries, "lk(psi_n2, gamma_12)").value;
    const Integer& psi3 = find(entries, "lk(psi_3, gamma_12)").value;
    const Integer& psi4 = find(entries, "lk(psi_4, gamma_13)").value;

    // First band: it passes (a-1) times, each passage adding the tubes
    // [phi_1, psi_1] [phi_2, psi_2]; phi_1 meets the m parallel copies of
    // gamma_2, phi_2 meets gamma_3 once.
    const Integer per_pass = contribution(m, zero, zero, psi1, swapped) + contribution(zero, one, psi_n2, zero, swapped);
    out.band1_term = (p.a - 1) * per_pass;
    // Third band: x2 passages of [phi_3, psi_3]; psi_3 links each copy of gamma_2.
    out.band3_term = p.x2 * contribution(zero, one, m * psi3, zero, swapped);
    // Fifth band: y2 passages of [phi_4, psi_4]; phi_4 meets the copies of gamma_2.
    out.band5_term = p.y2 * contribution(m, zero, zero, psi4, swapped);
    out.residual_term = contribution(find(entries, "lk(phi_nk, gamma_12)").value,
                                     find(entries, "lk(phi_nk, gamma_13)").value,
                                     find(entries, "lk(psi_nk, gamma_12)").value,
                                     find(entries, "lk(psi_nk, gamma_13)").value, swapped);
    out.total = out.band1_term + out.band3_term + out.band5_term + out.residual_term;
  }

  const Integer& signed_n = out.n;
  expect(out.band1_term, signed_n * (p.a - 1) * (-(p.c - 1) - p.b), "band 1 term");
  expect(out.band3_term, signed_n * p.x1 * p.x2, "band 3 term");
  expect(out.band5_term, signed_n * p.y1 * p.y2, "band 5 term");
  expect(out.residual_term, signed_n * (-p.b * p.c + p.z1 * p.z2), "residual term");
  expect(out.total, signed_n * generator_from_b(b_block(p)).signed_value, "ledger total");
  return out;
}

}  // namespace milnor

#include "milnor/generator.hpp"

#include "milnor/errors.hpp"

namespace milnor {
namespace {

void require_3x3(const Matrix& b) {
  if (b.rows() != 3 || b.cols() != 3) throw InputError("B must be 3x3");
}

}  // namespace

Integer expanded_generator(const Matrix& b) {
  require_3x3(b);
  const Integer& a = b(0, 0);
  const Integer& bb = b(1, 1);
  const Integer& c = b(2, 2);
  const Integer& x1 = b(0, 1);
  const Integer& y1 = b(0, 2);
  const Integer& x2 = b(1, 0);
  const Integer& z1 = b(1, 2);
  const Integer& y2 = b(2, 0);
  const Integer& z2 = b(2, 1);
  return Integer((a - 1) * (bb - 1) * (c - 1)) - a * bb * c + x1 * x2 + y1 * y2 + z1 * z2;
}

Integer determinant_generator(const Matrix& b) {
  require_3x3(b);
  return determinant(b.transpose() - Matrix::identity(3)) - determinant(b);
}

GeneratorResult generator_from_b(const Matrix& b) {
  const Integer expanded = expanded_generator(b);
  const Integer via_det = determinant_generator(b);
  if (expanded != via_det) {
    throw DefectError("generator formulas disagree: expanded " + to_string(expanded) + " vs determinant " +
                      to_string(via_det));
  }
  return {abs(expanded), expanded, b};
}

GeneratorResult generator_for_metabolizer(const SeifertMatrix& m, const MetabolizerBasis& v,
                                          std::optional<std::uint64_t> seed) {
  if (m.genus() != 3) throw InputError("generator needs a genus-3 Seifert matrix, got genus " + std::to_string(m.genus()));
  const Matrix t = symplectic_complete(m, v, seed);
  const Matrix blocked = t.transpose() * m.entries() * t;
  if (!blocked.block(3, 3, 3, 3).is_zero()) throw DefectError("metabolizer block of T^T M T is nonzero");
  return generator_from_b(blocked.block(0, 3, 3, 3));
}

ConnectedSumGenerator connected_sum_generator(const std::array<std::pair<Integer, Integer>, 3>& summands) {
  std::array<SeifertMatrix, 3> parts{genus_one_matrix(0, 1), genus_one_matrix(0, 1), genus_one_matrix(0, 1)};
  std::array<Integer, 3> normalized;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [d, e] = summands[i];
    if (e >= 1) {
      parts[i] = genus_one_matrix(d, e);
    } else {
      const GenusOneNormalization change = genus_one_normalize(d, e);
      parts[i] = change.new_matrix;
    }
    normalized[i] = parts[i].entries()(0, 1);
    if (normalized[i] != normalize_e(e)) throw DefectError("normalized e does not match the basis change");
  }
  SeifertMatrix sum = connected_sum(parts[0], parts[1], parts[2]);
  Matrix b(6, 3);
  for (std::size_t i = 0; i < 3; ++i) b(2 * i + 1, i) = 1;
  GeneratorResult result = generator_for_metabolizer(sum, MetabolizerBasis(b));
  return {std::move(sum), normalized, std::move(result)};
}

}  // namespace milnor

#include "milnor/metabolizer.hpp"

#include <map>
#include <random>

#include "milnor/errors.hpp"

namespace milnor {
namespace {

void require_shape(const SeifertMatrix& m, const MetabolizerBasis& v) {
  const auto g = static_cast<std::size_t>(m.genus());
  if (v.columns().rows() != 2 * g || v.count() != g) {
    throw InputError("metabolizer must be " + std::to_string(2 * g) + "x" + std::to_string(g) + ", got " +
                     std::to_string(v.columns().rows()) + "x" + std::to_string(v.count()));
  }
}

// Candidate vector for enumeration with its images under M and M^T cached.
struct Candidate {
  Vector v;
  Vector mv;
  Vector mtv;
};

bool first_nonzero_positive(const Vector& v) {
  for (const Integer& x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

}  // namespace

MetabolizerBasis::MetabolizerBasis(Matrix columns) : columns_(std::move(columns)) {
  if (columns_.cols() == 0) throw InputError("metabolizer basis needs at least one column");
  if (rank(columns_) != columns_.cols()) throw InputError("metabolizer columns are linearly dependent");
}

MetabolizerBasis MetabolizerBasis::from_columns(const std::vector<Vector>& columns) {
  return MetabolizerBasis(Matrix::from_columns(columns));
}

bool is_primitive(const MetabolizerBasis& v) {
  const SmithForm snf = smith_normal_form(v.columns());
  for (const Integer& f : snf.invariant_factors) {
    if (f != 1) return false;
  }
  return snf.invariant_factors.size() == v.count();
}

bool is_metabolizer(const SeifertMatrix& m, const MetabolizerBasis& v) {
  require_shape(m, v);
  const Matrix& cols = v.columns();
  return (cols.transpose() * m.entries() * cols).is_zero() && is_primitive(v);
}

std::vector<MetabolizerBasis> enumerate_metabolizers(const SeifertMatrix& m, int bound,
                                                     const EnumerationLimits& limits) {
  if (m.genus() > limits.max_genus) {
    throw InputError("genus " + std::to_string(m.genus()) + " too large for enumeration (limit " +
                     std::to_string(limits.max_genus) + ")");
  }
  if (bound < 1) throw InputError("coefficient bound must be >= 1");
  if (bound > limits.max_bound) {
    throw InputError("coefficient bound " + std::to_string(bound) + " too large (limit " +
                     std::to_string(limits.max_bound) + ")");
  }
  const auto g = static_cast<std::size_t>(m.genus());
  const std::size_t dim = 2 * g;
  const Matrix mt = m.entries().transpose();

  // Isotropic vectors up to sign: v and -v span the same lines.
  std::vector<Candidate> candidates;
  Vector v(dim, Integer(-bound));
  for (;;) {
    if (first_nonzero_positive(v)) {
      Vector mv = m.entries() * v;
      if (dot(v, mv) == 0) candidates.push_back({v, std::move(mv), mt * v});
    }
    std::size_t k = 0;
    while (k < dim && v[k] == bound) v[k++] = -bound;
    if (k == dim) break;
    v[k] += 1;
  }

  const std::size_t count = candidates.size();
  std::vector<std::vector<char>> compatible(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const bool ok = dot(candidates[i].v, candidates[j].mv) == 0 && dot(candidates[i].v, candidates[j].mtv) == 0;
      compatible[i][j] = compatible[j][i] = ok;
    }

  std::map<Matrix, MetabolizerBasis> found;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == g) {
      std::vector<Vector> cols;
      for (std::size_t idx : chosen) cols.push_back(candidates[idx].v);
      const Matrix basis = Matrix::from_columns(cols);
      if (rank(basis) != g) return;
      const MetabolizerBasis mb(basis);
      if (!is_primitive(mb)) return;
      Matrix key = row_hermite_form(basis.transpose());
      if (!found.contains(key)) found.emplace(key, MetabolizerBasis(key.transpose()));
      return;
    }
    for (std::size_t i = start; i < count; ++i) {
      bool ok = true;
      for (std::size_t prev : chosen) ok = ok && compatible[prev][i];
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);

  std::vector<MetabolizerBasis> out;
  out.reserve(found.size());
  for (auto& [key, basis] : found) out.push_back(std::move(basis));
  return out;
}

Matrix symplectic_complete(const SeifertMatrix& m, const MetabolizerBasis& v, std::optional<std::uint64_t> seed) {
  require_shape(m, v);
  if (!is_metabolizer(m, v)) throw PreconditionError("symplectic completion refused: columns are not a metabolizer");

  const auto g = static_cast<std::size_t>(m.genus());
  const Matrix omega = m.entries() - m.entries().transpose();
  const Matrix& b = v.columns();

  // a_i^T omega b_j = delta_ij  <=>  W^T A = I  with W = omega V.
  const Matrix wt = (omega * b).transpose();
  const SmithForm snf = smith_normal_form(wt);  // U W^T V' = [I 0]
  for (std::size_t i = 0; i < g; ++i) {
    if (snf.d(i, i) != 1) throw DefectError("symplectic completion: omega V is not primitive");
  }

  std::mt19937_64 rng(seed.value_or(0));
  std::uniform_int_distribution<int> small(-3, 3);
  Matrix stacked(2 * g, g);  // [U; Y]
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t c = 0; c < g; ++c) {
      stacked(r, c) = snf.u(r, c);
      if (seed) stacked(g + r, c) = small(rng);
    }
  Matrix a = snf.v * stacked;

  // A + V C stays dual to V; pick C with C - C^T = -(A^T omega A), plus an
  // optional random symmetric part which leaves the pairing untouched.
  const Matrix gram = a.transpose() * omega * a;
  Matrix c(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      const Integer sym = seed ? Integer(small(rng)) : Integer(0);
      c(i, j) = (i < j ? Integer(-gram(i, j)) : Integer(0)) + sym;
      if (i != j) c(j, i) += sym;
    }
  a = a + b * c;

  Matrix t(2 * g, 2 * g);
  for (std::size_t r = 0; r < 2 * g; ++r)
    for (std::size_t k = 0; k < g; ++k) {
      t(r, k) = a(r, k);
      t(r, g + k) = b(r, k);
    }

  if (t.transpose() * omega * t != intersection_form(m.genus(), BasisOrdering::blocked)) {
    throw DefectError("symplectic completion failed its postcondition");
  }
  if (abs(determinant(t)) != 1) throw DefectError("symplectic completion is not unimodular");
  return t;
}

}  // namespace milnor

#include "milnor/seifert.hpp"

#include "milnor/errors.hpp"

namespace milnor {
namespace {

// position_in_interleaved[k] for the k-th blocked basis element.
std::size_t blocked_to_interleaved(std::size_t k, std::size_t g) { return k < g ? 2 * k : 2 * (k - g) + 1; }

// perm[k] = index in `from` coordinates of the k-th basis element of `to`.
std::vector<std::size_t> basis_permutation(std::size_t g, BasisOrdering from, BasisOrdering to) {
  std::vector<std::size_t> perm(2 * g);
  for (std::size_t k = 0; k < 2 * g; ++k) {
    if (from == to) {
      perm[k] = k;
    } else if (to == BasisOrdering::blocked) {
      perm[k] = blocked_to_interleaved(k, g);
    } else {
      // to interleaved from blocked: position k holds a_{k/2} or b_{k/2}
      perm[k] = (k % 2 == 0) ? k / 2 : g + k / 2;
    }
  }
  return perm;
}

void require_length(const SeifertMatrix& m, const Vector& v) {
  if (v.size() != m.entries().rows()) {
    throw InputError("vector of length " + std::to_string(v.size()) + " against a " +
                     std::to_string(m.entries().rows()) + "x" + std::to_string(m.entries().rows()) + " Seifert matrix");
  }
}

}  // namespace

std::string_view to_string(BasisOrdering ordering) {
  return ordering == BasisOrdering::interleaved ? "interleaved" : "blocked";
}

BasisOrdering parse_ordering(std::string_view text) {
  if (text == "interleaved") return BasisOrdering::interleaved;
  if (text == "blocked") return BasisOrdering::blocked;
  throw InputError("unknown basis ordering '" + std::string(text) + "'");
}

Matrix intersection_form(int genus, BasisOrdering ordering) {
  const auto g = static_cast<std::size_t>(genus);
  Matrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    if (ordering == BasisOrdering::interleaved) {
      j(2 * i, 2 * i + 1) = 1;
      j(2 * i + 1, 2 * i) = -1;
    } else {
      j(i, g + i) = 1;
      j(g + i, i) = -1;
    }
  }
  return j;
}

SeifertMatrix validate(const Matrix& m, BasisOrdering ordering) {
  if (m.rows() != m.cols()) throw InputError("Seifert matrix must be square");
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw InputError("Seifert matrix must have positive even dimension, got " + std::to_string(m.rows()));
  }
  const int genus = static_cast<int>(m.rows() / 2);
  const Matrix j = intersection_form(genus, ordering);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      if (m(r, c) - m(c, r) != j(r, c)) {
        throw InputError("M - M^T is not the " + std::string(to_string(ordering)) + " intersection form at entries (" +
                         std::to_string(r + 1) + "," + std::to_string(c + 1) + ") and (" + std::to_string(c + 1) +
                         "," + std::to_string(r + 1) + ")");
      }
    }
  }
  return SeifertMatrix(genus, ordering, m);
}

Vector reorder_vector(const Vector& v, int genus, BasisOrdering from, BasisOrdering to) {
  const auto perm = basis_permutation(static_cast<std::size_t>(genus), from, to);
  if (v.size() != perm.size()) throw InputError("vector length does not match genus");
  Vector out(v.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out[k] = v[perm[k]];
  return out;
}

Matrix reorder_columns(const Matrix& columns, int genus, BasisOrdering from, BasisOrdering to) {
  const auto perm = basis_permutation(static_cast<std::size_t>(genus), from, to);
  if (columns.rows() != perm.size()) throw InputError("column length does not match genus");
  Matrix out(columns.rows(), columns.cols());
  for (std::size_t k = 0; k < perm.size(); ++k)
    for (std::size_t c = 0; c < columns.cols(); ++c) out(k, c) = columns(perm[k], c);
  return out;
}

SeifertMatrix reorder(const SeifertMatrix& m, BasisOrdering target) {
  const auto perm = basis_permutation(static_cast<std::size_t>(m.genus()), m.ordering(), target);
  Matrix out(m.entries().rows(), m.entries().cols());
  for (std::size_t r = 0; r < perm.size(); ++r)
    for (std::size_t c = 0; c < perm.size(); ++c) out(r, c) = m.entries()(perm[r], perm[c]);
  return validate(out, target);
}

Integer form(const SeifertMatrix& m, const Vector& u, const Vector& v) {
  require_length(m, u);
  require_length(m, v);
  return dot(u, m.entries() * v);
}

Integer linking_with_pushoff(const SeifertMatrix& m, const Vector& x, const Vector& y, Pushoff direction) {
  if (direction == Pushoff::positive) return form(m, x, y);
  return form(m, y, x);
}

SeifertMatrix genus_one_matrix(const Integer& d, const Integer& e) {
  Matrix m(2, 2);
  m(0, 0) = d;
  m(0, 1) = e;
  m(1, 0) = e - 1;
  return validate(m, BasisOrdering::interleaved);
}

SeifertMatrix connected_sum(const SeifertMatrix& m1, const SeifertMatrix& m2, const SeifertMatrix& m3) {
  const std::array<const SeifertMatrix*, 3> parts{&m1, &m2, &m3};
  Matrix out(6, 6);
  for (std::size_t k = 0; k < 3; ++k) {
    if (parts[k]->genus() != 1) {
      throw InputError("connected_sum summand " + std::to_string(k + 1) + " has genus " +
                       std::to_string(parts[k]->genus()) + ", expected 1");
    }
    // For genus one both orderings coincide.
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) out(2 * k + r, 2 * k + c) = parts[k]->entries()(r, c);
  }
  return validate(out, BasisOrdering::interleaved);
}

GenusOneNormalization genus_one_normalize(const Integer& d, const Integer& e) {
  const Integer odd = 2 * e - 1;
  const Integer minus_d = -d;
  Integer n;
  mpz_gcd(n.get_mpz_t(), odd.get_mpz_t(), minus_d.get_mpz_t());
  const Integer x = odd / n;
  const Integer y = minus_d / n;

  Integer z, w;
  if (y == 0) {
    // x = +-1 and -x w = 1 forces w = -x; z is free.
    w = -x;
    z = 0;
  } else {
    // y s + x t = 1  gives  z = s, w = -t.
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), y.get_mpz_t(), x.get_mpz_t());
    const Integer period = abs(y);
    Integer r = -t;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), period.get_mpz_t());
    const Integer below = r - period;
    w = (r < abs(below)) ? r : below;
    z = (1 + x * w) / y;
  }
  if (-x * w + z * y != 1) throw DefectError("genus_one_normalize: Bezout pair check failed");

  const Matrix m = genus_one_matrix(d, e).entries();
  const Vector zw{z, w};
  const Vector xy{x, y};
  GenusOneNormalization out{n,
                            x,
                            y,
                            z,
                            w,
                            {dot(zw, m * xy), dot(xy, m * zw), dot(xy, m * xy)},
                            validate(Matrix::from_columns({zw, xy}).transpose() * m * Matrix::from_columns({zw, xy}),
                                     BasisOrdering::interleaved)};
  if (out.identities[0] != 1 - e || out.identities[1] != -e || out.identities[2] != 0) {
    throw DefectError("genus_one_normalize: verification identities failed for d=" + to_string(d) +
                      ", e=" + to_string(e));
  }
  return out;
}

Integer normalize_e(const Integer& e) { return e >= 1 ? e : Integer(1 - e); }

}  // namespace milnor

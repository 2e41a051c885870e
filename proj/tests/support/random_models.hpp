// Seeded random generators for property tests.
#ifndef MILNOR_TESTS_RANDOM_MODELS_HPP
#define MILNOR_TESTS_RANDOM_MODELS_HPP

#include <random>
#include <utility>
#include <vector>

#include "milnor/lattice.hpp"
#include "milnor/metabolizer.hpp"
#include "milnor/seifert.hpp"
#include "milnor/words.hpp"
#include "oracles.hpp"

namespace models {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline milnor::FreeWord random_word(Rng& rng, int rank, int max_length) {
  std::vector<milnor::Letter> letters;
  const int len = uniform(rng, 0, max_length);
  for (int i = 0; i < len; ++i) letters.push_back({uniform(rng, 1, rank), uniform(rng, 0, 1) ? 1 : -1});
  return milnor::FreeWord(rank, std::move(letters));
}

// Random element of F_2: a random word followed by the letters that cancel
// its exponent sums.
inline milnor::FreeWord random_f2_word(Rng& rng, int max_length) {
  milnor::FreeWord w = random_word(rng, 3, max_length);
  for (int i = 1; i <= 3; ++i) {
    const auto s = milnor::exponent_sum(w, i);
    w = w * milnor::word_power(milnor::FreeWord::generator(3, i), -s);
  }
  return w;
}

inline std::vector<std::pair<int, int>> letters_of(const milnor::FreeWord& w) {
  std::vector<std::pair<int, int>> out;
  for (const auto& l : w.letters()) out.emplace_back(l.generator, l.sign);
  return out;
}

inline milnor::Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  milnor::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, lo, hi);
  return m;
}

inline milnor::Matrix random_symmetric(Rng& rng, std::size_t n, int lo, int hi) {
  milnor::Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = uniform(rng, lo, hi);
  return m;
}

// Product of elementary unimodular matrices I + t E_ij and sign flips.
inline milnor::Matrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  milnor::Matrix u = milnor::Matrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    milnor::Matrix e = milnor::Matrix::identity(n);
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    if (i == j) {
      e(i, i) = -1;
    } else {
      e(i, j) = uniform(rng, -2, 2);
    }
    u = u * e;
  }
  return u;
}

// Inverse of a unimodular matrix via the adjugate (det = +-1).
inline milnor::Matrix unimodular_inverse(const milnor::Matrix& u) {
  const std::size_t n = u.rows();
  const milnor::Integer det = milnor::determinant(u);
  milnor::Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      milnor::Matrix minor(n - 1, n - 1);
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = u(i, j);
        }
        ++mi;
      }
      milnor::Integer cof = milnor::determinant(minor);
      if ((r + c) % 2) cof = -cof;
      inv(c, r) = cof * det;  // det^-1 == det for +-1
    }
  return inv;
}

// Random symplectic matrix for the blocked form [[0, I], [-I, 0]].
inline milnor::Matrix random_symplectic(Rng& rng, std::size_t g, int steps) {
  milnor::Matrix p = milnor::Matrix::identity(2 * g);
  for (int s = 0; s < steps; ++s) {
    milnor::Matrix e = milnor::Matrix::identity(2 * g);
    switch (uniform(rng, 0, 2)) {
      case 0: {  // [[I, S], [0, I]]
        const milnor::Matrix sym = random_symmetric(rng, g, -1, 1);
        for (std::size_t r = 0; r < g; ++r)
          for (std::size_t c = 0; c < g; ++c) e(r, g + c) = sym(r, c);
        break;
      }
      case 1: {  // [[I, 0], [S, I]]
        const milnor::Matrix sym = random_symmetric(rng, g, -1, 1);
        for (std::size_t r = 0; r < g; ++r)
          for (std::size_t c = 0; c < g; ++c) e(g + r, c) = sym(r, c);
        break;
      }
      default: {  // [[U, 0], [0, U^-T]]
        const milnor::Matrix u = random_unimodular(rng, g, 2);
        const milnor::Matrix uit = unimodular_inverse(u).transpose();
        for (std::size_t r = 0; r < g; ++r)
          for (std::size_t c = 0; c < g; ++c) {
            e(r, c) = u(r, c);
            e(g + r, g + c) = uit(r, c);
          }
      }
    }
    p = p * e;
  }
  return p;
}

struct ValidPair {
  milnor::SeifertMatrix m;
  milnor::MetabolizerBasis v;
  milnor::Matrix b;  // B block of the original blocked model
};

// [[A, B], [B^T - I, 0]] with A symmetric and entries in [lo, hi], moved by a
// random symplectic change of basis and re-based metabolizer; optionally
// returned in interleaved coordinates.
inline ValidPair random_valid_pair(Rng& rng, std::size_t g, int lo, int hi, bool interleave) {
  using milnor::Matrix;
  const Matrix a = random_symmetric(rng, g, lo, hi);
  const Matrix b = random_matrix(rng, g, g, lo, hi);
  Matrix model(2 * g, 2 * g);
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t c = 0; c < g; ++c) {
      model(r, c) = a(r, c);
      model(r, g + c) = b(r, c);
      model(g + r, c) = b(c, r) - (r == c ? 1 : 0);
    }
  const Matrix j = milnor::intersection_form(static_cast<int>(g), milnor::BasisOrdering::blocked);
  const Matrix p = random_symplectic(rng, g, 4);
  const Matrix p_inv = Matrix(2 * g, 2 * g) - j * p.transpose() * j;
  Matrix v0(2 * g, g);
  for (std::size_t k = 0; k < g; ++k) v0(g + k, k) = 1;
  const Matrix m = p.transpose() * model * p;
  const Matrix v = p_inv * v0 * random_unimodular(rng, g, 3);
  auto seifert = milnor::validate(m, milnor::BasisOrdering::blocked);
  Matrix cols = v;
  if (interleave) {
    seifert = milnor::reorder(seifert, milnor::BasisOrdering::interleaved);
    cols = milnor::reorder_columns(v, static_cast<int>(g), milnor::BasisOrdering::blocked,
                                   milnor::BasisOrdering::interleaved);
  }
  return {seifert, milnor::MetabolizerBasis(cols), b};
}

inline milnor::Integer big(long long x) { return milnor::Integer(static_cast<long>(x)); }

inline oracle::Dense to_dense(const milnor::Matrix& m) {
  oracle::Dense out(m.rows(), oracle::Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = milnor::to_int64(m(r, c));
  return out;
}

}  // namespace models

#endif  // MILNOR_TESTS_RANDOM_MODELS_HPP

#ifndef MILNOR_LATTICE_HPP
#define MILNOR_LATTICE_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "milnor/integer.hpp"

namespace milnor {

using Vector = std::vector<Integer>;

// Dense row-major integer matrix. Sizes here are tiny (at most 6x6 for
// Seifert data), so everything is exact and simple.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

Integer dot(const Vector& u, const Vector& v);

// Fraction-free (Bareiss) determinant.
Integer determinant(const Matrix& m);

// Rank over the rationals.
std::size_t rank(const Matrix& m);

// U * A * V = D with U, V unimodular and D diagonal, each invariant factor
// positive and dividing the next.
struct SmithForm {
  Matrix d;
  Matrix u;
  Matrix v;
  std::vector<Integer> invariant_factors;  // nonzero diagonal entries only
};

SmithForm smith_normal_form(const Matrix& a);

// Canonical row Hermite normal form of the row lattice of `a`: positive
// pivots, entries above each pivot reduced into [0, pivot), zero rows dropped.
// Two matrices have the same row lattice iff their HNFs are equal.
Matrix row_hermite_form(const Matrix& a);

}  // namespace milnor

#endif  // MILNOR_LATTICE_HPP

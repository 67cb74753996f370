#pragma once

// Exact integer linear algebra: dense matrices over Z, fraction-free
// determinants, Smith normal form with unimodular transforms, and exact
// rational linear solves. Everything here is deterministic and allocation
// bounded by the (tiny) matrix sizes that occur for orbifold models.

#include "numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qtorb {

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(const std::vector<IntVec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec column(std::size_t j) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);
  // row a += c * row b, column a += c * column b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& c);
  void add_column_multiple(std::size_t a, std::size_t b, const Int& c);

private:
  std::size_t rows_;
  std::size_t cols_;
  IntVec data_;
};

// Determinant of a square matrix via the Bareiss fraction-free algorithm.
// The empty 0x0 matrix has determinant 1. Throws InvalidArgument when the
// matrix is not square.
Int determinant(const IntMatrix& m);

// Smith normal form: unimodular U (rows x rows) and V (cols x cols) with
// U * M * V = D, D diagonal with nonnegative entries d_1 | d_2 | ... .
struct SmithDecomposition {
  IntMatrix left;     // U
  IntMatrix diagonal; // D, same shape as M
  IntMatrix right;    // V

  // The nonzero diagonal entries of D, in divisibility order.
  IntVec elementary_divisors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Solve A x = b exactly over Q, where the columns of A are required to be
// linearly independent (throws InvalidArgument otherwise). Returns the unique
// solution, or nullopt when b lies outside the column span.
std::optional<RatVec> solve_rational(const IntMatrix& a, const IntVec& b);

enum class Primitivity {
  Zero,        // the zero vector
  Primitive,   // gcd of entries is 1
  Imprimitive, // nonzero with gcd > 1
};

Primitivity classify_primitivity(const IntVec& v);
bool is_primitive(const IntVec& v);

// Sign (+1, -1, or 0) of the determinant of a square rational matrix given
// by columns. Used for orientation bookkeeping; exact.
int rational_det_sign(const std::vector<RatVec>& columns);

} // namespace qtorb

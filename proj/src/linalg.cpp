#include "linalg.hpp"

#include "error.hpp"

#include <algorithm>
#include <utility>

namespace qtorb {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw Error(ErrorCode::InvalidArgument, "ragged rows in matrix construction");
    }
    for (std::size_t j = 0; j < c; ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns) {
  const std::size_t c = columns.size();
  const std::size_t r = c == 0 ? 0 : columns.front().size();
  IntMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (columns[j].size() != r) {
      throw Error(ErrorCode::InvalidArgument, "ragged columns in matrix construction");
    }
    for (std::size_t i = 0; i < r; ++i) {
      m.at(i, j) = columns[j][i];
    }
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    out[j] = at(i, j);
  }
  return out;
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i] = at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t.at(j, i) = at(i, j);
    }
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  }
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) += aik * other.at(k, j);
      }
    }
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    std::swap(at(a, j), at(b, j));
  }
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    std::swap(at(i, a), at(i, b));
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) {
    at(i, j) = -at(i, j);
  }
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) {
    at(i, j) = -at(i, j);
  }
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) {
    at(a, j) += c * at(b, j);
  }
}

void IntMatrix::add_column_multiple(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) {
    at(i, a) += c * at(i, b);
  }
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && a.at(pivot, k) == 0) {
        ++pivot;
      }
      if (pivot == n) {
        return 0;
      }
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss update: the division by the previous pivot is exact.
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// Position of a nonzero entry of minimal absolute value in the trailing
// submatrix starting at (t, t); nullopt when that submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>>
min_abs_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs = 0;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) {
        continue;
      }
      Int abs_val = a.at(i, j) < 0 ? Int(-a.at(i, j)) : a.at(i, j);
      if (!best || abs_val < best_abs) {
        best = {{i, j}};
        best_abs = abs_val;
      }
    }
  }
  return best;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  // Invariant maintained throughout: a == u * m * v. Every row operation on
  // `a` is mirrored on `u`, every column operation on `v`.
  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = min_abs_pivot(a, t);
      if (!pivot) {
        // Trailing submatrix is zero; diagonalization complete.
        t = steps;
        break;
      }
      auto [pi, pj] = *pivot;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_columns(t, pj);
      v.swap_columns(t, pj);
      if (a.at(t, t) < 0) {
        a.negate_row(t);
        u.negate_row(t);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a.at(i, t) == 0) {
          continue;
        }
        Int q = a.at(i, t) / a.at(t, t); // truncated quotient is fine here
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a.at(i, t) != 0) {
          clean = false; // remainder smaller than pivot; re-pivot
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a.at(t, j) == 0) {
          continue;
        }
        Int q = a.at(t, j) / a.at(t, t);
        a.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (a.at(t, j) != 0) {
          clean = false;
        }
      }
      if (!clean) {
        continue;
      }

      // Enforce the divisibility chain: the pivot must divide every entry of
      // the trailing submatrix before we move on.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < r && divides_all; ++i) {
        for (std::size_t j = t + 1; j < c && divides_all; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
          }
        }
      }
      if (divides_all) {
        break;
      }
    }
    if (t == steps) {
      break;
    }
  }

  return SmithDecomposition{std::move(u), std::move(a), std::move(v)};
}

IntVec SmithDecomposition::elementary_divisors() const {
  IntVec out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (diagonal.at(i, i) != 0) {
      out.push_back(diagonal.at(i, i));
    }
  }
  return out;
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const IntVec& b) {
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  if (b.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "solve_rational: rhs length mismatch");
  }
  // Gauss-Jordan on the rational augmented matrix [A | b].
  std::vector<RatVec> aug(n, RatVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      aug[i][j] = Rat(a.at(i, j));
    }
    aug[i][k] = Rat(b[i]);
  }

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t sel = pivot_row;
    while (sel < n && aug[sel][col] == 0) {
      ++sel;
    }
    if (sel == n) {
      throw Error(ErrorCode::InvalidArgument,
                  "solve_rational: columns are linearly dependent");
    }
    std::swap(aug[sel], aug[pivot_row]);
    const Rat inv = Rat(1) / aug[pivot_row][col];
    for (std::size_t j = col; j <= k; ++j) {
      aug[pivot_row][j] *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot_row || aug[i][col] == 0) {
        continue;
      }
      const Rat factor = aug[i][col];
      for (std::size_t j = col; j <= k; ++j) {
        aug[i][j] -= factor * aug[pivot_row][j];
      }
    }
    ++pivot_row;
  }

  for (std::size_t i = pivot_row; i < n; ++i) {
    if (aug[i][k] != 0) {
      return std::nullopt; // b is outside the column span
    }
  }
  RatVec x(k);
  for (std::size_t j = 0; j < k; ++j) {
    x[j] = aug[j][k];
  }
  return x;
}

Primitivity classify_primitivity(const IntVec& v) {
  const Int g = vec_gcd(v);
  if (g == 0) {
    return Primitivity::Zero;
  }
  return g == 1 ? Primitivity::Primitive : Primitivity::Imprimitive;
}

bool is_primitive(const IntVec& v) {
  return classify_primitivity(v) == Primitivity::Primitive;
}

int rational_det_sign(const std::vector<RatVec>& columns) {
  const std::size_t n = columns.size();
  // Scale each column by the (positive) lcm of its denominators; positive
  // column scalings do not change the determinant sign.
  std::vector<IntVec> scaled;
  scaled.reserve(n);
  for (const RatVec& col : columns) {
    if (col.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "rational_det_sign: non-square input");
    }
    Int l = 1;
    for (const Rat& x : col) {
      l = boost::multiprecision::lcm(l, denominator(x));
    }
    IntVec c(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rat scaled_entry = col[i] * Rat(l);
      c[i] = numerator(scaled_entry);
    }
    scaled.push_back(std::move(c));
  }
  const Int d = determinant(IntMatrix::from_columns(scaled));
  if (d == 0) {
    return 0;
  }
  return d > 0 ? 1 : -1;
}

} // namespace qtorb

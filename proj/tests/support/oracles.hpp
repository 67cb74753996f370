#pragma once

// Independent reference implementations used only by tests. These are
// deliberately naive and share no code path with the library algorithms they
// check: determinants by cofactor expansion instead of fraction-free
// elimination, box enumeration by scanning a denominator grid instead of
// Smith normal form.

#include "error.hpp"
#include "model.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace qtorb::testing {

// Laplace (cofactor) expansion along the first row. O(n!) but exact and
// independent of the Bareiss implementation.
inline Int cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) {
    throw Error(ErrorCode::InvalidArgument, "cofactor determinant of non-square matrix");
  }
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return m.at(0, 0);
  }
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) {
      continue;
    }
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t col = 0;
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (jj == j) {
          continue;
        }
        minor.at(i - 1, col++) = m.at(i, jj);
      }
    }
    const Int term = m.at(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Grid denominator for the brute-force box oracle: the smallest |cofactor
// determinant| over vertices containing the face. Coefficient denominators of
// box elements divide the group order of the face, which divides every
// containing vertex's group order, so a grid in steps of 1/m is complete.
inline Int grid_denominator(const CharacteristicModel& m, const Face& f) {
  std::optional<Int> best;
  for (int vi : face_vertex_indices(m.polytope, f)) {
    Int d = cofactor_determinant(face_matrix(m, vertex_face(m.polytope, vi)));
    if (d < 0) {
      d = -d;
    }
    if (!best || d < *best) {
      best = d;
    }
  }
  if (!best || *best == 0) {
    throw Error(ErrorCode::InvalidArgument, "face has no nondegenerate vertex");
  }
  return *best;
}

struct OracleBoxElement {
  RatVec coeffs;
  IntVec lattice_point;

  bool operator==(const OracleBoxElement& other) const = default;
  bool operator<(const OracleBoxElement& other) const { return coeffs < other.coeffs; }
};

// Brute-force Box_F: scan every coefficient tuple on the grid {0, 1/m, ...,
// (m-1)/m}^k and keep those whose weighted sum of characteristic vectors is
// integral. Exponential in k; callers keep m^k small.
inline std::vector<OracleBoxElement> grid_box_elements(const CharacteristicModel& m,
                                                       const Face& f) {
  const std::size_t k = f.facet_set.size();
  const int n = m.polytope.dim();
  if (k == 0) {
    return {OracleBoxElement{{}, IntVec(static_cast<std::size_t>(n), Int(0))}};
  }
  const Int denom = grid_denominator(m, f);
  const IntMatrix lam = face_matrix(m, f);

  std::vector<OracleBoxElement> out;
  IntVec counter(k, Int(0));
  for (;;) {
    RatVec coeffs(k);
    for (std::size_t j = 0; j < k; ++j) {
      coeffs[j] = make_rat(counter[j], denom);
    }
    RatVec point(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t j = 0; j < k; ++j) {
      for (int row = 0; row < n; ++row) {
        point[static_cast<std::size_t>(row)] +=
            coeffs[j] * Rat(lam.at(static_cast<std::size_t>(row), j));
      }
    }
    if (std::all_of(point.begin(), point.end(), rat_is_integer)) {
      OracleBoxElement e;
      e.coeffs = std::move(coeffs);
      e.lattice_point.resize(static_cast<std::size_t>(n));
      for (int row = 0; row < n; ++row) {
        e.lattice_point[static_cast<std::size_t>(row)] =
            numerator(point[static_cast<std::size_t>(row)]);
      }
      out.push_back(std::move(e));
    }

    std::size_t pos = 0;
    while (pos < k) {
      counter[pos] += 1;
      if (counter[pos] < denom) {
        break;
      }
      counter[pos] = 0;
      ++pos;
    }
    if (pos == k) {
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace qtorb::testing

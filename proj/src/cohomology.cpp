#include "cohomology.hpp"

#include "error.hpp"

#include <sstream>

namespace qtorb {

std::map<int, Int> ordinary_betti(const CharacteristicModel& m, const Face& f) {
  const std::vector<Int> h = h_vector(m.polytope, f);
  std::map<int, Int> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != 0) {
      out[static_cast<int>(2 * i)] = h[i];
    }
  }
  return out;
}

Int CRBettiTable::rank_at(const Rat& degree) const {
  auto it = entries.find(degree);
  return it == entries.end() ? Int(0) : it->second;
}

CRBettiTable cr_betti(const CharacteristicModel& m) {
  CRBettiTable table;
  for (const TwistedSector& s : twisted_sectors(m)) {
    for (const auto& [degree, rank] : ordinary_betti(m, s.face)) {
      table.entries[Rat(degree) + s.degree_shift] += rank;
    }
  }
  for (auto it = table.entries.begin(); it != table.entries.end();) {
    it = it->second == 0 ? table.entries.erase(it) : std::next(it);
  }
  table.quasi_sl = is_quasi_sl(m);
  table.euler = euler_cr(m);

  // Consistency: the table's total rank is itself the Chen-Ruan Euler
  // characteristic (all contributions sit in even "virtual" degree).
  Int total = 0;
  for (const auto& [degree, rank] : table.entries) {
    total += rank;
  }
  if (total != table.euler) {
    throw_internal("Chen-Ruan table total rank disagrees with the Euler characteristic");
  }
  return table;
}

Int euler_cr(const CharacteristicModel& m) {
  // Sector formula: chi(X_F) counts the vertices of F, each twisted sector
  // over F contributes one copy.
  Int by_sectors = 0;
  for (const Face& f : enumerate_faces(m.polytope)) {
    const Int chi(face_vertex_indices(m.polytope, f).size());
    const Int sectors(interior_box_elements(m, f).size());
    by_sectors += chi * sectors;
  }

  // Vertex formula: the boxes of the vertex groups partition all sectors, so
  // the same number is the sum of the vertex group orders.
  Int by_vertices = 0;
  for (std::size_t vi = 0; vi < m.polytope.vertices().size(); ++vi) {
    Int d = determinant(face_matrix(m, vertex_face(m.polytope, static_cast<int>(vi))));
    if (d < 0) {
      d = -d;
    }
    by_vertices += d;
  }

  if (by_sectors != by_vertices) {
    throw_internal("Euler characteristic mismatch: sector formula gives " +
                   by_sectors.str() + ", vertex formula gives " + by_vertices.str());
  }
  return by_vertices;
}

DualityReport check_poincare_duality(const CharacteristicModel& m) {
  DualityReport report;
  const Rat top(2 * m.polytope.dim());

  const CRBettiTable table = cr_betti(m);
  for (const auto& [degree, rank] : table.entries) {
    const Rat mirror = top - degree;
    if (table.rank_at(mirror) != rank) {
      report.violations.push_back("table rank " + rank.str() + " at degree " +
                                  rat_to_display(degree) + " but " +
                                  table.rank_at(mirror).str() + " at degree " +
                                  rat_to_display(mirror));
    }
  }

  // Sector-level pairing: (F, g) against (F, g^{-1}); the untwisted sector
  // pairs with itself.
  for (const TwistedSector& s : twisted_sectors(m)) {
    const TwistedSector inv = s.is_untwisted() ? s : inverse_sector(m, s);
    const std::map<int, Int> betti = ordinary_betti(m, s.face);
    for (const auto& [degree, rank] : betti) {
      const Rat d = Rat(degree) + s.degree_shift;
      const Rat mirror = top - d;
      // Contribution of the inverse sector at the mirrored degree.
      const Rat inv_ordinary = mirror - inv.degree_shift;
      Int inv_rank = 0;
      if (rat_is_integer(inv_ordinary)) {
        auto it = betti.find(numerator(inv_ordinary).convert_to<int>());
        if (it != betti.end()) {
          inv_rank = it->second;
        }
      }
      if (inv_rank != rank) {
        report.violations.push_back(
            "sector (" + face_label(m.polytope, s.face) + ", " +
            int_vec_to_string(s.element.lattice_point) + ") rank " + rank.str() +
            " at degree " + rat_to_display(d) +
            " is not matched by its inverse at degree " + rat_to_display(mirror));
      }
    }
  }

  report.holds = report.violations.empty();
  return report;
}

} // namespace qtorb

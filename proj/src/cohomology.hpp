#pragma once

// Cohomological invariants. Ordinary cohomology of the orbifold over a face
// is concentrated in even degrees with ranks given by the h-vector of the
// face; the Chen-Ruan table aggregates all twisted sectors with their degree
// shifts. Everything is exact; degrees are rationals (integral exactly when
// the model is quasi-SL).

#include "model.hpp"

#include <map>
#include <string>
#include <vector>

namespace qtorb {

// Ordinary Betti numbers of the orbifold piece over a face: degree 2i has
// rank h_i(F); odd degrees vanish and are omitted.
std::map<int, Int> ordinary_betti(const CharacteristicModel& m, const Face& f);

struct CRBettiTable {
  // degree -> rank, degrees may be non-integral rationals when the model is
  // not quasi-SL. Only nonzero ranks are stored.
  std::map<Rat, Int> entries;
  bool quasi_sl = false;
  Int euler = 0; // Chen-Ruan Euler characteristic (sum of all ranks)

  Int rank_at(const Rat& degree) const;
  bool operator==(const CRBettiTable& other) const = default;
};

// Chen-Ruan Betti table: the untwisted table of P plus, for every twisted
// sector (F, g), the table of F shifted up by 2 * age(g).
CRBettiTable cr_betti(const CharacteristicModel& m);

// Chen-Ruan Euler characteristic computed two independent ways -- the sector
// sum  sum_F chi(X_F) * |interior Box_F|  and the vertex sum
// sum_v |det Lambda_v| -- cross-checked against each other (a mismatch is an
// Internal error) before the common value is returned.
Int euler_cr(const CharacteristicModel& m);

struct DualityReport {
  bool holds = false;
  std::vector<std::string> violations;
};

// Poincare duality for the Chen-Ruan table: the table must be symmetric about
// degree n, and sector-by-sector the contribution of (F, g) in degree d must
// match the contribution of (F, g^{-1}) in degree 2n - d.
DualityReport check_poincare_duality(const CharacteristicModel& m);

} // namespace qtorb

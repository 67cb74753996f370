#pragma once

// Multiplicative skeleton of the Chen-Ruan cohomology: the product structure
// on twisted sectors. The product of sectors (K_1, g_1) and (K_2, g_2) is
// supported on the face K defined by the facets where the combined
// coefficient sum has nonzero fractional part; it vanishes when the facets of
// K_1 and K_2 do not lie on a common face. Facets whose coefficient sum
// reaches or exceeds 1 contribute the obstruction (theta) factors, split into
// the three cases that drive the product formula.

#include "model.hpp"

#include <map>
#include <vector>

namespace qtorb {

enum class FacetCase {
  FracOnly,        // combined coefficient in (0, 1): survives into the target
  IntegerPlusFrac, // combined coefficient in (1, 2): survives, with theta factor
  IntegerExact,    // combined coefficient exactly 1: leaves the support, theta factor
};

struct SectorProduct {
  bool zero = true;
  Face target_face;          // K, meaningful when nonzero
  BoxElement product;        // the element g_1 g_2 over K, meaningful when nonzero
  std::vector<int> theta_facets;       // facets with combined coefficient >= 1
  std::map<int, FacetCase> case_tags;  // facet -> case, over all facets involved
};

// The product of two sectors of the model. Both sectors must belong to the
// model (face and box-element data are re-checked; foreign sectors are
// rejected with InvalidArgument). Degree bookkeeping
// age(g1) + age(g2) = age(g1 g2) + |theta_facets| is asserted internally.
SectorProduct sector_product(const CharacteristicModel& m, const TwistedSector& s1,
                             const TwistedSector& s2);

struct SectorProductTable {
  std::vector<TwistedSector> sectors; // untwisted first, canonical order
  // table[i][j] = product of sectors[i] and sectors[j]
  std::vector<std::vector<SectorProduct>> table;
};

// The full product table. Closure (every nonzero product is again a listed
// sector), commutativity of supports, identity behaviour of the untwisted
// sector, and associativity of supports on all triples are verified; any
// failure throws an Internal error.
SectorProductTable sector_product_table(const CharacteristicModel& m);

} // namespace qtorb

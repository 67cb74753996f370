#pragma once

// Characteristic models: a combinatorial simple polytope together with a
// primitive integer (characteristic) vector per facet, and optionally an
// inward normal per facet. This is the chart data of an omnioriented
// quasitoric orbifold; every invariant computed by the library lives here or
// downstream of here.

#include "linalg.hpp"
#include "polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtorb {

struct CharacteristicModel {
  CombinatorialPolytope polytope;
  // One vector per facet, each of length polytope.dim().
  std::vector<IntVec> charvecs;
  // Optional realization data: inward facet normals (all or none).
  std::optional<std::vector<RatVec>> normals;

  bool operator==(const CharacteristicModel& other) const = default;
};

// Full validation: polytope structure, vector shapes, primitivity, and
// linear independence of characteristic vectors (and normals, if present)
// at every vertex. Empty result means valid.
std::vector<std::string> validate_model(const CharacteristicModel& m);

// The n x k matrix whose columns are the characteristic vectors of the
// facets in f.facet_set, in ascending index order.
IntMatrix face_matrix(const CharacteristicModel& m, const Face& f);

// Order of the local group at the face: the index of the sublattice spanned
// by the face's characteristic vectors inside its saturation. 1 for the whole
// polytope; |det| of the vertex matrix at vertices.
Int local_group_order(const CharacteristicModel& m, const Face& f);

// One element of Box_F: a lattice point x = sum_j a_j lambda_j with all
// coefficients in [0, 1), indexed by f.facet_set in ascending order.
struct BoxElement {
  Face face;
  RatVec coeffs;
  IntVec lattice_point;
  Rat age;       // sum of the coefficients
  bool interior; // all coefficients strictly positive

  bool operator==(const BoxElement& other) const = default;
};

// All of Box_F, sorted by (age, coefficients). For the whole polytope this is
// the single zero element. Size always equals local_group_order(m, f).
std::vector<BoxElement> box_elements(const CharacteristicModel& m, const Face& f);

// The elements with every coefficient in (0, 1): Box_F-degree-zero part used
// for twisted sectors. For the whole polytope this is the zero element.
std::vector<BoxElement> interior_box_elements(const CharacteristicModel& m, const Face& f);

// A twisted sector (F, g) with g interior in Box_F. The pair (P, 0) is the
// untwisted sector.
struct TwistedSector {
  Face face;
  BoxElement element;
  Rat degree_shift; // 2 * age of the element

  bool is_untwisted() const { return face.facet_set.empty(); }
  bool operator==(const TwistedSector& other) const = default;
};

// All sectors, untwisted first, then faces in canonical order with their
// interior box elements. Cross-checks the enumeration against every vertex
// box (each Box_v must partition into the interior boxes of the faces
// through v); a mismatch throws an Internal error.
std::vector<TwistedSector> twisted_sectors(const CharacteristicModel& m);

// The sector (F, g^{-1}); coefficients 1 - a_j. Rejects the untwisted sector
// (InvalidArgument): inversion is defined on twisted sectors only.
TwistedSector inverse_sector(const CharacteristicModel& m, const TwistedSector& s);

struct QuasiSlReport {
  bool quasi_sl = false;
  // Sectors with non-integral age.
  std::vector<TwistedSector> offenders;
};

// Quasi-SL: every twisted sector has integral age.
QuasiSlReport quasi_sl_report(const CharacteristicModel& m);
bool is_quasi_sl(const CharacteristicModel& m);

// Orientation sign at a vertex: sign(det N_v) * sign(det Lambda_v), both
// matrices taken over the vertex facets in the same ascending index order.
// Requires normals; throws InvalidArgument without them.
int vertex_sign(const CharacteristicModel& m, int vertex_index);

// True when every vertex sign is +1. Requires normals.
bool is_positively_omnioriented(const CharacteristicModel& m);

// True when every vertex group is trivial (|det Lambda_v| = 1); the orbifold
// is then a quasitoric manifold.
bool is_manifold(const CharacteristicModel& m);

// The vertex as a Face (codimension n).
Face vertex_face(const CombinatorialPolytope& p, int vertex_index);

} // namespace qtorb

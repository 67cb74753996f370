#pragma once

// Combinatorial blowups. A blowup along a face F of codimension k >= 2 cuts
// F off the polytope (adding one facet) and assigns the new facet a
// characteristic vector lambda_0 = sum_j b_j lambda_j over the facets
// defining F, with every b_j > 0. The blowup is crepant when the b_j sum to
// 1 and is a resolution step when every b_j < 1 (vertex group orders then
// strictly drop). Crepant data, discrepancy bookkeeping, and the McKay
// correspondence checks live here, as does the greedy resolution loop.

#include "cohomology.hpp"
#include "model.hpp"

#include <string>
#include <vector>

namespace qtorb {

struct BlowupSpec {
  Face face;      // face of the model being blown up, codimension >= 2
  IntVec lambda0; // primitive characteristic vector for the new facet
  RatVec b;       // coefficients of lambda0 over the face facets, all > 0
  bool crepant = false;         // sum b_j == 1
  bool resolution_step = false; // all b_j < 1

  Rat coefficient_sum() const;
};

// Resolve lambda0 against the face: checks codimension, primitivity, and
// membership in the open cone spanned by the face's characteristic vectors.
BlowupSpec make_blowup_spec(const CharacteristicModel& m, const Face& f,
                            const IntVec& lambda0);

// Apply the blowup: truncate the face and append lambda_0 (and, when normals
// are present, the sum of the face facets' normals) for the new facet. The
// name given to the new facet is reported through new_facet_name when
// non-null. The result is validated; output group orders at new vertices obey
// the determinant scaling law.
CharacteristicModel blow_up(const CharacteristicModel& m, const BlowupSpec& spec,
                            std::string* new_facet_name = nullptr);

struct CrepantCandidateReport {
  Face face;
  // For each vertex of the face: (vertex index, dual vector v with
  // <lambda_i, v> = 1 for every facet i of the vertex).
  std::vector<std::pair<int, RatVec>> vertex_duals;
  // Interior box elements of age exactly 1 whose lattice point is primitive:
  // precisely the admissible crepant lambda_0 choices.
  std::vector<BoxElement> candidates;
};

CrepantCandidateReport crepant_candidates(const CharacteristicModel& m, const Face& f);

struct McKayReport {
  int dim = 0; // real dimension is 2 * dim
  bool crepant = false;
  bool quasi_sl_before = false;
  bool quasi_sl_after = false;
  bool in_theorem_scope = false; // crepant && quasi_sl_before

  Int euler_before = 0;
  Int euler_after = 0;
  bool euler_conserved = false;

  CRBettiTable betti_before;
  CRBettiTable betti_after;
  bool betti_equal = false;
  bool betti_equality_expected = false; // real dimension <= 6, in scope

  Int h2_before = 0;
  Int h2_after = 0;
  bool h2_monotone = false;          // h2_after >= h2_before
  bool h2_growth_expected = false;   // real dimension >= 8, in scope
};

// Run the blowup and compare invariants before and after. Verdict fields are
// only meaningful when in_theorem_scope.
McKayReport verify_mckay(const CharacteristicModel& m, const BlowupSpec& spec);

struct ResolveStep {
  std::vector<std::string> face;     // facet names in the model of this step
  IntVec lambda0;
  RatVec b;
  bool crepant = false;
  std::string new_facet;
  Int max_order_before = 0;          // largest vertex group order before the step
};

struct ResolutionResult {
  std::vector<ResolveStep> steps;
  CharacteristicModel final_model; // a manifold model
};

// Greedy resolution: repeatedly blow up a deepest singular face (maximal
// codimension with a nonzero interior box element; ties broken by
// lexicographically smallest facet set) along a minimal-age interior element
// (ties by lexicographically smallest lattice point), primitivized. Every
// step is a resolution step, so the process terminates in a manifold model.
ResolutionResult resolve(const CharacteristicModel& m);

} // namespace qtorb

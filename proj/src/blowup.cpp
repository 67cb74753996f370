#include "blowup.hpp"

#include "error.hpp"

#include <algorithm>

namespace qtorb {

Rat BlowupSpec::coefficient_sum() const {
  Rat sum(0);
  for (const Rat& x : b) {
    sum += x;
  }
  return sum;
}

BlowupSpec make_blowup_spec(const CharacteristicModel& m, const Face& f,
                            const IntVec& lambda0) {
  const std::size_t k = f.facet_set.size();
  if (k < 2 || static_cast<int>(k) > m.polytope.dim()) {
    throw Error(ErrorCode::InvalidArgument,
                "blowup needs a proper face of codimension >= 2, got codimension " +
                std::to_string(k));
  }
  if (!is_face(m.polytope, f.facet_set)) {
    throw Error(ErrorCode::InvalidArgument, "blowup target is not a face");
  }
  if (lambda0.size() != static_cast<std::size_t>(m.polytope.dim())) {
    throw Error(ErrorCode::InvalidArgument, "lambda0 has the wrong length");
  }
  switch (classify_primitivity(lambda0)) {
  case Primitivity::Zero:
    throw Error(ErrorCode::InvalidArgument, "lambda0 must be nonzero");
  case Primitivity::Imprimitive:
    throw Error(ErrorCode::InvalidArgument,
                "lambda0 is not primitive (entries share the factor " +
                vec_gcd(lambda0).str() + ")");
  case Primitivity::Primitive:
    break;
  }

  const auto coeffs = solve_rational(face_matrix(m, f), lambda0);
  if (!coeffs) {
    throw Error(ErrorCode::InvalidArgument,
                "lambda0 is not in the span of the face's characteristic vectors");
  }
  for (const Rat& c : *coeffs) {
    if (c <= 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "lambda0 is not in the open cone over the face (coefficient " +
                  rat_to_display(c) + ")");
    }
  }

  BlowupSpec spec;
  spec.face = f;
  spec.lambda0 = lambda0;
  spec.b = *coeffs;
  spec.crepant = spec.coefficient_sum() == 1;
  spec.resolution_step = std::all_of(spec.b.begin(), spec.b.end(),
                                     [](const Rat& c) { return c < 1; });
  return spec;
}

CharacteristicModel blow_up(const CharacteristicModel& m, const BlowupSpec& spec,
                            std::string* new_facet_name) {
  const std::string name = fresh_facet_name(m.polytope);

  CharacteristicModel out;
  out.polytope = truncate(m.polytope, spec.face, name);
  out.charvecs = m.charvecs;
  out.charvecs.push_back(spec.lambda0);
  if (m.normals) {
    out.normals = *m.normals;
    RatVec normal(static_cast<std::size_t>(m.polytope.dim()), Rat(0));
    for (int fi : spec.face.facet_set) {
      const RatVec& facet_normal = (*m.normals)[static_cast<std::size_t>(fi)];
      for (std::size_t row = 0; row < normal.size(); ++row) {
        normal[row] += facet_normal[row];
      }
    }
    out.normals->push_back(std::move(normal));
  }

  if (auto diags = validate_model(out); !diags.empty()) {
    throw_internal("blowup produced an invalid model: " + diags.front());
  }
  if (new_facet_name != nullptr) {
    *new_facet_name = name;
  }
  return out;
}

CrepantCandidateReport crepant_candidates(const CharacteristicModel& m, const Face& f) {
  const std::size_t k = f.facet_set.size();
  if (k < 2 || static_cast<int>(k) > m.polytope.dim()) {
    throw Error(ErrorCode::InvalidArgument,
                "crepant candidates need a proper face of codimension >= 2, got codimension " +
                std::to_string(k));
  }
  if (!is_face(m.polytope, f.facet_set)) {
    throw Error(ErrorCode::InvalidArgument, "not a face");
  }

  CrepantCandidateReport report;
  report.face = f;
  const IntVec ones(static_cast<std::size_t>(m.polytope.dim()), Int(1));
  for (int vi : face_vertex_indices(m.polytope, f)) {
    const Face v = vertex_face(m.polytope, vi);
    // The dual vector detects age-1 elements of Box_v: <lambda_i, dual> = 1
    // for every facet i at the vertex, so <x, dual> equals the age of any box
    // element written over the vertex's characteristic vectors.
    const auto dual = solve_rational(face_matrix(m, v).transposed(), ones);
    if (!dual) {
      throw Error(ErrorCode::InvalidModel,
                  "characteristic vectors at vertex {" + face_label(m.polytope, v) +
                  "} are degenerate");
    }
    report.vertex_duals.emplace_back(vi, *dual);
  }

  for (const BoxElement& e : interior_box_elements(m, f)) {
    if (e.age == 1 && is_primitive(e.lattice_point)) {
      report.candidates.push_back(e);
    }
  }
  return report;
}

McKayReport verify_mckay(const CharacteristicModel& m, const BlowupSpec& spec) {
  McKayReport report;
  report.dim = m.polytope.dim();
  report.crepant = spec.crepant;
  report.quasi_sl_before = is_quasi_sl(m);

  const CharacteristicModel after = blow_up(m, spec);
  report.quasi_sl_after = is_quasi_sl(after);
  report.in_theorem_scope = report.crepant && report.quasi_sl_before;

  report.euler_before = euler_cr(m);
  report.euler_after = euler_cr(after);
  report.euler_conserved = report.euler_before == report.euler_after;

  report.betti_before = cr_betti(m);
  report.betti_after = cr_betti(after);
  report.betti_equal = report.betti_before.entries == report.betti_after.entries;
  report.betti_equality_expected = report.in_theorem_scope && 2 * report.dim <= 6;

  report.h2_before = report.betti_before.rank_at(Rat(2));
  report.h2_after = report.betti_after.rank_at(Rat(2));
  report.h2_monotone = report.h2_after >= report.h2_before;
  report.h2_growth_expected = report.in_theorem_scope && 2 * report.dim >= 8;
  return report;
}

namespace {

Int max_vertex_order(const CharacteristicModel& m) {
  Int best = 1;
  for (std::size_t vi = 0; vi < m.polytope.vertices().size(); ++vi) {
    Int d = determinant(face_matrix(m, vertex_face(m.polytope, static_cast<int>(vi))));
    if (d < 0) {
      d = -d;
    }
    if (d > best) {
      best = d;
    }
  }
  return best;
}

} // namespace

ResolutionResult resolve(const CharacteristicModel& m) {
  ResolutionResult result;
  CharacteristicModel current = m;

  // Every iteration strictly decreases the multiset of vertex group orders
  // (each blown-up vertex of order o is replaced by vertices of orders
  // b_i * o < o), so this terminates; the cap is a pure safety net.
  for (int step = 0; step < 100000; ++step) {
    if (is_manifold(current)) {
      result.final_model = std::move(current);
      return result;
    }

    // Deepest singular face: maximal codimension with a nonzero interior box
    // element, ties broken by lexicographically smallest facet set. Faces are
    // already enumerated by ascending codimension and lexicographic order, so
    // the last qualifying face under stable scanning is found by scanning in
    // reverse codimension blocks; simpler: scan all and keep the best.
    std::optional<Face> target;
    for (const Face& f : enumerate_faces(current.polytope)) {
      if (f.facet_set.empty()) {
        continue; // the whole polytope carries only the zero element
      }
      if (interior_box_elements(current, f).empty()) {
        continue;
      }
      if (!target || f.facet_set.size() > target->facet_set.size()) {
        target = f; // first face of a deeper codimension block is lex-smallest
      }
    }
    if (!target) {
      throw_internal("model is singular but no face has an interior box element");
    }

    // Minimal-age interior element, ties by lexicographically smallest
    // lattice point.
    std::optional<BoxElement> pick;
    for (const BoxElement& e : interior_box_elements(current, *target)) {
      if (!pick || e.age < pick->age ||
          (e.age == pick->age && lex_less(e.lattice_point, pick->lattice_point))) {
        pick = e;
      }
    }

    IntVec lambda0 = pick->lattice_point;
    const Int g = vec_gcd(lambda0);
    if (g == 0) {
      throw_internal("interior box element with zero lattice point");
    }
    for (Int& x : lambda0) {
      x /= g;
    }

    const BlowupSpec spec = make_blowup_spec(current, *target, lambda0);
    if (!spec.resolution_step) {
      throw_internal("resolution chose a non-decreasing blowup step");
    }

    ResolveStep record;
    record.face = face_names(current.polytope, *target);
    record.lambda0 = spec.lambda0;
    record.b = spec.b;
    record.crepant = spec.crepant;
    record.max_order_before = max_vertex_order(current);
    current = blow_up(current, spec, &record.new_facet);
    result.steps.push_back(std::move(record));
  }
  throw_internal("resolution did not terminate within the step cap");
}

} // namespace qtorb

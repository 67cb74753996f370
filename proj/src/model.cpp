#include "model.hpp"

#include "error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qtorb {

std::vector<std::string> validate_model(const CharacteristicModel& m) {
  std::vector<std::string> diags = validate(m.polytope);

  const int n = m.polytope.dim();
  const std::size_t facets = static_cast<std::size_t>(m.polytope.facet_count());

  bool shapes_ok = true;
  if (m.charvecs.size() != facets) {
    diags.push_back("expected " + std::to_string(facets) + " characteristic vectors, got " +
                    std::to_string(m.charvecs.size()));
    shapes_ok = false;
  } else {
    for (std::size_t i = 0; i < facets; ++i) {
      if (m.charvecs[i].size() != static_cast<std::size_t>(n)) {
        diags.push_back("characteristic vector of facet '" + m.polytope.facet_names()[i] +
                        "' has length " + std::to_string(m.charvecs[i].size()) +
                        ", expected " + std::to_string(n));
        shapes_ok = false;
        continue;
      }
      switch (classify_primitivity(m.charvecs[i])) {
      case Primitivity::Zero:
        diags.push_back("characteristic vector of facet '" + m.polytope.facet_names()[i] +
                        "' is zero");
        shapes_ok = false;
        break;
      case Primitivity::Imprimitive:
        diags.push_back("characteristic vector of facet '" + m.polytope.facet_names()[i] +
                        "' is not primitive (entries share the factor " +
                        vec_gcd(m.charvecs[i]).str() + ")");
        break;
      case Primitivity::Primitive:
        break;
      }
    }
  }

  bool normals_ok = false;
  if (m.normals) {
    normals_ok = true;
    if (m.normals->size() != facets) {
      diags.push_back("expected " + std::to_string(facets) + " normal vectors, got " +
                      std::to_string(m.normals->size()));
      normals_ok = false;
    } else {
      for (std::size_t i = 0; i < facets; ++i) {
        if ((*m.normals)[i].size() != static_cast<std::size_t>(n)) {
          diags.push_back("normal of facet '" + m.polytope.facet_names()[i] +
                          "' has length " + std::to_string((*m.normals)[i].size()) +
                          ", expected " + std::to_string(n));
          normals_ok = false;
        } else if (std::all_of((*m.normals)[i].begin(), (*m.normals)[i].end(),
                               [](const Rat& x) { return x == 0; })) {
          diags.push_back("normal of facet '" + m.polytope.facet_names()[i] + "' is zero");
          normals_ok = false;
        }
      }
    }
  }

  // Vertex-level independence checks need structurally sound data.
  if (!validate(m.polytope).empty() || !shapes_ok) {
    return diags;
  }

  for (std::size_t vi = 0; vi < m.polytope.vertices().size(); ++vi) {
    const Face v = vertex_face(m.polytope, static_cast<int>(vi));
    if (determinant(face_matrix(m, v)) == 0) {
      diags.push_back("characteristic vectors at vertex {" + face_label(m.polytope, v) +
                      "} are linearly dependent");
    }
    if (m.normals && normals_ok) {
      std::vector<RatVec> cols;
      for (int fi : v.facet_set) {
        cols.push_back((*m.normals)[static_cast<std::size_t>(fi)]);
      }
      if (rational_det_sign(cols) == 0) {
        diags.push_back("normals at vertex {" + face_label(m.polytope, v) +
                        "} are linearly dependent");
      }
    }
  }
  return diags;
}

IntMatrix face_matrix(const CharacteristicModel& m, const Face& f) {
  std::vector<IntVec> cols;
  cols.reserve(f.facet_set.size());
  for (int fi : f.facet_set) {
    if (fi < 0 || static_cast<std::size_t>(fi) >= m.charvecs.size()) {
      throw Error(ErrorCode::InvalidArgument, "face references an unknown facet");
    }
    cols.push_back(m.charvecs[static_cast<std::size_t>(fi)]);
  }
  if (cols.empty()) {
    return IntMatrix(static_cast<std::size_t>(m.polytope.dim()), 0);
  }
  return IntMatrix::from_columns(cols);
}

Int local_group_order(const CharacteristicModel& m, const Face& f) {
  if (f.facet_set.empty()) {
    return 1;
  }
  const IntMatrix lam = face_matrix(m, f);
  const SmithDecomposition snf = smith_normal_form(lam);
  const IntVec divisors = snf.elementary_divisors();
  if (divisors.size() != f.facet_set.size()) {
    throw Error(ErrorCode::InvalidModel,
                "characteristic vectors at face {" + face_label(m.polytope, f) +
                "} are linearly dependent");
  }
  Int order = 1;
  for (const Int& d : divisors) {
    order *= d;
  }
  return order;
}

std::vector<BoxElement> box_elements(const CharacteristicModel& m, const Face& f) {
  const int n = m.polytope.dim();
  if (f.facet_set.empty()) {
    BoxElement zero;
    zero.face = f;
    zero.lattice_point.assign(static_cast<std::size_t>(n), Int(0));
    zero.age = 0;
    zero.interior = true;
    return {zero};
  }

  const std::size_t k = f.facet_set.size();
  const IntMatrix lam = face_matrix(m, f);
  const SmithDecomposition snf = smith_normal_form(lam);
  const IntVec divisors = snf.elementary_divisors();
  if (divisors.size() != k) {
    throw Error(ErrorCode::InvalidModel,
                "characteristic vectors at face {" + face_label(m.polytope, f) +
                "} are linearly dependent");
  }

  // With U * Lambda * V = D, the points Lambda * V * (c_1/d_1, ..., c_k/d_k)
  // for 0 <= c_i < d_i run over one representative of every coset of the
  // span-lattice inside its saturation; reducing the coefficient vector
  // V * (c_i/d_i) modulo 1 componentwise yields exactly Box_F.
  std::vector<BoxElement> out;
  std::set<RatVec> seen;
  IntVec counter(k, Int(0));
  for (;;) {
    RatVec coeffs(k, Rat(0));
    for (std::size_t j = 0; j < k; ++j) {
      Rat value(0);
      for (std::size_t l = 0; l < k; ++l) {
        if (snf.right.at(j, l) == 0 || counter[l] == 0) {
          continue;
        }
        value += Rat(snf.right.at(j, l) * counter[l]) / Rat(divisors[l]);
      }
      coeffs[j] = rat_frac(value);
    }

    BoxElement e;
    e.face = f;
    e.coeffs = coeffs;
    e.lattice_point.assign(static_cast<std::size_t>(n), Int(0));
    RatVec point(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t j = 0; j < k; ++j) {
      for (int row = 0; row < n; ++row) {
        point[static_cast<std::size_t>(row)] +=
            coeffs[j] * Rat(lam.at(static_cast<std::size_t>(row), j));
      }
    }
    e.age = 0;
    for (const Rat& a : coeffs) {
      e.age += a;
    }
    e.interior = std::all_of(coeffs.begin(), coeffs.end(),
                             [](const Rat& a) { return a > 0; });
    for (int row = 0; row < n; ++row) {
      const Rat& x = point[static_cast<std::size_t>(row)];
      if (!rat_is_integer(x)) {
        throw_internal("box element has a non-integral lattice point at face {" +
                       face_label(m.polytope, f) + "}");
      }
      e.lattice_point[static_cast<std::size_t>(row)] = numerator(x);
    }
    if (!seen.insert(coeffs).second) {
      throw_internal("duplicate box element at face {" + face_label(m.polytope, f) + "}");
    }
    out.push_back(std::move(e));

    // Odometer over the elementary divisor ranges.
    std::size_t pos = 0;
    while (pos < k) {
      counter[pos] += 1;
      if (counter[pos] < divisors[pos]) {
        break;
      }
      counter[pos] = 0;
      ++pos;
    }
    if (pos == k) {
      break;
    }
  }

  const Int order = local_group_order(m, f);
  if (Int(out.size()) != order) {
    throw_internal("box enumeration size mismatch at face {" + face_label(m.polytope, f) +
                   "}: got " + std::to_string(out.size()) + ", group order " + order.str());
  }

  std::sort(out.begin(), out.end(), [](const BoxElement& a, const BoxElement& b) {
    if (a.age != b.age) {
      return a.age < b.age;
    }
    return a.coeffs < b.coeffs;
  });
  return out;
}

std::vector<BoxElement> interior_box_elements(const CharacteristicModel& m, const Face& f) {
  std::vector<BoxElement> out = box_elements(m, f);
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const BoxElement& e) { return !e.interior; }),
            out.end());
  return out;
}

std::vector<TwistedSector> twisted_sectors(const CharacteristicModel& m) {
  std::vector<TwistedSector> sectors;
  for (const Face& f : enumerate_faces(m.polytope)) {
    for (BoxElement& e : interior_box_elements(m, f)) {
      TwistedSector s;
      s.face = f;
      s.degree_shift = e.age * 2;
      s.element = std::move(e);
      sectors.push_back(std::move(s));
    }
  }

  // Cross-check: the box of each vertex must partition into the interior
  // boxes of the faces through that vertex (the zero element belongs to the
  // whole polytope). Lattice points within one vertex box are distinct, so a
  // sorted comparison is exact.
  for (std::size_t vi = 0; vi < m.polytope.vertices().size(); ++vi) {
    const Face v = vertex_face(m.polytope, static_cast<int>(vi));
    std::vector<IntVec> from_vertex;
    for (const BoxElement& e : box_elements(m, v)) {
      from_vertex.push_back(e.lattice_point);
    }
    std::vector<IntVec> from_sectors;
    for (const TwistedSector& s : sectors) {
      if (std::includes(v.facet_set.begin(), v.facet_set.end(),
                        s.face.facet_set.begin(), s.face.facet_set.end())) {
        from_sectors.push_back(s.element.lattice_point);
      }
    }
    std::sort(from_vertex.begin(), from_vertex.end());
    std::sort(from_sectors.begin(), from_sectors.end());
    if (from_vertex != from_sectors) {
      throw_internal("sector enumeration does not partition the box of vertex {" +
                     face_label(m.polytope, v) + "}");
    }
  }
  return sectors;
}

TwistedSector inverse_sector(const CharacteristicModel& m, const TwistedSector& s) {
  if (s.is_untwisted()) {
    throw Error(ErrorCode::InvalidArgument,
                "the untwisted sector has no inverse twisted sector");
  }
  BoxElement inv;
  inv.face = s.face;
  inv.coeffs.reserve(s.element.coeffs.size());
  for (const Rat& a : s.element.coeffs) {
    if (a <= 0 || a >= 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "sector element is not interior; cannot invert");
    }
    inv.coeffs.push_back(Rat(1) - a);
  }
  const IntMatrix lam = face_matrix(m, s.face);
  inv.lattice_point.assign(static_cast<std::size_t>(m.polytope.dim()), Int(0));
  for (std::size_t row = 0; row < inv.lattice_point.size(); ++row) {
    Int sum = 0;
    for (std::size_t j = 0; j < s.face.facet_set.size(); ++j) {
      sum += lam.at(row, j);
    }
    inv.lattice_point[row] = sum - s.element.lattice_point[row];
  }
  inv.age = Rat(Int(s.face.facet_set.size())) - s.element.age;
  inv.interior = true;

  TwistedSector out;
  out.face = s.face;
  out.element = std::move(inv);
  out.degree_shift = out.element.age * 2;
  return out;
}

QuasiSlReport quasi_sl_report(const CharacteristicModel& m) {
  QuasiSlReport report;
  for (const TwistedSector& s : twisted_sectors(m)) {
    if (!rat_is_integer(s.element.age)) {
      report.offenders.push_back(s);
    }
  }
  report.quasi_sl = report.offenders.empty();
  return report;
}

bool is_quasi_sl(const CharacteristicModel& m) { return quasi_sl_report(m).quasi_sl; }

int vertex_sign(const CharacteristicModel& m, int vertex_index) {
  if (!m.normals) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex signs need facet normals, and this model has none");
  }
  const Face v = vertex_face(m.polytope, vertex_index);
  std::vector<RatVec> normal_cols;
  normal_cols.reserve(v.facet_set.size());
  for (int fi : v.facet_set) {
    normal_cols.push_back((*m.normals)[static_cast<std::size_t>(fi)]);
  }
  const int normal_sign = rational_det_sign(normal_cols);
  const Int char_det = determinant(face_matrix(m, v));
  if (normal_sign == 0 || char_det == 0) {
    throw Error(ErrorCode::InvalidModel,
                "degenerate data at vertex {" + face_label(m.polytope, v) + "}");
  }
  const int char_sign = char_det > 0 ? 1 : -1;
  return normal_sign * char_sign;
}

bool is_positively_omnioriented(const CharacteristicModel& m) {
  for (std::size_t vi = 0; vi < m.polytope.vertices().size(); ++vi) {
    if (vertex_sign(m, static_cast<int>(vi)) != 1) {
      return false;
    }
  }
  return true;
}

bool is_manifold(const CharacteristicModel& m) {
  for (std::size_t vi = 0; vi < m.polytope.vertices().size(); ++vi) {
    const Face v = vertex_face(m.polytope, static_cast<int>(vi));
    Int d = determinant(face_matrix(m, v));
    if (d < 0) {
      d = -d;
    }
    if (d != 1) {
      return false;
    }
  }
  return true;
}

Face vertex_face(const CombinatorialPolytope& p, int vertex_index) {
  if (vertex_index < 0 || static_cast<std::size_t>(vertex_index) >= p.vertices().size()) {
    throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
  }
  return Face{p.vertices()[static_cast<std::size_t>(vertex_index)], 0};
}

} // namespace qtorb

#pragma once

// Combinatorial simple polytopes, presented by their facet lattice: a list of
// facet names plus, for every vertex, the set of facets meeting it. In a
// simple n-polytope every vertex lies on exactly n facets, and every face is
// determined by the set of facets containing it; faces are recovered here as
// the subsets of vertex facet-sets, which is exactly the face lattice when
// the input is a valid simple polytope.

#include "numeric.hpp"

#include <string>
#include <vector>

namespace qtorb {

// A face, identified by the (sorted) set of facet indices containing it.
// The whole polytope is the face with empty facet set; a vertex of an
// n-polytope has a facet set of size n. dim = n - |facet_set|.
struct Face {
  std::vector<int> facet_set;
  int dim = 0;

  bool operator==(const Face& other) const { return facet_set == other.facet_set; }
};

class CombinatorialPolytope {
public:
  // Empty placeholder polytope; fails validation until assigned.
  CombinatorialPolytope() = default;

  CombinatorialPolytope(int dim, std::vector<std::string> facet_names,
                        std::vector<std::vector<int>> vertex_facets);

  int dim() const { return dim_; }
  int facet_count() const { return static_cast<int>(facet_names_.size()); }
  const std::vector<std::string>& facet_names() const { return facet_names_; }
  // Vertex facet-sets, each sorted ascending; the vertex list itself is
  // sorted lexicographically (canonical order).
  const std::vector<std::vector<int>>& vertices() const { return vertex_facets_; }

  int facet_index(const std::string& name) const; // throws InvalidArgument if unknown

  bool operator==(const CombinatorialPolytope& other) const = default;

private:
  int dim_ = 0;
  std::vector<std::string> facet_names_;
  std::vector<std::vector<int>> vertex_facets_;
};

// Structural diagnostics; empty means the data describes a plausible simple
// polytope (simplicity, facet coverage, vertex-set closure under the
// simple-polytope ridge condition, connectivity of the vertex-ridge graph).
std::vector<std::string> validate(const CombinatorialPolytope& p);

// All faces, the whole polytope (empty facet set) included, in canonical
// order: by codimension ascending, then lexicographically by facet set.
std::vector<Face> enumerate_faces(const CombinatorialPolytope& p);

// Is this facet set of the form I(F) for a (nonempty) face F? True exactly
// when some vertex contains all the given facets.
bool is_face(const CombinatorialPolytope& p, const std::vector<int>& facet_set);

// The face for a given facet set. Throws InvalidArgument when it is not a face.
Face make_face(const CombinatorialPolytope& p, std::vector<int> facet_set);

// Indices (into p.vertices()) of the vertices lying on the face.
std::vector<int> face_vertex_indices(const CombinatorialPolytope& p, const Face& f);

// f-vector of the face viewed as a polytope: f[i] = number of i-dimensional
// faces of F, i = 0..dim(F). The face itself contributes f[dim(F)] = 1.
std::vector<Int> f_vector(const CombinatorialPolytope& p, const Face& f);

// h-vector of the face, defined by sum_i f_{i}(t-1)^i = sum_i h_i t^{d-i}
// with d = dim(F); h has length d+1.
std::vector<Int> h_vector(const CombinatorialPolytope& p, const Face& f);

// Human-readable face label: comma-separated facet names, "P" for the whole
// polytope.
std::string face_label(const CombinatorialPolytope& p, const Face& f);

std::vector<std::string> face_names(const CombinatorialPolytope& p, const Face& f);

// A facet name of the form "F0", "F0_2", "F0_3", ... not already in use.
std::string fresh_facet_name(const CombinatorialPolytope& p);

// Combinatorial truncation (cutting) of a proper face of codimension >= 2:
// the face F is removed and replaced by a new facet (appended last, with the
// given name). Vertices on F are each replaced by codim(F) new vertices.
CombinatorialPolytope truncate(const CombinatorialPolytope& p, const Face& f,
                               const std::string& new_facet_name);

} // namespace qtorb

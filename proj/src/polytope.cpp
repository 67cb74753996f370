#include "polytope.hpp"

#include "error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qtorb {

CombinatorialPolytope::CombinatorialPolytope(int dim, std::vector<std::string> facet_names,
                                             std::vector<std::vector<int>> vertex_facets)
    : dim_(dim), facet_names_(std::move(facet_names)), vertex_facets_(std::move(vertex_facets)) {
  for (auto& vf : vertex_facets_) {
    std::sort(vf.begin(), vf.end());
  }
  std::sort(vertex_facets_.begin(), vertex_facets_.end());
}

int CombinatorialPolytope::facet_index(const std::string& name) const {
  for (std::size_t i = 0; i < facet_names_.size(); ++i) {
    if (facet_names_[i] == name) {
      return static_cast<int>(i);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown facet name '" + name + "'");
}

std::vector<std::string> validate(const CombinatorialPolytope& p) {
  std::vector<std::string> diags;
  const int n = p.dim();
  const int m = p.facet_count();

  if (n < 1) {
    diags.push_back("dimension must be at least 1");
  }
  for (int i = 0; i < m; ++i) {
    if (p.facet_names()[i].empty()) {
      diags.push_back("facet " + std::to_string(i) + " has an empty name");
    }
    for (int j = i + 1; j < m; ++j) {
      if (p.facet_names()[i] == p.facet_names()[j]) {
        diags.push_back("duplicate facet name '" + p.facet_names()[i] + "'");
      }
    }
  }
  if (n >= 1 && m < n + 1) {
    diags.push_back("a simple " + std::to_string(n) + "-polytope needs at least " +
                    std::to_string(n + 1) + " facets, got " + std::to_string(m));
  }
  if (p.vertices().empty()) {
    diags.push_back("no vertices");
  }

  bool shape_ok = diags.empty();
  for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
    const auto& vf = p.vertices()[vi];
    std::ostringstream tag;
    tag << "vertex " << vi;
    if (static_cast<int>(vf.size()) != n) {
      diags.push_back(tag.str() + ": lies on " + std::to_string(vf.size()) +
                      " facets, expected exactly " + std::to_string(n) +
                      " (simplicity)");
      shape_ok = false;
      continue;
    }
    for (int fi : vf) {
      if (fi < 0 || fi >= m) {
        diags.push_back(tag.str() + ": facet index " + std::to_string(fi) +
                        " out of range");
        shape_ok = false;
      }
    }
    for (std::size_t k = 0; k + 1 < vf.size(); ++k) {
      if (vf[k] == vf[k + 1]) {
        diags.push_back(tag.str() + ": repeated facet index " + std::to_string(vf[k]));
        shape_ok = false;
      }
    }
  }
  if (!shape_ok) {
    return diags;
  }

  for (std::size_t vi = 0; vi + 1 < p.vertices().size(); ++vi) {
    if (p.vertices()[vi] == p.vertices()[vi + 1]) { // vertex list is sorted
      diags.push_back("duplicate vertex on facets {" +
                      face_label(p, Face{p.vertices()[vi], 0}) + "}");
    }
  }

  std::vector<int> facet_use(m, 0);
  for (const auto& vf : p.vertices()) {
    for (int fi : vf) {
      ++facet_use[fi];
    }
  }
  for (int i = 0; i < m; ++i) {
    if (facet_use[i] == 0) {
      diags.push_back("facet '" + p.facet_names()[i] + "' contains no vertex");
    } else if (facet_use[i] < n) {
      diags.push_back("facet '" + p.facet_names()[i] + "' contains only " +
                      std::to_string(facet_use[i]) + " vertices; a facet of a simple " +
                      std::to_string(n) + "-polytope has at least " + std::to_string(n));
    }
  }
  if (!diags.empty()) {
    return diags;
  }

  // Ridge condition: dropping any one facet from a vertex must give an edge,
  // i.e. exactly one other vertex contains the remaining n-1 facets.
  for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
    const auto& vf = p.vertices()[vi];
    for (int drop : vf) {
      int partners = 0;
      for (std::size_t wi = 0; wi < p.vertices().size(); ++wi) {
        if (wi == vi) {
          continue;
        }
        const auto& wf = p.vertices()[wi];
        bool contains = true;
        for (int fi : vf) {
          if (fi == drop) {
            continue;
          }
          if (!std::binary_search(wf.begin(), wf.end(), fi)) {
            contains = false;
            break;
          }
        }
        if (contains) {
          ++partners;
        }
      }
      if (partners != 1) {
        diags.push_back("vertex " + std::to_string(vi) + " on {" +
                        face_label(p, Face{vf, 0}) + "}: dropping facet '" +
                        p.facet_names()[drop] + "' leaves " + std::to_string(partners) +
                        " adjacent vertices, expected exactly 1 (edge condition)");
      }
    }
  }
  if (!diags.empty()) {
    return diags;
  }

  // Connectivity of the vertex-edge graph.
  const std::size_t nv = p.vertices().size();
  std::vector<char> seen(nv, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    for (std::size_t wi = 0; wi < nv; ++wi) {
      if (seen[wi]) {
        continue;
      }
      std::vector<int> common;
      std::set_intersection(p.vertices()[cur].begin(), p.vertices()[cur].end(),
                            p.vertices()[wi].begin(), p.vertices()[wi].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == n - 1) {
        seen[wi] = 1;
        stack.push_back(wi);
      }
    }
  }
  for (std::size_t vi = 0; vi < nv; ++vi) {
    if (!seen[vi]) {
      diags.push_back("vertex-edge graph is disconnected");
      break;
    }
  }
  return diags;
}

std::vector<Face> enumerate_faces(const CombinatorialPolytope& p) {
  std::set<std::vector<int>> sets;
  for (const auto& vf : p.vertices()) {
    const std::size_t n = vf.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::vector<int> subset;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::size_t(1) << b)) {
          subset.push_back(vf[b]);
        }
      }
      sets.insert(std::move(subset));
    }
  }
  std::vector<Face> faces;
  faces.reserve(sets.size());
  for (const auto& s : sets) {
    faces.push_back(Face{s, p.dim() - static_cast<int>(s.size())});
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.facet_set.size() != b.facet_set.size()) {
      return a.facet_set.size() < b.facet_set.size();
    }
    return a.facet_set < b.facet_set;
  });
  return faces;
}

bool is_face(const CombinatorialPolytope& p, const std::vector<int>& facet_set) {
  std::vector<int> s = facet_set;
  std::sort(s.begin(), s.end());
  for (const auto& vf : p.vertices()) {
    if (std::includes(vf.begin(), vf.end(), s.begin(), s.end())) {
      return true;
    }
  }
  return false;
}

Face make_face(const CombinatorialPolytope& p, std::vector<int> facet_set) {
  std::sort(facet_set.begin(), facet_set.end());
  for (std::size_t i = 0; i + 1 < facet_set.size(); ++i) {
    if (facet_set[i] == facet_set[i + 1]) {
      throw Error(ErrorCode::InvalidArgument, "repeated facet in face description");
    }
  }
  for (int fi : facet_set) {
    if (fi < 0 || fi >= p.facet_count()) {
      throw Error(ErrorCode::InvalidArgument, "facet index out of range in face description");
    }
  }
  if (!is_face(p, facet_set)) {
    throw Error(ErrorCode::InvalidArgument,
                "facet set {" + face_label(p, Face{facet_set, 0}) +
                "} does not describe a face (no vertex lies on all of them)");
  }
  const int dim = p.dim() - static_cast<int>(facet_set.size());
  return Face{std::move(facet_set), dim};
}

std::vector<int> face_vertex_indices(const CombinatorialPolytope& p, const Face& f) {
  std::vector<int> out;
  for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
    const auto& vf = p.vertices()[vi];
    if (std::includes(vf.begin(), vf.end(), f.facet_set.begin(), f.facet_set.end())) {
      out.push_back(static_cast<int>(vi));
    }
  }
  return out;
}

std::vector<Int> f_vector(const CombinatorialPolytope& p, const Face& f) {
  const int d = f.dim;
  if (d < 0) {
    throw Error(ErrorCode::InvalidArgument, "f_vector of a non-face");
  }
  std::vector<Int> fv(static_cast<std::size_t>(d) + 1, Int(0));
  for (const Face& g : enumerate_faces(p)) {
    if (!std::includes(g.facet_set.begin(), g.facet_set.end(),
                       f.facet_set.begin(), f.facet_set.end())) {
      continue;
    }
    if (g.dim >= 0 && g.dim <= d) {
      fv[static_cast<std::size_t>(g.dim)] += 1;
    }
  }
  return fv;
}

std::vector<Int> h_vector(const CombinatorialPolytope& p, const Face& f) {
  const std::vector<Int> fv = f_vector(p, f);
  const int d = f.dim;

  // Binomial table up to d.
  std::vector<std::vector<Int>> binom(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    binom[i].assign(static_cast<std::size_t>(i) + 1, Int(0));
    binom[i][0] = 1;
    binom[i][static_cast<std::size_t>(i)] = 1;
    for (int j = 1; j < i; ++j) {
      binom[i][static_cast<std::size_t>(j)] =
          binom[i - 1][static_cast<std::size_t>(j - 1)] + binom[i - 1][static_cast<std::size_t>(j)];
    }
  }

  // Coefficients of sum_i f_i (t-1)^i as a polynomial in t.
  std::vector<Int> poly(static_cast<std::size_t>(d) + 1, Int(0));
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) {
      Int term = fv[static_cast<std::size_t>(i)] * binom[i][static_cast<std::size_t>(j)];
      if ((i - j) % 2 != 0) {
        term = -term;
      }
      poly[static_cast<std::size_t>(j)] += term;
    }
  }

  std::vector<Int> h(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    h[static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(d - i)];
  }
  return h;
}

std::string face_label(const CombinatorialPolytope& p, const Face& f) {
  if (f.facet_set.empty()) {
    return "P";
  }
  std::string out;
  for (std::size_t i = 0; i < f.facet_set.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += p.facet_names()[static_cast<std::size_t>(f.facet_set[i])];
  }
  return out;
}

std::vector<std::string> face_names(const CombinatorialPolytope& p, const Face& f) {
  std::vector<std::string> out;
  out.reserve(f.facet_set.size());
  for (int fi : f.facet_set) {
    out.push_back(p.facet_names()[static_cast<std::size_t>(fi)]);
  }
  return out;
}

std::string fresh_facet_name(const CombinatorialPolytope& p) {
  auto taken = [&](const std::string& name) {
    return std::find(p.facet_names().begin(), p.facet_names().end(), name) !=
           p.facet_names().end();
  };
  if (!taken("F0")) {
    return "F0";
  }
  for (int k = 2;; ++k) {
    std::string candidate = "F0_" + std::to_string(k);
    if (!taken(candidate)) {
      return candidate;
    }
  }
}

CombinatorialPolytope truncate(const CombinatorialPolytope& p, const Face& f,
                               const std::string& new_facet_name) {
  const int k = static_cast<int>(f.facet_set.size());
  if (k < 2 || k > p.dim()) {
    throw Error(ErrorCode::InvalidArgument,
                "truncation requires a proper face of codimension >= 2 (got codimension " +
                std::to_string(k) + ")");
  }
  if (!is_face(p, f.facet_set)) {
    throw Error(ErrorCode::InvalidArgument, "truncation target is not a face");
  }
  for (const auto& name : p.facet_names()) {
    if (name == new_facet_name) {
      throw Error(ErrorCode::InvalidArgument,
                  "new facet name '" + new_facet_name + "' is already in use");
    }
  }

  const int new_index = p.facet_count();
  std::vector<std::string> names = p.facet_names();
  names.push_back(new_facet_name);

  std::vector<std::vector<int>> verts;
  for (const auto& vf : p.vertices()) {
    const bool on_face = std::includes(vf.begin(), vf.end(),
                                       f.facet_set.begin(), f.facet_set.end());
    if (!on_face) {
      verts.push_back(vf);
      continue;
    }
    // Vertex on the truncated face: one replacement per removed facet.
    for (int drop : f.facet_set) {
      std::vector<int> nv;
      nv.reserve(vf.size());
      for (int fi : vf) {
        if (fi != drop) {
          nv.push_back(fi);
        }
      }
      nv.push_back(new_index);
      verts.push_back(std::move(nv));
    }
  }

  CombinatorialPolytope out(p.dim(), std::move(names), std::move(verts));
  if (auto diags = validate(out); !diags.empty()) {
    throw_internal("truncation produced an invalid polytope: " + diags.front());
  }
  return out;
}

} // namespace qtorb

#pragma once

// In-code fixture models shared by the test suites. These mirror the JSON
// fixtures shipped in fixtures/; the JSON round-trip tests assert that the
// two stay in sync.

#include "model.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace qtorb::testing {

inline IntVec iv(std::initializer_list<long long> xs) {
  IntVec out;
  for (long long x : xs) {
    out.emplace_back(x);
  }
  return out;
}

inline RatVec rv(std::initializer_list<long long> xs) {
  RatVec out;
  for (long long x : xs) {
    out.emplace_back(x);
  }
  return out;
}

// The n-simplex: facets F1..F(n+1), vertices = all n-subsets.
inline CombinatorialPolytope simplex_polytope(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n + 1; ++i) {
    names.push_back("F" + std::to_string(i));
  }
  std::vector<std::vector<int>> verts;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> v;
    for (int i = 0; i <= n; ++i) {
      if (i != omit) {
        v.push_back(i);
      }
    }
    verts.push_back(std::move(v));
  }
  return CombinatorialPolytope(n, std::move(names), std::move(verts));
}

// Weighted projective space P(1,3,3,3,1) model: Delta^4 with
// lambda = (e1, e2, e3, e4, (1,3,3,3)) and the moment-polytope normals.
inline CharacteristicModel simplex4_model() {
  CharacteristicModel m;
  m.polytope = simplex_polytope(4);
  m.charvecs = {iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}),
                iv({0, 0, 0, 1}), iv({1, 3, 3, 3})};
  m.normals = std::vector<RatVec>{rv({1, 0, 0, 0}), rv({0, 1, 0, 0}), rv({0, 0, 1, 0}),
                                  rv({0, 0, 0, 1}), rv({-1, -3, -3, -3})};
  return m;
}

// Same polytope with the fan vector lambda_5 = (-1,-3,-3,-3): valid, but not
// quasi-SL.
inline CharacteristicModel simplex4_fan_model() {
  CharacteristicModel m = simplex4_model();
  m.charvecs[4] = iv({-1, -3, -3, -3});
  return m;
}

// Dim-4 A_1 model: triangle with lambda = ((1,0), (0,1), (1,2)); one Z_2
// vertex at F1^F3.
inline CharacteristicModel w2_model() {
  CharacteristicModel m;
  m.polytope = CombinatorialPolytope(2, {"F1", "F2", "F3"}, {{0, 1}, {1, 2}, {0, 2}});
  m.charvecs = {iv({1, 0}), iv({0, 1}), iv({1, 2})};
  return m;
}

// Dim-6 Z_3 model: Delta^3 with lambda = (e1, e2, (-1,-1,3), (0,0,-1)); one
// Z_3 vertex at F1^F2^F3.
inline CharacteristicModel w3_model() {
  CharacteristicModel m;
  m.polytope = simplex_polytope(3);
  m.charvecs = {iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 3}), iv({0, 0, -1})};
  return m;
}

// Manifold model: the complex projective plane (triangle, unimodular
// everywhere), with normals matching the characteristic vectors.
inline CharacteristicModel cp2_model() {
  CharacteristicModel m;
  m.polytope = CombinatorialPolytope(2, {"F1", "F2", "F3"}, {{0, 1}, {1, 2}, {0, 2}});
  m.charvecs = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
  m.normals = std::vector<RatVec>{rv({1, 0}), rv({0, 1}), rv({-1, -1})};
  return m;
}

// Manifold model: product of two projective lines (square).
inline CharacteristicModel cp1xcp1_model() {
  CharacteristicModel m;
  m.polytope = CombinatorialPolytope(2, {"F1", "F2", "F3", "F4"},
                                     {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  m.charvecs = {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})};
  m.normals = std::vector<RatVec>{rv({1, 0}), rv({0, 1}), rv({-1, 0}), rv({0, -1})};
  return m;
}

// Positively omnioriented orbifold model: P(1,1,2) as a triangle with
// lambda = normals = ((1,0), (0,1), (-1,-2)).
inline CharacteristicModel wp112_model() {
  CharacteristicModel m;
  m.polytope = CombinatorialPolytope(2, {"F1", "F2", "F3"}, {{0, 1}, {1, 2}, {0, 2}});
  m.charvecs = {iv({1, 0}), iv({0, 1}), iv({-1, -2})};
  m.normals = std::vector<RatVec>{rv({1, 0}), rv({0, 1}), rv({-1, -2})};
  return m;
}

} // namespace qtorb::testing
